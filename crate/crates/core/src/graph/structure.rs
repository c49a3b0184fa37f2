use super::{EdgeSubset, Graph};

/// Cutvertices of `Γ_L` by DFS low-link, indexed by node. Nodes outside `N[L]` are `false`.
pub fn cutvertices(g: &Graph, subset: EdgeSubset) -> Vec<bool> {
    let n = g.node_count();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for e in subset.iter() {
        let (a, b) = g.endpoints(e);
        adj[a].push((b, e));
        adj[b].push((a, e));
    }
    let mut state = LowLink {
        adj: &adj,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        cut: vec![false; n],
        clock: 0,
    };
    for root in 0..n {
        if state.disc[root] == usize::MAX && !adj[root].is_empty() {
            let children = state.visit(root, usize::MAX);
            state.cut[root] = children > 1;
        }
    }
    state.cut
}

struct LowLink<'a> {
    adj: &'a [Vec<(usize, usize)>],
    disc: Vec<usize>,
    low: Vec<usize>,
    cut: Vec<bool>,
    clock: usize,
}

impl LowLink<'_> {
    /// Returns the number of DFS-tree children of `v`.
    fn visit(&mut self, v: usize, parent_edge: usize) -> usize {
        self.disc[v] = self.clock;
        self.low[v] = self.clock;
        self.clock += 1;
        let mut children = 0;
        for &(w, e) in &self.adj[v] {
            if e == parent_edge {
                continue;
            }
            if self.disc[w] == usize::MAX {
                children += 1;
                self.visit(w, e);
                self.low[v] = self.low[v].min(self.low[w]);
                if parent_edge != usize::MAX && self.low[w] >= self.disc[v] {
                    self.cut[v] = true;
                }
            } else {
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
        children
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_internal_nodes_are_cut() {
        let c = Graph::chain(5);
        let cut = cutvertices(&c, c.all_edges().unwrap());
        assert_eq!(cut, vec![false, true, true, true, false]);
    }

    #[test]
    fn cycle_has_no_cutvertex() {
        let c = Graph::cycle(5);
        assert!(cutvertices(&c, c.all_edges().unwrap()).iter().all(|&x| !x));
    }

    #[test]
    fn bowtie_center_is_cut() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let cut = cutvertices(&g, g.all_edges().unwrap());
        assert_eq!(cut, vec![false, false, true, false, false]);
    }
}

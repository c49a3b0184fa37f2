//! Subset walkers used by the exact engines.
//!
//! Two traversals live here: an include/exclude recursion over a list of edges that keeps
//! the link-game value current with a rollback union-find, and an ESU-style enumeration of
//! connected edge subsets (connected vertex sets of the line graph), each visited once.

use crate::graph::{EdgeSubset, Graph};
use crate::unionfind::RollbackSets;

/// Include/exclude recursion over edge subsets maintaining `w(T) = Σ_C g(|C|)`.
///
/// `table[s]` is the scaled link value of a component with `s` nodes, with
/// `table[0] = table[1] = 0`.
pub(crate) struct LinkWalker<'a> {
    endpoints: &'a [(usize, usize)],
    table: &'a [i128],
    sets: RollbackSets,
}

impl<'a> LinkWalker<'a> {
    pub fn new(graph: &'a Graph, table: &'a [i128]) -> Self {
        debug_assert!(table.len() > graph.node_count());
        LinkWalker {
            endpoints: graph.edges(),
            table,
            sets: RollbackSets::new(graph.node_count()),
        }
    }

    /// Adds `edge` permanently (until [`Self::pop`]); returns the change in `w`.
    pub fn push(&mut self, edge: usize) -> (i128, bool) {
        let (a, b) = self.endpoints[edge];
        match self.sets.union(a, b) {
            Some((x, y)) => (self.table[x + y] - self.table[x] - self.table[y], true),
            None => (0, false),
        }
    }

    pub fn pop(&mut self, merged: bool) {
        if merged {
            self.sets.undo();
        }
    }

    /// Visits every subset `T` of `free` (added on top of whatever is currently pushed),
    /// calling `visit(mask, size, w)` at each leaf with `mask`/`size` counting only the
    /// edges of `free` that were included plus `base_mask`/`base_size`.
    pub fn walk<F: FnMut(u64, u32, i128)>(
        &mut self,
        free: &[usize],
        base_mask: u64,
        base_size: u32,
        base_w: i128,
        visit: &mut F,
    ) {
        match free.split_first() {
            None => visit(base_mask, base_size, base_w),
            Some((&e, rest)) => {
                self.walk(rest, base_mask, base_size, base_w, visit);
                let (dw, merged) = self.push(e);
                self.walk(rest, base_mask | 1 << e, base_size + 1, base_w + dw, visit);
                self.pop(merged);
            }
        }
    }
}

/// Line-graph adjacency: for each edge, the mask of edges sharing an endpoint with it.
pub(crate) fn line_graph_masks(g: &Graph) -> Vec<u64> {
    g.edges()
        .iter()
        .enumerate()
        .map(|(e, &(a, b))| {
            let mut m = 0u64;
            for &f in g.incident(a).iter().chain(g.incident(b)) {
                m |= 1 << f;
            }
            m & !(1 << e)
        })
        .collect()
}

/// Calls `visit` once for every nonempty `L ⊆ E` with `Γ_L` connected.
///
/// Requires `m <= 64`.
pub fn for_each_connected_subset<F: FnMut(EdgeSubset)>(g: &Graph, mut visit: F) {
    assert!(g.edge_count() <= 64, "connected-subset enumeration needs m <= 64");
    let adj = line_graph_masks(g);
    for root in 0..g.edge_count() {
        let above = if root == 63 { 0 } else { !((2u64 << root) - 1) };
        let ext = adj[root] & above;
        extend(&adj, 1 << root, adj[root] | 1 << root, ext, above, &mut visit);
    }
}

fn extend<F: FnMut(EdgeSubset)>(
    adj: &[u64],
    sub: u64,
    closed_nbhd: u64,
    mut ext: u64,
    above: u64,
    visit: &mut F,
) {
    visit(EdgeSubset::from_mask(sub));
    while ext != 0 {
        let w = ext.trailing_zeros() as usize;
        ext &= ext - 1;
        let exclusive = adj[w] & !closed_nbhd & above;
        extend(
            adj,
            sub | 1 << w,
            closed_nbhd | adj[w],
            ext | exclusive,
            above,
            visit,
        );
    }
}

/// All connected edge subsets, sorted by mask.
pub fn connected_subsets(g: &Graph) -> Vec<EdgeSubset> {
    let mut out = Vec::new();
    for_each_connected_subset(g, |s| out.push(s));
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::two_communities;
    use std::collections::HashSet;

    fn brute_connected(g: &Graph) -> Vec<EdgeSubset> {
        g.all_edges()
            .unwrap()
            .subsets()
            .filter(|&s| g.is_connected_subset(s))
            .collect()
    }

    #[test]
    fn matches_brute_force() {
        for g in [
            Graph::complete(5),
            Graph::cycle(6),
            Graph::star(6),
            crate::graph::triangle_and_chain(),
            Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 3), (1, 4)])
                .unwrap(),
        ] {
            let got = connected_subsets(&g);
            let uniq: HashSet<_> = got.iter().collect();
            assert_eq!(uniq.len(), got.len(), "duplicates for {g:?}");
            assert_eq!(got, brute_connected(&g), "mismatch for {g:?}");
        }
    }

    #[test]
    fn chain_count() {
        // a chain with m edges has m(m+1)/2 connected edge subsets (its sub-chains)
        assert_eq!(connected_subsets(&Graph::chain(8)).len(), 28);
        // a star's edges are pairwise adjacent: every nonempty subset is connected
        assert_eq!(connected_subsets(&Graph::star(6)).len(), 31);
    }

    #[test]
    fn walker_matches_direct_value() {
        let g = two_communities();
        let table: Vec<i128> = (0..=15).map(|s: i128| if s < 2 { 0 } else { s * (s - 1) }).collect();
        let edges: Vec<usize> = (0..10).collect();
        let mut walker = LinkWalker::new(&g, &table);
        let mut count = 0;
        walker.walk(&edges, 0, 0, 0, &mut |mask, size, w| {
            count += 1;
            assert_eq!(size, mask.count_ones());
            let comps = g.components_of_edge_subset(EdgeSubset::from_mask(mask));
            let direct: i128 = comps.sizes().iter().map(|&s| table[s]).sum();
            assert_eq!(w, direct);
        });
        assert_eq!(count, 1 << 10);
    }
}

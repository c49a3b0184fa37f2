//! Minimal `R`-connecting edge sets and the intermediary nodes they induce.

use std::collections::HashSet;

use super::{EdgeSubset, Graph, MAX_SUBSET_EDGES};
use crate::error::{Error, Result};

fn check_terminals(g: &Graph, terminals: &[usize]) -> Result<Vec<usize>> {
    if g.edge_count() > MAX_SUBSET_EDGES {
        return Err(Error::CapExceeded {
            what: "edge bitmask",
            size: g.edge_count(),
            cap: MAX_SUBSET_EDGES,
        });
    }
    let mut r: Vec<usize> = terminals.to_vec();
    r.sort_unstable();
    r.dedup();
    if let Some(&v) = r.iter().find(|&&v| v >= g.node_count()) {
        return Err(Error::NodeOutOfRange {
            node: v,
            node_count: g.node_count(),
        });
    }
    if r.len() < 2 {
        return Err(Error::Precondition(
            "a connecting set needs at least two distinct terminals".into(),
        ));
    }
    Ok(r)
}

/// All inclusion-minimal edge sets `L` such that `Γ_L` connects every node of `terminals`,
/// sorted by mask. For two terminals these are the edge sets of the simple paths between
/// them. Returns an empty list when the terminals are not connected in `g`.
pub fn minimal_connecting_subgraphs(g: &Graph, terminals: &[usize]) -> Result<Vec<EdgeSubset>> {
    let r = check_terminals(g, terminals)?;
    let mut found = if r.len() == 2 {
        simple_paths(g, r[0], r[1])
    } else {
        steiner_trees(g, &r)
    };
    found.sort_unstable();
    found.dedup();
    Ok(found)
}

/// Edge sets of all simple `from - to` paths.
fn simple_paths(g: &Graph, from: usize, to: usize) -> Vec<EdgeSubset> {
    fn walk(
        g: &Graph,
        v: usize,
        to: usize,
        on_path: &mut Vec<bool>,
        mask: u64,
        out: &mut Vec<EdgeSubset>,
    ) {
        if v == to {
            out.push(EdgeSubset::from_mask(mask));
            return;
        }
        for &e in g.incident(v) {
            let (a, b) = g.endpoints(e);
            let w = if a == v { b } else { a };
            if !on_path[w] {
                on_path[w] = true;
                walk(g, w, to, on_path, mask | 1 << e, out);
                on_path[w] = false;
            }
        }
    }
    let mut on_path = vec![false; g.node_count()];
    on_path[from] = true;
    let mut out = Vec::new();
    walk(g, from, to, &mut on_path, 0, &mut out);
    out
}

/// Trees grown from the first terminal, stopping as soon as every terminal is covered.
/// A covering tree is minimal iff all its leaves are terminals.
fn steiner_trees(g: &Graph, r: &[usize]) -> Vec<EdgeSubset> {
    let n = g.node_count();
    let mut is_terminal = vec![false; n];
    for &v in r {
        is_terminal[v] = true;
    }
    let mut seen: HashSet<u64> = HashSet::new();
    let mut out = Vec::new();
    let mut stack: Vec<(u64, Vec<bool>)> = Vec::new();
    let mut start = vec![false; n];
    start[r[0]] = true;
    stack.push((0, start));
    while let Some((mask, nodes)) = stack.pop() {
        if r.iter().all(|&v| nodes[v]) {
            let tree = EdgeSubset::from_mask(mask);
            let leaves_are_terminals = (0..n).all(|v| {
                let deg = g.incident(v).iter().filter(|&&e| tree.contains(e)).count();
                deg != 1 || is_terminal[v]
            });
            if leaves_are_terminals {
                out.push(tree);
            }
            continue;
        }
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if nodes[a] == nodes[b] {
                continue;
            }
            let next = mask | 1 << e;
            if seen.insert(next) {
                let mut grown = nodes.clone();
                grown[a] = true;
                grown[b] = true;
                stack.push((next, grown));
            }
        }
    }
    out
}

/// Nodes outside `terminals` incident to an edge of some minimal connecting set.
pub fn intermediaries(g: &Graph, terminals: &[usize]) -> Result<Vec<usize>> {
    let r = check_terminals(g, terminals)?;
    let union = minimal_connecting_subgraphs(g, &r)?
        .into_iter()
        .fold(EdgeSubset::EMPTY, EdgeSubset::union);
    let cover = g.covered_nodes(union);
    Ok(cover.into_iter().filter(|v| !r.contains(v)).collect())
}

/// Intermediaries lying on every minimal connecting set.
pub fn bypassed(g: &Graph, terminals: &[usize]) -> Result<Vec<usize>> {
    let r = check_terminals(g, terminals)?;
    let members = minimal_connecting_subgraphs(g, &r)?;
    if members.is_empty() {
        return Ok(Vec::new());
    }
    let mut on_all = vec![true; g.node_count()];
    for m in &members {
        let cover = g.covered_nodes(*m);
        for (v, flag) in on_all.iter_mut().enumerate() {
            *flag &= cover.binary_search(&v).is_ok();
        }
    }
    Ok((0..g.node_count())
        .filter(|&v| on_all[v] && !r.contains(&v))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::two_communities;

    fn ids(s: &[EdgeSubset]) -> Vec<Vec<usize>> {
        s.iter().map(|m| m.iter().collect()).collect()
    }

    #[test]
    fn chain_has_unique_path() {
        let c = Graph::chain(3);
        assert_eq!(ids(&minimal_connecting_subgraphs(&c, &[0, 2]).unwrap()), vec![vec![0, 1]]);
        assert_eq!(intermediaries(&c, &[0, 2]).unwrap(), vec![1]);
    }

    #[test]
    fn triangle_has_two_paths() {
        let t = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let found = minimal_connecting_subgraphs(&t, &[0, 2]).unwrap();
        assert_eq!(ids(&found), vec![vec![0, 1], vec![2]]);
        assert_eq!(intermediaries(&t, &[0, 2]).unwrap(), vec![1]);
    }

    #[test]
    fn disconnected_terminals() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(minimal_connecting_subgraphs(&g, &[0, 3]).unwrap().is_empty());
        assert!(intermediaries(&g, &[0, 3]).unwrap().is_empty());
    }

    #[test]
    fn needs_two_terminals() {
        let c = Graph::chain(3);
        assert!(minimal_connecting_subgraphs(&c, &[1, 1]).is_err());
    }

    #[test]
    fn community_graph_intermediaries() {
        // 1-based nodes 2 and 15
        let g = two_communities();
        let bet: Vec<usize> = intermediaries(&g, &[1, 14]).unwrap().iter().map(|v| v + 1).collect();
        assert_eq!(bet, vec![3, 10, 11, 12, 13, 14]);
        let by: Vec<usize> = bypassed(&g, &[1, 14]).unwrap().iter().map(|v| v + 1).collect();
        assert_eq!(by, vec![3]);
        // every path leaves 2 through 3 and then enters the 10..14 ring
        for p in minimal_connecting_subgraphs(&g, &[1, 14]).unwrap() {
            let cover = g.covered_nodes(p);
            assert!(cover.contains(&2));
            assert!(cover.contains(&9) || cover.contains(&13));
        }
        let with_edge = g.add_edge(1, 14).unwrap();
        let bet2: Vec<usize> =
            intermediaries(&with_edge, &[1, 14]).unwrap().iter().map(|v| v + 1).collect();
        assert_eq!(bet2, vec![3, 10, 11, 12, 13, 14]);
    }

    #[test]
    fn steiner_on_star() {
        let s = Graph::star(5);
        let found = minimal_connecting_subgraphs(&s, &[1, 2, 3]).unwrap();
        assert_eq!(ids(&found), vec![vec![0, 1, 2]]);
        assert_eq!(intermediaries(&s, &[1, 2, 3]).unwrap(), vec![0]);
    }
}

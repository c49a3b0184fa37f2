//! Small-graph families for exhaustive checks.
//!
//! Connected graphs are grown edge by edge from `K2`: every connected graph with `m + 1`
//! edges arises from one with `m` edges by adding an edge between existing nodes or a
//! pendant edge to a new node. Each level is deduplicated by a canonical form; when the
//! search for it would be too large the form falls back to a refined but non-canonical
//! ordering, which can only leave harmless duplicates.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

/// Largest number of orderings tried when canonicalising one graph.
const PERMUTATION_BUDGET: usize = 50_000;

type Key = (usize, Vec<(usize, usize)>);

/// Stable colour refinement starting from degrees; returns a colour per node.
fn refine(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(Vec::len).collect();
    loop {
        let signature: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = adj[v].iter().map(|&u| colour[u]).collect();
                s.sort_unstable();
                (colour[v], s)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = signature.iter().collect();
        let index: Vec<&(usize, Vec<usize>)> = distinct.into_iter().collect();
        let next: Vec<usize> = signature
            .iter()
            .map(|s| index.binary_search(&s).expect("signature present"))
            .collect();
        let before = colour.iter().collect::<BTreeSet<_>>().len();
        let after = next.iter().collect::<BTreeSet<_>>().len();
        colour = next;
        if after == before {
            return colour;
        }
    }
}

fn relabelled(g: &Graph, order: &[usize]) -> Key {
    // order[k] is the old node placed at position k
    let mut pos = vec![0; order.len()];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b])))
        .collect();
    edges.sort_unstable();
    (g.node_count(), edges)
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Canonical key: the lexicographically least edge list over orderings consistent with
/// the refined colour classes.
fn canonical_key(g: &Graph) -> Key {
    let n = g.node_count();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let colour = refine(&adj);
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        classes[colour[v]].push(v);
    }
    classes.retain(|c| !c.is_empty());
    let mut budget = 1usize;
    for c in &classes {
        for k in 2..=c.len() {
            budget = budget.saturating_mul(k);
        }
    }
    if budget > PERMUTATION_BUDGET {
        return relabelled(g, &classes.concat());
    }
    let mut best: Option<Key> = None;
    let mut current = classes.clone();
    loop {
        let key = relabelled(g, &current.concat());
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
        // odometer over per-class permutations
        let mut k = 0;
        while k < current.len() {
            if next_permutation(&mut current[k]) {
                break;
            }
            current[k].sort_unstable();
            k += 1;
        }
        if k == current.len() {
            break;
        }
    }
    best.expect("at least one ordering")
}

fn dedupe(graphs: Vec<Graph>) -> Vec<Graph> {
    let mut seen = BTreeSet::new();
    graphs
        .into_iter()
        .filter(|g| seen.insert(canonical_key(g)))
        .collect()
}

/// Connected graphs with `2 ≤ n ≤ max_nodes` and `1 ≤ m ≤ max_edges`, one per
/// isomorphism class (up to rare duplicates), ordered by edge count.
pub fn connected_graphs(max_nodes: usize, max_edges: usize) -> Vec<Graph> {
    if max_nodes < 2 || max_edges == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::chain(2)];
    let mut all = level.clone();
    for _ in 1..max_edges {
        let mut next = Vec::new();
        for g in &level {
            let n = g.node_count();
            for i in 0..n {
                for j in i + 1..n {
                    if !g.has_edge(i, j) {
                        next.push(g.add_edge(i, j).expect("non-edge"));
                    }
                }
            }
            if n < max_nodes {
                let mut edges = g.edges().to_vec();
                for v in 0..n {
                    edges.push((v, n));
                    next.push(Graph::new(n + 1, edges.iter().copied()).expect("pendant edge"));
                    edges.pop();
                }
            }
        }
        level = dedupe(next);
        if level.is_empty() {
            break;
        }
        all.extend(level.iter().cloned());
    }
    all
}

/// Trees with `1 ≤ l ≤ max_edges` edges.
pub fn trees(max_edges: usize) -> Vec<Graph> {
    connected_graphs(max_edges + 1, max_edges)
        .into_iter()
        .filter(|g| g.edge_count() + 1 == g.node_count())
        .collect()
}

fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let off = a.node_count();
    let edges = a
        .edges()
        .iter()
        .copied()
        .chain(b.edges().iter().map(|&(x, y)| (x + off, y + off)));
    Graph::new(a.node_count() + b.node_count(), edges).expect("disjoint union")
}

/// Graphs with exactly two components, each with at least one edge, and at most
/// `max_nodes` nodes in total.
pub fn two_component_graphs(max_nodes: usize) -> Vec<Graph> {
    let parts = connected_graphs(max_nodes.saturating_sub(2), usize::MAX >> 1);
    let mut out = Vec::new();
    for (x, a) in parts.iter().enumerate() {
        for b in &parts[x..] {
            if a.node_count() + b.node_count() <= max_nodes {
                out.push(disjoint_union(a, b));
            }
        }
    }
    out
}

/// A uniformly labelled random connected graph: a random spanning tree plus extra edges.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, m: usize) -> Graph {
    assert!(n >= 1 && m + 1 >= n && m <= n * (n - 1) / 2, "no connected graph with n={n}, m={m}");
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for k in 1..n {
        let parent = order[rng.gen_range(0..k)];
        let child = order[k];
        edges.insert((parent.min(child), parent.max(child)));
    }
    let mut rest: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|e| !edges.contains(e))
        .collect();
    rest.shuffle(rng);
    edges.extend(rest.into_iter().take(m + 1 - n));
    Graph::new(n, edges).expect("valid random edges")
}

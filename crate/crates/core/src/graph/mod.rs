//! Undirected simple graphs and the structural queries the centrality formulas consume.
//!
//! Edges carry stable ids `0..m`. Edge subsets are `u64` bitmasks over those ids, so every
//! subset-valued query is restricted to graphs with at most 64 edges; the exact engines
//! apply much tighter caps on top of that.

mod io;
mod paths;
mod structure;

pub use io::{parse_edge_list, parse_graph, parse_graph_json, GraphJson};
pub use paths::{bypassed, intermediaries, minimal_connecting_subgraphs};
pub use structure::cutvertices;

use std::fmt;

use crate::error::{Error, Result};
use crate::unionfind::DisjointSets;

/// Largest edge count an [`EdgeSubset`] can address.
pub const MAX_SUBSET_EDGES: usize = 64;

/// Immutable undirected graph without loops or parallel edges.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    node_count: usize,
    edges: Vec<(usize, usize)>,
    incident: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.node_count, self.edges)
    }
}

impl Graph {
    /// Builds a graph; endpoints of each edge are stored as `(min, max)`.
    pub fn new(node_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph {
            node_count,
            edges: Vec::new(),
            incident: vec![Vec::new(); node_count],
        };
        for (i, j) in edges {
            g.push_edge(i, j)?;
        }
        Ok(g)
    }

    /// Graph with no edges.
    pub fn empty(node_count: usize) -> Self {
        Graph {
            node_count,
            edges: Vec::new(),
            incident: vec![Vec::new(); node_count],
        }
    }

    /// Star on `n` nodes with hub 0.
    pub fn star(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (0, i))).expect("star edges are valid")
    }

    /// Chain `0 - 1 - ... - (n-1)`; edge `k` joins nodes `k` and `k+1`.
    pub fn chain(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("chain edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
            .expect("complete-graph edges are valid")
    }

    /// Two stars with `k1` and `k2` leaves. Hub of the first is node 0, its leaves are
    /// `1..=k1`; hub of the second is node `k1 + 1`, followed by its leaves.
    pub fn two_stars(k1: usize, k2: usize) -> Self {
        let h2 = k1 + 1;
        let edges = (1..=k1).map(|i| (0, i)).chain((1..=k2).map(|i| (h2, h2 + i)));
        Graph::new(k1 + k2 + 2, edges).expect("star edges are valid")
    }

    fn push_edge(&mut self, i: usize, j: usize) -> Result<()> {
        for node in [i, j] {
            if node >= self.node_count {
                return Err(Error::NodeOutOfRange {
                    node,
                    node_count: self.node_count,
                });
            }
        }
        if i == j {
            return Err(Error::SelfLoop(i));
        }
        let key = (i.min(j), i.max(j));
        if self.edge_id(i, j).is_some() {
            return Err(Error::DuplicateEdge(key.0, key.1));
        }
        let id = self.edges.len();
        self.edges.push(key);
        self.incident[key.0].push(id);
        self.incident[key.1].push(id);
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    /// Ids of the edges incident to `node`.
    pub fn incident(&self, node: usize) -> &[usize] {
        &self.incident[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.incident[node].len()
    }

    pub fn neighbors(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        self.incident[node].iter().map(move |&e| {
            let (a, b) = self.edges[e];
            if a == node {
                b
            } else {
                a
            }
        })
    }

    pub fn edge_id(&self, i: usize, j: usize) -> Option<usize> {
        if i >= self.node_count || j >= self.node_count {
            return None;
        }
        let key = (i.min(j), i.max(j));
        self.incident[key.0]
            .iter()
            .copied()
            .find(|&e| self.edges[e] == key)
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edge_id(i, j).is_some()
    }

    pub fn is_isolated(&self, node: usize) -> bool {
        self.incident[node].is_empty()
    }

    /// Returns a new graph with `{i, j}` appended as edge id `m`.
    pub fn add_edge(&self, i: usize, j: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.push_edge(i, j)?;
        Ok(g)
    }

    /// Returns a new graph without `{i, j}`. Surviving edges keep their relative order,
    /// so ids above the removed one shift down by one.
    pub fn remove_edge(&self, i: usize, j: usize) -> Result<Graph> {
        let id = self
            .edge_id(i, j)
            .ok_or(Error::MissingEdge(i.min(j), i.max(j)))?;
        Ok(self.without_edge(id))
    }

    pub fn without_edge(&self, id: usize) -> Graph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != id)
            .map(|(_, &e)| e);
        Graph::new(self.node_count, edges).expect("subset of a valid edge list")
    }

    /// The full edge set as a subset.
    pub fn all_edges(&self) -> Result<EdgeSubset> {
        EdgeSubset::full(self.edge_count())
    }

    /// Per-node neighbour bitmasks. Requires `n <= 64`.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        if self.node_count > 64 {
            return Err(Error::CapExceeded {
                what: "node bitmask",
                size: self.node_count,
                cap: 64,
            });
        }
        let mut masks = vec![0u64; self.node_count];
        for &(a, b) in &self.edges {
            masks[a] |= 1 << b;
            masks[b] |= 1 << a;
        }
        Ok(masks)
    }

    /// Node-induced subgraph on `nodes` (in the given order), relabelled `0..nodes.len()`.
    pub fn induced(&self, nodes: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.node_count];
        for (k, &v) in nodes.iter().enumerate() {
            index[v] = k;
        }
        let edges = self.edges.iter().filter_map(|&(a, b)| {
            (index[a] != usize::MAX && index[b] != usize::MAX).then(|| (index[a], index[b]))
        });
        Graph::new(nodes.len(), edges).expect("induced edges are valid")
    }

    /// Nodes covered by `subset`, i.e. `N[L]`, in increasing order.
    pub fn covered_nodes(&self, subset: EdgeSubset) -> Vec<usize> {
        let mut seen = vec![false; self.node_count];
        for e in subset.iter() {
            let (a, b) = self.edges[e];
            seen[a] = true;
            seen[b] = true;
        }
        (0..self.node_count).filter(|&v| seen[v]).collect()
    }

    fn check_subset(&self, subset: EdgeSubset) {
        debug_assert!(
            self.edge_count() >= 64 || subset.mask() >> self.edge_count() == 0,
            "edge subset refers to edges outside the graph"
        );
    }

    /// Connected components of `Γ_L = (N[L], L)`. Nodes outside `N[L]` are not covered.
    pub fn components_of_edge_subset(&self, subset: EdgeSubset) -> ComponentPartition {
        self.check_subset(subset);
        let mut ds = DisjointSets::new(self.node_count);
        let mut touched = vec![false; self.node_count];
        for e in subset.iter() {
            let (a, b) = self.edges[e];
            touched[a] = true;
            touched[b] = true;
            ds.union(a, b);
        }
        ComponentPartition::from_roots(
            (0..self.node_count)
                .filter(|&v| touched[v])
                .map(|v| (v, ds.find(v))),
            self.node_count,
        )
    }

    /// Connected components of the node-induced subgraph `Γ_S = (S, E[S])`.
    pub fn components_of_node_subset(&self, nodes: &[usize]) -> ComponentPartition {
        let mut inside = vec![false; self.node_count];
        for &v in nodes {
            inside[v] = true;
        }
        let mut ds = DisjointSets::new(self.node_count);
        for &(a, b) in &self.edges {
            if inside[a] && inside[b] {
                ds.union(a, b);
            }
        }
        ComponentPartition::from_roots(
            (0..self.node_count)
                .filter(|&v| inside[v])
                .map(|v| (v, ds.find(v))),
            self.node_count,
        )
    }

    /// Connected components of the whole graph, isolated nodes included.
    pub fn components(&self) -> ComponentPartition {
        let all: Vec<usize> = (0..self.node_count).collect();
        self.components_of_node_subset(&all)
    }

    pub fn is_connected(&self) -> bool {
        self.node_count <= 1 || self.components().len() == 1
    }

    /// Edges of `L` whose endpoints are both cutvertices of `Γ_L`. For a tree these are
    /// exactly the internal edges.
    pub fn cutedges(&self, subset: EdgeSubset) -> EdgeSubset {
        self.check_subset(subset);
        let cut = structure::cutvertices(self, subset);
        EdgeSubset::from_mask(
            subset
                .iter()
                .filter(|&e| {
                    let (a, b) = self.edges[e];
                    cut[a] && cut[b]
                })
                .fold(0u64, |m, e| m | (1 << e)),
        )
    }

    /// True iff `Γ_L` has no cycle, i.e. `|L| = |N[L]| - #components`.
    pub fn is_cycle_free(&self, subset: EdgeSubset) -> bool {
        self.check_subset(subset);
        let mut ds = DisjointSets::new(self.node_count);
        subset.iter().all(|e| {
            let (a, b) = self.edges[e];
            ds.union(a, b).is_some()
        })
    }

    /// True iff both endpoints of `edge` already lie in one component of `Γ_L`.
    pub fn creates_cycle(&self, subset: EdgeSubset, edge: usize) -> Result<bool> {
        if edge >= self.edge_count() {
            return Err(Error::EdgeOutOfRange(edge));
        }
        if subset.contains(edge) {
            return Err(Error::Precondition(format!(
                "edge {edge} already belongs to the subset"
            )));
        }
        let mut ds = DisjointSets::new(self.node_count);
        for e in subset.iter() {
            let (a, b) = self.edges[e];
            ds.union(a, b);
        }
        let (a, b) = self.edges[edge];
        Ok(ds.find(a) == ds.find(b))
    }

    /// True iff `Γ_L` is connected (and `L` is not empty).
    pub fn is_connected_subset(&self, subset: EdgeSubset) -> bool {
        !subset.is_empty() && self.components_of_edge_subset(subset).len() == 1
    }

    /// True iff the graph is a star: some hub adjacent to all other nodes and no other
    /// edges. Graphs with fewer than two nodes are not stars.
    pub fn is_star(&self) -> bool {
        let n = self.node_count;
        n >= 2
            && self.edge_count() == n - 1
            && (0..n).any(|v| self.degree(v) == n - 1)
    }
}

/// An edge subset `L ⊆ E` as a bitmask with its cardinality cached.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EdgeSubset {
    mask: u64,
    len: u32,
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl EdgeSubset {
    pub const EMPTY: EdgeSubset = EdgeSubset { mask: 0, len: 0 };

    pub fn from_mask(mask: u64) -> Self {
        EdgeSubset {
            mask,
            len: mask.count_ones(),
        }
    }

    /// All edges `0..m`.
    pub fn full(m: usize) -> Result<Self> {
        match m {
            0 => Ok(Self::EMPTY),
            1..=63 => Ok(Self::from_mask((1u64 << m) - 1)),
            64 => Ok(Self::from_mask(u64::MAX)),
            _ => Err(Error::CapExceeded {
                what: "edge bitmask",
                size: m,
                cap: MAX_SUBSET_EDGES,
            }),
        }
    }

    pub fn from_ids(ids: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = 0u64;
        for e in ids {
            if e >= MAX_SUBSET_EDGES {
                return Err(Error::EdgeOutOfRange(e));
            }
            mask |= 1 << e;
        }
        Ok(Self::from_mask(mask))
    }

    pub fn mask(self) -> u64 {
        self.mask
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.mask == 0
    }

    pub fn contains(self, edge: usize) -> bool {
        edge < 64 && self.mask >> edge & 1 == 1
    }

    pub fn with(self, edge: usize) -> Self {
        Self::from_mask(self.mask | 1 << edge)
    }

    pub fn without(self, edge: usize) -> Self {
        Self::from_mask(self.mask & !(1 << edge))
    }

    pub fn union(self, other: Self) -> Self {
        Self::from_mask(self.mask | other.mask)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.mask & !other.mask == 0
    }

    /// Edge ids in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.mask;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(e)
        })
    }

    /// All subsets of `self`, in increasing mask order (the empty set first).
    pub fn subsets(self) -> impl Iterator<Item = EdgeSubset> {
        let full = self.mask;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(EdgeSubset::from_mask(cur))
        })
    }
}

/// Connected components of some node-covering structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    /// Each block lists its nodes in increasing order; blocks are ordered by smallest node.
    pub blocks: Vec<Vec<usize>>,
    /// Block index of each node, `None` for nodes not covered by the queried structure.
    pub block_of: Vec<Option<usize>>,
}

impl ComponentPartition {
    fn from_roots(pairs: impl Iterator<Item = (usize, usize)>, node_count: usize) -> Self {
        let mut block_of = vec![None; node_count];
        let mut root_block = vec![usize::MAX; node_count];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (v, root) in pairs {
            if root_block[root] == usize::MAX {
                root_block[root] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[root_block[root]].push(v);
            block_of[v] = Some(root_block[root]);
        }
        ComponentPartition { blocks, block_of }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn covered(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Block sizes in block order.
    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

/// The 15-node, two-community graph used as the running example (24 edges). Node
/// `k` of the original 1-based labelling is node `k - 1` here.
pub fn two_communities() -> Graph {
    const ONE_BASED: [(usize, usize); 24] = [
        (1, 5),
        (1, 9),
        (1, 2),
        (2, 3),
        (4, 5),
        (4, 6),
        (4, 7),
        (4, 8),
        (4, 9),
        (5, 6),
        (6, 7),
        (7, 8),
        (8, 9),
        (15, 10),
        (15, 11),
        (15, 12),
        (15, 13),
        (15, 14),
        (10, 11),
        (11, 12),
        (12, 13),
        (13, 14),
        (3, 10),
        (3, 14),
    ];
    Graph::new(15, ONE_BASED.iter().map(|&(a, b)| (a - 1, b - 1))).expect("valid fixture")
}

/// Triangle `{0,1,2}` plus the chain `3 - 4 - 5` (six nodes, five edges).
pub fn triangle_and_chain() -> Graph {
    Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5)]).expect("valid fixture")
}

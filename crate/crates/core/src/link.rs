//! Graph-restricted games, the link game, and link-game Harsanyi dividends.
//!
//! The dividend of an edge set `L` is dispatched three ways: zero when `Γ_L` is
//! disconnected, the closed form `F(l+1, l-d_L)` when `Γ_L` is a tree, and the alternating
//! sum over all subsets of `L` otherwise.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::enumerate::{for_each_connected_subset, LinkWalker};
use crate::error::{Error, Result};
use crate::exact::{binomial, Rational, ScaledTable};
use crate::game::{CoalitionGame, SymmetricGame};
use crate::graph::{EdgeSubset, Graph};

/// The link game `w(L) = Σ_{C ∈ K(L)} v(C)` over the edges of a graph.
#[derive(Debug, Clone)]
pub struct LinkGame {
    graph: Graph,
    game: SymmetricGame,
    link: Vec<Rational>,
    scaled: ScaledTable,
}

impl LinkGame {
    pub fn new(graph: &Graph, game: &SymmetricGame) -> Result<Self> {
        let link = game.link_table(graph.node_count())?;
        let scaled = ScaledTable::new(&link)?;
        // every w(T) is a sum of at most n/2 component values
        scaled.check_headroom(0, graph.node_count() as i128)?;
        Ok(LinkGame {
            graph: graph.clone(),
            game: game.clone(),
            link,
            scaled,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn game(&self) -> &SymmetricGame {
        &self.game
    }

    /// `[0, 0, f(2), ..., f(n)]`.
    pub fn link_table(&self) -> &[Rational] {
        &self.link
    }

    pub(crate) fn scaled(&self) -> &ScaledTable {
        &self.scaled
    }

    /// `w(L)`.
    pub fn value_of(&self, subset: EdgeSubset) -> Rational {
        self.graph
            .components_of_edge_subset(subset)
            .blocks
            .iter()
            .map(|b| &self.link[b.len()])
            .sum()
    }

    /// `F(s, r)` over the link size function (`f(1)` replaced by zero).
    pub fn f_function(&self) -> FFunction {
        FFunction {
            table: self.link.clone(),
        }
    }

    /// The dividend `λ_L(w)` and the dispatcher branch that produced it.
    pub fn dividend_with_branch(&self, subset: EdgeSubset) -> Result<(Rational, DividendBranch)> {
        if subset.is_empty() {
            return Err(Error::EmptyCoalition);
        }
        if !self.graph.is_connected_subset(subset) {
            return Ok((Rational::zero(), DividendBranch::Disconnected));
        }
        if self.graph.is_cycle_free(subset) {
            let l = subset.len();
            let d = self.graph.cutedges(subset).len();
            let v = self.f_function().eval(l + 1, l - d)?;
            return Ok((v, DividendBranch::Tree { cutedges: d }));
        }
        Ok((self.dividend_brute_force(subset)?, DividendBranch::BruteForce))
    }

    /// `λ_L(w)` via the dispatcher.
    pub fn dividend(&self, subset: EdgeSubset) -> Result<Rational> {
        self.dividend_with_branch(subset).map(|(v, _)| v)
    }

    /// `λ_L(w) = Σ_{T ⊆ L} (-1)^{l-t} w(T)`, evaluated without any shortcut.
    pub fn dividend_brute_force(&self, subset: EdgeSubset) -> Result<Rational> {
        if subset.is_empty() {
            return Err(Error::EmptyCoalition);
        }
        let edges: Vec<usize> = subset.iter().collect();
        self.alternating_sum(&edges, &[], subset.len() as u32)
    }

    /// `Σ_{D(L) ⊆ T ⊆ L} (-1)^{l-t} w(T)` for a connected cycle-free `L`.
    pub fn dividend_cutedge_sum(&self, subset: EdgeSubset) -> Result<Rational> {
        if !self.graph.is_connected_subset(subset) || !self.graph.is_cycle_free(subset) {
            return Err(Error::Precondition(
                "cutedge-restricted sum needs a connected cycle-free edge set".into(),
            ));
        }
        let cut = self.graph.cutedges(subset);
        let forced: Vec<usize> = cut.iter().collect();
        let free: Vec<usize> = subset.iter().filter(|&e| !cut.contains(e)).collect();
        self.alternating_sum(&free, &forced, subset.len() as u32)
    }

    /// Signed sum over `T = forced ∪ X`, `X ⊆ free`, with sign `(-1)^{total - |T|}`.
    fn alternating_sum(&self, free: &[usize], forced: &[usize], total: u32) -> Result<Rational> {
        self.scaled
            .check_headroom(free.len() as u32, self.graph.node_count() as i128)?;
        let table = &self.scaled.numerators;
        let mut walker = LinkWalker::new(&self.graph, table);
        let mut base_w = 0i128;
        let mut merges = Vec::with_capacity(forced.len());
        for &e in forced {
            let (dw, merged) = walker.push(e);
            base_w += dw;
            merges.push(merged);
        }
        let mut sum = 0i128;
        walker.walk(free, 0, forced.len() as u32, base_w, &mut |_, t, w| {
            if (total - t) % 2 == 0 {
                sum += w;
            } else {
                sum -= w;
            }
        });
        for merged in merges.into_iter().rev() {
            walker.pop(merged);
        }
        Ok(self.scaled.to_rational(&BigInt::from(sum)))
    }

    /// Nonzero-candidate dividends: one row per connected edge subset, sorted by mask.
    pub fn dividend_spectrum(&self) -> Result<Vec<SpectrumRow>> {
        if self.graph.edge_count() > 64 {
            return Err(Error::CapExceeded {
                what: "edges",
                size: self.graph.edge_count(),
                cap: 64,
            });
        }
        let mut oracle = DividendOracle::new(self);
        let mut rows = Vec::new();
        let mut failure = None;
        for_each_connected_subset(&self.graph, |s| {
            if failure.is_some() {
                return;
            }
            match oracle.connected(s) {
                Ok((lambda, cutedges)) => rows.push(SpectrumRow {
                    mask: s.mask(),
                    edges: s.len(),
                    cutedges,
                    dividend: lambda,
                }),
                Err(e) => failure = Some(e),
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        rows.sort_by_key(|r| r.mask);
        Ok(rows)
    }
}

impl CoalitionGame for LinkGame {
    fn player_count(&self) -> usize {
        self.graph.edge_count()
    }
    fn value(&self, coalition: u64) -> Rational {
        self.value_of(EdgeSubset::from_mask(coalition))
    }
}

/// Which dispatcher branch computed a dividend.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DividendBranch {
    Disconnected,
    Tree { cutedges: usize },
    BruteForce,
}

/// One line of a dividend spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumRow {
    pub mask: u64,
    pub edges: usize,
    /// `d_L`, present only when `Γ_L` is a tree.
    pub cutedges: Option<usize>,
    pub dividend: Rational,
}

/// Dividend evaluation for connected edge sets with the tree closed form memoized on
/// `(l, d_L)`.
pub(crate) struct DividendOracle<'a> {
    link: &'a LinkGame,
    tree_memo: HashMap<(usize, usize), Rational>,
}

impl<'a> DividendOracle<'a> {
    pub fn new(link: &'a LinkGame) -> Self {
        DividendOracle {
            link,
            tree_memo: HashMap::new(),
        }
    }

    /// Dividend of a connected `L`, plus `d_L` when `L` is a tree.
    pub fn connected(&mut self, subset: EdgeSubset) -> Result<(Rational, Option<usize>)> {
        let g = &self.link.graph;
        let l = subset.len();
        // connected: acyclic iff |N[L]| = l + 1
        if g.covered_nodes(subset).len() == l + 1 {
            let d = g.cutedges(subset).len();
            if let Some(v) = self.tree_memo.get(&(l, d)) {
                return Ok((v.clone(), Some(d)));
            }
            let v = self.link.f_function().eval(l + 1, l - d)?;
            self.tree_memo.insert((l, d), v.clone());
            Ok((v, Some(d)))
        } else {
            Ok((self.link.dividend_brute_force(subset)?, None))
        }
    }
}

/// `F(s, r) = Σ_{k=0}^{r} (-1)^k C(r, k) f(s-k)` for a tabulated size function.
#[derive(Debug, Clone)]
pub struct FFunction {
    table: Vec<Rational>,
}

impl FFunction {
    /// `F` over the base game's own `f` (so `F(s, 0) = f(s)`), tabulated up to `max`.
    pub fn new(game: &SymmetricGame, max: usize) -> Result<Self> {
        Ok(FFunction {
            table: game.table(max)?,
        })
    }

    pub fn from_table(table: Vec<Rational>) -> Self {
        FFunction { table }
    }

    /// Signed entry point; rejects negative arguments and `r > s`.
    pub fn at(&self, s: i64, r: i64) -> Result<Rational> {
        if s < 0 || r < 0 || r > s {
            return Err(Error::FDomain { s, r });
        }
        self.eval(s as usize, r as usize)
    }

    pub fn eval(&self, s: usize, r: usize) -> Result<Rational> {
        if r > s {
            return Err(Error::FDomain {
                s: s as i64,
                r: r as i64,
            });
        }
        if s >= self.table.len() {
            return Err(Error::GameDomain {
                name: "F".into(),
                size: s,
            });
        }
        let mut acc = Rational::zero();
        for k in 0..=r {
            let term = &self.table[s - k] * Rational::from_integer(binomial(r, k));
            if k % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        Ok(acc)
    }
}

/// The graph-restricted game `v_E(S) = Σ_{T ∈ K(S)} v(T)` over the nodes of a graph.
#[derive(Debug, Clone)]
pub struct RestrictedGame {
    graph: Graph,
    table: Vec<Rational>,
    adjacency: Vec<u64>,
}

impl RestrictedGame {
    pub fn new(graph: &Graph, game: &SymmetricGame) -> Result<Self> {
        Ok(RestrictedGame {
            graph: graph.clone(),
            table: game.table(graph.node_count())?,
            adjacency: graph.adjacency_masks()?,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn table(&self) -> &[Rational] {
        &self.table
    }

    /// Sizes of the components of `Γ_S` for a node mask.
    pub fn component_sizes(&self, nodes: u64) -> Vec<usize> {
        component_sizes(&self.adjacency, nodes)
    }

    pub fn value_of(&self, nodes: &[usize]) -> Rational {
        let mask = nodes.iter().fold(0u64, |m, &v| m | 1 << v);
        self.value(mask)
    }
}

/// Component sizes of the subgraph induced by `nodes`, by bitmask flood fill.
pub(crate) fn component_sizes(adjacency: &[u64], nodes: u64) -> Vec<usize> {
    let mut rest = nodes;
    let mut sizes = Vec::new();
    while rest != 0 {
        let start = rest & rest.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adjacency[v] & nodes & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        sizes.push(comp.count_ones() as usize);
        rest &= !comp;
    }
    sizes
}

impl CoalitionGame for RestrictedGame {
    fn player_count(&self) -> usize {
        self.graph.node_count()
    }
    fn value(&self, coalition: u64) -> Rational {
        self.component_sizes(coalition)
            .into_iter()
            .map(|s| &self.table[s])
            .sum()
    }
}

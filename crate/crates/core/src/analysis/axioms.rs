//! Exact checks of the axioms characterising centrality measures.
//!
//! A measure is any function from a graph to one rational per node. Each check derives the
//! graphs it needs (edge deletions, edge additions, components, stars) from the input
//! graph and compares exact values with zero tolerance.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::centrality::{myerson_centrality, position_centrality_exact, Caps};
use crate::error::{Error, Result};
use crate::exact::{frac, int, render, Rational};
use crate::game::SymmetricGame;
use crate::graph::Graph;

/// A centrality measure under test.
pub type MeasureFn<'a> = dyn Fn(&Graph) -> Result<Vec<Rational>> + Sync + 'a;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    ComponentEfficiency,
    Fairness,
    BalancedLinkContributions,
    Locality,
    GainLoss,
    Normalisation,
}

impl Axiom {
    pub const ALL: [Axiom; 6] = [
        Axiom::ComponentEfficiency,
        Axiom::Fairness,
        Axiom::BalancedLinkContributions,
        Axiom::Locality,
        Axiom::GainLoss,
        Axiom::Normalisation,
    ];

    /// The four axioms that single out position-attachment centrality.
    pub const CHARACTERISATION: [Axiom; 4] = [
        Axiom::Locality,
        Axiom::Normalisation,
        Axiom::GainLoss,
        Axiom::BalancedLinkContributions,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Axiom::ComponentEfficiency => "component_efficiency",
            Axiom::Fairness => "fairness",
            Axiom::BalancedLinkContributions => "balanced_link_contributions",
            Axiom::Locality => "locality",
            Axiom::GainLoss => "gain_loss",
            Axiom::Normalisation => "normalisation",
        }
    }

    pub fn from_label(s: &str) -> Result<Self> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.label() == s)
            .ok_or_else(|| Error::Config(format!("unknown axiom `{s}`")))
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One violated instance of an identity or bound.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub graph: Graph,
    pub detail: String,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub holds: bool,
    pub witnesses: Vec<Witness>,
}

impl AxiomReport {
    fn from_witnesses(axiom: Axiom, witnesses: Vec<Witness>) -> Self {
        AxiomReport {
            axiom,
            holds: witnesses.is_empty(),
            witnesses,
        }
    }
}

#[derive(Default)]
struct Checker {
    witnesses: Vec<Witness>,
}

impl Checker {
    fn equal(&mut self, graph: &Graph, detail: impl FnOnce() -> String, lhs: Rational, rhs: Rational) {
        if lhs != rhs {
            self.witness(graph, detail(), lhs, rhs);
        }
    }

    fn witness(&mut self, graph: &Graph, detail: String, lhs: Rational, rhs: Rational) {
        self.witnesses.push(Witness {
            graph: graph.clone(),
            detail,
            lhs,
            rhs,
        });
    }
}

/// `g` and every `g - l`.
fn with_deletions(g: &Graph) -> Vec<Graph> {
    std::iter::once(g.clone())
        .chain((0..g.edge_count()).map(|l| g.without_edge(l)))
        .collect()
}

/// Exhaustively checks `axiom` for `measure` on `g` and the graphs derived from it.
///
/// `game` supplies `f` for component efficiency and is otherwise unused.
pub fn check_axiom(
    axiom: Axiom,
    g: &Graph,
    game: &SymmetricGame,
    measure: &MeasureFn<'_>,
) -> Result<AxiomReport> {
    let mut c = Checker::default();
    match axiom {
        Axiom::ComponentEfficiency => {
            for h in with_deletions(g) {
                let sigma = measure(&h)?;
                for block in h.components().blocks {
                    let lhs: Rational = block.iter().map(|&v| &sigma[v]).sum();
                    let rhs = game.f(block.len())?;
                    c.equal(&h, || format!("component {block:?}"), lhs, rhs);
                }
            }
        }
        Axiom::Fairness => {
            let base = measure(g)?;
            for (l, &(i, j)) in g.edges().iter().enumerate() {
                let cut = measure(&g.without_edge(l))?;
                c.equal(
                    g,
                    || format!("edge {{{i},{j}}}"),
                    &base[i] - &cut[i],
                    &base[j] - &cut[j],
                );
            }
        }
        Axiom::BalancedLinkContributions => {
            let base = measure(g)?;
            let cuts: Vec<Vec<Rational>> = (0..g.edge_count())
                .map(|l| measure(&g.without_edge(l)))
                .collect::<Result<_>>()?;
            let drop = |v: usize, l: usize| &base[v] - &cuts[l][v];
            let n = g.node_count();
            for i in 0..n {
                for j in i + 1..n {
                    let lhs: Rational = g.incident(j).iter().map(|&l| drop(i, l)).sum();
                    let rhs: Rational = g.incident(i).iter().map(|&l| drop(j, l)).sum();
                    c.equal(g, || format!("nodes {i} and {j}"), lhs, rhs);
                }
            }
        }
        Axiom::Locality => {
            for h in with_deletions(g) {
                let sigma = measure(&h)?;
                for block in h.components().blocks {
                    let local = measure(&h.induced(&block))?;
                    for (k, &v) in block.iter().enumerate() {
                        c.equal(&h, || format!("node {v}"), sigma[v].clone(), local[k].clone());
                    }
                }
            }
        }
        Axiom::GainLoss => {
            if !g.is_connected() {
                return Err(Error::Precondition("gain-loss is stated for connected graphs".into()));
            }
            let total: Rational = measure(g)?.into_iter().sum();
            let n = g.node_count();
            for i in 0..n {
                for j in i + 1..n {
                    if !g.has_edge(i, j) {
                        let more: Rational = measure(&g.add_edge(i, j)?)?.into_iter().sum();
                        c.equal(g, || format!("adding {{{i},{j}}}"), more, total.clone());
                    }
                }
            }
        }
        Axiom::Normalisation => {
            let n = g.node_count();
            let top = int(n as i64 - 1);
            for h in with_deletions(g) {
                let sigma = measure(&h)?;
                for (v, s) in sigma.iter().enumerate() {
                    if s.is_negative() {
                        c.witness(&h, format!("node {v} below 0"), s.clone(), Rational::zero());
                    }
                    if *s > top {
                        c.witness(&h, format!("node {v} above n-1"), s.clone(), top.clone());
                    }
                    if h.is_isolated(v) && !s.is_zero() {
                        c.witness(&h, format!("isolated node {v}"), s.clone(), Rational::zero());
                    }
                }
            }
            if n >= 2 {
                let star = Graph::star(n);
                let hub = measure(&star)?.swap_remove(0);
                c.equal(&star, || "star hub".into(), hub, top);
            }
        }
    }
    Ok(AxiomReport::from_witnesses(axiom, c.witnesses))
}

/// Axiom reports for position-attachment centrality and for a deliberately broken variant.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeReport {
    pub pa: Vec<AxiomReport>,
    pub perturbed: Vec<AxiomReport>,
}

impl ProbeReport {
    pub fn pa_holds(&self) -> bool {
        self.pa.iter().all(|r| r.holds)
    }

    pub fn perturbed_witnesses(&self) -> usize {
        self.perturbed.iter().map(|r| r.witnesses.len()).sum()
    }
}

/// Position-attachment centrality as a [`MeasureFn`].
pub fn pa_measure(caps: Caps) -> impl Fn(&Graph) -> Result<Vec<Rational>> + Sync {
    move |h| Ok(position_centrality_exact(h, &SymmetricGame::attachment(), &caps)?.exact_values().to_vec())
}

/// Myerson centrality under `game` as a [`MeasureFn`].
pub fn myerson_measure(game: SymmetricGame, caps: Caps) -> impl Fn(&Graph) -> Result<Vec<Rational>> + Sync {
    move |h| Ok(myerson_centrality(h, &game, &caps)?.exact_values().to_vec())
}

/// Position centrality under `game` as a [`MeasureFn`].
pub fn position_measure(game: SymmetricGame, caps: Caps) -> impl Fn(&Graph) -> Result<Vec<Rational>> + Sync {
    move |h| Ok(position_centrality_exact(h, &game, &caps)?.exact_values().to_vec())
}

/// PA shifted by `1/10` on every node of any graph that is not a star.
pub fn perturbed_pa_measure(caps: Caps) -> impl Fn(&Graph) -> Result<Vec<Rational>> + Sync {
    let pa = pa_measure(caps);
    move |h| {
        let mut v = pa(h)?;
        if !h.is_star() {
            v.iter_mut().for_each(|x| *x += frac(1, 10));
        }
        Ok(v)
    }
}

/// Runs the four characterisation axioms for PA and for the perturbed measure on `g`.
pub fn characterisation_probe(g: &Graph, caps: &Caps) -> Result<ProbeReport> {
    let game = SymmetricGame::attachment();
    let pa = pa_measure(*caps);
    let bad = perturbed_pa_measure(*caps);
    let run = |m: &MeasureFn<'_>| -> Result<Vec<AxiomReport>> {
        Axiom::CHARACTERISATION
            .iter()
            .filter(|&&a| a != Axiom::GainLoss || g.is_connected())
            .map(|&a| check_axiom(a, g, &game, m))
            .collect()
    };
    Ok(ProbeReport {
        pa: run(&pa)?,
        perturbed: run(&bad)?,
    })
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} on {:?}: {} vs {}",
            self.detail,
            self.graph.edges(),
            render(&self.lhs),
            render(&self.rhs)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_passes_all_four() {
        let report = characterisation_probe(&Graph::star(5), &Caps::default()).unwrap();
        assert!(report.pa_holds(), "{:?}", report.pa);
        assert!(report.perturbed_witnesses() > 0);
    }

    #[test]
    fn tree_pa_is_degree() {
        let t = Graph::new(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let pa = pa_measure(Caps::default())(&t).unwrap();
        let deg: Vec<_> = (0..6).map(|v| int(t.degree(v) as i64)).collect();
        assert_eq!(pa, deg);
        assert!(characterisation_probe(&t, &Caps::default()).unwrap().pa_holds());
    }

    #[test]
    fn myerson_fairness_and_efficiency() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let game = SymmetricGame::messages();
        let m = myerson_measure(game.clone(), Caps::default());
        for axiom in [Axiom::Fairness, Axiom::ComponentEfficiency] {
            assert!(check_axiom(axiom, &g, &game, &m).unwrap().holds, "{axiom}");
        }
    }

    #[test]
    fn detects_a_broken_identity() {
        let g = Graph::chain(4);
        let degree_plus_one = |h: &Graph| -> Result<Vec<Rational>> {
            Ok((0..h.node_count()).map(|v| int(h.degree(v) as i64 + 1)).collect())
        };
        let r = check_axiom(Axiom::Normalisation, &g, &SymmetricGame::attachment(), &degree_plus_one).unwrap();
        assert!(!r.holds);
    }
}

//! Before/after centralities when one edge is added.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::centrality::{
    edge_power, edge_power_mc, myerson_centrality, position_centrality_exact,
    position_centrality_mc, Caps, CentralityVector, EdgePowerVector, McConfig, Values,
};
use crate::error::{Error, Result};
use crate::exact::{to_f64, Rational};
use crate::game::SymmetricGame;
use crate::graph::{bypassed, intermediaries, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Measure {
    Myerson,
    Position,
    /// Myerson centrality under the attachment game, whatever game was requested.
    Attachment,
    /// Position centrality under the attachment game.
    Pa,
}

impl Measure {
    pub fn label(self) -> &'static str {
        match self {
            Measure::Myerson => "myerson",
            Measure::Position => "position",
            Measure::Attachment => "attachment",
            Measure::Pa => "pa",
        }
    }

    fn is_position(self) -> bool {
        matches!(self, Measure::Position | Measure::Pa)
    }

    fn game(self, requested: &SymmetricGame) -> SymmetricGame {
        match self {
            Measure::Myerson | Measure::Position => requested.clone(),
            Measure::Attachment | Measure::Pa => SymmetricGame::attachment(),
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "myerson" => Ok(Measure::Myerson),
            "position" => Ok(Measure::Position),
            "attachment" => Ok(Measure::Attachment),
            "pa" | "position-attachment" => Ok(Measure::Pa),
            other => Err(Error::Config(format!("unknown measure `{other}`"))),
        }
    }
}

/// How position-type measures are computed. Myerson-type measures are always exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Exact,
    Mc(McConfig),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeClass {
    EndNode,
    /// An intermediary lying on every minimal path between the end nodes.
    Bypassed,
    Intermediary,
    Unaffected,
}

impl NodeClass {
    pub fn label(self) -> &'static str {
        match self {
            NodeClass::EndNode => "end_node",
            NodeClass::Bypassed => "bypassed",
            NodeClass::Intermediary => "intermediary",
            NodeClass::Unaffected => "unaffected",
        }
    }

    pub fn is_intermediary(self) -> bool {
        matches!(self, NodeClass::Bypassed | NodeClass::Intermediary)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeasureDelta {
    pub measure: Measure,
    pub before: CentralityVector,
    pub after: CentralityVector,
    /// `after - before`; sampled deltas carry the combined standard error.
    pub delta: Values,
    /// Whether unaffected nodes had their sampled delta set to exactly zero.
    pub zeroed_unaffected: bool,
}

impl MeasureDelta {
    /// `delta / before` per node, `None` where `before` is zero.
    pub fn relative(&self) -> Vec<Option<f64>> {
        let before = self.before.as_f64();
        self.delta
            .as_f64()
            .iter()
            .zip(before)
            .map(|(d, b)| (b != 0.0).then(|| d / b))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeltaReport {
    pub added_edge: (usize, usize),
    pub game: String,
    pub measures: Vec<MeasureDelta>,
    /// Edge powers for the first position-type measure; the new edge has id `m`.
    pub per_edge: Option<(EdgePowerVector, EdgePowerVector)>,
    pub classification: Vec<NodeClass>,
    /// Violations of the attachment three-way proposition, checked on exact PA deltas.
    pub proposition_violations: Option<Vec<String>>,
}

impl DeltaReport {
    pub fn measure(&self, m: Measure) -> Option<&MeasureDelta> {
        self.measures.iter().find(|d| d.measure == m)
    }
}

/// Classifies each node relative to the candidate edge `{i0, j0}` in `g`.
pub fn classify(g: &Graph, i0: usize, j0: usize) -> Result<Vec<NodeClass>> {
    let between = intermediaries(g, &[i0, j0])?;
    let on_every = bypassed(g, &[i0, j0])?;
    Ok((0..g.node_count())
        .map(|v| {
            if v == i0 || v == j0 {
                NodeClass::EndNode
            } else if on_every.contains(&v) {
                NodeClass::Bypassed
            } else if between.contains(&v) {
                NodeClass::Intermediary
            } else {
                NodeClass::Unaffected
            }
        })
        .collect())
}

fn compute(
    g: &Graph,
    measure: Measure,
    game: &SymmetricGame,
    engine: Engine,
    caps: &Caps,
) -> Result<CentralityVector> {
    let game = measure.game(game);
    match (measure.is_position(), engine) {
        (false, _) => myerson_centrality(g, &game, caps),
        (true, Engine::Exact) => position_centrality_exact(g, &game, caps),
        (true, Engine::Mc(cfg)) => position_centrality_mc(g, &game, &cfg),
    }
}

fn edge_powers(
    g: &Graph,
    game: &SymmetricGame,
    engine: Engine,
    caps: &Caps,
) -> Result<EdgePowerVector> {
    match engine {
        Engine::Exact => edge_power(g, game, caps),
        Engine::Mc(cfg) => edge_power_mc(g, game, &cfg),
    }
}

fn difference(before: &Values, after: &Values) -> Values {
    match (before, after) {
        (Values::Exact(b), Values::Exact(a)) => Values::Exact(a.iter().zip(b).map(|(a, b)| a - b).collect()),
        _ => {
            let (b, a) = (before.as_f64(), after.as_f64());
            let err = |v: &Values| v.stderr().map(<[f64]>::to_vec).unwrap_or_else(|| vec![0.0; v.len()]);
            let (eb, ea) = (err(before), err(after));
            Values::Sampled {
                mean: a.iter().zip(&b).map(|(a, b)| a - b).collect(),
                stderr: ea.iter().zip(&eb).map(|(x, y)| x.hypot(*y)).collect(),
            }
        }
    }
}

/// Centralities of `g` and `g + {i0, j0}` for each requested measure, the per-edge powers
/// and the node classification.
///
/// For the attachment game, PA deltas of unaffected nodes are provably zero; sampled PA
/// deltas for those nodes are set to exactly zero and exact ones are checked.
pub fn edge_addition_delta(
    g: &Graph,
    (i0, j0): (usize, usize),
    game: &SymmetricGame,
    measures: &[Measure],
    engine: Engine,
    caps: &Caps,
) -> Result<DeltaReport> {
    let after_graph = g.add_edge(i0, j0)?;
    let classification = classify(g, i0, j0)?;
    let mut out = Vec::new();
    let mut violations = None;
    for &measure in measures {
        let before = compute(g, measure, game, engine, caps)?;
        let after = compute(&after_graph, measure, game, engine, caps)?;
        let mut delta = difference(&before.values, &after.values);
        let attachment_pa = measure.is_position() && measure.game(game).is_attachment();
        let mut zeroed = false;
        if attachment_pa {
            match &mut delta {
                Values::Exact(d) => {
                    violations = Some(proposition_violations(&classification, d));
                }
                Values::Sampled { mean, stderr } => {
                    for (v, class) in classification.iter().enumerate() {
                        if *class == NodeClass::Unaffected {
                            mean[v] = 0.0;
                            stderr[v] = 0.0;
                        }
                    }
                    zeroed = true;
                }
            }
        }
        out.push(MeasureDelta {
            measure,
            before,
            after,
            delta,
            zeroed_unaffected: zeroed,
        });
    }
    let per_edge = match measures.iter().find(|m| m.is_position()) {
        Some(m) => {
            let game = m.game(game);
            Some((
                edge_powers(g, &game, engine, caps)?,
                edge_powers(&after_graph, &game, engine, caps)?,
            ))
        }
        None => None,
    };
    Ok(DeltaReport {
        added_edge: (i0, j0),
        game: game.name().to_string(),
        measures: out,
        per_edge,
        classification,
        proposition_violations: violations,
    })
}

fn proposition_violations(classes: &[NodeClass], delta: &[Rational]) -> Vec<String> {
    let mut bad = Vec::new();
    for (v, (class, d)) in classes.iter().zip(delta).enumerate() {
        let ok = match class {
            NodeClass::EndNode => !d.is_negative(),
            NodeClass::Bypassed | NodeClass::Intermediary => !d.is_positive(),
            NodeClass::Unaffected => d.is_zero(),
        };
        if !ok {
            bad.push(format!("node {v} ({}) has delta {}", class.label(), to_f64(d)));
        }
    }
    bad
}

/// Non-edges `{i, j}` of connected graphs where adding the edge lowers the position
/// centrality of `i` or `j`: `(graph, (i, j), node, delta)`.
pub fn end_node_losses(
    graphs: &[Graph],
    game: &SymmetricGame,
    caps: &Caps,
) -> Result<Vec<(Graph, (usize, usize), usize, Rational)>> {
    let mut found = Vec::new();
    for g in graphs {
        let before = position_centrality_exact(g, game, caps)?;
        let n = g.node_count();
        for i in 0..n {
            for j in i + 1..n {
                if g.has_edge(i, j) {
                    continue;
                }
                let after = position_centrality_exact(&g.add_edge(i, j)?, game, caps)?;
                for v in [i, j] {
                    let d = &after.exact_values()[v] - &before.exact_values()[v];
                    if d.is_negative() {
                        found.push((g.clone(), (i, j), v, d));
                    }
                }
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};
    use crate::graph::{triangle_and_chain, two_communities};

    #[test]
    fn bridge_into_the_chain_end() {
        let g = triangle_and_chain();
        let r = edge_addition_delta(
            &g,
            (0, 3),
            &SymmetricGame::messages(),
            &[Measure::Position],
            Engine::Exact,
            &Caps::default(),
        )
        .unwrap();
        let d = r.measure(Measure::Position).unwrap();
        assert_eq!(
            d.before.exact_values(),
            &[int(2), int(2), int(2), frac(3, 2), int(3), frac(3, 2)]
        );
        let delta = d.delta.exact().unwrap();
        assert_eq!(delta[3], frac(13, 2));
        assert_eq!(delta[0], frac(28, 5));
        let rel = d.relative();
        assert!((rel[3].unwrap() - 13.0 / 3.0).abs() < 1e-12);
        assert!((rel[0].unwrap() - 2.8).abs() < 1e-12);
    }

    #[test]
    fn classification_on_two_communities() {
        let g = two_communities();
        let c = classify(&g, 1, 14).unwrap();
        assert_eq!(c[1], NodeClass::EndNode);
        assert_eq!(c[14], NodeClass::EndNode);
        assert_eq!(c[2], NodeClass::Bypassed);
        for v in [9, 10, 11, 12, 13] {
            assert_eq!(c[v], NodeClass::Intermediary, "node {v}");
        }
        for v in [0, 3, 4, 5, 6, 7, 8] {
            assert_eq!(c[v], NodeClass::Unaffected, "node {v}");
        }
    }

    #[test]
    fn duplicate_edge_rejected() {
        let err = edge_addition_delta(
            &triangle_and_chain(),
            (0, 1),
            &SymmetricGame::messages(),
            &[Measure::Myerson],
            Engine::Exact,
            &Caps::default(),
        );
        assert!(matches!(err, Err(Error::DuplicateEdge(0, 1))));
    }

    #[test]
    fn attachment_proposition_on_small_graph() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4)]).unwrap();
        let r = edge_addition_delta(
            &g,
            (0, 5),
            &SymmetricGame::attachment(),
            &[Measure::Pa],
            Engine::Exact,
            &Caps::default(),
        )
        .unwrap();
        assert_eq!(r.proposition_violations, Some(vec![]));
    }
}

use std::collections::HashMap;

use num_traits::Zero;
use rayon::prelude::*;

use super::myerson::merge_sums;
use super::{
    hypothesis_warnings, nodes_from_edges, shapley_from_size_sums, CentralityVector, Caps,
    EdgePowerVector, Method, Values,
};
use crate::enumerate::{for_each_connected_subset, LinkWalker};
use crate::error::{Error, Result};
use crate::exact::{int, Rational};
use crate::game::SymmetricGame;
use crate::graph::Graph;
use crate::link::{DividendOracle, LinkGame};

/// Edges enumerated sequentially inside each parallel task.
const SPLIT: usize = 6;

fn check_edge_cap(g: &Graph, caps: &Caps) -> Result<()> {
    let cap = caps.position_edges.min(40);
    if g.edge_count() > cap {
        return Err(Error::CapExceeded {
            what: "position edges",
            size: g.edge_count(),
            cap,
        });
    }
    Ok(())
}

fn exact_method(game: &SymmetricGame, marginal: bool) -> Method {
    match (game.is_attachment(), marginal) {
        (true, _) => Method::PositionAttachmentExact,
        (false, true) => Method::PositionExactMarginal,
        (false, false) => Method::PositionExactDividends,
    }
}

/// Shapley value of each edge in the link game, by summing `w` over all `2^m` edge subsets.
pub fn edge_power(g: &Graph, game: &SymmetricGame, caps: &Caps) -> Result<EdgePowerVector> {
    check_edge_cap(g, caps)?;
    let link = LinkGame::new(g, game)?;
    let m = g.edge_count();
    let values = if m == 0 {
        Vec::new()
    } else {
        let scale = link.scaled();
        scale.check_headroom(m as u32, g.node_count() as i128)?;
        let table = &scale.numerators;
        let split = m.min(SPLIT);
        let prefix: Vec<usize> = (0..split).collect();
        let rest: Vec<usize> = (split..m).collect();
        let zero = || (vec![vec![0i128; m + 1]; m], vec![0i128; m + 1]);
        let (contains, total) = (0..1u64 << split)
            .into_par_iter()
            .fold(zero, |(mut contains, mut total), head| {
                let mut walker = LinkWalker::new(g, table);
                let mut merges = Vec::with_capacity(split);
                let mut base_w = 0;
                for &e in prefix.iter().filter(|&&e| head >> e & 1 == 1) {
                    let (dw, merged) = walker.push(e);
                    base_w += dw;
                    merges.push(merged);
                }
                walker.walk(&rest, head, head.count_ones(), base_w, &mut |mask, size, w| {
                    let size = size as usize;
                    total[size] += w;
                    let mut bits = mask;
                    while bits != 0 {
                        let e = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        contains[e][size] += w;
                    }
                });
                for merged in merges.into_iter().rev() {
                    walker.pop(merged);
                }
                (contains, total)
            })
            .reduce(zero, merge_sums);
        shapley_from_size_sums(m, &contains, &total, scale)
    };
    Ok(EdgePowerVector {
        method: exact_method(game, true),
        game: game.name().to_string(),
        values: Values::Exact(values),
        sampling: None,
    })
}

/// Position centrality `π_i = ½ Σ_{e ∈ E_i} φ_e(w)` by the marginal-contribution engine.
pub fn position_centrality_exact(
    g: &Graph,
    game: &SymmetricGame,
    caps: &Caps,
) -> Result<CentralityVector> {
    let phi = edge_power(g, game, caps)?;
    let mut out = CentralityVector::exact(
        phi.method,
        game.name(),
        nodes_from_edges(g, phi.exact_values()),
    );
    out.warnings = hypothesis_warnings(game, g.node_count())?;
    Ok(out)
}

/// Edge powers from dividends: `φ_e = Σ_{L ∋ e} λ_L / l` over connected `L`.
///
/// Tree dividends come from the closed form; cyclic connected sets fall back to the
/// alternating sum, so this engine is fast on sparse graphs and slow on dense ones.
pub fn edge_power_dividends(
    g: &Graph,
    game: &SymmetricGame,
    caps: &Caps,
) -> Result<(EdgePowerVector, Vec<String>)> {
    if g.edge_count() > 64 {
        return Err(Error::CapExceeded {
            what: "dividend edges",
            size: g.edge_count(),
            cap: 64,
        });
    }
    let link = LinkGame::new(g, game)?;
    let m = g.edge_count();
    let mut oracle = DividendOracle::new(&link);
    // tree dividends depend only on (l, d); count them per edge and weight once at the end
    let mut tree_counts: Vec<HashMap<(usize, usize), u64>> = vec![HashMap::new(); m];
    let mut tree_values: HashMap<(usize, usize), Rational> = HashMap::new();
    let mut cyclic = vec![Rational::zero(); m];
    let mut visited = 0u64;
    let mut failure = None;
    for_each_connected_subset(g, |s| {
        if failure.is_some() {
            return;
        }
        visited += 1;
        match oracle.connected(s) {
            Ok((lambda, Some(d))) => {
                let key = (s.len(), d);
                tree_values.entry(key).or_insert(lambda);
                for e in s.iter() {
                    *tree_counts[e].entry(key).or_insert(0) += 1;
                }
            }
            Ok((lambda, None)) => {
                let share = lambda / int(s.len() as i64);
                for e in s.iter() {
                    cyclic[e] += &share;
                }
            }
            Err(err) => failure = Some(err),
        }
    });
    if let Some(err) = failure {
        return Err(err);
    }
    let values = cyclic
        .into_iter()
        .zip(&tree_counts)
        .map(|(mut acc, counts)| {
            for (&(l, d), &c) in counts {
                acc += &tree_values[&(l, d)] * int(c as i64) / int(l as i64);
            }
            acc
        })
        .collect();
    let mut warnings = Vec::new();
    if visited > caps.dividend_warn_subsets {
        warnings.push(format!(
            "dividend engine visited {visited} connected edge subsets"
        ));
    }
    Ok((
        EdgePowerVector {
            method: exact_method(game, false),
            game: game.name().to_string(),
            values: Values::Exact(values),
            sampling: None,
        },
        warnings,
    ))
}

/// Position centrality by the dividend engine.
pub fn position_centrality_dividends(
    g: &Graph,
    game: &SymmetricGame,
    caps: &Caps,
) -> Result<CentralityVector> {
    let (phi, mut warnings) = edge_power_dividends(g, game, caps)?;
    let mut out = CentralityVector::exact(
        phi.method,
        game.name(),
        nodes_from_edges(g, phi.exact_values()),
    );
    warnings.extend(hypothesis_warnings(game, g.node_count())?);
    out.warnings = warnings;
    Ok(out)
}

/// Both exact engines; errors if they disagree.
pub fn position_exact_both(
    g: &Graph,
    game: &SymmetricGame,
    caps: &Caps,
) -> Result<(CentralityVector, CentralityVector)> {
    let marginal = position_centrality_exact(g, game, caps)?;
    let dividends = position_centrality_dividends(g, game, caps)?;
    if marginal.exact_values() != dividends.exact_values() {
        return Err(Error::Precondition(
            "marginal and dividend engines disagree".into(),
        ));
    }
    Ok((marginal, dividends))
}

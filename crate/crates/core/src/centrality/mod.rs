//! Centrality measures: Myerson, position (exact and sampled), attachment and
//! position-attachment, plus closed forms for stars and chains.

mod closed_form;
mod myerson;
mod position;
mod sampling;

pub use closed_form::{
    chain_edge_powers, chain_position_closed_form, star_edge_power, star_position,
};
pub use myerson::myerson_centrality;
pub use position::{
    edge_power, edge_power_dividends, position_centrality_dividends, position_centrality_exact,
    position_exact_both,
};
pub use sampling::{edge_power_mc, position_centrality_mc, McConfig, SAMPLER_RNG};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exact::{factorial, to_f64, Rational, ScaledTable};
use crate::game::SymmetricGame;
use crate::graph::Graph;

/// Size limits for the exponential exact engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Myerson value over node subsets.
    pub myerson_nodes: usize,
    /// Position value by marginal contributions over edge subsets.
    pub position_edges: usize,
    /// Connected edge subsets beyond which the dividend engine warns.
    pub dividend_warn_subsets: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            myerson_nodes: 16,
            position_edges: 26,
            dividend_warn_subsets: 100_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    MyersonExact,
    PositionExactDividends,
    PositionExactMarginal,
    PositionMc,
    AttachmentExact,
    PositionAttachmentExact,
    PositionAttachmentMc,
    ClosedForm,
}

impl Method {
    pub fn is_exact(self) -> bool {
        !matches!(self, Method::PositionMc | Method::PositionAttachmentMc)
    }

    pub fn label(self) -> &'static str {
        match self {
            Method::MyersonExact => "myerson_exact",
            Method::PositionExactDividends => "position_exact_dividends",
            Method::PositionExactMarginal => "position_exact_marginal",
            Method::PositionMc => "position_mc",
            Method::AttachmentExact => "attachment_exact",
            Method::PositionAttachmentExact => "position_attachment_exact",
            Method::PositionAttachmentMc => "position_attachment_mc",
            Method::ClosedForm => "closed_form",
        }
    }
}

/// Provenance of a sampled estimate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplingInfo {
    pub rng: String,
    pub seed: u64,
    pub samples: u64,
    pub workers: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Values {
    Exact(Vec<Rational>),
    Sampled { mean: Vec<f64>, stderr: Vec<f64> },
}

impl Values {
    pub fn len(&self) -> usize {
        match self {
            Values::Exact(v) => v.len(),
            Values::Sampled { mean, .. } => mean.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn as_f64(&self) -> Vec<f64> {
        match self {
            Values::Exact(v) => v.iter().map(to_f64).collect(),
            Values::Sampled { mean, .. } => mean.clone(),
        }
    }

    pub fn exact(&self) -> Option<&[Rational]> {
        match self {
            Values::Exact(v) => Some(v),
            Values::Sampled { .. } => None,
        }
    }

    pub fn stderr(&self) -> Option<&[f64]> {
        match self {
            Values::Exact(_) => None,
            Values::Sampled { stderr, .. } => Some(stderr),
        }
    }
}

/// Per-node centrality with provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityVector {
    pub method: Method,
    pub game: String,
    pub values: Values,
    pub sampling: Option<SamplingInfo>,
    /// Hypotheses the input fails (e.g. a game outside the zero-normalized superadditive class).
    pub warnings: Vec<String>,
}

impl CentralityVector {
    pub fn exact(method: Method, game: &str, values: Vec<Rational>) -> Self {
        CentralityVector {
            method,
            game: game.to_string(),
            values: Values::Exact(values),
            sampling: None,
            warnings: Vec::new(),
        }
    }

    /// Exact values; panics for sampled vectors.
    pub fn exact_values(&self) -> &[Rational] {
        self.values.exact().expect("sampled centrality has no exact values")
    }

    pub fn as_f64(&self) -> Vec<f64> {
        self.values.as_f64()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Per-edge Shapley values of the link game.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgePowerVector {
    pub method: Method,
    pub game: String,
    pub values: Values,
    pub sampling: Option<SamplingInfo>,
}

impl EdgePowerVector {
    pub fn exact_values(&self) -> &[Rational] {
        self.values.exact().expect("sampled edge power has no exact values")
    }
}

/// `π_i = ½ Σ_{e ∈ E_i} φ_e`.
pub fn nodes_from_edges(g: &Graph, phi: &[Rational]) -> Vec<Rational> {
    let half = Rational::new(1.into(), 2.into());
    (0..g.node_count())
        .map(|v| g.incident(v).iter().map(|&e| &phi[e]).sum::<Rational>() * &half)
        .collect()
}

/// Warnings for a game outside the class the position-value results assume.
pub(crate) fn hypothesis_warnings(game: &SymmetricGame, n: usize) -> Result<Vec<String>> {
    let flags = game.flags(n.max(2))?;
    let mut w = Vec::new();
    if !flags.zero_normalized {
        w.push(format!("game `{}` is not zero-normalized", game.name()));
    }
    if !flags.superadditive {
        w.push(format!("game `{}` is not superadditive", game.name()));
    }
    Ok(w)
}

/// Shapley values from size-aggregated sums.
///
/// `contains[i][s]` is `Σ v(S)` over coalitions of size `s` containing player `i`, and
/// `total[s]` the same over all coalitions of size `s`, both as numerators over
/// `scale.denominator`. Uses
/// `φ_i = Σ_s contains[i][s]·(s-1)!(n-s)!/n! - (total[s] - contains[i][s])·s!(n-s-1)!/n!`.
pub(crate) fn shapley_from_size_sums(
    n: usize,
    contains: &[Vec<i128>],
    total: &[i128],
    scale: &ScaledTable,
) -> Vec<Rational> {
    let nf = factorial(n);
    let fact: Vec<BigInt> = (0..=n).map(factorial).collect();
    contains
        .iter()
        .map(|row| {
            let mut acc = BigInt::zero();
            for s in 0..=n {
                let inside = BigInt::from(row[s]);
                let outside = BigInt::from(total[s] - row[s]);
                if s >= 1 {
                    acc += &inside * &fact[s - 1] * &fact[n - s];
                }
                if s < n {
                    acc -= &outside * &fact[s] * &fact[n - s - 1];
                }
            }
            Rational::new(acc, &nf * &scale.denominator)
        })
        .collect()
}

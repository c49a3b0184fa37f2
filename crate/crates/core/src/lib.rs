//! Game-theoretic centrality on undirected graphs.
//!
//! The crate computes Position centrality (the Shapley value of the link game, split onto
//! endpoints), Myerson centrality, and their attachment-game specialisations. The exact
//! engines work on bitmask subsets with rational arithmetic; a permutation sampler covers
//! larger graphs.

pub mod analysis;
pub mod centrality;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod game;
pub mod graph;
pub mod link;
pub mod unionfind;

pub use error::{Error, Result};
pub use exact::Rational;
pub use game::SymmetricGame;
pub use graph::{EdgeSubset, Graph};

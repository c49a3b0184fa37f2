use thiserror::Error;

/// Errors raised by graph construction, the exact engines and the CLI.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("node {node} out of range for a graph with {node_count} nodes")]
    NodeOutOfRange { node: usize, node_count: usize },

    #[error("self-loop on node {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),

    #[error("edge {{{0},{1}}} is not in the graph")]
    MissingEdge(usize, usize),

    #[error("edge id {0} out of range")]
    EdgeOutOfRange(usize),

    #[error("{what}: size {size} exceeds the exact cap of {cap}; use the Monte-Carlo sampler")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("the empty coalition has no dividend")]
    EmptyCoalition,

    #[error("F(s, r) requires 0 <= r <= s, got s = {s}, r = {r}")]
    FDomain { s: i64, r: i64 },

    #[error("game `{name}` is undefined for coalition size {size}")]
    GameDomain { name: String, size: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("value range too large for the fixed-width exact accumulator")]
    Overflow,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown game `{0}`")]
    UnknownGame(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Short machine-readable tag used in CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NodeOutOfRange { .. } => "node_out_of_range",
            Error::SelfLoop(_) => "self_loop",
            Error::DuplicateEdge(..) => "duplicate_edge",
            Error::MissingEdge(..) => "missing_edge",
            Error::EdgeOutOfRange(_) => "edge_out_of_range",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::EmptyCoalition => "empty_coalition",
            Error::FDomain { .. } => "f_domain",
            Error::GameDomain { .. } => "game_domain",
            Error::Precondition(_) => "precondition",
            Error::Overflow => "overflow",
            Error::Parse(_) => "parse",
            Error::UnknownGame(_) => "unknown_game",
            Error::Config(_) => "config",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors produced by the library. Every variant is a "defined failure":
/// the operation refused or could not finish, it never silently truncates.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("invalid graph spec `{spec}`: {reason}")]
    GraphSpec { spec: String, reason: String },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("invalid arguments for `{generator}`: {reason}")]
    InvalidArguments { generator: String, reason: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("{what}: size {size} exceeds the supported maximum {max}")]
    SizeCap { what: &'static str, size: usize, max: usize },

    #[error("search budget of {budget} nodes exceeded in {what}")]
    BudgetExceeded { what: &'static str, budget: u64 },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("bound undefined: s+ = s- = 0 (graph has no edges)")]
    Edgeless,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid partition: {0}")]
    Partition(String),

    #[error("graph is not edge-transitive: edges {first:?} and {second:?} lie in different orbits")]
    NotEdgeTransitive { first: (usize, usize), second: (usize, usize) },

    #[error("graph is not vertex-transitive ({orbits} vertex orbits)")]
    NotVertexTransitive { orbits: usize },

    #[error("rejection sampling budget exhausted: {accepted} accepted out of {attempts} attempts")]
    RejectionBudget { accepted: usize, attempts: usize },

    #[error("exact verification failed: {0}")]
    Verification(String),

    #[error("corpus line {line}: {source}")]
    Corpus { line: usize, source: Box<Error> },

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

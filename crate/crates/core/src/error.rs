use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),

    /// Carries an induced P4 `a - b - c - d` when one was extracted.
    #[error("not a cograph{}", match .witness {
        Some([a, b, c, d]) => format!(" (induced P4 {a} {b} {c} {d})"),
        None => String::new(),
    })]
    NotCograph { witness: Option<[usize; 4]> },

    #[error("invalid weight {weight} for vertex {vertex}: weights must be finite and non-negative")]
    InvalidWeight { vertex: usize, weight: f64 },

    #[error("weight map covers {weights} vertices, graph has {vertices}")]
    WeightCountMismatch { weights: usize, vertices: usize },

    #[error("pair must consist of two distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("k must be at least 1")]
    ZeroK,

    #[error("brute force is limited to 20 vertices, graph has {0}")]
    OracleTooLarge(usize),

    #[error("cotree must have at least one leaf")]
    EmptyCotree,

    #[error("invalid cotree: {0}")]
    InvalidCotree(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal error: {0}")]
    Internal(&'static str),
}

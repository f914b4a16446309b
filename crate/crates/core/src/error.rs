use thiserror::Error;

/// Errors produced while loading graphs or running the counting pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("parallel edge between {0} and {1}")]
    ParallelEdge(usize, usize),

    #[error("arc ({0},{1}) conflicts with an existing arc between the same endpoints")]
    ConflictingArc(usize, usize),

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("arc weight must be at least 1")]
    ZeroWeight,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("pattern has {n} vertices, limit is {limit}")]
    PatternTooLarge { n: usize, limit: usize },

    #[error("host has {n} vertices, brute-force cap is {cap}")]
    HostTooLarge { n: usize, cap: usize },

    #[error("fraternal extension enumeration exceeded the cap of {cap} members")]
    ExtensionCapExceeded { cap: usize },

    #[error("extension depth must be at least {min}, got {got}")]
    InvalidDepth { got: u32, min: u32 },

    #[error("no width-1 hub-tree decomposition for pattern {pattern} at depth {depth}")]
    NoWidth1Decomposition {
        /// Edge list of the pattern (or spasm quotient) being counted.
        pattern: String,
        depth: u32,
        /// Weighted dump of the offending extension.
        extension: String,
    },

    #[error("subgraph count accumulated to the non-integer {0}")]
    NonIntegralCount(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{0} is not a maximal colored set")]
    NotMaximal(String),

    #[error("expected {expected} colored sets, got {got}")]
    WrongLength { expected: usize, got: usize },

    #[error("block {block} has a single label, so its rays vanish in N^pi and the fan is degenerate")]
    DegenerateBlock { block: usize },

    #[error("objects are defined over different ground sets")]
    GroundSetMismatch,

    #[error("polyhedron is unbounded")]
    Unbounded,

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// A balancing assertion or a dual-route comparison failed.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Internal(_) => 3,
            _ => 2,
        }
    }
}

use thiserror::Error;

/// Errors produced while building or analysing a game.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("user weights sum to {sum}, expected 1 (tolerance {tolerance:e})")]
    WeightSum { sum: f64, tolerance: f64 },

    #[error("user {user} has weight {weight}, expected a value in (0, 1]")]
    InvalidWeight { user: usize, weight: f64 },

    #[error("user space is empty")]
    NoUsers,

    #[error("{entity} has dimension {found}, expected {expected}")]
    DimensionMismatch {
        entity: String,
        expected: usize,
        found: usize,
    },

    #[error("similarity {value} for player {player}, user {user}, location {location} is outside [0, 1]")]
    SimilarityOutOfRange {
        player: usize,
        user: usize,
        location: usize,
        value: f64,
    },

    #[error("similarity value {value} at position {position} is outside [0, 1]")]
    InvalidSimilarity { position: usize, value: f64 },

    #[error("similarity vector is empty")]
    EmptySimilarities,

    #[error("player {player} has an empty location set")]
    EmptyLocationSet { player: usize },

    #[error("{0}")]
    Config(String),

    #[error("{kind} index {index} out of range (len {len})")]
    IndexOutOfRange {
        kind: &'static str,
        index: usize,
        len: usize,
    },

    #[error("capacity exceeded: {what} requires {required}, limit is {limit}")]
    Capacity {
        what: &'static str,
        required: u128,
        limit: u128,
    },

    #[error("iteration bound undefined for start potential {phi0} (must be > 0)")]
    UndefinedBound { phi0: f64 },

    #[error("dynamics did not converge within {max_iters} iterations")]
    NonConvergence { max_iters: usize },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Capacity { .. } => 3,
            Error::NonConvergence { .. } => 4,
            Error::Internal(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

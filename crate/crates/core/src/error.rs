use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid cycle notation `{text}`: {reason}")]
    InvalidCycle { text: String, reason: String },

    #[error("group closure exceeds the order cap of {cap}")]
    GroupTooLarge { cap: usize },

    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("unsupported parameters for `{name}`: {reason}")]
    UnsupportedParams { name: String, reason: String },

    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Enumeration would exceed the simplex budget. `degree` is the first
    /// degree that did not fit.
    #[error("simplex budget of {budget} exceeded in degree {degree} (estimated {estimated})")]
    TooLarge { degree: usize, estimated: u128, budget: usize },

    #[error("homology degree {degree} outside the valid range 0..={max}")]
    InvalidDegree { degree: usize, max: usize },

    #[error("euler characteristic requested on a truncated complex")]
    NotFiniteDimensional,

    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

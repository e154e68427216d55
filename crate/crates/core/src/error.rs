use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{what} needs {size} items, above the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: u128,
    },
    #[error("not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("not a lattice: elements {0} and {1} have no {2}")]
    NotALattice(usize, usize, &'static str),
    #[error("lattice is not graded")]
    NotGraded,
    #[error("invalid support: {0}")]
    InvalidSupport(String),
    #[error("support is not modular: {0}")]
    NotModular(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("not an isometry: {0}")]
    NotIsometry(String),
    #[error("axiom violated: {0}")]
    AxiomViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Process exit code used by the command line front-end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } => 3,
            Error::AxiomViolation(_) | Error::NotIsometry(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

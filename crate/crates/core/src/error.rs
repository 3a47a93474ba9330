use crate::arith::Field;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mixed-field operation: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not an odd prime below 2^32")]
    NotPrime(u64),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("duplicate abscissa in interpolation samples")]
    DuplicateAbscissa,
    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },
    #[error("samples are inconsistent with degree bound {0}")]
    InconsistentSamples(usize),
    #[error("grade overflow: {0} + {1} exceeds {2}")]
    GradeOverflow(usize, usize, usize),
    #[error("expected grade {expected}, got {got}")]
    GradeMismatch { expected: usize, got: usize },
    #[error("zero vector where a nonzero one is required")]
    ZeroVector,
    #[error("subspace is not isotropic")]
    NotIsotropic,
    #[error("chart {0} is not valid for this point")]
    InvalidChart(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("retry budget of {0} attempts exhausted")]
    RetryBudget(usize),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("formal classes live in different rings")]
    RingMismatch,
    #[error("monomial {0} is missing from the degree table")]
    MissingMonomial(String),
    #[error("unknown symbol {0}")]
    UnknownSymbol(String),
    #[error("inconsistent system: {0}")]
    Inconsistent(String),
    #[error("expected codimension {expected}, got {got}")]
    WrongCodim { expected: usize, got: usize },
    #[error("partition {0:?} does not fit in the {1}x{2} box")]
    PartitionOutOfBox(Vec<usize>, usize, usize),
    #[error("Schubert classes on different Grassmannians")]
    ContextMismatch,
    #[error("value {0} is odd; the lattice is even")]
    OddValue(i64),
}

pub type Result<T> = std::result::Result<T, Error>;

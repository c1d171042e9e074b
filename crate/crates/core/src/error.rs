use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("no bead at position {0}")]
    EmptySource(i64),
    #[error("position {0} is already occupied")]
    OccupiedTarget(i64),
    #[error("string for color {color} did not terminate within {cap} steps")]
    IntegrabilityViolation { color: usize, cap: usize },
    #[error("exploration exceeded the vertex cap of {0}")]
    SizeCap(usize),
    #[error("inconsistent principal grading: vertex reached at degrees {0} and {1}")]
    InconsistentGrading(usize, usize),
    #[error("graph explored to degree {explored} but degree {needed} was requested")]
    UnderExplored { explored: usize, needed: usize },
    #[error("abacus configuration is not descending")]
    NotDescending,
    #[error("abacus configuration is not compact")]
    NotCompact,
    #[error("abacus configuration is not tight")]
    NotTight,
    #[error("invalid cylindric plane partition: {0}")]
    InvalidCpp(String),
    #[error("level mismatch: weight has level {found}, expected {expected}")]
    LevelMismatch { expected: usize, found: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("boundary profile has {found} down-steps, expected {expected}")]
    BadProfile { expected: usize, found: usize },
    #[error("series has zero constant term and cannot be inverted")]
    NotInvertible,
    #[error("truncation degrees differ: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("partition {0:?} has more than {1} rows")]
    TooManyRows(Vec<usize>, usize),
    #[error("word {0:?} is not a reduced word for the longest element")]
    NotReduced(Vec<usize>),
    #[error("Schutzenberger propagation conflict at {0}")]
    PropagationConflict(String),
    #[error("component is not irreducible: {0}")]
    NotIrreducible(String),
    #[error("duplicate t-value {0}/{1} among candidate boxes")]
    DuplicateT(i64, i64),
}

pub type Result<T> = std::result::Result<T, Error>;

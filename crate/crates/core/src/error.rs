use thiserror::Error;

/// Errors produced by constructors and operations throughout the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus must be at least {min}, got {got}")]
    GenusTooSmall { min: usize, got: usize },

    #[error("expected a coefficient vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("curve index set must be nonempty")]
    EmptyIndexSet,

    #[error("curve indices must be 1-based and strictly increasing, got {0:?}")]
    UnsortedIndices(Vec<usize>),

    #[error("curve index {index} exceeds genus {genus}")]
    IndexOutOfRange { index: usize, genus: usize },

    #[error("support {{{support}}} has odd size {size}; the curve is one-sided and admits no twist")]
    OddSupport { support: String, size: usize },

    #[error("intersection functional is only defined for even support, got size {size}")]
    OddFunctionalSupport { size: usize },

    #[error("invalid slide configuration Y[{i};{j}]: {reason}")]
    SlideConfig { i: String, j: String, reason: String },

    #[error("letter {letter} requires genus at least {min}, genus is {got}")]
    LetterGenus { letter: String, min: usize, got: usize },

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("matrix has determinant {det}, not invertible over the integers")]
    NotUnimodular { det: String },

    #[error("matrix must be {expected}x{expected}, got {rows}x{cols}")]
    BadShape {
        expected: usize,
        rows: usize,
        cols: usize,
    },

    #[error("matrix is not congruent to the identity mod 2")]
    NotLevelTwo,

    #[error("word does not act trivially on mod 2 homology")]
    WordNotLevelTwo,

    #[error("exponent overflow while merging letters")]
    ExponentOverflow,
}

pub type Result<T> = std::result::Result<T, Error>;

use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Parse(String),

    #[error("point {point} repeated in cycle notation")]
    RepeatedPoint { point: usize },

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree {degree} exceeds the supported maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },

    #[error("empty tuple")]
    EmptyTuple,

    #[error("letter {letter} is not a generator of B_{strands}")]
    BadLetter { letter: i32, strands: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("invalid strand count {0}")]
    BadStrandCount(usize),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("word is not a pure braid")]
    NotPure,

    #[error("expected {expected} images, got {got}")]
    ImageCount { expected: usize, got: usize },

    #[error("relator references generator {letter} but only {generators} exist")]
    BadRelator { letter: i32, generators: usize },

    #[error("coset enumeration exceeded {limit} cosets")]
    CosetLimit { limit: usize },

    #[error("coset table is not closed")]
    TableNotClosed,

    #[error("homomorphism has not been verified")]
    NotVerified,

    #[error("homomorphisms have different sources")]
    SourceMismatch,

    #[error("search budget of {budget} relator checks exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("independent routes disagree: {0}")]
    CrossCheck(String),
}

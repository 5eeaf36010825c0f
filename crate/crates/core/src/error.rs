use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be between 2 and {max}, got {got}")]
    BadAlphabet { got: usize, max: usize },
    #[error("circular words must be non-empty")]
    EmptyWord,
    #[error("factor must be non-empty")]
    EmptyFactor,
    #[error("letter {letter} at position {position} is outside the alphabet of size {d}")]
    BadLetter {
        letter: usize,
        position: usize,
        d: usize,
    },
    #[error("cannot parse {0:?} as a digit string")]
    Parse(String),
    #[error("operation requires a binary alphabet, got d = {0}")]
    NotBinary(usize),
    #[error("alphabet mismatch: expected d = {expected}, got d = {got}")]
    AlphabetMismatch { expected: usize, got: usize },
    #[error("size limit exceeded: {what} needs {needed} entries, limit is {limit}")]
    SizeLimit {
        what: &'static str,
        needed: u128,
        limit: u128,
    },
    #[error("{label} is not a word of the graph B({d},{n})")]
    UnknownLabel { label: String, d: usize, n: usize },
    #[error("duplicate factor {0} in functional family")]
    DuplicateFactor(String),
    #[error("square projection of {word} is not a closed path on the square graph: {reason}")]
    BrokenProjection { word: String, reason: String },
    #[error("{0} is not in the span of the basis")]
    NotInSpan(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

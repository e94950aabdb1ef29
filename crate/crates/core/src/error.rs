use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse sequence {0:?}")]
    Parse(String),
    #[error("word {0} is not in reduced form (reduction is {1})")]
    NotReduced(String, String),
    #[error("letter {letter} at position {position} exceeds bound {bound}")]
    NotInversionSequence {
        position: usize,
        letter: usize,
        bound: usize,
    },
    #[error("statistics are undefined on the empty sequence")]
    EmptySequence,
    #[error("sequence of length {0} is too short for this operation")]
    TooShort(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("n = {n} exceeds the brute-force cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("series has zero constant term and is not invertible")]
    NotInvertible,
    #[error("singular parameter point: {0}")]
    Singular(String),
    #[error("no closed form for {0}")]
    NoClosedForm(String),
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
}

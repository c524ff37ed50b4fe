use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be in [1, 65536], got {0}")]
    InvalidAlphabet(u32),
    #[error("generator index {letter} is outside [1, {lambda}]")]
    LetterOutOfRange { letter: u32, lambda: u32 },
    #[error("cannot combine values over alphabets of size {left} and {right}")]
    AlphabetMismatch { left: u32, right: u32 },
    #[error("{0} is not defined for the zero element")]
    ZeroArgument(&'static str),
    #[error("filter words must not begin with p1: {0}")]
    NotHeadFree(String),
    #[error("{0}")]
    Precondition(String),
    #[error("syntax error at {position}: {message}")]
    Syntax { position: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

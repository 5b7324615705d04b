use thiserror::Error;

/// Errors raised by the workbench.
///
/// Every variant has a stable [`Error::code`] used by the command-line
/// front end when it renders errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed shift specification: {0}")]
    MalformedSpec(String),
    #[error("the shift is empty")]
    EmptyShift,
    #[error("point {0} does not lie in the shift")]
    PointNotInShift(String),
    #[error("operands belong to different shifts")]
    ShiftMismatch,
    #[error("operands use different coefficient rings")]
    RingMismatch,
    #[error("set is not contained in the domain of {0}")]
    NotInDomain(String),
    #[error("group element {0} is not simple with respect to the shift")]
    NonSimpleElement(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("word {0} is not in the language of the shift")]
    WordNotInLanguage(String),
    #[error("follower-class enumeration exceeded the cap of {cap} candidates")]
    ClassExplosion { cap: usize },
    #[error("scalar {0} is not an element of the coefficient ring")]
    ScalarNotInRing(String),
    #[error("coefficient ring {0} is not a field")]
    RingNotField(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::MalformedSpec(_) => "E_MALFORMED_SPEC",
            Error::EmptyShift => "E_EMPTY_SHIFT",
            Error::PointNotInShift(_) => "E_POINT_NOT_IN_SHIFT",
            Error::ShiftMismatch => "E_SHIFT_MISMATCH",
            Error::RingMismatch => "E_RING_MISMATCH",
            Error::NotInDomain(_) => "E_NOT_IN_DOMAIN",
            Error::NonSimpleElement(_) => "E_NON_SIMPLE",
            Error::UnknownSymbol(_) => "E_UNKNOWN_SYMBOL",
            Error::WordNotInLanguage(_) => "E_WORD_NOT_IN_LANGUAGE",
            Error::ClassExplosion { .. } => "E_CLASS_EXPLOSION",
            Error::ScalarNotInRing(_) => "E_SCALAR_NOT_IN_RING",
            Error::RingNotField(_) => "E_RING_NOT_FIELD",
            Error::InternalInvariantViolation(_) => "E_INTERNAL",
            Error::Syntax { .. } => "E_SYNTAX",
            Error::Io(_) => "E_IO",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use std::fmt;

/// Errors shared by all engine layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands live in different polynomial rings.
    RingMismatch,
    /// A module element does not belong to the expected free module.
    AmbientMismatch,
    /// An element that must be homogeneous is not.
    NotHomogeneous(String),
    /// The degree of the zero polynomial is undefined.
    DegreeOfZero,
    /// Depth of the zero module is undefined.
    DepthOfZeroModule,
    /// Rings are capped at [`crate::ring::MAX_VARS`] variables.
    TooManyVariables(usize),
    DuplicateVariable(String),
    /// Variable degrees must be positive.
    InvalidVariableDegree(String),
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    InvalidInput(String),
    /// An impossible state that indicates an engine bug, e.g. a resolution
    /// that does not terminate within the Hilbert syzygy bound.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch => write!(f, "operands belong to different rings"),
            Error::AmbientMismatch => write!(f, "element does not belong to the expected module"),
            Error::NotHomogeneous(what) => write!(f, "{what} is not homogeneous"),
            Error::DegreeOfZero => write!(f, "degree of the zero polynomial is undefined"),
            Error::DepthOfZeroModule => write!(f, "depth of the zero module is undefined"),
            Error::TooManyVariables(n) => {
                write!(f, "ring has {n} variables, supported maximum is 8")
            }
            Error::DuplicateVariable(v) => write!(f, "duplicate variable name `{v}`"),
            Error::InvalidVariableDegree(v) => {
                write!(f, "variable `{v}` must have positive degree")
            }
            Error::Parse { line, col, msg } => {
                write!(f, "parse error at line {line}, column {col}: {msg}")
            }
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

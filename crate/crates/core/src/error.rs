use thiserror::Error;

use crate::blades::IndexSet;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("index 0 is not allowed; indices start at 1")]
    ZeroIndex,
    #[error("indices must be strictly increasing: {0:?}")]
    NotCanonical(Vec<u32>),
    #[error("duplicate index {0} in blade literal")]
    DuplicateIndex(u32),
    #[error("index {0} is not declared in the signature")]
    UndeclaredIndex(u32),
    #[error("operands live over different signatures")]
    SignatureMismatch,
    #[error("expected a grade-1 multivector, found grades {0:?}")]
    NotAVector(Vec<usize>),
    #[error("operation requires exact rational scalars")]
    InexactScalar,
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("matrix must be {expected}x{expected}, found {rows}x{cols}")]
    BadShape {
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error("matrix is singular")]
    Singular,
    #[error("basis rows {0} and {1} are not orthogonal under the signature")]
    NotOrthogonal(usize, usize),
    #[error("no image given for generator e{0}")]
    MissingImage(u32),
    #[error("generator check failed for (e{i}, e{j}): {lhs} != {rhs}")]
    NotCompatible {
        i: u32,
        j: u32,
        lhs: String,
        rhs: String,
    },
    #[error("word of length {0} exceeds the limit of {max}", max = crate::oracle::MAX_WORD_LEN)]
    WordTooLong(usize),
    #[error("invalid number literal `{0}`")]
    BadNumber(String),
    #[error("column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("{0}")]
    Format(String),
}

impl Error {
    pub(crate) fn syntax(column: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            column,
            message: message.into(),
        }
    }
}

/// Blade pair that violated a morphism law, with both sides rendered.
#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub left: IndexSet,
    pub right: IndexSet,
    pub expected: String,
    pub found: String,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

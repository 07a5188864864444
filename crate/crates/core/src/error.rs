use thiserror::Error;

use crate::exactalg::LaurentPoly;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    /// Exact division left a nonzero remainder.
    #[error("polynomial is not exactly divisible; remainder has {} terms, leading {}", .remainder.len(), .remainder.leading_term_string())]
    NotDivisible { remainder: LaurentPoly },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("negative exponent of {var} where a polynomial was required: {witness}")]
    NegativeExponent { var: char, witness: String },

    #[error("evaluation hit a zero denominator")]
    ZeroDenominator,

    #[error("input depends on {0}, which this operation does not allow")]
    UnexpectedVariable(char),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum MatrixError {
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("row set has {rows} indices but column set has {cols}")]
    ShapeMismatch { rows: usize, cols: usize },

    #[error("duplicate index {0} in index set")]
    DuplicateIndex(usize),

    /// Fraction-free elimination produced an inexact division. This can only
    /// come from a bug in the elimination itself.
    #[error("internal inconsistency in fraction-free elimination at step {step}: {source}")]
    Inconsistent {
        step: usize,
        #[source]
        source: AlgebraError,
    },
}

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: ParseError,
    },
}

#[derive(Debug, Error, Clone, PartialEq)]
#[error("degenerate SU(1,1) parameters: |alpha|^2 = |beta|^2 = {norm}")]
pub struct DegenerateParams {
    pub norm: String,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderwiseError {
    #[error("order index I={order} is outside 0..={max} for {case} at n={n}")]
    InvalidOrder {
        case: &'static str,
        n: usize,
        order: usize,
        max: usize,
    },

    #[error("{case} at n={n} needs level n+1 but only {available} levels are available")]
    MissingLevel {
        case: &'static str,
        n: usize,
        available: usize,
    },

    #[error("orderwise equations start at n=1")]
    ZeroN,
}

use std::fmt;

use crate::exactalg::Rational;

/// Which of the two recurrence coefficients an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Which {
    A,
    B,
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Which::A => f.write_str("a"),
            Which::B => f.write_str("b"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("ring arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    #[error("polynomial division is not exact")]
    DivisionNotExact,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("partition of length {len} does not fit in {n} variables")]
    Shape { len: usize, n: usize },

    #[error("pole of {which}(x) at x = {at}")]
    Pole { which: Which, at: Rational },

    #[error("stable coefficient has a pole at d = {at}")]
    DimensionPole { at: Rational },

    #[error("coefficient {which}({index}) is beyond the supplied table of length {len}")]
    OutOfTable { which: Which, index: i64, len: usize },

    #[error("rational interpolation inconsistent with degree bound {bound}")]
    InterpolationInconsistent { bound: usize },

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for failures that are mathematical in nature (exit code 3 in the CLI).
    pub fn is_mathematical(&self) -> bool {
        matches!(
            self,
            Error::Pole { .. }
                | Error::DimensionPole { .. }
                | Error::InterpolationInconsistent { .. }
                | Error::DivisionByZero
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

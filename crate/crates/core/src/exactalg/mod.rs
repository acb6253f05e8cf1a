//! Exact arithmetic: rationals, sparse multivariate polynomials, dense
//! univariate polynomials and determinants over the polynomial ring.
//!
//! All polynomial values are kept in canonical form (no stored zero
//! coefficients), so structural equality is mathematical equality. Monomials
//! are ordered graded-lexicographically with `x1 > x2 > ... > xn`.

mod format;
mod linalg;
mod matrix;
mod monomial;
mod poly;
#[cfg(test)]
pub(crate) mod strategies;
mod unipoly;

pub use format::{
    poly_from_json, poly_to_json, poly_to_latex, poly_to_latex_with, poly_to_text, poly_to_text_with,
    rational_to_latex,
};
pub use linalg::{rational_det, rational_nullspace};
pub use matrix::PolyMatrix;
pub use monomial::Monomial;
pub use poly::{poly_arith, ArithKind, Binding, MultiPoly};
pub use unipoly::UniPoly;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rational numerator in {text:?}")))?;
        let q: BigInt = q
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rational denominator in {text:?}")))?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        Ok(Rational::new(p, q))
    } else {
        let p: BigInt = text
            .parse()
            .map_err(|_| Error::Parse(format!("bad rational {text:?}")))?;
        Ok(Rational::from_integer(p))
    }
}

/// `(-1)^k` as a rational.
pub fn sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Integer value of a rational, if it is one and fits in `i64`.
pub fn as_i64(value: &Rational) -> Option<i64> {
    if value.is_integer() {
        i64::try_from(value.to_integer()).ok()
    } else {
        None
    }
}

//! Text, LaTeX and JSON renderings of polynomials.
//!
//! Every rendering lists terms from the leading monomial downward in the
//! global grlex order, so output is deterministic.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{parse_rational, Monomial, MultiPoly, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct JsonTerm {
    e: Vec<u32>,
    c: String,
}

fn join_signed<F>(p: &MultiPoly, mut term: F) -> String
where
    F: FnMut(&Monomial, &Rational) -> String,
{
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&term(m, &c.abs()));
    }
    out
}

/// Plain text such as `x1^2*x2 - 3/2*x2 + 1`.
pub fn poly_to_text(p: &MultiPoly) -> String {
    poly_to_text_with(p, |i| format!("x{}", i + 1))
}

/// [`poly_to_text`] with caller-chosen variable names.
pub fn poly_to_text_with<F: Fn(usize) -> String>(p: &MultiPoly, name: F) -> String {
    join_signed(p, |m, c| {
        let vars: Vec<String> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    name(i)
                } else {
                    format!("{}^{e}", name(i))
                }
            })
            .collect();
        if m.is_one() {
            c.to_string()
        } else if c.is_one() {
            vars.join("*")
        } else {
            format!("{c}*{}", vars.join("*"))
        }
    })
}

pub fn rational_to_latex(c: &Rational) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        let sign = if c.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", c.numer().abs(), c.denom())
    }
}

/// LaTeX with explicit `x_{i}^{e}` tokens for every variable that occurs.
pub fn poly_to_latex(p: &MultiPoly) -> String {
    poly_to_latex_with(p, |i| format!("x_{{{}}}", i + 1))
}

/// [`poly_to_latex`] with caller-chosen variable tokens.
pub fn poly_to_latex_with<F: Fn(usize) -> String>(p: &MultiPoly, name: F) -> String {
    join_signed(p, |m, c| {
        let vars: String = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, e)| format!("{}^{{{}}}", name(i), e))
            .collect();
        if m.is_one() {
            rational_to_latex(c)
        } else if c.is_one() {
            vars
        } else {
            format!("{} {}", rational_to_latex(c), vars)
        }
    })
}

/// JSON array of `{"e": [...], "c": "p/q"}` terms.
pub fn poly_to_json(p: &MultiPoly) -> serde_json::Value {
    let terms: Vec<JsonTerm> = p
        .terms()
        .rev()
        .map(|(m, c)| JsonTerm {
            e: m.exponents().to_vec(),
            c: c.to_string(),
        })
        .collect();
    serde_json::to_value(terms).expect("terms serialize")
}

/// Parses the JSON term array. The arity comes from the terms, or from
/// `arity` when the polynomial is zero (an empty array).
pub fn poly_from_json(value: &serde_json::Value, arity: Option<usize>) -> Result<MultiPoly> {
    let terms: Vec<JsonTerm> =
        serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let arity = match (arity, terms.first()) {
        (Some(a), _) => a,
        (None, Some(t)) => t.e.len(),
        (None, None) => 0,
    };
    let mut p = MultiPoly::zero(arity);
    for t in terms {
        if t.e.len() != arity {
            return Err(Error::ArityMismatch {
                left: arity,
                right: t.e.len(),
            });
        }
        let c = parse_rational(&t.c)?;
        if c.is_zero() {
            continue;
        }
        p.add_term(Monomial::from_exponents(&t.e), c);
    }
    Ok(p)
}

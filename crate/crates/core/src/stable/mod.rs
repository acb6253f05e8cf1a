//! Generalized Schur functions in a formal dimension `d`, and their super
//! specializations.
//!
//! In `n` variables `S_λ(x|a,b) = Σ_{μ⊆λ} c_{λ,μ}(n) S_μ(x)`. The
//! coefficients are sampled at integer `n`, interpolated as rational
//! functions `c_{λ,μ}(d)`, and then evaluated at any `d`.
//!
//! Two routes compute `c_{λ,μ}(n)`:
//! * [`schur_expand_at`] peels leading terms of the bialternant against
//!   classical Schur polynomials (a triangular solve in `n` variables);
//! * [`schur_coefficient_minor`] uses the `l(λ) × l(λ)` minor
//!   `det[[z^{μ_k+n−k}] φ_{λ_j+n−j}]` of the coefficient matrix of the `φ`'s,
//!   which stays cheap for large `n` and is what interpolation samples.

mod interp;
mod superschur;

pub use interp::{rational_interpolate, sample_nodes, RationalFunction};
pub use superschur::{
    jt_infinite_check, jt_infinite_sides, super_complete, super_schur, super_schur_classical,
    SuperAlphabet,
};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::coeffseq::{CoeffSeq, UniPolySeq};
use crate::error::{Error, Result};
use crate::exactalg::{rational_det, MultiPoly, Rational};
use crate::gschur::GschurContext;
use crate::partitions::Partition;
use crate::presets::{build, Preset};

/// Largest degree bound tried by the adaptive interpolation protocol.
pub const MAX_DEGREE_BOUND: usize = 64;

/// Coefficients in the classical Schur basis; zero coefficients are not stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    pub coeffs: BTreeMap<Partition, Rational>,
}

impl SchurExpansion {
    pub fn coeff(&self, mu: &Partition) -> Rational {
        self.coeffs.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    fn insert(&mut self, mu: Partition, c: Rational) {
        if !c.is_zero() {
            self.coeffs.insert(mu, c);
        }
    }

    /// `Σ c_μ s_μ(x1..x_vars)`; terms with `l(μ) > vars` vanish.
    pub fn realize(&self, vars: usize) -> Result<MultiPoly> {
        let mut classical = GschurContext::new(vars, build(&Preset::Schur))?;
        let mut acc = MultiPoly::zero(vars);
        for (mu, c) in &self.coeffs {
            if mu.len() <= vars {
                acc = &acc + &classical.bialternant(mu)?.scale(c);
            }
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .rev()
                .map(|(mu, c)| serde_json::json!({"mu": mu, "c": c.to_string()}))
                .collect(),
        )
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .rev()
            .map(|(mu, c)| format!("{c}*S{mu}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn check_rows(lambda: &Partition, n: usize) -> Result<()> {
    if n < lambda.len() || n == 0 {
        return Err(Error::Contract(format!(
            "n = {n} is below the length of {lambda}"
        )));
    }
    Ok(())
}

/// `c_{λ,μ}(n)` for all `μ ⊆ λ` by a triangular solve against classical
/// Schur polynomials in `n` variables.
pub fn schur_expand_at(lambda: &Partition, seq: &CoeffSeq, n: usize) -> Result<SchurExpansion> {
    check_rows(lambda, n)?;
    let mut rest = GschurContext::new(n, seq.clone())?.bialternant(lambda)?;
    let mut classical = GschurContext::new(n, build(&Preset::Schur))?;
    let mut out = SchurExpansion::default();
    while let Some((m, c)) = rest.leading_term() {
        let mu = Partition::new(m.exponents().to_vec())?;
        if !mu.is_contained_in(lambda) {
            return Err(Error::Contract(format!(
                "{mu} appears in the expansion of {lambda} but is not contained in it"
            )));
        }
        let c = c.clone();
        rest = &rest - &classical.bialternant(&mu)?.scale(&c);
        out.insert(mu, c);
    }
    Ok(out)
}

/// `c_{λ,μ}(n)` from the minor of the `φ` coefficient matrix.
pub fn schur_coefficient_minor(
    lambda: &Partition,
    mu: &Partition,
    phis: &mut UniPolySeq,
    n: usize,
) -> Result<Rational> {
    check_rows(lambda, n)?;
    let l = lambda.len();
    if mu.len() > l {
        return Ok(Rational::zero());
    }
    let mut m = Vec::with_capacity(l);
    for j in 1..=l {
        let row = phis.phi_coeffs(i64::from(lambda.part(j)) + (n - j) as i64)?;
        m.push(
            (1..=l)
                .map(|k| row.coeff(mu.part(k) as usize + n - k))
                .collect(),
        );
    }
    Ok(rational_det(m))
}

/// All `c_{λ,μ}(n)` by the minor route.
pub fn schur_expand_minor(lambda: &Partition, seq: &CoeffSeq, n: usize) -> Result<SchurExpansion> {
    let mut phis = UniPolySeq::new(seq.clone());
    let mut out = SchurExpansion::default();
    for mu in lambda.sub_partitions() {
        let c = schur_coefficient_minor(lambda, &mu, &mut phis, n)?;
        out.insert(mu, c);
    }
    Ok(out)
}

/// Interpolates `c_{λ,μ}(d)` from its values at `sample_ns`, with numerator
/// and denominator degrees at most `degree_bound`.
pub fn interpolate_c(
    lambda: &Partition,
    mu: &Partition,
    seq: &CoeffSeq,
    sample_ns: &[usize],
    degree_bound: usize,
) -> Result<RationalFunction> {
    let mut sorted = sample_ns.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != sample_ns.len() {
        return Err(Error::Contract("sample points must be distinct".into()));
    }
    if sample_ns.len() < 3 {
        return Err(Error::Contract("need at least one fit point and two surplus points".into()));
    }
    let mut phis = UniPolySeq::new(seq.clone());
    let values = sample_ns
        .iter()
        .map(|&n| schur_coefficient_minor(lambda, mu, &mut phis, n))
        .collect::<Result<Vec<_>>>()?;
    rational_interpolate(&interp::as_points(sample_ns, &values), degree_bound)
}

/// Adaptive protocol: start at `start_bound`, double on inconsistency.
pub fn interpolate_c_adaptive(
    lambda: &Partition,
    mu: &Partition,
    seq: &CoeffSeq,
    start_bound: usize,
) -> Result<RationalFunction> {
    let first = lambda.len().max(1);
    let mut bound = start_bound.max(1);
    loop {
        match interpolate_c(lambda, mu, seq, &sample_nodes(first, bound), bound) {
            Err(Error::InterpolationInconsistent { .. }) if bound < MAX_DEGREE_BOUND => {
                bound = (bound * 2).min(MAX_DEGREE_BOUND);
            }
            other => return other,
        }
    }
}

/// All interpolated coefficients `c_{λ,μ}(d)`, `μ ⊆ λ`.
pub fn stable_coefficients(
    lambda: &Partition,
    seq: &CoeffSeq,
    degree_bound: usize,
) -> Result<BTreeMap<Partition, RationalFunction>> {
    lambda
        .sub_partitions()
        .into_iter()
        .map(|mu| {
            let f = interpolate_c_adaptive(lambda, &mu, seq, degree_bound)?;
            Ok((mu, f))
        })
        .collect()
}

/// `S_λ(x|a,b;d)` as a Schur expansion at a given `d`.
pub fn gschur_function(
    lambda: &Partition,
    seq: &CoeffSeq,
    d_value: &Rational,
    degree_bound: usize,
) -> Result<SchurExpansion> {
    let mut out = SchurExpansion::default();
    for (mu, f) in stable_coefficients(lambda, seq, degree_bound)? {
        out.insert(mu, f.eval(d_value)?);
    }
    Ok(out)
}

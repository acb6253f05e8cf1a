use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Monomial, Rational};
use crate::error::{Error, Result};

/// Sparse polynomial over the rationals in a fixed number of variables.
///
/// Terms are kept in a `BTreeMap` keyed by grlex-ordered monomials, so the
/// last entry is the leading term. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Monomial, Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
}

/// Replacement for `x1` in [`MultiPoly::restrict`].
#[derive(Debug, Clone, PartialEq)]
pub enum Binding {
    Value(Rational),
    /// Another variable of the same ring, 0-based.
    Var(usize),
}

/// Checked binary arithmetic on polynomials that may live in different rings.
pub fn poly_arith(f: &MultiPoly, g: &MultiPoly, kind: ArithKind) -> Result<MultiPoly> {
    if f.arity != g.arity {
        return Err(Error::ArityMismatch {
            left: f.arity,
            right: g.arity,
        });
    }
    Ok(match kind {
        ArithKind::Add => f + g,
        ArithKind::Sub => f - g,
        ArithKind::Mul => f * g,
    })
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        MultiPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(Monomial::one(arity), c);
        p
    }

    /// The variable `x_{var+1}`.
    pub fn var(arity: usize, var: usize) -> Self {
        assert!(var < arity, "variable index {var} out of range for arity {arity}");
        let mut p = Self::zero(arity);
        p.add_term(Monomial::var_pow(arity, var, 1), Rational::one());
        p
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.arity());
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I>(arity: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(arity);
        for (m, c) in terms {
            assert_eq!(m.arity(), arity, "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.arity))
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(var)).max()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = Self::one(self.arity);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self += c · other`, in place.
    pub fn add_scaled(&mut self, other: &MultiPoly, c: &Rational) {
        assert_eq!(self.arity, other.arity, "arity mismatch in add_scaled");
        if c.is_zero() {
            return;
        }
        for (om, oc) in &other.terms {
            self.add_term(om.clone(), oc * c);
        }
    }

    /// `self += c * m * other`, the inner step of division and elimination.
    fn add_scaled_shifted(&mut self, other: &MultiPoly, m: &Monomial, c: &Rational) {
        for (om, oc) in &other.terms {
            self.add_term(om.mul(m), oc * c);
        }
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Fails with [`Error::DivisionNotExact`] when a remainder appears.
    pub fn exact_divide(&self, divisor: &MultiPoly) -> Result<MultiPoly> {
        if self.arity != divisor.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: divisor.arity,
            });
        }
        let Some((lead_m, lead_c)) = divisor.leading_term() else {
            return Err(Error::DivisionByZero);
        };
        let lead_m = lead_m.clone();
        let lead_inv = lead_c.recip();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.arity);
        while let Some((m, c)) = rem.terms.last_key_value() {
            let qm = m.checked_div(&lead_m).ok_or(Error::DivisionNotExact)?;
            let qc = c * &lead_inv;
            rem.add_scaled_shifted(divisor, &qm, &-qc.clone());
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> MultiPoly {
        assert_eq!(perm.len(), self.arity);
        MultiPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.permute(perm), c.clone()))
                .collect(),
        }
    }

    pub fn swap_vars(&self, i: usize, j: usize) -> MultiPoly {
        let mut perm: Vec<usize> = (0..self.arity).collect();
        perm.swap(i, j);
        self.permute(&perm)
    }

    /// Invariance under every adjacent transposition (hence all permutations).
    pub fn is_symmetric(&self) -> bool {
        (1..self.arity).all(|i| self.swap_vars(i - 1, i) == *self)
    }

    /// Maps the ring into one of arity `new_arity`, sending `x_i` to
    /// `x_{i+offset}`.
    pub fn embed(&self, new_arity: usize, offset: usize) -> MultiPoly {
        assert!(self.arity + offset <= new_arity, "embedding does not fit");
        let mut out = Self::zero(new_arity);
        for (m, c) in &self.terms {
            let mut nm = Monomial::one(new_arity);
            for (i, &e) in m.exponents().iter().enumerate() {
                nm.exps_mut()[i + offset] = e;
            }
            out.terms.insert(nm, c.clone());
        }
        out
    }

    /// Substitutes `value` (same ring) for variable `var`.
    pub fn substitute(&self, var: usize, value: &MultiPoly) -> MultiPoly {
        assert_eq!(value.arity, self.arity);
        let max_e = self.degree_in(var).unwrap_or(0);
        let mut powers = Vec::with_capacity(max_e as usize + 1);
        powers.push(Self::one(self.arity));
        for k in 1..=max_e as usize {
            let next = &powers[k - 1] * value;
            powers.push(next);
        }
        let mut out = Self::zero(self.arity);
        for (m, c) in &self.terms {
            let e = m.exponent(var) as usize;
            let mut rest = m.clone();
            rest.exps_mut()[var] = 0;
            out.add_scaled_shifted(&powers[e], &rest, c);
        }
        out
    }

    /// Evaluates at a point with one rational per variable.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.arity);
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Acts on `x1`: either binds it (to a value or another variable) or,
    /// with `drop_first`, reinterprets the result over `(x2, ..., xn)`.
    pub fn restrict(&self, drop_first: bool, bind_first: Option<&Binding>) -> Result<MultiPoly> {
        if self.arity == 0 {
            return Err(Error::Contract("restrict needs at least one variable".into()));
        }
        let bound = match bind_first {
            None => self.clone(),
            Some(Binding::Value(v)) => self.substitute(0, &Self::constant(self.arity, v.clone())),
            Some(Binding::Var(k)) => {
                if *k >= self.arity {
                    return Err(Error::Contract(format!("variable x{} out of range", k + 1)));
                }
                self.substitute(0, &Self::var(self.arity, *k))
            }
        };
        if !drop_first {
            return Ok(bound);
        }
        if bound.degree_in(0).unwrap_or(0) > 0 {
            return Err(Error::Contract(
                "cannot drop x1 from a polynomial that depends on it".into(),
            ));
        }
        let mut out = Self::zero(self.arity - 1);
        for (m, c) in bound.terms {
            out.terms
                .insert(Monomial::from_exponents(&m.exponents()[1..]), c);
        }
        Ok(out)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch in add");
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch in sub");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch in mul");
        let mut out = MultiPoly::zero(self.arity);
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out.add_scaled_shifted(rhs, m, c);
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::poly_to_text(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    fn x(arity: usize, i: usize) -> MultiPoly {
        MultiPoly::var(arity, i)
    }

    #[test]
    fn difference_of_squares() {
        let (x1, x2) = (x(2, 0), x(2, 1));
        let p = poly_arith(&(&x1 + &x2), &(&x1 - &x2), ArithKind::Mul).unwrap();
        assert_eq!(p, &(&x1 * &x1) - &(&x2 * &x2));
    }

    #[test]
    fn additive_identity() {
        let f = &x(3, 0).pow(2) + &x(3, 2).scale(&rat(-3, 2));
        assert_eq!(
            poly_arith(&f, &MultiPoly::zero(3), ArithKind::Add).unwrap(),
            f
        );
    }

    #[test]
    fn cube_expansion_leaves_mixed_terms() {
        // (x1 + x2)(x1^2 + x1x2 + x2^2) - (x1^3 + x2^3) by brute-force term products.
        let (x1, x2) = (x(2, 0), x(2, 1));
        let lhs = &(&x1 + &x2) * &(&(&x1.pow(2) + &(&x1 * &x2)) + &x2.pow(2));
        let got = &lhs - &(&x1.pow(3) + &x2.pow(3));
        let expected = MultiPoly::from_terms(
            2,
            [
                (Monomial::from_exponents(&[2, 1]), int(2)),
                (Monomial::from_exponents(&[1, 2]), int(2)),
            ],
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let e = poly_arith(&x(2, 0), &x(3, 0), ArithKind::Add).unwrap_err();
        assert_eq!(e, Error::ArityMismatch { left: 2, right: 3 });
    }

    #[test]
    fn exact_division_examples() {
        let (x1, x2) = (x(2, 0), x(2, 1));
        let diff = &x1 - &x2;
        let q = (&x1.pow(2) - &x2.pow(2)).exact_divide(&diff).unwrap();
        assert_eq!(q, &x1 + &x2);
        let f = &(&x1.pow(2) * &x2) - &(&x1 * &x2.pow(2));
        assert_eq!(f.exact_divide(&diff).unwrap(), &x1 * &x2);
        assert_eq!(f.exact_divide(&MultiPoly::one(2)).unwrap(), f);
    }

    #[test]
    fn inexact_division_is_detected() {
        let (x1, x2) = (x(2, 0), x(2, 1));
        let f = &x1.pow(2) + &x2;
        assert_eq!(f.exact_divide(&(&x1 - &x2)), Err(Error::DivisionNotExact));
        assert_eq!(f.exact_divide(&MultiPoly::zero(2)), Err(Error::DivisionByZero));
    }

    #[test]
    fn restrict_examples() {
        let p = &x(3, 1) + &x(3, 2);
        assert_eq!(
            p.restrict(true, None).unwrap(),
            &x(2, 0) + &x(2, 1)
        );
        let q = &(&x(2, 0) * &x(2, 1)) + &x(2, 1);
        assert_eq!(
            q.restrict(false, Some(&Binding::Value(int(0)))).unwrap(),
            x(2, 1)
        );
        let vandermonde = &x(2, 0) - &x(2, 1);
        assert!(vandermonde
            .restrict(false, Some(&Binding::Var(1)))
            .unwrap()
            .is_zero());
        assert!(vandermonde.restrict(true, None).is_err());
        // Binding x1 := 2 and dropping it lands in the smaller ring.
        assert_eq!(
            q.restrict(true, Some(&Binding::Value(int(2)))).unwrap(),
            x(1, 0).scale(&int(3))
        );
    }

    #[test]
    fn embed_shifts_variables() {
        let p = &x(2, 0) * &x(2, 1).pow(2);
        let e = p.embed(3, 1);
        assert_eq!(e, &x(3, 1) * &x(3, 2).pow(2));
        assert_eq!(e.restrict(true, None).unwrap(), p);
    }

    #[test]
    fn eval_and_substitute_agree() {
        let p = &(&x(2, 0).pow(3) * &x(2, 1)) - &x(2, 1).scale(&rat(1, 3));
        let v = p.eval(&[int(2), rat(3, 2)]);
        let s = p.substitute(0, &MultiPoly::constant(2, int(2)));
        assert_eq!(s.eval(&[int(0), rat(3, 2)]), v);
        assert_eq!(v, rat(23, 2));
    }

    mod props {
        use crate::exactalg::format::{poly_from_json, poly_to_json};
        use crate::exactalg::strategies::{poly, rational};
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn ring_laws(f in poly(3, 5), g in poly(3, 5), h in poly(3, 4)) {
                prop_assert_eq!(&f + &g, &g + &f);
                prop_assert_eq!(&f * &g, &g * &f);
                prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
                prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
                prop_assert!((&f - &f).is_zero());
            }

            #[test]
            fn division_undoes_multiplication(f in poly(2, 5), g in poly(2, 4)) {
                prop_assume!(!g.is_zero());
                prop_assert_eq!((&f * &g).exact_divide(&g).unwrap(), f);
            }

            #[test]
            fn evaluation_is_a_homomorphism(
                f in poly(2, 5),
                g in poly(2, 5),
                a in rational(),
                b in rational(),
            ) {
                let pt = [a, b];
                prop_assert_eq!((&f * &g).eval(&pt), f.eval(&pt) * g.eval(&pt));
                prop_assert_eq!((&f + &g).eval(&pt), f.eval(&pt) + g.eval(&pt));
            }

            #[test]
            fn json_round_trip(f in poly(3, 6)) {
                prop_assert_eq!(poly_from_json(&poly_to_json(&f), Some(3)).unwrap(), f);
            }

            #[test]
            fn permuting_twice_by_a_swap_is_identity(f in poly(3, 6)) {
                prop_assert_eq!(f.swap_vars(0, 2).swap_vars(0, 2), f);
            }
        }
    }
}

//! proptest strategies shared by the unit tests.

use proptest::prelude::*;

use super::{rat, Monomial, MultiPoly, Rational, UniPoly};

pub fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

/// Sparse polynomial with up to `terms` terms of partial degree at most 3.
pub fn poly(arity: usize, terms: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=3, arity), rational()), 0..=terms)
        .prop_map(move |ts| {
            MultiPoly::from_terms(
                arity,
                ts.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), c)),
            )
        })
}

pub fn unipoly(max_degree: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(rational(), 0..=max_degree + 1).prop_map(UniPoly::from_coeffs)
}

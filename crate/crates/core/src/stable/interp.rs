use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{int, rational_nullspace, Rational, UniPoly};

/// Reduced quotient of univariate polynomials in `d`, with monic denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::constant(Rational::zero()));
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().expect("nonzero").recip();
        Ok(RationalFunction {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction {
            num: UniPoly::constant(c),
            den: UniPoly::one(),
        }
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn eval(&self, d: &Rational) -> Result<Rational> {
        let den = self.den.eval(d);
        if den.is_zero() {
            return Err(Error::DimensionPole { at: d.clone() });
        }
        Ok(self.num.eval(d) / den)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &UniPoly| p.to_string().replace("x1", "d");
        if self.den == UniPoly::one() {
            write!(f, "{}", show(&self.num))
        } else {
            write!(f, "({}) / ({})", show(&self.num), show(&self.den))
        }
    }
}

fn powers(x: &Rational, upto: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(upto + 1);
    let mut acc = Rational::one();
    for _ in 0..=upto {
        out.push(acc.clone());
        acc *= x;
    }
    out
}

/// Fits `P/Q` with `deg P ≤ num_deg`, `deg Q ≤ den_deg` through the first
/// `num_deg + den_deg + 1` points and checks it against all of them.
fn fit(points: &[(Rational, Rational)], num_deg: usize, den_deg: usize) -> Option<RationalFunction> {
    let unknowns = num_deg + den_deg + 2;
    let used = &points[..unknowns - 1];
    let rows: Vec<Vec<Rational>> = used
        .iter()
        .map(|(x, y)| {
            let pw = powers(x, num_deg.max(den_deg));
            let mut row: Vec<Rational> = pw[..=num_deg].to_vec();
            row.extend(pw[..=den_deg].iter().map(|p| -(p * y)));
            row
        })
        .collect();
    for v in rational_nullspace(rows, unknowns) {
        let num = UniPoly::from_coeffs(v[..=num_deg].to_vec());
        let den = UniPoly::from_coeffs(v[num_deg + 1..].to_vec());
        if den.is_zero() {
            continue;
        }
        let Ok(candidate) = RationalFunction::new(num, den) else {
            continue;
        };
        let agrees = points
            .iter()
            .all(|(x, y)| candidate.eval(x).is_ok_and(|v| &v == y));
        if agrees {
            return Some(candidate);
        }
    }
    None
}

/// Rational interpolation with both degrees at most `bound`.
///
/// Candidates are tried by increasing total degree `s`; each is fitted on
/// `s + 1` points and must reproduce every point, so at least two points
/// beyond the fit are always used for validation.
pub fn rational_interpolate(points: &[(Rational, Rational)], bound: usize) -> Result<RationalFunction> {
    for s in 0..=2 * bound {
        if points.len() < s + 3 {
            break;
        }
        for num_deg in (s.saturating_sub(bound)..=s.min(bound)).rev() {
            if let Some(f) = fit(points, num_deg, s - num_deg) {
                return Ok(f);
            }
        }
    }
    Err(Error::InterpolationInconsistent { bound })
}

/// Sample nodes `start, start+1, …` enough for degree `bound` plus two surplus points.
pub fn sample_nodes(start: usize, bound: usize) -> Vec<usize> {
    (start..start + 2 * bound + 3).collect()
}

pub(crate) fn as_points(ns: &[usize], values: &[Rational]) -> Vec<(Rational, Rational)> {
    ns.iter()
        .zip(values)
        .map(|(&n, v)| (int(n as i64), v.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn pts(f: impl Fn(&Rational) -> Rational, xs: std::ops::Range<i64>) -> Vec<(Rational, Rational)> {
        xs.map(|x| {
            let x = int(x);
            let y = f(&x);
            (x, y)
        })
        .collect()
    }

    #[test]
    fn recovers_polynomial() {
        let f = |x: &Rational| -(x * (x - int(1))) / int(2);
        let r = rational_interpolate(&pts(f, 2..11), 4).unwrap();
        assert_eq!(r.denominator(), &UniPoly::one());
        for x in 20..25 {
            assert_eq!(r.eval(&int(x)).unwrap(), f(&int(x)));
        }
    }

    #[test]
    fn recovers_rational_function() {
        let f = |x: &Rational| (x * x + int(3)) / ((int(2) * x - int(1)) * (x + int(7)));
        let r = rational_interpolate(&pts(f, 1..12), 4).unwrap();
        assert_eq!(r.denominator().degree(), Some(2));
        assert_eq!(r.eval(&rat(1, 3)).unwrap(), f(&rat(1, 3)));
        assert_eq!(
            r.eval(&rat(1, 2)),
            Err(Error::DimensionPole { at: rat(1, 2) })
        );
    }

    #[test]
    fn constant_function() {
        let r = rational_interpolate(&pts(|_| int(1), 1..6), 4).unwrap();
        assert_eq!(r, RationalFunction::constant(int(1)));
    }

    #[test]
    fn too_small_a_bound_is_reported() {
        // degree-6 polynomial cannot be matched with bound 2
        let f = |x: &Rational| num_traits::pow(x.clone(), 6);
        let e = rational_interpolate(&pts(f, 0..20), 2).unwrap_err();
        assert_eq!(e, Error::InterpolationInconsistent { bound: 2 });
    }

    mod props {
        use super::*;
        use crate::exactalg::strategies::unipoly;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn recovers_random_rational_functions(num in unipoly(2), den in unipoly(2)) {
                prop_assume!(!den.is_zero());
                let nodes: Vec<i64> = (0..40).filter(|&x| !den.eval(&int(x)).is_zero()).take(11).collect();
                let pts: Vec<(Rational, Rational)> = nodes
                    .iter()
                    .map(|&x| (int(x), num.eval(&int(x)) / den.eval(&int(x))))
                    .collect();
                let want = RationalFunction::new(num.clone(), den.clone()).unwrap();
                prop_assert_eq!(rational_interpolate(&pts, 4).unwrap(), want);
            }
        }
    }
}

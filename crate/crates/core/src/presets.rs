//! Ready-made coefficient sequences: ordinary Schur polynomials, the
//! characters of `so(2n+1)`, `so(2n)`, `sp(2n)`, factorial Schur
//! polynomials and the BC-type Jacobi coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::coeffseq::{const_fn, CoeffSeq, Family, IndexFn};
use crate::error::{Error, Result};
use crate::exactalg::{int, MultiPoly, PolyMatrix, Rational, UniPoly};
use crate::gschur::GschurContext;
use crate::partitions::Partition;

/// Shift parameters `a(0), a(1), …` of the factorial family.
#[derive(Debug, Clone, PartialEq)]
pub enum FactorialShifts {
    /// Explicit table; indices past the end are an error.
    Table(Vec<Rational>),
    /// `a(i) = offset + slope·i`, defined at every rational index.
    Affine { offset: Rational, slope: Rational },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Preset {
    /// `a = b = 0`, so `φ_i = z^i`.
    Schur,
    /// `so(2n+1)`: `a(0) = −1`, `b(0) = 0`, otherwise `a = 0`, `b = 1`.
    SoOdd,
    /// `so(2n)`: `a = 0`, `b(1) = 2`, otherwise `b = 1`.
    SoEven,
    /// `sp(2n)`: `a = 0`, `b = 1`.
    Sp,
    /// `b = 0`, so `φ_i = (z − a(0)) ⋯ (z − a(i−1))`.
    Factorial(FactorialShifts),
    BcJacobi { p: Rational, q: Rational },
}

/// Names accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresetName {
    Schur,
    SoOdd,
    SoEven,
    Sp,
    Factorial,
    BcJacobi,
}

impl FromStr for PresetName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.replace('-', "_").as_str() {
            "schur" => PresetName::Schur,
            "so_odd" => PresetName::SoOdd,
            "so_even" => PresetName::SoEven,
            "sp" => PresetName::Sp,
            "factorial" => PresetName::Factorial,
            "bc_jacobi" => PresetName::BcJacobi,
            other => return Err(Error::Parse(format!("unknown preset {other:?}"))),
        })
    }
}

impl fmt::Display for PresetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PresetName::Schur => "schur",
            PresetName::SoOdd => "so_odd",
            PresetName::SoEven => "so_even",
            PresetName::Sp => "sp",
            PresetName::Factorial => "factorial",
            PresetName::BcJacobi => "bc_jacobi",
        })
    }
}

/// A preset name with its parameters, as supplied by a caller.
///
/// `bc_jacobi` reads `p` and `q`; `factorial` reads the shift table from
/// `shifts`, or `offset`/`slope` for the affine form.
#[derive(Debug, Clone, PartialEq)]
pub struct PresetSpec {
    pub name: PresetName,
    pub params: BTreeMap<String, Rational>,
    pub shifts: Option<Vec<Rational>>,
}

impl PresetSpec {
    pub fn new(name: PresetName) -> Self {
        PresetSpec {
            name,
            params: BTreeMap::new(),
            shifts: None,
        }
    }

    pub fn param(mut self, key: &str, value: Rational) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    fn get(&self, key: &str) -> Result<Rational> {
        self.params
            .get(key)
            .cloned()
            .ok_or_else(|| Error::Contract(format!("preset {} needs parameter {key}", self.name)))
    }

    pub fn to_preset(&self) -> Result<Preset> {
        Ok(match self.name {
            PresetName::Schur => Preset::Schur,
            PresetName::SoOdd => Preset::SoOdd,
            PresetName::SoEven => Preset::SoEven,
            PresetName::Sp => Preset::Sp,
            PresetName::BcJacobi => Preset::BcJacobi {
                p: self.get("p")?,
                q: self.get("q")?,
            },
            PresetName::Factorial => match &self.shifts {
                Some(t) => Preset::Factorial(FactorialShifts::Table(t.clone())),
                None => Preset::Factorial(FactorialShifts::Affine {
                    offset: self.get("offset")?,
                    slope: self.get("slope")?,
                }),
            },
        })
    }
}

/// `scale·x − shift` as an index polynomial.
fn lin(scale: i64, shift: Rational) -> UniPoly {
    UniPoly::linear(int(scale), -shift)
}

fn bc_jacobi(p: &Rational, q: &Rational) -> CoeffSeq {
    let c = p + q * int(2);
    let one = int(1);
    let a_num = UniPoly::constant(-(int(2) * p * (&c + &one)));
    let a_den = lin(2, &c + &one).mul(&lin(2, &c - &one));
    let b_num = lin(2, int(0))
        .mul(&lin(2, q * int(2) + &one))
        .mul(&lin(2, p * int(2) + q * int(2) + &one))
        .mul(&lin(2, p * int(2) + q * int(4) + int(2)));
    let mid = lin(2, &c + &one);
    let b_den = lin(2, c.clone())
        .mul(&mid)
        .mul(&mid)
        .mul(&lin(2, &c + int(2)));
    CoeffSeq::closed_form(IndexFn::ratio(a_num, a_den), IndexFn::ratio(b_num, b_den))
        .with_family(Family::BcJacobi)
}

/// Builds the coefficient sequence of a preset.
pub fn build(preset: &Preset) -> CoeffSeq {
    match preset {
        Preset::Schur => CoeffSeq::closed_form(const_fn(0), const_fn(0)).with_family(Family::Schur),
        Preset::SoOdd => CoeffSeq::closed_form(
            const_fn(0).with_override(0, int(-1)),
            const_fn(1).with_override(0, int(0)),
        )
        .with_family(Family::SoOdd),
        Preset::SoEven => CoeffSeq::closed_form(const_fn(0), const_fn(1).with_override(1, int(2)))
            .with_family(Family::SoEven),
        Preset::Sp => CoeffSeq::closed_form(const_fn(0), const_fn(1)).with_family(Family::Sp),
        Preset::Factorial(FactorialShifts::Table(shifts)) => {
            CoeffSeq::table(shifts.clone(), vec![int(0); shifts.len()]).with_family(Family::Factorial)
        }
        Preset::Factorial(FactorialShifts::Affine { offset, slope }) => CoeffSeq::closed_form(
            IndexFn::polynomial(UniPoly::linear(slope.clone(), offset.clone())),
            const_fn(0),
        )
        .with_family(Family::Factorial),
        Preset::BcJacobi { p, q } => bc_jacobi(p, q),
    }
}

/// [`build`], then evaluates every `a(i)`, `b(i)` with `0 ≤ i ≤ i_max` and
/// fails with the first singular index.
pub fn build_probed(preset: &Preset, i_max: i64) -> Result<CoeffSeq> {
    let seq = build(preset);
    seq.probe(i_max)?;
    Ok(seq)
}

/// Largest coefficient index touched by both the bialternant and the
/// Jacobi–Trudy route for `λ` in `n` variables.
pub fn required_index_max(lambda: &Partition, n: usize) -> i64 {
    let lam1 = i64::from(lambda.part(1));
    let l = lambda.len() as i64;
    let bialt = lam1 + n as i64 - 2;
    let jt = lam1 + l.max(1) + n as i64 - 3;
    bialt.max(jt).max(0)
}

/// Character determinant in the row form
/// `(h_{λ_i−i+1}, h_{λ_i−i+2} + h_{λ_i−i}, …, h_{λ_i−i+j} + h_{λ_i−i+2−j}, …)`.
pub fn fh_character_det(ctx: &mut GschurContext, lambda: &Partition) -> Result<MultiPoly> {
    if !ctx.seq().family().is_classical_character() {
        return Err(Error::Contract(
            "the row-form character determinant needs an so_odd, so_even or sp context".into(),
        ));
    }
    if lambda.len() > ctx.n() {
        return Err(Error::Shape {
            len: lambda.len(),
            n: ctx.n(),
        });
    }
    let l = lambda.len();
    PolyMatrix::from_fn(l, l, ctx.n(), |i, j| {
        let k = i64::from(lambda.part(i + 1)) - i as i64;
        let j = j as i64;
        if j == 0 {
            ctx.h(k)
        } else {
            Ok(&ctx.h(k + j)? + &ctx.h(k - j)?)
        }
    })?
    .determinant()
}

/// The recursion variants `a(0) ∈ {0, −1}`, `b(1) ∈ {1, 2}` over `a ≡ 0, b ≡ 1`.
fn boundary_variants() -> Vec<CoeffSeq> {
    let mut out = Vec::new();
    for a0 in [0, -1] {
        for b1 in [1, 2] {
            out.push(CoeffSeq::closed_form(
                const_fn(0).with_override(0, int(a0)),
                const_fn(1).with_override(1, int(b1)),
            ));
        }
    }
    out
}

/// Checks, for one base context, that every `h_i^{(r)}` with `r > 0` in the
/// Jacobi–Trudy matrix of `λ` is the same under all four boundary variants of
/// the recursion coefficients.
pub fn boundary_insensitive_in(ctx: &mut GschurContext, lambda: &Partition) -> Result<bool> {
    if lambda.len() > ctx.n() {
        return Err(Error::Shape {
            len: lambda.len(),
            n: ctx.n(),
        });
    }
    let variants = boundary_variants();
    for j in 0..lambda.len() {
        let i = i64::from(lambda.part(j + 1)) - j as i64;
        for r in 1..lambda.len() as u32 {
            let reference = ctx.h_shift_under(&variants[0], i, r)?;
            for v in &variants[1..] {
                if ctx.h_shift_under(v, i, r)? != reference {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// [`boundary_insensitive_in`] for each classical base (`so_odd`, `so_even`, `sp`).
pub fn boundary_insensitivity(lambda: &Partition, n: usize) -> Result<bool> {
    for base in [Preset::SoOdd, Preset::SoEven, Preset::Sp] {
        let mut ctx = GschurContext::new(n, build(&base))?;
        if !boundary_insensitive_in(&mut ctx, lambda)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `φ_i(x + x^{−1})` as a Laurent polynomial `{exponent: coefficient}`.
///
/// Works in the ring `Q[x, y]` and then identifies `x^a y^b` with `x^{a−b}`,
/// which imposes `x y = 1`.
pub fn laurent_phi(seq: &CoeffSeq, i: i64) -> Result<BTreeMap<i64, Rational>> {
    let phi = crate::coeffseq::UniPolySeq::new(seq.clone()).phi_coeffs(i)?;
    let z = &MultiPoly::var(2, 0) + &MultiPoly::var(2, 1);
    let composed = phi.compose(&z);
    let mut out: BTreeMap<i64, Rational> = BTreeMap::new();
    for (m, c) in composed.terms() {
        let e = i64::from(m.exponent(0)) - i64::from(m.exponent(1));
        *out.entry(e).or_insert_with(|| int(0)) += c;
    }
    out.retain(|_, c| *c != int(0));
    Ok(out)
}

/// The classical closed form of `φ_i(x + x^{−1})` for the character presets:
/// `x^i + … + x^{−i}` (so_odd), `x^i + x^{−i}` (so_even, `i ≥ 1`) and
/// `x^i + x^{i−2} + … + x^{−i}` (sp).
pub fn character_laurent(preset: &Preset, i: u32) -> Option<BTreeMap<i64, Rational>> {
    let i = i64::from(i);
    let exps: Vec<i64> = match preset {
        Preset::SoOdd => (-i..=i).collect(),
        Preset::SoEven if i == 0 => vec![0],
        Preset::SoEven => vec![-i, i],
        Preset::Sp => (0..=i).map(|k| i - 2 * k).collect(),
        _ => return None,
    };
    Some(exps.into_iter().map(|e| (e, int(1))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Which;
    use crate::exactalg::rat;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn preset_values() {
        let s = build(&Preset::Schur);
        assert_eq!((s.a(7).unwrap(), s.b(7).unwrap()), (int(0), int(0)));
        let so = build(&Preset::SoOdd);
        assert_eq!(so.a(0).unwrap(), int(-1));
        assert_eq!(so.b(0).unwrap(), int(0));
        assert_eq!(so.a(3).unwrap(), int(0));
        assert_eq!(so.b(3).unwrap(), int(1));
        let se = build(&Preset::SoEven);
        assert_eq!(se.b(1).unwrap(), int(2));
        assert_eq!(se.b(2).unwrap(), int(1));
        assert_eq!(build(&Preset::Sp).b(5).unwrap(), int(1));
    }

    #[test]
    fn bc_jacobi_substitution() {
        let bc = build(&Preset::BcJacobi { p: int(1), q: int(1) });
        // −2·1·4 / ((6−4)(6−2))
        assert_eq!(bc.a(3).unwrap(), int(-1));
        // 2x(2x−3)(2x−5)(2x−8) / ((2x−3)(2x−4)²(2x−5)) at x = 3
        assert_eq!(bc.b(3).unwrap(), rat(6 * 3 * -2, 3 * 4));
        assert_eq!(
            bc.a(1),
            Err(Error::Pole {
                which: Which::A,
                at: int(1)
            })
        );
    }

    #[test]
    fn pole_probing_is_deterministic() {
        let pre = Preset::BcJacobi { p: int(1), q: int(2) };
        let e1 = build_probed(&pre, 6).unwrap_err();
        let e2 = build_probed(&pre, 6).unwrap_err();
        assert_eq!(e1, e2);
        assert_eq!(
            e1,
            Error::Pole {
                which: Which::A,
                at: int(2)
            }
        );
        assert!(build_probed(&pre, 1).is_ok());
    }

    #[test]
    fn factorial_presets() {
        let t = build(&Preset::Factorial(FactorialShifts::Table(vec![int(1), int(2)])));
        assert_eq!(t.b(1).unwrap(), int(0));
        assert!(t.a(2).is_err());
        let aff = build(&Preset::Factorial(FactorialShifts::Affine {
            offset: int(0),
            slope: int(1),
        }));
        assert_eq!(aff.a(9).unwrap(), int(9));
        assert_eq!(aff.eval_at(Which::A, &rat(1, 2)).unwrap(), rat(1, 2));
    }

    #[test]
    fn spec_parameters() {
        let spec = PresetSpec::new("bc-jacobi".parse().unwrap())
            .param("p", int(3))
            .param("q", int(1));
        assert_eq!(
            spec.to_preset().unwrap(),
            Preset::BcJacobi { p: int(3), q: int(1) }
        );
        assert!(PresetSpec::new(PresetName::BcJacobi).to_preset().is_err());
        assert!("nope".parse::<PresetName>().is_err());
    }

    #[test]
    fn fh_rejects_non_classical_context() {
        let mut ctx = GschurContext::new(2, build(&Preset::Schur)).unwrap();
        assert!(matches!(
            fh_character_det(&mut ctx, &p(&[1])),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn fh_single_row_is_h() {
        let mut ctx = GschurContext::new(2, build(&Preset::Sp)).unwrap();
        assert_eq!(fh_character_det(&mut ctx, &p(&[3])).unwrap(), ctx.h(3).unwrap());
    }

    #[test]
    fn fh_examples() {
        let mut ctx = GschurContext::new(3, build(&Preset::Sp)).unwrap();
        let lam = p(&[2, 1]);
        assert_eq!(
            fh_character_det(&mut ctx, &lam).unwrap(),
            ctx.jacobi_trudy(&lam).unwrap()
        );
        let mut ctx = GschurContext::new(2, build(&Preset::SoOdd)).unwrap();
        let lam = p(&[1, 1]);
        assert_eq!(
            fh_character_det(&mut ctx, &lam).unwrap(),
            ctx.bialternant(&lam).unwrap()
        );
    }

    #[test]
    fn boundary_examples() {
        assert!(boundary_insensitivity(&p(&[2, 2]), 3).unwrap());
        // h_i themselves differ between presets.
        let mut sp = GschurContext::new(3, build(&Preset::Sp)).unwrap();
        let mut se = GschurContext::new(3, build(&Preset::SoEven)).unwrap();
        assert_ne!(sp.h(2).unwrap(), se.h(2).unwrap());
    }

    #[test]
    fn laurent_forms() {
        let sp = build(&Preset::Sp);
        let got = laurent_phi(&sp, 2).unwrap();
        let want: BTreeMap<i64, Rational> = [(-2, int(1)), (0, int(1)), (2, int(1))].into();
        assert_eq!(got, want);
    }

    #[test]
    fn character_laurent_matches_recurrence() {
        for preset in [Preset::SoOdd, Preset::SoEven, Preset::Sp] {
            let seq = build(&preset);
            for i in 0..=6u32 {
                assert_eq!(
                    laurent_phi(&seq, i64::from(i)).unwrap(),
                    character_laurent(&preset, i).unwrap()
                );
            }
        }
        assert!(character_laurent(&Preset::Schur, 2).is_none());
    }
}

//! Recurrence coefficients `a(i)`, `b(i)` and the polynomial sequence they
//! generate,
//!
//! ```text
//! φ_{-1} = 0,  φ_0 = 1,  φ_{i+1}(z) = (z − a(i)) φ_i(z) − b(i) φ_{i−1}(z).
//! ```
//!
//! Coefficients at negative indices never enter `φ_i`; they only matter for
//! the shifted families `h_i^{(r)}`, and are supplied by a
//! [`NegativeExtension`] policy (zero by default). `b(0)` multiplies
//! `φ_{-1} = 0` and is never evaluated by [`UniPolySeq`].

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::json;

use crate::error::{Error, Result, Which};
use crate::exactalg::{as_i64, int, parse_rational, rat, MultiPoly, Rational, UniPoly};

/// Which named family a sequence was built from; `Custom` for anything else.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Custom,
    Schur,
    SoOdd,
    SoEven,
    Sp,
    Factorial,
    BcJacobi,
}

impl Family {
    pub fn is_classical_character(self) -> bool {
        matches!(self, Family::SoOdd | Family::SoEven | Family::Sp)
    }
}

/// A rational function of the index, with optional point overrides at
/// integer indices (e.g. `a(0) = −1` for the odd orthogonal family).
#[derive(Debug, Clone, PartialEq)]
pub struct IndexFn {
    num: UniPoly,
    den: UniPoly,
    overrides: BTreeMap<i64, Rational>,
}

impl IndexFn {
    pub fn constant(c: Rational) -> Self {
        Self::polynomial(UniPoly::constant(c))
    }

    pub fn polynomial(p: UniPoly) -> Self {
        Self::ratio(p, UniPoly::one())
    }

    pub fn ratio(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        IndexFn {
            num,
            den,
            overrides: BTreeMap::new(),
        }
    }

    pub fn with_override(mut self, index: i64, value: Rational) -> Self {
        self.overrides.insert(index, value);
        self
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    /// `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        if let Some(v) = as_i64(x).and_then(|i| self.overrides.get(&i)) {
            return Some(v.clone());
        }
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    fn describe(&self) -> String {
        let mut s = if self.den == UniPoly::one() {
            self.num.to_string()
        } else {
            format!("({}) / ({})", self.num, self.den)
        };
        s = s.replace("x1", "i");
        for (i, v) in &self.overrides {
            s.push_str(&format!("; [{i}] = {v}"));
        }
        s
    }
}

/// What happens when a table-backed sequence is asked for an index past its end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Beyond {
    Error,
    Zero,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SeqKind {
    Table {
        a: Vec<Rational>,
        b: Vec<Rational>,
        beyond: Beyond,
    },
    ClosedForm {
        a: IndexFn,
        b: IndexFn,
    },
}

/// Values used for `a(i)`, `b(i)` at `i < 0`.
#[derive(Debug, Clone, PartialEq, Default)]
pub enum NegativeExtension {
    #[default]
    Zero,
    /// `a[k]`, `b[k]` give the values at index `−(k+1)`; zero past the end.
    Table { a: Vec<Rational>, b: Vec<Rational> },
}

impl NegativeExtension {
    fn value(&self, which: Which, index: i64) -> Rational {
        debug_assert!(index < 0);
        match self {
            NegativeExtension::Zero => Rational::zero(),
            NegativeExtension::Table { a, b } => {
                let table = if which == Which::A { a } else { b };
                table
                    .get((-index - 1) as usize)
                    .cloned()
                    .unwrap_or_else(Rational::zero)
            }
        }
    }
}

/// The coefficient pair `(a, b)` as total functions on the integers.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffSeq {
    kind: SeqKind,
    negative: NegativeExtension,
    family: Family,
}

impl CoeffSeq {
    /// Table-backed sequence; indices past the table are an error.
    pub fn table(a: Vec<Rational>, b: Vec<Rational>) -> Self {
        Self::table_with(a, b, Beyond::Error)
    }

    pub fn table_with(a: Vec<Rational>, b: Vec<Rational>, beyond: Beyond) -> Self {
        CoeffSeq {
            kind: SeqKind::Table { a, b, beyond },
            negative: NegativeExtension::Zero,
            family: Family::Custom,
        }
    }

    pub fn closed_form(a: IndexFn, b: IndexFn) -> Self {
        CoeffSeq {
            kind: SeqKind::ClosedForm { a, b },
            negative: NegativeExtension::Zero,
            family: Family::Custom,
        }
    }

    pub fn with_negative(mut self, negative: NegativeExtension) -> Self {
        self.negative = negative;
        self
    }

    pub fn with_family(mut self, family: Family) -> Self {
        self.family = family;
        self
    }

    pub fn kind(&self) -> &SeqKind {
        &self.kind
    }

    pub fn negative(&self) -> &NegativeExtension {
        &self.negative
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn is_closed_form(&self) -> bool {
        matches!(self.kind, SeqKind::ClosedForm { .. })
    }

    /// `a(i)` or `b(i)` at an integer index.
    pub fn coeff(&self, which: Which, i: i64) -> Result<Rational> {
        if i < 0 {
            return Ok(self.negative.value(which, i));
        }
        match &self.kind {
            SeqKind::Table { a, b, beyond } => {
                let table = if which == Which::A { a } else { b };
                match table.get(i as usize) {
                    Some(v) => Ok(v.clone()),
                    None if *beyond == Beyond::Zero => Ok(Rational::zero()),
                    None => Err(Error::OutOfTable {
                        which,
                        index: i,
                        len: table.len(),
                    }),
                }
            }
            SeqKind::ClosedForm { a, b } => {
                let f = if which == Which::A { a } else { b };
                f.eval(&int(i)).ok_or(Error::Pole { which, at: int(i) })
            }
        }
    }

    pub fn a(&self, i: i64) -> Result<Rational> {
        self.coeff(Which::A, i)
    }

    pub fn b(&self, i: i64) -> Result<Rational> {
        self.coeff(Which::B, i)
    }

    /// Evaluates at an arbitrary rational argument. Integer arguments follow
    /// [`CoeffSeq::coeff`]; non-integers need a closed form.
    pub fn eval_at(&self, which: Which, x: &Rational) -> Result<Rational> {
        if let Some(i) = as_i64(x) {
            return self.coeff(which, i);
        }
        match &self.kind {
            SeqKind::ClosedForm { a, b } => {
                let f = if which == Which::A { a } else { b };
                f.eval(x).ok_or_else(|| Error::Pole {
                    which,
                    at: x.clone(),
                })
            }
            SeqKind::Table { .. } => Err(Error::Contract(
                "a table-backed sequence cannot be evaluated at a non-integer index".into(),
            )),
        }
    }

    /// Evaluates `a(i)` and `b(i)` for `0 ≤ i ≤ i_max`, failing on the first
    /// singular index (all `a` before `b` at each index).
    pub fn probe(&self, i_max: i64) -> Result<()> {
        for i in 0..=i_max {
            self.a(i)?;
            self.b(i)?;
        }
        Ok(())
    }

    /// JSON description used in counterexamples and for sequence files.
    /// Closed forms are listed by formula plus values on `0..=max_index`.
    pub fn to_json(&self, max_index: i64) -> serde_json::Value {
        let list = |v: &[Rational]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
        let negative = match &self.negative {
            NegativeExtension::Zero => json!("zero"),
            NegativeExtension::Table { a, b } => json!({"a": list(a), "b": list(b)}),
        };
        match &self.kind {
            SeqKind::Table { a, b, .. } => json!({"a": list(a), "b": list(b), "negative": negative}),
            SeqKind::ClosedForm { a, b } => {
                let values = |which| -> Vec<String> {
                    (0..=max_index)
                        .map(|i| match self.coeff(which, i) {
                            Ok(v) => v.to_string(),
                            Err(_) => "pole".to_string(),
                        })
                        .collect()
                };
                json!({
                    "a_formula": a.describe(),
                    "b_formula": b.describe(),
                    "a": values(Which::A),
                    "b": values(Which::B),
                    "negative": negative,
                })
            }
        }
    }

    /// Reads the sequence-file format
    /// `{"a": ["0", "1", "-1/2"], "b": [...], "negative": "zero"}`; the
    /// `negative` field may also be a table `{"a": [...], "b": [...]}`.
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum NegJson {
            Name(String),
            Table { a: Vec<String>, b: Vec<String> },
        }
        #[derive(Deserialize)]
        struct SeqJson {
            a: Vec<String>,
            b: Vec<String>,
            #[serde(default)]
            negative: Option<NegJson>,
        }
        let parsed: SeqJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let parse_all =
            |v: &[String]| v.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>();
        let negative = match parsed.negative {
            None => NegativeExtension::Zero,
            Some(NegJson::Name(n)) if n == "zero" => NegativeExtension::Zero,
            Some(NegJson::Name(n)) => {
                return Err(Error::Parse(format!("unknown negative extension {n:?}")))
            }
            Some(NegJson::Table { a, b }) => NegativeExtension::Table {
                a: parse_all(&a)?,
                b: parse_all(&b)?,
            },
        };
        Ok(CoeffSeq::table(parse_all(&parsed.a)?, parse_all(&parsed.b)?).with_negative(negative))
    }
}

/// Small-height random rational `p/q`, `|p| ≤ 9`, `1 ≤ q ≤ 4`.
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

fn random_nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let r = random_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Seeded random coefficient table of the given length.
pub fn random_table(seed: u64, len: usize) -> CoeffSeq {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = (0..len).map(|_| random_rational(&mut rng)).collect();
    let b = (0..len).map(|_| random_rational(&mut rng)).collect();
    CoeffSeq::table(a, b)
}

/// Seeded nonzero negative-index extension covering indices `−1..=−len`.
pub fn random_extension(seed: u64, len: usize) -> NegativeExtension {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_e47e);
    NegativeExtension::Table {
        a: (0..len).map(|_| random_nonzero_rational(&mut rng)).collect(),
        b: (0..len).map(|_| random_nonzero_rational(&mut rng)).collect(),
    }
}

/// Seeded closed form with affine `a(i)` and `b(i)`, usable at any rational index.
pub fn random_affine(seed: u64) -> CoeffSeq {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x00af_f10e);
    let mut affine = || {
        let offset = random_rational(&mut rng);
        let slope = random_rational(&mut rng);
        IndexFn::polynomial(UniPoly::linear(slope, offset))
    };
    let a = affine();
    let b = affine();
    CoeffSeq::closed_form(a, b)
}

/// Memoized `φ_i` for one coefficient sequence.
///
/// Single-owner: evaluation fills the memo through `&mut self`.
#[derive(Debug, Clone)]
pub struct UniPolySeq {
    seq: CoeffSeq,
    memo: Vec<UniPoly>,
}

impl UniPolySeq {
    pub fn new(seq: CoeffSeq) -> Self {
        UniPolySeq {
            seq,
            memo: vec![UniPoly::one()],
        }
    }

    pub fn seq(&self) -> &CoeffSeq {
        &self.seq
    }

    /// `φ_i` as a dense univariate polynomial; `i ≥ −1`.
    pub fn phi_coeffs(&mut self, i: i64) -> Result<UniPoly> {
        if i < -1 {
            return Err(Error::Contract(format!("phi index {i} below -1")));
        }
        if i == -1 {
            return Ok(UniPoly::zero());
        }
        let i = i as usize;
        while self.memo.len() <= i {
            let k = self.memo.len() - 1;
            let cur = &self.memo[k];
            let shifted = cur.shift_up().sub(&cur.scale(&self.seq.a(k as i64)?));
            let next = if k == 0 {
                shifted
            } else {
                shifted.sub(&self.memo[k - 1].scale(&self.seq.b(k as i64)?))
            };
            self.memo.push(next);
        }
        Ok(self.memo[i].clone())
    }

    /// `φ_i(z)` as an arity-1 polynomial.
    pub fn phi(&mut self, i: i64) -> Result<MultiPoly> {
        Ok(self.phi_coeffs(i)?.to_multi(1, 0))
    }
}

/// Constant index function helper.
pub fn const_fn(c: i64) -> IndexFn {
    IndexFn::constant(int(c))
}

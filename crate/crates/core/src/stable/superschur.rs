use std::collections::HashMap;

use num_traits::Zero;

use super::{gschur_function, stable_coefficients};
use crate::coeffseq::CoeffSeq;
use crate::error::{Error, Result, Which};
use crate::exactalg::{int, Monomial, MultiPoly, PolyMatrix, Rational};
use crate::partitions::Partition;

/// `n` even variables `x1..xn` followed by `m` odd variables `y1..ym`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuperAlphabet {
    pub n: usize,
    pub m: usize,
}

impl SuperAlphabet {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n + m == 0 {
            return Err(Error::Contract("the alphabet needs at least one variable".into()));
        }
        Ok(SuperAlphabet { n, m })
    }

    pub fn arity(&self) -> usize {
        self.n + self.m
    }

    pub fn superdimension(&self) -> i64 {
        self.n as i64 - self.m as i64
    }

    /// `x1^k + … + xn^k − y1^k − … − ym^k`.
    pub fn power_sum(&self, k: u32) -> MultiPoly {
        let arity = self.arity();
        MultiPoly::from_terms(
            arity,
            (0..arity).map(|v| {
                let c = if v < self.n { int(1) } else { int(-1) };
                (Monomial::var_pow(arity, v, k), c)
            }),
        )
    }
}

/// `h_0, …, h_max` of the super alphabet, from the super power sums by
/// Newton's identities `k h_k = Σ_{j=1}^{k} p_j h_{k−j}`.
pub fn super_complete(alphabet: &SuperAlphabet, max: u32) -> Vec<MultiPoly> {
    let arity = alphabet.arity();
    let p: Vec<MultiPoly> = (0..=max).map(|k| alphabet.power_sum(k)).collect();
    let mut h = vec![MultiPoly::one(arity)];
    for k in 1..=max as usize {
        let mut acc = MultiPoly::zero(arity);
        for j in 1..=k {
            acc = &acc + &(&p[j] * &h[k - j]);
        }
        h.push(acc.scale(&int(k as i64).recip()));
    }
    h
}

/// Classical super Schur polynomial `S_μ(x/y) = det[h_{μ_i − i + j}(x/y)]`.
pub fn super_schur_classical(mu: &Partition, alphabet: &SuperAlphabet) -> Result<MultiPoly> {
    let l = mu.len();
    let top = mu.part(1) + l as u32;
    let h = super_complete(alphabet, top);
    let arity = alphabet.arity();
    PolyMatrix::from_fn(l, l, arity, |i, j| {
        let idx = i64::from(mu.part(i + 1)) - i as i64 + j as i64;
        Ok(if idx < 0 {
            MultiPoly::zero(arity)
        } else {
            h[idx as usize].clone()
        })
    })?
    .determinant()
}

/// Generalized super Schur polynomial: `Σ_μ c_{λ,μ}(n − m) S_μ(x/y)`.
pub fn super_schur(
    lambda: &Partition,
    seq: &CoeffSeq,
    alphabet: &SuperAlphabet,
    degree_bound: usize,
) -> Result<MultiPoly> {
    let d = int(alphabet.superdimension());
    let mut acc = MultiPoly::zero(alphabet.arity());
    for (mu, f) in stable_coefficients(lambda, seq, degree_bound)? {
        let c = f.eval(&d)?;
        if !c.is_zero() {
            acc = &acc + &super_schur_classical(&mu, alphabet)?.scale(&c);
        }
    }
    Ok(acc)
}

/// Both sides of the dimension-`d` Jacobi–Trudy identity, realized in
/// `n_eval` variables: the determinant of `h^{(k−1)}_{λ_j−j+1}` built with
/// the recursion at `a(i+d−1)`, `b(i+d−1)`, and `S_λ(x|a,b;d)` itself.
pub fn jt_infinite_sides(
    lambda: &Partition,
    seq: &CoeffSeq,
    d_value: &Rational,
    n_eval: usize,
    degree_bound: usize,
) -> Result<(MultiPoly, MultiPoly)> {
    if !seq.is_closed_form() {
        return Err(Error::Contract(
            "the dimension-d recursion needs closed-form coefficients".into(),
        ));
    }
    let mut rows: HashMap<i64, MultiPoly> = HashMap::new();
    let mut memo: HashMap<(i64, u32), MultiPoly> = HashMap::new();

    struct Shift<'a> {
        seq: &'a CoeffSeq,
        d: &'a Rational,
        n_eval: usize,
        degree_bound: usize,
    }

    impl Shift<'_> {
        fn base(&self, rows: &mut HashMap<i64, MultiPoly>, i: i64) -> Result<MultiPoly> {
            if i < 0 {
                return Ok(MultiPoly::zero(self.n_eval));
            }
            if let Some(p) = rows.get(&i) {
                return Ok(p.clone());
            }
            let p = gschur_function(&Partition::row(i as u32), self.seq, self.d, self.degree_bound)?
                .realize(self.n_eval)?;
            rows.insert(i, p.clone());
            Ok(p)
        }

        fn get(
            &self,
            rows: &mut HashMap<i64, MultiPoly>,
            memo: &mut HashMap<(i64, u32), MultiPoly>,
            i: i64,
            r: u32,
        ) -> Result<MultiPoly> {
            if i + i64::from(r) < 0 {
                return Ok(MultiPoly::zero(self.n_eval));
            }
            if r == 0 {
                return self.base(rows, i);
            }
            if let Some(p) = memo.get(&(i, r)) {
                return Ok(p.clone());
            }
            let x = int(i - 1) + self.d;
            let mut acc = self.get(rows, memo, i + 1, r - 1)?;
            let mid = self.get(rows, memo, i, r - 1)?;
            if !mid.is_zero() {
                acc = &acc + &mid.scale(&self.seq.eval_at(Which::A, &x)?);
            }
            let low = self.get(rows, memo, i - 1, r - 1)?;
            if !low.is_zero() {
                acc = &acc + &low.scale(&self.seq.eval_at(Which::B, &x)?);
            }
            memo.insert((i, r), acc.clone());
            Ok(acc)
        }
    }

    let shift = Shift {
        seq,
        d: d_value,
        n_eval,
        degree_bound,
    };
    let l = lambda.len();
    let lhs = PolyMatrix::from_fn(l, l, n_eval, |j, k| {
        let i = i64::from(lambda.part(j + 1)) - j as i64;
        shift.get(&mut rows, &mut memo, i, k as u32)
    })?
    .determinant()?;
    let rhs = gschur_function(lambda, seq, d_value, degree_bound)?.realize(n_eval)?;
    Ok((lhs, rhs))
}

/// True iff the two sides of [`jt_infinite_sides`] agree.
pub fn jt_infinite_check(
    lambda: &Partition,
    seq: &CoeffSeq,
    d_value: &Rational,
    n_eval: usize,
    degree_bound: usize,
) -> Result<bool> {
    let (lhs, rhs) = jt_infinite_sides(lambda, seq, d_value, n_eval, degree_bound)?;
    Ok(lhs == rhs)
}

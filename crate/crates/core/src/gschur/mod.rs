//! The generalized Schur engine.
//!
//! A [`GschurContext`] fixes the number of variables `n` and a coefficient
//! sequence, and memoizes `φ_k`, the one-row polynomials `h_i` and the
//! shifted families `h_i^{(r)}` defined by
//!
//! ```text
//! h_i^{(0)} = h_i,
//! h_i^{(r+1)} = h_{i+1}^{(r)} + a(i+n−1) h_i^{(r)} + b(i+n−1) h_{i−1}^{(r)}.
//! ```
//!
//! `S_λ` is available three ways: the bialternant `det[φ_{λ_j+n−j}(x_i)] / Δ_n`,
//! the Jacobi–Trudy determinant `det[h^{(k−1)}_{λ_j−j+1}]`, and the Giambelli
//! determinant of hook polynomials.

mod expansion;
mod giambelli;

pub use expansion::{alternation, permutations_with_sign};

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::One;

use crate::coeffseq::{CoeffSeq, UniPolySeq};
use crate::error::{Error, Result};
use crate::exactalg::{Monomial, MultiPoly, PolyMatrix, Rational, UniPoly};
use crate::partitions::Partition;

type ShiftMemo = HashMap<(i64, u32), MultiPoly>;

/// Sum of all monomials of degree `k` in `n` variables.
fn complete_homogeneous(n: usize, k: u32) -> MultiPoly {
    fn rec(var: usize, rest: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var + 1 == exps.len() {
            exps[var] = rest;
            out.push(Monomial::from_exponents(exps));
            return;
        }
        for e in (0..=rest).rev() {
            exps[var] = e;
            rec(var + 1, rest - e, exps, out);
        }
    }
    let mut monomials = Vec::new();
    rec(0, k, &mut vec![0; n], &mut monomials);
    MultiPoly::from_terms(n, monomials.into_iter().map(|m| (m, Rational::one())))
}

/// Single-owner computation context for `n` variables and one sequence.
#[derive(Debug, Clone)]
pub struct GschurContext {
    n: usize,
    seq: Arc<CoeffSeq>,
    phis: UniPolySeq,
    vandermonde: Option<MultiPoly>,
    memo_h: HashMap<i64, MultiPoly>,
    memo_hr: ShiftMemo,
    smaller: Option<Box<GschurContext>>,
}

impl GschurContext {
    pub fn new(n: usize, seq: CoeffSeq) -> Result<Self> {
        if n == 0 {
            return Err(Error::Contract("at least one variable is required".into()));
        }
        Ok(GschurContext {
            n,
            phis: UniPolySeq::new(seq.clone()),
            seq: Arc::new(seq),
            vandermonde: None,
            memo_h: HashMap::new(),
            memo_hr: HashMap::new(),
            smaller: None,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn seq(&self) -> &CoeffSeq {
        &self.seq
    }

    fn check_shape(&self, lambda: &Partition) -> Result<()> {
        if lambda.len() > self.n {
            Err(Error::Shape {
                len: lambda.len(),
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// `φ_k` as a univariate polynomial.
    pub fn phi(&mut self, k: i64) -> Result<UniPoly> {
        self.phis.phi_coeffs(k)
    }

    /// `φ_k(x_{var+1})` in the `n`-variable ring.
    pub fn phi_in(&mut self, k: i64, var: usize) -> Result<MultiPoly> {
        Ok(self.phis.phi_coeffs(k)?.to_multi(self.n, var))
    }

    /// `Δ_n(x) = ∏_{i<j} (x_i − x_j)`, with `Δ_1 = 1`.
    pub fn vandermonde(&mut self) -> MultiPoly {
        let n = self.n;
        self.vandermonde
            .get_or_insert_with(|| {
                let mut acc = MultiPoly::one(n);
                for i in 0..n {
                    for j in i + 1..n {
                        acc = &acc * &(&MultiPoly::var(n, i) - &MultiPoly::var(n, j));
                    }
                }
                acc
            })
            .clone()
    }

    /// Weyl-type definition: `det[φ_{λ_j + n − j}(x_i)]` divided exactly by `Δ_n`.
    pub fn bialternant(&mut self, lambda: &Partition) -> Result<MultiPoly> {
        let padded = lambda.padded(self.n)?;
        let n = self.n;
        if n == 1 {
            return self.phi_in(i64::from(padded[0]), 0);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (j, &part) in padded.iter().enumerate() {
            let degree = i64::from(part) + (n - 1 - j) as i64;
            let phi = self.phi(degree)?;
            entries.extend((0..n).map(|var| phi.to_multi(n, var)));
        }
        let numerator = PolyMatrix::new(n, n, n, entries)?.determinant()?;
        numerator.exact_divide(&self.vandermonde())
    }

    /// `h_i = S_{(i)}`, zero for negative `i`.
    ///
    /// Rows `2..n` of the bialternant are monic and triangular in `z`, so
    /// `h_i = Σ_k [z^{k+n−1}] φ_{i+n−1} · h_k(x)` with the classical complete
    /// homogeneous `h_k`. This avoids the exact division by `Δ_n`.
    pub fn h(&mut self, i: i64) -> Result<MultiPoly> {
        if i < 0 {
            return Ok(MultiPoly::zero(self.n));
        }
        if let Some(p) = self.memo_h.get(&i) {
            return Ok(p.clone());
        }
        let n = self.n;
        let phi = self.phi(i + n as i64 - 1)?;
        let mut acc = MultiPoly::zero(n);
        for k in 0..=i as usize {
            let c = phi.coeff(k + n - 1);
            acc.add_scaled(&complete_homogeneous(n, k as u32), &c);
        }
        self.memo_h.insert(i, acc.clone());
        Ok(acc)
    }

    /// `h_i^{(r)}` under this context's own coefficients.
    ///
    /// Any `r` is accepted; past `r ≤ i + 2n − 2` the value depends on the
    /// negative-index extension of the sequence.
    pub fn h_shift(&mut self, i: i64, r: u32) -> Result<MultiPoly> {
        let mut memo = std::mem::take(&mut self.memo_hr);
        let seq = Arc::clone(&self.seq);
        let out = self.shifted(&seq, &mut memo, i, r);
        self.memo_hr = memo;
        out
    }

    /// `h_i^{(r)}` built from this context's `h_i` but with the recursion
    /// coefficients taken from `recursion` instead.
    pub fn h_shift_under(&mut self, recursion: &CoeffSeq, i: i64, r: u32) -> Result<MultiPoly> {
        let mut memo = HashMap::new();
        self.shifted(recursion, &mut memo, i, r)
    }

    fn shifted(
        &mut self,
        coeffs: &CoeffSeq,
        memo: &mut ShiftMemo,
        i: i64,
        r: u32,
    ) -> Result<MultiPoly> {
        if i + i64::from(r) < 0 {
            return Ok(MultiPoly::zero(self.n));
        }
        if r == 0 {
            return self.h(i);
        }
        if let Some(p) = memo.get(&(i, r)) {
            return Ok(p.clone());
        }
        let index = i + self.n as i64 - 1;
        let mut acc = self.shifted(coeffs, memo, i + 1, r - 1)?;
        let mid = self.shifted(coeffs, memo, i, r - 1)?;
        // Coefficients multiplying a zero polynomial are never evaluated.
        if !mid.is_zero() {
            acc.add_scaled(&mid, &coeffs.a(index)?);
        }
        let low = self.shifted(coeffs, memo, i - 1, r - 1)?;
        if !low.is_zero() {
            acc.add_scaled(&low, &coeffs.b(index)?);
        }
        memo.insert((i, r), acc.clone());
        Ok(acc)
    }

    /// The `l × l` Jacobi–Trudy matrix with entries `h^{(k−1)}_{λ_j−j+1}`.
    pub fn jt_matrix(&mut self, lambda: &Partition) -> Result<PolyMatrix> {
        self.check_shape(lambda)?;
        let l = lambda.len();
        let n = self.n;
        PolyMatrix::from_fn(l, l, n, |j, k| {
            let i = i64::from(lambda.part(j + 1)) - j as i64;
            self.h_shift(i, k as u32)
        })
    }

    /// Generalized Jacobi–Trudy determinant.
    pub fn jacobi_trudy(&mut self, lambda: &Partition) -> Result<MultiPoly> {
        self.jt_matrix(lambda)?.determinant()
    }

    /// The context in `n − 1` variables over the same sequence, used for
    /// identities that strip `x1`.
    pub(crate) fn smaller(&mut self) -> Result<&mut GschurContext> {
        if self.n < 2 {
            return Err(Error::Contract("needs at least two variables".into()));
        }
        if self.smaller.is_none() {
            let ctx = GschurContext::new(self.n - 1, (*self.seq).clone())?;
            self.smaller = Some(Box::new(ctx));
        }
        Ok(self.smaller.as_mut().expect("just set"))
    }

    pub(crate) fn constant(&self, c: Rational) -> MultiPoly {
        MultiPoly::constant(self.n, c)
    }
}

use std::collections::BTreeMap;

use super::GschurContext;
use crate::error::{Error, Result};
use crate::exactalg::{sign, Monomial, MultiPoly, Rational};
use crate::partitions::Partition;

/// All permutations of `0..n` paired with their sign `±1`.
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = vec![(Vec::new(), 1i64)];
    for k in 0..n {
        let mut next = Vec::with_capacity(out.len() * (k + 1));
        for (perm, s) in &out {
            // Inserting k at position pos creates k − pos new inversions.
            for pos in 0..=k {
                let mut p = perm.clone();
                p.insert(pos, k);
                let flip = if (k - pos) % 2 == 0 { 1 } else { -1 };
                next.push((p, s * flip));
            }
        }
        out = next;
    }
    out
}

/// `{g} = Σ_w ε(w) g(x_{w(1)}, …, x_{w(n)})`.
pub fn alternation(g: &MultiPoly) -> MultiPoly {
    let n = g.arity();
    let mut acc = MultiPoly::zero(n);
    for (perm, s) in permutations_with_sign(n) {
        // g(x_{w(1)},…) renames variable i to w(i).
        acc = &acc + &g.permute(&perm).scale(&sign(i64::from(s < 0)));
    }
    acc
}

impl GschurContext {
    /// Coefficients `K_{λ,μ}` of `S_λ` in the monomial symmetric basis.
    pub fn monomial_expansion(&mut self, lambda: &Partition) -> Result<BTreeMap<Partition, Rational>> {
        let s = self.bialternant(lambda)?;
        let mut out = BTreeMap::new();
        for (m, c) in s.terms() {
            if m.is_dominant() {
                let mu = Partition::new(m.exponents().to_vec())?;
                out.insert(mu, c.clone());
            }
        }
        Ok(out)
    }

    /// `x1^{n−1} x2^{n−2} ⋯ xn^0`.
    pub fn staircase(&self) -> MultiPoly {
        let exps: Vec<u32> = (0..self.n).map(|k| (self.n - 1 - k) as u32).collect();
        MultiPoly::monomial(Monomial::from_exponents(&exps), Rational::from_integer(1.into()))
    }

    /// `h_i^{(r)}(x1..xn) − x1 h_i^{(r−1)}(x1..xn) − h_{i+1}^{(r−1)}(x2..xn)`,
    /// which vanishes on the admissible range `1 ≤ r ≤ i + 2n − 2`.
    pub fn lemma_residual(&mut self, i: i64, r: u32) -> Result<MultiPoly> {
        let n = self.n;
        if n < 2 {
            return Err(Error::Contract("the lemma needs n ≥ 2".into()));
        }
        if r == 0 || i64::from(r) > i + 2 * n as i64 - 2 {
            return Err(Error::Contract(format!(
                "(i, r) = ({i}, {r}) outside 1 ≤ r ≤ i + 2n − 2"
            )));
        }
        let full = self.h_shift(i, r)?;
        let prev = self.h_shift(i, r - 1)?;
        let tail = self.smaller()?.h_shift(i + 1, r - 1)?.embed(n, 1);
        Ok(&(&full - &(&MultiPoly::var(n, 0) * &prev)) - &tail)
    }

    /// Both sides of the alternation identity
    /// `{h_i^{(r)} x^δ} = {x1^r φ_{i+n−1}(x1) x2^{n−2} ⋯ xn^0}`.
    pub fn alternation_claim(&mut self, i: i64, r: u32) -> Result<(MultiPoly, MultiPoly)> {
        let n = self.n;
        let lhs = alternation(&(&self.h_shift(i, r)? * &self.staircase()));
        let mut tail_exps = vec![0u32; n];
        for (k, e) in tail_exps.iter_mut().enumerate().skip(1) {
            *e = (n - 1 - k) as u32;
        }
        tail_exps[0] = r;
        let rest = MultiPoly::monomial(
            Monomial::from_exponents(&tail_exps),
            Rational::from_integer(1.into()),
        );
        let degree = i + n as i64 - 1;
        let phi = if degree < 0 {
            MultiPoly::zero(n)
        } else {
            self.phi_in(degree, 0)?
        };
        let rhs = alternation(&(&phi * &rest));
        Ok((lhs, rhs))
    }
}

use super::GschurContext;
use crate::error::{Error, Result};
use crate::exactalg::{sign, MultiPoly, PolyMatrix};
use crate::partitions::Partition;

impl GschurContext {
    /// The `(v+1) × (v+1)` Jacobi–Trudy determinant of the hook `(u|v)`,
    /// rows indexed `u+1, 0, −1, …, 1−v`, evaluated for any integer `u`.
    pub fn hook_determinant(&mut self, u: i64, v: u32) -> Result<MultiPoly> {
        let size = v as usize + 1;
        let n = self.n;
        PolyMatrix::from_fn(size, size, n, |row, col| {
            let i = if row == 0 { u + 1 } else { 1 - row as i64 };
            self.h_shift(i, col as u32)
        })?
        .determinant()
    }

    /// Hook polynomial `S_{(u|v)} = S_{(u+1, 1^v)}`, extended to negative `u`
    /// by `S_{(u|v)} = (−1)^v` when `u + v = −1` and `0` otherwise.
    pub fn hook(&mut self, u: i64, v: u32) -> Result<MultiPoly> {
        if u < 0 {
            return Ok(if u + i64::from(v) == -1 {
                self.constant(sign(i64::from(v)))
            } else {
                MultiPoly::zero(self.n)
            });
        }
        if v as usize + 1 > self.n {
            return Err(Error::Shape {
                len: v as usize + 1,
                n: self.n,
            });
        }
        self.hook_determinant(u, v)
    }

    /// The `j × (j+1)` matrix `H^{(j)}` with rows `h_0^{(·)}, h_{−1}^{(·)}, …, h_{1−j}^{(·)}`.
    pub fn h_matrix(&mut self, j: u32) -> Result<PolyMatrix> {
        let n = self.n;
        PolyMatrix::from_fn(j as usize, j as usize + 1, n, |row, col| {
            self.h_shift(-(row as i64), col as u32)
        })
    }

    /// `Δ_i^{(j)}`: `(−1)^{i−1}` times the minor of `H^{(j)}` without column `i`
    /// (1-based); zero when `i > j + 1`.
    pub fn delta_minor(&mut self, i: u32, j: u32) -> Result<MultiPoly> {
        if i == 0 {
            return Err(Error::Contract("delta_minor column index is 1-based".into()));
        }
        if i > j + 1 {
            return Ok(MultiPoly::zero(self.n));
        }
        let minor = self.h_matrix(j)?.without_col(i as usize - 1).determinant()?;
        Ok(minor.scale(&sign(i64::from(i) - 1)))
    }

    /// Giambelli determinant `det[S_{(λ_i − i | λ'_j − j)}]` over the diagonal.
    pub fn giambelli(&mut self, lambda: &Partition) -> Result<MultiPoly> {
        self.check_shape(lambda)?;
        let frob = lambda.frobenius();
        let r = frob.len();
        let n = self.n;
        PolyMatrix::from_fn(r, r, n, |i, j| {
            self.hook(i64::from(frob[i].0), frob[j].1)
        })?
        .determinant()
    }
}

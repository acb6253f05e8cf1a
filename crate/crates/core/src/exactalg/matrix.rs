use std::collections::HashMap;

use super::{sign, MultiPoly};
use crate::error::{Error, Result};

/// Largest size for which [`PolyMatrix::determinant`] uses cofactor expansion.
const COFACTOR_LIMIT: usize = 6;

/// Row-major matrix of polynomials sharing one ring.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    arity: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, arity: usize, entries: Vec<MultiPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Contract(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| e.arity() != arity) {
            return Err(Error::ArityMismatch {
                left: arity,
                right: bad.arity(),
            });
        }
        Ok(PolyMatrix {
            rows,
            cols,
            arity,
            entries,
        })
    }

    /// Builds a matrix from an entry function `(row, col) -> MultiPoly`.
    pub fn from_fn<F>(rows: usize, cols: usize, arity: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Result<MultiPoly>,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c)?);
            }
        }
        Self::new(rows, cols, arity, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, r: usize, c: usize) -> &MultiPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[MultiPoly] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// The matrix with column `col` removed.
    pub fn without_col(&self, col: usize) -> PolyMatrix {
        let entries = (0..self.rows)
            .flat_map(|r| {
                self.row(r)
                    .iter()
                    .enumerate()
                    .filter(move |(c, _)| *c != col)
                    .map(|(_, e)| e.clone())
            })
            .collect();
        PolyMatrix {
            rows: self.rows,
            cols: self.cols - 1,
            arity: self.arity,
            entries,
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::Contract(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Self::from_fn(self.rows, other.cols, self.arity, |r, c| {
            let mut acc = MultiPoly::zero(self.arity);
            for k in 0..self.cols {
                acc = &acc + &(self.get(r, k) * other.get(k, c));
            }
            Ok(acc)
        })
    }

    fn check_square(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    /// Exact determinant. The empty matrix has determinant 1.
    pub fn determinant(&self) -> Result<MultiPoly> {
        if self.rows <= COFACTOR_LIMIT {
            self.determinant_cofactor()
        } else {
            self.determinant_bareiss()
        }
    }

    /// Laplace expansion along successive rows, memoized on the set of
    /// columns still available.
    pub fn determinant_cofactor(&self) -> Result<MultiPoly> {
        self.check_square()?;
        assert!(self.rows < 64, "cofactor expansion limited to 63 rows");
        let mut memo = HashMap::new();
        Ok(self.minor_det(0, (1u64 << self.cols) - 1, &mut memo))
    }

    fn minor_det(&self, row: usize, free: u64, memo: &mut HashMap<u64, MultiPoly>) -> MultiPoly {
        if row == self.rows {
            return MultiPoly::one(self.arity);
        }
        if let Some(v) = memo.get(&free) {
            return v.clone();
        }
        let mut acc = MultiPoly::zero(self.arity);
        let mut position = 0i64;
        for c in 0..self.cols {
            if free & (1 << c) == 0 {
                continue;
            }
            let entry = self.get(row, c);
            if !entry.is_zero() {
                let sub = self.minor_det(row + 1, free & !(1 << c), memo);
                let term = entry * &sub;
                acc = &acc + &term.scale(&sign(position));
            }
            position += 1;
        }
        memo.insert(free, acc.clone());
        acc
    }

    /// Fraction-free Gaussian elimination (Bareiss), with row swaps on zero pivots.
    pub fn determinant_bareiss(&self) -> Result<MultiPoly> {
        self.check_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(MultiPoly::one(self.arity));
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = MultiPoly::one(self.arity);
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !m.get(r, k).is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        negate = !negate;
                    }
                    None => return Ok(MultiPoly::zero(self.arity)),
                }
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(m.get(i, j) * &pivot) - &(m.get(i, k) * m.get(k, j));
                    m.entries[i * n + j] = num.exact_divide(&prev)?;
                }
                m.entries[i * n + k] = MultiPoly::zero(self.arity);
            }
            prev = pivot;
        }
        let det = m.get(n - 1, n - 1).clone();
        Ok(if negate { -det } else { det })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    fn x(arity: usize, i: usize) -> MultiPoly {
        MultiPoly::var(arity, i)
    }

    /// Permutation-sum determinant, independent of both implementations.
    fn leibniz(m: &PolyMatrix) -> MultiPoly {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.rows();
        let mut acc = MultiPoly::zero(m.arity());
        for p in perms(n) {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count() as i64;
            let mut t = MultiPoly::one(m.arity());
            for (r, &c) in p.iter().enumerate() {
                t = &t * m.get(r, c);
            }
            acc = &acc + &t.scale(&sign(inversions));
        }
        acc
    }

    #[test]
    fn identity_and_vandermonde() {
        let id = PolyMatrix::from_fn(2, 2, 1, |r, c| {
            Ok(if r == c { MultiPoly::one(1) } else { MultiPoly::zero(1) })
        })
        .unwrap();
        assert_eq!(id.determinant().unwrap(), MultiPoly::one(1));

        let v2 = PolyMatrix::new(
            2,
            2,
            2,
            vec![x(2, 0), x(2, 1), MultiPoly::one(2), MultiPoly::one(2)],
        )
        .unwrap();
        assert_eq!(v2.determinant().unwrap(), &x(2, 0) - &x(2, 1));
    }

    #[test]
    fn vandermonde_3x3() {
        let m = PolyMatrix::from_fn(3, 3, 3, |r, c| Ok(x(3, c).pow(2 - r as u32))).unwrap();
        let (x1, x2, x3) = (x(3, 0), x(3, 1), x(3, 2));
        let expected = &(&(&x1 - &x2) * &(&x1 - &x3)) * &(&x2 - &x3);
        assert_eq!(leibniz(&m), expected);
        assert_eq!(m.determinant_cofactor().unwrap(), expected);
        assert_eq!(m.determinant_bareiss().unwrap(), expected);
    }

    #[test]
    fn bareiss_handles_zero_pivot() {
        let m = PolyMatrix::new(
            2,
            2,
            1,
            vec![MultiPoly::zero(1), x(1, 0), MultiPoly::constant(1, int(3)), MultiPoly::one(1)],
        )
        .unwrap();
        assert_eq!(m.determinant_bareiss().unwrap(), x(1, 0).scale(&int(-3)));
        assert_eq!(m.determinant_cofactor().unwrap(), x(1, 0).scale(&int(-3)));
    }

    #[test]
    fn non_square_is_rejected() {
        let m = PolyMatrix::from_fn(2, 3, 1, |_, _| Ok(MultiPoly::one(1))).unwrap();
        assert_eq!(
            m.determinant(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn empty_determinant_is_one() {
        let m = PolyMatrix::new(0, 0, 3, Vec::new()).unwrap();
        assert_eq!(m.determinant().unwrap(), MultiPoly::one(3));
        assert_eq!(m.determinant_bareiss().unwrap(), MultiPoly::one(3));
    }

    mod props {
        use super::*;
        use crate::exactalg::strategies::poly;
        use proptest::prelude::*;

        fn matrix(n: usize) -> impl Strategy<Value = PolyMatrix> {
            prop::collection::vec(poly(2, 3), n * n)
                .prop_map(move |e| PolyMatrix::new(n, n, 2, e).unwrap())
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn determinant_routes_agree(m in (1usize..=4).prop_flat_map(matrix)) {
                prop_assert_eq!(m.determinant_cofactor().unwrap(), m.determinant_bareiss().unwrap());
                prop_assert_eq!(m.determinant().unwrap(), leibniz(&m));
            }

            #[test]
            fn determinant_is_multiplicative(a in matrix(3), b in matrix(3)) {
                let ab = a.mul(&b).unwrap();
                prop_assert_eq!(
                    ab.determinant().unwrap(),
                    &a.determinant().unwrap() * &b.determinant().unwrap()
                );
            }
        }
    }
}

//! Dense matrices over ℚ(i) with exact elimination.
//!
//! Pivoting is deterministic (first nonzero column, smallest row index), so
//! ranks, kernel bases and right inverses are reproducible byte for byte.

use std::fmt;
use std::ops::{Index, IndexMut};

use super::gaussian::{GaussianRational, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

/// Outcome of a reduced-row-echelon pass over `[M | I]`.
///
/// `transform * M = reduced`, with `transform` invertible and `pivots[i]`
/// the pivot column of row `i`.
pub struct Rref {
    pub reduced: ExactMatrix,
    pub transform: ExactMatrix,
    pub pivots: Vec<usize>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = GaussianRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_rational_rows(rows: Vec<Vec<Rational>>) -> Self {
        Self::from_rows(
            rows.into_iter()
                .map(|row| row.into_iter().map(GaussianRational::from_real).collect())
                .collect(),
        )
    }

    pub fn from_fn<F: FnMut(usize, usize) -> GaussianRational>(
        rows: usize,
        cols: usize,
        mut f: F,
    ) -> Self {
        let mut m = Self::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[GaussianRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<GaussianRational> {
        self.row(i).to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_real)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let term = a * &rhs[(k, j)];
                    out[(i, j)] += &term;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut acc = GaussianRational::zero();
                for j in 0..self.cols {
                    if !v[j].is_zero() {
                        acc += &(&self[(i, j)] * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }

    pub fn scale(&self, k: &GaussianRational) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * k)
    }

    /// Gauss-Jordan elimination on a copy, recording the row transform.
    pub fn rref(&self) -> Rref {
        let mut r = self.clone();
        let mut e = Self::identity(self.rows);
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..self.cols {
            if prow == self.rows {
                break;
            }
            let Some(src) = (prow..self.rows).find(|&i| !r[(i, col)].is_zero()) else {
                continue;
            };
            if src != prow {
                r.swap_rows(src, prow);
                e.swap_rows(src, prow);
            }
            let inv = r[(prow, col)].inv();
            r.scale_row(prow, &inv);
            e.scale_row(prow, &inv);
            for i in 0..self.rows {
                if i != prow && !r[(i, col)].is_zero() {
                    let factor = r[(i, col)].clone();
                    r.sub_scaled_row(i, prow, &factor);
                    e.sub_scaled_row(i, prow, &factor);
                }
            }
            pivots.push(col);
            prow += 1;
        }
        Rref {
            reduced: r,
            transform: e,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Basis of `{v : M v = 0}`, one vector per free column, in column order.
    /// Each vector has entry 1 at its free column.
    pub fn kernel_basis(&self) -> Vec<Vec<GaussianRational>> {
        let Rref {
            reduced, pivots, ..
        } = self.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![GaussianRational::zero(); self.cols];
            v[free] = GaussianRational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -&reduced[(i, free)];
            }
            basis.push(v);
        }
        basis
    }

    /// A right inverse on the range: returns `S` with `T·S·T = T`, built from
    /// the RREF transform and pivot columns. For `w` in the column space,
    /// `T·(S·w) = w`.
    pub fn right_inverse_on_range(&self) -> ExactMatrix {
        let Rref {
            transform, pivots, ..
        } = self.rref();
        let mut s = ExactMatrix::zero(self.cols, self.rows);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..self.rows {
                s[(p, j)] = transform[(i, j)].clone();
            }
        }
        debug_assert!(self.mul(&s).mul(self) == *self);
        s
    }

    /// One solution of `M x = rhs`, if consistent: free variables set to zero.
    pub fn solve(&self, rhs: &[GaussianRational]) -> Option<Vec<GaussianRational>> {
        assert_eq!(self.rows, rhs.len());
        let Rref {
            reduced,
            transform,
            pivots,
        } = self.rref();
        let y = transform.mul_vec(rhs);
        // rows past the last pivot are zero rows of the reduced matrix
        if y.iter().skip(pivots.len()).any(|c| !c.is_zero()) {
            return None;
        }
        let mut x = vec![GaussianRational::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = y[i].clone();
        }
        debug_assert!(reduced.mul_vec(&x) == y);
        Some(x)
    }

    /// Determinant by elimination. Panics unless square.
    pub fn determinant(&self) -> GaussianRational {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut m = self.clone();
        let mut det = GaussianRational::one();
        for col in 0..m.cols {
            let Some(src) = (col..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                return GaussianRational::zero();
            };
            if src != col {
                m.swap_rows(src, col);
                det = -det;
            }
            det = &det * &m[(col, col)];
            let inv = m[(col, col)].inv();
            m.scale_row(col, &inv);
            for i in col + 1..m.rows {
                if !m[(i, col)].is_zero() {
                    let factor = m[(i, col)].clone();
                    m.sub_scaled_row(i, col, &factor);
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, k: &GaussianRational) {
        for j in 0..self.cols {
            let v = &self[(i, j)] * k;
            self[(i, j)] = v;
        }
    }

    /// row_i -= k * row_src
    fn sub_scaled_row(&mut self, i: usize, src: usize, k: &GaussianRational) {
        for j in 0..self.cols {
            let delta = &self[(src, j)] * k;
            self[(i, j)] -= &delta;
        }
    }
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = GaussianRational;
    fn index(&self, (i, j): (usize, usize)) -> &GaussianRational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussianRational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::gaussian::{rat, rat_int};

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| GaussianRational::from_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_examples() {
        assert_eq!(ExactMatrix::zero(3, 3).rank(), 0);
        assert_eq!(ExactMatrix::identity(4).rank(), 4);
        assert_eq!(m(&[&[1, 2], &[2, 4], &[0, 1]]).rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        assert!(ExactMatrix::identity(3).kernel_basis().is_empty());

        let basis = ExactMatrix::zero(2, 3).kernel_basis();
        assert_eq!(basis.len(), 3);
        for (k, v) in basis.iter().enumerate() {
            for (j, entry) in v.iter().enumerate() {
                assert_eq!(entry.is_zero(), j != k);
            }
        }

        // row (1, 1/2): kernel spanned by a multiple of (1/2, -1)
        let row = ExactMatrix::from_rational_rows(vec![vec![rat_int(1), rat(1, 2)]]);
        let basis = row.kernel_basis();
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        assert_eq!(v[0], GaussianRational::from_real(rat(-1, 2)));
        assert_eq!(v[1], GaussianRational::one());
        assert!(row.mul_vec(v).iter().all(GaussianRational::is_zero));
        // proportional to (1/2, -1)
        let scaled = [-&v[0], -&v[1]];
        assert_eq!(scaled[0], GaussianRational::from_real(rat(1, 2)));
        assert_eq!(scaled[1], GaussianRational::from_int(-1));
    }

    #[test]
    fn right_inverse_examples() {
        let id = ExactMatrix::identity(3);
        assert_eq!(id.right_inverse_on_range(), id);

        let z = ExactMatrix::zero(2, 2);
        assert_eq!(z.right_inverse_on_range(), z);

        let t = m(&[&[1, 0], &[0, 0]]);
        let s = t.right_inverse_on_range();
        assert_eq!(s, t);
        assert_eq!(t.mul(&s).mul(&t), t);
    }

    #[test]
    fn right_inverse_identity_on_range() {
        let t = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let s = t.right_inverse_on_range();
        assert_eq!(t.mul(&s).mul(&t), t);
        // w = T x must be recovered by T S w
        let x = vec![
            GaussianRational::from_int(3),
            GaussianRational::from_real(rat(-1, 2)),
            GaussianRational::from_int(7),
        ];
        let w = t.mul_vec(&x);
        assert_eq!(t.mul_vec(&s.mul_vec(&w)), w);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 2], &[2, 4]]);
        let rhs = vec![GaussianRational::from_int(3), GaussianRational::from_int(6)];
        let x = a.solve(&rhs).unwrap();
        assert_eq!(a.mul_vec(&x), rhs);
        let bad = vec![GaussianRational::from_int(3), GaussianRational::from_int(5)];
        assert!(a.solve(&bad).is_none());
    }

    #[test]
    fn determinant_small() {
        assert_eq!(m(&[&[2, 1], &[1, 1]]).determinant(), GaussianRational::one());
        assert_eq!(
            m(&[&[0, 1], &[1, 0]]).determinant(),
            GaussianRational::from_int(-1)
        );
        assert!(m(&[&[1, 2], &[2, 4]]).determinant().is_zero());
    }

    #[test]
    fn complex_elimination() {
        // (i)·row reduction must stay exact in Q(i)
        let a = ExactMatrix::from_rows(vec![
            vec![GaussianRational::i(), GaussianRational::one()],
            vec![GaussianRational::from_int(-1), GaussianRational::i()],
        ]);
        // second row = i * first row, so rank 1
        assert_eq!(a.rank(), 1);
        let kernel = a.kernel_basis();
        assert_eq!(kernel.len(), 1);
        assert!(a.mul_vec(&kernel[0]).iter().all(GaussianRational::is_zero));
    }
}

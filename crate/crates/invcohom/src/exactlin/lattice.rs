//! Integer lattices: Hermite normal form and kernels of rational matrices
//! over ℤ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gaussian::Rational;
use super::matrix::ExactMatrix;

/// Row-style Hermite normal form with transformation: returns `(h, u)` with
/// `u · m = h`, `u` unimodular, `h` in echelon form with positive pivots and
/// entries above each pivot reduced into `[0, pivot)`.
pub fn hermite_normal_form(m: &[Vec<BigInt>]) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut h: Vec<Vec<BigInt>> = m.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();

    let mut prow = 0;
    for col in 0..cols {
        if prow == rows {
            break;
        }
        // clear the column below prow by gcd steps
        loop {
            let pivot = (prow..rows)
                .filter(|&i| !h[i][col].is_zero())
                .min_by(|&a, &b| h[a][col].abs().cmp(&h[b][col].abs()));
            let Some(p) = pivot else { break };
            h.swap(prow, p);
            u.swap(prow, p);
            let mut done = true;
            for i in prow + 1..rows {
                if !h[i][col].is_zero() {
                    let q = h[i][col].div_floor(&h[prow][col]);
                    row_sub_scaled(&mut h, i, prow, &q);
                    row_sub_scaled(&mut u, i, prow, &q);
                    if !h[i][col].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if h[prow][col].is_zero() {
            continue;
        }
        if h[prow][col].is_negative() {
            row_negate(&mut h, prow);
            row_negate(&mut u, prow);
        }
        // reduce the entries above the pivot into [0, pivot)
        for i in 0..prow {
            let q = h[i][col].div_floor(&h[prow][col]);
            if !q.is_zero() {
                row_sub_scaled(&mut h, i, prow, &q);
                row_sub_scaled(&mut u, i, prow, &q);
            }
        }
        prow += 1;
    }
    (h, u)
}

fn row_sub_scaled(m: &mut [Vec<BigInt>], i: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for j in 0..m[i].len() {
        let delta = q * &m[src][j];
        m[i][j] -= delta;
    }
}

fn row_negate(m: &mut [Vec<BigInt>], i: usize) {
    for e in &mut m[i] {
        *e = -std::mem::take(e);
    }
}

/// Basis of `{x ∈ ℤ^cols : M x = 0}` for an integer matrix, in HNF
/// (canonical, with positive leading entries). The lattice is saturated, so
/// every basis vector has content 1.
pub fn integer_kernel(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let cols = m.first().map_or(0, Vec::len);
    if m.is_empty() || cols == 0 {
        return (0..cols)
            .map(|k| {
                let mut v = vec![BigInt::zero(); cols];
                v[k] = BigInt::one();
                v
            })
            .collect();
    }
    // rows of u opposite the zero rows of hnf(m^T) span the kernel lattice
    let transpose: Vec<Vec<BigInt>> = (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect();
    let (h, u) = hermite_normal_form(&transpose);
    let kernel_rows: Vec<Vec<BigInt>> = h
        .iter()
        .zip(u)
        .filter(|(hrow, _)| hrow.iter().all(Zero::is_zero))
        .map(|(_, urow)| urow)
        .collect();
    if kernel_rows.is_empty() {
        return Vec::new();
    }
    let (h, _) = hermite_normal_form(&kernel_rows);
    h.into_iter()
        .filter(|row| row.iter().any(|e| !e.is_zero()))
        .collect()
}

/// Basis of the integer solutions of `A x = 0` for a matrix with rational
/// entries, obtained by clearing denominators row by row.
pub fn integer_lattice_kernel(a: &ExactMatrix) -> Result<Vec<Vec<BigInt>>, LatticeError> {
    let cleared = clear_denominators(a)?;
    Ok(integer_kernel(&cleared))
}

/// Scales each row of a rational matrix by the lcm of its denominators.
pub fn clear_denominators(a: &ExactMatrix) -> Result<Vec<Vec<BigInt>>, LatticeError> {
    let mut out = Vec::with_capacity(a.rows());
    for i in 0..a.rows() {
        let mut lcm = BigInt::one();
        for j in 0..a.cols() {
            let entry = &a[(i, j)];
            if !entry.is_real() {
                return Err(LatticeError::NonRationalEntry { row: i, col: j });
            }
            lcm = lcm.lcm(entry.re.denom());
        }
        out.push(
            (0..a.cols())
                .map(|j| {
                    let scaled = &a[(i, j)].re * Rational::from_integer(lcm.clone());
                    debug_assert!(scaled.is_integer());
                    scaled.to_integer()
                })
                .collect(),
        );
    }
    Ok(out)
}

/// gcd of the entries, nonnegative; zero for the zero vector.
pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

#[derive(Debug, thiserror::Error)]
pub enum LatticeError {
    #[error("entry ({row}, {col}) has a nonzero imaginary part")]
    NonRationalEntry { row: usize, col: usize },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::gaussian::{rat, rat_int};

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn hnf_is_unimodular_transform() {
        let m = vec![
            vec![bi(2), bi(4), bi(4)],
            vec![bi(-6), bi(6), bi(12)],
            vec![bi(10), bi(4), bi(16)],
        ];
        let (h, u) = hermite_normal_form(&m);
        // u * m = h
        for i in 0..3 {
            for j in 0..3 {
                let prod: BigInt = (0..3).map(|k| &u[i][k] * &m[k][j]).sum();
                assert_eq!(prod, h[i][j]);
            }
        }
        // |det u| = 1
        let det = |m: &Vec<Vec<BigInt>>| -> BigInt {
            &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
                - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
                + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
        };
        assert_eq!(det(&u).abs(), bi(1));
        // canonical: known HNF of this matrix
        assert!(h[1][0].is_zero() && h[2][0].is_zero() && h[2][1].is_zero());
    }

    #[test]
    fn lattice_kernel_half_slope() {
        let a = ExactMatrix::from_rational_rows(vec![vec![rat_int(1), rat(1, 2)]]);
        let basis = integer_lattice_kernel(&a).unwrap();
        assert_eq!(basis, vec![vec![bi(1), bi(-2)]]);
    }

    #[test]
    fn lattice_kernel_identity_empty() {
        let a = ExactMatrix::identity(2);
        assert!(integer_lattice_kernel(&a).unwrap().is_empty());
    }

    #[test]
    fn lattice_kernel_deep_rational() {
        let a = ExactMatrix::from_rational_rows(vec![vec![rat_int(1), rat(110001, 1000000)]]);
        let basis = integer_lattice_kernel(&a).unwrap();
        assert_eq!(basis, vec![vec![bi(110001), bi(-1000000)]]);
    }

    #[test]
    fn kernel_vectors_are_primitive() {
        let a = ExactMatrix::from_rational_rows(vec![vec![rat_int(2), rat_int(4), rat_int(6)]]);
        let basis = integer_lattice_kernel(&a).unwrap();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert_eq!(content(v), bi(1));
            let dot = bi(2) * &v[0] + bi(4) * &v[1] + bi(6) * &v[2];
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn zero_matrix_kernel_is_standard_basis() {
        let a = ExactMatrix::zero(1, 3);
        let basis = integer_lattice_kernel(&a).unwrap();
        assert_eq!(
            basis,
            vec![
                vec![bi(1), bi(0), bi(0)],
                vec![bi(0), bi(1), bi(0)],
                vec![bi(0), bi(0), bi(1)],
            ]
        );
    }
}

//! Lie algebras given by structure constants, subalgebras with exact bases,
//! ad-invariant metrics, and the operator identities behind the sub-Laplacian.

mod pbw;

pub use pbw::Pbw2;

use num_traits::Zero;
use thiserror::Error;

use crate::exactlin::{ExactMatrix, GaussianRational, Rational};

/// A Lie algebra over ℚ: `c[i][j][k]` is the coefficient of `e_k` in
/// `[e_i, e_j]`. Antisymmetry is enforced by construction; the Jacobi
/// identity is a property to be checked, not assumed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureConstants {
    dim: usize,
    c: Vec<Rational>,
}

#[derive(Debug, Error)]
pub enum LieError {
    #[error("bracket coefficient index out of range: ({i}, {j}) -> {k} with dim {dim}")]
    IndexOutOfRange { i: usize, j: usize, k: usize, dim: usize },
    #[error("structure constants violate antisymmetry at ({i}, {j}, {k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("basis rows are linearly dependent (rank {rank} < {expected})")]
    DependentBasis { rank: usize, expected: usize },
    #[error("bracket [b_{i}, b_{j}] escapes the subalgebra span")]
    NotClosed { i: usize, j: usize },
    #[error("gram matrix is not symmetric")]
    MetricNotSymmetric,
    #[error("gram matrix is not positive definite (minor {order} fails)")]
    MetricNotPositive { order: usize },
    #[error("subalgebra basis is not orthonormal for the given metric")]
    NotOrthonormal,
    #[error("metric is not ad-invariant")]
    NotAdInvariant,
    #[error("vector does not lie in the subalgebra span")]
    NotInSubalgebra,
    #[error("vector or matrix has a nonzero imaginary part where a real one is required")]
    NotReal,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// The first index triple where the Jacobi identity fails, with the residual
/// vector of `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: Vec<Rational>,
}

impl StructureConstants {
    /// Builds from bracket data `[e_i, e_j] = Σ coeffs[k]·e_k` for `i < j`;
    /// the `j > i` half is filled in by antisymmetry.
    pub fn from_brackets(
        dim: usize,
        brackets: &[(usize, usize, Vec<(usize, Rational)>)],
    ) -> Result<Self, LieError> {
        let mut c = vec![Rational::zero(); dim * dim * dim];
        for (i, j, coeffs) in brackets {
            for (k, coeff) in coeffs {
                if *i >= dim || *j >= dim || *k >= dim {
                    return Err(LieError::IndexOutOfRange {
                        i: *i,
                        j: *j,
                        k: *k,
                        dim,
                    });
                }
                c[(i * dim + j) * dim + k] += coeff;
                c[(j * dim + i) * dim + k] -= coeff;
            }
        }
        Ok(Self { dim, c })
    }

    pub fn abelian(dim: usize) -> Self {
        Self {
            dim,
            c: vec![Rational::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficient of `e_k` in `[e_i, e_j]`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.dim).map(|k| self.c(i, j, k).clone()).collect()
    }

    /// Bilinear extension of the bracket to ℚ(i)-vectors.
    pub fn bracket(&self, x: &[GaussianRational], y: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![GaussianRational::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let prod = &x[i] * &y[j];
                for k in 0..self.dim {
                    let coeff = self.c(i, j, k);
                    if !coeff.is_zero() {
                        out[k] += &prod.scale(coeff);
                    }
                }
            }
        }
        out
    }

    pub fn bracket_real(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let xg: Vec<_> = x.iter().cloned().map(GaussianRational::from_real).collect();
        let yg: Vec<_> = y.iter().cloned().map(GaussianRational::from_real).collect();
        self.bracket(&xg, &yg).into_iter().map(|g| g.re).collect()
    }

    /// Full expansion of the Jacobi identity over all basis triples.
    pub fn check_jacobi(&self) -> Result<(), JacobiViolation> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let ei = basis_vec(n, i);
                    let ej = basis_vec(n, j);
                    let ek = basis_vec(n, k);
                    let mut residual = self.bracket_real(&self.bracket_real(&ei, &ej), &ek);
                    for (r, s) in residual
                        .iter_mut()
                        .zip(self.bracket_real(&self.bracket_real(&ej, &ek), &ei))
                    {
                        *r += s;
                    }
                    for (r, s) in residual
                        .iter_mut()
                        .zip(self.bracket_real(&self.bracket_real(&ek, &ei), &ej))
                    {
                        *r += s;
                    }
                    if residual.iter().any(|x| !x.is_zero()) {
                        return Err(JacobiViolation {
                            triple: (i, j, k),
                            residual,
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

pub fn basis_vec(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = Rational::from_integer(1.into());
    v
}

/// A subalgebra 𝔳 ⊆ 𝔤 given by real basis rows in ambient coordinates.
/// Construction checks independence and closure under the bracket, and
/// records the intrinsic structure constants of the basis.
#[derive(Clone)]
pub struct Subalgebra {
    ambient: StructureConstants,
    basis: ExactMatrix,
    intrinsic: StructureConstants,
}

impl Subalgebra {
    pub fn new(ambient: StructureConstants, basis_rows: Vec<Vec<Rational>>) -> Result<Self, LieError> {
        let n = basis_rows.len();
        for row in &basis_rows {
            if row.len() != ambient.dim() {
                return Err(LieError::DimensionMismatch {
                    expected: ambient.dim(),
                    got: row.len(),
                });
            }
        }
        let basis = ExactMatrix::from_rational_rows(basis_rows.clone());
        let rank = basis.rank();
        if rank != n {
            return Err(LieError::DependentBasis { rank, expected: n });
        }
        // closure: each [b_i, b_j] must solve against the basis rows
        let basis_t = basis.transpose();
        let mut c = vec![Rational::zero(); n * n * n];
        for i in 0..n {
            for j in i + 1..n {
                let w = ambient.bracket_real(&basis_rows[i], &basis_rows[j]);
                let wg: Vec<_> = w.into_iter().map(GaussianRational::from_real).collect();
                let coords = basis_t
                    .solve(&wg)
                    .ok_or(LieError::NotClosed { i, j })?;
                for (k, coord) in coords.iter().enumerate() {
                    debug_assert!(coord.is_real());
                    c[(i * n + j) * n + k] = coord.re.clone();
                    c[(j * n + i) * n + k] = -coord.re.clone();
                }
            }
        }
        Ok(Self {
            ambient,
            basis,
            intrinsic: StructureConstants { dim: n, c },
        })
    }

    /// The whole algebra viewed as a subalgebra of itself.
    pub fn full(ambient: StructureConstants) -> Self {
        let n = ambient.dim();
        let basis_rows: Vec<Vec<Rational>> = (0..n).map(|i| basis_vec(n, i)).collect();
        Self::new(ambient, basis_rows).expect("identity basis is closed")
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> &StructureConstants {
        &self.ambient
    }

    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }

    pub fn basis_row(&self, i: usize) -> Vec<Rational> {
        self.basis.row(i).iter().map(|g| g.re.clone()).collect()
    }

    /// Structure constants of 𝔳 in its own basis.
    pub fn intrinsic(&self) -> &StructureConstants {
        &self.intrinsic
    }

    /// Coordinates of an ambient real vector with respect to the basis rows.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Vec<Rational>, LieError> {
        if v.len() != self.ambient.dim() {
            return Err(LieError::DimensionMismatch {
                expected: self.ambient.dim(),
                got: v.len(),
            });
        }
        let vg: Vec<_> = v.iter().cloned().map(GaussianRational::from_real).collect();
        let coords = self
            .basis
            .transpose()
            .solve(&vg)
            .ok_or(LieError::NotInSubalgebra)?;
        Ok(coords.into_iter().map(|g| g.re).collect())
    }
}

/// A rational inner product on 𝔤 given by its Gram matrix.
#[derive(Clone)]
pub struct Metric {
    gram: ExactMatrix,
}

impl Metric {
    pub fn new(gram: ExactMatrix) -> Result<Self, LieError> {
        if gram != gram.transpose() || !gram.is_real() {
            return Err(LieError::MetricNotSymmetric);
        }
        // positive definite: all leading principal minors > 0
        for k in 1..=gram.rows() {
            let minor = ExactMatrix::from_fn(k, k, |i, j| gram[(i, j)].clone());
            let det = minor.determinant();
            if !det.im.is_zero() || det.re <= Rational::zero() {
                return Err(LieError::MetricNotPositive { order: k });
            }
        }
        Ok(Self { gram })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            gram: ExactMatrix::identity(dim),
        }
    }

    pub fn gram(&self) -> &ExactMatrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn inner(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for i in 0..self.dim() {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim() {
                if !y[j].is_zero() {
                    acc += &x[i] * &self.gram[(i, j)].re * &y[j];
                }
            }
        }
        acc
    }
}

/// ⟨[X,Y],Z⟩ + ⟨Y,[X,Z]⟩ = 0 over all basis triples.
pub fn is_ad_invariant(sc: &StructureConstants, metric: &Metric) -> bool {
    let n = sc.dim();
    if metric.dim() != n {
        return false;
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = metric.inner(&sc.basis_bracket(x, y), &basis_vec(n, z));
                let rhs = metric.inner(&basis_vec(n, y), &sc.basis_bracket(x, z));
                if !(lhs + rhs).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

fn check_orthonormal(v: &Subalgebra, metric: &Metric) -> Result<(), LieError> {
    if metric.dim() != v.ambient().dim() {
        return Err(LieError::DimensionMismatch {
            expected: v.ambient().dim(),
            got: metric.dim(),
        });
    }
    let n = v.rank();
    for i in 0..n {
        for j in 0..n {
            let g = metric.inner(&v.basis_row(i), &v.basis_row(j));
            let expected = if i == j { Rational::from_integer(1.into()) } else { Rational::zero() };
            if g != expected {
                return Err(LieError::NotOrthonormal);
            }
        }
    }
    Ok(())
}

/// Expansion coefficients `c` with `[L, L_j] = Σ_k c_{jk} L_k`, computed as
/// `c_{jk} = ⟨[L, L_j], L_k⟩` against an orthonormal basis. Errors if the
/// basis is not orthonormal or some bracket escapes 𝔳.
pub fn commutator_coeffs(
    v: &Subalgebra,
    metric: &Metric,
    l: &[Rational],
) -> Result<ExactMatrix, LieError> {
    check_orthonormal(v, metric)?;
    v.coordinates(l)?;
    let n = v.rank();
    let mut c = ExactMatrix::zero(n, n);
    for j in 0..n {
        let w = v.ambient().bracket_real(l, &v.basis_row(j));
        let mut reconstructed = vec![Rational::zero(); v.ambient().dim()];
        for k in 0..n {
            let coeff = metric.inner(&w, &v.basis_row(k));
            for (r, b) in reconstructed.iter_mut().zip(v.basis_row(k)) {
                *r += &coeff * &b;
            }
            c[(j, k)] = GaussianRational::from_real(coeff);
        }
        if reconstructed != w {
            return Err(LieError::NotClosed { i: j, j });
        }
    }
    Ok(c)
}

/// Residual matrix `c + cᵀ` of the fundamental identity
/// `Σ_j [L, L_j] f(L_j) = −Σ_j L_j f([L, L_j])` expanded against a symbolic
/// 1-form; the zero matrix certifies the identity.
pub fn fund_identity_residual(
    v: &Subalgebra,
    metric: &Metric,
    l: &[Rational],
) -> Result<ExactMatrix, LieError> {
    let c = commutator_coeffs(v, metric, l)?;
    Ok(c.add(&c.transpose()))
}

/// PBW normal form of `[L_i, Δ_𝔳]` for the `i`-th basis field of 𝔳, where
/// `Δ_𝔳 = −Σ_j L_j²`. Zero whenever the basis is orthonormal for an
/// ad-invariant metric.
pub fn sublaplacian_commutator(
    v: &Subalgebra,
    metric: &Metric,
    i: usize,
) -> Result<Pbw2, LieError> {
    check_orthonormal(v, metric)?;
    if !is_ad_invariant(v.ambient(), metric) {
        return Err(LieError::NotAdInvariant);
    }
    Ok(sublaplacian_commutator_unchecked(
        v.ambient(),
        &basis_rows_of(v),
        &v.basis_row(i),
    ))
}

/// Same computation with no preconditions: `L` is any real ambient vector and
/// the basis rows are taken as given. Used to exhibit nonzero residuals when
/// the lemma's hypotheses fail.
pub fn sublaplacian_commutator_unchecked(
    ambient: &StructureConstants,
    basis_rows: &[Vec<Rational>],
    l: &[Rational],
) -> Pbw2 {
    let sublap = pbw::sublaplacian(ambient, basis_rows);
    pbw::bracket_linear(ambient, l, &sublap)
}

fn basis_rows_of(v: &Subalgebra) -> Vec<Vec<Rational>> {
    (0..v.rank()).map(|i| v.basis_row(i)).collect()
}

/// Bundled example algebras used across the test suites and the packaged
/// problem configurations.
pub mod catalog {
    use super::*;
    use crate::exactlin::rat_int;

    pub fn su2() -> StructureConstants {
        StructureConstants::from_brackets(
            3,
            &[
                (0, 1, vec![(2, rat_int(1))]),
                (1, 2, vec![(0, rat_int(1))]),
                (2, 0, vec![(1, rat_int(1))]),
            ],
        )
        .unwrap()
    }

    /// su(2) ⊕ ℝ: three-sphere factor plus a central line.
    pub fn su2_plus_line() -> StructureConstants {
        StructureConstants::from_brackets(
            4,
            &[
                (0, 1, vec![(2, rat_int(1))]),
                (1, 2, vec![(0, rat_int(1))]),
                (2, 0, vec![(1, rat_int(1))]),
            ],
        )
        .unwrap()
    }

    /// su(2) with an extra e1-component forced into [e1, e2]; this breaks the
    /// Jacobi identity at the triple (0, 1, 2).
    pub fn su2_tampered() -> StructureConstants {
        StructureConstants::from_brackets(
            3,
            &[
                (0, 1, vec![(2, rat_int(1)), (0, rat_int(1))]),
                (1, 2, vec![(0, rat_int(1))]),
                (2, 0, vec![(1, rat_int(1))]),
            ],
        )
        .unwrap()
    }

    /// The 2-dimensional nonabelian algebra [e1, e2] = e2 (no ad-invariant
    /// metric exists for it).
    pub fn affine_line() -> StructureConstants {
        StructureConstants::from_brackets(2, &[(0, 1, vec![(1, rat_int(1))])]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{rat, rat_int};

    #[test]
    fn jacobi_bundled() {
        assert!(StructureConstants::abelian(3).check_jacobi().is_ok());
        assert!(catalog::su2().check_jacobi().is_ok());
        assert!(catalog::su2_plus_line().check_jacobi().is_ok());
        assert!(catalog::affine_line().check_jacobi().is_ok());

        let violation = catalog::su2_tampered().check_jacobi().unwrap_err();
        assert_eq!(violation.triple, (0, 1, 2));
        assert!(violation.residual.iter().any(|x| !x.is_zero()));
    }

    #[test]
    fn ad_invariance() {
        assert!(is_ad_invariant(&catalog::su2(), &Metric::identity(3)));
        assert!(is_ad_invariant(&catalog::su2_plus_line(), &Metric::identity(4)));
        assert!(is_ad_invariant(&StructureConstants::abelian(2), &Metric::identity(2)));
        // [e1,e2] = e2 with the identity gram: <[e1,e2],e2> = 1 != 0
        assert!(!is_ad_invariant(&catalog::affine_line(), &Metric::identity(2)));
    }

    #[test]
    fn metric_validation() {
        assert!(Metric::new(ExactMatrix::identity(3)).is_ok());
        let gram = ExactMatrix::from_rational_rows(vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(2), rat_int(1)],
        ]);
        assert!(matches!(
            Metric::new(gram),
            Err(LieError::MetricNotPositive { order: 2 })
        ));
        let asym = ExactMatrix::from_rational_rows(vec![
            vec![rat_int(1), rat_int(1)],
            vec![rat_int(0), rat_int(1)],
        ]);
        assert!(matches!(Metric::new(asym), Err(LieError::MetricNotSymmetric)));
    }

    #[test]
    fn subalgebra_closure() {
        let su2 = catalog::su2_plus_line();
        // su(2) factor is closed
        let v = Subalgebra::new(
            su2.clone(),
            vec![basis_vec(4, 0), basis_vec(4, 1), basis_vec(4, 2)],
        )
        .unwrap();
        assert_eq!(v.rank(), 3);
        assert_eq!(v.intrinsic(), &catalog::su2());
        // span{e1, e2} in su(2) is not closed: [e1, e2] = e3
        let err = Subalgebra::new(catalog::su2(), vec![basis_vec(3, 0), basis_vec(3, 1)]);
        assert!(matches!(err, Err(LieError::NotClosed { .. })));
        // a scaled-line subalgebra gets intrinsic constants in its own basis
        let v = Subalgebra::new(catalog::su2(), vec![vec![rat(1, 2), rat_int(0), rat_int(0)]]).unwrap();
        assert_eq!(v.intrinsic(), &StructureConstants::abelian(1));
    }

    #[test]
    fn commutator_coeffs_su2() {
        let v = Subalgebra::full(catalog::su2());
        let metric = Metric::identity(3);
        let c = commutator_coeffs(&v, &metric, &basis_vec(3, 0)).unwrap();
        let expected = ExactMatrix::from_rational_rows(vec![
            vec![rat_int(0), rat_int(0), rat_int(0)],
            vec![rat_int(0), rat_int(0), rat_int(1)],
            vec![rat_int(0), rat_int(-1), rat_int(0)],
        ]);
        assert_eq!(c, expected);
        // skew-symmetry under ad-invariance
        assert!(c.add(&c.transpose()).is_zero());
    }

    #[test]
    fn commutator_coeffs_rejects_bad_inputs() {
        let v = Subalgebra::full(catalog::su2());
        let scaled = Metric::new(ExactMatrix::identity(3).scale(&GaussianRational::from_int(4))).unwrap();
        assert!(matches!(
            commutator_coeffs(&v, &scaled, &basis_vec(3, 0)),
            Err(LieError::NotOrthonormal)
        ));
        // line subalgebra, L outside it
        let line = Subalgebra::new(catalog::su2(), vec![basis_vec(3, 2)]).unwrap();
        assert!(matches!(
            commutator_coeffs(&line, &Metric::identity(3), &basis_vec(3, 0)),
            Err(LieError::NotInSubalgebra)
        ));
    }

    #[test]
    fn fund_identity_bundled() {
        let abelian = Subalgebra::full(StructureConstants::abelian(2));
        let r = fund_identity_residual(&abelian, &Metric::identity(2), &basis_vec(2, 0)).unwrap();
        assert!(r.is_zero());

        let su2 = Subalgebra::full(catalog::su2());
        let r = fund_identity_residual(&su2, &Metric::identity(3), &basis_vec(3, 2)).unwrap();
        assert!(r.is_zero());

        // identity metric on [e1,e2]=e2 is not ad-invariant: nonzero residual
        let aff = Subalgebra::full(catalog::affine_line());
        let r = fund_identity_residual(&aff, &Metric::identity(2), &basis_vec(2, 0)).unwrap();
        assert!(!r.is_zero());
        assert_eq!(r[(1, 1)], GaussianRational::from_int(2));
    }

    #[test]
    fn sublaplacian_commutes_bundled() {
        let su2 = Subalgebra::full(catalog::su2());
        let metric = Metric::identity(3);
        for i in 0..3 {
            assert!(sublaplacian_commutator(&su2, &metric, i).unwrap().is_zero());
        }
        let abelian = Subalgebra::full(StructureConstants::abelian(3));
        assert!(sublaplacian_commutator(&abelian, &metric, 1).unwrap().is_zero());
    }

    #[test]
    fn sublaplacian_nonzero_without_ad_invariance() {
        // v = span{e2} inside [e1,e2]=e2, L = e1: [L, Δ] = -[e1, e2²] = -2 e2²
        let aff = catalog::affine_line();
        let rows = vec![basis_vec(2, 1)];
        let p = sublaplacian_commutator_unchecked(&aff, &rows, &basis_vec(2, 0));
        assert!(!p.is_zero());
        assert_eq!(p.quadratic(1, 1), GaussianRational::from_int(-2));
        assert!(p.constant().is_zero());
        assert!(p.linear().iter().all(GaussianRational::is_zero));
        // and the checked entry point refuses the metric
        let v = Subalgebra::new(aff, rows).unwrap();
        assert!(matches!(
            sublaplacian_commutator(&v, &Metric::identity(2), 0),
            Err(LieError::NotAdInvariant)
        ));
    }
}

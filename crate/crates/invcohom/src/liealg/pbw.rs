//! Degree-≤2 elements of the universal enveloping algebra in PBW normal
//! form: every product `e_i e_j` with `i > j` is rewritten as
//! `e_j e_i + [e_i, e_j]` at construction time, so equality of normal forms
//! is coefficient equality.

use num_traits::Zero;

use crate::exactlin::{GaussianRational, Rational};

use super::StructureConstants;

#[derive(Clone, PartialEq, Eq)]
pub struct Pbw2 {
    dim: usize,
    constant: GaussianRational,
    linear: Vec<GaussianRational>,
    /// coefficients of `e_i e_j` for `i <= j`, row-major over the upper triangle
    quad: Vec<GaussianRational>,
}

fn tri_index(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < dim);
    // offset of row i in the packed upper triangle
    i * dim - i * (i + 1) / 2 + j
}

impl Pbw2 {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            constant: GaussianRational::zero(),
            linear: vec![GaussianRational::zero(); dim],
            quad: vec![GaussianRational::zero(); dim * (dim + 1) / 2],
        }
    }

    pub fn from_linear(v: &[GaussianRational]) -> Self {
        let mut p = Self::zero(v.len());
        p.linear = v.to_vec();
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constant(&self) -> &GaussianRational {
        &self.constant
    }

    pub fn linear(&self) -> &[GaussianRational] {
        &self.linear
    }

    pub fn quadratic(&self, i: usize, j: usize) -> GaussianRational {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        self.quad[tri_index(self.dim, i, j)].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero()
            && self.linear.iter().all(GaussianRational::is_zero)
            && self.quad.iter().all(GaussianRational::is_zero)
    }

    pub fn add_assign(&mut self, other: &Pbw2) {
        assert_eq!(self.dim, other.dim);
        self.constant += &other.constant;
        for (a, b) in self.linear.iter_mut().zip(&other.linear) {
            *a += b;
        }
        for (a, b) in self.quad.iter_mut().zip(&other.quad) {
            *a += b;
        }
    }

    pub fn scale(&self, k: &GaussianRational) -> Pbw2 {
        Pbw2 {
            dim: self.dim,
            constant: &self.constant * k,
            linear: self.linear.iter().map(|x| x * k).collect(),
            quad: self.quad.iter().map(|x| x * k).collect(),
        }
    }

    pub fn neg(&self) -> Pbw2 {
        self.scale(&GaussianRational::from_int(-1))
    }
}

/// Normal form of the product of two degree-1 elements: `x·y` with the
/// out-of-order monomials rewritten through the bracket.
pub fn product_linear(sc: &StructureConstants, x: &[GaussianRational], y: &[GaussianRational]) -> Pbw2 {
    let dim = sc.dim();
    assert_eq!(x.len(), dim);
    assert_eq!(y.len(), dim);
    let mut p = Pbw2::zero(dim);
    for i in 0..dim {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..dim {
            if y[j].is_zero() {
                continue;
            }
            let coeff = &x[i] * &y[j];
            if i <= j {
                p.quad[tri_index(dim, i, j)] += &coeff;
            } else {
                // e_i e_j = e_j e_i + [e_i, e_j]
                p.quad[tri_index(dim, j, i)] += &coeff;
                for k in 0..dim {
                    let c = sc.c(i, j, k);
                    if !c.is_zero() {
                        p.linear[k] += &coeff.scale(c);
                    }
                }
            }
        }
    }
    p
}

/// `[x, p]` for a real degree-1 element `x` and a normal-form `p` of degree
/// ≤ 2; the result again has degree ≤ 2.
pub fn bracket_linear(sc: &StructureConstants, x: &[Rational], p: &Pbw2) -> Pbw2 {
    let dim = sc.dim();
    assert_eq!(p.dim(), dim);
    let xg: Vec<GaussianRational> = x.iter().cloned().map(GaussianRational::from_real).collect();
    let mut out = Pbw2::zero(dim);
    // [x, linear part]
    let lin_bracket = sc.bracket(&xg, &p.linear);
    for (a, b) in out.linear.iter_mut().zip(&lin_bracket) {
        *a += b;
    }
    // [x, e_i e_j] = [x, e_i] e_j + e_i [x, e_j]
    for i in 0..dim {
        for j in i..dim {
            let coeff = &p.quad[tri_index(dim, i, j)];
            if coeff.is_zero() {
                continue;
            }
            let ei = unit(dim, i);
            let ej = unit(dim, j);
            let xi = sc.bracket(&xg, &ei);
            let xj = sc.bracket(&xg, &ej);
            out.add_assign(&product_linear(sc, &xi, &ej).scale(coeff));
            out.add_assign(&product_linear(sc, &ei, &xj).scale(coeff));
        }
    }
    out
}

/// `Δ_𝔳 = −Σ_j L_j²` over the given basis rows, in normal form.
pub fn sublaplacian(sc: &StructureConstants, basis_rows: &[Vec<Rational>]) -> Pbw2 {
    let mut p = Pbw2::zero(sc.dim());
    for row in basis_rows {
        let rg: Vec<GaussianRational> = row.iter().cloned().map(GaussianRational::from_real).collect();
        p.add_assign(&product_linear(sc, &rg, &rg).neg());
    }
    p
}

fn unit(dim: usize, i: usize) -> Vec<GaussianRational> {
    let mut v = vec![GaussianRational::zero(); dim];
    v[i] = GaussianRational::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog;
    use crate::liealg::basis_vec;

    fn unit_g(dim: usize, i: usize) -> Vec<GaussianRational> {
        unit(dim, i)
    }

    #[test]
    fn ordered_products_stay_put() {
        // already-normal monomials are fixed points of normalization
        let su2 = catalog::su2();
        for i in 0..3 {
            for j in i..3 {
                let p = product_linear(&su2, &unit_g(3, i), &unit_g(3, j));
                assert_eq!(p.quadratic(i, j), GaussianRational::one());
                assert!(p.linear().iter().all(GaussianRational::is_zero));
                assert!(p.constant().is_zero());
            }
        }
    }

    #[test]
    fn out_of_order_product_rewrites() {
        // e2 e1 = e1 e2 + [e2, e1] = e1 e2 - e3 in su(2)
        let su2 = catalog::su2();
        let p = product_linear(&su2, &unit_g(3, 1), &unit_g(3, 0));
        assert_eq!(p.quadratic(0, 1), GaussianRational::one());
        assert_eq!(p.linear()[2], GaussianRational::from_int(-1));
    }

    #[test]
    fn sublaplacian_su2() {
        let su2 = catalog::su2();
        let rows: Vec<Vec<Rational>> = (0..3).map(|i| basis_vec(3, i)).collect();
        let delta = sublaplacian(&su2, &rows);
        for i in 0..3 {
            assert_eq!(delta.quadratic(i, i), GaussianRational::from_int(-1));
        }
        assert!(delta.linear().iter().all(GaussianRational::is_zero));
    }

    #[test]
    fn bracket_with_casimir_vanishes() {
        // the su(2) sub-Laplacian is a Casimir element
        let su2 = catalog::su2();
        let rows: Vec<Vec<Rational>> = (0..3).map(|i| basis_vec(3, i)).collect();
        let delta = sublaplacian(&su2, &rows);
        for i in 0..3 {
            assert!(bracket_linear(&su2, &basis_vec(3, i), &delta).is_zero());
        }
    }
}

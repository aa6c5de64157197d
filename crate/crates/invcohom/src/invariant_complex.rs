//! The finite complex of left-invariant forms attached to a subalgebra:
//! exterior algebra on the dual basis, differential matrices built by graded
//! Leibniz from degree one, right inverses, cohomology dimensions, and the
//! contraction / Lie-derivative / Cartan identities at the invariant level.

use num_traits::Zero;
use thiserror::Error;

use crate::exactlin::{ExactMatrix, GaussianRational, Rational};
use crate::liealg::{StructureConstants, Subalgebra};

/// Strictly increasing tuple of 0-based basis indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(indices: Vec<usize>) -> Self {
        assert!(
            indices.windows(2).all(|w| w[0] < w[1]),
            "multi-index must be strictly increasing"
        );
        Self(indices)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, j: usize) -> bool {
        self.0.binary_search(&j).is_ok()
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All degree-`q` multi-indices on `{0, …, n-1}` in lexicographic order.
pub fn multi_indices(n: usize, q: usize) -> Vec<MultiIndex> {
    let mut out = Vec::with_capacity(binomial(n, q));
    let mut current = Vec::with_capacity(q);
    fn rec(n: usize, q: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
        if current.len() == q {
            out.push(MultiIndex(current.clone()));
            return;
        }
        let remaining = q - current.len();
        for j in start..=(n - remaining) {
            current.push(j);
            rec(n, q, j + 1, current, out);
            current.pop();
        }
    }
    if q <= n {
        rec(n, q, 0, &mut current, &mut out);
    }
    out
}

/// Position of a multi-index in the lexicographic basis listing.
pub fn lex_position(n: usize, m: &MultiIndex) -> usize {
    // combinatorial rank: count tuples lexicographically below m
    let q = m.degree();
    let mut rank = 0;
    let mut prev = 0;
    for (slot, &j) in m.indices().iter().enumerate() {
        for t in prev..j {
            rank += binomial(n - t - 1, q - slot - 1);
        }
        prev = j + 1;
    }
    rank
}

/// `τ_j ∧ τ_J = sign · τ_K`; `None` when `j ∈ J`.
pub fn wedge_basis(j: usize, m: &MultiIndex) -> Option<(i32, MultiIndex)> {
    if m.contains(j) {
        return None;
    }
    let pos = m.indices().partition_point(|&x| x < j);
    let mut indices = m.indices().to_vec();
    indices.insert(pos, j);
    let sign = if pos % 2 == 0 { 1 } else { -1 };
    Some((sign, MultiIndex(indices)))
}

/// `ι_{L_j} τ_K = sign · τ_{K∖j}`; `None` when `j ∉ K`.
pub fn contract_basis(j: usize, m: &MultiIndex) -> Option<(i32, MultiIndex)> {
    let pos = m.indices().binary_search(&j).ok()?;
    let mut indices = m.indices().to_vec();
    indices.remove(pos);
    let sign = if pos % 2 == 0 { 1 } else { -1 };
    Some((sign, MultiIndex(indices)))
}

/// Invariant `q`-form: coefficients over the lexicographic `Λ^q` basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvariantForm {
    n: usize,
    degree: usize,
    coeffs: Vec<GaussianRational>,
}

impl InvariantForm {
    pub fn zero(n: usize, degree: usize) -> Self {
        Self {
            n,
            degree,
            coeffs: vec![GaussianRational::zero(); binomial(n, degree)],
        }
    }

    pub fn from_coeffs(n: usize, degree: usize, coeffs: Vec<GaussianRational>) -> Self {
        assert_eq!(coeffs.len(), binomial(n, degree));
        Self { n, degree, coeffs }
    }

    pub fn basis_form(n: usize, m: &MultiIndex) -> Self {
        let mut f = Self::zero(n, m.degree());
        let pos = lex_position(n, m);
        f.coeffs[pos] = GaussianRational::one();
        f
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, m: &MultiIndex) -> &GaussianRational {
        &self.coeffs[lex_position(self.n, m)]
    }

    pub fn set_coeff(&mut self, m: &MultiIndex, value: GaussianRational) {
        let pos = lex_position(self.n, m);
        self.coeffs[pos] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(GaussianRational::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.degree), (other.n, other.degree));
        Self {
            n: self.n,
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&GaussianRational::from_int(-1)))
    }

    pub fn scale(&self, k: &GaussianRational) -> Self {
        Self {
            n: self.n,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Evaluation on a tuple of basis fields (possibly unordered or with
    /// repeats): antisymmetric in its arguments.
    pub fn eval_on_basis(&self, indices: &[usize]) -> GaussianRational {
        debug_assert_eq!(indices.len(), self.degree);
        let mut sorted = indices.to_vec();
        let mut sign = 1i32;
        // insertion sort tracking the permutation sign
        for i in 1..sorted.len() {
            let mut j = i;
            while j > 0 && sorted[j - 1] > sorted[j] {
                sorted.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return GaussianRational::zero();
        }
        let value = self.coeff(&MultiIndex(sorted));
        if sign == 1 {
            value.clone()
        } else {
            -value
        }
    }
}

/// The stack of differential matrices `T_q : Λ^q → Λ^{q+1}` together with
/// right inverses `S_q` satisfying `T_q·S_q·T_q = T_q`.
pub struct ComplexMatrices {
    n: usize,
    t: Vec<ExactMatrix>,
    s: Vec<ExactMatrix>,
}

#[derive(Debug, Error)]
pub enum ComplexError {
    #[error("differential does not square to zero at degree {q} (Jacobi fails)")]
    NotAComplex { q: usize },
}

impl ComplexMatrices {
    /// Builds `T_q` for `q = 0..n` by graded Leibniz expansion from the
    /// degree-one data `d τ_k = −Σ_{i<j} c_{ij}^k τ_i ∧ τ_j`, then validates
    /// `T_{q+1}·T_q = 0`.
    pub fn build(sc: &StructureConstants) -> Result<Self, ComplexError> {
        let cm = Self::build_unchecked(sc);
        for q in 0..cm.t.len().saturating_sub(1) {
            if !cm.t[q + 1].mul(&cm.t[q]).is_zero() {
                return Err(ComplexError::NotAComplex { q });
            }
        }
        Ok(cm)
    }

    /// Same construction without the `d∘d = 0` validation; lets callers
    /// observe how a Jacobi failure surfaces as a nonzero `T_{q+1}·T_q`.
    pub fn build_unchecked(sc: &StructureConstants) -> Self {
        let n = sc.dim();
        let mut t = Vec::with_capacity(n);
        for q in 0..n {
            let domain = multi_indices(n, q);
            let codomain_size = binomial(n, q + 1);
            let mut m = ExactMatrix::zero(codomain_size, domain.len());
            for (col, mi) in domain.iter().enumerate() {
                for (row, coeff) in differential_of_basis(sc, mi) {
                    m[(row, col)] = coeff;
                }
            }
            t.push(m);
        }
        let s = t.iter().map(ExactMatrix::right_inverse_on_range).collect();
        Self { n, t, s }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `T_q`; the zero map for `q = n` (and beyond) where `Λ^{q+1}` is trivial.
    pub fn t(&self, q: usize) -> ExactMatrix {
        if q < self.t.len() {
            self.t[q].clone()
        } else {
            ExactMatrix::zero(0, binomial(self.n, q))
        }
    }

    pub fn s(&self, q: usize) -> ExactMatrix {
        if q < self.s.len() {
            self.s[q].clone()
        } else {
            ExactMatrix::zero(binomial(self.n, q), 0)
        }
    }

    pub fn differentials(&self) -> &[ExactMatrix] {
        &self.t
    }

    /// `d'` applied to an invariant form.
    pub fn apply(&self, u: &InvariantForm) -> InvariantForm {
        let q = u.degree();
        if q >= self.n {
            return InvariantForm::zero(self.n, q + 1);
        }
        InvariantForm::from_coeffs(self.n, q + 1, self.t[q].mul_vec(u.coeffs()))
    }

    /// `dim H^q = nullity(T_q) − rank(T_{q−1})` for `q = 0..=n`, all exact.
    pub fn cohomology_dims(&self) -> Vec<usize> {
        let n = self.n;
        (0..=n)
            .map(|q| {
                let nullity = if q < self.t.len() {
                    self.t[q].nullity()
                } else {
                    binomial(n, q)
                };
                let prev_rank = if q == 0 { 0 } else { self.t[q - 1].rank() };
                nullity - prev_rank
            })
            .collect()
    }
}

/// `d' τ_J` as a sparse list of (lexicographic position, coefficient) in
/// degree `|J| + 1`, via graded Leibniz over the factors of `τ_J`.
fn differential_of_basis(
    sc: &StructureConstants,
    mi: &MultiIndex,
) -> Vec<(usize, GaussianRational)> {
    let n = sc.dim();
    let mut acc: std::collections::BTreeMap<usize, GaussianRational> = Default::default();
    for (slot, &ja) in mi.indices().iter().enumerate() {
        // dτ_{ja} = -Σ_{i<j} c_{ij}^{ja} τ_i ∧ τ_j, inserted at position `slot`
        for i in 0..n {
            for j in i + 1..n {
                let c = sc.c(i, j, ja);
                if c.is_zero() {
                    continue;
                }
                let mut factors: Vec<usize> = Vec::with_capacity(mi.degree() + 1);
                factors.extend_from_slice(&mi.indices()[..slot]);
                factors.push(i);
                factors.push(j);
                factors.extend_from_slice(&mi.indices()[slot + 1..]);
                let Some((sign, sorted)) = sort_wedge(&factors) else {
                    continue;
                };
                let leibniz_sign = if slot % 2 == 0 { 1 } else { -1 };
                let total = sign * leibniz_sign;
                let mut coeff = GaussianRational::from_real(-c.clone());
                if total < 0 {
                    coeff = -coeff;
                }
                let pos = lex_position(n, &sorted);
                let entry = acc.entry(pos).or_insert_with(GaussianRational::zero);
                *entry += &coeff;
            }
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Sorts wedge factors, returning the permutation sign; `None` on repeats.
fn sort_wedge(factors: &[usize]) -> Option<(i32, MultiIndex)> {
    let mut sorted = factors.to_vec();
    let mut sign = 1i32;
    for i in 1..sorted.len() {
        let mut j = i;
        while j > 0 && sorted[j - 1] > sorted[j] {
            sorted.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, MultiIndex(sorted)))
}

/// Differential matrices straight from the alternating-sum formula
/// `α_JK = Σ_{r<s} (−1)^{r+s} τ_J([L_{k_r}, L_{k_s}], L_{k_0}, …, ̂r, ̂s, …)`.
/// Used as the independent cross-check of the Leibniz construction.
pub fn differential_by_invariant_formula(sc: &StructureConstants, q: usize) -> ExactMatrix {
    let n = sc.dim();
    let domain = multi_indices(n, q);
    let codomain = multi_indices(n, q + 1);
    let mut m = ExactMatrix::zero(codomain.len(), domain.len());
    for (row, k) in codomain.iter().enumerate() {
        for (col, j) in domain.iter().enumerate() {
            let mut alpha = GaussianRational::zero();
            let ks = k.indices();
            for r in 0..ks.len() {
                for s in r + 1..ks.len() {
                    let bracket = sc.basis_bracket(ks[r], ks[s]);
                    // remaining arguments with slots r, s removed
                    let rest: Vec<usize> = ks
                        .iter()
                        .enumerate()
                        .filter(|(idx, _)| *idx != r && *idx != s)
                        .map(|(_, &v)| v)
                        .collect();
                    let mut value = GaussianRational::zero();
                    for (m_idx, coeff) in bracket.iter().enumerate() {
                        if coeff.is_zero() {
                            continue;
                        }
                        let mut args = Vec::with_capacity(q);
                        args.push(m_idx);
                        args.extend_from_slice(&rest);
                        let u = InvariantForm::basis_form(n, j);
                        value += &u.eval_on_basis(&args).scale(coeff);
                    }
                    if (r + s) % 2 == 1 {
                        value = -value;
                    }
                    alpha += &value;
                }
            }
            m[(row, col)] = alpha;
        }
    }
    m
}

/// `ι_L u` for `L` given by its coordinates against the 𝔳-basis.
pub fn contract(l: &[GaussianRational], u: &InvariantForm) -> InvariantForm {
    assert!(u.degree() >= 1, "cannot contract a 0-form");
    assert_eq!(l.len(), u.n());
    let n = u.n();
    let mut out = InvariantForm::zero(n, u.degree() - 1);
    for (pos, mi) in multi_indices(n, u.degree()).iter().enumerate() {
        let c = &u.coeffs()[pos];
        if c.is_zero() {
            continue;
        }
        for &j in mi.indices() {
            if l[j].is_zero() {
                continue;
            }
            let (sign, smaller) = contract_basis(j, mi).expect("index is present");
            let mut term = &l[j] * c;
            if sign < 0 {
                term = -term;
            }
            let target = lex_position(n, &smaller);
            out.coeffs[target] += &term;
        }
    }
    out
}

/// Wedge by the covector Σ v_j τ_j.
pub fn wedge(v: &[GaussianRational], u: &InvariantForm) -> InvariantForm {
    assert_eq!(v.len(), u.n());
    let n = u.n();
    let mut out = InvariantForm::zero(n, u.degree() + 1);
    if u.degree() >= n {
        return out;
    }
    for (pos, mi) in multi_indices(n, u.degree()).iter().enumerate() {
        let c = &u.coeffs()[pos];
        if c.is_zero() {
            continue;
        }
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            if let Some((sign, bigger)) = wedge_basis(j, mi) {
                let mut term = vj * c;
                if sign < 0 {
                    term = -term;
                }
                let target = lex_position(n, &bigger);
                out.coeffs[target] += &term;
            }
        }
    }
    out
}

/// Invariant Lie derivative 𝓛'_L along `L ∈ 𝔳` (coordinates in the 𝔳-basis):
/// on constant-coefficient forms only the bracket terms survive.
pub fn invariant_lie_derivative(
    v: &Subalgebra,
    l: &[GaussianRational],
    u: &InvariantForm,
) -> InvariantForm {
    let n = v.rank();
    assert_eq!(u.n(), n);
    assert_eq!(l.len(), n);
    let sc = v.intrinsic();
    // m[j][k]: coefficient of L_k in [L, L_j]
    let mut bracket_coeffs = vec![vec![GaussianRational::zero(); n]; n];
    for j in 0..n {
        for k in 0..n {
            let mut acc = GaussianRational::zero();
            for (i, li) in l.iter().enumerate() {
                let c = sc.c(i, j, k);
                if !c.is_zero() && !li.is_zero() {
                    acc += &li.scale(c);
                }
            }
            bracket_coeffs[j][k] = acc;
        }
    }
    let q = u.degree();
    let mut out = InvariantForm::zero(n, q);
    for (pos, mi) in multi_indices(n, q).iter().enumerate() {
        let mut acc = GaussianRational::zero();
        for (slot, &ia) in mi.indices().iter().enumerate() {
            // (-1)^{slot+1} u([L, L_{ia}], others) with [L, L_{ia}] expanded
            for k in 0..n {
                let coeff = &bracket_coeffs[ia][k];
                if coeff.is_zero() {
                    continue;
                }
                let mut args = Vec::with_capacity(q);
                args.push(k);
                for (other_slot, &other) in mi.indices().iter().enumerate() {
                    if other_slot != slot {
                        args.push(other);
                    }
                }
                let mut term = coeff * &u.eval_on_basis(&args);
                if slot % 2 == 0 {
                    term = -term;
                }
                acc += &term;
            }
        }
        out.coeffs[pos] = acc;
    }
    out
}

/// Residual of Cartan's formula `𝓛'_L u − ι_L(d'u) − d'(ι_L u)`; identically
/// zero at the invariant level.
pub fn cartan_check(
    v: &Subalgebra,
    cm: &ComplexMatrices,
    l: &[GaussianRational],
    u: &InvariantForm,
) -> InvariantForm {
    let lie = invariant_lie_derivative(v, l, u);
    let a = contract(l, &cm.apply(u));
    let term = if u.degree() == 0 {
        InvariantForm::zero(u.n(), 0)
    } else {
        cm.apply(&contract(l, u))
    };
    lie.sub(&a).sub(&term)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat_int;
    use crate::liealg::catalog;

    fn gi(x: i64) -> GaussianRational {
        GaussianRational::from_int(x)
    }

    #[test]
    fn multi_index_enumeration() {
        let all = multi_indices(4, 2);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0].indices(), &[0, 1]);
        assert_eq!(all[5].indices(), &[2, 3]);
        for (pos, mi) in all.iter().enumerate() {
            assert_eq!(lex_position(4, mi), pos);
        }
        assert_eq!(multi_indices(3, 0), vec![MultiIndex::empty()]);
    }

    #[test]
    fn wedge_and_contract_signs() {
        let m = MultiIndex::new(vec![1, 3]);
        assert_eq!(wedge_basis(0, &m), Some((1, MultiIndex::new(vec![0, 1, 3]))));
        assert_eq!(wedge_basis(2, &m), Some((-1, MultiIndex::new(vec![1, 2, 3]))));
        assert_eq!(wedge_basis(1, &m), None);
        assert_eq!(contract_basis(1, &m), Some((1, MultiIndex::new(vec![3]))));
        assert_eq!(contract_basis(3, &m), Some((-1, MultiIndex::new(vec![1]))));
        assert_eq!(contract_basis(2, &m), None);
    }

    #[test]
    fn su2_differential_matrices() {
        let cm = ComplexMatrices::build(&catalog::su2()).unwrap();
        // τ_1 ↦ −τ_2∧τ_3, τ_2 ↦ −τ_3∧τ_1 = τ_1∧τ_3, τ_3 ↦ −τ_1∧τ_2
        let t1 = cm.t(1);
        assert_eq!(t1.rows(), 3);
        assert_eq!(t1.cols(), 3);
        // codomain basis order: (0,1), (0,2), (1,2)
        assert_eq!(t1[(2, 0)], gi(-1));
        assert_eq!(t1[(1, 1)], gi(1));
        assert_eq!(t1[(0, 2)], gi(-1));
        assert_eq!(t1.rank(), 3);
        assert!(cm.t(2).is_zero());
        assert!(cm.t(0).is_zero());
    }

    #[test]
    fn cohomology_dims_bundled() {
        let su2 = ComplexMatrices::build(&catalog::su2()).unwrap();
        assert_eq!(su2.cohomology_dims(), vec![1, 0, 0, 1]);

        for n in 1..=3 {
            let cm = ComplexMatrices::build(&StructureConstants::abelian(n)).unwrap();
            let dims = cm.cohomology_dims();
            let expected: Vec<usize> = (0..=n).map(|q| binomial(n, q)).collect();
            assert_eq!(dims, expected);
        }

        // su(2) ⊕ ℝ: Künneth with a circle factor
        let cm = ComplexMatrices::build(&catalog::su2_plus_line()).unwrap();
        assert_eq!(cm.cohomology_dims(), vec![1, 1, 0, 1, 1]);
    }

    #[test]
    fn euler_characteristic_vanishes() {
        for sc in [
            StructureConstants::abelian(1),
            StructureConstants::abelian(3),
            catalog::su2(),
            catalog::su2_plus_line(),
        ] {
            let cm = ComplexMatrices::build(&sc).unwrap();
            let chi: i64 = cm
                .cohomology_dims()
                .iter()
                .enumerate()
                .map(|(q, &d)| if q % 2 == 0 { d as i64 } else { -(d as i64) })
                .sum();
            assert_eq!(chi, 0);
        }
    }

    #[test]
    fn tampered_constants_break_the_complex() {
        let sc = catalog::su2_tampered();
        assert!(matches!(
            ComplexMatrices::build(&sc),
            Err(ComplexError::NotAComplex { .. })
        ));
        let cm = ComplexMatrices::build_unchecked(&sc);
        assert!(!cm.t(2).mul(&cm.t(1)).is_zero());
    }

    #[test]
    fn leibniz_matches_invariant_formula() {
        for sc in [
            StructureConstants::abelian(2),
            catalog::su2(),
            catalog::su2_plus_line(),
            catalog::affine_line(),
        ] {
            let cm = ComplexMatrices::build(&sc).unwrap();
            for q in 0..sc.dim() {
                assert_eq!(cm.t(q), differential_by_invariant_formula(&sc, q), "q = {q}");
            }
        }
    }

    #[test]
    fn right_inverse_recovers_range_elements() {
        let cm = ComplexMatrices::build(&catalog::su2()).unwrap();
        let t1 = cm.t(1);
        let s1 = cm.s(1);
        let x = vec![gi(2), gi(-5), gi(7)];
        let w = t1.mul_vec(&x);
        assert_eq!(t1.mul_vec(&s1.mul_vec(&w)), w);
    }

    #[test]
    fn contraction_examples() {
        let tau12 = InvariantForm::basis_form(2, &MultiIndex::new(vec![0, 1]));
        let l1 = vec![gi(1), gi(0)];
        let l2 = vec![gi(0), gi(1)];
        assert_eq!(
            contract(&l1, &tau12),
            InvariantForm::basis_form(2, &MultiIndex::new(vec![1]))
        );
        assert_eq!(
            contract(&l2, &tau12),
            InvariantForm::basis_form(2, &MultiIndex::new(vec![0])).scale(&gi(-1))
        );
        // L orthogonal to every index of u
        let tau1 = InvariantForm::basis_form(2, &MultiIndex::new(vec![0]));
        assert!(contract(&l2, &tau1).is_zero());
    }

    #[test]
    fn lie_derivative_su2() {
        let v = Subalgebra::full(catalog::su2());
        let l1 = vec![gi(1), gi(0), gi(0)];
        let tau2 = InvariantForm::basis_form(3, &MultiIndex::new(vec![1]));
        // 𝓛'_{e1} τ_2 = τ_3 from the bracket table
        let expected = InvariantForm::basis_form(3, &MultiIndex::new(vec![2]));
        assert_eq!(invariant_lie_derivative(&v, &l1, &tau2), expected);
        // top form of su(2) is invariant: trace of ad vanishes
        let top = InvariantForm::basis_form(3, &MultiIndex::new(vec![0, 1, 2]));
        assert!(invariant_lie_derivative(&v, &l1, &top).is_zero());
        // abelian: always zero
        let ab = Subalgebra::full(StructureConstants::abelian(2));
        let u = InvariantForm::basis_form(2, &MultiIndex::new(vec![0]));
        assert!(invariant_lie_derivative(&ab, &vec![gi(1), gi(2)], &u).is_zero());
    }

    #[test]
    fn cartan_identity_su2() {
        let v = Subalgebra::full(catalog::su2());
        let cm = ComplexMatrices::build(v.intrinsic()).unwrap();
        let l = vec![gi(1), gi(0), gi(0)];
        let tau2 = InvariantForm::basis_form(3, &MultiIndex::new(vec![1]));
        assert!(cartan_check(&v, &cm, &l, &tau2).is_zero());

        // an arbitrary rational 2-form
        let u = InvariantForm::from_coeffs(
            3,
            2,
            vec![
                GaussianRational::new(rat_int(2), rat_int(-1)),
                GaussianRational::new(rat_int(0), rat_int(3)),
                GaussianRational::new(rat_int(-5), rat_int(7)),
            ],
        );
        let l = vec![gi(2), gi(-1), gi(3)];
        assert!(cartan_check(&v, &cm, &l, &u).is_zero());
    }
}

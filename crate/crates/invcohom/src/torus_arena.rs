//! Function-level instantiation on 𝕋^N for an abelian 𝔳 spanned by
//! `L_j = Σ_k A_{jk} ∂_{x_k}` with rational `A`: per-mode Koszul complexes,
//! kernel modes and eigenspace splits, leaf closure, the small-divisor
//! profiler, the homotopy operator, and the witness-chain constructor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::exactlin::{integer_lattice_kernel, ExactMatrix, GaussianRational, Rational};
use crate::invariant_complex::{binomial, contract, multi_indices, wedge, InvariantForm, MultiIndex};

/// 𝕋^N with the rank-`n` structure given by the rows of a rational matrix.
#[derive(Clone)]
pub struct TorusStructure {
    torus_dim: usize,
    coefficients: ExactMatrix,
}

#[derive(Debug, Error)]
pub enum TorusError {
    #[error("coefficient rows are dependent: rank {rank} < {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    #[error("form is not closed at its mode")]
    NotClosed,
    #[error("contraction needs degree >= 1")]
    DegreeZero,
    #[error("witness chain needs q + 1 <= n (got q = {q}, n = {n})")]
    ChainDegree { q: usize, n: usize },
}

impl TorusStructure {
    pub fn new(torus_dim: usize, rows: Vec<Vec<Rational>>) -> Result<Self, TorusError> {
        let coefficients = ExactMatrix::from_rational_rows(rows);
        assert_eq!(coefficients.cols(), torus_dim, "row length != torus dimension");
        let rank = coefficients.rank();
        if rank != coefficients.rows() {
            return Err(TorusError::RankDeficient {
                rank,
                rows: coefficients.rows(),
            });
        }
        Ok(Self {
            torus_dim,
            coefficients,
        })
    }

    /// Torus dimension N.
    pub fn torus_dim(&self) -> usize {
        self.torus_dim
    }

    /// Structure rank n (number of fields).
    pub fn rank(&self) -> usize {
        self.coefficients.rows()
    }

    pub fn coefficients(&self) -> &ExactMatrix {
        &self.coefficients
    }

    /// The symbol data of a Fourier mode: `b = A ξ` and `λ = |ξ|²`.
    pub fn mode(&self, xi: Vec<BigInt>) -> Mode {
        assert_eq!(xi.len(), self.torus_dim);
        let b: Vec<Rational> = (0..self.rank())
            .map(|j| {
                let mut acc = Rational::zero();
                for (k, x) in xi.iter().enumerate() {
                    if !x.is_zero() {
                        acc += &self.coefficients[(j, k)].re * Rational::from_integer(x.clone());
                    }
                }
                acc
            })
            .collect();
        let lambda: BigInt = xi.iter().map(|x| x * x).sum();
        Mode { xi, b, lambda }
    }

    pub fn mode_i64(&self, xi: &[i64]) -> Mode {
        self.mode(xi.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Rescales the structure by a positive rational; the bundle it spans is
    /// unchanged.
    pub fn scaled(&self, c: &Rational) -> TorusStructure {
        assert!(c > &Rational::zero());
        TorusStructure {
            torus_dim: self.torus_dim,
            coefficients: self
                .coefficients
                .scale(&GaussianRational::from_real(c.clone())),
        }
    }
}

/// One Fourier mode ξ ∈ ℤ^N with its symbol vector and Laplace eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mode {
    pub xi: Vec<BigInt>,
    pub b: Vec<Rational>,
    pub lambda: BigInt,
}

impl Mode {
    pub fn rank(&self) -> usize {
        self.b.len()
    }

    pub fn is_kernel_mode(&self) -> bool {
        self.b.iter().all(Zero::is_zero)
    }

    /// The scalar through which Δ_𝔳 acts on this mode: |b|² = Σ_j b_j².
    pub fn delta_scalar(&self) -> Rational {
        self.b.iter().map(|x| x * x).sum()
    }

    /// The vector `i·b` whose wedge is the mode differential.
    pub fn symbol(&self) -> Vec<GaussianRational> {
        self.b
            .iter()
            .map(|x| GaussianRational::imaginary(x.clone()))
            .collect()
    }
}

/// A single-mode coefficient form `u = Σ' u_J τ_J · e^{iξ·x}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModeForm {
    pub mode: Mode,
    pub form: InvariantForm,
}

/// Sup-norm truncation of the mode lattice.
#[derive(Clone, Copy, Debug)]
pub struct Truncation {
    pub radius: i64,
}

impl Truncation {
    pub fn new(radius: i64) -> Self {
        assert!(radius >= 0);
        Self { radius }
    }
}

/// All ξ with `|ξ|_∞ ≤ radius` in lexicographic order.
pub fn enumerate_box(dim: usize, radius: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut current = vec![-radius; dim];
    if dim == 0 {
        return vec![vec![]];
    }
    loop {
        out.push(current.clone());
        let mut k = dim;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if current[k] < radius {
                current[k] += 1;
                for c in current.iter_mut().skip(k + 1) {
                    *c = -radius;
                }
                break;
            }
        }
    }
}

/// Matrix of `d'` on one mode in degree `q`: wedge multiplication by `i·b`.
pub fn mode_differential(mode: &Mode, q: usize) -> ExactMatrix {
    wedge_matrix(&mode.symbol(), mode.rank(), q)
}

/// Wedge by an arbitrary covector as a `C(n,q+1) × C(n,q)` matrix.
pub fn wedge_matrix(v: &[GaussianRational], n: usize, q: usize) -> ExactMatrix {
    let domain = multi_indices(n, q);
    let mut m = ExactMatrix::zero(binomial(n, q + 1), domain.len());
    for (col, mi) in domain.iter().enumerate() {
        let u = InvariantForm::basis_form(n, mi);
        let w = wedge(v, &u);
        for (row, coeff) in w.coeffs().iter().enumerate() {
            if !coeff.is_zero() {
                m[(row, col)] = coeff.clone();
            }
        }
    }
    m
}

/// Cohomology dimensions of the Koszul complex of wedge-by-`i·w`, exact.
pub fn koszul_cohomology_dims(w: &[Rational]) -> Vec<usize> {
    let n = w.len();
    let v: Vec<GaussianRational> = w
        .iter()
        .map(|x| GaussianRational::imaginary(x.clone()))
        .collect();
    let ranks: Vec<usize> = (0..n).map(|q| wedge_matrix(&v, n, q).rank()).collect();
    (0..=n)
        .map(|q| {
            let nullity = binomial(n, q) - if q < n { ranks[q] } else { 0 };
            let prev = if q == 0 { 0 } else { ranks[q - 1] };
            nullity - prev
        })
        .collect()
}

/// Per-mode cohomology dimensions: binomials on the kernel modes, zero
/// elsewhere — computed by ranks, not assumed.
pub fn mode_cohomology_dims(mode: &Mode) -> Vec<usize> {
    koszul_cohomology_dims(&mode.b)
}

/// Modes of the truncation annihilated by every field: `A ξ = 0`,
/// lexicographically ordered.
pub fn kernel_modes(ts: &TorusStructure, tr: Truncation) -> Vec<Mode> {
    enumerate_box(ts.torus_dim(), tr.radius)
        .into_par_iter()
        .map(|xi| ts.mode_i64(&xi))
        .filter(Mode::is_kernel_mode)
        .collect()
}

/// Σ over the truncation of the per-mode cohomology dimension in degree `q`.
pub fn truncated_cohomology_dims(ts: &TorusStructure, tr: Truncation, q: usize) -> usize {
    enumerate_box(ts.torus_dim(), tr.radius)
        .into_par_iter()
        .map(|xi| mode_cohomology_dims(&ts.mode_i64(&xi))[q])
        .sum()
}

/// `(closure_dim, is_closed)` for the integral leaf through the identity:
/// the closure is the subtorus cut out by the integer relations `Λ_0`.
pub fn leaf_closure(ts: &TorusStructure) -> (usize, bool) {
    let relations = integer_lattice_kernel(ts.coefficients()).expect("rational matrix");
    let closure_dim = ts.torus_dim() - relations.len();
    (closure_dim, closure_dim == ts.rank())
}

/// `(dim E_λ, dim 𝒦_λ, dim ℛ_λ)`: modes on the sphere `|ξ|² = λ`, split by
/// whether the symbol vanishes.
pub fn eigenspace_split(ts: &TorusStructure, lambda: u64) -> (usize, usize, usize) {
    let radius = (lambda as f64).sqrt() as i64 + 1;
    let lam = BigInt::from(lambda);
    let mut total = 0usize;
    let mut kernel = 0usize;
    for xi in enumerate_box(ts.torus_dim(), radius) {
        let norm: i64 = xi.iter().map(|x| x * x).sum();
        if BigInt::from(norm) != lam {
            continue;
        }
        total += 1;
        if ts.mode_i64(&xi).is_kernel_mode() {
            kernel += 1;
        }
    }
    (total, kernel, total - kernel)
}

/// One `(ν, mode)` line of the small-divisor profile, carrying the exact
/// comparison `|b|² < (1+λ)^{−2ν}`.
#[derive(Clone, Debug)]
pub struct SolvabilityEntry {
    pub nu: u32,
    pub mode: Mode,
    pub b_norm_sq: Rational,
    pub threshold_sq: Rational,
    pub is_witness: bool,
}

/// Verdict of the profiler over a truncation (plus optional far candidates).
#[derive(Debug)]
pub struct SolvabilityReport {
    pub nu_max: u32,
    pub radius: i64,
    pub witnesses: Vec<SolvabilityEntry>,
    /// Per ν, the non-witness mode closest to its threshold, for diagnostics.
    pub near_misses: Vec<SolvabilityEntry>,
    /// `1/D²` for `D` the largest row denominator: a positive lower bound for
    /// `|b|²` over every nonzero-symbol mode of the full lattice.
    pub certificate: Rational,
    /// Smallest `|b|²` actually observed over nonzero-symbol modes scanned.
    pub observed_min_b_sq: Option<Rational>,
}

fn threshold_sq(lambda: &BigInt, nu: u32) -> Rational {
    let base = Rational::from_integer(lambda + BigInt::one());
    let pow = base.pow(2 * nu as i32);
    pow.recip()
}

/// Scans `|ξ|_∞ ≤ R` (and any extra candidate modes) for failures of the
/// small-divisor inequality at levels `ν = 1..=nu_max`, with `C_ν = 1`.
pub fn solvability_profile(
    ts: &TorusStructure,
    nu_max: u32,
    tr: Truncation,
    extra_modes: &[Vec<BigInt>],
) -> SolvabilityReport {
    let mut all_modes: Vec<Vec<BigInt>> = enumerate_box(ts.torus_dim(), tr.radius)
        .into_iter()
        .map(|xi| xi.into_iter().map(BigInt::from).collect())
        .collect();
    for m in extra_modes {
        if m.iter().any(|c| c.abs() > BigInt::from(tr.radius)) {
            all_modes.push(m.clone());
        }
    }

    let scanned: Vec<(Mode, Rational)> = all_modes
        .into_par_iter()
        .map(|xi| {
            let mode = ts.mode(xi);
            let b_sq = mode.delta_scalar();
            (mode, b_sq)
        })
        .filter(|(_, b_sq)| !b_sq.is_zero())
        .collect();

    let observed_min_b_sq = scanned.iter().map(|(_, b)| b.clone()).min();

    let mut witnesses = Vec::new();
    let mut near_misses = Vec::new();
    for nu in 1..=nu_max {
        let mut wit: Vec<SolvabilityEntry> = scanned
            .par_iter()
            .filter_map(|(mode, b_sq)| {
                let thr = threshold_sq(&mode.lambda, nu);
                (b_sq < &thr).then(|| SolvabilityEntry {
                    nu,
                    mode: mode.clone(),
                    b_norm_sq: b_sq.clone(),
                    threshold_sq: thr,
                    is_witness: true,
                })
            })
            .collect();
        wit.sort_by(|a, b| a.mode.xi.cmp(&b.mode.xi));
        witnesses.extend(wit);

        // closest miss: minimize b²·(1+λ)^{2ν} among non-witnesses
        let miss = scanned
            .par_iter()
            .filter_map(|(mode, b_sq)| {
                let thr = threshold_sq(&mode.lambda, nu);
                (b_sq >= &thr).then(|| {
                    let ratio = b_sq / &thr;
                    (ratio, mode.xi.clone(), mode.clone(), b_sq.clone(), thr)
                })
            })
            .min_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
        if let Some((_, _, mode, b_sq, thr)) = miss {
            near_misses.push(SolvabilityEntry {
                nu,
                mode,
                b_norm_sq: b_sq,
                threshold_sq: thr,
                is_witness: false,
            });
        }
    }

    let certificate = certificate_lower_bound(ts);
    SolvabilityReport {
        nu_max,
        radius: tr.radius,
        witnesses,
        near_misses,
        certificate,
        observed_min_b_sq,
    }
}

/// `1/D²` with `D` the largest lcm of entry denominators over the rows: any
/// mode with `b ≠ 0` has some `b_j ∈ (1/D_j)ℤ ∖ {0}`.
pub fn certificate_lower_bound(ts: &TorusStructure) -> Rational {
    let a = ts.coefficients();
    let mut d_max = BigInt::one();
    for i in 0..a.rows() {
        let mut lcm = BigInt::one();
        for j in 0..a.cols() {
            lcm = lcm.lcm(a[(i, j)].re.denom());
        }
        if lcm > d_max {
            d_max = lcm;
        }
    }
    Rational::new(BigInt::one(), &d_max * &d_max)
}

/// The homotopy solution of `d'v = −Δ_𝔳 f` on one mode: `v = ι_{ib} f`,
/// where Δ_𝔳 acts as the scalar `|b|²`. Requires `d'f = 0` and degree ≥ 1.
pub fn koszul_homotopy(mf: &ModeForm) -> Result<ModeForm, TorusError> {
    if mf.form.degree() == 0 {
        return Err(TorusError::DegreeZero);
    }
    let symbol = mf.mode.symbol();
    if !wedge(&symbol, &mf.form).is_zero() {
        return Err(TorusError::NotClosed);
    }
    let v = contract(&symbol, &mf.form);
    Ok(ModeForm {
        mode: mf.mode.clone(),
        form: v,
    })
}

/// One row of the counterexample table: a witness mode, its exact decay
/// bound, and the mass of the mode-restricted solution of `d'u = f`.
#[derive(Clone, Debug)]
pub struct WitnessChainRow {
    pub nu: u32,
    pub mode: Mode,
    /// `‖L_j φ‖ = |b_j|` per field.
    pub field_norms: Vec<Rational>,
    pub b_norm_sq: Rational,
    pub threshold_sq: Rational,
    /// `‖𝓕_λ(f)‖²` — the mode coefficient mass of the right-hand side.
    pub rhs_norm_sq: Rational,
    /// Coefficients `u_Ĵ(j)` of the exact solution on the distinguished
    /// multi-indices, `j = 0..=q`.
    pub solution_coeffs: Vec<GaussianRational>,
    /// `Σ_j |u_Ĵ(j)|²`.
    pub solution_mass: Rational,
    /// `b_0² / Σ_{j≤q} b_j²`, the Cauchy–Schwarz floor for any solution.
    pub mass_lower_bound: Rational,
    /// `1/(q+1)`, the degree-level floor after max-normalization.
    pub degree_floor: Rational,
}

#[derive(Debug)]
pub struct WitnessChain {
    pub q: usize,
    pub rows: Vec<WitnessChainRow>,
}

/// Builds the witness table for degree `q` from a supply of candidate modes:
/// for each `ν` the least-λ candidate (λ strictly increasing) obeying
/// `|b|² < (1+λ)^{−2ν}` with the max field norm in the first slot. The
/// right-hand side is `f = Σ_j (L_j φ) τ_j ∧ τ_1 ∧ … ∧ τ_q` restricted to the
/// mode, and `d'u = f` is solved exactly.
pub fn counterexample_witness_chain(
    ts: &TorusStructure,
    q: usize,
    count: u32,
    candidates: &[Vec<BigInt>],
) -> Result<WitnessChain, TorusError> {
    let n = ts.rank();
    if q + 1 > n {
        return Err(TorusError::ChainDegree { q, n });
    }
    let mut modes: Vec<Mode> = candidates.iter().map(|xi| ts.mode(xi.clone())).collect();
    modes.sort_by(|a, b| a.lambda.cmp(&b.lambda).then_with(|| a.xi.cmp(&b.xi)));

    let mut rows = Vec::new();
    let mut lambda_floor: Option<BigInt> = None;
    for nu in 1..=count {
        let found = modes.iter().find(|m| {
            if m.is_kernel_mode() {
                return false;
            }
            if let Some(fl) = &lambda_floor {
                if &m.lambda <= fl {
                    return false;
                }
            }
            // max-normalization: the first field must carry the max norm
            let b0 = m.b[0].abs();
            if m.b.iter().any(|bj| bj.abs() > b0) {
                return false;
            }
            m.delta_scalar() < threshold_sq(&m.lambda, nu)
        });
        let Some(mode) = found.cloned() else { continue };
        lambda_floor = Some(mode.lambda.clone());
        rows.push(build_chain_row(&mode, q, nu)?);
    }
    Ok(WitnessChain { q, rows })
}

fn build_chain_row(mode: &Mode, q: usize, nu: u32) -> Result<WitnessChainRow, TorusError> {
    let n = mode.rank();
    let symbol = mode.symbol();
    // fixed block τ_1 ∧ … ∧ τ_q (0-based indices 1..=q)
    let fixed = MultiIndex::new((1..=q).collect());
    let rhs_form = wedge(&symbol, &InvariantForm::basis_form(n, &fixed));
    // ‖𝓕(f)‖²: j = 0 lands on (0..=q), j > q give the other surviving wedges
    let rhs_norm_sq: Rational = rhs_form.coeffs().iter().map(GaussianRational::norm_sqr).sum();

    let matrix = mode_differential(mode, q);
    let u = matrix
        .solve(rhs_form.coeffs())
        .expect("f = d'(tau block) is in the range by construction");

    let full = MultiIndex::new((0..=q).collect());
    let mut solution_coeffs = Vec::with_capacity(q + 1);
    let mut solution_mass = Rational::zero();
    for j in 0..=q {
        let indices: Vec<usize> = full
            .indices()
            .iter()
            .copied()
            .filter(|&x| x != j)
            .collect();
        let pos = crate::invariant_complex::lex_position(n, &MultiIndex::new(indices));
        let coeff = u[pos].clone();
        solution_mass += coeff.norm_sqr();
        solution_coeffs.push(coeff);
    }

    let head_sq = &mode.b[0] * &mode.b[0];
    let block_sq: Rational = (0..=q).map(|j| &mode.b[j] * &mode.b[j]).sum();
    let mass_lower_bound = &head_sq / &block_sq;
    let degree_floor = Rational::new(BigInt::one(), BigInt::from(q as i64 + 1));

    Ok(WitnessChainRow {
        nu,
        mode: mode.clone(),
        field_norms: mode.b.iter().map(Signed::abs).collect(),
        b_norm_sq: mode.delta_scalar(),
        threshold_sq: threshold_sq(&mode.lambda, nu),
        rhs_norm_sq,
        solution_coeffs,
        solution_mass,
        mass_lower_bound,
        degree_floor,
    })
}

/// Bundled torus structures.
pub mod catalog {
    use super::*;
    use crate::exactlin::{rat, rat_int};

    /// `A = [[1, 1/2]]` on 𝕋²: a closed rational line.
    pub fn half_slope() -> TorusStructure {
        TorusStructure::new(2, vec![vec![rat_int(1), rat(1, 2)]]).unwrap()
    }

    /// The full de Rham case `A = I` on 𝕋².
    pub fn identity2() -> TorusStructure {
        TorusStructure::new(2, vec![vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(1)]])
            .unwrap()
    }

    /// A single field on 𝕋¹.
    pub fn circle() -> TorusStructure {
        TorusStructure::new(1, vec![vec![rat_int(1)]]).unwrap()
    }

    /// `A = [[1, α₃]]` with `α₃ = 110001/1000000`, the three-term factorial
    /// series truncation on 𝕋².
    pub fn deep_rational() -> TorusStructure {
        TorusStructure::new(2, vec![vec![rat_int(1), rat(110001, 1000000)]]).unwrap()
    }

    /// Σ_{j≤terms} 10^{−j!}.
    pub fn liouville_slope(terms: u32) -> Rational {
        let mut acc = Rational::zero();
        for j in 1..=terms {
            let denom = BigInt::from(10u32).pow(factorial(j));
            acc += Rational::new(BigInt::one(), denom);
        }
        acc
    }

    /// The rank-2 structure on 𝕋³ carrying the designated slope in its first
    /// row: `L_1 = ∂_2 + α ∂_3`, `L_2 = ∂_1`.
    pub fn liouville(terms: u32) -> TorusStructure {
        let alpha = liouville_slope(terms);
        TorusStructure::new(
            3,
            vec![
                vec![rat_int(0), rat_int(1), alpha],
                vec![rat_int(1), rat_int(0), rat_int(0)],
            ],
        )
        .unwrap()
    }

    /// Witness-mode supply for [`liouville`]: the partial sums of the series
    /// as modes `ξ = (0, num(s_j), −10^{j!})` for `j < terms`.
    pub fn liouville_candidates(terms: u32) -> Vec<Vec<BigInt>> {
        (1..terms)
            .map(|j| {
                let denom = BigInt::from(10u32).pow(factorial(j));
                let numer: BigInt = (1..=j)
                    .map(|i| BigInt::from(10u32).pow(factorial(j) - factorial(i)))
                    .sum();
                vec![BigInt::zero(), numer, -denom]
            })
            .collect()
    }

    pub(crate) fn factorial(j: u32) -> u32 {
        (1..=j).product()
    }
}

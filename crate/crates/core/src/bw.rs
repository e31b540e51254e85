//! Clifford-algebra identities behind the Bochner–Weitzenböck estimates,
//! evaluated as dense matrices and compared entrywise.
//!
//! `lambda` is a scaling of the frame; it is admissible when
//! `lambda_i lambda_j <= 1` for all `i != j`.

use minilp::{ComparisonOp, OptimizationDirection, Problem};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::clifford::{self, pair_products, DoubleClifford, Monomial, Pair, SparseOp};
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix};
use crate::tensors::{lambda2_to_tensor, CurvatureOperator, Tensor4, TorsionTensor};

fn cs(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn add_pairs(a: &[Pair], b: &[Pair]) -> Vec<Pair> {
    a.iter().zip(b).map(|((i, j, x), (_, _, y))| (*i, *j, x.plus(y))).collect()
}

fn dim_of(gens: &[Monomial]) -> usize {
    gens.first().map_or(1, |g| g.dim())
}

/// Fails with `InadmissibleScaling` if some `lambda_i lambda_j > 1 + tol`, `i != j`.
pub fn check_admissible(lambda: &[f64], tol: f64) -> Result<()> {
    for i in 0..lambda.len() {
        if lambda[i] <= 0.0 {
            return Err(Error::InputMismatch(format!("lambda_{i} = {} is not positive", lambda[i])));
        }
        for j in (i + 1)..lambda.len() {
            let product = lambda[i] * lambda[j];
            if product > 1.0 + tol {
                return Err(Error::InadmissibleScaling { i, j, product });
            }
        }
    }
    Ok(())
}

/// Draw `mu_i ∈ [0.5, 1]` and normalise so the largest pairwise product is one.
pub fn random_admissible_scaling<R: Rng>(m: usize, rng: &mut R) -> Vec<f64> {
    let mu: Vec<f64> = (0..m).map(|_| rng.gen_range(0.5..=1.0)).collect();
    let mut max_pair: f64 = 0.0;
    for i in 0..m {
        for j in (i + 1)..m {
            max_pair = max_pair.max(mu[i] * mu[j]);
        }
    }
    if max_pair == 0.0 {
        return mu;
    }
    let s = max_pair.sqrt();
    mu.into_iter().map(|x| x / s).collect()
}

fn check_len<T>(m: usize, lambda: &[T]) -> Result<()> {
    if lambda.len() != m {
        return Err(Error::DimensionMismatch { expected: m, found: lambda.len() });
    }
    Ok(())
}

/// Scaled squared torsion `Σ_{ijk} w(i,j,k) tau_ijk²`.
fn weighted_tau_sq(tau: &TorsionTensor, w: impl Fn(usize, usize, usize) -> f64) -> f64 {
    let m = tau.m();
    let mut s = 0.0;
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let t = tau.get(i, j, k);
                s += w(i, j, k) * t * t;
            }
        }
    }
    s
}

fn lambda4(t: &Tensor4, lambda: &[f64]) -> Tensor4 {
    Tensor4::from_fn(t.dim(), |i, j, k, l| lambda[i] * lambda[j] * lambda[k] * lambda[l] * t.get(i, j, k, l))
}

/// Residual of the scaled square identity in one Clifford representation:
///
/// `(1/16) Σ λ⁴ R'_ijkl c_i c_j c_k c_l = κ/8 - |tau|²/32 - (1/8) Σ (1 - λ_i²λ_j²) R'_ijji
///   + (1/96) Σ λ⁴ dtau_ijkl c_i c_j c_k c_l`,
/// with `|tau|² = Σ_{ijk} tau_ijk²` and `λ⁴ = λ_iλ_jλ_kλ_l`.
pub fn square_identity_scaled(
    gens: &[Monomial],
    curv: &CurvatureOperator,
    tau: &TorsionTensor,
    dtau: &Tensor4,
    kappa: f64,
    lambda: &[f64],
) -> Result<f64> {
    let m = curv.m();
    check_len(m, lambda)?;
    check_len(m, gens)?;
    let d = dim_of(gens);
    let pairs = pair_products(gens, |_, _| 1.0);
    let lhs = clifford::quartic_from_pairs(&pairs, &pairs, &lambda4(curv.tensor(), lambda), d) * cs(1.0 / 16.0);
    let mut diag = 0.0;
    for i in 0..m {
        for j in 0..m {
            diag += (1.0 - (lambda[i] * lambda[j]).powi(2)) * curv.get(i, j, j, i);
        }
    }
    let scalar = kappa / 8.0 - tau.sum_sq() / 32.0 - diag / 8.0;
    let rhs = linalg::cscalar(d, scalar)
        + clifford::quartic_from_pairs(&pairs, &pairs, &lambda4(dtau, lambda), d) * cs(1.0 / 96.0);
    Ok(linalg::cmax_abs(&(lhs - rhs)))
}

/// Residual of `(1/16) Σ R'_ijkl c_i c_j c_k c_l = κ/8 + |tau|²/96 - ((1/12) Σ tau_ijk c_i c_j c_k)²`.
pub fn square_identity_cubic(
    gens: &[Monomial],
    curv: &CurvatureOperator,
    tau: &TorsionTensor,
    kappa: f64,
) -> Result<f64> {
    check_len(curv.m(), gens)?;
    let d = dim_of(gens);
    let pairs = pair_products(gens, |_, _| 1.0);
    let lhs = clifford::quartic_from_pairs(&pairs, &pairs, curv.tensor(), d) * cs(1.0 / 16.0);
    let cubic = clifford::cubic_element(gens, tau, 1.0 / 12.0)?;
    let rhs = linalg::cscalar(d, kappa / 8.0 + tau.sum_sq() / 96.0) - &cubic * &cubic;
    Ok(linalg::cmax_abs(&(lhs - rhs)))
}

/// Symmetric square root `B` of the curvature operator, also as a 4-index
/// array normalised so that `Σ_pq B_ijpq B_pqkl = -R'_ijkl`.
#[derive(Debug, Clone)]
pub struct SqrtCurvature {
    pub matrix: DMatrix<f64>,
    pub tensor: Tensor4,
    /// Largest entry of `B² - op`.
    pub residual: f64,
}

/// Fails with `NotPsd` when an eigenvalue is below `-10·tol`; smaller negative
/// eigenvalues are clipped to zero.
pub fn sqrt_curvature(curv: &CurvatureOperator, tol: f64) -> Result<SqrtCurvature> {
    let m = curv.m();
    let op = curv.operator();
    let n = op.nrows();
    let matrix = if n == 0 {
        DMatrix::zeros(0, 0)
    } else {
        let eig = ((op + op.transpose()) * 0.5).symmetric_eigen();
        let min = eig.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
        if min < -10.0 * tol {
            return Err(Error::NotPsd { min_eigenvalue: min });
        }
        let roots = DMatrix::from_diagonal(&eig.eigenvalues.map(|x| x.max(0.0).sqrt()));
        &eig.eigenvectors * roots * eig.eigenvectors.transpose()
    };
    let residual = linalg::max_abs(&(&matrix * &matrix - op));
    let tensor = lambda2_to_tensor(m, &matrix, std::f64::consts::FRAC_1_SQRT_2);
    Ok(SqrtCurvature { matrix, tensor, residual })
}

/// `X_pq = Σ_ij B_pqij A_ij` for `p<q`.
fn sqrt_contractions(sqrt: &SqrtCurvature, a: &[Pair]) -> Vec<SparseOp> {
    let m = sqrt.tensor.dim();
    let mut out = Vec::new();
    for p in 0..m {
        for q in (p + 1)..m {
            let mut x = SparseOp::default();
            for (i, j, aij) in a {
                let b = sqrt.tensor.get(p, q, *i, *j);
                if b != 0.0 {
                    x.add_scaled(2.0 * b, aij);
                }
            }
            out.push(x);
        }
    }
    out
}

/// `Σ_{pq} X_pq²` over all ordered pairs.
fn sum_of_squares(xs: &[SparseOp], d: usize) -> CMatrix {
    let mut s = CMatrix::zeros(d, d);
    for x in xs {
        s += x.square(d);
    }
    s * cs(2.0)
}

#[derive(Debug, Clone, Serialize)]
pub struct CouplingReport {
    /// `|(1/16) Σ R' A A + (1/16) Σ (Σ B A)²|`.
    pub square_residual: f64,
    pub min_eigenvalue: f64,
}

/// The coupling term `(1/16) Σ R'_ijkl A_ij A_kl` with `A_ij = λ_iλ_j C_iC_j + Ĉ_iĈ_j`
/// equals `-(1/16) Σ_pq (Σ_ij B_pqij A_ij)²` and is therefore nonnegative.
pub fn coupling_term_psd(
    curv: &CurvatureOperator,
    sqrt: &SqrtCurvature,
    dbl: &DoubleClifford,
    lambda: &[f64],
) -> Result<CouplingReport> {
    check_len(curv.m(), lambda)?;
    check_len(curv.m(), dbl.c())?;
    let d = dbl.dim();
    let a = add_pairs(
        &pair_products(dbl.c_mono(), |i, j| lambda[i] * lambda[j]),
        &pair_products(dbl.c_hat_mono(), |_, _| 1.0),
    );
    let direct = clifford::quartic_from_pairs(&a, &a, curv.tensor(), d) * cs(1.0 / 16.0);
    let via_sqrt = sum_of_squares(&sqrt_contractions(sqrt, &a), d) * cs(-1.0 / 16.0);
    Ok(CouplingReport {
        square_residual: linalg::cmax_abs(&(&direct - via_sqrt)),
        min_eigenvalue: linalg::herm_eigenvalues(&direct).first().copied().unwrap_or(0.0),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ZeroOrderReport {
    /// Difference between the square form and the expanded curvature form.
    pub consistency_residual: f64,
    pub min_eigenvalue: f64,
    pub hermitian_residual: f64,
}

/// Zero-order term of the squared twisted Dirac operator,
/// `Z = ((1/12) Σ tau Ĉ Ĉ Ĉ)² + (1/16) Σ R'_ijkl (C_iC_j + Ĉ_iĈ_j)(C_kC_l + Ĉ_kĈ_l)`,
/// compared with `κ/4 + (1/8) Σ R' C C Ĉ Ĉ + (1/96) Σ dtau C C C C - |tau|²/48`.
pub fn blw_zero_order(
    curv: &CurvatureOperator,
    tau: &TorsionTensor,
    dtau: &Tensor4,
    kappa: f64,
    dbl: &DoubleClifford,
) -> Result<ZeroOrderReport> {
    check_len(curv.m(), dbl.c())?;
    let d = dbl.dim();
    let cc = pair_products(dbl.c_mono(), |_, _| 1.0);
    let hh = pair_products(dbl.c_hat_mono(), |_, _| 1.0);
    let a = add_pairs(&cc, &hh);
    let cubic = clifford::cubic_element(dbl.c_hat_mono(), tau, 1.0 / 12.0)?;
    let z = &cubic * &cubic + clifford::quartic_from_pairs(&a, &a, curv.tensor(), d) * cs(1.0 / 16.0);
    let expanded = linalg::cscalar(d, kappa / 4.0 - tau.sum_sq() / 48.0)
        + clifford::quartic_from_pairs(&cc, &hh, curv.tensor(), d) * cs(1.0 / 8.0)
        + clifford::quartic_from_pairs(&cc, &cc, dtau, d) * cs(1.0 / 96.0);
    Ok(ZeroOrderReport {
        consistency_residual: linalg::cmax_abs(&(&z - expanded)),
        min_eigenvalue: linalg::herm_eigenvalues(&z).first().copied().unwrap_or(0.0),
        hermitian_residual: linalg::cmax_abs(&(&z - z.adjoint())),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct RemainderReport {
    /// `|E(λ) + κ/4 - Rem(λ)|`.
    pub rearrangement_residual: f64,
    pub min_eigenvalue: f64,
}

/// Split the scaled curvature term
/// `E(λ) = (1/8) Σ λ_iλ_j R'_ijkl C_iC_jĈ_kĈ_l + (1/96) Σ λ⁴ dtau CCCC - (1/48) Σ λ_i²λ_j²λ_k² tau_ijk²`
/// as `-κ/4 + Rem(λ)`, where
/// `Rem(λ) = cubic² - (1/16) Σ (Σ B (λλ CC + ĈĈ))² + (1/8) Σ (1 - λ_i²λ_j²) R'_ijji
///   + (1/48) Σ (1 - λ_i²λ_j²λ_k²) tau_ijk²` is a sum of nonnegative terms.
#[allow(clippy::too_many_arguments)]
pub fn estimate_remainder(
    curv: &CurvatureOperator,
    sqrt: &SqrtCurvature,
    tau: &TorsionTensor,
    dtau: &Tensor4,
    kappa: f64,
    dbl: &DoubleClifford,
    lambda: &[f64],
    tol: f64,
) -> Result<RemainderReport> {
    let m = curv.m();
    check_len(m, lambda)?;
    check_len(m, dbl.c())?;
    check_admissible(lambda, tol)?;
    let d = dbl.dim();
    let l2 = |i: usize| lambda[i] * lambda[i];

    let scaled_cc = pair_products(dbl.c_mono(), |i, j| lambda[i] * lambda[j]);
    let cc = pair_products(dbl.c_mono(), |_, _| 1.0);
    let hh = pair_products(dbl.c_hat_mono(), |_, _| 1.0);
    let e = clifford::quartic_from_pairs(&scaled_cc, &hh, curv.tensor(), d) * cs(1.0 / 8.0)
        + clifford::quartic_from_pairs(&cc, &cc, &lambda4(dtau, lambda), d) * cs(1.0 / 96.0)
        - linalg::cscalar(d, weighted_tau_sq(tau, |i, j, k| l2(i) * l2(j) * l2(k)) / 48.0);

    let cubic = clifford::cubic_element(dbl.c_hat_mono(), tau, 1.0 / 12.0)?;
    let a = add_pairs(&scaled_cc, &hh);
    let mut diag = 0.0;
    for i in 0..m {
        for j in 0..m {
            diag += (1.0 - l2(i) * l2(j)) * curv.get(i, j, j, i);
        }
    }
    let tau_rest = weighted_tau_sq(tau, |i, j, k| 1.0 - l2(i) * l2(j) * l2(k));
    let rem = &cubic * &cubic - sum_of_squares(&sqrt_contractions(sqrt, &a), d) * cs(1.0 / 16.0)
        + linalg::cscalar(d, diag / 8.0 + tau_rest / 48.0);

    let lhs = e + linalg::cscalar(d, kappa / 4.0);
    Ok(RemainderReport {
        rearrangement_residual: linalg::cmax_abs(&(lhs - &rem)),
        min_eigenvalue: linalg::herm_eigenvalues(&rem).first().copied().unwrap_or(0.0),
    })
}

/// Outcome of the equality analysis for admissible scalings.
#[derive(Debug, Clone, Serialize)]
pub struct RigidityReport {
    /// Indices touched by a nonzero torsion component.
    pub support: Vec<usize>,
    /// Indices whose `ln λ_i` is pinned to zero by the constraints.
    pub forced_one: Vec<usize>,
    /// `(min, max)` of `ln λ_i` over the feasible region.
    pub log_range: Vec<(f64, f64)>,
    /// Every support index is forced to one.
    pub holds: bool,
}

const LOG_FLOOR: f64 = -50.0;

/// Admissible scalings that keep every `λ_pλ_qλ_r` on the torsion support equal
/// to one: in log coordinates a linear program per index.
pub fn rigidity(tau: &TorsionTensor, tol: f64) -> Result<RigidityReport> {
    let m = tau.m();
    let mut triples = Vec::new();
    let mut in_support = vec![false; m];
    for p in 0..m {
        for q in (p + 1)..m {
            for r in (q + 1)..m {
                if tau.get(p, q, r).abs() >= tol {
                    triples.push((p, q, r));
                    in_support[p] = true;
                    in_support[q] = true;
                    in_support[r] = true;
                }
            }
        }
    }
    let solve = |target: usize, dir: OptimizationDirection| -> Result<f64> {
        let mut lp = Problem::new(dir);
        let vars: Vec<_> =
            (0..m).map(|i| lp.add_var(if i == target { 1.0 } else { 0.0 }, (LOG_FLOOR, f64::INFINITY))).collect();
        for i in 0..m {
            for j in (i + 1)..m {
                lp.add_constraint([(vars[i], 1.0), (vars[j], 1.0)], ComparisonOp::Le, 0.0);
            }
        }
        for &(p, q, r) in &triples {
            lp.add_constraint([(vars[p], 1.0), (vars[q], 1.0), (vars[r], 1.0)], ComparisonOp::Eq, 0.0);
        }
        let sol = lp.solve().map_err(|e| Error::Solver(e.to_string()))?;
        Ok(sol[vars[target]])
    };
    let mut log_range = Vec::with_capacity(m);
    let mut forced_one = Vec::new();
    for i in 0..m {
        let lo = solve(i, OptimizationDirection::Minimize)?;
        let hi = solve(i, OptimizationDirection::Maximize)?;
        if lo.abs() < 1e-7 && hi.abs() < 1e-7 {
            forced_one.push(i);
        }
        log_range.push((lo, hi));
    }
    let support: Vec<usize> = (0..m).filter(|&i| in_support[i]).collect();
    let holds = support.iter().all(|i| forced_one.contains(i));
    Ok(RigidityReport { support, forced_one, log_range, holds })
}

//! Torsion, the curvature operator of the reductive connection on `Λ²p`,
//! Riemannian curvature and the positivity conditions built on them.
//!
//! All tensors live on `p` in the orthonormal frame of the [`ReductiveSplit`].
//! Conventions:
//!
//! * `tau[i][j][k] = <T(e_i, e_j), e_k>`.
//! * `R'_{ijkl} = <R'_{e_i,e_j} e_k, e_l>`, and the operator on `Λ²` has
//!   entries `<R'(e_i∧e_j), e_k∧e_l> = -R'_{ijkl}` in the basis `{e_i∧e_j : i<j}`
//!   declared orthonormal. Nonnegative curvature operator means PSD `op`.
//! * The same index convention is used for the Riemannian tensor `R`, so
//!   `R_{ijji}` is the sectional curvature of the plane `e_i∧e_j`.
//!
//! 4-index sums run over all indices, never over `i<j` only.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::ReductiveSplit;
use crate::linalg;

/// Dense `m³` array.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor3 {
    m: usize,
    data: Vec<f64>,
}

impl Tensor3 {
    pub fn zeros(m: usize) -> Self {
        Self { m, data: vec![0.0; m * m * m] }
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.data[(i * self.m + j) * self.m + k]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: f64) {
        self.data[(i * self.m + j) * self.m + k] = v;
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |a, x| a.max(x.abs()))
    }

    /// Worst violation of full antisymmetry (two generating transpositions).
    pub fn antisymmetry_residual(&self) -> f64 {
        let m = self.m;
        let mut worst: f64 = 0.0;
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let v = self.get(i, j, k);
                    worst = worst.max((v + self.get(j, i, k)).abs()).max((v + self.get(i, k, j)).abs());
                }
            }
        }
        worst
    }
}

/// Dense `m⁴` array.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor4 {
    m: usize,
    data: Vec<f64>,
}

impl Tensor4 {
    pub fn zeros(m: usize) -> Self {
        Self { m, data: vec![0.0; m * m * m * m] }
    }

    pub fn from_fn(m: usize, mut f: impl FnMut(usize, usize, usize, usize) -> f64) -> Self {
        let mut t = Self::zeros(m);
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    for l in 0..m {
                        t.set(i, j, k, l, f(i, j, k, l));
                    }
                }
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        self.data[((i * self.m + j) * self.m + k) * self.m + l]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, v: f64) {
        self.data[((i * self.m + j) * self.m + k) * self.m + l] = v;
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |a, x| a.max(x.abs()))
    }

    pub fn max_abs_diff(&self, other: &Tensor4) -> f64 {
        self.data.iter().zip(&other.data).fold(0.0, |a, (x, y)| a.max((x - y).abs()))
    }

    pub fn scaled(&self, s: f64) -> Tensor4 {
        Tensor4 { m: self.m, data: self.data.iter().map(|x| x * s).collect() }
    }

    /// Worst violation of full antisymmetry (three generating transpositions).
    pub fn antisymmetry_residual(&self) -> f64 {
        let m = self.m;
        let mut worst: f64 = 0.0;
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    for l in 0..m {
                        let v = self.get(i, j, k, l);
                        worst = worst
                            .max((v + self.get(j, i, k, l)).abs())
                            .max((v + self.get(i, k, j, l)).abs())
                            .max((v + self.get(i, j, l, k)).abs());
                    }
                }
            }
        }
        worst
    }

    /// Worst residual of the algebraic curvature symmetries: antisymmetry in
    /// each pair, pair exchange and the cyclic sum over the first three slots.
    pub fn curvature_symmetry_residual(&self) -> f64 {
        let m = self.m;
        let mut worst: f64 = 0.0;
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    for l in 0..m {
                        let v = self.get(i, j, k, l);
                        let cyc = v + self.get(j, k, i, l) + self.get(k, i, j, l);
                        worst = worst
                            .max((v + self.get(j, i, k, l)).abs())
                            .max((v + self.get(i, j, l, k)).abs())
                            .max((v - self.get(k, l, i, j)).abs())
                            .max(cyc.abs());
                    }
                }
            }
        }
        worst
    }

    /// Worst residual of the cyclic sum in the first three slots.
    pub fn first_bianchi_residual(&self) -> f64 {
        let m = self.m;
        let mut worst: f64 = 0.0;
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    for l in 0..m {
                        let cyc = self.get(i, j, k, l) + self.get(j, k, i, l) + self.get(k, i, j, l);
                        worst = worst.max(cyc.abs());
                    }
                }
            }
        }
        worst
    }
}

/// Alternating torsion 3-form `tau(X,Y,Z) = <T(X,Y),Z>` on `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct TorsionTensor {
    tau: Tensor3,
}

impl TorsionTensor {
    /// Wrap a 3-tensor, rejecting anything that is not alternating.
    pub fn new(tau: Tensor3, tol: f64) -> Result<Self> {
        let residual = tau.antisymmetry_residual();
        if residual >= tol {
            return Err(Error::NotNaturallyReductive { residual });
        }
        Ok(Self { tau })
    }

    pub fn zeros(m: usize) -> Self {
        Self { tau: Tensor3::zeros(m) }
    }

    pub fn m(&self) -> usize {
        self.tau.dim()
    }

    pub fn components(&self) -> &Tensor3 {
        &self.tau
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.tau.get(i, j, k)
    }

    /// `Σ_{ijk} tau_ijk²` over all index triples.
    pub fn sum_sq(&self) -> f64 {
        self.tau.data.iter().map(|x| x * x).sum()
    }

    /// Norm as a 3-form (sum over `i<j<k`).
    pub fn norm(&self) -> f64 {
        (self.sum_sq() / 6.0).sqrt()
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.tau.max_abs() < tol
    }

    /// `<T(e_i,e_j), T(e_k,e_l)>`.
    #[inline]
    pub fn t_inner(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        (0..self.m()).map(|p| self.get(i, j, p) * self.get(k, l, p)).sum()
    }

    /// `<T(e_i, T(e_j, e_k)), e_l>`.
    #[inline]
    pub fn t_nested(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        (0..self.m()).map(|p| self.get(j, k, p) * self.get(i, p, l)).sum()
    }

    /// Add `delta` to the `e_0∧e_1∧e_2` component, keeping the form alternating.
    /// Dimensions below three admit no 3-form and are returned unchanged.
    pub fn perturbed(&self, delta: f64) -> TorsionTensor {
        let mut out = self.clone();
        if self.m() < 3 || delta == 0.0 {
            return out;
        }
        let perms: [([usize; 3], f64); 6] = [
            ([0, 1, 2], 1.0),
            ([1, 2, 0], 1.0),
            ([2, 0, 1], 1.0),
            ([1, 0, 2], -1.0),
            ([0, 2, 1], -1.0),
            ([2, 1, 0], -1.0),
        ];
        for ([i, j, k], s) in perms {
            let v = out.tau.get(i, j, k);
            out.tau.set(i, j, k, v + s * delta);
        }
        out
    }
}

/// Symmetric curvature operator `R'` on `Λ²p` together with its 4-index view.
#[derive(Debug, Clone)]
pub struct CurvatureOperator {
    m: usize,
    op: DMatrix<f64>,
    r4: Tensor4,
}

/// Position of `e_i∧e_j` (`i<j`) in the ordered `Λ²` basis.
pub fn pair_index(m: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < m);
    i * m - i * (i + 1) / 2 + (j - i - 1)
}

/// `(position, sign)` of `e_i∧e_j` for any ordered pair, `None` on the diagonal.
pub fn signed_pair(m: usize, i: usize, j: usize) -> Option<(usize, f64)> {
    match i.cmp(&j) {
        std::cmp::Ordering::Less => Some((pair_index(m, i, j), 1.0)),
        std::cmp::Ordering::Greater => Some((pair_index(m, j, i), -1.0)),
        std::cmp::Ordering::Equal => None,
    }
}

/// Expand a matrix on `Λ²` into a 4-index array with pair antisymmetry:
/// `out_{ijkl} = factor · M[(ij),(kl)]` with the orientation signs applied.
pub fn lambda2_to_tensor(m: usize, mat: &DMatrix<f64>, factor: f64) -> Tensor4 {
    Tensor4::from_fn(m, |i, j, k, l| match (signed_pair(m, i, j), signed_pair(m, k, l)) {
        (Some((a, s)), Some((b, t))) => factor * s * t * mat[(a, b)],
        _ => 0.0,
    })
}

impl CurvatureOperator {
    /// From the symmetric matrix `<R'(e_i∧e_j), e_k∧e_l>`.
    pub fn from_operator(m: usize, op: DMatrix<f64>) -> Result<Self> {
        let n2 = m * (m.saturating_sub(1)) / 2;
        if op.nrows() != n2 || op.ncols() != n2 {
            return Err(Error::DimensionMismatch { expected: n2, found: op.nrows() });
        }
        let r4 = lambda2_to_tensor(m, &op, -1.0);
        Ok(Self { m, op, r4 })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn lambda2_dim(&self) -> usize {
        self.op.nrows()
    }

    pub fn operator(&self) -> &DMatrix<f64> {
        &self.op
    }

    /// `R'_{ijkl} = <R'_{e_i,e_j} e_k, e_l>`.
    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        self.r4.get(i, j, k, l)
    }

    pub fn tensor(&self) -> &Tensor4 {
        &self.r4
    }

    pub fn symmetry_residual(&self) -> f64 {
        linalg::max_abs(&(&self.op - self.op.transpose()))
    }

    /// Worst violation of `R'_{ijkl} = -R'_{jikl} = -R'_{ijlk}` and `R'_{ijkl} = R'_{klij}`.
    pub fn pair_symmetry_residual(&self) -> f64 {
        let m = self.m;
        let mut worst: f64 = 0.0;
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    for l in 0..m {
                        let v = self.get(i, j, k, l);
                        worst = worst
                            .max((v + self.get(j, i, k, l)).abs())
                            .max((v + self.get(i, j, l, k)).abs())
                            .max((v - self.get(k, l, i, j)).abs());
                    }
                }
            }
        }
        worst
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        linalg::sym_eigenvalues(&self.op)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues().first().copied().unwrap_or(0.0)
    }
}

/// Riemannian curvature data recovered from `(R', tau)`.
#[derive(Debug, Clone)]
pub struct RiemannPackage {
    pub riemann: Tensor4,
    pub ricci: DMatrix<f64>,
    pub scalar: f64,
    pub dtau: Tensor4,
    pub nabla_tau: Tensor4,
    pub bianchi_residual: f64,
    pub sectional_residual: f64,
}

impl RiemannPackage {
    /// `R_{ijji}` as an `m×m` matrix.
    pub fn sectional(&self) -> DMatrix<f64> {
        let m = self.riemann.dim();
        DMatrix::from_fn(m, m, |i, j| self.riemann.get(i, j, j, i))
    }
}

/// Torsion of the reductive connection: `tau_ijk = -<[e_i,e_j]_p, e_k>`.
pub fn reductive_torsion(split: &ReductiveSplit, tol: f64) -> Result<TorsionTensor> {
    let m = split.m();
    if m <= 2 {
        return Ok(TorsionTensor::zeros(m));
    }
    let mut tau = Tensor3::zeros(m);
    for i in 0..m {
        for j in 0..m {
            let coords = split.bracket_p_coords(i, j);
            for k in 0..m {
                tau.set(i, j, k, -coords[k]);
            }
        }
    }
    TorsionTensor::new(tau, tol)
}

/// Curvature operator of the reductive connection on a normal homogeneous
/// space: the Gram matrix of the vectors `[e_i,e_j]_h`, `i<j`.
pub fn reductive_curvature(split: &ReductiveSplit, tol: f64) -> Result<CurvatureOperator> {
    let m = split.m();
    let gram = split.algebra().gram();
    let mut vecs: Vec<DVector<f64>> = Vec::with_capacity(m * m.saturating_sub(1) / 2);
    for i in 0..m {
        for j in (i + 1)..m {
            vecs.push(split.bracket_h(i, j));
        }
    }
    let n2 = vecs.len();
    let op = DMatrix::from_fn(n2, n2, |a, b| vecs[a].dot(&(gram * &vecs[b])));
    let curv = CurvatureOperator::from_operator(m, op)?;
    let min = curv.min_eigenvalue();
    if min < -tol {
        return Err(Error::NotPsd { min_eigenvalue: min });
    }
    Ok(curv)
}

/// `dtau(X,Y,Z,W) = 2(<T(X,Y),T(Z,W)> + <T(Y,Z),T(X,W)> + <T(Z,X),T(Y,W)>)`.
pub fn dtau_from_torsion(tau: &TorsionTensor) -> Tensor4 {
    Tensor4::from_fn(tau.m(), |i, j, k, l| {
        2.0 * (tau.t_inner(i, j, k, l) + tau.t_inner(j, k, i, l) + tau.t_inner(k, i, j, l))
    })
}

/// Exterior derivative of an invariant 3-form on `G/H`, evaluated on the frame:
/// `dω(X_0..X_3) = Σ_{a<b} (-1)^{a+b} ω([X_a,X_b]_p, X_0..X̂_a..X̂_b..X_3)`.
///
/// Independent of any torsion identity; serves as the second route to `dtau`.
pub fn exterior_derivative(split: &ReductiveSplit, form: &TorsionTensor) -> Tensor4 {
    let m = split.m();
    if m == 0 {
        return Tensor4::zeros(0);
    }
    // q[a][b] = coordinates of [e_a, e_b]_p
    let q: Vec<Vec<DVector<f64>>> = (0..m).map(|a| (0..m).map(|b| split.bracket_p_coords(a, b)).collect()).collect();
    let omega_br =
        |a: usize, b: usize, x: usize, y: usize| -> f64 { (0..m).map(|c| q[a][b][c] * form.get(c, x, y)).sum::<f64>() };
    Tensor4::from_fn(m, |i, j, k, l| {
        let x = [i, j, k, l];
        let mut s = 0.0;
        for a in 0..4 {
            for b in (a + 1)..4 {
                let rest: Vec<usize> = (0..4).filter(|&r| r != a && r != b).map(|r| x[r]).collect();
                let sign = if (a + b) % 2 == 0 { 1.0 } else { -1.0 };
                s += sign * omega_br(x[a], x[b], rest[0], rest[1]);
            }
        }
        s
    })
}

/// Recover the Riemannian curvature from `R'` and `tau`, with `∇tau = dtau/4`:
///
/// `R_{XY}Z = R'_{XY}Z - (∇_X T)(Y,Z) - T(X,T(Y,Z))/4 + T(Y,T(X,Z))/4`.
///
/// No identities are enforced; see [`riemann_from_connection`].
pub fn riemann_package(curv: &CurvatureOperator, tau: &TorsionTensor) -> Result<RiemannPackage> {
    let m = curv.m();
    if tau.m() != m {
        return Err(Error::DimensionMismatch { expected: m, found: tau.m() });
    }
    let dtau = dtau_from_torsion(tau);
    let nabla_tau = dtau.scaled(0.25);
    let riemann = Tensor4::from_fn(m, |i, j, k, l| {
        curv.get(i, j, k, l) - nabla_tau.get(i, j, k, l) - 0.25 * tau.t_nested(i, j, k, l)
            + 0.25 * tau.t_nested(j, i, k, l)
    });
    let ricci = DMatrix::from_fn(m, m, |i, j| (0..m).map(|k| riemann.get(i, k, k, j)).sum());
    let scalar = ricci.trace();
    let bianchi_residual = riemann.first_bianchi_residual();
    let mut sectional_residual: f64 = 0.0;
    for i in 0..m {
        for j in 0..m {
            let lhs = curv.get(i, j, j, i);
            let rhs = riemann.get(i, j, j, i) - 0.25 * tau.t_inner(i, j, i, j);
            sectional_residual = sectional_residual.max((lhs - rhs).abs());
        }
    }
    Ok(RiemannPackage { riemann, ricci, scalar, dtau, nabla_tau, bianchi_residual, sectional_residual })
}

/// [`riemann_package`], failing with `IdentityViolation` if `R` misses the
/// first Bianchi identity or the sectional relation at `tol`.
pub fn riemann_from_connection(curv: &CurvatureOperator, tau: &TorsionTensor, tol: f64) -> Result<RiemannPackage> {
    let pkg = riemann_package(curv, tau)?;
    if pkg.bianchi_residual >= tol {
        return Err(Error::IdentityViolation {
            name: "first Bianchi identity of R".into(),
            residual: pkg.bianchi_residual,
        });
    }
    if pkg.sectional_residual >= tol {
        return Err(Error::IdentityViolation { name: "sectional relation".into(), residual: pkg.sectional_residual });
    }
    Ok(pkg)
}

/// Levi-Civita derivative of a `∇'`-parallel 3-form, from `∇^g = ∇' - T/2`:
/// `(∇_X tau)(Y,Z,W) = ½ (tau(T(X,Y),Z,W) + tau(Y,T(X,Z),W) + tau(Y,Z,T(X,W)))`.
pub fn levi_civita_derivative(tau: &TorsionTensor) -> Tensor4 {
    let m = tau.m();
    Tensor4::from_fn(m, |x, y, z, w| {
        let mut s = 0.0;
        for p in 0..m {
            s += tau.get(x, y, p) * tau.get(p, z, w)
                + tau.get(x, z, p) * tau.get(y, p, w)
                + tau.get(x, w, p) * tau.get(y, z, p);
        }
        0.5 * s
    })
}

/// Sectional curvatures of a normal homogeneous metric from the bracket:
/// `K(e_i,e_j) = |[e_i,e_j]_h|² + |[e_i,e_j]_p|²/4`.
pub fn homogeneous_sectional(split: &ReductiveSplit) -> DMatrix<f64> {
    let m = split.m();
    let alg = split.algebra();
    DMatrix::from_fn(m, m, |i, j| {
        let h = split.bracket_h(i, j);
        let p = split.bracket_p_coords(i, j);
        alg.inner(&h, &h) + 0.25 * p.norm_squared()
    })
}

/// `<R'(X,Y)Y,X> = <R(X,Y)Y,X> - |T(X,Y)|²/4` on all frame pairs, with the
/// Riemannian sectional curvatures supplied independently.
pub fn sectional_relation_residual(curv: &CurvatureOperator, tau: &TorsionTensor, sectional: &DMatrix<f64>) -> f64 {
    let m = curv.m();
    let mut worst: f64 = 0.0;
    for i in 0..m {
        for j in 0..m {
            let rhs = sectional[(i, j)] - 0.25 * tau.t_inner(i, j, i, j);
            worst = worst.max((curv.get(i, j, j, i) - rhs).abs());
        }
    }
    worst
}

/// Worst residual of `(∇_X T)(Y,Z) + ½(T(X,T(Y,Z)) + T(Y,T(Z,X)) + T(Z,T(X,Y))) = 0`
/// with `∇tau = dtau/4`.
pub fn parallel_torsion_residual(tau: &TorsionTensor, dtau: &Tensor4) -> f64 {
    let m = tau.m();
    let mut worst: f64 = 0.0;
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                for l in 0..m {
                    let cyc = tau.t_nested(i, j, k, l) + tau.t_nested(j, k, i, l) + tau.t_nested(k, i, j, l);
                    worst = worst.max((0.25 * dtau.get(i, j, k, l) + 0.5 * cyc).abs());
                }
            }
        }
    }
    worst
}

/// `S_{XYZW} = R'_{XYZW} - <T(T(X,Y),Z),W>` must have the symmetries of a
/// Riemannian curvature tensor; returns the worst residual.
pub fn bianchi_tensor_check(curv: &CurvatureOperator, tau: &TorsionTensor) -> f64 {
    let m = curv.m();
    let s = Tensor4::from_fn(m, |i, j, k, l| {
        let ttt: f64 = (0..m).map(|p| tau.get(i, j, p) * tau.get(p, k, l)).sum();
        curv.get(i, j, k, l) - ttt
    });
    s.curvature_symmetry_residual()
}

/// Orthonormal basis (columns, `p` coordinates) of `ker T`.
pub fn torsion_kernel(tau: &TorsionTensor, tol: f64) -> DMatrix<f64> {
    let m = tau.m();
    // column v holds (tau(e_v, e_j, e_k))_{jk}
    let a = DMatrix::from_fn(m * m, m, |row, v| tau.get(v, row / m, row % m));
    linalg::null_space(&a, tol)
}

/// Curvature hypotheses of the extremality theorems at one point.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionReport {
    pub rprime_min_eigenvalue: f64,
    pub rprime_psd: bool,
    pub tau_nonzero: bool,
    pub tau_norm: f64,
    pub torsion_kernel_dim: usize,
    /// Smallest eigenvalue of `ricci` restricted to `ker T`; `None` when the kernel is trivial.
    pub ricci_min_on_kernel: Option<f64>,
    /// `ricci > 0` on `ker T` and `T ≠ 0`.
    pub condition_1: bool,
    pub ricci_eigenvalues: Vec<f64>,
    pub scalar: f64,
    pub einstein_gap_max_eigenvalue: f64,
    /// `ricci > 0` and `2 ricci - scalar·g < 0`.
    pub condition_2: bool,
    /// `ker ricci ≠ 0`.
    pub euclidean_factor: bool,
    /// Worst `|[v, e_i]|` over unit `v ∈ ker ricci` and basis vectors of `g`.
    pub euclidean_central_residual: f64,
    pub euclidean_central: bool,
    /// `(R' ≥ 0 and condition 1) ⇒ condition 2`.
    pub rigidity_implication_holds: bool,
    pub tol: f64,
}

pub fn extremality_report(
    split: &ReductiveSplit,
    pkg: &RiemannPackage,
    tau: &TorsionTensor,
    curv: &CurvatureOperator,
    tol: f64,
) -> ConditionReport {
    let m = curv.m();
    let rprime_min = curv.min_eigenvalue();
    let rprime_psd = rprime_min >= -tol;
    let tau_nonzero = !tau.is_zero(tol);

    let kernel = torsion_kernel(tau, tol);
    let ricci_min_on_kernel = if kernel.ncols() == 0 {
        None
    } else {
        Some(linalg::min_eigenvalue(&(kernel.transpose() * &pkg.ricci * &kernel)))
    };
    let condition_1 = tau_nonzero && ricci_min_on_kernel.is_none_or(|v| v > tol);

    let ricci_eigenvalues = linalg::sym_eigenvalues(&pkg.ricci);
    let ricci_min = ricci_eigenvalues.first().copied().unwrap_or(0.0);
    let gap = &pkg.ricci * 2.0 - DMatrix::identity(m, m) * pkg.scalar;
    let gap_max = linalg::sym_eigenvalues(&gap).last().copied().unwrap_or(0.0);
    let condition_2 = m > 0 && ricci_min > tol && gap_max < -tol;

    let ricci_kernel = linalg::null_space(&pkg.ricci, tol.sqrt());
    let euclidean_factor = ricci_kernel.ncols() > 0;
    let alg = split.algebra();
    let mut central: f64 = 0.0;
    for c in 0..ricci_kernel.ncols() {
        let v = split.p_to_algebra(&ricci_kernel.column(c).into_owned());
        let ad = alg.ad_matrix(&v).expect("embedded vector has algebra dimension");
        central = central.max(linalg::max_abs(&ad));
    }

    ConditionReport {
        rprime_min_eigenvalue: rprime_min,
        rprime_psd,
        tau_nonzero,
        tau_norm: tau.norm(),
        torsion_kernel_dim: kernel.ncols(),
        ricci_min_on_kernel,
        condition_1,
        ricci_eigenvalues,
        scalar: pkg.scalar,
        einstein_gap_max_eigenvalue: gap_max,
        condition_2,
        euclidean_factor,
        euclidean_central_residual: central,
        euclidean_central: central < tol.sqrt(),
        rigidity_implication_holds: !(rprime_psd && condition_1) || condition_2,
        tol,
    }
}

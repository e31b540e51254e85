//! Verification suites over a [`Space`]. Each suite returns a list of named
//! checks, each carrying the value it measured and the tolerance it was held to.

use nalgebra::DVector;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bw;
use crate::clifford::{self, CliffordRep, DoubleClifford};
use crate::error::Result;
use crate::linalg;
use crate::rep::{self, IndexData};
use crate::space::Space;
use crate::tensors::{self, CurvatureOperator, RiemannPackage, Tensor4, TorsionTensor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// Passes when `value < tol`.
    Residual,
    /// Passes when `value >= -tol`.
    MinEigenvalue,
    /// Passes when `value > tol`.
    Positive,
    /// Boolean outcome stored as 1 or 0.
    Flag,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub kind: CheckKind,
    pub value: f64,
    pub tol: f64,
    pub passed: bool,
}

impl Check {
    pub fn residual(name: impl Into<String>, value: f64, tol: f64) -> Self {
        Self { name: name.into(), kind: CheckKind::Residual, value, tol, passed: value < tol }
    }

    pub fn min_eigenvalue(name: impl Into<String>, value: f64, tol: f64) -> Self {
        Self { name: name.into(), kind: CheckKind::MinEigenvalue, value, tol, passed: value >= -tol }
    }

    pub fn positive(name: impl Into<String>, value: f64, tol: f64) -> Self {
        Self { name: name.into(), kind: CheckKind::Positive, value, tol, passed: value > tol }
    }

    pub fn flag(name: impl Into<String>, ok: bool) -> Self {
        Self { name: name.into(), kind: CheckKind::Flag, value: if ok { 1.0 } else { 0.0 }, tol: 0.0, passed: ok }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteKind {
    Lemma,
    Normal,
    Blw,
    Rep,
    Parity,
}

impl SuiteKind {
    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Lemma => "lemma",
            SuiteKind::Normal => "normal",
            SuiteKind::Blw => "blw",
            SuiteKind::Rep => "rep",
            SuiteKind::Parity => "parity",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteKind,
    pub space: String,
    pub passed: bool,
    /// Reason the suite did not run; a skipped suite counts as passed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: SuiteKind, space: &str, checks: Vec<Check>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        Self { suite, space: space.to_string(), passed, skipped: None, checks }
    }

    fn skipped(suite: SuiteKind, space: &str, reason: String) -> Self {
        Self { suite, space: space.to_string(), passed: true, skipped: Some(reason), checks: Vec::new() }
    }

    pub fn worst_residual(&self) -> f64 {
        self.checks.iter().filter(|c| c.kind == CheckKind::Residual).map(|c| c.value).fold(0.0, f64::max)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SuiteOptions {
    pub tol: f64,
    pub seed: u64,
    pub max_clifford_dim: usize,
    pub perturb_tau: f64,
    pub random_scalings: usize,
    pub remainder_samples: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            tol: crate::lie::DEFAULT_TOL,
            seed: 42,
            max_clifford_dim: 6,
            perturb_tau: 0.0,
            random_scalings: 20,
            remainder_samples: 100,
        }
    }
}

/// Geometric data shared by the suites. `tau` is the torsion under test (the
/// reductive torsion, shifted when a perturbation is requested); the
/// curvature operator and Riemannian package always come from the space.
#[derive(Debug, Clone)]
pub struct Geometry {
    pub tau_exact: TorsionTensor,
    pub tau: TorsionTensor,
    pub curv: CurvatureOperator,
    pub pkg: RiemannPackage,
    /// Exterior derivative of `tau` computed from the bracket.
    pub dtau_ext: Tensor4,
}

pub fn geometry(space: &Space, opts: &SuiteOptions) -> Result<Geometry> {
    let tau_exact = tensors::reductive_torsion(&space.split, opts.tol)?;
    let curv = tensors::reductive_curvature(&space.split, opts.tol)?;
    let pkg = tensors::riemann_from_connection(&curv, &tau_exact, opts.tol)?;
    let tau = tau_exact.perturbed(opts.perturb_tau);
    let dtau_ext = tensors::exterior_derivative(&space.split, &tau);
    Ok(Geometry { tau_exact, tau, curv, pkg, dtau_ext })
}

/// Torsion and curvature identities of the reductive connection.
pub fn lemma_suite(space: &Space, geo: &Geometry, opts: &SuiteOptions) -> Result<SuiteReport> {
    let tol = opts.tol;
    let tau = &geo.tau;
    let split = &space.split;
    let dtau = tensors::dtau_from_torsion(tau);
    let nabla = tensors::levi_civita_derivative(tau);
    let probe = tensors::riemann_package(&geo.curv, tau)?;
    let checks = vec![
        Check::residual("torsion is alternating", tau.components().antisymmetry_residual(), tol),
        Check::residual(
            "parallel torsion: (nabla_X T)(Y,Z) + 1/2 cyclic T(X,T(Y,Z)) = 0",
            tensors::parallel_torsion_residual(tau, &geo.dtau_ext),
            tol,
        ),
        Check::residual(
            "dtau = 2 cyclic <T(X,Y),T(Z,W)> matches the exterior derivative",
            dtau.max_abs_diff(&geo.dtau_ext),
            tol,
        ),
        Check::residual(
            "nabla tau is alternating and equals dtau/4",
            nabla.antisymmetry_residual().max(nabla.max_abs_diff(&geo.dtau_ext.scaled(0.25))),
            tol,
        ),
        Check::residual(
            "R' is symmetric on Lambda^2 with pair symmetry",
            geo.curv.symmetry_residual().max(geo.curv.pair_symmetry_residual()),
            tol,
        ),
        Check::residual(
            "sectional relation <R'(X,Y)Y,X> = <R(X,Y)Y,X> - |T(X,Y)|^2/4",
            tensors::sectional_relation_residual(&geo.curv, tau, &tensors::homogeneous_sectional(split)),
            tol,
        ),
        Check::residual(
            "S = R' - <T(T(.,.),.),.> has curvature symmetries",
            tensors::bianchi_tensor_check(&geo.curv, tau),
            tol,
        ),
        Check::residual("first Bianchi identity of R", probe.bianchi_residual, tol),
    ];
    Ok(SuiteReport::new(SuiteKind::Lemma, &space.name, checks))
}

/// Positivity of `R'` and curvature cross-checks for the normal metric.
pub fn normal_suite(space: &Space, geo: &Geometry, opts: &SuiteOptions) -> SuiteReport {
    let tol = opts.tol;
    let hom = tensors::homogeneous_sectional(&space.split);
    let sectional_diff = linalg::max_abs(&(geo.pkg.sectional() - hom));
    let cond = tensors::extremality_report(&space.split, &geo.pkg, &geo.tau_exact, &geo.curv, tol);
    let mut checks = vec![
        Check::min_eigenvalue("R' is nonnegative on Lambda^2", geo.curv.min_eigenvalue(), tol),
        Check::residual("sectional curvature matches |[X,Y]_h|^2 + |[X,Y]_p|^2/4", sectional_diff, tol),
        Check::flag("R' >= 0 and condition (1) imply condition (2)", cond.rigidity_implication_holds),
    ];
    if cond.euclidean_factor {
        checks.push(Check::residual("Ricci-null directions are central", cond.euclidean_central_residual, tol.sqrt()));
    }
    SuiteReport::new(SuiteKind::Normal, &space.name, checks)
}

/// Clifford matrix identities behind the Weitzenböck estimate.
pub fn blw_suite(space: &Space, geo: &Geometry, opts: &SuiteOptions) -> Result<SuiteReport> {
    let m = space.m();
    if m > opts.max_clifford_dim {
        return Ok(SuiteReport::skipped(
            SuiteKind::Blw,
            &space.name,
            format!("m = {m} exceeds the Clifford dimension limit {}", opts.max_clifford_dim),
        ));
    }
    let tol = opts.tol;
    let tau = &geo.tau;
    let curv = &geo.curv;
    let dtau = &geo.dtau_ext;
    let kappa = geo.pkg.scalar;
    let single = CliffordRep::new(m)?;
    let dbl = DoubleClifford::new(m, opts.max_clifford_dim)?;
    let gens = single.monomials();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let ones = vec![1.0; m];

    let mut checks = vec![
        Check::residual("Clifford relations of the double representation", dbl.relation_residual(), tol),
        Check::residual("cubic element square", clifford::cubic_square_residual(gens, tau)?, tol),
        Check::residual(
            "scaled square identity, lambda = 1",
            bw::square_identity_scaled(gens, curv, tau, dtau, kappa, &ones)?,
            tol,
        ),
    ];
    let scalings: Vec<Vec<f64>> =
        (0..opts.random_scalings).map(|_| bw::random_admissible_scaling(m, &mut rng)).collect();
    let mut worst: f64 = 0.0;
    for l in &scalings {
        worst = worst.max(bw::square_identity_scaled(gens, curv, tau, dtau, kappa, l)?);
    }
    checks.push(Check::residual(format!("scaled square identity, {} random scalings", scalings.len()), worst, tol));
    checks.push(Check::residual(
        "square identity with the cubic element",
        bw::square_identity_cubic(gens, curv, tau, kappa)?,
        tol,
    ));

    let sqrt = bw::sqrt_curvature(curv, tol)?;
    checks.push(Check::residual("square root of R'", sqrt.residual, tol));
    let mut coupling_res: f64 = 0.0;
    let mut coupling_min = f64::INFINITY;
    for l in std::iter::once(&ones).chain(&scalings) {
        let c = bw::coupling_term_psd(curv, &sqrt, &dbl, l)?;
        coupling_res = coupling_res.max(c.square_residual);
        coupling_min = coupling_min.min(c.min_eigenvalue);
    }
    checks.push(Check::residual("coupling term equals minus the square of B", coupling_res, tol));
    checks.push(Check::min_eigenvalue("coupling term is nonnegative", coupling_min, tol));

    let z = bw::blw_zero_order(curv, tau, dtau, kappa, &dbl)?;
    checks.push(Check::residual("zero-order term agrees with its curvature expansion", z.consistency_residual, tol));
    checks.push(Check::residual("zero-order term is Hermitian", z.hermitian_residual, tol));
    checks.push(Check::min_eigenvalue("zero-order term is nonnegative", z.min_eigenvalue, tol));

    let mut rem_res: f64 = 0.0;
    let mut rem_min = f64::INFINITY;
    for _ in 0..opts.remainder_samples {
        let l = bw::random_admissible_scaling(m, &mut rng);
        let r = bw::estimate_remainder(curv, &sqrt, tau, dtau, kappa, &dbl, &l, tol)?;
        rem_res = rem_res.max(r.rearrangement_residual);
        rem_min = rem_min.min(r.min_eigenvalue);
    }
    checks.push(Check::residual(format!("estimate rearrangement, {} scalings", opts.remainder_samples), rem_res, tol));
    checks.push(Check::min_eigenvalue(
        format!("estimate remainder is nonnegative, {} scalings", opts.remainder_samples),
        rem_min,
        tol,
    ));

    let rig = bw::rigidity(tau, tol)?;
    checks.push(Check::flag("equality forces lambda = 1 on the torsion support", rig.holds));

    let parity = clifford::volume_parity(&single);
    checks.push(Check::residual("volume element parity", parity.square_residual.max(parity.commutation_residual), tol));
    Ok(SuiteReport::new(SuiteKind::Blw, &space.name, checks))
}

/// Sorted squared root values `alpha(x)²` against the spectrum of `-ad(t)²`.
fn torus_root_residual(space: &Space, spec: &rep::RootDataSpec, data: &IndexData) -> Option<f64> {
    let torus = spec.torus.as_ref()?;
    let n = space.algebra.dim();
    // a generic torus element
    let x: Vec<f64> = (0..torus.len()).map(|a| 1.0 + 0.3719 * a as f64 + 0.1 * (a * a) as f64).collect();
    let mut t = DVector::zeros(n);
    for (a, row) in torus.iter().enumerate() {
        if row.len() != n {
            return Some(f64::INFINITY);
        }
        t += DVector::from_column_slice(row) * x[a];
    }
    let ad = space.algebra.ad_matrix(&t).ok()?;
    let mut spectrum = linalg::sym_eigenvalues(&(-(&ad * &ad)));
    let xv = DVector::from_vec(x);
    let mut expected: Vec<f64> = data.g.all_roots().iter().map(|r| r.dot(&(data.g.gram() * &xv)).powi(2)).collect();
    expected.resize(n, 0.0);
    expected.sort_by(f64::total_cmp);
    spectrum.sort_by(f64::total_cmp);
    Some(spectrum.iter().zip(&expected).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
}

/// Root data, Euler characteristic and the kernel criterion.
pub fn rep_suite(space: &Space, opts: &SuiteOptions) -> Result<SuiteReport> {
    let Some(spec) = &space.root_data else {
        return Ok(SuiteReport::skipped(SuiteKind::Rep, &space.name, "no root data".into()));
    };
    let tol = opts.tol;
    let data = IndexData::from_spec(spec, tol)?;
    let mut checks = vec![
        Check::flag("root systems are closed under negation", data.g.negation_closed() && data.h.negation_closed()),
        Check::flag(
            "Weyl groups permute the roots",
            data.weyl_g.permutes_roots(&data.g) && data.weyl_h.permutes_roots(&data.h),
        ),
    ];
    let rho_norm = data.g.norm_sq(data.g.rho());
    let invariance =
        data.weyl_g.elements.iter().map(|w| (data.g.norm_sq(&(w * data.g.rho())) - rho_norm).abs()).fold(0.0, f64::max);
    checks.push(Check::residual("|w rho_G| = |rho_G|", invariance, tol));
    if let Some(r) = torus_root_residual(space, spec, &data) {
        checks.push(Check::residual("roots match the spectrum of ad on the torus", r, tol));
    }

    let chi_inv = rep::invariant_euler(&space.split, tol);
    match data.euler_characteristic() {
        Ok(chi) => {
            checks.push(Check::residual(
                "Euler characteristic: Weyl quotient = isotropy invariants",
                (chi as f64 - chi_inv as f64).abs(),
                0.5,
            ));
            checks.push(Check::flag("Euler characteristic is positive", chi > 0));
        }
        Err(_) => checks.push(Check::residual(
            "Euler characteristic from invariants vanishes for unequal rank",
            chi_inv.abs() as f64,
            0.5,
        )),
    }

    let crit = rep::kernel_criterion(&data, space.m());
    if data.rank_gap() == 0 {
        checks.push(Check::flag("equal rank has a kernel-criterion witness", !crit.witnesses.is_empty()));
    }
    let weights = data.g.fundamental_weights();
    let mut trivial: f64 = 0.0;
    let mut nontrivial = f64::INFINITY;
    let mut cubic: f64 = 0.0;
    for w in &crit.witnesses {
        let kappa = DVector::from_vec(w.kappa.clone());
        let zero = DVector::zeros(data.rank_g);
        trivial = trivial.max(rep::parthasarathy_scalar(&zero, &kappa, &data.g, &data.h).abs());
        for gamma in &weights {
            nontrivial = nontrivial.min(rep::parthasarathy_scalar(gamma, &kappa, &data.g, &data.h));
        }
        let direct = rho_norm - data.g.norm_sq(&(&kappa + data.h.rho()));
        cubic = cubic.max((rep::cubic_square_scalar(&kappa, &data.g, &data.h) - direct).abs());
    }
    if !crit.witnesses.is_empty() {
        checks.push(Check::residual("Parthasarathy scalar vanishes for trivial gamma", trivial, tol));
        checks.push(Check::residual("cubic-square scalar equals |rho_G|^2 - |kappa + rho_H|^2", cubic, tol));
        if !weights.is_empty() {
            checks.push(Check::positive("Parthasarathy scalar is positive for fundamental weights", nontrivial, tol));
        }
    }
    Ok(SuiteReport::new(SuiteKind::Rep, &space.name, checks))
}

/// Volume-element sign and parity for `m = 1..=max_m`.
pub fn parity_suite(max_m: usize, tol: f64) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for m in 1..=max_m {
        let p = clifford::volume_parity(&CliffordRep::new(m)?);
        checks.push(Check::residual(format!("omega^2 = {:+} for m = {m}", p.square_sign), p.square_residual, tol));
        checks.push(Check::residual(
            format!("omega c_i = (-1)^(m-1) c_i omega for m = {m}"),
            p.commutation_residual,
            tol,
        ));
    }
    Ok(SuiteReport::new(SuiteKind::Parity, "clifford", checks))
}

/// Run the requested suites on a space.
pub fn run_suites(space: &Space, kinds: &[SuiteKind], opts: &SuiteOptions) -> Result<Vec<SuiteReport>> {
    let geo = geometry(space, opts)?;
    kinds
        .iter()
        .map(|k| match k {
            SuiteKind::Lemma => lemma_suite(space, &geo, opts),
            SuiteKind::Normal => Ok(normal_suite(space, &geo, opts)),
            SuiteKind::Blw => blw_suite(space, &geo, opts),
            SuiteKind::Rep => rep_suite(space, opts),
            SuiteKind::Parity => parity_suite(opts.max_clifford_dim, opts.tol),
        })
        .collect()
}

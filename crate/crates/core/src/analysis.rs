//! Full analysis of a space: axioms, torsion, curvature, extremality
//! conditions, index data and the verification suites.

use nalgebra::DVector;
use serde::Serialize;

use crate::error::Result;
use crate::lie::{AxiomResiduals, SplitResiduals};
use crate::rep::{self, IndexData, Witness};
use crate::space::Space;
use crate::suite::{self, SuiteKind, SuiteOptions, SuiteReport};
use crate::tensors::{self, ConditionReport};

#[derive(Debug, Clone, Serialize)]
pub struct TorsionSummary {
    pub norm: f64,
    pub kernel_dim: usize,
    pub zero: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CurvatureSummary {
    pub rprime_min_eigenvalue: f64,
    pub rprime_max_eigenvalue: f64,
    pub scalar: f64,
    pub ricci_eigenvalues: Vec<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ParthasarathyEntry {
    /// Index of the witness in the Weyl group enumeration.
    pub element: usize,
    pub kappa: Vec<f64>,
    /// `|rho_G|² - |kappa + rho_H|²`.
    pub trivial: f64,
    /// Smallest value over the fundamental weights of `G`.
    pub fundamental_min: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IndexSection {
    pub rank_g: usize,
    pub rank_h: usize,
    pub rank_gap: usize,
    pub weyl_order_g: usize,
    pub weyl_order_h: usize,
    /// `|W_G| / |W_H|`, equal rank only.
    pub chi_weyl: Option<usize>,
    /// Alternating sum of isotropy-invariant dimensions of `Λ^k p`.
    pub chi_invariants: i64,
    pub witnesses: Vec<Witness>,
    pub verdict: String,
    pub parthasarathy: Vec<ParthasarathyEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub space: String,
    pub dim_g: usize,
    pub dim_h: usize,
    pub m: usize,
    pub axioms: AxiomResiduals,
    pub split: SplitResiduals,
    pub torsion: TorsionSummary,
    pub curvature: CurvatureSummary,
    pub extremality: ConditionReport,
    pub index: Option<IndexSection>,
    pub suites: Vec<SuiteReport>,
    pub options: SuiteOptions,
    pub passed: bool,
}

pub fn index_section(space: &Space, tol: f64) -> Result<Option<IndexSection>> {
    let Some(spec) = &space.root_data else {
        return Ok(None);
    };
    let data = IndexData::from_spec(spec, tol)?;
    let crit = rep::kernel_criterion(&data, space.m());
    let weights = data.g.fundamental_weights();
    let parthasarathy = crit
        .witnesses
        .iter()
        .map(|w| {
            let kappa = DVector::from_vec(w.kappa.clone());
            let zero = DVector::zeros(data.rank_g);
            let fundamental_min =
                weights.iter().map(|g| rep::parthasarathy_scalar(g, &kappa, &data.g, &data.h)).min_by(f64::total_cmp);
            ParthasarathyEntry {
                element: w.element,
                kappa: w.kappa.clone(),
                trivial: rep::parthasarathy_scalar(&zero, &kappa, &data.g, &data.h),
                fundamental_min,
            }
        })
        .collect();
    Ok(Some(IndexSection {
        rank_g: data.rank_g,
        rank_h: data.rank_h,
        rank_gap: data.rank_gap(),
        weyl_order_g: data.weyl_g.order(),
        weyl_order_h: data.weyl_h.order(),
        chi_weyl: data.euler_characteristic().ok(),
        chi_invariants: rep::invariant_euler(&space.split, tol),
        witnesses: crit.witnesses,
        verdict: crit.verdict,
        parthasarathy,
    }))
}

/// Run the pipeline. The lemma, normal and rep suites always run; `full` adds
/// the Clifford identities and the parity checks.
pub fn analyze(space: &Space, opts: &SuiteOptions, full: bool) -> Result<AnalysisReport> {
    let geo = suite::geometry(space, opts)?;
    let extremality = tensors::extremality_report(&space.split, &geo.pkg, &geo.tau_exact, &geo.curv, opts.tol);
    let eig = geo.curv.eigenvalues();
    let curvature = CurvatureSummary {
        rprime_min_eigenvalue: eig.iter().copied().min_by(f64::total_cmp).unwrap_or(0.0),
        rprime_max_eigenvalue: eig.iter().copied().max_by(f64::total_cmp).unwrap_or(0.0),
        scalar: geo.pkg.scalar,
        ricci_eigenvalues: extremality.ricci_eigenvalues.clone(),
    };
    let torsion = TorsionSummary {
        norm: geo.tau_exact.norm(),
        kernel_dim: extremality.torsion_kernel_dim,
        zero: geo.tau_exact.is_zero(opts.tol),
    };
    let mut suites = vec![
        suite::lemma_suite(space, &geo, opts)?,
        suite::normal_suite(space, &geo, opts),
        suite::rep_suite(space, opts)?,
    ];
    if full {
        suites.push(suite::blw_suite(space, &geo, opts)?);
        suites.push(suite::parity_suite(opts.max_clifford_dim, opts.tol)?);
    }
    let passed = suites.iter().all(|s| s.passed);
    Ok(AnalysisReport {
        space: space.name.clone(),
        dim_g: space.algebra.dim(),
        dim_h: space.split.dim_h(),
        m: space.m(),
        axioms: space.algebra.residuals(),
        split: space.split.residuals(),
        torsion,
        curvature,
        extremality,
        index: index_section(space, opts.tol)?,
        suites,
        options: *opts,
        passed,
    })
}

/// Suites selected by a `verify` request.
pub fn suites_for(name: &str) -> Option<Vec<SuiteKind>> {
    Some(match name {
        "lemma" => vec![SuiteKind::Lemma],
        "normal" => vec![SuiteKind::Normal],
        "blw" => vec![SuiteKind::Blw],
        "rep" => vec![SuiteKind::Rep],
        "parity" => vec![SuiteKind::Parity],
        "all" => vec![SuiteKind::Lemma, SuiteKind::Normal, SuiteKind::Blw, SuiteKind::Rep, SuiteKind::Parity],
        _ => return None,
    })
}

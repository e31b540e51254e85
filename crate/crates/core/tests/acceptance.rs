//! Acceptance criteria, one line per criterion:
//!
//! ```text
//! cargo test -p partor --test acceptance -- --nocapture
//! ```

use std::time::Instant;

use nalgebra::DVector;
use partor::catalog::{self, SpaceEntry};
use partor::error::{AxiomKind, Error};
use partor::rep::{self, IndexData};
use partor::suite::{self, CheckKind, SuiteOptions, SuiteReport};

const TOL: f64 = 1e-9;
const BROKEN: f64 = 1e-3;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn spaces() -> Vec<SpaceEntry> {
    catalog::all_spaces(TOL).expect("catalog builds")
}

fn describe_failures(reports: &[SuiteReport]) -> String {
    let bad: Vec<String> = reports
        .iter()
        .flat_map(|r| r.failures().map(move |c| format!("{}: {} = {:.3e}", r.space, c.name, c.value)))
        .collect();
    bad.join("; ")
}

fn lemma_suite(all: &[SpaceEntry], opts: &SuiteOptions) -> Outcome {
    let mut reports = Vec::new();
    for e in all {
        let geo = suite::geometry(&e.space, opts).unwrap();
        reports.push(suite::lemma_suite(&e.space, &geo, opts).unwrap());
    }
    let worst = reports.iter().map(|r| r.worst_residual()).fold(0.0, f64::max);
    let ok = reports.iter().all(|r| r.passed && r.checks.len() == 8);
    let detail =
        if ok { format!("{} spaces, worst residual {worst:.2e}", reports.len()) } else { describe_failures(&reports) };
    outcome(ok, detail)
}

fn normal_suite(all: &[SpaceEntry], opts: &SuiteOptions) -> Outcome {
    let mut min_eig = f64::INFINITY;
    let mut reports = Vec::new();
    for e in all {
        let geo = suite::geometry(&e.space, opts).unwrap();
        let r = suite::normal_suite(&e.space, &geo, opts);
        for c in &r.checks {
            if c.kind == CheckKind::MinEigenvalue {
                min_eig = min_eig.min(c.value);
            }
        }
        reports.push(r);
    }
    let worst = reports.iter().map(|r| r.worst_residual()).fold(0.0, f64::max);
    let ok = reports.iter().all(|r| r.passed) && min_eig >= -TOL;
    let detail = if ok {
        format!("min eigenvalue {min_eig:.2e}, sectional residual {worst:.2e}")
    } else {
        describe_failures(&reports)
    };
    outcome(ok, detail)
}

fn blw_suite(all: &[SpaceEntry], opts: &SuiteOptions) -> Outcome {
    let mut reports = Vec::new();
    for e in all.iter().filter(|e| e.space.m() <= opts.max_clifford_dim) {
        let geo = suite::geometry(&e.space, opts).unwrap();
        reports.push(suite::blw_suite(&e.space, &geo, opts).unwrap());
    }
    let ran = reports.iter().all(|r| r.skipped.is_none());
    let worst = reports.iter().map(|r| r.worst_residual()).fold(0.0, f64::max);
    let ok = ran && reports.iter().all(|r| r.passed);
    let detail =
        if ok { format!("{} spaces, worst residual {worst:.2e}", reports.len()) } else { describe_failures(&reports) };
    outcome(ok, detail)
}

fn index_suite(all: &[SpaceEntry], opts: &SuiteOptions) -> Outcome {
    let mut problems = Vec::new();
    let mut chis = Vec::new();
    let mut berger_witnesses = None;
    for e in all {
        let Some(spec) = &e.space.root_data else { continue };
        let data = IndexData::from_spec(spec, TOL).unwrap();
        let crit = rep::kernel_criterion(&data, e.space.m());
        if e.space.name == "berger" {
            berger_witnesses = Some(crit.witnesses.len());
        }
        if data.rank_gap() != 0 {
            continue;
        }
        let weyl = data.euler_characteristic().unwrap();
        let inv = rep::invariant_euler(&e.space.split, TOL);
        if weyl as i64 != inv || Some(weyl) != e.expected.chi {
            problems.push(format!("{}: chi {weyl} (Weyl) vs {inv} (invariants)", e.space.name));
        }
        chis.push(format!("{} {weyl}", e.space.name));
        if crit.witnesses.is_empty() {
            problems.push(format!("{}: no witness", e.space.name));
        }
        for w in &crit.witnesses {
            let kappa = DVector::from_vec(w.kappa.clone());
            let zero = DVector::zeros(data.rank_g);
            let trivial = rep::parthasarathy_scalar(&zero, &kappa, &data.g, &data.h);
            if trivial.abs() >= TOL {
                problems.push(format!("{}: trivial Parthasarathy scalar {trivial:.2e}", e.space.name));
            }
            for gamma in data.g.fundamental_weights() {
                let v = rep::parthasarathy_scalar(&gamma, &kappa, &data.g, &data.h);
                if v <= TOL {
                    problems.push(format!("{}: Parthasarathy scalar {v:.2e} for a fundamental weight", e.space.name));
                }
            }
        }
        let r = suite::rep_suite(&e.space, opts).unwrap();
        if !r.passed {
            problems.push(describe_failures(&[r]));
        }
    }
    if berger_witnesses != Some(0) {
        problems.push(format!("berger witnesses {berger_witnesses:?}"));
    }
    if problems.is_empty() {
        outcome(true, format!("chi: {}; berger witnesses 0", chis.join(", ")))
    } else {
        outcome(false, problems.join("; "))
    }
}

fn negative_controls(all: &[SpaceEntry], opts: &SuiteOptions) -> Outcome {
    let bent = SuiteOptions { perturb_tau: 0.1, ..*opts };
    let mut problems = Vec::new();
    let mut weakest = f64::INFINITY;
    // a 3-form perturbation needs m >= 3
    for e in all.iter().filter(|e| e.space.m() >= 3) {
        let geo = suite::geometry(&e.space, &bent).unwrap();
        let mut reports = vec![suite::lemma_suite(&e.space, &geo, &bent).unwrap()];
        if e.space.m() <= bent.max_clifford_dim {
            reports.push(suite::blw_suite(&e.space, &geo, &bent).unwrap());
        }
        for r in &reports {
            let w = r.worst_residual();
            weakest = weakest.min(w);
            if r.passed || w <= BROKEN {
                problems.push(format!("{} {} survives the perturbation ({w:.2e})", r.space, r.suite.name()));
            }
        }
    }
    let mut file = catalog::get_space("s2", TOL).unwrap().space.to_file();
    file.gram[2][2] = 2.0;
    match file.into_space(TOL) {
        Err(Error::AxiomViolation { kind: AxiomKind::Invariance, .. }) => {}
        other => problems.push(format!("non-invariant metric accepted: {:?}", other.map(|s| s.name))),
    }
    if problems.is_empty() {
        outcome(true, format!("smallest perturbed residual {weakest:.2e}; non-invariant metric rejected"))
    } else {
        outcome(false, problems.join("; "))
    }
}

fn clifford_parity() -> Outcome {
    let r = suite::parity_suite(6, TOL).unwrap();
    let ok = r.passed && r.checks.len() == 12;
    outcome(ok, if ok { "m = 1..6".into() } else { describe_failures(&[r]) })
}

#[test]
fn acceptance() {
    let start = Instant::now();
    let opts = SuiteOptions::default();
    let all = spaces();
    let results = [
        ("1 lemma suite", lemma_suite(&all, &opts)),
        ("2 normal-homogeneity suite", normal_suite(&all, &opts)),
        ("3 Clifford identity suite", blw_suite(&all, &opts)),
        ("4 index suite", index_suite(&all, &opts)),
        ("5 negative controls", negative_controls(&all, &opts)),
        ("6 Clifford parity", clifford_parity()),
    ];
    for (name, r) in &results {
        println!("{} {name}: {}", if r.passed { "PASS" } else { "FAIL" }, r.detail);
    }
    println!("acceptance run took {:.2?}", start.elapsed());
    let failed: Vec<&str> = results.iter().filter(|(_, r)| !r.passed).map(|(n, _)| *n).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

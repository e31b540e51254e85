use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use partor::analysis::{self, AnalysisReport};
use partor::catalog;
use partor::space::{Space, SpaceFile};
use partor::suite::{self, SuiteOptions, SuiteReport};
use partor::{Error, Result};

#[derive(Parser)]
#[command(name = "partor", version, about = "Parallel-torsion connections on normal homogeneous spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Residual tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Seed for random scalings.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Largest m for which Clifford matrices are built.
    #[arg(long, global = true, default_value_t = 6)]
    max_clifford_dim: usize,
    /// Add this multiple of e0^e1^e2 to the torsion under test.
    #[arg(long, global = true, default_value_t = 0.0, allow_negative_numbers = true)]
    perturb_tau: f64,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog spaces.
    List,
    /// Analyze a catalog space or a JSON space file.
    Analyze {
        space: String,
        /// Include the Clifford identity and parity suites.
        #[arg(long)]
        full: bool,
    },
    /// Run verification suites.
    Verify {
        space: String,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Print a catalog space in the JSON file format.
    Export { space: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Lemma,
    Normal,
    Blw,
    Rep,
    Parity,
    All,
}

impl SuiteArg {
    fn name(self) -> &'static str {
        match self {
            SuiteArg::Lemma => "lemma",
            SuiteArg::Normal => "normal",
            SuiteArg::Blw => "blw",
            SuiteArg::Rep => "rep",
            SuiteArg::Parity => "parity",
            SuiteArg::All => "all",
        }
    }
}

fn load_space(arg: &str, tol: f64) -> Result<Space> {
    if catalog::list_spaces().contains(&arg) {
        return Ok(catalog::get_space(arg, tol)?.space);
    }
    let path = Path::new(arg);
    if path.exists() || arg.ends_with(".json") {
        return SpaceFile::read(path)?.into_space(tol);
    }
    Err(Error::UnknownSpace(arg.to_string()))
}

fn fmt_suites(out: &mut String, reports: &[SuiteReport]) {
    for r in reports {
        let status = if r.passed { "PASS" } else { "FAIL" };
        match &r.skipped {
            Some(reason) => writeln!(out, "[{}] {} skipped: {reason}", r.suite.name(), r.space).unwrap(),
            None => writeln!(out, "[{}] {} {status}", r.suite.name(), r.space).unwrap(),
        }
        for c in &r.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            writeln!(out, "  {mark} {:<66} {:>12.3e} (tol {:.0e})", c.name, c.value, c.tol).unwrap();
        }
    }
}

fn fmt_analysis(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let w = &mut s;
    writeln!(w, "space {}: dim g = {}, dim h = {}, m = {}", r.space, r.dim_g, r.dim_h, r.m).unwrap();
    writeln!(w, "axiom residual {:.3e}, split residual {:.3e}", r.axioms.worst(), r.split.worst()).unwrap();
    writeln!(w, "torsion: |tau| = {:.6}, ker T dim {}", r.torsion.norm, r.torsion.kernel_dim).unwrap();
    writeln!(
        w,
        "curvature operator eigenvalues in [{:.6}, {:.6}], scalar curvature {:.6}",
        r.curvature.rprime_min_eigenvalue, r.curvature.rprime_max_eigenvalue, r.curvature.scalar
    )
    .unwrap();
    writeln!(
        w,
        "ricci spectrum {:?}",
        r.curvature.ricci_eigenvalues.iter().map(|x| format!("{x:.6}")).collect::<Vec<_>>()
    )
    .unwrap();
    let e = &r.extremality;
    writeln!(
        w,
        "condition (1): {}, condition (2): {}, euclidean factor: {}",
        e.condition_1, e.condition_2, e.euclidean_factor
    )
    .unwrap();
    match &r.index {
        None => writeln!(w, "index: no root data").unwrap(),
        Some(ix) => {
            writeln!(w, "index: rank G = {}, rank H = {}, gap {}", ix.rank_g, ix.rank_h, ix.rank_gap).unwrap();
            match ix.chi_weyl {
                Some(chi) => {
                    writeln!(w, "  euler characteristic: {chi} (Weyl), {} (invariants)", ix.chi_invariants).unwrap()
                }
                None => writeln!(w, "  euler characteristic: {} (invariants)", ix.chi_invariants).unwrap(),
            }
            writeln!(w, "  {} witness(es), verdict: {}", ix.witnesses.len(), ix.verdict).unwrap();
            for p in &ix.parthasarathy {
                let fmin = p.fundamental_min.map_or("-".to_string(), |x| format!("{x:.6}"));
                let kappa: Vec<String> = p.kappa.iter().map(|x| format!("{x:.4}")).collect();
                writeln!(
                    w,
                    "  w#{}: kappa [{}], trivial {:.3e}, min over fundamental weights {fmin}",
                    p.element,
                    kappa.join(", "),
                    p.trivial
                )
                .unwrap();
            }
        }
    }
    fmt_suites(w, &r.suites);
    writeln!(w, "{}", if r.passed { "PASS" } else { "FAIL" }).unwrap();
    s
}

fn emit(common: &Common, text: String) -> Result<()> {
    match &common.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

fn options(common: &Common) -> SuiteOptions {
    SuiteOptions {
        tol: common.tol,
        seed: common.seed,
        max_clifford_dim: common.max_clifford_dim,
        perturb_tau: common.perturb_tau,
        ..SuiteOptions::default()
    }
}

/// Returns whether every check passed.
fn run(cli: &Cli) -> Result<bool> {
    let common = &cli.common;
    let opts = options(common);
    match &cli.command {
        Command::List => {
            let text = if common.json {
                to_json(&catalog::list_spaces())
            } else {
                catalog::list_spaces().iter().map(|n| format!("{n}\n")).collect()
            };
            emit(common, text)?;
            Ok(true)
        }
        Command::Export { space } => {
            let space = load_space(space, opts.tol)?;
            emit(common, space.to_file().to_json() + "\n")?;
            Ok(true)
        }
        Command::Analyze { space, full } => {
            let space = load_space(space, opts.tol)?;
            let report = analysis::analyze(&space, &opts, *full)?;
            emit(common, if common.json { to_json(&report) } else { fmt_analysis(&report) })?;
            Ok(report.passed)
        }
        Command::Verify { space, suite: which } => {
            let space = load_space(space, opts.tol)?;
            let kinds = analysis::suites_for(which.name()).expect("every suite argument is known");
            let reports = suite::run_suites(&space, &kinds, &opts)?;
            let passed = reports.iter().all(|r| r.passed);
            let text = if common.json {
                to_json(&reports)
            } else {
                let mut s = String::new();
                fmt_suites(&mut s, &reports);
                writeln!(s, "{}", if passed { "PASS" } else { "FAIL" }).unwrap();
                s
            };
            emit(common, text)?;
            Ok(passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

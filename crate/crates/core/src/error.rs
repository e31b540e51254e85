use std::fmt;

use thiserror::Error;

/// Which Lie-algebra axiom a residual refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AxiomKind {
    Antisymmetry,
    Jacobi,
    Invariance,
}

impl fmt::Display for AxiomKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AxiomKind::Antisymmetry => "antisymmetry",
            AxiomKind::Jacobi => "jacobi",
            AxiomKind::Invariance => "invariance",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("axiom violation ({kind}): residual {residual:.3e}")]
    AxiomViolation { kind: AxiomKind, residual: f64 },

    #[error("gram matrix is not positive definite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPositiveDefinite { min_eigenvalue: f64 },

    #[error("gram matrix is not symmetric (residual {residual:.3e})")]
    GramNotSymmetric { residual: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("span is not a subalgebra: residual {residual:.3e}")]
    NotSubalgebra { residual: f64 },

    #[error("degenerate complement: expected dim {expected}, found {found}")]
    DegenerateComplement { expected: usize, found: usize },

    #[error("reductive split violates {name}: residual {residual:.3e}")]
    SplitViolation { name: &'static str, residual: f64 },

    #[error("torsion is not alternating (natural reductivity fails): residual {residual:.3e}")]
    NotNaturallyReductive { residual: f64 },

    #[error("identity '{name}' violated: residual {residual:.3e}")]
    IdentityViolation { name: String, residual: f64 },

    #[error("dimension {m} exceeds the supported maximum {max}")]
    DimensionTooLarge { m: usize, max: usize },

    #[error("operator is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPsd { min_eigenvalue: f64 },

    #[error("input mismatch: {0}")]
    InputMismatch(String),

    #[error("inadmissible scaling: lambda_{i} * lambda_{j} = {product} > 1")]
    InadmissibleScaling { i: usize, j: usize, product: f64 },

    #[error("Weyl group exceeds {limit} elements")]
    GroupTooLarge { limit: usize },

    #[error("rank mismatch: rank G = {rank_g}, rank H = {rank_h}")]
    RankMismatch { rank_g: usize, rank_h: usize },

    #[error("invalid root data: {0}")]
    InvalidRootData(String),

    #[error("unknown space '{0}'")]
    UnknownSpace(String),

    #[error("solver failure: {0}")]
    Solver(String),

    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code: 2 for invalid input, 3 for a failed identity or
    /// positivity check, 4 for an unknown catalog name.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::UnknownSpace(_) => 4,
            Error::IdentityViolation { .. } | Error::NotPsd { .. } | Error::Solver(_) => 3,
            _ => 2,
        }
    }
}

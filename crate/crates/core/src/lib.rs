//! Metric connections with parallel skew torsion on normal homogeneous spaces.
//!
//! A [`space::Space`] is built from Lie-algebra data (structure constants, an
//! invariant inner product and a subalgebra). From it the crate computes the
//! reductive torsion and curvature, checks the curvature and Clifford
//! identities used in scalar-curvature estimates numerically, and evaluates
//! Weyl-group index data.
//!
//! ```
//! use partor::{catalog, suite};
//!
//! let entry = catalog::get_space("cp2", 1e-9).unwrap();
//! let opts = suite::SuiteOptions::default();
//! let reports = suite::run_suites(&entry.space, &[suite::SuiteKind::Lemma], &opts).unwrap();
//! assert!(reports[0].passed);
//! ```

pub mod analysis;
pub mod bw;
pub mod catalog;
pub mod clifford;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod rep;
pub mod space;
pub mod suite;
pub mod tensors;

pub use error::{Error, Result};

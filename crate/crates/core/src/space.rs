//! Homogeneous space definitions and their JSON file format.
//!
//! ```json
//! {
//!   "name": "s2",
//!   "dim": 3,
//!   "basis": ["L12", "L13", "L23"],
//!   "brackets": [[0, 1, 2, -1.0], [0, 2, 1, 1.0], [1, 2, 0, -1.0]],
//!   "gram": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
//!   "subalgebra": [[1, 0, 0]]
//! }
//! ```
//!
//! `brackets` entries `[i, j, k, v]` set `<[e_i, e_j], e_k>`-coefficient
//! `c_ij^k = v`; `c_ji^k = -v` is filled in unless given explicitly.

use std::path::Path;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{build_lie_algebra, reductive_split, structure_from_entries, LieAlgebraData, ReductiveSplit};
use crate::rep::RootDataSpec;

/// On-disk representation of a space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpaceFile {
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<(usize, usize, usize, f64)>,
    pub gram: Vec<Vec<f64>>,
    #[serde(default)]
    pub subalgebra: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_data: Option<RootDataSpec>,
}

impl SpaceFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("space files serialize")
    }

    /// Validate into a [`Space`].
    pub fn into_space(self, tol: f64) -> Result<Space> {
        let n = self.dim;
        if self.basis.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: self.basis.len() });
        }
        if self.gram.len() != n || self.gram.iter().any(|r| r.len() != n) {
            return Err(Error::InputMismatch(format!("gram must be {n}x{n}")));
        }
        let gram = DMatrix::from_fn(n, n, |i, j| self.gram[i][j]);
        let c = structure_from_entries(n, &self.brackets)?;
        let algebra = build_lie_algebra(self.basis, c, gram, tol)?;
        let h_rows = self
            .subalgebra
            .iter()
            .map(|r| {
                if r.len() != n {
                    Err(Error::DimensionMismatch { expected: n, found: r.len() })
                } else {
                    Ok(DVector::from_column_slice(r))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Space::new(self.name, self.description, algebra, h_rows, self.root_data, tol)
    }
}

/// A validated homogeneous space `G/H` with normal metric.
#[derive(Debug, Clone)]
pub struct Space {
    pub name: String,
    pub description: String,
    pub algebra: LieAlgebraData,
    pub h_rows: Vec<DVector<f64>>,
    pub root_data: Option<RootDataSpec>,
    pub split: ReductiveSplit,
}

impl Space {
    pub fn new(
        name: String,
        description: String,
        algebra: LieAlgebraData,
        h_rows: Vec<DVector<f64>>,
        root_data: Option<RootDataSpec>,
        tol: f64,
    ) -> Result<Self> {
        let split = reductive_split(&algebra, &h_rows, tol)?;
        Ok(Self { name, description, algebra, h_rows, root_data, split })
    }

    pub fn m(&self) -> usize {
        self.split.m()
    }

    /// Export in the file format; only `i<j` bracket entries are listed.
    pub fn to_file(&self) -> SpaceFile {
        let n = self.algebra.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in 0..n {
                    let v = self.algebra.structure(i, j, k);
                    if v != 0.0 {
                        brackets.push((i, j, k, v));
                    }
                }
            }
        }
        let g = self.algebra.gram();
        SpaceFile {
            name: self.name.clone(),
            description: self.description.clone(),
            dim: n,
            basis: self.algebra.labels().to_vec(),
            brackets,
            gram: (0..n).map(|i| (0..n).map(|j| g[(i, j)]).collect()).collect(),
            subalgebra: self.h_rows.iter().map(|r| r.iter().copied().collect()).collect(),
            root_data: self.root_data.clone(),
        }
    }
}

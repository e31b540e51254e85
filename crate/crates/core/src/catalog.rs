//! Built-in normal homogeneous spaces.
//!
//! Matrix Lie algebras carry the invariant form `<X, Y> = -½ Re tr(XY)` in
//! the defining representation; abelian factors use the unit form. With these
//! choices every basis below is orthonormal. Root data is written in the
//! coordinates of the listed torus basis, so `gram_t` is the identity.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{build_lie_algebra, LieAlgebraData};
use crate::linalg::CMatrix;
use crate::rep::RootDataSpec;
use crate::space::Space;

/// Known values, checked by the test suites and never used as inputs.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Expected {
    pub m: usize,
    pub chi: Option<usize>,
    pub rank_gap: Option<usize>,
    pub witnesses: Option<usize>,
    pub torsion_zero: bool,
    pub euclidean_factor: bool,
}

#[derive(Debug, Clone)]
pub struct SpaceEntry {
    pub space: Space,
    pub expected: Expected,
}

pub const NAMES: [&str; 11] = ["torus", "su2", "su2u1", "s3xs3", "s2xs3", "s2", "s3sym", "s4", "cp2", "flag", "berger"];

pub fn list_spaces() -> &'static [&'static str] {
    &NAMES
}

/// Look up a catalog entry by name.
pub fn get_space(name: &str, tol: f64) -> Result<SpaceEntry> {
    match name {
        "torus" => torus(tol),
        "su2" => su2_group(tol),
        "su2u1" => su2u1(tol),
        "s3xs3" => s3xs3(tol),
        "s2xs3" => s2xs3(tol),
        "s2" => s2(tol),
        "s3sym" => s3sym(tol),
        "s4" => s4(tol),
        "cp2" => cp2(tol),
        "flag" => flag(tol),
        "berger" => berger(tol),
        _ => Err(Error::UnknownSpace(name.to_string())),
    }
}

pub fn all_spaces(tol: f64) -> Result<Vec<SpaceEntry>> {
    NAMES.iter().map(|n| get_space(n, tol)).collect()
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `-½ Re tr(XY)`.
fn trace_form(x: &CMatrix, y: &CMatrix) -> f64 {
    -0.5 * (x * y).trace().re
}

/// Structure constants and Gram matrix of a matrix Lie algebra.
pub fn matrix_algebra(labels: Vec<String>, mats: &[CMatrix], tol: f64) -> Result<LieAlgebraData> {
    let n = mats.len();
    let gram = DMatrix::from_fn(n, n, |i, j| trace_form(&mats[i], &mats[j]));
    let inv = gram.clone().try_inverse().ok_or(Error::NotPositiveDefinite { min_eigenvalue: 0.0 })?;
    let mut structure = vec![0.0; n * n * n];
    for i in 0..n {
        for j in 0..n {
            let br = &mats[i] * &mats[j] - &mats[j] * &mats[i];
            let proj = DVector::from_fn(n, |l, _| trace_form(&br, &mats[l]));
            let coords = &inv * proj;
            for k in 0..n {
                let v = coords[k];
                structure[(i * n + j) * n + k] = if v.abs() < 1e-14 { 0.0 } else { v };
            }
        }
    }
    build_lie_algebra(labels, structure, gram, tol)
}

fn real_to_complex(m: &DMatrix<f64>) -> CMatrix {
    m.map(|x| c(x, 0.0))
}

/// `L_ab = E_ab - E_ba`, `a<b`, labelled with 1-based indices.
fn so_basis(n: usize) -> (Vec<String>, Vec<CMatrix>) {
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let mut m = DMatrix::zeros(n, n);
            m[(a, b)] = 1.0;
            m[(b, a)] = -1.0;
            labels.push(format!("L{}{}", a + 1, b + 1));
            mats.push(real_to_complex(&m));
        }
    }
    (labels, mats)
}

fn so_index(n: usize, a: usize, b: usize) -> usize {
    // position of L_ab (1-based a<b) in so_basis order
    let (a, b) = (a - 1, b - 1);
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

fn so(n: usize, tol: f64) -> Result<LieAlgebraData> {
    let (labels, mats) = so_basis(n);
    matrix_algebra(labels, &mats, tol)
}

/// `i λ_a` for the Gell-Mann matrices `λ_1..λ_8`.
fn su3(tol: f64) -> Result<LieAlgebraData> {
    let z = c(0.0, 0.0);
    let o = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    let s = 1.0 / 3f64.sqrt();
    let gm: [[Complex64; 9]; 8] = [
        [z, o, z, o, z, z, z, z, z],
        [z, -i, z, i, z, z, z, z, z],
        [o, z, z, z, -o, z, z, z, z],
        [z, z, o, z, z, z, o, z, z],
        [z, z, -i, z, z, z, i, z, z],
        [z, z, z, z, z, o, z, o, z],
        [z, z, z, z, z, -i, z, i, z],
        [c(s, 0.0), z, z, z, c(s, 0.0), z, z, z, c(-2.0 * s, 0.0)],
    ];
    let mats: Vec<CMatrix> = gm.iter().map(|e| CMatrix::from_row_slice(3, 3, e) * i).collect();
    let labels = (1..=8).map(|a| format!("X{a}")).collect();
    matrix_algebra(labels, &mats, tol)
}

/// `su(2)` as `so(3)` in the basis `L32, L13, L21`: `[e1, e2] = e3` cyclically.
fn su2_algebra(prefix: &str, tol: f64) -> Result<LieAlgebraData> {
    let (_, mats) = so_basis(3);
    // so_basis(3) = L12, L13, L23
    let labels = ["1", "2", "3"].iter().map(|s| format!("{prefix}{s}")).collect();
    matrix_algebra(labels, &[-mats[2].clone(), mats[1].clone(), -mats[0].clone()], tol)
}

fn abelian(labels: &[&str], tol: f64) -> Result<LieAlgebraData> {
    let n = labels.len();
    build_lie_algebra(
        labels.iter().map(|s| s.to_string()).collect(),
        vec![0.0; n * n * n],
        DMatrix::identity(n, n),
        tol,
    )
}

fn unit(n: usize, i: usize) -> Vec<f64> {
    let mut v = vec![0.0; n];
    v[i] = 1.0;
    v
}

fn eye(n: usize) -> Vec<Vec<f64>> {
    (0..n).map(|i| unit(n, i)).collect()
}

fn zeros(n: usize) -> Vec<Vec<f64>> {
    vec![vec![0.0; n]; n]
}

fn rows(r: &[Vec<f64>]) -> Vec<DVector<f64>> {
    r.iter().map(|v| DVector::from_column_slice(v)).collect()
}

fn entry(
    name: &str,
    description: &str,
    algebra: LieAlgebraData,
    h: Vec<Vec<f64>>,
    root_data: Option<RootDataSpec>,
    expected: Expected,
    tol: f64,
) -> Result<SpaceEntry> {
    let space = Space::new(name.into(), description.into(), algebra, rows(&h), root_data, tol)?;
    debug_assert_eq!(space.m(), expected.m);
    Ok(SpaceEntry { space, expected })
}

fn torus(tol: f64) -> Result<SpaceEntry> {
    let rd = RootDataSpec {
        rank_g: 2,
        simple_roots_g: vec![],
        gram_t: eye(2),
        rank_h: 0,
        simple_roots_h: vec![],
        restriction: zeros(2),
        torus: Some(eye(2)),
    };
    entry(
        "torus",
        "flat torus T^2 = R^2 / Z^2, unit metric",
        abelian(&["t1", "t2"], tol)?,
        vec![],
        Some(rd),
        Expected {
            m: 2,
            rank_gap: Some(2),
            witnesses: Some(1),
            torsion_zero: true,
            euclidean_factor: true,
            ..Default::default()
        },
        tol,
    )
}

fn su2_group(tol: f64) -> Result<SpaceEntry> {
    let rd = RootDataSpec {
        rank_g: 1,
        simple_roots_g: vec![vec![1.0]],
        gram_t: eye(1),
        rank_h: 0,
        simple_roots_h: vec![],
        restriction: zeros(1),
        torus: Some(vec![unit(3, 2)]),
    };
    entry(
        "su2",
        "S^3 = SU(2) with bi-invariant metric; so(3) basis L32, L13, L21",
        su2_algebra("e", tol)?,
        vec![],
        Some(rd),
        Expected { m: 3, rank_gap: Some(1), witnesses: Some(0), ..Default::default() },
        tol,
    )
}

fn su2u1(tol: f64) -> Result<SpaceEntry> {
    let alg = su2_algebra("e", tol)?.direct_sum(&abelian(&["u"], tol)?);
    let rd = RootDataSpec {
        rank_g: 2,
        simple_roots_g: vec![vec![1.0, 0.0]],
        gram_t: eye(2),
        rank_h: 0,
        simple_roots_h: vec![],
        restriction: zeros(2),
        torus: Some(vec![unit(4, 2), unit(4, 3)]),
    };
    entry(
        "su2u1",
        "S^3 x S^1 = SU(2) x U(1), product of bi-invariant metrics",
        alg,
        vec![],
        Some(rd),
        Expected { m: 4, rank_gap: Some(2), witnesses: Some(0), euclidean_factor: true, ..Default::default() },
        tol,
    )
}

fn su2_pair(tol: f64) -> Result<LieAlgebraData> {
    Ok(su2_algebra("a", tol)?.direct_sum(&su2_algebra("b", tol)?))
}

fn s3xs3(tol: f64) -> Result<SpaceEntry> {
    let rd = RootDataSpec {
        rank_g: 2,
        simple_roots_g: vec![vec![1.0, 0.0], vec![0.0, 1.0]],
        gram_t: eye(2),
        rank_h: 0,
        simple_roots_h: vec![],
        restriction: zeros(2),
        torus: Some(vec![unit(6, 2), unit(6, 5)]),
    };
    entry(
        "s3xs3",
        "S^3 x S^3 = SU(2) x SU(2), bi-invariant metric",
        su2_pair(tol)?,
        vec![],
        Some(rd),
        Expected { m: 6, rank_gap: Some(2), witnesses: Some(0), ..Default::default() },
        tol,
    )
}

fn s2xs3(tol: f64) -> Result<SpaceEntry> {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let rd = RootDataSpec {
        rank_g: 2,
        simple_roots_g: vec![vec![1.0, 0.0], vec![0.0, 1.0]],
        gram_t: eye(2),
        rank_h: 1,
        simple_roots_h: vec![],
        restriction: vec![vec![0.5, 0.5], vec![0.5, 0.5]],
        torus: Some(vec![unit(6, 2), unit(6, 5)]),
    };
    entry(
        "s2xs3",
        "S^2 x S^3 = (SU(2) x SU(2)) / U(1), circle embedded diagonally along (e3 + e3')/sqrt 2",
        su2_pair(tol)?,
        vec![vec![0.0, 0.0, r, 0.0, 0.0, r]],
        Some(rd),
        Expected { m: 5, rank_gap: Some(1), witnesses: Some(2), ..Default::default() },
        tol,
    )
}

fn s2(tol: f64) -> Result<SpaceEntry> {
    let rd = RootDataSpec {
        rank_g: 1,
        simple_roots_g: vec![vec![1.0]],
        gram_t: eye(1),
        rank_h: 1,
        simple_roots_h: vec![],
        restriction: eye(1),
        torus: Some(vec![unit(3, 0)]),
    };
    entry(
        "s2",
        "S^2 = SO(3)/SO(2), radius 1; so(3) basis L12, L13, L23 with h = L12",
        so(3, tol)?,
        vec![unit(3, 0)],
        Some(rd),
        Expected {
            m: 2,
            chi: Some(2),
            rank_gap: Some(0),
            witnesses: Some(2),
            torsion_zero: true,
            ..Default::default()
        },
        tol,
    )
}

fn s3sym(tol: f64) -> Result<SpaceEntry> {
    let h = vec![unit(6, so_index(4, 1, 2)), unit(6, so_index(4, 1, 3)), unit(6, so_index(4, 2, 3))];
    let rd = RootDataSpec {
        rank_g: 2,
        simple_roots_g: vec![vec![1.0, -1.0], vec![1.0, 1.0]],
        gram_t: eye(2),
        rank_h: 1,
        simple_roots_h: vec![vec![1.0, 0.0]],
        restriction: vec![vec![1.0, 0.0], vec![0.0, 0.0]],
        torus: Some(vec![unit(6, so_index(4, 1, 2)), unit(6, so_index(4, 3, 4))]),
    };
    entry(
        "s3sym",
        "S^3 = SO(4)/SO(3), radius 1; torus L12, L34",
        so(4, tol)?,
        h,
        Some(rd),
        Expected { m: 3, rank_gap: Some(1), witnesses: Some(2), torsion_zero: true, ..Default::default() },
        tol,
    )
}

fn s4(tol: f64) -> Result<SpaceEntry> {
    let mut h = Vec::new();
    for a in 1..=4 {
        for b in (a + 1)..=4 {
            h.push(unit(10, so_index(5, a, b)));
        }
    }
    let rd = RootDataSpec {
        rank_g: 2,
        simple_roots_g: vec![vec![1.0, -1.0], vec![0.0, 1.0]],
        gram_t: eye(2),
        rank_h: 2,
        simple_roots_h: vec![vec![1.0, -1.0], vec![1.0, 1.0]],
        restriction: eye(2),
        torus: Some(vec![unit(10, so_index(5, 1, 2)), unit(10, so_index(5, 3, 4))]),
    };
    entry(
        "s4",
        "S^4 = SO(5)/SO(4), radius 1; torus L12, L34",
        so(5, tol)?,
        h,
        Some(rd),
        Expected {
            m: 4,
            chi: Some(2),
            rank_gap: Some(0),
            witnesses: Some(8),
            torsion_zero: true,
            ..Default::default()
        },
        tol,
    )
}

fn su3_roots() -> Vec<Vec<f64>> {
    vec![vec![2.0, 0.0], vec![-1.0, 3f64.sqrt()]]
}

fn cp2(tol: f64) -> Result<SpaceEntry> {
    let rd = RootDataSpec {
        rank_g: 2,
        simple_roots_g: su3_roots(),
        gram_t: eye(2),
        rank_h: 2,
        simple_roots_h: vec![vec![2.0, 0.0]],
        restriction: eye(2),
        torus: Some(vec![unit(8, 2), unit(8, 7)]),
    };
    entry(
        "cp2",
        "CP^2 = SU(3)/S(U(2) x U(1)); basis i*lambda_a (Gell-Mann), h = span X1, X2, X3, X8",
        su3(tol)?,
        vec![unit(8, 0), unit(8, 1), unit(8, 2), unit(8, 7)],
        Some(rd),
        Expected {
            m: 4,
            chi: Some(3),
            rank_gap: Some(0),
            witnesses: Some(6),
            torsion_zero: true,
            ..Default::default()
        },
        tol,
    )
}

fn flag(tol: f64) -> Result<SpaceEntry> {
    let rd = RootDataSpec {
        rank_g: 2,
        simple_roots_g: su3_roots(),
        gram_t: eye(2),
        rank_h: 2,
        simple_roots_h: vec![],
        restriction: eye(2),
        torus: Some(vec![unit(8, 2), unit(8, 7)]),
    };
    entry(
        "flag",
        "full flag SU(3)/T^2; basis i*lambda_a (Gell-Mann), h = span X3, X8",
        su3(tol)?,
        vec![unit(8, 2), unit(8, 7)],
        Some(rd),
        Expected { m: 6, chi: Some(6), rank_gap: Some(0), witnesses: Some(6), ..Default::default() },
        tol,
    )
}

/// Image of `so(3)` in `so(5)` acting on traceless symmetric 3x3 matrices,
/// as coordinates in the `L_ab` basis of `so(5)`.
fn principal_so3_rows() -> Vec<Vec<f64>> {
    let r2 = std::f64::consts::FRAC_1_SQRT_2;
    let r6 = 1.0 / 6f64.sqrt();
    let sym = |entries: &[(usize, usize, f64)]| {
        let mut m = DMatrix::<f64>::zeros(3, 3);
        for &(i, j, v) in entries {
            m[(i, j)] += v;
        }
        m
    };
    let basis = [
        sym(&[(0, 0, r2), (1, 1, -r2)]),
        sym(&[(0, 1, r2), (1, 0, r2)]),
        sym(&[(0, 2, r2), (2, 0, r2)]),
        sym(&[(1, 2, r2), (2, 1, r2)]),
        sym(&[(2, 2, 2.0 * r6), (0, 0, -r6), (1, 1, -r6)]),
    ];
    let gen = |a: usize, b: usize| {
        let mut m = DMatrix::<f64>::zeros(3, 3);
        m[(a, b)] = 1.0;
        m[(b, a)] = -1.0;
        m
    };
    [gen(1, 2), gen(2, 0), gen(0, 1)]
        .iter()
        .map(|x| {
            let act = DMatrix::from_fn(5, 5, |r, s| {
                let br = x * &basis[s] - &basis[s] * x;
                (basis[r].transpose() * br).trace()
            });
            let mut coords = Vec::with_capacity(10);
            for a in 0..5 {
                for b in (a + 1)..5 {
                    coords.push(act[(a, b)]);
                }
            }
            coords
        })
        .collect()
}

fn berger(tol: f64) -> Result<SpaceEntry> {
    // the circle generated by L12 in so(3) maps to 2 L12 + L34
    let rd = RootDataSpec {
        rank_g: 2,
        simple_roots_g: vec![vec![1.0, -1.0], vec![0.0, 1.0]],
        gram_t: eye(2),
        rank_h: 1,
        simple_roots_h: vec![vec![0.4, 0.2]],
        restriction: vec![vec![0.8, 0.4], vec![0.4, 0.2]],
        torus: Some(vec![unit(10, so_index(5, 1, 2)), unit(10, so_index(5, 3, 4))]),
    };
    entry(
        "berger",
        "Berger space SO(5)/SO(3), principal SO(3) acting on traceless symmetric 3x3 matrices",
        so(5, tol)?,
        principal_so3_rows(),
        Some(rd),
        Expected { m: 7, rank_gap: Some(1), witnesses: Some(0), ..Default::default() },
        tol,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::DEFAULT_TOL;

    #[test]
    fn every_entry_validates() {
        for e in all_spaces(DEFAULT_TOL).unwrap() {
            assert_eq!(e.space.m(), e.expected.m, "{}", e.space.name);
            assert!(e.space.algebra.residuals().worst() < 1e-12, "{}", e.space.name);
            assert!(e.space.split.residuals().worst() < 1e-12, "{}", e.space.name);
        }
    }

    #[test]
    fn su2_is_cyclic() {
        let e = get_space("su2", DEFAULT_TOL).unwrap();
        let a = &e.space.algebra;
        assert_eq!(a.structure(0, 1, 2), 1.0);
        assert_eq!(a.structure(1, 2, 0), 1.0);
        assert_eq!(a.structure(2, 0, 1), 1.0);
        assert_eq!(a.structure(1, 0, 2), -1.0);
        assert_eq!(a.gram(), &DMatrix::identity(3, 3));
    }

    #[test]
    fn principal_circle_direction() {
        let rows = principal_so3_rows();
        let l12 = rows[2].clone();
        let mut expected = vec![0.0; 10];
        expected[so_index(5, 1, 2)] = 2.0;
        expected[so_index(5, 3, 4)] = 1.0;
        for (a, b) in l12.iter().zip(&expected) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(get_space("rp3", DEFAULT_TOL), Err(Error::UnknownSpace(_))));
    }
}

//! Root systems, Weyl groups and the index criteria for `G/H`.
//!
//! Weights live in `t*`, identified with `R^{rank G}` carrying the inner
//! product `gram_t` induced by the normal metric. `s* ⊂ t*` is the image of
//! the restriction map, an orthogonal projection.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::ReductiveSplit;
use crate::linalg;

/// Largest Weyl group enumerated.
pub const WEYL_LIMIT: usize = 1152;

/// Tolerance for `w·rho_G ∈ s*`.
pub const WITNESS_TOL: f64 = 1e-8;

const ROOT_TOL: f64 = 1e-9;

/// Root data as stored in catalog entries and space files.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootDataSpec {
    pub rank_g: usize,
    pub simple_roots_g: Vec<Vec<f64>>,
    pub gram_t: Vec<Vec<f64>>,
    pub rank_h: usize,
    #[serde(default)]
    pub simple_roots_h: Vec<Vec<f64>>,
    pub restriction: Vec<Vec<f64>>,
    /// Optional basis of the maximal torus in algebra coordinates, used to
    /// cross-check the roots against eigenvalues of `ad`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torus: Option<Vec<Vec<f64>>>,
}

fn to_matrix(rows: &[Vec<f64>], n: usize, what: &str) -> Result<DMatrix<f64>> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidRootData(format!("{what} must be {n}x{n}")));
    }
    Ok(DMatrix::from_fn(n, n, |i, j| rows[i][j]))
}

fn to_vectors(rows: &[Vec<f64>], n: usize, what: &str) -> Result<Vec<DVector<f64>>> {
    rows.iter()
        .map(|r| {
            if r.len() != n {
                Err(Error::InvalidRootData(format!("{what}: expected length {n}, found {}", r.len())))
            } else {
                Ok(DVector::from_column_slice(r))
            }
        })
        .collect()
}

fn contains(set: &[DVector<f64>], v: &DVector<f64>) -> bool {
    set.iter().any(|x| (x - v).amax() < ROOT_TOL)
}

/// A (possibly empty) root system inside `t*`.
#[derive(Debug, Clone)]
pub struct RootData {
    gram: DMatrix<f64>,
    simple_roots: Vec<DVector<f64>>,
    all_roots: Vec<DVector<f64>>,
    positive_roots: Vec<DVector<f64>>,
    rho: DVector<f64>,
}

impl RootData {
    pub fn new(simple_roots: Vec<DVector<f64>>, gram: DMatrix<f64>) -> Result<Self> {
        let n = gram.nrows();
        if simple_roots.iter().any(|a| a.len() != n) {
            return Err(Error::InvalidRootData("root length differs from torus rank".into()));
        }
        let ip = |a: &DVector<f64>, b: &DVector<f64>| a.dot(&(&gram * b));
        let k = simple_roots.len();
        let cartan_gram = DMatrix::from_fn(k, k, |i, j| ip(&simple_roots[i], &simple_roots[j]));
        if k > 0 && linalg::min_eigenvalue(&cartan_gram) < ROOT_TOL {
            return Err(Error::InvalidRootData("simple roots are linearly dependent".into()));
        }
        // Weyl orbit of the simple roots
        let mut all_roots: Vec<DVector<f64>> = simple_roots.clone();
        let mut frontier = simple_roots.clone();
        while let Some(r) = frontier.pop() {
            for a in &simple_roots {
                let img = &r - a * (2.0 * ip(a, &r) / ip(a, a));
                if !contains(&all_roots, &img) {
                    if all_roots.len() > 4 * WEYL_LIMIT {
                        return Err(Error::InvalidRootData("root orbit does not close".into()));
                    }
                    all_roots.push(img.clone());
                    frontier.push(img);
                }
            }
        }
        // coefficients in the simple-root basis
        let positive_roots: Vec<DVector<f64>> = if k == 0 {
            Vec::new()
        } else {
            let inv = cartan_gram.clone().try_inverse().expect("positive definite");
            all_roots
                .iter()
                .filter(|r| {
                    let rhs = DVector::from_fn(k, |i, _| ip(&simple_roots[i], r));
                    let coef = &inv * rhs;
                    coef.iter().all(|c| *c > -ROOT_TOL)
                })
                .cloned()
                .collect()
        };
        if 2 * positive_roots.len() != all_roots.len() {
            return Err(Error::InvalidRootData("roots are not split evenly into positive and negative".into()));
        }
        let rho = positive_roots.iter().fold(DVector::zeros(n), |acc, r| acc + r) * 0.5;
        Ok(Self { gram, simple_roots, all_roots, positive_roots, rho })
    }

    pub fn ambient_dim(&self) -> usize {
        self.gram.nrows()
    }

    pub fn gram(&self) -> &DMatrix<f64> {
        &self.gram
    }

    pub fn simple_roots(&self) -> &[DVector<f64>] {
        &self.simple_roots
    }

    pub fn all_roots(&self) -> &[DVector<f64>] {
        &self.all_roots
    }

    pub fn positive_roots(&self) -> &[DVector<f64>] {
        &self.positive_roots
    }

    pub fn rho(&self) -> &DVector<f64> {
        &self.rho
    }

    pub fn inner(&self, a: &DVector<f64>, b: &DVector<f64>) -> f64 {
        a.dot(&(&self.gram * b))
    }

    pub fn norm_sq(&self, a: &DVector<f64>) -> f64 {
        self.inner(a, a)
    }

    /// Reflection in the hyperplane orthogonal to `a`.
    pub fn reflection(&self, a: &DVector<f64>) -> DMatrix<f64> {
        let n = self.ambient_dim();
        let ga = (&self.gram * a).transpose();
        DMatrix::identity(n, n) - a * ga * (2.0 / self.norm_sq(a))
    }

    /// Whether `-r` is a root for every root `r`.
    pub fn negation_closed(&self) -> bool {
        self.all_roots.iter().all(|r| contains(&self.all_roots, &(-r)))
    }

    /// Fundamental weights dual to the simple coroots, in the span of the roots.
    pub fn fundamental_weights(&self) -> Vec<DVector<f64>> {
        let k = self.simple_roots.len();
        if k == 0 {
            return Vec::new();
        }
        let c = DMatrix::from_fn(k, k, |i, j| self.inner(&self.simple_roots[i], &self.simple_roots[j]));
        let inv = c.try_inverse().expect("simple roots independent");
        (0..k)
            .map(|i| {
                let half = 0.5 * self.norm_sq(&self.simple_roots[i]);
                (0..k).fold(DVector::zeros(self.ambient_dim()), |acc, j| {
                    acc + &self.simple_roots[j] * (half * inv[(i, j)])
                })
            })
            .collect()
    }
}

/// Finite reflection group acting on `t*`.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    pub elements: Vec<DMatrix<f64>>,
    pub generators: Vec<DMatrix<f64>>,
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Whether every element maps the root set onto itself.
    pub fn permutes_roots(&self, rd: &RootData) -> bool {
        self.elements.iter().all(|w| rd.all_roots().iter().all(|r| contains(rd.all_roots(), &(w * r))))
    }
}

/// Closure of the simple reflections under composition.
pub fn generate_weyl_group(rd: &RootData) -> Result<WeylGroup> {
    let n = rd.ambient_dim();
    let generators: Vec<DMatrix<f64>> = rd.simple_roots().iter().map(|a| rd.reflection(a)).collect();
    let mut elements = vec![DMatrix::identity(n, n)];
    let mut frontier = 0;
    while frontier < elements.len() {
        let w = elements[frontier].clone();
        frontier += 1;
        for s in &generators {
            let ws = s * &w;
            if !elements.iter().any(|e| (e - &ws).amax() < ROOT_TOL) {
                if elements.len() >= WEYL_LIMIT {
                    return Err(Error::GroupTooLarge { limit: WEYL_LIMIT });
                }
                elements.push(ws);
            }
        }
    }
    Ok(WeylGroup { elements, generators })
}

/// `χ(G/H) = |W_G| / |W_H|` for equal rank.
pub fn euler_characteristic(wg: &WeylGroup, wh: &WeylGroup, rank_g: usize, rank_h: usize) -> Result<usize> {
    if rank_g != rank_h {
        return Err(Error::RankMismatch { rank_g, rank_h });
    }
    let chi = wg.order() / wh.order();
    assert!(chi > 0 && chi * wh.order() == wg.order(), "|W_H| must divide |W_G|");
    Ok(chi)
}

/// Orthogonal projection `t* → s*`.
#[derive(Debug, Clone)]
pub struct RestrictionMap {
    pub matrix: DMatrix<f64>,
}

impl RestrictionMap {
    /// Accepts `P` with `P² = P` and `gram·P` symmetric.
    pub fn new(matrix: DMatrix<f64>, gram: &DMatrix<f64>, tol: f64) -> Result<Self> {
        let idem = linalg::max_abs(&(&matrix * &matrix - &matrix));
        let gp = gram * &matrix;
        let adj = linalg::max_abs(&(&gp - gp.transpose()));
        if idem >= tol || adj >= tol {
            return Err(Error::InvalidRootData(format!(
                "restriction is not an orthogonal projection (idempotence {idem:.3e}, self-adjointness {adj:.3e})"
            )));
        }
        Ok(Self { matrix })
    }

    pub fn rank(&self) -> usize {
        self.matrix.trace().round() as usize
    }
}

/// Root data for `G` and `H` on a common `t*`, with Weyl groups.
#[derive(Debug, Clone)]
pub struct IndexData {
    pub rank_g: usize,
    pub rank_h: usize,
    pub g: RootData,
    pub h: RootData,
    pub weyl_g: WeylGroup,
    pub weyl_h: WeylGroup,
    pub restriction: RestrictionMap,
}

impl IndexData {
    pub fn from_spec(spec: &RootDataSpec, tol: f64) -> Result<Self> {
        let n = spec.rank_g;
        let gram = to_matrix(&spec.gram_t, n, "gram_t")?;
        if n > 0 && linalg::min_eigenvalue(&gram) <= 0.0 {
            return Err(Error::InvalidRootData("gram_t is not positive definite".into()));
        }
        if spec.rank_h > n {
            return Err(Error::InvalidRootData("rank_h exceeds rank_g".into()));
        }
        let g = RootData::new(to_vectors(&spec.simple_roots_g, n, "simple_roots_g")?, gram.clone())?;
        let h = RootData::new(to_vectors(&spec.simple_roots_h, n, "simple_roots_h")?, gram.clone())?;
        let restriction = RestrictionMap::new(to_matrix(&spec.restriction, n, "restriction")?, &gram, tol.max(1e-12))?;
        if restriction.rank() != spec.rank_h {
            return Err(Error::InvalidRootData(format!(
                "restriction has rank {}, expected {}",
                restriction.rank(),
                spec.rank_h
            )));
        }
        let n_id = DMatrix::<f64>::identity(n, n);
        for a in h.simple_roots() {
            if ((&n_id - &restriction.matrix) * a).amax() > WITNESS_TOL {
                return Err(Error::InvalidRootData("a root of H lies outside s*".into()));
            }
        }
        if g.simple_roots().len() > n || h.simple_roots().len() > spec.rank_h {
            return Err(Error::InvalidRootData("more simple roots than the rank".into()));
        }
        let weyl_g = generate_weyl_group(&g)?;
        let weyl_h = generate_weyl_group(&h)?;
        Ok(Self { rank_g: n, rank_h: spec.rank_h, g, h, weyl_g, weyl_h, restriction })
    }

    pub fn rank_gap(&self) -> usize {
        self.rank_g - self.rank_h
    }

    pub fn euler_characteristic(&self) -> Result<usize> {
        euler_characteristic(&self.weyl_g, &self.weyl_h, self.rank_g, self.rank_h)
    }
}

/// A Weyl group element with `w·rho_G ∈ s*`.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub element: usize,
    pub w_rho: Vec<f64>,
    /// `w·rho_G - rho_H`.
    pub kappa: Vec<f64>,
    pub distance: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionReport {
    pub witnesses: Vec<Witness>,
    pub rank_gap: usize,
    pub verdict: String,
    pub tol: f64,
}

/// Scan `W_G` for elements moving `rho_G` into `s*`. `m` is `dim G/H`.
pub fn kernel_criterion(data: &IndexData, m: usize) -> CriterionReport {
    let n = data.rank_g;
    let complement = DMatrix::<f64>::identity(n, n) - &data.restriction.matrix;
    let mut witnesses = Vec::new();
    for (idx, w) in data.weyl_g.elements.iter().enumerate() {
        let w_rho = w * data.g.rho();
        let off = &complement * &w_rho;
        let distance = data.g.norm_sq(&off).max(0.0).sqrt();
        if distance < WITNESS_TOL {
            let kappa = &w_rho - data.h.rho();
            witnesses.push(Witness {
                element: idx,
                w_rho: w_rho.iter().copied().collect(),
                kappa: kappa.iter().copied().collect(),
                distance,
            });
        }
    }
    let rank_gap = data.rank_gap();
    let verdict = if rank_gap > 1 {
        "index zero"
    } else if rank_gap == 1 && m % 4 == 1 {
        "type undetermined"
    } else if witnesses.is_empty() {
        "no witness"
    } else {
        "witness found"
    };
    CriterionReport { witnesses, rank_gap, verdict: verdict.into(), tol: WITNESS_TOL }
}

/// `|gamma + rho_G|² - |kappa + rho_H|²`.
pub fn parthasarathy_scalar(gamma: &DVector<f64>, kappa: &DVector<f64>, g: &RootData, h: &RootData) -> f64 {
    g.norm_sq(&(gamma + g.rho())) - g.norm_sq(&(kappa + h.rho()))
}

/// Casimir scalar `c^gamma = |gamma + rho|² - |rho|²`.
pub fn casimir(gamma: &DVector<f64>, rd: &RootData) -> f64 {
    rd.norm_sq(&(gamma + rd.rho())) - rd.norm_sq(rd.rho())
}

/// `|rho_G|² - |rho_H|² - c_H^kappa`, the scalar carried by the square of the
/// cubic term on the `kappa`-isotypic part; equals `|rho_G|² - |kappa + rho_H|²`.
pub fn cubic_square_scalar(kappa: &DVector<f64>, g: &RootData, h: &RootData) -> f64 {
    g.norm_sq(g.rho()) - h.norm_sq(h.rho()) - casimir(kappa, h)
}

/// Ordered `k`-subsets of `0..m`.
fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Matrix of the derivation extension of `a` (acting on `R^m`) to `Λ^k R^m`.
pub fn exterior_power_action(a: &DMatrix<f64>, k: usize) -> DMatrix<f64> {
    let m = a.nrows();
    let basis = subsets(m, k);
    let index = |s: &[usize]| basis.binary_search_by(|b| b.as_slice().cmp(s)).expect("sorted subset");
    let mut out = DMatrix::zeros(basis.len(), basis.len());
    for (col, s) in basis.iter().enumerate() {
        for r in 0..k {
            let b = s[r];
            for c in 0..m {
                let coef = a[(c, b)];
                if coef == 0.0 || (c != b && s.contains(&c)) {
                    continue;
                }
                let mut t = s.clone();
                t[r] = c;
                // sort, tracking the sign of the permutation
                let mut sign = 1.0;
                for i in 0..k {
                    for j in 0..(k - 1 - i) {
                        if t[j] > t[j + 1] {
                            t.swap(j, j + 1);
                            sign = -sign;
                        }
                    }
                }
                out[(index(&t), col)] += sign * coef;
            }
        }
    }
    out
}

/// Dimensions of the `h`-invariants in each `Λ^k p`, `k = 0..m`.
pub fn invariant_dims(split: &ReductiveSplit, tol: f64) -> Vec<usize> {
    let m = split.m();
    let cutoff = tol.sqrt().max(1e-8);
    (0..=m)
        .map(|k| {
            let n = subsets(m, k).len();
            if split.isotropy().is_empty() {
                return n;
            }
            let blocks: Vec<DMatrix<f64>> = split.isotropy().iter().map(|a| exterior_power_action(a, k)).collect();
            let mut stacked = DMatrix::zeros(n * blocks.len(), n);
            for (i, b) in blocks.iter().enumerate() {
                stacked.view_mut((i * n, 0), (n, n)).copy_from(b);
            }
            linalg::null_space(&stacked, cutoff).ncols()
        })
        .collect()
}

/// `Σ_k (-1)^k dim (Λ^k p)^H`, assuming `H` connected.
pub fn invariant_euler(split: &ReductiveSplit, tol: f64) -> i64 {
    invariant_dims(split, tol).iter().enumerate().map(|(k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rd(roots: &[&[f64]]) -> RootData {
        let n = roots.first().map_or(1, |r| r.len());
        RootData::new(roots.iter().map(|r| DVector::from_column_slice(r)).collect(), DMatrix::identity(n, n)).unwrap()
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(generate_weyl_group(&rd(&[&[1.0]])).unwrap().order(), 2);
        let a2 = rd(&[&[2.0, 0.0], &[-1.0, 3f64.sqrt()]]);
        assert_eq!(a2.all_roots().len(), 6);
        assert_eq!(generate_weyl_group(&a2).unwrap().order(), 6);
        assert_eq!(generate_weyl_group(&rd(&[&[1.0, 0.0], &[0.0, 1.0]])).unwrap().order(), 4);
        let b2 = rd(&[&[1.0, -1.0], &[0.0, 1.0]]);
        assert_eq!(b2.all_roots().len(), 8);
        assert_eq!(generate_weyl_group(&b2).unwrap().order(), 8);
        assert!((b2.rho() - DVector::from_vec(vec![1.5, 0.5])).amax() < 1e-12);
    }

    #[test]
    fn a3_has_order_24() {
        let a3 = rd(&[&[1.0, -1.0, 0.0, 0.0], &[0.0, 1.0, -1.0, 0.0], &[0.0, 0.0, 1.0, -1.0]]);
        let w = generate_weyl_group(&a3).unwrap();
        assert_eq!(w.order(), 24);
        assert!(w.permutes_roots(&a3));
    }

    #[test]
    fn fundamental_weights_are_dual() {
        let b2 = rd(&[&[1.0, -1.0], &[0.0, 1.0]]);
        for (i, w) in b2.fundamental_weights().iter().enumerate() {
            for (j, a) in b2.simple_roots().iter().enumerate() {
                let pairing = 2.0 * b2.inner(w, a) / b2.norm_sq(a);
                assert!((pairing - if i == j { 1.0 } else { 0.0 }).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn rotation_invariants_on_plane() {
        let rot = DMatrix::from_row_slice(2, 2, &[0.0, -1.0, 1.0, 0.0]);
        assert_eq!(exterior_power_action(&rot, 0).nrows(), 1);
        assert_eq!(exterior_power_action(&rot, 0)[(0, 0)], 0.0);
        // the area form is invariant
        assert_eq!(exterior_power_action(&rot, 2)[(0, 0)], 0.0);
        assert_eq!(linalg::null_space(&exterior_power_action(&rot, 1), 1e-8).ncols(), 0);
    }

    #[test]
    fn subsets_count() {
        assert_eq!(subsets(5, 2).len(), 10);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn restriction_must_be_orthogonal_projection() {
        let gram = DMatrix::identity(2, 2);
        let oblique = DMatrix::from_row_slice(2, 2, &[1.0, 1.0, 0.0, 0.0]);
        assert!(RestrictionMap::new(oblique, &gram, 1e-9).is_err());
        let half = DMatrix::from_row_slice(2, 2, &[0.5, 0.5, 0.5, 0.5]);
        assert_eq!(RestrictionMap::new(half, &gram, 1e-9).unwrap().rank(), 1);
    }
}

//! Finite-dimensional Lie algebras given by structure constants together with
//! an invariant inner product, and reductive splits `g = h ⊕ p` with `p = h^⊥`.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::error::{AxiomKind, Error, Result};
use crate::linalg;

/// Default residual tolerance for axiom and identity checks.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Worst residual observed for each Lie-algebra axiom.
#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct AxiomResiduals {
    pub antisymmetry: f64,
    pub jacobi: f64,
    pub invariance: f64,
}

impl AxiomResiduals {
    pub fn worst(&self) -> f64 {
        self.antisymmetry.max(self.jacobi).max(self.invariance)
    }
}

/// A Lie algebra `[e_i, e_j] = Σ_k c[i][j][k] e_k` with an `ad`-invariant,
/// positive-definite inner product.
#[derive(Debug, Clone)]
pub struct LieAlgebraData {
    labels: Vec<String>,
    dim: usize,
    c: Vec<f64>,
    gram: DMatrix<f64>,
    residuals: AxiomResiduals,
}

/// Dense `n³` table from sparse `(i, j, k, value)` entries.
///
/// The mirror entry `c[j][i][k] = -value` is filled in unless it was given
/// explicitly, so inconsistent input is left for the antisymmetry check.
pub fn structure_from_entries(n: usize, entries: &[(usize, usize, usize, f64)]) -> Result<Vec<f64>> {
    let mut c = vec![0.0; n * n * n];
    let mut given = vec![false; n * n * n];
    for &(i, j, k, _) in entries {
        let worst = i.max(j).max(k);
        if worst >= n {
            return Err(Error::DimensionMismatch { expected: n, found: worst + 1 });
        }
    }
    for &(i, j, k, v) in entries {
        let idx = (i * n + j) * n + k;
        c[idx] = v;
        given[idx] = true;
    }
    for &(i, j, k, v) in entries {
        let mirror = (j * n + i) * n + k;
        if !given[mirror] {
            c[mirror] = -v;
        }
    }
    Ok(c)
}

/// Validate structure constants and an inner product.
pub fn build_lie_algebra(
    labels: Vec<String>,
    structure: Vec<f64>,
    gram: DMatrix<f64>,
    tol: f64,
) -> Result<LieAlgebraData> {
    let n = gram.nrows();
    if gram.ncols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: gram.ncols() });
    }
    if structure.len() != n * n * n {
        return Err(Error::DimensionMismatch { expected: n * n * n, found: structure.len() });
    }
    if labels.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: labels.len() });
    }
    let sym_res = linalg::max_abs(&(&gram - gram.transpose()));
    if sym_res >= tol {
        return Err(Error::GramNotSymmetric { residual: sym_res });
    }
    let min_ev = linalg::min_eigenvalue(&gram);
    if n > 0 && min_ev <= 0.0 {
        return Err(Error::NotPositiveDefinite { min_eigenvalue: min_ev });
    }

    let mut alg = LieAlgebraData { labels, dim: n, c: structure, gram, residuals: AxiomResiduals::default() };
    let residuals = AxiomResiduals {
        antisymmetry: alg.antisymmetry_residual(),
        jacobi: alg.jacobi_residual(),
        invariance: alg.invariance_residual(),
    };
    for (kind, residual) in [
        (AxiomKind::Antisymmetry, residuals.antisymmetry),
        (AxiomKind::Jacobi, residuals.jacobi),
        (AxiomKind::Invariance, residuals.invariance),
    ] {
        if residual >= tol {
            return Err(Error::AxiomViolation { kind, residual });
        }
    }
    alg.residuals = residuals;
    Ok(alg)
}

impl LieAlgebraData {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gram(&self) -> &DMatrix<f64> {
        &self.gram
    }

    pub fn residuals(&self) -> AxiomResiduals {
        self.residuals
    }

    /// Raw structure constant `c[i][j][k]`.
    #[inline]
    pub fn structure(&self, i: usize, j: usize, k: usize) -> f64 {
        self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn structure_table(&self) -> &[f64] {
        &self.c
    }

    /// `[e_i, e_j]` in coordinates.
    pub fn bracket_basis(&self, i: usize, j: usize) -> DVector<f64> {
        let n = self.dim;
        DVector::from_iterator(n, (0..n).map(|k| self.structure(i, j, k)))
    }

    pub fn bracket(&self, x: &DVector<f64>, y: &DVector<f64>) -> Result<DVector<f64>> {
        self.check_len(x)?;
        self.check_len(y)?;
        let n = self.dim;
        let mut out = DVector::zeros(n);
        for i in 0..n {
            if x[i] == 0.0 {
                continue;
            }
            for j in 0..n {
                let s = x[i] * y[j];
                if s == 0.0 {
                    continue;
                }
                for k in 0..n {
                    out[k] += s * self.structure(i, j, k);
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad_x` acting on coordinate vectors.
    pub fn ad_matrix(&self, x: &DVector<f64>) -> Result<DMatrix<f64>> {
        self.check_len(x)?;
        let n = self.dim;
        let mut ad = DMatrix::zeros(n, n);
        for j in 0..n {
            for i in 0..n {
                if x[i] == 0.0 {
                    continue;
                }
                for k in 0..n {
                    ad[(k, j)] += x[i] * self.structure(i, j, k);
                }
            }
        }
        Ok(ad)
    }

    pub fn inner(&self, x: &DVector<f64>, y: &DVector<f64>) -> f64 {
        x.dot(&(&self.gram * y))
    }

    /// Orthogonal direct sum of two algebras.
    pub fn direct_sum(&self, other: &LieAlgebraData) -> LieAlgebraData {
        let (a, b) = (self.dim, other.dim);
        let n = a + b;
        let mut c = vec![0.0; n * n * n];
        for i in 0..a {
            for j in 0..a {
                for k in 0..a {
                    c[(i * n + j) * n + k] = self.structure(i, j, k);
                }
            }
        }
        for i in 0..b {
            for j in 0..b {
                for k in 0..b {
                    c[((a + i) * n + a + j) * n + a + k] = other.structure(i, j, k);
                }
            }
        }
        let mut gram = DMatrix::zeros(n, n);
        gram.view_mut((0, 0), (a, a)).copy_from(&self.gram);
        gram.view_mut((a, a), (b, b)).copy_from(&other.gram);
        let labels = self.labels.iter().chain(other.labels.iter()).cloned().collect();
        let residuals = AxiomResiduals {
            antisymmetry: self.residuals.antisymmetry.max(other.residuals.antisymmetry),
            jacobi: self.residuals.jacobi.max(other.residuals.jacobi),
            invariance: self.residuals.invariance.max(other.residuals.invariance),
        };
        LieAlgebraData { labels, dim: n, c, gram, residuals }
    }

    fn check_len(&self, x: &DVector<f64>) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: x.len() });
        }
        Ok(())
    }

    fn antisymmetry_residual(&self) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    worst = worst.max((self.structure(i, j, k) + self.structure(j, i, k)).abs());
                }
            }
        }
        worst
    }

    fn jacobi_residual(&self) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut s = 0.0;
                        for p in 0..n {
                            s += self.structure(i, j, p) * self.structure(p, k, l)
                                + self.structure(j, k, p) * self.structure(p, i, l)
                                + self.structure(k, i, p) * self.structure(p, j, l);
                        }
                        worst = worst.max(s.abs());
                    }
                }
            }
        }
        worst
    }

    /// `<[e_i, e_j], e_k> + <e_j, [e_i, e_k]>` over all basis triples.
    fn invariance_residual(&self) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut s = 0.0;
                    for p in 0..n {
                        s += self.structure(i, j, p) * self.gram[(p, k)] + self.structure(i, k, p) * self.gram[(j, p)];
                    }
                    worst = worst.max(s.abs());
                }
            }
        }
        worst
    }
}

/// Worst residuals of the invariants of a reductive split.
#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct SplitResiduals {
    pub closure: f64,
    pub orthogonality: f64,
    pub orthonormality: f64,
    pub projection_sum: f64,
    pub isotropy_preserves_p: f64,
    pub isotropy_skew: f64,
}

impl SplitResiduals {
    pub fn worst(&self) -> f64 {
        [
            self.closure,
            self.orthogonality,
            self.orthonormality,
            self.projection_sum,
            self.isotropy_preserves_p,
            self.isotropy_skew,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// `g = h ⊕ p` with `p` the orthogonal complement of a subalgebra `h`.
///
/// Both `h_basis` and `p_basis` are orthonormal for the inner product of `g`;
/// the `p` frame is the one all tensors on `p` are expressed in.
#[derive(Debug, Clone)]
pub struct ReductiveSplit {
    algebra: LieAlgebraData,
    h_basis: Vec<DVector<f64>>,
    p_basis: Vec<DVector<f64>>,
    proj_h: DMatrix<f64>,
    proj_p: DMatrix<f64>,
    isotropy: Vec<DMatrix<f64>>,
    residuals: SplitResiduals,
}

const INDEPENDENCE_CUTOFF: f64 = 1e-8;

/// Gram–Schmidt step in the `G` inner product, run twice for stability.
fn orthogonalize(v: &mut DVector<f64>, against: &[DVector<f64>], gram: &DMatrix<f64>) {
    for _ in 0..2 {
        for u in against {
            let coeff = u.dot(&(gram * &*v));
            v.axpy(-coeff, u, 1.0);
        }
    }
}

pub fn reductive_split(algebra: &LieAlgebraData, h_rows: &[DVector<f64>], tol: f64) -> Result<ReductiveSplit> {
    let n = algebra.dim();
    let gram = algebra.gram();
    for row in h_rows {
        if row.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: row.len() });
        }
    }

    let mut h_basis: Vec<DVector<f64>> = Vec::new();
    for row in h_rows {
        let mut v = row.clone();
        orthogonalize(&mut v, &h_basis, gram);
        let norm = algebra.inner(&v, &v).sqrt();
        if norm > INDEPENDENCE_CUTOFF * row.norm().max(1.0) {
            h_basis.push(v / norm);
        }
    }

    let proj_h = projector(&h_basis, gram, n);

    let mut closure: f64 = 0.0;
    for a in 0..h_basis.len() {
        for b in (a + 1)..h_basis.len() {
            let v = algebra.bracket(&h_basis[a], &h_basis[b])?;
            let off = &v - &proj_h * &v;
            closure = closure.max(algebra.inner(&off, &off).sqrt());
        }
    }
    if closure >= tol {
        return Err(Error::NotSubalgebra { residual: closure });
    }

    let mut p_basis: Vec<DVector<f64>> = Vec::new();
    for i in 0..n {
        let mut v = DVector::zeros(n);
        v[i] = 1.0;
        orthogonalize(&mut v, &h_basis, gram);
        orthogonalize(&mut v, &p_basis, gram);
        let norm = algebra.inner(&v, &v).sqrt();
        if norm > INDEPENDENCE_CUTOFF {
            p_basis.push(v / norm);
        }
    }
    if p_basis.len() + h_rows.len() != n {
        return Err(Error::DegenerateComplement { expected: n - h_rows.len().min(n), found: p_basis.len() });
    }
    let proj_p = projector(&p_basis, gram, n);

    let mut orthogonality: f64 = 0.0;
    for h in &h_basis {
        for p in &p_basis {
            orthogonality = orthogonality.max(algebra.inner(h, p).abs());
        }
    }
    let mut orthonormality: f64 = 0.0;
    for (a, pa) in p_basis.iter().enumerate() {
        for (b, pb) in p_basis.iter().enumerate() {
            let target = if a == b { 1.0 } else { 0.0 };
            orthonormality = orthonormality.max((algebra.inner(pa, pb) - target).abs());
        }
    }
    let projection_sum = linalg::max_abs(&(&proj_h + &proj_p - DMatrix::identity(n, n)));

    let m = p_basis.len();
    let mut isotropy = Vec::with_capacity(h_basis.len());
    let mut preserves: f64 = 0.0;
    let mut skew: f64 = 0.0;
    for h in &h_basis {
        let mut pi = DMatrix::zeros(m, m);
        for (b, pb) in p_basis.iter().enumerate() {
            let v = algebra.bracket(h, pb)?;
            let hpart = &proj_h * &v;
            preserves = preserves.max(algebra.inner(&hpart, &hpart).sqrt());
            for (c, pc) in p_basis.iter().enumerate() {
                pi[(c, b)] = algebra.inner(pc, &v);
            }
        }
        skew = skew.max(linalg::max_abs(&(&pi + pi.transpose())));
        isotropy.push(pi);
    }

    let residuals = SplitResiduals {
        closure,
        orthogonality,
        orthonormality,
        projection_sum,
        isotropy_preserves_p: preserves,
        isotropy_skew: skew,
    };
    for (name, r) in [
        ("h-p orthogonality", orthogonality),
        ("p orthonormality", orthonormality),
        ("projection sum", projection_sum),
        ("[h,p] in p", preserves),
        ("isotropy skewness", skew),
    ] {
        if r >= tol {
            return Err(Error::SplitViolation { name, residual: r });
        }
    }

    Ok(ReductiveSplit { algebra: algebra.clone(), h_basis, p_basis, proj_h, proj_p, isotropy, residuals })
}

fn projector(basis: &[DVector<f64>], gram: &DMatrix<f64>, n: usize) -> DMatrix<f64> {
    let mut p = DMatrix::zeros(n, n);
    for u in basis {
        p += u * (gram * u).transpose();
    }
    p
}

impl ReductiveSplit {
    pub fn algebra(&self) -> &LieAlgebraData {
        &self.algebra
    }

    /// `dim p`.
    pub fn m(&self) -> usize {
        self.p_basis.len()
    }

    pub fn dim_h(&self) -> usize {
        self.h_basis.len()
    }

    pub fn h_basis(&self) -> &[DVector<f64>] {
        &self.h_basis
    }

    pub fn p_basis(&self) -> &[DVector<f64>] {
        &self.p_basis
    }

    pub fn proj_h(&self) -> &DMatrix<f64> {
        &self.proj_h
    }

    pub fn proj_p(&self) -> &DMatrix<f64> {
        &self.proj_p
    }

    /// Matrices of `ad_h|_p` in the orthonormal `p` frame, one per `h` basis vector.
    pub fn isotropy(&self) -> &[DMatrix<f64>] {
        &self.isotropy
    }

    pub fn residuals(&self) -> SplitResiduals {
        self.residuals
    }

    /// `[p_a, p_b]` in `g` coordinates.
    pub fn bracket_of_frame(&self, a: usize, b: usize) -> DVector<f64> {
        self.algebra.bracket(&self.p_basis[a], &self.p_basis[b]).expect("frame vectors have the algebra's dimension")
    }

    /// `[p_a, p_b]_h` in `g` coordinates.
    pub fn bracket_h(&self, a: usize, b: usize) -> DVector<f64> {
        &self.proj_h * self.bracket_of_frame(a, b)
    }

    /// Components `<[p_a, p_b], p_c>` of the `p`-part of the bracket.
    pub fn bracket_p_coords(&self, a: usize, b: usize) -> DVector<f64> {
        let v = self.bracket_of_frame(a, b);
        DVector::from_iterator(self.m(), self.p_basis.iter().map(|pc| self.algebra.inner(pc, &v)))
    }

    /// Embed `p`-frame coordinates into `g`.
    pub fn p_to_algebra(&self, coords: &DVector<f64>) -> DVector<f64> {
        let mut out = DVector::zeros(self.algebra.dim());
        for (a, p) in self.p_basis.iter().enumerate() {
            out.axpy(coords[a], p, 1.0);
        }
        out
    }
}

//! Complex spinor representation of `Cl(p)` and the doubled representation on
//! `Σ ⊗ Σ` used for the Weitzenböck-type operators.
//!
//! Generators satisfy `c_i c_j + c_j c_i = -2 δ_ij`, are skew-Hermitian, and the
//! double representation consists of two mutually commuting copies.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix};
use crate::tensors::{Tensor4, TorsionTensor};

/// Largest `m` accepted for a single spinor representation (`2^6 = 64`).
pub const MAX_SPINOR_M: usize = 13;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

fn pauli() -> [CMatrix; 3] {
    let z = Complex64::new(0.0, 0.0);
    let o = Complex64::new(1.0, 0.0);
    [
        CMatrix::from_row_slice(2, 2, &[z, o, o, z]),
        CMatrix::from_row_slice(2, 2, &[z, -I, I, z]),
        CMatrix::from_row_slice(2, 2, &[o, z, z, -o]),
    ]
}

fn i_pow(n: usize) -> Complex64 {
    [Complex64::new(1.0, 0.0), I, Complex64::new(-1.0, 0.0), -I][n % 4]
}

/// Irreducible complex Clifford module of `Cl(m)`.
#[derive(Debug, Clone)]
pub struct CliffordRep {
    m: usize,
    gens: Vec<CMatrix>,
    mono: Vec<Monomial>,
}

impl CliffordRep {
    /// Jordan–Wigner generators on `(C²)^{⊗k}`, `m = 2k` or `2k+1`.
    pub fn new(m: usize) -> Result<Self> {
        if m > MAX_SPINOR_M {
            return Err(Error::DimensionTooLarge { m, max: MAX_SPINOR_M });
        }
        let k = m / 2;
        let [s1, s2, s3] = pauli();
        let id2 = CMatrix::identity(2, 2);
        let chain = |a: usize, mid: &CMatrix| -> CMatrix {
            let mut out = CMatrix::identity(1, 1);
            for _ in 0..a {
                out = linalg::kron(&out, &s3);
            }
            out = linalg::kron(&out, mid);
            for _ in (a + 1)..k {
                out = linalg::kron(&out, &id2);
            }
            out
        };
        let mut gens = Vec::with_capacity(m);
        for a in 0..k {
            gens.push(chain(a, &s1) * I);
            gens.push(chain(a, &s2) * I);
        }
        if m % 2 == 1 {
            let d = 1usize << k;
            let mut prod = CMatrix::identity(d, d);
            for g in &gens {
                prod *= g;
            }
            gens.push(prod * i_pow(k + 1));
        }
        let mono = monomials(&gens);
        Ok(Self { m, gens, mono })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.mono
    }

    /// Spinor dimension `2^{⌊m/2⌋}`.
    pub fn dim(&self) -> usize {
        1usize << (self.m / 2)
    }

    pub fn generators(&self) -> &[CMatrix] {
        &self.gens
    }

    /// Volume element `c_1 ⋯ c_m`.
    pub fn volume(&self) -> CMatrix {
        let d = self.dim();
        self.gens.iter().fold(CMatrix::identity(d, d), |acc, g| acc * g)
    }

    /// Worst entry of `c_i c_j + c_j c_i + 2 δ_ij` and of `c_i + c_i^*`.
    pub fn relation_residual(&self) -> f64 {
        anticommutator_residual(&self.gens, &self.gens, true).max(skew_residual(&self.gens))
    }
}

/// `(-1)^{m(m+1)/2}`, the sign of the square of the volume element.
pub fn volume_square_sign(m: usize) -> f64 {
    if (m * (m + 1) / 2).is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Residuals of `ω² = (-1)^{m(m+1)/2}` and `ω c_i = (-1)^{m-1} c_i ω`.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct VolumeParity {
    pub m: usize,
    pub square_sign: f64,
    pub square_residual: f64,
    pub commutation_residual: f64,
}

pub fn volume_parity(rep: &CliffordRep) -> VolumeParity {
    let m = rep.m();
    let d = rep.dim();
    let w = rep.volume();
    let sign = volume_square_sign(m);
    let square_residual = linalg::cmax_abs(&(&w * &w - linalg::cscalar(d, sign)));
    let parity = if m % 2 == 1 { 1.0 } else { -1.0 };
    let commutation_residual = rep
        .generators()
        .iter()
        .map(|c| linalg::cmax_abs(&(&w * c - c * &w * Complex64::new(parity, 0.0))))
        .fold(0.0, f64::max);
    VolumeParity { m, square_sign: sign, square_residual, commutation_residual }
}

fn skew_residual(gens: &[CMatrix]) -> f64 {
    gens.iter().map(|g| linalg::cmax_abs(&(g + g.adjoint()))).fold(0.0, f64::max)
}

/// Worst entry of `a_i b_j + b_j a_i + 2 δ_ij` (with `same`) or `a_i b_j - b_j a_i`.
fn anticommutator_residual(a: &[CMatrix], b: &[CMatrix], same: bool) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let r = if same {
                let mut s = x * y + y * x;
                if i == j {
                    s += linalg::cscalar(x.nrows(), 2.0);
                }
                s
            } else {
                x * y - y * x
            };
            worst = worst.max(linalg::cmax_abs(&r));
        }
    }
    worst
}

/// Two commuting Clifford representations on `Σ ⊗ Σ`:
/// `C_i = c_i ⊗ 1` and `Ĉ_i = 1 ⊗ c_i`.
#[derive(Debug, Clone)]
pub struct DoubleClifford {
    m: usize,
    c: Vec<CMatrix>,
    c_hat: Vec<CMatrix>,
    c_mono: Vec<Monomial>,
    c_hat_mono: Vec<Monomial>,
}

impl DoubleClifford {
    /// Fails with `DimensionTooLarge` above `max_m`.
    pub fn new(m: usize, max_m: usize) -> Result<Self> {
        if m > max_m {
            return Err(Error::DimensionTooLarge { m, max: max_m });
        }
        let single = CliffordRep::new(m)?;
        let d = single.dim();
        let id = CMatrix::identity(d, d);
        let c: Vec<CMatrix> = single.generators().iter().map(|g| linalg::kron(g, &id)).collect();
        let c_hat: Vec<CMatrix> = single.generators().iter().map(|g| linalg::kron(&id, g)).collect();
        let c_mono = monomials(&c);
        let c_hat_mono = monomials(&c_hat);
        Ok(Self { m, c, c_hat, c_mono, c_hat_mono })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.c.first().map_or(1, |g| g.nrows())
    }

    pub fn c(&self) -> &[CMatrix] {
        &self.c
    }

    pub fn c_hat(&self) -> &[CMatrix] {
        &self.c_hat
    }

    pub fn c_mono(&self) -> &[Monomial] {
        &self.c_mono
    }

    pub fn c_hat_mono(&self) -> &[Monomial] {
        &self.c_hat_mono
    }

    /// Clifford relations within each copy and commutation across copies.
    pub fn relation_residual(&self) -> f64 {
        anticommutator_residual(&self.c, &self.c, true)
            .max(anticommutator_residual(&self.c_hat, &self.c_hat, true))
            .max(anticommutator_residual(&self.c, &self.c_hat, false))
            .max(skew_residual(&self.c))
            .max(skew_residual(&self.c_hat))
    }
}

/// Matrix with exactly one nonzero entry per row: `M[r, col[r]] = phase[r]`.
/// Products of Clifford generators in the representations above have this form.
#[derive(Debug, Clone, PartialEq)]
pub struct Monomial {
    col: Vec<usize>,
    phase: Vec<Complex64>,
}

impl Monomial {
    pub fn identity(d: usize) -> Self {
        Self { col: (0..d).collect(), phase: vec![Complex64::new(1.0, 0.0); d] }
    }

    /// `None` unless every row has exactly one entry above `tol` in modulus.
    pub fn from_dense(a: &CMatrix, tol: f64) -> Option<Self> {
        let d = a.nrows();
        let mut col = Vec::with_capacity(d);
        let mut phase = Vec::with_capacity(d);
        for r in 0..d {
            let mut hits = (0..a.ncols()).filter(|&c| a[(r, c)].norm() > tol);
            let c = hits.next()?;
            if hits.next().is_some() {
                return None;
            }
            col.push(c);
            phase.push(a[(r, c)]);
        }
        Some(Self { col, phase })
    }

    pub fn dim(&self) -> usize {
        self.col.len()
    }

    pub fn to_dense(&self) -> CMatrix {
        let d = self.dim();
        let mut out = CMatrix::zeros(d, d);
        self.add_to(Complex64::new(1.0, 0.0), &mut out);
        out
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let col = self.col.iter().map(|&c| other.col[c]).collect();
        let phase = self.col.iter().zip(&self.phase).map(|(&c, p)| p * other.phase[c]).collect();
        Monomial { col, phase }
    }

    pub fn kron(&self, other: &Monomial) -> Monomial {
        let db = other.dim();
        let mut col = Vec::with_capacity(self.dim() * db);
        let mut phase = Vec::with_capacity(self.dim() * db);
        for (ca, pa) in self.col.iter().zip(&self.phase) {
            for (cb, pb) in other.col.iter().zip(&other.phase) {
                col.push(ca * db + cb);
                phase.push(pa * pb);
            }
        }
        Monomial { col, phase }
    }

    /// `out += coef · M`.
    pub fn add_to(&self, coef: Complex64, out: &mut CMatrix) {
        for (r, (&c, p)) in self.col.iter().zip(&self.phase).enumerate() {
            out[(r, c)] += coef * p;
        }
    }

    /// `out += coef · M x`.
    pub fn mul_dense_into(&self, coef: Complex64, x: &CMatrix, out: &mut CMatrix) {
        for (r, (&c, p)) in self.col.iter().zip(&self.phase).enumerate() {
            let f = coef * p;
            for k in 0..x.ncols() {
                out[(r, k)] += f * x[(c, k)];
            }
        }
    }
}

/// Linear combination of monomial matrices.
#[derive(Debug, Clone, Default)]
pub struct SparseOp {
    pub terms: Vec<(Complex64, Monomial)>,
}

impl SparseOp {
    pub fn single(coef: f64, m: Monomial) -> Self {
        Self { terms: vec![(Complex64::new(coef, 0.0), m)] }
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self { terms: self.terms.iter().map(|(c, m)| (c * s, m.clone())).collect() }
    }

    pub fn plus(&self, other: &SparseOp) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self { terms }
    }

    pub fn add_scaled(&mut self, s: f64, other: &SparseOp) {
        self.terms.extend(other.terms.iter().map(|(c, m)| (c * s, m.clone())));
    }

    /// `out += coef · self · other`.
    pub fn add_product_to(&self, other: &SparseOp, coef: f64, out: &mut CMatrix) {
        for (a, ma) in &self.terms {
            for (b, mb) in &other.terms {
                ma.mul(mb).add_to(a * b * coef, out);
            }
        }
    }

    pub fn to_dense(&self, d: usize) -> CMatrix {
        let mut out = CMatrix::zeros(d, d);
        for (c, m) in &self.terms {
            m.add_to(*c, &mut out);
        }
        out
    }

    /// `self · x`.
    pub fn mul_dense(&self, x: &CMatrix) -> CMatrix {
        let mut out = CMatrix::zeros(x.nrows(), x.ncols());
        for (c, m) in &self.terms {
            m.mul_dense_into(*c, x, &mut out);
        }
        out
    }

    pub fn square(&self, d: usize) -> CMatrix {
        self.mul_dense(&self.to_dense(d))
    }
}

/// Monomial form of a list of generators.
pub fn monomials(gens: &[CMatrix]) -> Vec<Monomial> {
    gens.iter().map(|g| Monomial::from_dense(g, 1e-12).expect("Clifford generators are monomial")).collect()
}

/// `A_ij` for `i<j`, stored with its indices.
pub type Pair = (usize, usize, SparseOp);

/// `scale(i,j) · g_i g_j` for `i<j`.
pub fn pair_products(gens: &[Monomial], scale: impl Fn(usize, usize) -> f64) -> Vec<Pair> {
    let m = gens.len();
    let mut out = Vec::with_capacity(m * m.saturating_sub(1) / 2);
    for i in 0..m {
        for j in (i + 1)..m {
            out.push((i, j, SparseOp::single(scale(i, j), gens[i].mul(&gens[j]))));
        }
    }
    out
}

/// `Σ_{jk} tau_ijk g_j g_k` for each `i`.
pub fn torsion_bivectors(gens: &[Monomial], tau: &TorsionTensor) -> Vec<SparseOp> {
    let m = tau.m();
    let pairs = pair_products(gens, |_, _| 1.0);
    (0..m)
        .map(|i| {
            let mut acc = SparseOp::default();
            for (j, k, p) in &pairs {
                let t = tau.get(i, *j, *k);
                if t != 0.0 {
                    acc.add_scaled(2.0 * t, p);
                }
            }
            acc
        })
        .collect()
}

fn dim_of(gens: &[Monomial]) -> usize {
    gens.first().map_or(1, |g| g.dim())
}

/// `coef · Σ_{ijk} tau_ijk g_i g_j g_k` (Hermitian for skew-Hermitian `g`).
pub fn cubic_element(gens: &[Monomial], tau: &TorsionTensor, coef: f64) -> Result<CMatrix> {
    if gens.len() != tau.m() {
        return Err(Error::DimensionMismatch { expected: tau.m(), found: gens.len() });
    }
    let d = dim_of(gens);
    let mut out = CMatrix::zeros(d, d);
    for (g, b) in gens.iter().zip(torsion_bivectors(gens, tau)) {
        SparseOp::single(1.0, g.clone()).add_product_to(&b, coef, &mut out);
    }
    Ok(out)
}

/// `Σ_{ijkl} w_ijkl A_ij B_kl` where the pair lists hold `A_ij`, `B_kl` for `i<j`
/// and `w` is antisymmetric in each pair with `A`, `B` antisymmetric too.
pub fn quartic_from_pairs(a: &[Pair], b: &[Pair], w: &Tensor4, d: usize) -> CMatrix {
    let mut out = CMatrix::zeros(d, d);
    for (i, j, aij) in a {
        for (k, l, bkl) in b {
            let c = w.get(*i, *j, *k, *l);
            if c != 0.0 {
                aij.add_product_to(bkl, 4.0 * c, &mut out);
            }
        }
    }
    out
}

/// `Σ_{ijkl} w_ijkl g_i g_j g_k g_l` for `w` antisymmetric in each index pair.
pub fn quartic_element(gens: &[Monomial], w: &Tensor4) -> CMatrix {
    let pairs = pair_products(gens, |_, _| 1.0);
    quartic_from_pairs(&pairs, &pairs, w, dim_of(gens))
}

/// Residual of `(Σ tau ccc / 24)² = -Σ_i (Σ_{jk} tau_ijk c_j c_k / 8)² - Σ tau² / 48`.
pub fn cubic_square_residual(gens: &[Monomial], tau: &TorsionTensor) -> Result<f64> {
    let d = dim_of(gens);
    let cubic = cubic_element(gens, tau, 1.0 / 24.0)?;
    let lhs = &cubic * &cubic;
    let mut rhs = linalg::cscalar(d, -tau.sum_sq() / 48.0);
    for b in torsion_bivectors(gens, tau) {
        rhs -= b.scaled(0.125).square(d);
    }
    Ok(linalg::cmax_abs(&(lhs - rhs)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_satisfy_relations() {
        for m in 0..=8 {
            let rep = CliffordRep::new(m).unwrap();
            assert_eq!(rep.generators().len(), m);
            assert!(rep.relation_residual() < 1e-14, "m = {m}");
        }
    }

    #[test]
    fn volume_parity_small_dims() {
        for m in 1..=6 {
            let p = volume_parity(&CliffordRep::new(m).unwrap());
            assert!(p.square_residual < 1e-14 && p.commutation_residual < 1e-14, "m = {m}");
        }
        assert_eq!(volume_square_sign(1), -1.0);
        assert_eq!(volume_square_sign(3), 1.0);
        assert_eq!(volume_square_sign(4), 1.0);
        assert_eq!(volume_square_sign(5), -1.0);
    }

    #[test]
    fn double_copies_commute() {
        let dbl = DoubleClifford::new(5, 6).unwrap();
        assert_eq!(dbl.dim(), 16);
        assert!(dbl.relation_residual() < 1e-14);
        assert!(matches!(DoubleClifford::new(7, 6), Err(Error::DimensionTooLarge { m: 7, max: 6 })));
    }

    #[test]
    fn su2_cubic_squares_to_one() {
        let mut t = crate::tensors::Tensor3::zeros(3);
        for (i, j, k, s) in
            [(0, 1, 2, 1.0), (1, 2, 0, 1.0), (2, 0, 1, 1.0), (1, 0, 2, -1.0), (0, 2, 1, -1.0), (2, 1, 0, -1.0)]
        {
            t.set(i, j, k, s);
        }
        let tau = TorsionTensor::new(t, 1e-12).unwrap();
        let rep = CliffordRep::new(3).unwrap();
        // Σ tau ccc = 6 c1c2c3 and (c1c2c3)² = 1
        let cub = cubic_element(rep.monomials(), &tau, 1.0 / 6.0).unwrap();
        assert!(linalg::cmax_abs(&(&cub * &cub - linalg::cscalar(2, 1.0))) < 1e-14);
        assert!(linalg::cmax_abs(&(&cub - cub.adjoint())) < 1e-14);
        assert!(cubic_square_residual(rep.monomials(), &tau).unwrap() < 1e-14);
    }

    #[test]
    fn monomial_products_match_dense() {
        let rep = CliffordRep::new(5).unwrap();
        let g = rep.generators();
        let mono = rep.monomials();
        for i in 0..5 {
            assert_eq!(mono[i].to_dense(), g[i]);
            for j in 0..5 {
                let dense = &g[i] * &g[j];
                assert!(linalg::cmax_abs(&(mono[i].mul(&mono[j]).to_dense() - &dense)) < 1e-15);
                let x = &g[j] + &dense * Complex64::new(0.3, -0.2);
                let sparse = SparseOp::single(1.0, mono[i].clone()).mul_dense(&x);
                assert!(linalg::cmax_abs(&(sparse - &g[i] * &x)) < 1e-15);
            }
        }
        let k = mono[0].kron(&mono[1]).to_dense();
        assert_eq!(k, linalg::kron(&g[0], &g[1]));
    }

    #[test]
    fn dense_matrices_with_two_entries_in_a_row_are_not_monomial() {
        let a = CMatrix::from_element(2, 2, Complex64::new(1.0, 0.0));
        assert!(Monomial::from_dense(&a, 1e-12).is_none());
    }
}

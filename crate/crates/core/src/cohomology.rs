//! Chevalley-Eilenberg cohomology with trivial real coefficients.
//!
//! Differentials in low degree:
//!
//! ```text
//! (d theta)(x, y)    = -theta([x, y])
//! (d omega)(x, y, z) = -omega([x,y], z) + omega([x,z], y) - omega([y,z], x)
//! ```
//!
//! With these signs `d2 . d1 = 0` is the Jacobi identity.

use alloc::vec::Vec;
use nalgebra::{DMatrix, DVector};

use crate::algebra::{AlgebraElement, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{self, RANK_RTOL};

/// Tolerance on `|d2 omega|_inf` for a cochain to count as closed.
pub const COCYCLE_TOL: f64 = 1e-10;
/// Tolerance on the least-squares residual `min |d1 theta - omega|`.
pub const COBOUNDARY_TOL: f64 = 1e-8;

/// A 1-cochain, i.e. an element of `g*`.
#[derive(Debug, Clone, PartialEq)]
pub struct Cochain1 {
    pub coords: DVector<f64>,
}

impl Cochain1 {
    pub fn new(coords: Vec<f64>) -> Self {
        Self { coords: DVector::from_vec(coords) }
    }
}

/// Antisymmetric 2-cochain stored as its strict upper triangle, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Cochain2 {
    n: usize,
    packed: DVector<f64>,
}

#[inline]
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| ((i + 1)..n).map(move |j| (i, j)))
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| ((i + 1)..n).flat_map(move |j| ((j + 1)..n).map(move |k| (i, j, k))))
}

impl Cochain2 {
    pub fn zeros(n: usize) -> Self {
        Self { n, packed: DVector::zeros(n * n.saturating_sub(1) / 2) }
    }

    pub fn from_packed(n: usize, packed: DVector<f64>) -> Result<Self> {
        let len = n * n.saturating_sub(1) / 2;
        if packed.len() != len {
            return Err(Error::DimensionMismatch { expected: len, found: packed.len() });
        }
        Ok(Self { n, packed })
    }

    /// Build from a square matrix; only the strict upper triangle is read.
    pub fn from_matrix(m: &DMatrix<f64>) -> Self {
        let n = m.nrows();
        let mut c = Self::zeros(n);
        for (i, j) in pairs(n) {
            c.packed[pair_index(n, i, j)] = m[(i, j)];
        }
        c
    }

    pub fn to_matrix(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |i, j| self.get(i, j))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn packed(&self) -> &DVector<f64> {
        &self.packed
    }

    /// `omega(e_i, e_j)`.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        use core::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.packed[pair_index(self.n, i, j)],
            Greater => -self.packed[pair_index(self.n, j, i)],
            Equal => 0.0,
        }
    }

    /// Set `omega(e_i, e_j) = v` (and hence `omega(e_j, e_i) = -v`).
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        use core::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.packed[pair_index(self.n, i, j)] = v,
            Greater => self.packed[pair_index(self.n, j, i)] = -v,
            Equal => {}
        }
    }

    pub fn eval(&self, x: &AlgebraElement, y: &AlgebraElement) -> f64 {
        let m = self.to_matrix();
        x.coords.dot(&(m * &y.coords))
    }

    pub fn norm_inf(&self) -> f64 {
        self.packed.amax()
    }
}

/// Fully antisymmetric 3-cochain stored on `i < j < k`, lexicographic.
#[derive(Debug, Clone, PartialEq)]
pub struct Cochain3 {
    n: usize,
    packed: DVector<f64>,
}

impl Cochain3 {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &DVector<f64> {
        &self.packed
    }

    /// Component on `(e_i, e_j, e_k)` with `i < j < k`.
    pub fn get_sorted(&self, i: usize, j: usize, k: usize) -> f64 {
        let idx = triples(self.n).position(|t| t == (i, j, k)).expect("sorted triple in range");
        self.packed[idx]
    }

    pub fn norm_inf(&self) -> f64 {
        if self.packed.is_empty() {
            0.0
        } else {
            self.packed.amax()
        }
    }
}

/// Matrix of `d1` from `g*` (dim `n`) to packed 2-cochains.
pub fn d1_matrix(g: &LieAlgebra) -> DMatrix<f64> {
    let n = g.dim();
    let mut m = DMatrix::zeros(n * n.saturating_sub(1) / 2, n);
    for (i, j) in pairs(n) {
        let row = pair_index(n, i, j);
        for k in 0..n {
            m[(row, k)] = -g.structure_constant(k, i, j);
        }
    }
    m
}

/// Matrix of `d2` from packed 2-cochains to packed 3-cochains.
pub fn d2_matrix(g: &LieAlgebra) -> DMatrix<f64> {
    let n = g.dim();
    let n2 = n * n.saturating_sub(1) / 2;
    let rows: Vec<(usize, usize, usize)> = triples(n).collect();
    let mut m = DMatrix::zeros(rows.len(), n2);
    // omega([a,b], c) = sum_l c[l][a][b] omega(e_l, e_c)
    let mut add = |row: usize, sign: f64, a: usize, b: usize, c: usize| {
        for l in 0..n {
            let s = g.structure_constant(l, a, b);
            if s == 0.0 || l == c {
                continue;
            }
            let (p, q, orient) = if l < c { (l, c, 1.0) } else { (c, l, -1.0) };
            m[(row, pair_index(n, p, q))] += sign * s * orient;
        }
    };
    for (row, &(i, j, k)) in rows.iter().enumerate() {
        add(row, -1.0, i, j, k);
        add(row, 1.0, i, k, j);
        add(row, -1.0, j, k, i);
    }
    m
}

fn check_dim(g: &LieAlgebra, n: usize) -> Result<()> {
    if g.dim() != n {
        return Err(Error::DimensionMismatch { expected: g.dim(), found: n });
    }
    Ok(())
}

pub fn d1(g: &LieAlgebra, theta: &Cochain1) -> Result<Cochain2> {
    check_dim(g, theta.coords.len())?;
    Cochain2::from_packed(g.dim(), d1_matrix(g) * &theta.coords)
}

pub fn d2(g: &LieAlgebra, omega: &Cochain2) -> Result<Cochain3> {
    check_dim(g, omega.n)?;
    Ok(Cochain3 { n: g.dim(), packed: d2_matrix(g) * &omega.packed })
}

/// `dim H^1 = dim ker d1`.
pub fn h1_dim(g: &LieAlgebra) -> usize {
    g.dim() - linalg::rank(&d1_matrix(g), RANK_RTOL)
}

/// `dim H^2 = dim ker d2 - rank d1`.
pub fn h2_dim(g: &LieAlgebra) -> usize {
    let n = g.dim();
    let n2 = n * n.saturating_sub(1) / 2;
    let z2 = n2 - linalg::rank(&d2_matrix(g), RANK_RTOL);
    z2.saturating_sub(linalg::rank(&d1_matrix(g), RANK_RTOL))
}

/// Basis of `H^1 = Z^1` (there are no 1-coboundaries with trivial coefficients).
pub fn h1_witnesses(g: &LieAlgebra) -> Vec<Cochain1> {
    let k = linalg::null_space(&d1_matrix(g), RANK_RTOL);
    k.column_iter().map(|c| Cochain1 { coords: c.into_owned() }).collect()
}

/// Representatives of a basis of `H^2`: closed cochains orthogonal to `B^2`.
pub fn h2_witnesses(g: &LieAlgebra) -> Vec<Cochain2> {
    let n = g.dim();
    let z2 = linalg::null_space(&d2_matrix(g), RANK_RTOL);
    let b2 = linalg::range_basis(&d1_matrix(g), RANK_RTOL);
    if z2.ncols() == 0 {
        return Vec::new();
    }
    let projected = if b2.ncols() > 0 { &z2 - &b2 * (b2.transpose() * &z2) } else { z2 };
    let reps = linalg::range_basis(&projected, 1e-8);
    reps.column_iter().map(|c| Cochain2 { n, packed: c.into_owned() }).collect()
}

pub fn is_cocycle(g: &LieAlgebra, omega: &Cochain2) -> bool {
    d2(g, omega).map(|c| c.norm_inf() <= COCYCLE_TOL).unwrap_or(false)
}

/// Least-squares distance from `omega` to `B^2`.
pub fn coboundary_residual(g: &LieAlgebra, omega: &Cochain2) -> Result<f64> {
    check_dim(g, omega.n)?;
    let (_, res) = linalg::lstsq(&d1_matrix(g), &omega.packed);
    Ok(res)
}

pub fn is_coboundary(g: &LieAlgebra, omega: &Cochain2) -> bool {
    coboundary_residual(g, omega).map(|r| r <= COBOUNDARY_TOL).unwrap_or(false)
}

/// The mass cocycle `m (v . x' - v' . x)` on the Galilei algebra
/// (basis order rotations, boosts, translations, time).
pub fn galilei_cocycle(g: &LieAlgebra, m: f64) -> Result<Cochain2> {
    if g.name() != "galilei" || g.dim() != 10 {
        return Err(Error::WrongAlgebra { expected: "galilei".into(), found: g.name().into() });
    }
    let mut c = Cochain2::zeros(10);
    for i in 0..3 {
        c.set(3 + i, 6 + i, m);
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{self, AlgebraElement};
    use crate::sampling::Sampler;
    use alloc::vec;
    use proptest::prelude::*;

    fn semisimple() -> Vec<LieAlgebra> {
        vec![
            algebra::so3(),
            algebra::sl(2).unwrap(),
            algebra::sl(3).unwrap(),
            algebra::sl(4).unwrap(),
            algebra::so_compact(4).unwrap(),
            algebra::so_compact(5).unwrap(),
            algebra::sp(2).unwrap(),
            algebra::so31(),
        ]
    }

    #[test]
    fn pair_packing_is_a_bijection() {
        let n = 6;
        let idx: Vec<usize> = pairs(n).map(|(i, j)| pair_index(n, i, j)).collect();
        assert_eq!(idx, (0..15).collect::<Vec<_>>());
    }

    #[test]
    fn d1_of_f3_on_so3() {
        let g = algebra::so3();
        let w = d1(&g, &Cochain1::new(vec![0.0, 0.0, 1.0])).unwrap();
        assert_eq!(w.get(0, 1), -1.0);
        assert_eq!(w.get(1, 0), 1.0);
        assert_eq!(w.get(0, 2), 0.0);
        assert_eq!(w.get(1, 2), 0.0);
        assert_eq!(d1(&g, &Cochain1::new(vec![0.0; 3])).unwrap().norm_inf(), 0.0);
    }

    #[test]
    fn d2_matches_pointwise_formula() {
        let g = algebra::galilei();
        let mut s = Sampler::new(5);
        let w = Cochain2::from_packed(10, DVector::from_vec(s.vector(45, 1.0))).unwrap();
        let dw = d2(&g, &w).unwrap();
        let e = |i| AlgebraElement::basis(10, i);
        let br = |a, b| g.bracket(&e(a), &e(b)).unwrap();
        for (i, j, k) in [(0, 1, 2), (1, 4, 9), (3, 6, 9), (2, 5, 8)] {
            let direct = -w.eval(&br(i, j), &e(k)) + w.eval(&br(i, k), &e(j)) - w.eval(&br(j, k), &e(i));
            assert!((dw.get_sorted(i, j, k) - direct).abs() < 1e-13);
        }
    }

    #[test]
    fn abelian_complex_is_trivial() {
        let g = LieAlgebra::abelian(4).unwrap();
        assert_eq!(h1_dim(&g), 4);
        assert_eq!(h2_dim(&g), 6);
        let theta = Cochain1::new(vec![1.0, 2.0, 3.0, 4.0]);
        assert_eq!(d1(&g, &theta).unwrap().norm_inf(), 0.0);
        let mut w = Cochain2::zeros(4);
        w.set(0, 3, 2.5);
        assert_eq!(d2(&g, &w).unwrap().norm_inf(), 0.0);
    }

    #[test]
    fn semisimple_algebras_have_no_low_cohomology() {
        for g in semisimple() {
            assert_eq!(h1_dim(&g), 0, "{}", g.name());
            assert_eq!(h2_dim(&g), 0, "{}", g.name());
        }
    }

    #[test]
    fn galilei_has_one_dimensional_h2() {
        let g = algebra::galilei();
        assert_eq!(h2_dim(&g), 1);
        let sigma = galilei_cocycle(&g, 1.0).unwrap();
        let x = AlgebraElement::basis(10, 3);
        let xp = AlgebraElement::basis(10, 6);
        assert_eq!(sigma.eval(&x, &xp), 1.0);
        assert!(is_cocycle(&g, &sigma));
        assert!(!is_coboundary(&g, &sigma));
        assert!(coboundary_residual(&g, &sigma).unwrap() > 0.1);
        assert_eq!(galilei_cocycle(&g, 0.0).unwrap().norm_inf(), 0.0);
        let w = h2_witnesses(&g);
        assert_eq!(w.len(), 1);
        // The witness and the mass cocycle span the same class.
        let diff_rank = {
            let m = DMatrix::from_columns(&[w[0].packed.clone(), sigma.packed.clone()]);
            let b2 = linalg::range_basis(&d1_matrix(&g), RANK_RTOL);
            let proj = &m - &b2 * (b2.transpose() * &m);
            linalg::rank(&proj, 1e-8)
        };
        assert_eq!(diff_rank, 1);
    }

    #[test]
    fn galilei_cocycle_rejects_other_algebras() {
        assert!(matches!(galilei_cocycle(&algebra::so3(), 1.0), Err(Error::WrongAlgebra { .. })));
    }

    #[test]
    fn d_squared_vanishes_on_basis_cochains() {
        for g in [algebra::so3(), algebra::galilei(), algebra::cm3(), algebra::poincare(), algebra::sp(2).unwrap()] {
            let dd = d2_matrix(&g) * d1_matrix(&g);
            assert!(linalg::max_abs(&dd) <= 1e-13, "{}", g.name());
        }
    }

    #[test]
    fn closed_forms_on_so3_are_exact() {
        let g = algebra::so3();
        let mut s = Sampler::new(9);
        let z2 = linalg::null_space(&d2_matrix(&g), RANK_RTOL);
        for _ in 0..5 {
            let c = DVector::from_vec(s.vector(z2.ncols(), 1.0));
            let w = Cochain2::from_packed(3, &z2 * c).unwrap();
            assert!(is_cocycle(&g, &w));
            assert!(is_coboundary(&g, &w));
        }
    }

    #[test]
    fn heavy_top_algebra_cohomology() {
        // se(3): invariant forms on R^3 sit in degrees 0 and 3 only.
        let g = algebra::heavy_top3();
        assert_eq!(h1_dim(&g), 0);
        assert_eq!(h2_dim(&g), 0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn coboundaries_are_closed(seed in any::<u64>(), idx in 0usize..4) {
            let g = [algebra::so3(), algebra::galilei(), algebra::sl(3).unwrap(), algebra::cm3()][idx].clone();
            let mut s = Sampler::new(seed);
            let theta = Cochain1::new(s.vector(g.dim(), 1.0));
            let w = d1(&g, &theta).unwrap();
            prop_assert!(d2(&g, &w).unwrap().norm_inf() <= 1e-13);
            prop_assert!(is_coboundary(&g, &w));
        }

        #[test]
        fn dims_invariant_under_change_of_basis(seed in any::<u64>(), idx in 0usize..4) {
            let g = [algebra::so3(), algebra::galilei(), algebra::sl(2).unwrap(), algebra::heavy_top3()][idx].clone();
            let mut s = Sampler::new(seed);
            let n = g.dim();
            // Identity plus a perturbation of norm below 1/2 keeps the condition number under 3.
            let p = DMatrix::identity(n, n) + DMatrix::from_vec(n, n, s.vector(n * n, 0.5 / n as f64));
            let h = g.change_basis(&p).unwrap();
            prop_assert_eq!(h1_dim(&h), h1_dim(&g));
            prop_assert_eq!(h2_dim(&h), h2_dim(&g));
        }
    }
}

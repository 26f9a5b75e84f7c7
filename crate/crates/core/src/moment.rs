//! Momentum maps on `T*G` in the body chart `(a, mu)`.
//!
//! The chart identifies a covector at `a` with `mu = T_e L_a^* alpha_a`. In
//! it the left and right actions read
//!
//! ```text
//! lambda_b(a, mu) = (b a, mu)        J^l(a, mu) = coAd(a, mu)
//! rho_b(a, mu)    = (a b^-1, coAd(b, mu))   J^r(a, mu) = -mu
//! ```
//!
//! and the Poisson bracket is
//!
//! ```text
//! {F, G} = <D_a F, dG/dmu> - <D_a G, dF/dmu> - <mu, [dF/dmu, dG/dmu]>
//! ```
//!
//! with `<D_a F, zeta> = d/ds F(a exp(s zeta), mu)`.

use alloc::boxed::Box;
use alloc::vec::Vec;
use nalgebra::{DMatrix, DVector};

use crate::algebra::{AlgebraElement, CoElement, GroupElement, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{self, RANK_RTOL};
use crate::sampling::Sampler;

/// Central-difference step for chart derivatives.
pub const FD_STEP: f64 = 1e-5;

/// A point `(a, mu)` of `T*G` in the body chart.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartPoint {
    pub a: GroupElement,
    pub mu: CoElement,
}

impl ChartPoint {
    pub fn new(a: GroupElement, mu: CoElement) -> Self {
        Self { a, mu }
    }
}

pub fn moment_left(g: &LieAlgebra, p: &ChartPoint) -> Result<CoElement> {
    g.check_membership(&p.a)?;
    g.coadjoint(&p.a, &p.mu)
}

pub fn moment_right(g: &LieAlgebra, p: &ChartPoint) -> Result<CoElement> {
    g.check_membership(&p.a)?;
    if p.mu.dim() != g.dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), found: p.mu.dim() });
    }
    Ok(p.mu.scale(-1.0))
}

/// `lambda_b(a, mu) = (b a, mu)`.
pub fn act_lambda(g: &LieAlgebra, b: &GroupElement, p: &ChartPoint) -> Result<ChartPoint> {
    g.check_membership(b)?;
    g.check_membership(&p.a)?;
    Ok(ChartPoint { a: b.mul(&p.a), mu: p.mu.clone() })
}

/// `rho_b(a, mu) = (a b^-1, coAd(b, mu))`.
pub fn act_rho(g: &LieAlgebra, b: &GroupElement, p: &ChartPoint) -> Result<ChartPoint> {
    g.check_membership(b)?;
    g.check_membership(&p.a)?;
    Ok(ChartPoint { a: p.a.mul(&b.inverse()?), mu: g.coadjoint(b, &p.mu)? })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChartAction {
    Lambda,
    Rho,
}

impl ChartAction {
    pub fn apply(self, g: &LieAlgebra, b: &GroupElement, p: &ChartPoint) -> Result<ChartPoint> {
        match self {
            ChartAction::Lambda => act_lambda(g, b, p),
            ChartAction::Rho => act_rho(g, b, p),
        }
    }
}

/// A momentum map on the chart.
pub trait MomentMap {
    fn eval(&self, g: &LieAlgebra, p: &ChartPoint) -> Result<CoElement>;
}

/// `J^l(a, mu) = coAd(a, mu)`.
#[derive(Debug, Clone, Copy)]
pub struct LeftMoment;

/// `J^r(a, mu) = -mu`.
#[derive(Debug, Clone, Copy)]
pub struct RightMoment;

impl MomentMap for LeftMoment {
    fn eval(&self, g: &LieAlgebra, p: &ChartPoint) -> Result<CoElement> {
        moment_left(g, p)
    }
}

impl MomentMap for RightMoment {
    fn eval(&self, g: &LieAlgebra, p: &ChartPoint) -> Result<CoElement> {
        moment_right(g, p)
    }
}

/// `J^r` on the Galilei group shifted by the primitive of the mass cocycle.
///
/// For `a = [[A, V, X], [0, 1, t], [0, 0, 1]]` and
/// `xi = (r, v, x, tau)`:
///
/// ```text
/// J'(a, mu) . xi = -<mu, xi> + m (V . A x + |V|^2 tau / 2)
/// ```
///
/// The shift is `alpha(xi^r_G)` for the 1-form
/// `alpha = m (V . dX - |V|^2 dt / 2)`, whose differential is the
/// left-invariant extension of the mass cocycle, so the infinitesimal
/// cocycle of `J'` is `m (v . x' - v' . x)`.
#[derive(Debug, Clone, Copy)]
pub struct MassShiftedGalilei {
    pub mass: f64,
}

impl MomentMap for MassShiftedGalilei {
    fn eval(&self, g: &LieAlgebra, p: &ChartPoint) -> Result<CoElement> {
        if g.name() != "galilei" {
            return Err(Error::WrongAlgebra { expected: "galilei".into(), found: g.name().into() });
        }
        let mut j = moment_right(g, p)?;
        let a = &p.a.matrix;
        let rot = a.view((0, 0), (3, 3));
        let vel = a.view((0, 3), (3, 1));
        let shift = rot.transpose() * vel;
        for i in 0..3 {
            j.coords[6 + i] += self.mass * shift[i];
        }
        j.coords[9] += self.mass * 0.5 * vel.norm_squared();
        Ok(j)
    }
}

/// How group elements are drawn by [`equivariance_residual`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleMode {
    /// `b = e` every time.
    Identity,
    /// `b = exp(xi)` for random `xi`.
    Random,
}

/// `max |J(Phi_b p) - coAd(b, J(p))|` over seeded random `(b, p)`.
pub fn equivariance_residual(
    g: &LieAlgebra,
    action: ChartAction,
    moment: &dyn MomentMap,
    samples: usize,
    seed: u64,
    mode: SampleMode,
) -> Result<f64> {
    let mut s = Sampler::new(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let b = match mode {
            SampleMode::Identity => g.identity()?,
            SampleMode::Random => s.group_element(g, 0.5)?,
        };
        let p = ChartPoint { a: s.group_element(g, 0.5)?, mu: s.co_element(g, 1.0) };
        let lhs = moment.eval(g, &action.apply(g, &b, &p)?)?;
        let rhs = g.coadjoint(&b, &moment.eval(g, &p)?)?;
        worst = worst.max((&lhs - &rhs).coords.amax());
    }
    Ok(worst)
}

fn check_step(step: f64) -> Result<()> {
    if !(step.is_finite() && step >= 1e-12) {
        return Err(Error::StepUnderflow { step });
    }
    Ok(())
}

/// Chart gradient of `f`: `(D_a f, df/dmu)` by central differences.
pub fn chart_gradient(
    g: &LieAlgebra,
    f: &dyn Fn(&ChartPoint) -> Result<f64>,
    p: &ChartPoint,
    step: f64,
) -> Result<(DVector<f64>, DVector<f64>)> {
    check_step(step)?;
    let n = g.dim();
    let mut da = DVector::zeros(n);
    let mut dmu = DVector::zeros(n);
    for i in 0..n {
        let e = AlgebraElement::basis(n, i);
        let plus = ChartPoint { a: p.a.mul(&g.group_exp(&e, step)?), mu: p.mu.clone() };
        let minus = ChartPoint { a: p.a.mul(&g.group_exp(&e, -step)?), mu: p.mu.clone() };
        da[i] = (f(&plus)? - f(&minus)?) / (2.0 * step);

        let mut mp = p.clone();
        mp.mu.coords[i] += step;
        let mut mm = p.clone();
        mm.mu.coords[i] -= step;
        dmu[i] = (f(&mp)? - f(&mm)?) / (2.0 * step);
    }
    Ok((da, dmu))
}

/// Canonical Poisson bracket on the chart, by finite differences.
pub fn poisson_bracket(
    g: &LieAlgebra,
    f: &dyn Fn(&ChartPoint) -> Result<f64>,
    h: &dyn Fn(&ChartPoint) -> Result<f64>,
    p: &ChartPoint,
    step: f64,
) -> Result<f64> {
    let (fa, fmu) = chart_gradient(g, f, p, step)?;
    let (ha, hmu) = chart_gradient(g, h, p, step)?;
    let br = g.bracket(&AlgebraElement::from(fmu.clone()), &AlgebraElement::from(hmu.clone()))?;
    Ok(fa.dot(&hmu) - ha.dot(&fmu) - p.mu.pair(&br))
}

/// `omega(xi, eta) = {J(xi), J(eta)} - J([xi, eta])` at `p`.
pub fn infinitesimal_cocycle(
    g: &LieAlgebra,
    moment: &dyn MomentMap,
    xi: &AlgebraElement,
    eta: &AlgebraElement,
    p: &ChartPoint,
    step: f64,
) -> Result<f64> {
    check_step(step)?;
    let jx = |q: &ChartPoint| -> Result<f64> { Ok(moment.eval(g, q)?.pair(xi)) };
    let je = |q: &ChartPoint| -> Result<f64> { Ok(moment.eval(g, q)?.pair(eta)) };
    let pb = poisson_bracket(g, &jx, &je, p, step)?;
    Ok(pb - moment.eval(g, p)?.pair(&g.bracket(xi, eta)?))
}

/// Rank of `dJ` at `p` (chart coordinates, central differences). `J` is
/// submersive at `p` when this equals `dim g`.
pub fn moment_differential_rank(g: &LieAlgebra, moment: &dyn MomentMap, p: &ChartPoint) -> Result<usize> {
    let n = g.dim();
    let mut cols: Vec<DVector<f64>> = Vec::with_capacity(2 * n);
    for i in 0..n {
        let e = AlgebraElement::basis(n, i);
        let plus = ChartPoint { a: p.a.mul(&g.group_exp(&e, FD_STEP)?), mu: p.mu.clone() };
        let minus = ChartPoint { a: p.a.mul(&g.group_exp(&e, -FD_STEP)?), mu: p.mu.clone() };
        cols.push((moment.eval(g, &plus)?.coords - moment.eval(g, &minus)?.coords) / (2.0 * FD_STEP));
    }
    for i in 0..n {
        let mut mp = p.clone();
        mp.mu.coords[i] += FD_STEP;
        let mut mm = p.clone();
        mm.mu.coords[i] -= FD_STEP;
        cols.push((moment.eval(g, &mp)?.coords - moment.eval(g, &mm)?.coords) / (2.0 * FD_STEP));
    }
    Ok(linalg::rank(&DMatrix::from_columns(&cols), 1e-6))
}

/// Whether `dJ` is surjective at every sampled point of `J^-1(value)`.
pub fn is_regular_value_sampled(g: &LieAlgebra, moment: &dyn MomentMap, points: &[ChartPoint]) -> Result<bool> {
    for p in points {
        if moment_differential_rank(g, moment, p)? < g.dim() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dimension of the coadjoint orbit through `f`: rank of `xi -> coad(xi, f)`.
pub fn orbit_dimension(g: &LieAlgebra, f: &CoElement) -> Result<usize> {
    Ok(linalg::rank(&g.coad_matrix_at(f)?, RANK_RTOL))
}

/// Basis (as columns) of the isotropy algebra `g_mu`, the kernel of `xi -> coad(xi, mu)`.
pub fn isotropy_basis(g: &LieAlgebra, mu: &CoElement) -> Result<DMatrix<f64>> {
    Ok(linalg::null_space(&g.coad_matrix_at(mu)?, RANK_RTOL))
}

/// `(H(p), J(p))`.
pub fn energy_moment(
    g: &LieAlgebra,
    h: &dyn Fn(&ChartPoint) -> f64,
    moment: &dyn MomentMap,
    p: &ChartPoint,
) -> Result<(f64, CoElement)> {
    Ok((h(p), moment.eval(g, p)?))
}

/// Whether `(energy, momentum)` lies on the level set `(e, mu)` to `tol`.
pub fn on_level_set(value: &(f64, CoElement), level: &(f64, CoElement), tol: f64) -> bool {
    (value.0 - level.0).abs() <= tol && (&value.1 - &level.1).coords.amax() <= tol
}

/// Phase rotation of `C^n = R^{2n}` (pairs `(re, im)`): the moment against
/// the generator `i` is `-|psi|^2 / 2`, and the reduced space at a nonzero
/// level is `CP^{n-1}` of real dimension `2n - 2`.
pub fn s1_reduction_demo(n: usize, psi: &[f64]) -> Result<(f64, usize)> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if psi.len() != 2 * n {
        return Err(Error::DimensionMismatch { expected: 2 * n, found: psi.len() });
    }
    let norm2: f64 = psi.iter().map(|x| x * x).sum();
    if norm2 == 0.0 {
        return Err(Error::ZeroState);
    }
    Ok((-norm2 / 2.0, 2 * n - 2))
}

/// The representation `tau: H -> GL(V)`.
pub type TauFn = Box<dyn Fn(&GroupElement) -> DMatrix<f64> + Send + Sync>;

/// A semidirect product `H x V` from a representation `tau` of `H` on `V`.
///
/// `V` and `V*` are used in coordinates: `v = sum v_i s_i` for a basis
/// `s_i` of `V`, and `K_i = <K, s_i>`.
pub struct SemidirectData {
    pub h: LieAlgebra,
    pub v_dim: usize,
    tau: TauFn,
    /// `d tau(e_i)`, so that `xi_V(v) = sum_i xi_i generators[i] v`.
    generators: Vec<DMatrix<f64>>,
}

impl core::fmt::Debug for SemidirectData {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("SemidirectData").field("h", &self.h.name()).field("v_dim", &self.v_dim).finish()
    }
}

/// An element `(h, v)` of `H x V`.
#[derive(Debug, Clone, PartialEq)]
pub struct SemidirectElement {
    pub h: GroupElement,
    pub v: DVector<f64>,
}

impl SemidirectData {
    /// Generators of `tau` are obtained by central differences along
    /// `exp(s e_i)`.
    pub fn new(h: LieAlgebra, v_dim: usize, tau: TauFn) -> Result<Self> {
        let n = h.dim();
        let mut generators = Vec::with_capacity(n);
        for i in 0..n {
            let e = AlgebraElement::basis(n, i);
            let plus = tau(&h.group_exp(&e, FD_STEP)?);
            let minus = tau(&h.group_exp(&e, -FD_STEP)?);
            if plus.nrows() != v_dim || plus.ncols() != v_dim {
                return Err(Error::DimensionMismatch { expected: v_dim, found: plus.nrows() });
            }
            generators.push((plus - minus) / (2.0 * FD_STEP));
        }
        Ok(Self { h, v_dim, tau, generators })
    }

    /// Replace the finite-difference generators by exact ones.
    pub fn with_generators(mut self, generators: Vec<DMatrix<f64>>) -> Result<Self> {
        if generators.len() != self.h.dim() {
            return Err(Error::DimensionMismatch { expected: self.h.dim(), found: generators.len() });
        }
        self.generators = generators;
        Ok(self)
    }

    pub fn generators(&self) -> &[DMatrix<f64>] {
        &self.generators
    }

    pub fn tau(&self, h: &GroupElement) -> DMatrix<f64> {
        (self.tau)(h)
    }

    /// `(K . v)(xi) = <K, xi_V(v)>`, as an element of `h*`.
    pub fn odot(&self, k: &DVector<f64>, v: &DVector<f64>) -> CoElement {
        CoElement::new(self.generators.iter().map(|t| k.dot(&(t * v))).collect())
    }

    /// `Ad*_{(h,v)^-1}(mu, K) = (coAd(h, mu) + (tau*_{h^-1} K) . v, tau*_{h^-1} K)`.
    pub fn coadjoint(
        &self,
        elem: &SemidirectElement,
        mu: &CoElement,
        k: &DVector<f64>,
    ) -> Result<(CoElement, DVector<f64>)> {
        if mu.dim() != self.h.dim() {
            return Err(Error::DimensionMismatch { expected: self.h.dim(), found: mu.dim() });
        }
        if k.len() != self.v_dim || elem.v.len() != self.v_dim {
            return Err(Error::DimensionMismatch { expected: self.v_dim, found: k.len().max(elem.v.len()) });
        }
        let k_new = self.tau(&elem.h.inverse()?).transpose() * k;
        let mu_new = &self.h.coadjoint(&elem.h, mu)? + &self.odot(&k_new, &elem.v);
        Ok((mu_new, k_new))
    }

    /// `SO(3) x R^3` with the rotation action.
    pub fn euclidean3() -> Self {
        let h = crate::algebra::so3();
        let gens = (0..3).map(crate::algebra::hat_basis).collect();
        Self::new(h, 3, Box::new(|r: &GroupElement| r.matrix.clone()))
            .and_then(|d| d.with_generators(gens))
            .expect("so3 data")
    }

    /// `SL(3) x Sym(3)` as embedded in `CM(3)`: the matrix group acts on
    /// `w` by `w -> h^-T w h^-1`. Coordinates on `Sym(3)` use
    /// [`crate::algebra::sym3_basis`]; the pairing is `<nu, w> = tr(nu w) / 2`.
    pub fn cm3() -> Self {
        let h = crate::algebra::sl(3).expect("sl3");
        let basis = crate::algebra::sym3_basis();
        let tau = {
            let basis = basis.clone();
            move |g: &GroupElement| {
                let inv = g.matrix.clone().try_inverse().expect("invertible");
                let cols: Vec<DVector<f64>> =
                    basis.iter().map(|s| sym3_coords(&(inv.transpose() * s * &inv))).collect();
                DMatrix::from_columns(&cols)
            }
        };
        let gens: Vec<DMatrix<f64>> = h
            .representation()
            .expect("rep")
            .iter()
            .map(|xi| {
                let cols: Vec<DVector<f64>> =
                    basis.iter().map(|s| sym3_coords(&(-(xi.transpose() * s) - s * xi))).collect();
                DMatrix::from_columns(&cols)
            })
            .collect();
        Self::new(h, 6, Box::new(tau)).and_then(|d| d.with_generators(gens)).expect("cm3 data")
    }
}

/// Coordinates of a symmetric 3x3 matrix in [`crate::algebra::sym3_basis`].
pub fn sym3_coords(w: &DMatrix<f64>) -> DVector<f64> {
    DVector::from_vec(alloc::vec![w[(0, 0)], w[(1, 1)], w[(2, 2)], w[(0, 1)], w[(0, 2)], w[(1, 2)]])
}

/// `cm(3)*` coordinates of `(mu, nu)^flat` under the pairing
/// `<(mu, nu), (xi, eta)> = [tr(mu^T xi) + tr(nu eta)] / 2`.
pub fn cm3_coordinates(g: &LieAlgebra, mu: &DMatrix<f64>, nu: &DMatrix<f64>) -> Result<CoElement> {
    if g.name() != "cm3" {
        return Err(Error::WrongAlgebra { expected: "cm3".into(), found: g.name().into() });
    }
    let rep = g.representation().expect("cm3 has a representation");
    Ok(CoElement::new(
        rep.iter()
            .map(|m| {
                let xi = m.view((0, 0), (3, 3));
                let eta = m.view((3, 0), (3, 3));
                0.5 * ((mu.transpose() * xi).trace() + (nu * eta).trace())
            })
            .collect(),
    ))
}

/// The `cm(3)*` point `(alpha L_3, beta I)^flat`, `L_3 = e12 - e21`.
pub fn cm3_point(g: &LieAlgebra, alpha: f64, beta: f64) -> Result<CoElement> {
    let mut l3 = DMatrix::zeros(3, 3);
    l3[(0, 1)] = 1.0;
    l3[(1, 0)] = -1.0;
    cm3_coordinates(g, &(l3 * alpha), &(DMatrix::identity(3, 3) * beta))
}

/// The Poincare dual point `f0 = (m0 c, 0, 0, s0)`: `m0 c` on `X0*` and the
/// spin vector on `J*`.
pub fn poincare_point(g: &LieAlgebra, m0c: f64, spin: [f64; 3]) -> Result<CoElement> {
    if g.name() != "poincare" {
        return Err(Error::WrongAlgebra { expected: "poincare".into(), found: g.name().into() });
    }
    let mut f = CoElement::zeros(10);
    f.coords[6] = m0c;
    for i in 0..3 {
        f.coords[i] = spin[i];
    }
    Ok(f)
}

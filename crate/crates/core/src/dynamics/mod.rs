//! Lie-Poisson dynamics on `g*`.
//!
//! The equation of motion for a collective Hamiltonian `h` is
//! `mu' = LIE_POISSON_SIGN * coad(L_h(mu), mu)`, which on `so(3)` is
//! `mu' = mu x Omega` with `Omega = grad h`.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use nalgebra::DVector;

use crate::algebra::{AlgebraElement, CoElement, LieAlgebra};
use crate::error::{Error, Result};

mod integrate;
mod rigid;

pub use integrate::{integrate, integrate_from, FnSystem, IntegratorConfig, Method, OdeSystem, Trajectory};
pub use rigid::{
    bifurcation_values, classify_equilibrium, critical_points_rigid_body, level_topology, LevelTopology, Stability,
};

/// Sign in `mu' = LIE_POISSON_SIGN * coad(L_h(mu), mu)`. With
/// `coad(xi, mu) = -(ad xi)^T mu` this is the "minus" Lie-Poisson
/// bracket, `{mu_i, mu_j} = -eps_ijk mu_k` on `so(3)`.
pub const LIE_POISSON_SIGN: f64 = -1.0;

type ValueFn = Box<dyn Fn(&CoElement) -> f64 + Send + Sync>;
type GradientFn = Box<dyn Fn(&CoElement) -> AlgebraElement + Send + Sync>;

/// A function on `g*` together with its differential `L_h : g* -> g`.
pub struct CollectiveHamiltonian {
    value: ValueFn,
    gradient: Option<GradientFn>,
}

impl core::fmt::Debug for CollectiveHamiltonian {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("CollectiveHamiltonian").field("analytic_gradient", &self.analytic_gradient()).finish()
    }
}

impl CollectiveHamiltonian {
    /// Gradient by central differences, step `1e-6 (1 + |mu|)`.
    pub fn new(value: impl Fn(&CoElement) -> f64 + Send + Sync + 'static) -> Self {
        Self { value: Box::new(value), gradient: None }
    }

    pub fn with_gradient(
        value: impl Fn(&CoElement) -> f64 + Send + Sync + 'static,
        gradient: impl Fn(&CoElement) -> AlgebraElement + Send + Sync + 'static,
    ) -> Self {
        Self { value: Box::new(value), gradient: Some(Box::new(gradient)) }
    }

    pub fn analytic_gradient(&self) -> bool {
        self.gradient.is_some()
    }

    pub fn value(&self, mu: &CoElement) -> f64 {
        (self.value)(mu)
    }

    pub fn gradient(&self, mu: &CoElement) -> AlgebraElement {
        match &self.gradient {
            Some(g) => g(mu),
            None => self.fd_gradient(mu),
        }
    }

    pub fn fd_gradient(&self, mu: &CoElement) -> AlgebraElement {
        let h = 1e-6 * (1.0 + mu.norm());
        let mut out = AlgebraElement::zeros(mu.dim());
        for i in 0..mu.dim() {
            let mut p = mu.clone();
            p.coords[i] += h;
            let mut m = mu.clone();
            m.coords[i] -= h;
            out.coords[i] = (self.value(&p) - self.value(&m)) / (2.0 * h);
        }
        out
    }

    /// `h(mu) = sum mu_i^2 / (2 I_i)` on `so(3)*`.
    pub fn rigid_body(params: RigidBodyParams) -> Self {
        Self::with_gradient(
            move |mu| params.energy(mu.as_slice()),
            move |mu| AlgebraElement::new(params.omega(mu.as_slice()).to_vec()),
        )
    }

    /// `h(mu, Gamma) = sum mu_i^2 / (2 I_i) + <chi, Gamma>` on `se(3)*`.
    pub fn heavy_top(params: HeavyTopParams) -> Self {
        Self::with_gradient(
            move |m| params.energy(m.as_slice()),
            move |m| {
                let w = params.inertia.omega(&m.as_slice()[..3]);
                AlgebraElement::new(vec![w[0], w[1], w[2], params.chi[0], params.chi[1], params.chi[2]])
            },
        )
    }
}

/// Principal moments of inertia.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RigidBodyParams {
    pub i1: f64,
    pub i2: f64,
    pub i3: f64,
}

impl RigidBodyParams {
    pub fn new(i1: f64, i2: f64, i3: f64) -> Result<Self> {
        for v in [i1, i2, i3] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParameter("moments of inertia must be positive".into()));
            }
        }
        Ok(Self { i1, i2, i3 })
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.i1, self.i2, self.i3]
    }

    pub fn is_degenerate(&self) -> bool {
        self.i1 == self.i2 || self.i2 == self.i3 || self.i1 == self.i3
    }

    pub fn omega(&self, mu: &[f64]) -> [f64; 3] {
        [mu[0] / self.i1, mu[1] / self.i2, mu[2] / self.i3]
    }

    pub fn energy(&self, mu: &[f64]) -> f64 {
        0.5 * (mu[0] * mu[0] / self.i1 + mu[1] * mu[1] / self.i2 + mu[2] * mu[2] / self.i3)
    }
}

/// Heavy top: inertia plus the gravity vector `chi = dh/dGamma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeavyTopParams {
    pub inertia: RigidBodyParams,
    pub chi: [f64; 3],
}

impl HeavyTopParams {
    pub fn energy(&self, x: &[f64]) -> f64 {
        self.inertia.energy(&x[..3]) + self.chi[0] * x[3] + self.chi[1] * x[4] + self.chi[2] * x[5]
    }
}

fn cross(a: &[f64], b: &[f64]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

pub fn lie_poisson_rhs(g: &LieAlgebra, h: &CollectiveHamiltonian, mu: &CoElement) -> Result<CoElement> {
    if mu.dim() != g.dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), found: mu.dim() });
    }
    let grad = h.gradient(mu);
    if grad.dim() != g.dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), found: grad.dim() });
    }
    Ok(g.coad(&grad, mu)?.scale(LIE_POISSON_SIGN))
}

/// ```text
/// mu1' = mu2 mu3 (1/I3 - 1/I2)
/// mu2' = mu3 mu1 (1/I1 - 1/I3)
/// mu3' = mu1 mu2 (1/I2 - 1/I1)
/// ```
pub fn euler_rhs(p: &RigidBodyParams, mu: &[f64; 3]) -> [f64; 3] {
    [
        mu[1] * mu[2] * (1.0 / p.i3 - 1.0 / p.i2),
        mu[2] * mu[0] * (1.0 / p.i1 - 1.0 / p.i3),
        mu[0] * mu[1] * (1.0 / p.i2 - 1.0 / p.i1),
    ]
}

/// Euler equations in angular velocity: `I1 w1' = w2 w3 (I2 - I3)` and cyclic.
pub fn euler_omega_rhs(p: &RigidBodyParams, w: &[f64; 3]) -> [f64; 3] {
    [w[1] * w[2] * (p.i2 - p.i3) / p.i1, w[2] * w[0] * (p.i3 - p.i1) / p.i2, w[0] * w[1] * (p.i1 - p.i2) / p.i3]
}

/// `(mu x Omega + Gamma x chi, Gamma x Omega)`.
pub fn heavy_top_rhs(p: &HeavyTopParams, x: &[f64; 6]) -> [f64; 6] {
    let w = p.inertia.omega(&x[..3]);
    let a = cross(&x[..3], &w);
    let b = cross(&x[3..], &p.chi);
    let c = cross(&x[3..], &w);
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], c[0], c[1], c[2]]
}

/// `|mu|^2` on `so(3)*`; `(|Gamma|^2, mu . Gamma)` on the heavy-top algebra.
pub fn casimir(g: &LieAlgebra, mu: &CoElement) -> Result<Vec<f64>> {
    if mu.dim() != g.dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), found: mu.dim() });
    }
    let m = mu.as_slice();
    match g.name() {
        "so3" => Ok(vec![m.iter().map(|x| x * x).sum()]),
        "heavy_top3" => Ok(vec![m[3] * m[3] + m[4] * m[4] + m[5] * m[5], m[0] * m[3] + m[1] * m[4] + m[2] * m[5]]),
        other => Err(Error::Unsupported(alloc::format!("no Casimir for {other}; supported: so3, heavy_top3"))),
    }
}

/// Gradients of the Casimirs returned by [`casimir`].
pub fn casimir_gradients(g: &LieAlgebra, mu: &CoElement) -> Result<Vec<DVector<f64>>> {
    casimir(g, mu)?;
    let m = mu.as_slice();
    Ok(match g.name() {
        "so3" => vec![DVector::from_iterator(3, m.iter().map(|x| 2.0 * x))],
        _ => vec![
            DVector::from_vec(vec![0.0, 0.0, 0.0, 2.0 * m[3], 2.0 * m[4], 2.0 * m[5]]),
            DVector::from_vec(vec![m[3], m[4], m[5], m[0], m[1], m[2]]),
        ],
    })
}

/// Lie-Poisson flow of `h` on `g*` as an [`OdeSystem`].
pub struct LiePoissonSystem<'a> {
    pub g: &'a LieAlgebra,
    pub h: &'a CollectiveHamiltonian,
}

impl OdeSystem for LiePoissonSystem<'_> {
    fn dim(&self) -> usize {
        self.g.dim()
    }

    fn rhs(&self, _t: f64, x: &DVector<f64>) -> Result<DVector<f64>> {
        Ok(lie_poisson_rhs(self.g, self.h, &CoElement::from(x.clone()))?.coords)
    }

    fn energy(&self, x: &DVector<f64>) -> f64 {
        self.h.value(&CoElement::from(x.clone()))
    }

    fn casimirs(&self, x: &DVector<f64>) -> Vec<f64> {
        casimir(self.g, &CoElement::from(x.clone())).unwrap_or_default()
    }
}

/// The free rigid body through [`euler_rhs`].
#[derive(Debug, Clone, Copy)]
pub struct EulerSystem(pub RigidBodyParams);

impl OdeSystem for EulerSystem {
    fn dim(&self) -> usize {
        3
    }

    fn rhs(&self, _t: f64, x: &DVector<f64>) -> Result<DVector<f64>> {
        Ok(DVector::from_row_slice(&euler_rhs(&self.0, &[x[0], x[1], x[2]])))
    }

    fn energy(&self, x: &DVector<f64>) -> f64 {
        self.0.energy(x.as_slice())
    }

    fn casimirs(&self, x: &DVector<f64>) -> Vec<f64> {
        vec![x.norm_squared()]
    }
}

/// The heavy top through [`heavy_top_rhs`].
#[derive(Debug, Clone, Copy)]
pub struct HeavyTopSystem(pub HeavyTopParams);

impl OdeSystem for HeavyTopSystem {
    fn dim(&self) -> usize {
        6
    }

    fn rhs(&self, _t: f64, x: &DVector<f64>) -> Result<DVector<f64>> {
        let s: [f64; 6] = core::array::from_fn(|i| x[i]);
        Ok(DVector::from_row_slice(&heavy_top_rhs(&self.0, &s)))
    }

    fn energy(&self, x: &DVector<f64>) -> f64 {
        self.0.energy(x.as_slice())
    }

    fn casimirs(&self, x: &DVector<f64>) -> Vec<f64> {
        let m = x.as_slice();
        vec![m[3] * m[3] + m[4] * m[4] + m[5] * m[5], m[0] * m[3] + m[1] * m[4] + m[2] * m[5]]
    }
}

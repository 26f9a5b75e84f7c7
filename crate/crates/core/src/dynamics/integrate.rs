use alloc::boxed::Box;
use alloc::vec::Vec;
use nalgebra::{DMatrix, DVector};
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

/// A first-order system `x' = f(t, x)` with conservation diagnostics.
pub trait OdeSystem {
    fn dim(&self) -> usize;
    fn rhs(&self, t: f64, x: &DVector<f64>) -> Result<DVector<f64>>;

    fn energy(&self, _x: &DVector<f64>) -> f64 {
        0.0
    }

    fn casimirs(&self, _x: &DVector<f64>) -> Vec<f64> {
        Vec::new()
    }
}

type RhsFn<'a> = Box<dyn Fn(f64, &DVector<f64>) -> Result<DVector<f64>> + 'a>;

/// An [`OdeSystem`] from a closure, with no diagnostics.
pub struct FnSystem<'a> {
    dim: usize,
    f: RhsFn<'a>,
}

impl<'a> FnSystem<'a> {
    pub fn new(dim: usize, f: impl Fn(f64, &DVector<f64>) -> Result<DVector<f64>> + 'a) -> Self {
        Self { dim, f: Box::new(f) }
    }
}

impl OdeSystem for FnSystem<'_> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn rhs(&self, t: f64, x: &DVector<f64>) -> Result<DVector<f64>> {
        (self.f)(t, x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Rk4,
    ImplicitMidpoint,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorConfig {
    pub method: Method,
    pub dt: f64,
    pub newton_tol: f64,
    pub newton_max_iter: usize,
}

impl IntegratorConfig {
    pub fn new(method: Method, dt: f64) -> Result<Self> {
        if !(dt.is_finite() && dt > 0.0) {
            return Err(Error::InvalidParameter("dt must be positive".into()));
        }
        Ok(Self { method, dt, newton_tol: 1e-12, newton_max_iter: 50 })
    }

    pub fn rk4(dt: f64) -> Result<Self> {
        Self::new(Method::Rk4, dt)
    }

    pub fn midpoint(dt: f64) -> Result<Self> {
        Self::new(Method::ImplicitMidpoint, dt)
    }
}

/// Uniformly sampled solution: `states.len() == steps + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub t0: f64,
    pub dt: f64,
    pub steps: usize,
    pub states: Vec<DVector<f64>>,
    pub energy: Vec<f64>,
    pub casimirs: Vec<Vec<f64>>,
    pub momentum_residual: Option<Vec<f64>>,
}

impl Trajectory {
    pub fn time(&self, k: usize) -> f64 {
        self.t0 + k as f64 * self.dt
    }

    pub fn last(&self) -> &DVector<f64> {
        self.states.last().expect("trajectory has at least one sample")
    }

    /// `max_k |q_k - q_0| / max(|q_0|, tiny)` for a per-sample diagnostic.
    pub fn relative_drift(values: &[f64]) -> f64 {
        let Some(&v0) = values.first() else { return 0.0 };
        let scale = v0.abs().max(f64::MIN_POSITIVE);
        values.iter().fold(0.0f64, |m, v| m.max((v - v0).abs() / scale))
    }
}

fn rk4_step(sys: &dyn OdeSystem, t: f64, x: &DVector<f64>, dt: f64) -> Result<DVector<f64>> {
    let k1 = sys.rhs(t, x)?;
    let k2 = sys.rhs(t + dt / 2.0, &(x + &k1 * (dt / 2.0)))?;
    let k3 = sys.rhs(t + dt / 2.0, &(x + &k2 * (dt / 2.0)))?;
    let k4 = sys.rhs(t + dt, &(x + &k3 * dt))?;
    Ok(x + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0))
}

fn jacobian(sys: &dyn OdeSystem, t: f64, x: &DVector<f64>) -> Result<DMatrix<f64>> {
    let n = x.len();
    let h = 1e-7 * (1.0 + x.amax());
    let mut j = DMatrix::zeros(n, n);
    for i in 0..n {
        let mut p = x.clone();
        p[i] += h;
        let mut m = x.clone();
        m[i] -= h;
        j.set_column(i, &((sys.rhs(t, &p)? - sys.rhs(t, &m)?) / (2.0 * h)));
    }
    Ok(j)
}

/// `x1 = x0 + dt f(t + dt/2, (x0 + x1)/2)` by Newton's method.
fn midpoint_step(
    sys: &dyn OdeSystem,
    t: f64,
    x: &DVector<f64>,
    cfg: &IntegratorConfig,
    step: usize,
) -> Result<DVector<f64>> {
    let dt = cfg.dt;
    let tm = t + dt / 2.0;
    let n = x.len();
    let mut y = x + sys.rhs(t, x)? * dt;
    let mut jac: Option<DMatrix<f64>> = None;
    for iter in 0..cfg.newton_max_iter {
        let mid = (x + &y) * 0.5;
        let resid = &y - x - sys.rhs(tm, &mid)? * dt;
        if iter % 4 == 0 || jac.is_none() {
            jac = Some(DMatrix::identity(n, n) - jacobian(sys, tm, &mid)? * (dt / 2.0));
        }
        let lu = jac.clone().expect("set above").lu();
        let delta = lu.solve(&resid).ok_or(Error::NewtonDivergence { step })?;
        y -= &delta;
        if !y.iter().all(|v| v.is_finite()) {
            return Err(Error::NewtonDivergence { step });
        }
        if delta.amax() <= cfg.newton_tol * (1.0 + y.amax()) {
            return Ok(y);
        }
    }
    Err(Error::NewtonDivergence { step })
}

/// Fixed-step integration over `[0, t_final]` with `round(t_final / dt)` steps.
pub fn integrate(sys: &dyn OdeSystem, x0: &DVector<f64>, t_final: f64, cfg: &IntegratorConfig) -> Result<Trajectory> {
    integrate_from(sys, 0.0, x0, t_final, cfg)
}

pub fn integrate_from(
    sys: &dyn OdeSystem,
    t0: f64,
    x0: &DVector<f64>,
    duration: f64,
    cfg: &IntegratorConfig,
) -> Result<Trajectory> {
    if x0.len() != sys.dim() {
        return Err(Error::DimensionMismatch { expected: sys.dim(), found: x0.len() });
    }
    if !(duration.is_finite() && duration > 0.0) {
        return Err(Error::InvalidParameter("integration time must be positive".into()));
    }
    if !(cfg.dt.is_finite() && cfg.dt > 0.0) {
        return Err(Error::InvalidParameter("dt must be positive".into()));
    }
    let steps = (duration / cfg.dt).round() as usize;
    if steps == 0 {
        return Err(Error::InvalidParameter("integration time shorter than dt".into()));
    }
    let mut states = Vec::with_capacity(steps + 1);
    let mut energy = Vec::with_capacity(steps + 1);
    let mut casimirs = Vec::with_capacity(steps + 1);
    let mut x = x0.clone();
    for k in 0..=steps {
        if !x.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFinite { step: k });
        }
        energy.push(sys.energy(&x));
        casimirs.push(sys.casimirs(&x));
        states.push(x.clone());
        if k == steps {
            break;
        }
        let t = t0 + k as f64 * cfg.dt;
        x = match cfg.method {
            Method::Rk4 => rk4_step(sys, t, &x, cfg.dt)?,
            Method::ImplicitMidpoint => midpoint_step(sys, t, &x, cfg, k)?,
        };
    }
    Ok(Trajectory { t0, dt: cfg.dt, steps, states, energy, casimirs, momentum_residual: None })
}

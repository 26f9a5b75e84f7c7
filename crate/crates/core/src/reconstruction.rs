//! Rebuilding motion on `T*G` from motion on `g*`.
//!
//! Everything here is driven by the group ODE `a' = a xi(t)`, solved with
//! the exponential midpoint rule
//! `a_{k+1} = a_k exp(dt xi(t_k + dt/2))`, which stays on the group.

use alloc::vec::Vec;
use nalgebra::DVector;
#[allow(unused_imports)]
use num_traits::Float;

use crate::algebra::{AlgebraElement, CoElement, GroupElement, LieAlgebra};
use crate::dynamics::{self, CollectiveHamiltonian, IntegratorConfig, LiePoissonSystem, Trajectory};
use crate::error::{Error, Result};
use crate::linalg;
use crate::moment::{self, ChartPoint};

/// Tolerance on `|J(d_t) - mu|` along a companion curve.
pub const LEVEL_SET_TOL: f64 = 1e-8;
/// Tolerance on the residual of the linear solve for `xi(t)`.
pub const LIFT_RESIDUAL_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct GroupCurve {
    pub t0: f64,
    pub dt: f64,
    pub samples: Vec<GroupElement>,
}

impl GroupCurve {
    /// Largest membership defect (`|a^T G a - G|` or orthogonality) over
    /// the samples.
    pub fn max_membership_defect(&self, g: &LieAlgebra) -> f64 {
        let form = g.invariant_form();
        self.samples
            .iter()
            .map(|a| match form {
                Some(f) => linalg::max_abs(&(a.matrix.transpose() * f * &a.matrix - f)),
                None => a.orthogonality_defect(),
            })
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraCurve {
    pub t0: f64,
    pub dt: f64,
    pub samples: Vec<AlgebraElement>,
}

impl AlgebraCurve {
    /// Linear interpolation, clamped to the sampled interval.
    pub fn at(&self, t: f64) -> AlgebraElement {
        let n = self.samples.len();
        if n == 1 {
            return self.samples[0].clone();
        }
        let s = ((t - self.t0) / self.dt).clamp(0.0, (n - 1) as f64);
        let k = (s.floor() as usize).min(n - 2);
        let w = s - k as f64;
        AlgebraElement::from(&self.samples[k].coords * (1.0 - w) + &self.samples[k + 1].coords * w)
    }
}

/// `a' = a xi(t)`, `a(t0) = a0`, for `steps` steps of size `dt`.
pub fn solve_group_ode(
    g: &LieAlgebra,
    xi: &dyn Fn(f64) -> Result<AlgebraElement>,
    a0: &GroupElement,
    t0: f64,
    dt: f64,
    steps: usize,
) -> Result<GroupCurve> {
    if g.representation().is_none() {
        return Err(Error::MissingRepresentation(g.name().into()));
    }
    if !(dt.is_finite() && dt > 0.0) {
        return Err(Error::InvalidParameter("dt must be positive".into()));
    }
    let mut samples = Vec::with_capacity(steps + 1);
    samples.push(a0.clone());
    let mut a = a0.clone();
    for k in 0..steps {
        let t = t0 + k as f64 * dt;
        a = a.mul(&g.group_exp(&xi(t + dt / 2.0)?, dt)?);
        samples.push(a.clone());
    }
    Ok(GroupCurve { t0, dt, samples })
}

/// [`solve_group_ode`] driven by a sampled curve.
pub fn solve_group_ode_sampled(g: &LieAlgebra, xi: &AlgebraCurve, a0: &GroupElement) -> Result<GroupCurve> {
    let steps = xi.samples.len().saturating_sub(1);
    solve_group_ode(g, &|t| Ok(xi.at(t)), a0, xi.t0, xi.dt, steps)
}

/// Output of [`reconstruct_collective`].
#[derive(Debug, Clone)]
pub struct Reconstruction {
    /// `gamma_t` on `g*`.
    pub reduced: Trajectory,
    /// `xi_t = L_h(gamma_t)`.
    pub xi: AlgebraCurve,
    /// `a_t`.
    pub group: GroupCurve,
    /// `m_t = rho_{b_t}(m_0)` with `b_t = a_t^-1 a_0`.
    pub chart: Vec<ChartPoint>,
    /// `|J^r(m_t) + gamma_t|` per sample.
    pub momentum_residual: Vec<f64>,
}

/// Motion of the collective Hamiltonian `H(a, mu) = h(mu)` from `m0`.
///
/// 1. `gamma_0 = -J^r(m0) = mu0` picks the orbit.
/// 2. `gamma_t` solves the Lie-Poisson equation for `h`.
/// 3. `xi_t = L_h(gamma_t)`.
/// 4. `a_t` solves `a' = a xi_t` from `a0`.
///
/// The chart point is `m_t = rho_{b_t}(m0) = (a_t, coAd(b_t, mu0))` with
/// `b_t = a_t^-1 a0`; its momentum slot is computed from the group curve
/// alone and compared with `gamma_t`.
pub fn reconstruct_collective(
    g: &LieAlgebra,
    h: &CollectiveHamiltonian,
    m0: &ChartPoint,
    t_final: f64,
    cfg: &IntegratorConfig,
) -> Result<Reconstruction> {
    reconstruct_collective_from(g, h, m0, 0.0, t_final, cfg)
}

pub fn reconstruct_collective_from(
    g: &LieAlgebra,
    h: &CollectiveHamiltonian,
    m0: &ChartPoint,
    t0: f64,
    duration: f64,
    cfg: &IntegratorConfig,
) -> Result<Reconstruction> {
    let gamma0 = moment::moment_right(g, m0)?.scale(-1.0);
    let sys = LiePoissonSystem { g, h };
    let mut reduced = dynamics::integrate_from(&sys, t0, &gamma0.coords, duration, cfg)?;

    let xi = AlgebraCurve {
        t0,
        dt: cfg.dt,
        samples: reduced.states.iter().map(|s| h.gradient(&CoElement::from(s.clone()))).collect(),
    };
    // Midpoint values of xi from the midpoint of gamma, which is exact for
    // quadratic h and second-order otherwise.
    let states = &reduced.states;
    let xi_mid = |t: f64| -> Result<AlgebraElement> {
        let k = (((t - t0) / cfg.dt).floor() as usize).min(states.len() - 2);
        Ok(h.gradient(&CoElement::from((&states[k] + &states[k + 1]) * 0.5)))
    };
    let group = solve_group_ode(g, &xi_mid, &m0.a, t0, cfg.dt, reduced.steps)?;

    let mut chart = Vec::with_capacity(group.samples.len());
    let mut residual = Vec::with_capacity(group.samples.len());
    for (a, gamma) in group.samples.iter().zip(&reduced.states) {
        let b = a.inverse()?.mul(&m0.a);
        let m = moment::act_rho(g, &b, m0)?;
        let jr = moment::moment_right(g, &m)?;
        residual.push((jr.coords + gamma).amax());
        chart.push(m);
    }
    reduced.momentum_residual = Some(residual.clone());
    Ok(Reconstruction { reduced, xi, group, chart, momentum_residual: residual })
}

/// A chart curve sampled on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartCurve {
    pub t0: f64,
    pub dt: f64,
    pub samples: Vec<ChartPoint>,
}

/// A chart tangent vector, left-trivialised: `a' = a zeta`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartTangent {
    pub zeta: AlgebraElement,
    pub mu_dot: CoElement,
}

/// The Hamiltonian vector field of `H(a, mu) = h(mu)`:
/// `a' = a L_h(mu)`, `mu' = LIE_POISSON_SIGN coad(L_h(mu), mu)`.
pub fn collective_vector_field(g: &LieAlgebra, h: &CollectiveHamiltonian, p: &ChartPoint) -> Result<ChartTangent> {
    Ok(ChartTangent { zeta: h.gradient(&p.mu), mu_dot: dynamics::lie_poisson_rhs(g, h, &p.mu)? })
}

/// Fourth-order finite-difference weights for sample `k` of `n >= 5`.
fn fd4_stencil(k: usize, n: usize) -> (usize, [f64; 5]) {
    const C: [f64; 5] = [1.0 / 12.0, -8.0 / 12.0, 0.0, 8.0 / 12.0, -1.0 / 12.0];
    const F0: [f64; 5] = [-25.0 / 12.0, 4.0, -3.0, 4.0 / 3.0, -1.0 / 4.0];
    const F1: [f64; 5] = [-1.0 / 4.0, -5.0 / 6.0, 3.0 / 2.0, -1.0 / 2.0, 1.0 / 12.0];
    if k >= 2 && k + 2 < n {
        (k - 2, C)
    } else if k == 0 {
        (0, F0)
    } else if k == 1 {
        (0, F1)
    } else if k + 2 == n {
        (n - 5, F1.map(|w| -w).into_iter().rev().collect::<Vec<_>>().try_into().expect("5"))
    } else {
        (n - 5, F0.map(|w| -w).into_iter().rev().collect::<Vec<_>>().try_into().expect("5"))
    }
}

/// Lift a companion curve `d_t` in `J^l = mu` to the true motion.
///
/// The symmetry is left multiplication `lambda` with moment `J^l`. At each
/// sample `xi in g_mu` is fitted by least squares to
/// `(Ad_{a^-1} xi, 0) = X_H(d) - d'` (the `lambda` generator in the
/// left-trivialised chart), `a_t` solves `a' = a xi(t)` from `e`, and the
/// motion is `c_t = lambda_{a_t}(d_t)`.
pub fn lift_reduced(
    g: &LieAlgebra,
    mu: &CoElement,
    d: &ChartCurve,
    x_h: &dyn Fn(&ChartPoint) -> Result<ChartTangent>,
) -> Result<(GroupCurve, Vec<ChartPoint>)> {
    let n = d.samples.len();
    if n < 5 {
        return Err(Error::InvalidParameter("companion curve needs at least 5 samples".into()));
    }
    let dim = g.dim();
    for (k, p) in d.samples.iter().enumerate() {
        let r = (moment::moment_left(g, p)?.coords - &mu.coords).amax();
        if r > LEVEL_SET_TOL {
            return Err(Error::LevelSetDrift { sample: k, residual: r });
        }
    }
    let iso = moment::isotropy_basis(g, mu)?;

    let mut xis = Vec::with_capacity(n);
    for k in 0..n {
        let p = &d.samples[k];
        let (start, w) = fd4_stencil(k, n);
        let mut a_dot = p.a.matrix.clone() * 0.0;
        let mut mu_dot = DVector::zeros(dim);
        for (j, wj) in w.iter().enumerate() {
            let q = &d.samples[start + j];
            a_dot += &q.a.matrix * (*wj / d.dt);
            mu_dot += &q.mu.coords * (*wj / d.dt);
        }
        let ainv = p.a.inverse()?;
        let zeta_d = g.project_matrix(&(&ainv.matrix * a_dot))?;
        let x = x_h(p)?;
        let mut rhs = DVector::zeros(2 * dim);
        rhs.rows_mut(0, dim).copy_from(&(x.zeta.coords - zeta_d.coords));
        rhs.rows_mut(dim, dim).copy_from(&(x.mu_dot.coords - mu_dot));

        let ad_inv = g.ad_group_matrix(&ainv)?;
        let mut lhs = nalgebra::DMatrix::zeros(2 * dim, iso.ncols());
        lhs.view_mut((0, 0), (dim, iso.ncols())).copy_from(&(ad_inv * &iso));
        let (c, residual) = linalg::lstsq(&lhs, &rhs);
        if residual > LIFT_RESIDUAL_TOL {
            return Err(Error::LiftResidual { sample: k, residual });
        }
        xis.push(AlgebraElement::from(&iso * c));
    }
    let curve = AlgebraCurve { t0: d.t0, dt: d.dt, samples: xis };
    let group = solve_group_ode_sampled(g, &curve, &g.identity()?)?;
    let lifted =
        group.samples.iter().zip(&d.samples).map(|(a, p)| moment::act_lambda(g, a, p)).collect::<Result<Vec<_>>>()?;
    Ok((group, lifted))
}

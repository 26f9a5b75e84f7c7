//! Free rigid-body motion in Euler angles.
//!
//! `R = e^{psi J3} e^{theta J1} e^{phi J3}` with `(J_i)_kl = eps_ikl`,
//! `R' = R sum_i w_i J_i = sum_i w'_i J_i R`, so `w' = R w`. The kinetic
//! energy `T = w'^T I w' / 2 = w^T g w / 2` with `g = R^T I R`.
//!
//! Two independent routes to the motion are compared:
//!
//! - the Euler form `g w' = (g w) x w`, carried along with the angles;
//! - the geodesic equation of the coordinate metric `G(q) = B^T I B`
//!   (`w' = B(q) q'`), with Christoffel symbols from central differences.

use nalgebra::{Matrix3, Vector3};
#[allow(unused_imports)]
use num_traits::Float;

use crate::dynamics::RigidBodyParams;
use crate::error::{Error, Result};

/// `|sin theta|` below this is treated as gimbal lock.
pub const GIMBAL_TOL: f64 = 1e-6;
/// Central-difference step for derivatives of the metric.
pub const CHRISTOFFEL_STEP: f64 = 1e-5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerAngles {
    pub psi: f64,
    pub theta: f64,
    pub phi: f64,
}

impl EulerAngles {
    pub fn new(psi: f64, theta: f64, phi: f64) -> Self {
        Self { psi, theta, phi }
    }

    fn from_vec(q: &Vector3<f64>) -> Self {
        Self::new(q[0], q[1], q[2])
    }

    fn to_vec(self) -> Vector3<f64> {
        Vector3::new(self.psi, self.theta, self.phi)
    }
}

/// `sum_i w_i J_i`, i.e. `-hat(w)`.
pub fn j_matrix(w: &Vector3<f64>) -> Matrix3<f64> {
    -w.cross_matrix()
}

fn exp_j(axis: usize, angle: f64) -> Matrix3<f64> {
    let (c, s) = (angle.cos(), angle.sin());
    // exp(angle J_axis) rotates by -angle about the axis
    match axis {
        0 => Matrix3::new(1.0, 0.0, 0.0, 0.0, c, s, 0.0, -s, c),
        1 => Matrix3::new(c, 0.0, -s, 0.0, 1.0, 0.0, s, 0.0, c),
        _ => Matrix3::new(c, s, 0.0, -s, c, 0.0, 0.0, 0.0, 1.0),
    }
}

pub fn rotation_from_angles(q: &EulerAngles) -> Matrix3<f64> {
    exp_j(2, q.psi) * exp_j(0, q.theta) * exp_j(2, q.phi)
}

/// Columns map `(psi', theta', phi')` to `w'`.
pub fn angular_velocity_map(q: &EulerAngles) -> Matrix3<f64> {
    let (sp, cp) = q.psi.sin_cos();
    let (st, ct) = q.theta.sin_cos();
    Matrix3::new(0.0, cp, st * sp, 0.0, -sp, st * cp, 1.0, 0.0, ct)
}

/// ```text
/// w'1 = theta' cos psi + phi' sin theta sin psi
/// w'2 = -theta' sin psi + phi' sin theta cos psi
/// w'3 = psi' + phi' cos theta
/// ```
pub fn body_angular_velocity(q: &EulerAngles, qdot: &Vector3<f64>) -> Vector3<f64> {
    angular_velocity_map(q) * qdot
}

fn inertia_matrix(p: &RigidBodyParams) -> Matrix3<f64> {
    Matrix3::from_diagonal(&Vector3::new(p.i1, p.i2, p.i3))
}

/// `g = R^T I R`, the metric on `w`.
pub fn metric(p: &RigidBodyParams, q: &EulerAngles) -> Matrix3<f64> {
    let r = rotation_from_angles(q);
    r.transpose() * inertia_matrix(p) * r
}

/// `T = w'^T I w' / 2`.
pub fn kinetic_energy(p: &RigidBodyParams, q: &EulerAngles, qdot: &Vector3<f64>) -> f64 {
    let w = body_angular_velocity(q, qdot);
    0.5 * w.dot(&(inertia_matrix(p) * w))
}

/// `T = w^T g w / 2` with `w = R^T w'`.
pub fn kinetic_energy_metric(p: &RigidBodyParams, q: &EulerAngles, qdot: &Vector3<f64>) -> f64 {
    let w = rotation_from_angles(q).transpose() * body_angular_velocity(q, qdot);
    0.5 * w.dot(&(metric(p, q) * w))
}

/// `G(q) = B^T I B` on Euler-angle velocities.
pub fn coordinate_metric(p: &RigidBodyParams, q: &Vector3<f64>) -> Matrix3<f64> {
    let b = angular_velocity_map(&EulerAngles::from_vec(q));
    b.transpose() * inertia_matrix(p) * b
}

/// `Gamma[k][(i, j)]` of `G` by central differences.
pub fn christoffel(p: &RigidBodyParams, q: &Vector3<f64>) -> Result<[Matrix3<f64>; 3]> {
    check_gimbal(q[1], 0.0)?;
    let h = CHRISTOFFEL_STEP;
    let dg: [Matrix3<f64>; 3] = core::array::from_fn(|l| {
        let mut e = Vector3::zeros();
        e[l] = h;
        (coordinate_metric(p, &(q + e)) - coordinate_metric(p, &(q - e))) / (2.0 * h)
    });
    let ginv = coordinate_metric(p, q).try_inverse().ok_or(Error::Singular)?;
    let mut out = [Matrix3::zeros(); 3];
    for (k, gk) in out.iter_mut().enumerate() {
        for i in 0..3 {
            for j in 0..3 {
                let mut s = 0.0;
                for l in 0..3 {
                    s += ginv[(k, l)] * (dg[i][(l, j)] + dg[j][(l, i)] - dg[l][(i, j)]);
                }
                gk[(i, j)] = 0.5 * s;
            }
        }
    }
    Ok(out)
}

fn check_gimbal(theta: f64, time: f64) -> Result<()> {
    if theta.sin().abs() < GIMBAL_TOL {
        return Err(Error::GimbalLock { time });
    }
    Ok(())
}

type State = (Vector3<f64>, Vector3<f64>);

fn rk4(f: &dyn Fn(&State) -> Result<State>, x: &State, dt: f64) -> Result<State> {
    let add = |a: &State, b: &State, s: f64| (a.0 + b.0 * s, a.1 + b.1 * s);
    let k1 = f(x)?;
    let k2 = f(&add(x, &k1, dt / 2.0))?;
    let k3 = f(&add(x, &k2, dt / 2.0))?;
    let k4 = f(&add(x, &k3, dt))?;
    Ok((
        x.0 + (k1.0 + k2.0 * 2.0 + k3.0 * 2.0 + k4.0) * (dt / 6.0),
        x.1 + (k1.1 + k2.1 * 2.0 + k3.1 * 2.0 + k4.1) * (dt / 6.0),
    ))
}

/// Angle rates from `w`: `q' = B^-1 R w`.
fn angle_rates(q: &Vector3<f64>, w: &Vector3<f64>) -> Result<Vector3<f64>> {
    let e = EulerAngles::from_vec(q);
    let b = angular_velocity_map(&e).try_inverse().ok_or(Error::Singular)?;
    Ok(b * rotation_from_angles(&e) * w)
}

/// Sampled `(t, q, w)` history.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleHistory {
    pub dt: f64,
    pub angles: alloc::vec::Vec<Vector3<f64>>,
    pub omega: alloc::vec::Vec<Vector3<f64>>,
}

/// Integrate `g w' = factor (g w) x w` together with `q' = B^-1 R w` by RK4.
pub fn integrate_euler_form(
    p: &RigidBodyParams,
    q0: &EulerAngles,
    w0: &Vector3<f64>,
    t_final: f64,
    dt: f64,
    factor: f64,
) -> Result<AngleHistory> {
    let f = |x: &State| -> Result<State> {
        let g = metric(p, &EulerAngles::from_vec(&x.0));
        let rhs = (g * x.1).cross(&x.1) * factor;
        let wdot = g.try_inverse().ok_or(Error::Singular)? * rhs;
        Ok((angle_rates(&x.0, &x.1)?, wdot))
    };
    run(&f, (q0.to_vec(), *w0), t_final, dt, |x| x.1)
}

/// Integrate `q'' = -Gamma(q)(q', q')` and report `w = R^T B q'`.
pub fn integrate_geodesic(
    p: &RigidBodyParams,
    q0: &EulerAngles,
    w0: &Vector3<f64>,
    t_final: f64,
    dt: f64,
) -> Result<AngleHistory> {
    let qd0 = angle_rates(&q0.to_vec(), w0)?;
    let f = |x: &State| -> Result<State> {
        let gam = christoffel(p, &x.0)?;
        let acc = Vector3::from_fn(|k, _| -x.1.dot(&(gam[k] * x.1)));
        Ok((x.1, acc))
    };
    run(&f, (q0.to_vec(), qd0), t_final, dt, |x| {
        let e = EulerAngles::from_vec(&x.0);
        rotation_from_angles(&e).transpose() * body_angular_velocity(&e, &x.1)
    })
}

fn run(
    f: &dyn Fn(&State) -> Result<State>,
    x0: State,
    t_final: f64,
    dt: f64,
    omega: impl Fn(&State) -> Vector3<f64>,
) -> Result<AngleHistory> {
    if !(dt.is_finite() && dt > 0.0 && t_final.is_finite() && t_final > 0.0) {
        return Err(Error::InvalidParameter("T and dt must be positive".into()));
    }
    let steps = (t_final / dt).round() as usize;
    let mut x = x0;
    let mut angles = alloc::vec::Vec::with_capacity(steps + 1);
    let mut omegas = alloc::vec::Vec::with_capacity(steps + 1);
    for k in 0..=steps {
        check_gimbal(x.0[1], k as f64 * dt)?;
        angles.push(x.0);
        omegas.push(omega(&x));
        if k < steps {
            x = rk4(f, &x, dt).map_err(|e| match e {
                Error::GimbalLock { .. } => Error::GimbalLock { time: (k + 1) as f64 * dt },
                other => other,
            })?;
        }
    }
    Ok(AngleHistory { dt, angles, omega: omegas })
}

/// Deviations of the Euler form and of the factor-2 form from the
/// Christoffel geodesic, as max-abs differences of the `w` histories.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeodesicReport {
    pub steps: usize,
    pub euler_vs_geodesic: f64,
    pub factor2_vs_geodesic: f64,
    /// Largest change of `L = g w` along the Euler-form motion.
    pub angular_momentum_drift: f64,
}

impl GeodesicReport {
    /// The form that tracks the geodesic more closely.
    pub fn matching_form(&self) -> &'static str {
        if self.euler_vs_geodesic <= self.factor2_vs_geodesic {
            "euler"
        } else {
            "factor2"
        }
    }
}

/// A chart point away from gimbal lock used when no angles are given.
pub const DEFAULT_ANGLES: EulerAngles = EulerAngles { psi: 0.3, theta: 1.1, phi: -0.4 };

pub fn geodesic_check(
    p: &RigidBodyParams,
    q0: &EulerAngles,
    w0: &Vector3<f64>,
    t_final: f64,
    dt: f64,
) -> Result<GeodesicReport> {
    let euler = integrate_euler_form(p, q0, w0, t_final, dt, 1.0)?;
    let twice = integrate_euler_form(p, q0, w0, t_final, dt, 2.0)?;
    let geo = integrate_geodesic(p, q0, w0, t_final, dt)?;
    let dev = |a: &AngleHistory| a.omega.iter().zip(&geo.omega).map(|(x, y)| (x - y).amax()).fold(0.0, f64::max);
    let l0 = metric(p, q0) * w0;
    let drift = euler
        .angles
        .iter()
        .zip(&euler.omega)
        .map(|(q, w)| (metric(p, &EulerAngles::from_vec(q)) * w - l0).amax())
        .fold(0.0, f64::max);
    Ok(GeodesicReport {
        steps: geo.omega.len() - 1,
        euler_vs_geodesic: dev(&euler),
        factor2_vs_geodesic: dev(&twice),
        angular_momentum_drift: drift,
    })
}

//! Equilibria of the free rigid body on the sphere `|mu| = r` and the
//! topology of the energy levels there.

use alloc::vec;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use super::{euler_rhs, RigidBodyParams};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stability {
    StableCenter,
    Saddle,
}

/// `(+-r,0,0), (0,+-r,0), (0,0,+-r)`.
pub fn critical_points_rigid_body(_p: &RigidBodyParams, r: f64) -> Vec<[f64; 3]> {
    let mut out = Vec::with_capacity(6);
    for axis in 0..3 {
        for s in [1.0, -1.0] {
            let mut x = [0.0; 3];
            x[axis] = s * r;
            out.push(x);
        }
    }
    out
}

/// Linearise the Euler equations on the tangent plane of the sphere at a
/// principal-axis point. A purely imaginary pair of eigenvalues is a
/// center, a real pair a saddle.
pub fn classify_equilibrium(p: &RigidBodyParams, point: &[f64; 3]) -> Result<Stability> {
    if p.is_degenerate() {
        return Err(Error::DegenerateInertia);
    }
    let nonzero: Vec<usize> = (0..3).filter(|&i| point[i] != 0.0).collect();
    if nonzero.is_empty() {
        return Err(Error::ZeroState);
    }
    if nonzero.len() != 1 || euler_rhs(p, point) != [0.0; 3] {
        return Err(Error::NotCritical);
    }
    let k = nonzero[0];
    let (i, j) = ((k + 1) % 3, (k + 2) % 3);
    let jac = euler_jacobian(p, point);
    // tangent plane spanned by e_i, e_j
    let (a, b, c, d) = (jac[i][i], jac[i][j], jac[j][i], jac[j][j]);
    let trace = a + d;
    let det = a * d - b * c;
    let disc = trace * trace - 4.0 * det;
    if det == 0.0 {
        return Err(Error::DegenerateInertia);
    }
    if disc < 0.0 && trace.abs() <= 1e-12 * det.abs().sqrt() {
        Ok(Stability::StableCenter)
    } else {
        Ok(Stability::Saddle)
    }
}

fn euler_jacobian(p: &RigidBodyParams, m: &[f64; 3]) -> [[f64; 3]; 3] {
    let a = 1.0 / p.i3 - 1.0 / p.i2;
    let b = 1.0 / p.i1 - 1.0 / p.i3;
    let c = 1.0 / p.i2 - 1.0 / p.i1;
    [[0.0, m[2] * a, m[1] * a], [m[2] * b, 0.0, m[0] * b], [m[1] * c, m[0] * c, 0.0]]
}

/// Critical energies `r^2 / (2 I_i)`, ascending.
pub fn bifurcation_values(p: &RigidBodyParams, r: f64) -> [f64; 3] {
    let mut v = p.as_array().map(|i| r * r / (2.0 * i));
    v.sort_by(|a, b| a.partial_cmp(b).unwrap_or(core::cmp::Ordering::Equal));
    v
}

/// Connected-component counts on a sampled sphere `|mu| = r` for the
/// energy level `E`: the sublevel set `{h < E}`, the superlevel set
/// `{h > E}` and the level curve `{h = E}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LevelTopology {
    pub below: usize,
    pub above: usize,
    pub level: usize,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Latitude/longitude grid with `n` rings and `2n` meridians, cell
/// centres only so the poles are never sampled twice.
struct SphereGrid {
    rings: usize,
    meridians: usize,
}

impl SphereGrid {
    fn len(&self) -> usize {
        self.rings * self.meridians
    }

    fn point(&self, idx: usize, r: f64) -> [f64; 3] {
        let (k, j) = (idx / self.meridians, idx % self.meridians);
        let theta = (k as f64 + 0.5) * core::f64::consts::PI / self.rings as f64;
        let phi = j as f64 * 2.0 * core::f64::consts::PI / self.meridians as f64;
        [r * theta.sin() * phi.cos(), r * theta.sin() * phi.sin(), r * theta.cos()]
    }

    /// 8-neighbourhood with longitude wrap and links across each pole.
    fn neighbours(&self, idx: usize) -> Vec<usize> {
        let (k, j) = (idx / self.meridians, idx % self.meridians);
        let m = self.meridians;
        let mut out = Vec::with_capacity(9);
        for dk in [-1i64, 0, 1] {
            let kk = k as i64 + dk;
            if kk < 0 || kk >= self.rings as i64 {
                continue;
            }
            for dj in [m - 1, 0, 1] {
                if dk == 0 && dj == 0 {
                    continue;
                }
                out.push(kk as usize * m + (j + dj) % m);
            }
        }
        if k == 0 || k == self.rings - 1 {
            out.push(k * m + (j + m / 2) % m);
        }
        out
    }
}

fn count_components(grid: &SphereGrid, mask: &[bool]) -> usize {
    let mut uf = UnionFind::new(grid.len());
    for idx in 0..grid.len() {
        if !mask[idx] {
            continue;
        }
        for nb in grid.neighbours(idx) {
            if mask[nb] {
                uf.union(idx, nb);
            }
        }
    }
    let mut roots: Vec<usize> = (0..grid.len()).filter(|&i| mask[i]).map(|i| uf.find(i)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

/// Component counts of the energy level `e` on the sphere of radius `r`,
/// sampled on a grid with `rings` latitude rings.
pub fn level_topology(p: &RigidBodyParams, r: f64, e: f64, rings: usize) -> Result<LevelTopology> {
    if rings < 4 {
        return Err(Error::InvalidParameter("grid needs at least 4 rings".into()));
    }
    if !(r > 0.0) {
        return Err(Error::InvalidParameter("radius must be positive".into()));
    }
    let grid = SphereGrid { rings, meridians: 2 * rings };
    let h: Vec<f64> = (0..grid.len()).map(|i| p.energy(&grid.point(i, r))).collect();
    let below: Vec<bool> = h.iter().map(|&v| v < e).collect();
    let above: Vec<bool> = below.iter().map(|b| !b).collect();
    let mut level = vec![false; grid.len()];
    for idx in 0..grid.len() {
        if below[idx] && grid.neighbours(idx).into_iter().any(|nb| !below[nb]) {
            level[idx] = true;
        }
    }
    Ok(LevelTopology {
        below: count_components(&grid, &below),
        above: count_components(&grid, &above),
        level: count_components(&grid, &level),
    })
}

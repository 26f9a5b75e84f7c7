use alloc::vec::Vec;
use nalgebra::DMatrix;
#[allow(unused_imports)]
use num_traits::Float;

use super::rational::{self, Q};
use crate::algebra::{AlgebraElement, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg;

/// Eigenvalue clustering tolerance for the generic combination.
const CLUSTER_TOL: f64 = 1e-6;
/// Tolerance for snapping eigenvalues to rationals.
const SNAP_TOL: f64 = 1e-8;

const PRIMES: [f64; 12] = [2.0, 3.0, 5.0, 7.0, 11.0, 13.0, 17.0, 19.0, 23.0, 29.0, 31.0, 37.0];

/// Roots read off the simultaneous eigenvalues of `ad h_i` for the basis
/// elements `h_i` listed in `cartan_indices`.
///
/// A combination with square roots of distinct primes as coefficients
/// separates distinct rational weights, so each of its eigenspaces is a
/// common eigenspace. Zero weights are dropped; the result is sorted.
pub fn roots_from_adjoint(g: &LieAlgebra, cartan_indices: &[usize]) -> Result<Vec<Vec<Q>>> {
    let n = g.dim();
    if cartan_indices.is_empty() {
        return Err(Error::InvalidParameter("empty Cartan selection".into()));
    }
    if cartan_indices.len() > PRIMES.len() {
        return Err(Error::InvalidParameter("Cartan selection too large".into()));
    }
    for &i in cartan_indices {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, len: n });
        }
    }
    let ads: Vec<DMatrix<f64>> =
        cartan_indices.iter().map(|&i| g.ad_matrix(&AlgebraElement::basis(n, i))).collect::<Result<_>>()?;
    let mut residual = 0.0f64;
    for a in &ads {
        for b in &ads {
            residual = residual.max(linalg::max_abs(&(a * b - b * a)));
        }
    }
    if residual > 1e-10 {
        return Err(Error::NonCommutingCartan { residual });
    }

    let mut generic = DMatrix::zeros(n, n);
    for (a, p) in ads.iter().zip(PRIMES) {
        generic += a * p.sqrt();
    }
    let eig = generic.clone().schur().eigenvalues().ok_or(Error::NotDiagonalizable)?;
    let mut values: Vec<f64> = eig.iter().copied().collect();
    values.sort_by(|a, b| a.partial_cmp(b).unwrap_or(core::cmp::Ordering::Equal));
    let scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));

    let mut clusters: Vec<(f64, usize)> = Vec::new();
    for v in values {
        match clusters.last_mut() {
            Some((c, k)) if (v - *c).abs() <= CLUSTER_TOL * scale => {
                *c = (*c * *k as f64 + v) / (*k as f64 + 1.0);
                *k += 1;
            }
            _ => clusters.push((v, 1)),
        }
    }

    let mut roots = Vec::new();
    for (lambda, mult) in clusters {
        let shifted = &generic - DMatrix::identity(n, n) * lambda;
        let space = linalg::null_space(&shifted, 1e-8);
        if space.ncols() != mult {
            return Err(Error::NotDiagonalizable);
        }
        let mut root = Vec::with_capacity(ads.len());
        for a in &ads {
            let r = space.transpose() * a * &space;
            let val = r.trace() / mult as f64;
            let off = &r - DMatrix::identity(mult, mult) * val;
            if linalg::max_abs(&off) > 1e-7 {
                return Err(Error::NotDiagonalizable);
            }
            root.push(rational::snap(val, SNAP_TOL, 1000).ok_or(Error::NotDiagonalizable)?);
        }
        if root.iter().all(|x| *x == Q::from_integer(0)) {
            continue;
        }
        for _ in 0..mult {
            roots.push(root.clone());
        }
    }
    roots.sort();
    Ok(roots)
}

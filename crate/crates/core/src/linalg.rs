//! Small dense linear-algebra helpers on top of `nalgebra`.
//!
//! Every rank decision in the crate goes through [`rank`] with a cutoff
//! relative to the largest singular value.

use alloc::vec::Vec;
use nalgebra::{DMatrix, DVector};
#[allow(unused_imports)]
use num_traits::Float;

/// Relative singular-value cutoff used for ranks, kernels and pseudo-inverses.
pub const RANK_RTOL: f64 = 1e-9;

/// Singular values in descending order.
pub fn singular_values(m: &DMatrix<f64>) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut s: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    s.sort_by(|a, b| b.partial_cmp(a).unwrap_or(core::cmp::Ordering::Equal));
    s
}

/// Numerical rank: number of singular values above `rtol * sigma_max`.
pub fn rank(m: &DMatrix<f64>, rtol: f64) -> usize {
    let s = singular_values(m);
    match s.first() {
        Some(&smax) if smax > 0.0 => s.iter().filter(|&&x| x > rtol * smax).count(),
        _ => 0,
    }
}

fn padded_square(m: &DMatrix<f64>) -> DMatrix<f64> {
    let (r, c) = m.shape();
    if r >= c {
        return m.clone();
    }
    let mut p = DMatrix::zeros(c, c);
    p.view_mut((0, 0), (r, c)).copy_from(m);
    p
}

/// Orthonormal basis of the kernel of `m`, one vector per column.
pub fn null_space(m: &DMatrix<f64>, rtol: f64) -> DMatrix<f64> {
    let c = m.ncols();
    if c == 0 {
        return DMatrix::zeros(0, 0);
    }
    let p = padded_square(m);
    let svd = p.svd(false, true);
    let v_t = svd.v_t.expect("v_t requested");
    let smax = svd.singular_values.iter().fold(0.0f64, |a, &b| a.max(b));
    let cols: Vec<DVector<f64>> = svd
        .singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| smax == 0.0 || s <= rtol * smax)
        .map(|(i, _)| v_t.row(i).transpose())
        .collect();
    if cols.is_empty() {
        DMatrix::zeros(c, 0)
    } else {
        DMatrix::from_columns(&cols)
    }
}

/// Orthonormal basis of the column space of `m`.
pub fn range_basis(m: &DMatrix<f64>, rtol: f64) -> DMatrix<f64> {
    let r = m.nrows();
    if m.ncols() == 0 || r == 0 {
        return DMatrix::zeros(r, 0);
    }
    let svd = m.clone().svd(true, false);
    let u = svd.u.expect("u requested");
    let smax = svd.singular_values.iter().fold(0.0f64, |a, &b| a.max(b));
    let cols: Vec<DVector<f64>> = svd
        .singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| smax > 0.0 && s > rtol * smax)
        .map(|(i, _)| u.column(i).into_owned())
        .collect();
    if cols.is_empty() {
        DMatrix::zeros(r, 0)
    } else {
        DMatrix::from_columns(&cols)
    }
}

/// Moore-Penrose pseudo-inverse with a relative singular-value cutoff.
pub fn pinv(m: &DMatrix<f64>, rtol: f64) -> DMatrix<f64> {
    let (r, c) = m.shape();
    if r == 0 || c == 0 {
        return DMatrix::zeros(c, r);
    }
    let svd = m.clone().svd(true, true);
    let smax = svd.singular_values.iter().fold(0.0f64, |a, &b| a.max(b));
    let eps = if smax > 0.0 { rtol * smax } else { 0.0 };
    svd.pseudo_inverse(eps).unwrap_or_else(|_| DMatrix::zeros(c, r))
}

/// Least-squares solution of `m x = b` and the residual norm `|m x - b|`.
pub fn lstsq(m: &DMatrix<f64>, b: &DVector<f64>) -> (DVector<f64>, f64) {
    let x = pinv(m, 1e-12) * b;
    let res = (m * &x - b).norm();
    (x, res)
}

/// Infinity norm (max absolute row sum).
pub fn norm_inf(m: &DMatrix<f64>) -> f64 {
    m.row_iter().map(|row| row.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
}

pub fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0, |a, &b| a.max(b.abs()))
}

/// Matrix exponential by scaling and squaring around a Taylor core.
///
/// The argument is halved until its infinity norm is at most 0.5, the
/// series is summed until terms drop below machine precision, and the
/// result is squared back.
pub fn expm(a: &DMatrix<f64>) -> DMatrix<f64> {
    let n = a.nrows();
    let norm = norm_inf(a);
    let mut squarings = 0u32;
    if norm > 0.5 {
        squarings = (norm / 0.5).log2().ceil() as u32;
    }
    let scaled = a * (0.5f64).powi(squarings as i32);
    let mut result = DMatrix::<f64>::identity(n, n);
    let mut term = DMatrix::<f64>::identity(n, n);
    for k in 1..=30 {
        term = &term * &scaled / k as f64;
        result += &term;
        if norm_inf(&term) <= f64::EPSILON * 1e-2 {
            break;
        }
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel_of_projector() {
        let m = DMatrix::from_row_slice(2, 3, &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
        assert_eq!(rank(&m, RANK_RTOL), 2);
        let k = null_space(&m, RANK_RTOL);
        assert_eq!(k.ncols(), 1);
        assert!((k[(2, 0)].abs() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let m = DMatrix::<f64>::zeros(3, 3);
        assert_eq!(rank(&m, RANK_RTOL), 0);
        assert_eq!(null_space(&m, RANK_RTOL).ncols(), 3);
    }

    #[test]
    fn expm_of_nilpotent_is_polynomial() {
        let a = DMatrix::from_row_slice(3, 3, &[0.0, 2.0, 0.0, 0.0, 0.0, 3.0, 0.0, 0.0, 0.0]);
        let e = expm(&a);
        let expected = DMatrix::from_row_slice(3, 3, &[1.0, 2.0, 3.0, 0.0, 1.0, 3.0, 0.0, 0.0, 1.0]);
        assert!((e - expected).abs().max() < 1e-14);
    }

    #[test]
    fn expm_of_large_rotation_generator() {
        let t = 7.5f64;
        let a = DMatrix::from_row_slice(2, 2, &[0.0, -t, t, 0.0]);
        let e = expm(&a);
        assert!((e[(0, 0)] - t.cos()).abs() < 1e-13);
        assert!((e[(1, 0)] - t.sin()).abs() < 1e-13);
    }

    #[test]
    fn lstsq_recovers_consistent_solution() {
        let m = DMatrix::from_row_slice(3, 2, &[1.0, 0.0, 0.0, 1.0, 1.0, 1.0]);
        let b = DVector::from_vec(alloc::vec![1.0, 2.0, 3.0]);
        let (x, res) = lstsq(&m, &b);
        assert!(res < 1e-13);
        assert!((x[0] - 1.0).abs() < 1e-13 && (x[1] - 2.0).abs() < 1e-13);
    }
}

//! Exact rational linear algebra for small matrices.

use alloc::vec;
use alloc::vec::Vec;
use num_rational::Ratio;
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

/// Solve `a x = b` exactly (`a` square, row-major) by Gauss-Jordan.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Result<Vec<Q>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).ok_or(Error::Singular)?;
        m.swap(col, pivot);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    Ok(m.into_iter().map(|r| r[n]).collect())
}

/// Exact inverse of a square matrix.
pub fn inverse(a: &[Vec<Q>]) -> Result<Vec<Vec<Q>>> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![Q::zero(); n];
        e[j] = Q::one();
        cols.push(solve(a, &e)?);
    }
    Ok((0..n).map(|i| (0..n).map(|j| cols[j][i]).collect()).collect())
}

/// `x^T m y`.
pub fn bilinear(m: &[Vec<Q>], x: &[Q], y: &[Q]) -> Q {
    let mut s = Q::zero();
    for (i, row) in m.iter().enumerate() {
        for (j, &mij) in row.iter().enumerate() {
            s += x[i] * mij * y[j];
        }
    }
    s
}

/// Nearest rational with denominator at most `max_den`, if within `tol`.
pub fn snap(x: f64, tol: f64, max_den: i64) -> Option<Q> {
    for den in 1..=max_den {
        let num = (x * den as f64).round();
        if (x - num / den as f64).abs() <= tol {
            return Some(Q::new(num as i64, den));
        }
    }
    None
}

pub fn to_f64(x: Q) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

pub fn is_integer(x: Q) -> bool {
    x.is_integer()
}

pub fn abs(x: Q) -> Q {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_cartan_a2() {
        let a = vec![vec![q(2), q(-1)], vec![q(-1), q(2)]];
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, vec![vec![Q::new(2, 3), Q::new(1, 3)], vec![Q::new(1, 3), Q::new(2, 3)]]);
    }

    #[test]
    fn singular_is_reported() {
        let a = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(solve(&a, &[q(1), q(1)]), Err(Error::Singular));
    }

    #[test]
    fn snapping() {
        assert_eq!(snap(0.3333333333, 1e-8, 100), Some(Q::new(1, 3)));
        assert_eq!(snap(-2.0000000001, 1e-8, 100), Some(q(-2)));
        assert_eq!(snap(core::f64::consts::PI, 1e-8, 100), None);
    }
}

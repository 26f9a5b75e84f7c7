use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// An invertible matrix in the representation of a Lie algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement {
    pub matrix: DMatrix<f64>,
}

impl GroupElement {
    pub fn new(matrix: DMatrix<f64>) -> Self {
        Self { matrix }
    }

    pub fn identity(d: usize) -> Self {
        Self { matrix: DMatrix::identity(d, d) }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn inverse(&self) -> Result<Self> {
        self.matrix.clone().try_inverse().map(Self::new).ok_or(Error::Singular)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self { matrix: &self.matrix * &other.matrix }
    }

    /// `max |A A^T - I|`.
    pub fn orthogonality_defect(&self) -> f64 {
        let d = self.dim();
        (&self.matrix * self.matrix.transpose() - DMatrix::<f64>::identity(d, d))
            .iter()
            .fold(0.0, |a, &b| a.max(b.abs()))
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (&self.matrix - &other.matrix).iter().fold(0.0, |a, &b| a.max(b.abs()))
    }
}

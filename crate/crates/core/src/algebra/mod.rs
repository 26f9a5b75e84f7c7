//! Real Lie algebras given by structure constants.
//!
//! Sign convention for the coadjoint action, used everywhere in the crate:
//!
//! ```text
//! <coad(xi, mu), eta> = -<mu, [xi, eta]>      i.e.  coad(xi, .) = -(ad_xi)^T
//! ```
//!
//! This is the infinitesimal generator of `coAd(a, mu) = (Ad_{a^-1})^T mu`.

mod builders;
mod group;

pub use builders::*;
pub use group::GroupElement;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use nalgebra::{DMatrix, DVector};
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg;

/// Tolerance for re-expressing a matrix in the basis of the representation.
pub const CLOSURE_TOL: f64 = 1e-10;

/// A vector in `g`, in basis coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement {
    pub coords: DVector<f64>,
}

/// A vector in `g*`, in dual-basis coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct CoElement {
    pub coords: DVector<f64>,
}

macro_rules! vector_type {
    ($t:ident) => {
        impl $t {
            pub fn new(coords: Vec<f64>) -> Self {
                Self { coords: DVector::from_vec(coords) }
            }

            pub fn from_slice(coords: &[f64]) -> Self {
                Self { coords: DVector::from_column_slice(coords) }
            }

            pub fn zeros(n: usize) -> Self {
                Self { coords: DVector::zeros(n) }
            }

            /// The `i`-th basis vector of an `n`-dimensional space.
            pub fn basis(n: usize, i: usize) -> Self {
                let mut coords = DVector::zeros(n);
                coords[i] = 1.0;
                Self { coords }
            }

            pub fn dim(&self) -> usize {
                self.coords.len()
            }

            pub fn as_slice(&self) -> &[f64] {
                self.coords.as_slice()
            }

            pub fn norm(&self) -> f64 {
                self.coords.norm()
            }

            pub fn scale(&self, s: f64) -> Self {
                Self { coords: &self.coords * s }
            }
        }

        impl From<DVector<f64>> for $t {
            fn from(coords: DVector<f64>) -> Self {
                Self { coords }
            }
        }

        impl core::ops::Add for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                $t { coords: &self.coords + &rhs.coords }
            }
        }

        impl core::ops::Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                $t { coords: &self.coords - &rhs.coords }
            }
        }
    };
}

vector_type!(AlgebraElement);
vector_type!(CoElement);

impl CoElement {
    /// The natural pairing `<mu, xi>`.
    pub fn pair(&self, xi: &AlgebraElement) -> f64 {
        self.coords.dot(&xi.coords)
    }
}

#[derive(Debug, Clone)]
struct Representation {
    mats: Vec<DMatrix<f64>>,
    /// Columns are the flattened basis matrices.
    flat: DMatrix<f64>,
    flat_pinv: DMatrix<f64>,
}

impl Representation {
    fn new(mats: Vec<DMatrix<f64>>) -> Self {
        let d = mats[0].nrows();
        let cols: Vec<DVector<f64>> = mats.iter().map(|m| DVector::from_column_slice(m.as_slice())).collect();
        let flat = DMatrix::from_columns(&cols);
        let flat_pinv = linalg::pinv(&flat, 1e-12);
        debug_assert_eq!(flat.nrows(), d * d);
        Self { mats, flat, flat_pinv }
    }
}

/// A finite-dimensional real Lie algebra.
#[derive(Debug, Clone)]
pub struct LieAlgebra {
    name: String,
    labels: Vec<String>,
    /// Dense `c[k][i][j]`, flattened as `k*n*n + i*n + j`.
    structure: Vec<f64>,
    rep: Option<Representation>,
    /// Bilinear form `G` with `a^T G a = G` on the group, if any.
    invariant_form: Option<DMatrix<f64>>,
}

impl LieAlgebra {
    /// Build from dense structure constants `c[k][i][j]` flattened as
    /// `k*n*n + i*n + j`, with an optional representation.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        structure: Vec<f64>,
        rep: Option<Vec<DMatrix<f64>>>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidParameter("algebra dimension must be positive".into()));
        }
        if structure.len() != n * n * n {
            return Err(Error::DimensionMismatch { expected: n * n * n, found: structure.len() });
        }
        if structure.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidAlgebra("non-finite structure constant".into()));
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let a = structure[k * n * n + i * n + j];
                    let b = structure[k * n * n + j * n + i];
                    if (a + b).abs() > 1e-12 {
                        return Err(Error::InvalidAlgebra(format!(
                            "structure constants not antisymmetric at [{k}][{i}][{j}]"
                        )));
                    }
                }
            }
        }
        let rep = match rep {
            Some(mats) => {
                if mats.len() != n {
                    return Err(Error::DimensionMismatch { expected: n, found: mats.len() });
                }
                let d = mats[0].nrows();
                if mats.iter().any(|m| m.nrows() != d || m.ncols() != d) {
                    return Err(Error::InvalidAlgebra("representation matrices must be square of equal size".into()));
                }
                let r = Representation::new(mats);
                if linalg::rank(&r.flat, linalg::RANK_RTOL) != n {
                    return Err(Error::InvalidAlgebra("representation is not faithful".into()));
                }
                Some(r)
            }
            None => None,
        };
        Ok(Self { name: name.into(), labels, structure, rep, invariant_form: None })
    }

    /// Build from a faithful matrix representation; structure constants are
    /// read off the commutators. Entries within 1e-12 of an integer are
    /// snapped to it.
    pub fn from_representation(name: impl Into<String>, labels: Vec<String>, mats: Vec<DMatrix<f64>>) -> Result<Self> {
        let n = labels.len();
        if mats.len() != n || n == 0 {
            return Err(Error::DimensionMismatch { expected: n, found: mats.len() });
        }
        let rep = Representation::new(mats);
        if linalg::rank(&rep.flat, linalg::RANK_RTOL) != n {
            return Err(Error::InvalidAlgebra("representation is not faithful".into()));
        }
        let mut structure = alloc::vec![0.0; n * n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let comm = &rep.mats[i] * &rep.mats[j] - &rep.mats[j] * &rep.mats[i];
                let c = coords_in_rep(&rep, &comm)?;
                for k in 0..n {
                    let mut v = c[k];
                    if (v - v.round()).abs() < 1e-12 {
                        v = v.round();
                    }
                    structure[k * n * n + i * n + j] = v;
                    structure[k * n * n + j * n + i] = -v;
                }
            }
        }
        Ok(Self { name: name.into(), labels, structure, rep: Some(rep), invariant_form: None })
    }

    /// Abelian algebra `R^n`.
    pub fn abelian(n: usize) -> Result<Self> {
        let labels = (1..=n).map(|i| format!("e{i}")).collect();
        Self::new(format!("abelian{n}"), labels, alloc::vec![0.0; n * n * n], None)
    }

    pub(crate) fn with_invariant_form(mut self, form: DMatrix<f64>) -> Self {
        self.invariant_form = Some(form);
        self
    }

    pub(crate) fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.labels
    }

    /// `c[k][i][j]`, the `e_k` component of `[e_i, e_j]`.
    pub fn structure_constant(&self, k: usize, i: usize, j: usize) -> f64 {
        let n = self.dim();
        self.structure[k * n * n + i * n + j]
    }

    /// Dense structure constants, flattened as `k*n*n + i*n + j`.
    pub fn structure(&self) -> &[f64] {
        &self.structure
    }

    pub fn representation(&self) -> Option<&[DMatrix<f64>]> {
        self.rep.as_ref().map(|r| r.mats.as_slice())
    }

    pub fn rep_dim(&self) -> Option<usize> {
        self.rep.as_ref().map(|r| r.mats[0].nrows())
    }

    pub fn invariant_form(&self) -> Option<&DMatrix<f64>> {
        self.invariant_form.as_ref()
    }

    fn check(&self, len: usize) -> Result<()> {
        if len != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: len });
        }
        Ok(())
    }

    fn rep_or_err(&self) -> Result<&Representation> {
        self.rep.as_ref().ok_or_else(|| Error::MissingRepresentation(self.name.clone()))
    }

    pub fn bracket(&self, xi: &AlgebraElement, eta: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(xi.dim())?;
        self.check(eta.dim())?;
        Ok(AlgebraElement { coords: self.ad_matrix(xi)? * &eta.coords })
    }

    /// Matrix of `eta -> [xi, eta]` in basis coordinates.
    pub fn ad_matrix(&self, xi: &AlgebraElement) -> Result<DMatrix<f64>> {
        self.check(xi.dim())?;
        let n = self.dim();
        let mut m = DMatrix::zeros(n, n);
        for k in 0..n {
            for i in 0..n {
                let x = xi.coords[i];
                if x == 0.0 {
                    continue;
                }
                for j in 0..n {
                    m[(k, j)] += self.structure[k * n * n + i * n + j] * x;
                }
            }
        }
        Ok(m)
    }

    /// Coadjoint generator `-(ad_xi)^T mu`.
    pub fn coad(&self, xi: &AlgebraElement, mu: &CoElement) -> Result<CoElement> {
        self.check(mu.dim())?;
        let ad = self.ad_matrix(xi)?;
        Ok(CoElement { coords: -(ad.transpose() * &mu.coords) })
    }

    /// Matrix of the linear map `xi -> coad(xi, mu)`.
    pub fn coad_matrix_at(&self, mu: &CoElement) -> Result<DMatrix<f64>> {
        self.check(mu.dim())?;
        let n = self.dim();
        let mut m = DMatrix::zeros(n, n);
        for i in 0..n {
            let col = self.coad(&AlgebraElement::basis(n, i), mu)?;
            m.set_column(i, &col.coords);
        }
        Ok(m)
    }

    /// Killing form `Tr(ad_xi ad_eta)`.
    pub fn killing(&self, xi: &AlgebraElement, eta: &AlgebraElement) -> Result<f64> {
        let a = self.ad_matrix(xi)?;
        let b = self.ad_matrix(eta)?;
        Ok((a * b).trace())
    }

    /// Gram matrix of the Killing form on the basis.
    pub fn killing_matrix(&self) -> DMatrix<f64> {
        let n = self.dim();
        let ads: Vec<DMatrix<f64>> =
            (0..n).map(|i| self.ad_matrix(&AlgebraElement::basis(n, i)).expect("basis element")).collect();
        DMatrix::from_fn(n, n, |a, b| (&ads[a] * &ads[b]).trace())
    }

    /// Max absolute cyclic sum `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
    pub fn verify_jacobi(&self) -> f64 {
        let n = self.dim();
        let c = |k: usize, i: usize, j: usize| self.structure[k * n * n + i * n + j];
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for m in 0..n {
                        let mut s = 0.0;
                        for l in 0..n {
                            s += c(l, i, j) * c(m, l, k) + c(l, j, k) * c(m, l, i) + c(l, k, i) * c(m, l, j);
                        }
                        worst = worst.max(s.abs());
                    }
                }
            }
        }
        worst
    }

    /// Max deviation between `rho([e_i,e_j])` and the matrix commutator.
    pub fn rep_residual(&self) -> Option<f64> {
        let rep = self.rep.as_ref()?;
        let n = self.dim();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let comm = &rep.mats[i] * &rep.mats[j] - &rep.mats[j] * &rep.mats[i];
                let mut img = DMatrix::zeros(comm.nrows(), comm.ncols());
                for k in 0..n {
                    img += &rep.mats[k] * self.structure_constant(k, i, j);
                }
                worst = worst.max(linalg::max_abs(&(comm - img)));
            }
        }
        Some(worst)
    }

    /// `rho(xi) = sum_i xi_i rho(e_i)`.
    pub fn rep_of(&self, xi: &AlgebraElement) -> Result<DMatrix<f64>> {
        self.check(xi.dim())?;
        let rep = self.rep_or_err()?;
        let d = rep.mats[0].nrows();
        let mut m = DMatrix::zeros(d, d);
        for (x, b) in xi.coords.iter().zip(&rep.mats) {
            if *x != 0.0 {
                m += b * *x;
            }
        }
        Ok(m)
    }

    /// Re-express a matrix in the representation basis.
    pub fn coords_of_matrix(&self, m: &DMatrix<f64>) -> Result<AlgebraElement> {
        let rep = self.rep_or_err()?;
        Ok(AlgebraElement { coords: coords_in_rep(rep, m)? })
    }

    /// Least-squares coordinates of `m` with no closure check, for
    /// matrices known to lie in the algebra only approximately.
    pub fn project_matrix(&self, m: &DMatrix<f64>) -> Result<AlgebraElement> {
        let rep = self.rep_or_err()?;
        let d = rep.mats[0].nrows();
        if m.nrows() != d || m.ncols() != d {
            return Err(Error::DimensionMismatch { expected: d, found: m.nrows() });
        }
        Ok(AlgebraElement { coords: &rep.flat_pinv * DVector::from_column_slice(m.as_slice()) })
    }

    pub fn group_exp(&self, xi: &AlgebraElement, t: f64) -> Result<GroupElement> {
        let m = self.rep_of(xi)? * t;
        Ok(GroupElement::new(linalg::expm(&m)))
    }

    pub fn identity(&self) -> Result<GroupElement> {
        let d = self.rep_or_err()?.mats[0].nrows();
        Ok(GroupElement::identity(d))
    }

    /// Matrix of `Ad_a` on basis coordinates.
    pub fn ad_group_matrix(&self, a: &GroupElement) -> Result<DMatrix<f64>> {
        let rep = self.rep_or_err()?;
        let ainv = a.inverse()?;
        let n = self.dim();
        let mut m = DMatrix::zeros(n, n);
        for i in 0..n {
            let img = &a.matrix * &rep.mats[i] * &ainv.matrix;
            m.set_column(i, &coords_in_rep(rep, &img)?);
        }
        Ok(m)
    }

    /// `Ad_a xi`.
    pub fn adjoint(&self, a: &GroupElement, xi: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(xi.dim())?;
        let rep = self.rep_or_err()?;
        let ainv = a.inverse()?;
        let img = &a.matrix * self.rep_of(xi)? * &ainv.matrix;
        Ok(AlgebraElement { coords: coords_in_rep(rep, &img)? })
    }

    /// `coAd(a, mu) = (Ad_{a^-1})^T mu`, so `<coAd(a,mu), xi> = <mu, Ad_{a^-1} xi>`.
    pub fn coadjoint(&self, a: &GroupElement, mu: &CoElement) -> Result<CoElement> {
        self.check(mu.dim())?;
        let m = self.ad_group_matrix(&a.inverse()?)?;
        Ok(CoElement { coords: m.transpose() * &mu.coords })
    }

    /// Check that `a` lies in the group: finite, invertible and, for groups
    /// preserving a bilinear form, `a^T G a = G` to 1e-9.
    pub fn check_membership(&self, a: &GroupElement) -> Result<()> {
        let d = self.rep_dim().ok_or_else(|| Error::MissingRepresentation(self.name.clone()))?;
        if a.matrix.nrows() != d || a.matrix.ncols() != d {
            return Err(Error::DimensionMismatch { expected: d, found: a.matrix.nrows() });
        }
        if a.matrix.iter().any(|x| !x.is_finite()) {
            return Err(Error::GroupMembership { defect: f64::INFINITY });
        }
        if let Some(g) = &self.invariant_form {
            let defect = linalg::max_abs(&(a.matrix.transpose() * g * &a.matrix - g));
            if defect > 1e-9 {
                return Err(Error::GroupMembership { defect });
            }
        } else {
            let det = a.matrix.determinant();
            if det.abs() < 1e-12 {
                return Err(Error::GroupMembership { defect: det.abs() });
            }
        }
        Ok(())
    }

    /// The same algebra in the basis `e'_j = sum_i p[(i,j)] e_i`.
    pub fn change_basis(&self, p: &DMatrix<f64>) -> Result<Self> {
        let n = self.dim();
        if p.nrows() != n || p.ncols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: p.nrows() });
        }
        let pinv = p.clone().try_inverse().ok_or(Error::Singular)?;
        let mut structure = alloc::vec![0.0; n * n * n];
        for a in 0..n {
            for b in 0..n {
                let xa = AlgebraElement { coords: p.column(a).into_owned() };
                let xb = AlgebraElement { coords: p.column(b).into_owned() };
                let br = self.bracket(&xa, &xb)?;
                let c = &pinv * br.coords;
                for k in 0..n {
                    structure[k * n * n + a * n + b] = c[k];
                }
            }
        }
        // Restore exact antisymmetry lost to roundoff.
        for k in 0..n {
            for a in 0..n {
                for b in (a + 1)..n {
                    let v = 0.5 * (structure[k * n * n + a * n + b] - structure[k * n * n + b * n + a]);
                    structure[k * n * n + a * n + b] = v;
                    structure[k * n * n + b * n + a] = -v;
                }
                structure[k * n * n + a * n + a] = 0.0;
            }
        }
        let rep = match &self.rep {
            Some(r) => {
                let mats = (0..n)
                    .map(|j| {
                        let mut m = DMatrix::zeros(r.mats[0].nrows(), r.mats[0].ncols());
                        for i in 0..n {
                            m += &r.mats[i] * p[(i, j)];
                        }
                        m
                    })
                    .collect();
                Some(Representation::new(mats))
            }
            None => None,
        };
        let labels = (0..n).map(|i| format!("e'{}", i + 1)).collect();
        Ok(Self {
            name: format!("{}'", self.name),
            labels,
            structure,
            rep,
            invariant_form: self.invariant_form.clone(),
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.structure.iter().all(|&c| c == 0.0)
    }
}

fn coords_in_rep(rep: &Representation, m: &DMatrix<f64>) -> Result<DVector<f64>> {
    let d = rep.mats[0].nrows();
    if m.nrows() != d || m.ncols() != d {
        return Err(Error::DimensionMismatch { expected: d, found: m.nrows() });
    }
    let v = DVector::from_column_slice(m.as_slice());
    let c = &rep.flat_pinv * &v;
    let residual = (&rep.flat * &c - &v).norm();
    if residual > CLOSURE_TOL * v.norm().max(1.0) {
        return Err(Error::RepresentationClosure { residual });
    }
    Ok(c)
}

//! Computational core for geometric mechanics on Lie groups.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! - [`algebra`]: finite-dimensional real Lie algebras given by structure
//!   constants, with an optional faithful matrix representation, the
//!   adjoint/coadjoint actions, the Killing form and the group exponential.
//! - [`cohomology`]: the Chevalley-Eilenberg complex in degrees 0..3.
//! - [`roots`]: classical root systems (A, B, C, D), Cartan matrices and
//!   Dynkin diagrams, with an adjoint-diagonalisation cross-check.
//! - [`moment`]: momentum maps on `T*G` in the body chart `(a, mu)`.
//! - [`dynamics`]: Lie-Poisson equations, integrators and rigid-body
//!   equilibria.
//! - [`reconstruction`]: lifting reduced trajectories back to the group.
//! - [`geodesic`]: Euler-angle kinematics and the geodesic picture of
//!   free rigid-body motion.
//!
//! IO, file formats and the command line live in the companion `liemech`
//! crate.
#![no_std]
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod cohomology;
pub mod dynamics;
pub mod error;
pub mod geodesic;
pub mod linalg;
pub mod moment;
pub mod reconstruction;
pub mod roots;
pub mod sampling;

pub use algebra::{AlgebraElement, CoElement, GroupElement, LieAlgebra};
pub use error::{Error, Result};

//! Seeded random sampling of algebra and group elements.

use alloc::vec::Vec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraElement, CoElement, GroupElement, LieAlgebra};
use crate::error::Result;

/// Deterministic sampler; the same seed always yields the same stream.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }

    pub fn vector(&mut self, n: usize, scale: f64) -> Vec<f64> {
        (0..n).map(|_| self.uniform(-scale, scale)).collect()
    }

    pub fn algebra_element(&mut self, g: &LieAlgebra, scale: f64) -> AlgebraElement {
        AlgebraElement::new(self.vector(g.dim(), scale))
    }

    pub fn co_element(&mut self, g: &LieAlgebra, scale: f64) -> CoElement {
        CoElement::new(self.vector(g.dim(), scale))
    }

    /// `exp(xi)` for a random `xi` with coordinates in `[-scale, scale]`.
    pub fn group_element(&mut self, g: &LieAlgebra, scale: f64) -> Result<GroupElement> {
        let xi = self.algebra_element(g, scale);
        g.group_exp(&xi, 1.0)
    }
}

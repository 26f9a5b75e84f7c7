//! Basis independence and known cohomology of small algebras, through the
//! public API only.

use liemech_core::algebra::{self, CoElement, LieAlgebra};
use liemech_core::cohomology::{h1_dim, h2_dim};
use liemech_core::moment::orbit_dimension;
use liemech_core::sampling::Sampler;
use nalgebra::DMatrix;
use proptest::prelude::*;

fn random_basis(n: usize, seed: u64) -> DMatrix<f64> {
    let mut s = Sampler::new(seed);
    // Diagonally dominant, hence invertible and well conditioned.
    DMatrix::from_fn(n, n, |i, j| if i == j { 3.0 + s.uniform(0.0, 1.0) } else { s.uniform(-0.5, 0.5) })
}

fn heisenberg() -> LieAlgebra {
    // [x, y] = z
    let mut c = vec![0.0; 27];
    c[2 * 9 + 1] = 1.0;
    c[2 * 9 + 3] = -1.0;
    LieAlgebra::new("heisenberg", vec!["x".into(), "y".into(), "z".into()], c, None).unwrap()
}

#[test]
fn small_algebras_have_their_known_betti_numbers() {
    for n in 1..=4 {
        let a = LieAlgebra::abelian(n).unwrap();
        assert_eq!(h1_dim(&a), n);
        assert_eq!(h2_dim(&a), n * (n - 1) / 2);
    }
    let h = heisenberg();
    assert_eq!((h1_dim(&h), h2_dim(&h)), (2, 2));
    // gl(n) = sl(n) + centre: one class in degree 1, none in degree 2.
    let gl = algebra::by_name("gl3").unwrap();
    assert_eq!((h1_dim(&gl), h2_dim(&gl)), (1, 0));
}

#[test]
fn cohomology_ignores_the_basis() {
    for (k, name) in ["so3", "sl2", "galilei", "heavy_top3", "poincare"].iter().enumerate() {
        let g = algebra::by_name(name).unwrap();
        let h = g.change_basis(&random_basis(g.dim(), k as u64)).unwrap();
        assert!(h.verify_jacobi() <= 1e-10, "{name}");
        assert_eq!(h1_dim(&h), h1_dim(&g), "{name}");
        assert_eq!(h2_dim(&h), h2_dim(&g), "{name}");
    }
}

#[test]
fn killing_form_transforms_by_congruence() {
    let g = algebra::by_name("sl3").unwrap();
    let p = random_basis(8, 42);
    let h = g.change_basis(&p).unwrap();
    let expect = p.transpose() * g.killing_matrix() * &p;
    let scale = expect.amax();
    assert!((h.killing_matrix() - expect).amax() <= 1e-9 * scale);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn orbit_dimension_ignores_the_basis(seed in any::<u64>(), which in 0usize..4) {
        let name = ["so3", "heavy_top3", "galilei", "cm3"][which];
        let g = algebra::by_name(name).unwrap();
        let p = random_basis(g.dim(), seed);
        let h = g.change_basis(&p).unwrap();
        let mu = Sampler::new(seed ^ 0x5eed).co_element(&g, 1.0);
        // mu'(e'_j) = sum_i p_ij mu(e_i)
        let mu_new = CoElement::from(p.transpose() * &mu.coords);
        prop_assert_eq!(orbit_dimension(&g, &mu).unwrap(), orbit_dimension(&h, &mu_new).unwrap());
    }
}

//! Built-in algebras, all constructed from a faithful matrix representation.
//!
//! The classical families list their Cartan elements first, so the Cartan
//! subalgebra is spanned by basis indices `0..rank`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use nalgebra::DMatrix;

use super::LieAlgebra;
use crate::error::{Error, Result};

fn unit(d: usize, p: usize, q: usize) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(d, d);
    m[(p, q)] = 1.0;
    m
}

/// Levi-Civita symbol on `{0,1,2}`.
pub fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// Cross-product matrix of `e_i`: `hat(e_i) v = e_i x v`.
pub fn hat_basis(i: usize) -> DMatrix<f64> {
    DMatrix::from_fn(3, 3, |j, k| -levi_civita(i, j, k))
}

/// Cross-product matrix `hat(w) v = w x v`.
pub fn hat(w: &[f64]) -> DMatrix<f64> {
    DMatrix::from_row_slice(3, 3, &[0.0, -w[2], w[1], w[2], 0.0, -w[0], -w[1], w[0], 0.0])
}

fn build(name: &str, labels: Vec<String>, mats: Vec<DMatrix<f64>>) -> LieAlgebra {
    LieAlgebra::from_representation(name, labels, mats).expect("built-in representation is closed")
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// `so(3)` with `[e_i, e_j] = eps_ijk e_k`, represented by cross-product matrices.
pub fn so3() -> LieAlgebra {
    build("so3", labels(&["e1", "e2", "e3"]), (0..3).map(hat_basis).collect())
        .with_invariant_form(DMatrix::identity(3, 3))
}

/// `sl(n)`: Cartan elements `g_m = e_mm - e_{m+1,m+1}` first, then `e_pq`, `p != q`.
pub fn sl(n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("sl(n) needs n >= 2, got {n}")));
    }
    let mut mats = Vec::new();
    let mut names = Vec::new();
    for m in 0..n - 1 {
        mats.push(unit(n, m, m) - unit(n, m + 1, m + 1));
        names.push(format!("g{}", m + 1));
    }
    for p in 0..n {
        for q in 0..n {
            if p != q {
                mats.push(unit(n, p, q));
                names.push(format!("e{}{}", p + 1, q + 1));
            }
        }
    }
    Ok(build(&format!("sl{n}"), names, mats))
}

/// `gl(n)` in the basis `e_pq`, row-major; the diagonal `e_pp` come first.
pub fn gl(n: usize) -> Result<LieAlgebra> {
    if n < 1 {
        return Err(Error::InvalidParameter("gl(n) needs n >= 1".into()));
    }
    let mut mats = Vec::new();
    let mut names = Vec::new();
    for p in 0..n {
        mats.push(unit(n, p, p));
        names.push(format!("e{}{}", p + 1, p + 1));
    }
    for p in 0..n {
        for q in 0..n {
            if p != q {
                mats.push(unit(n, p, q));
                names.push(format!("e{}{}", p + 1, q + 1));
            }
        }
    }
    Ok(build(&format!("gl{n}"), names, mats))
}

/// Compact `so(m)` with basis `e_pq - e_qp`, `p < q`.
pub fn so_compact(m: usize) -> Result<LieAlgebra> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("so(m) needs m >= 2, got {m}")));
    }
    let mut mats = Vec::new();
    let mut names = Vec::new();
    for p in 0..m {
        for q in (p + 1)..m {
            mats.push(unit(m, p, q) - unit(m, q, p));
            names.push(format!("x{}{}", p + 1, q + 1));
        }
    }
    Ok(build(&format!("so{m}"), names, mats).with_invariant_form(DMatrix::identity(m, m)))
}

/// Index set of the split orthogonal algebras: `-n..=n` for `B_n`,
/// `-n..=-1, 1..=n` for `D_n`.
pub fn split_indices(n: usize, odd: bool) -> Vec<i32> {
    let n = n as i32;
    (-n..=n).filter(|&i| odd || i != 0).collect()
}

/// Split real form `so(p, q)` in the basis `f_kl = e_kl - e_{-l,-k}`.
///
/// `p = q + 1` gives `B_q` (matrix size `2q + 1`, indices `-q..q`), and
/// `p = q` gives `D_p` (indices `+-1..+-p`). The Cartan elements `f_kk`,
/// `k = 1..n`, come first, then `f_kl` with `k != l` and `k + l > 0`.
pub fn so_split_f(p: usize, q: usize) -> Result<LieAlgebra> {
    let (n, odd) = if p == q + 1 && q >= 1 {
        (q, true)
    } else if p == q && p >= 1 {
        (p, false)
    } else {
        return Err(Error::InvalidParameter(format!("so_split_f({p},{q}) needs p = q + 1 >= 2 or p = q >= 1")));
    };
    let idx = split_indices(n, odd);
    let d = idx.len();
    let pos = |i: i32| idx.iter().position(|&x| x == i).expect("index in range");
    let f = |k: i32, l: i32| unit(d, pos(k), pos(l)) - unit(d, pos(-l), pos(-k));
    let mut mats = Vec::new();
    let mut names = Vec::new();
    for k in 1..=n as i32 {
        mats.push(f(k, k));
        names.push(format!("f[{k},{k}]"));
    }
    for &k in &idx {
        for &l in &idx {
            if k != l && k + l > 0 {
                mats.push(f(k, l));
                names.push(format!("f[{k},{l}]"));
            }
        }
    }
    let form = DMatrix::from_fn(d, d, |i, j| if idx[i] == -idx[j] { 1.0 } else { 0.0 });
    Ok(build(&format!("so({p},{q})"), names, mats).with_invariant_form(form))
}

/// `sp(2n)` with the block basis `A_ij`, `B_ij`, `C_ij`; the diagonal
/// `A_ii` come first.
pub fn sp(n: usize) -> Result<LieAlgebra> {
    if n < 1 {
        return Err(Error::InvalidParameter("sp(2n) needs n >= 1".into()));
    }
    let d = 2 * n;
    let a = |i: usize, j: usize| unit(d, i, j) - unit(d, n + j, n + i);
    let b = |i: usize, j: usize| unit(d, i, n + j) + unit(d, j, n + i);
    let c = |i: usize, j: usize| unit(d, n + i, j) + unit(d, n + j, i);
    let mut mats = Vec::new();
    let mut names = Vec::new();
    for i in 0..n {
        mats.push(a(i, i));
        names.push(format!("A{}{}", i + 1, i + 1));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                mats.push(a(i, j));
                names.push(format!("A{}{}", i + 1, j + 1));
            }
        }
    }
    for i in 0..n {
        for j in i..n {
            mats.push(b(i, j));
            names.push(format!("B{}{}", i + 1, j + 1));
        }
    }
    for i in 0..n {
        for j in i..n {
            mats.push(c(i, j));
            names.push(format!("C{}{}", i + 1, j + 1));
        }
    }
    let mut form = DMatrix::zeros(d, d);
    for i in 0..n {
        form[(i, n + i)] = 1.0;
        form[(n + i, i)] = -1.0;
    }
    Ok(build(&format!("sp{d}"), names, mats).with_invariant_form(form))
}

/// Galilei algebra in the 5x5 representation
/// `[[hat(xi), v, x], [0, 0, tau], [0, 0, 0]]`, basis order
/// `(xi1..xi3, v1..v3, x1..x3, tau)`.
pub fn galilei() -> LieAlgebra {
    let mut mats = Vec::new();
    for i in 0..3 {
        let mut m = DMatrix::zeros(5, 5);
        m.view_mut((0, 0), (3, 3)).copy_from(&hat_basis(i));
        mats.push(m);
    }
    for i in 0..3 {
        mats.push(unit(5, i, 3));
    }
    for i in 0..3 {
        mats.push(unit(5, i, 4));
    }
    mats.push(unit(5, 3, 4));
    build("galilei", labels(&["r1", "r2", "r3", "v1", "v2", "v3", "x1", "x2", "x3", "tau"]), mats)
}

/// The six symmetric basis matrices used for the `V` part of `cm(3)`:
/// `E11, E22, E33, E12+E21, E13+E31, E23+E32`.
pub fn sym3_basis() -> Vec<DMatrix<f64>> {
    let mut out = Vec::new();
    for i in 0..3 {
        out.push(unit(3, i, i));
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        out.push(unit(3, i, j) + unit(3, j, i));
    }
    out
}

/// `cm(3)`: 6x6 matrices `[[xi, 0], [eta, -xi^T]]`, `xi in sl(3)`,
/// `eta` symmetric. Basis: the `sl(3)` basis of [`sl`] followed by
/// [`sym3_basis`].
pub fn cm3() -> LieAlgebra {
    let sl3 = sl(3).expect("sl3");
    let mut mats = Vec::new();
    let mut names: Vec<String> = Vec::new();
    for (m, name) in sl3.representation().expect("rep").iter().zip(sl3.basis_labels()) {
        let mut big = DMatrix::zeros(6, 6);
        big.view_mut((0, 0), (3, 3)).copy_from(m);
        big.view_mut((3, 3), (3, 3)).copy_from(&(-m.transpose()));
        mats.push(big);
        names.push(name.clone());
    }
    for (s, name) in sym3_basis().iter().zip(["w11", "w22", "w33", "w12", "w13", "w23"]) {
        let mut big = DMatrix::zeros(6, 6);
        big.view_mut((3, 0), (3, 3)).copy_from(s);
        mats.push(big);
        names.push(name.into());
    }
    build("cm3", names, mats)
}

/// `se(3) = so(3) x R^3` in the 4x4 representation `[[hat(xi), x], [0, 0]]`,
/// basis `(xi1..xi3, x1..x3)`. Phase space of the heavy top.
pub fn heavy_top3() -> LieAlgebra {
    let mut mats = Vec::new();
    for i in 0..3 {
        let mut m = DMatrix::zeros(4, 4);
        m.view_mut((0, 0), (3, 3)).copy_from(&hat_basis(i));
        mats.push(m);
    }
    for i in 0..3 {
        mats.push(unit(4, i, 3));
    }
    build("heavy_top3", labels(&["r1", "r2", "r3", "x1", "x2", "x3"]), mats)
}

fn lorentz_generators() -> Vec<DMatrix<f64>> {
    let mut mats = Vec::new();
    for i in 0..3 {
        mats.push(DMatrix::from_fn(4, 4, |k, l| if k == 0 || l == 0 { 0.0 } else { levi_civita(i, k - 1, l - 1) }));
    }
    for i in 0..3 {
        mats.push(unit(4, 0, i + 1) + unit(4, i + 1, 0));
    }
    mats
}

/// Minkowski form `diag(-1, 1, 1, 1)`.
pub fn minkowski() -> DMatrix<f64> {
    DMatrix::from_diagonal(&nalgebra::DVector::from_vec(alloc::vec![-1.0, 1.0, 1.0, 1.0]))
}

/// `so(3,1)` with basis `(J1, J2, J3, K1, K2, K3)`, `(J_i)_kl = eps_ikl`,
/// `(K_i)_{0i} = (K_i)_{i0} = 1`.
pub fn so31() -> LieAlgebra {
    build("so31", labels(&["J1", "J2", "J3", "K1", "K2", "K3"]), lorentz_generators()).with_invariant_form(minkowski())
}

/// Poincare algebra `so(3,1) x R^{3,1}` in 5x5 form `[[Lambda, p], [0, 0]]`,
/// basis `(J1..J3, K1..K3, X0..X3)`.
pub fn poincare() -> LieAlgebra {
    let mut mats: Vec<DMatrix<f64>> = lorentz_generators()
        .into_iter()
        .map(|m| {
            let mut big = DMatrix::zeros(5, 5);
            big.view_mut((0, 0), (4, 4)).copy_from(&m);
            big
        })
        .collect();
    for mu in 0..4 {
        mats.push(unit(5, mu, 4));
    }
    build("poincare", labels(&["J1", "J2", "J3", "K1", "K2", "K3", "X0", "X1", "X2", "X3"]), mats)
}

/// Look up a built-in algebra by name: `so3`, `slN`, `glN`, `soN`, `spN`
/// (`N` even, the matrix size), `soB<n>`/`soD<n>` for the split forms,
/// `galilei`, `cm3`, `heavy_top3` (alias `se3`), `so31`, `poincare`,
/// `abelianN`.
pub fn by_name(name: &str) -> Result<LieAlgebra> {
    let num = |prefix: &str| -> Option<usize> { name.strip_prefix(prefix)?.parse().ok() };
    let alg = match name {
        "so3" => so3(),
        "galilei" => galilei(),
        "cm3" => cm3(),
        "heavy_top3" | "se3" => heavy_top3(),
        "so31" => so31(),
        "poincare" => poincare(),
        _ => {
            if let Some(n) = num("abelian") {
                LieAlgebra::abelian(n)?
            } else if let Some(n) = num("sl") {
                sl(n)?
            } else if let Some(n) = num("gl") {
                gl(n)?
            } else if let Some(n) = num("sp") {
                if n % 2 != 0 || n == 0 {
                    return Err(Error::InvalidParameter(format!("sp{n}: matrix size must be even and positive")));
                }
                sp(n / 2)?
            } else if let Some(n) = num("soB") {
                so_split_f(n + 1, n)?.with_name(format!("soB{n}"))
            } else if let Some(n) = num("soD") {
                so_split_f(n, n)?.with_name(format!("soD{n}"))
            } else if let Some(n) = num("so") {
                so_compact(n)?
            } else {
                return Err(Error::InvalidParameter(format!("unknown algebra '{name}'")));
            }
        }
    };
    Ok(alg)
}

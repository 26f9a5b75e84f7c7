//! Root systems of the classical families, in exact rational arithmetic.
//!
//! Roots are recorded by their values on a fixed Cartan basis, the one the
//! matching algebra builder lists first:
//!
//! - `A_n`: `g_m = e_mm - e_{m+1,m+1}`, `m = 1..n`, in `sl(n+1)`.
//! - `B_n`, `D_n`: `f_pp`, `p = 1..n`, in the split orthogonal algebra.
//! - `C_n`: `A_ii`, `i = 1..n`, in `sp(2n)`.
//!
//! The inner product on roots is the dual of the Killing form restricted to
//! the Cartan subalgebra, `(alpha, beta) = alpha^T K^-1 beta` with
//! `K = sum_alpha alpha alpha^T`.

mod adjoint;
mod dynkin;
pub mod rational;

pub use adjoint::roots_from_adjoint;
pub use dynkin::{DynkinDiagram, DynkinEdge};

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use rational::{q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            _ => None,
        }
    }

    /// Number of roots `|Delta|` at the given rank.
    pub fn root_count(self, n: usize) -> usize {
        match self {
            Family::A => (n + 1) * (n + 1) - (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
        }
    }

    fn min_rank(self) -> usize {
        match self {
            Family::D => 2,
            _ => 1,
        }
    }
}

/// A classical root system with its positive and simple roots.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    /// Values of each root on the Cartan basis.
    pub roots: Vec<Vec<Q>>,
    /// Index-convention label of each root, e.g. `a[-1,2]`.
    pub labels: Vec<String>,
    pub positive: Vec<usize>,
    /// Indices of the simple roots, in diagram order.
    pub simple: Vec<usize>,
    /// Diagram node labels of the simple roots.
    pub simple_labels: Vec<String>,
    /// `(beta_i, beta_j)` on the simple roots.
    pub gram: Vec<Vec<Q>>,
    /// Killing form on the Cartan basis.
    pub killing: Vec<Vec<Q>>,
    killing_inv: Vec<Vec<Q>>,
}

fn delta(a: i64, b: i64) -> i64 {
    (a == b) as i64
}

fn raw_roots(family: Family, n: usize) -> (Vec<Vec<Q>>, Vec<String>) {
    let ni = n as i64;
    let mut roots = Vec::new();
    let mut labels = Vec::new();
    match family {
        Family::A => {
            for p in 1..=ni + 1 {
                for qq in 1..=ni + 1 {
                    if p != qq {
                        roots.push(
                            (1..=ni)
                                .map(|m| q(delta(m, p) - delta(m, qq) + delta(m + 1, qq) - delta(m + 1, p)))
                                .collect(),
                        );
                        labels.push(format!("a[{p},{qq}]"));
                    }
                }
            }
        }
        Family::B | Family::D => {
            let idx: Vec<i64> = (-ni..=ni).filter(|&i| family == Family::B || i != 0).collect();
            for &k in &idx {
                for &l in &idx {
                    if k > -l && k != l {
                        roots.push(
                            (1..=ni).map(|p| q(delta(p, k) - delta(p, l) + delta(p, -l) - delta(p, -k))).collect(),
                        );
                        labels.push(format!("a[{k},{l}]"));
                    }
                }
            }
        }
        Family::C => {
            for p in 1..=ni {
                for qq in 1..=ni {
                    if p != qq {
                        roots.push((1..=ni).map(|i| q(delta(i, p) - delta(i, qq))).collect());
                        labels.push(format!("a[{p},{qq}]"));
                    }
                }
            }
            for p in 1..=ni {
                for qq in 1..=p {
                    for sign in [1, -1] {
                        roots.push((1..=ni).map(|i| q(sign * (delta(i, p) + delta(i, qq)))).collect());
                        let s = if sign > 0 { "" } else { "-" };
                        labels.push(format!("{s}a'[{p},{qq}]"));
                    }
                }
            }
        }
    }
    (roots, labels)
}

/// The ordered Cartan elements used by the positivity rule, expressed in
/// the Cartan basis.
fn ordering_basis(family: Family, n: usize) -> Vec<Vec<Q>> {
    match family {
        // h_i = E_ii - I/(n+1) written in the g_m basis.
        Family::A => (1..=n + 1)
            .map(|i| (1..=n).map(|m| q((m >= i) as i64) - Q::new(m as i64, n as i64 + 1)).collect())
            .collect(),
        // -f_nn, -f_{n-1,n-1}, ..., -f_11
        Family::B | Family::D => (1..=n).rev().map(|p| (1..=n).map(|j| q(-((j == p) as i64))).collect()).collect(),
        Family::C => (1..=n).map(|p| (1..=n).map(|j| q((j == p) as i64)).collect()).collect(),
    }
}

/// Labels of the simple roots in diagram order, and their node names.
fn simple_root_labels(family: Family, n: usize) -> (Vec<String>, Vec<String>) {
    match family {
        Family::A => {
            ((1..=n).map(|p| format!("a[{},{}]", p, p + 1)).collect(), (1..=n).map(|p| format!("{p}")).collect())
        }
        Family::B => {
            let mut l = vec![String::from("a[0,1]")];
            l.extend((1..n).map(|k| format!("a[{},{}]", k, k + 1)));
            (l, (0..n).map(|k| format!("{k}")).collect())
        }
        Family::C => {
            let mut l: Vec<String> = (1..n).map(|p| format!("a[{},{}]", p, p + 1)).collect();
            l.push(format!("a'[{n},{n}]"));
            (l, (1..=n).map(|p| format!("{p}")).collect())
        }
        Family::D => {
            let mut l = vec![String::from("a[-1,2]")];
            l.extend((1..n).map(|k| format!("a[{},{}]", k, k + 1)));
            (l, (0..n).map(|k| format!("{k}")).collect())
        }
    }
}

fn dot(x: &[Q], y: &[Q]) -> Q {
    x.iter().zip(y).fold(Q::zero(), |s, (a, b)| s + a * b)
}

fn add(x: &[Q], y: &[Q]) -> Vec<Q> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

/// Build the root system of a classical family.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    if rank < family.min_rank() {
        return Err(Error::UnsupportedRank { family: family.letter(), rank });
    }
    let n = rank;
    let (roots, labels) = raw_roots(family, n);

    let order = ordering_basis(family, n);
    let positive: Vec<usize> = (0..roots.len())
        .filter(|&i| order.iter().map(|h| dot(&roots[i], h)).find(|v| !v.is_zero()).is_some_and(|v| v.is_positive()))
        .collect();

    let is_sum_of_positives =
        |i: usize| positive.iter().any(|&a| positive.iter().any(|&b| a != b && add(&roots[a], &roots[b]) == roots[i]));
    let simple_set: Vec<usize> = positive.iter().copied().filter(|&i| !is_sum_of_positives(i)).collect();

    let (expected, simple_labels) = simple_root_labels(family, n);
    let simple: Vec<usize> =
        expected.iter().map(|l| labels.iter().position(|x| x == l).expect("simple root label present")).collect();
    {
        let mut a = simple.clone();
        let mut b = simple_set.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Err(Error::InvalidAlgebra(format!(
                "simple roots of {}{} disagree with the indecomposable positive roots",
                family.letter(),
                n
            )));
        }
    }

    let mut killing = vec![vec![Q::zero(); n]; n];
    for r in &roots {
        for i in 0..n {
            for j in 0..n {
                killing[i][j] += r[i] * r[j];
            }
        }
    }
    let killing_inv = rational::inverse(&killing)?;
    let gram = simple
        .iter()
        .map(|&i| simple.iter().map(|&j| rational::bilinear(&killing_inv, &roots[i], &roots[j])).collect())
        .collect();

    Ok(RootSystem { family, rank, roots, labels, positive, simple, simple_labels, gram, killing, killing_inv })
}

impl RootSystem {
    /// `(alpha, beta)` for two root-value vectors.
    pub fn inner(&self, a: &[Q], b: &[Q]) -> Q {
        rational::bilinear(&self.killing_inv, a, b)
    }

    pub fn simple_roots(&self) -> Vec<&Vec<Q>> {
        self.simple.iter().map(|&i| &self.roots[i]).collect()
    }

    /// `A_ij = 2 (beta_i, beta_j) / (beta_i, beta_i)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v = q(2) * self.gram[i][j] / self.gram[i][i];
                        debug_assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect()
            })
            .collect()
    }

    /// Coefficients of a root in the simple-root basis.
    pub fn simple_root_expansion(&self, index: usize) -> Result<Vec<i64>> {
        if index >= self.roots.len() {
            return Err(Error::IndexOutOfRange { index, len: self.roots.len() });
        }
        let n = self.rank;
        // columns of `basis` are the simple roots
        let basis: Vec<Vec<Q>> = (0..n).map(|i| self.simple.iter().map(|&s| self.roots[s][i]).collect()).collect();
        let c = rational::solve(&basis, &self.roots[index])?;
        if c.iter().any(|x| !x.is_integer()) {
            return Err(Error::InvalidAlgebra(format!("root {} has non-integer expansion", self.labels[index])));
        }
        Ok(c.iter().map(|x| x.to_integer()).collect())
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }
}

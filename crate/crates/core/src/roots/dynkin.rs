use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use super::RootSystem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinEdge {
    pub i: usize,
    pub j: usize,
    /// `A_ij * A_ji`.
    pub multiplicity: u8,
    /// Node of the shorter root, when the two lengths differ.
    pub arrow_to: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    pub name: String,
    pub nodes: Vec<String>,
    pub edges: Vec<DynkinEdge>,
}

impl RootSystem {
    pub fn dynkin(&self) -> DynkinDiagram {
        let a = self.cartan_matrix();
        let n = self.rank;
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let m = a[i][j] * a[j][i];
                if m == 0 {
                    continue;
                }
                let (li, lj) = (self.gram[i][i], self.gram[j][j]);
                let arrow_to = match li.cmp(&lj) {
                    core::cmp::Ordering::Less => Some(i),
                    core::cmp::Ordering::Greater => Some(j),
                    core::cmp::Ordering::Equal => None,
                };
                edges.push(DynkinEdge { i, j, multiplicity: m as u8, arrow_to });
            }
        }
        DynkinDiagram { name: self.name(), nodes: self.simple_labels.clone(), edges }
    }
}

impl DynkinDiagram {
    pub fn degree(&self, node: usize) -> usize {
        self.edges.iter().filter(|e| e.i == node || e.j == node).count()
    }

    /// One line per edge: `-`, `=`, `#` for 1, 2, 3 bonds, with `<` or `>`
    /// marking the arrow toward the shorter root.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} Dynkin diagram", self.name);
        let _ = writeln!(s, "nodes: {}", self.nodes.join(" "));
        for e in &self.edges {
            let bond = match e.multiplicity {
                1 => "-",
                2 => "=",
                _ => "#",
            };
            let line: String = core::iter::repeat_n(bond, 3).collect();
            let link = match e.arrow_to {
                Some(t) if t == e.i => format!("<{line}"),
                Some(_) => format!("{line}>"),
                None => line,
            };
            let _ = writeln!(s, "{} {} {}", self.nodes[e.i], link, self.nodes[e.j]);
        }
        if self.edges.is_empty() && self.nodes.len() > 1 {
            let _ = writeln!(s, "(no edges)");
        }
        s
    }

    /// Graphviz rendering. Edge `label` is the multiplicity and `dir`
    /// places the arrowhead on the shorter root.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph {} {{", self.name);
        let _ = writeln!(s, "  node [shape=circle];");
        for (k, label) in self.nodes.iter().enumerate() {
            let _ = writeln!(s, "  n{k} [label=\"{label}\"];");
        }
        for e in &self.edges {
            let dir = match e.arrow_to {
                Some(t) if t == e.i => "back",
                Some(_) => "forward",
                None => "none",
            };
            let _ = writeln!(
                s,
                "  n{} -- n{} [label=\"{}\", penwidth={}, dir={}];",
                e.i, e.j, e.multiplicity, e.multiplicity, dir
            );
        }
        s.push_str("}\n");
        s
    }
}

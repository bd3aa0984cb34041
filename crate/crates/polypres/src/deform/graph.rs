use super::{enumerate_admissible, groups_of_order};
use crate::perm::{is_isomorphic, TableGroup};
use crate::Error;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

/// The graph `Γ_n`: isomorphism classes of groups of order `n`, joined when
/// one deforms into the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformGraph {
    pub order: usize,
    pub vertices: Vec<String>,
    /// unordered edges `(i, j)` with `i < j`
    pub edges: Vec<(usize, usize)>,
    /// ordered pairs `(G, G_φ)` actually found, including loops
    pub found: BTreeSet<(usize, usize)>,
}

impl DeformGraph {
    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        let i = self.vertices.iter().position(|v| v == a);
        let j = self.vertices.iter().position(|v| v == b);
        match (i, j) {
            (Some(i), Some(j)) => self.edges.contains(&(i.min(j), i.max(j))),
            _ => false,
        }
    }

    pub fn edge_names(&self) -> Vec<(String, String)> {
        self.edges.iter().map(|&(i, j)| (self.vertices[i].clone(), self.vertices[j].clone())).collect()
    }
}

impl fmt::Display for DeformGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order: {}", self.order)?;
        writeln!(f, "vertices: {}", self.vertices.join(", "))?;
        for (a, b) in self.edge_names() {
            writeln!(f, "edge: {a} -- {b}")?;
        }
        Ok(())
    }
}

/// Index in `catalog` of the group isomorphic to `g`.
pub fn classify(g: &TableGroup, catalog: &[TableGroup]) -> Result<usize, Error> {
    for (i, c) in catalog.iter().enumerate() {
        if is_isomorphic(g, c)?.is_some() {
            return Ok(i);
        }
    }
    Err(Error::Invalid(format!("group of order {} not found in catalog", g.order())))
}

/// Computes `Γ_n` for `n ≤ 16` from every admissible action on every catalog group.
pub fn deformation_graph(n: usize) -> Result<DeformGraph, Error> {
    let cat = groups_of_order(n)?;
    let mut found = BTreeSet::new();
    for (i, g) in cat.iter().enumerate() {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        for a in enumerate_admissible(g)? {
            let d = a.deform_group()?;
            let key: Vec<usize> = (0..n * n).map(|x| d.mul(x / n, x % n)).collect();
            if !seen.insert(key) {
                continue;
            }
            found.insert((i, classify(&d, &cat)?));
        }
    }
    let edges: BTreeSet<(usize, usize)> =
        found.iter().filter(|(a, b)| a != b).map(|&(a, b)| (a.min(b), a.max(b))).collect();
    Ok(DeformGraph {
        order: n,
        vertices: cat.iter().map(|g| g.name.clone()).collect(),
        edges: edges.into_iter().collect(),
        found,
    })
}

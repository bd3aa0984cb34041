use super::{PermGroup, TableGroup};
use crate::Error;
use std::collections::HashSet;

/// Subgroup lattices are only enumerated up to this order.
pub const SUBGROUP_LIMIT: u128 = 512;

impl PermGroup {
    /// Every subgroup, each with a small generating set, sorted by order and
    /// then by element set. Joins of cyclic subgroups, brute force.
    pub fn subgroups(&self) -> Result<Vec<PermGroup>, Error> {
        if self.order() > SUBGROUP_LIMIT {
            return Err(Error::TooLarge(format!("subgroup enumeration needs |G| <= {SUBGROUP_LIMIT}")));
        }
        let (t, elems) = TableGroup::from_perm_group("G", self)?;
        let n = t.order();
        let key = |gens: &[usize]| {
            let mut s = t.closure(gens);
            s.sort_unstable();
            s
        };
        // one generator per cyclic subgroup
        let mut cyclic: Vec<usize> = Vec::new();
        let mut seen_cyclic = HashSet::new();
        for a in 1..n {
            if seen_cyclic.insert(key(&[a])) {
                cyclic.push(a);
            }
        }
        let mut found: Vec<(Vec<usize>, Vec<usize>)> = vec![(vec![0], Vec::new())];
        let mut seen: HashSet<Vec<usize>> = HashSet::from([vec![0]]);
        let mut i = 0;
        while i < found.len() {
            let (set, gens) = found[i].clone();
            for &c in &cyclic {
                if set.binary_search(&c).is_ok() {
                    continue;
                }
                let mut g2 = gens.clone();
                g2.push(c);
                let s = key(&g2);
                if seen.insert(s.clone()) {
                    found.push((s, g2));
                }
            }
            i += 1;
        }
        found.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
        Ok(found
            .into_iter()
            .map(|(_, gens)| PermGroup::new(self.degree(), gens.iter().map(|&g| elems[g].clone()).collect()))
            .collect())
    }
}

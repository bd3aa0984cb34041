use super::{Perm, PermGroup};
use crate::Error;
use std::collections::HashMap;

/// The (H,K)-double cosets of G, listed by their smallest element.
/// The identity coset always comes first.
#[derive(Clone, Debug)]
pub struct DoubleCosetDecomposition {
    pub reps: Vec<Perm>,
    pub sizes: Vec<usize>,
    membership: HashMap<Perm, usize>,
}

impl DoubleCosetDecomposition {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.membership.get(g).copied()
    }

    /// Members of coset `i`, sorted.
    pub fn members(&self, i: usize) -> Vec<Perm> {
        let mut v: Vec<Perm> =
            self.membership.iter().filter(|(_, &c)| c == i).map(|(g, _)| g.clone()).collect();
        v.sort();
        v
    }
}

/// Brute-force double coset decomposition `H\G/K` for `|G| <= 5000`.
pub fn double_cosets(g: &PermGroup, h: &PermGroup, k: &PermGroup) -> Result<DoubleCosetDecomposition, Error> {
    if !h.is_subgroup_of(g) || !k.is_subgroup_of(g) {
        return Err(Error::Invalid("double_cosets: H and K must be subgroups of G".into()));
    }
    let elems = g.elements()?;
    let he = h.elements()?;
    let ke = k.elements()?;
    let mut membership: HashMap<Perm, usize> = HashMap::with_capacity(elems.len());
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    // elements are sorted, so the first unseen one is the minimum of its coset
    for x in &elems {
        if membership.contains_key(x) {
            continue;
        }
        let idx = reps.len();
        let mut size = 0;
        for a in &he {
            let ax = a.compose(x);
            for b in &ke {
                let y = ax.compose(b);
                if membership.insert(y, idx).is_none() {
                    size += 1;
                }
            }
        }
        reps.push(x.clone());
        sizes.push(size);
    }
    Ok(DoubleCosetDecomposition { reps, sizes, membership })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    #[test]
    fn sym3_by_transposition() {
        let g = PermGroup::symmetric(3);
        let h = PermGroup::new(3, vec![parse_cycles("(1 2)", 3).unwrap()]);
        let d = double_cosets(&g, &h, &h).unwrap();
        assert_eq!(d.sizes, vec![2, 4]);
        assert!(d.reps[0].is_identity());
    }

    #[test]
    fn whole_group_single_coset() {
        let g = PermGroup::symmetric(4);
        let d = double_cosets(&g, &g, &g).unwrap();
        assert_eq!(d.len(), 1);
        assert!(d.reps[0].is_identity());
    }

    #[test]
    fn two_transitive_gives_two() {
        let g = PermGroup::symmetric(5);
        let h = g.point_stabilizer(0);
        assert_eq!(double_cosets(&g, &h, &h).unwrap().len(), 2);
    }
}

use super::{Chain, Perm};
use crate::Error;
use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

/// A permutation group given by generators, with a lazily built stabilizer chain.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    chain: OnceLock<Chain>,
    lex_chain: OnceLock<Chain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            gens: self.gens.clone(),
            chain: self.chain.clone(),
            lex_chain: self.lex_chain.clone(),
        }
    }
}

/// Brute-force enumeration is only allowed below this order.
pub const BRUTE_FORCE_LIMIT: u128 = 5000;

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> PermGroup {
        for g in &gens {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
        }
        PermGroup { degree, gens, chain: OnceLock::new(), lex_chain: OnceLock::new() }
    }

    pub fn try_new(degree: usize, gens: Vec<Perm>) -> Result<PermGroup, Error> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        Ok(PermGroup::new(degree, gens))
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, Vec::new())
    }

    pub fn symmetric(n: usize) -> PermGroup {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_cycles(n, &[vec![0, 1]]).unwrap());
        }
        if n >= 3 {
            gens.push(Perm::from_cycles(n, &[(0..n).collect()]).unwrap());
        }
        PermGroup::new(n, gens)
    }

    pub fn alternating(n: usize) -> PermGroup {
        let gens = (2..n).map(|k| Perm::from_cycles(n, &[vec![0, 1, k]]).unwrap()).collect();
        PermGroup::new(n, gens)
    }

    pub fn cyclic(n: usize) -> PermGroup {
        let gens = if n >= 2 { vec![Perm::from_cycles(n, &[(0..n).collect()]).unwrap()] } else { vec![] };
        PermGroup::new(n, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    /// The chain with base of smallest moved points.
    pub fn chain(&self) -> &Chain {
        self.chain.get_or_init(|| Chain::new(self.degree, &self.gens, &[]))
    }

    /// The chain with base `0, 1, …, n-1`, used for lexicographic searches.
    pub fn lex_chain(&self) -> &Chain {
        self.lex_chain.get_or_init(|| {
            let base: Vec<usize> = (0..self.degree).collect();
            Chain::new(self.degree, &self.gens, &base)
        })
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain().contains(g)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.gens.iter().all(|g| other.contains(g))
    }

    pub fn orbit(&self, w: usize) -> Vec<usize> {
        orbit(&self.gens, self.degree, w)
    }

    /// All orbits, each sorted, listed by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if seen[p] {
                continue;
            }
            let mut o = self.orbit(p);
            o.sort_unstable();
            for &x in &o {
                seen[x] = true;
            }
            out.push(o);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    /// Pointwise stabilizer of `points` (in the given order).
    pub fn stabilizer(&self, points: &[usize]) -> PermGroup {
        let ch = Chain::new(self.degree, &self.gens, points);
        let gens = reduce_gens(self.degree, ch.stabilizer_gens(points.len()));
        PermGroup::new(self.degree, gens)
    }

    pub fn point_stabilizer(&self, w: usize) -> PermGroup {
        self.stabilizer(&[w])
    }

    /// Every element, in lexicographic order. Only for small groups.
    pub fn elements(&self) -> Result<Vec<Perm>, Error> {
        if self.order() > BRUTE_FORCE_LIMIT {
            return Err(Error::TooLarge(format!(
                "element enumeration needs |G| <= {BRUTE_FORCE_LIMIT}, got {}",
                self.order()
            )));
        }
        let mut e = self.chain().elements();
        e.sort();
        Ok(e)
    }

    /// Breadth-first closure under the generators. Used as an oracle.
    pub fn closure_bfs(&self, limit: usize) -> Option<Vec<Perm>> {
        let id = self.identity();
        let mut seen: HashSet<Perm> = HashSet::new();
        seen.insert(id.clone());
        let mut q = VecDeque::from([id]);
        while let Some(x) = q.pop_front() {
            for g in &self.gens {
                let y = g.compose(&x);
                if seen.insert(y.clone()) {
                    if seen.len() > limit {
                        return None;
                    }
                    q.push_back(y);
                }
            }
        }
        let mut v: Vec<Perm> = seen.into_iter().collect();
        v.sort();
        Some(v)
    }

    /// Largest `k` such that the group is transitive on ordered `k`-tuples
    /// of distinct points, and whether it is sharply so.
    pub fn transitivity_profile(&self) -> (usize, bool) {
        let n = self.degree;
        let mut k = 0;
        let mut fixed = Vec::new();
        let mut cur = self.clone();
        loop {
            let rest: Vec<usize> = (0..n).filter(|p| !fixed.contains(p)).collect();
            if rest.is_empty() {
                break;
            }
            let o = cur.orbit(rest[0]);
            if o.len() != rest.len() {
                break;
            }
            k += 1;
            fixed.push(rest[0]);
            cur = self.stabilizer(&fixed);
        }
        let falling: u128 = (0..k).map(|i| (n - i) as u128).product();
        (k, self.order() == falling)
    }

    /// Histogram of element orders. Uses the element list, so only for small groups.
    pub fn order_spectrum(&self) -> Result<Vec<(u64, usize)>, Error> {
        let mut h: HashMap<u64, usize> = HashMap::new();
        for g in self.elements()? {
            *h.entry(g.order()).or_default() += 1;
        }
        let mut v: Vec<(u64, usize)> = h.into_iter().collect();
        v.sort_unstable();
        Ok(v)
    }

    /// Lexicographically smallest element satisfying point constraints and a predicate.
    /// `constraints` maps a point to the set of images it may take.
    pub fn search_lex(
        &self,
        constraints: &[(usize, Vec<usize>)],
        accept: impl FnMut(&Perm) -> bool,
    ) -> Option<Perm> {
        super::search::search_lex(self.lex_chain(), constraints, accept)
    }

    /// Smallest element mapping `from` to `to` pointwise, if any.
    pub fn lexmin_mapping(&self, pairs: &[(usize, usize)]) -> Option<Perm> {
        let cons: Vec<(usize, Vec<usize>)> = pairs.iter().map(|&(a, b)| (a, vec![b])).collect();
        self.search_lex(&cons, |_| true)
    }

    /// Subgroup generated by `gens`, as a new group of the same degree.
    pub fn subgroup(&self, gens: Vec<Perm>) -> PermGroup {
        PermGroup::new(self.degree, gens)
    }
}

/// Orbit of `w` under `gens`, in breadth-first order.
pub(crate) fn orbit(gens: &[Perm], n: usize, w: usize) -> Vec<usize> {
    let mut seen = vec![false; n];
    seen[w] = true;
    let mut o = vec![w];
    let mut i = 0;
    while i < o.len() {
        let x = o[i];
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                o.push(y);
            }
        }
        i += 1;
    }
    o
}

/// Drops generators that lie in the group generated by the ones kept before them.
pub(crate) fn reduce_gens(n: usize, gens: Vec<Perm>) -> Vec<Perm> {
    let mut kept: Vec<Perm> = Vec::new();
    let mut ch = Chain::new(n, &[], &[]);
    let mut seen: HashSet<Perm> = HashSet::new();
    for g in gens {
        if g.is_identity() || !seen.insert(g.clone()) || ch.contains(&g) {
            continue;
        }
        kept.push(g);
        ch = Chain::new(n, &kept, &[]);
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    #[test]
    fn sym4_order() {
        let g = PermGroup::new(
            4,
            vec![parse_cycles("(1 2)", 4).unwrap(), parse_cycles("(1 2 3 4)", 4).unwrap()],
        );
        assert_eq!(g.order(), 24);
        let s = g.point_stabilizer(0);
        assert_eq!(s.order(), 6);
        assert_eq!(g.orbit(0).len(), 4);
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::trivial(3);
        assert_eq!(g.order(), 1);
        assert_eq!(g.point_stabilizer(1).order(), 1);
        assert_eq!(g.orbit(1), vec![1]);
    }

    #[test]
    fn profiles() {
        assert_eq!(PermGroup::symmetric(5).transitivity_profile(), (5, true));
        assert_eq!(PermGroup::alternating(5).transitivity_profile(), (3, true));
        assert_eq!(PermGroup::cyclic(5).transitivity_profile(), (1, true));
    }

    #[test]
    fn lex_search_finds_minimum() {
        let g = PermGroup::symmetric(4);
        let m = g.lexmin_mapping(&[(0, 2)]).unwrap();
        assert_eq!(m.images(), vec![2, 0, 1, 3]);
        let all = g.elements().unwrap();
        let inv = g.search_lex(&[(0, vec![1])], |p| p.compose(p).is_identity()).unwrap();
        let oracle = all
            .iter()
            .filter(|p| p.apply(0) == 1 && p.compose(p).is_identity())
            .min()
            .unwrap();
        assert_eq!(&inv, oracle);
    }
}

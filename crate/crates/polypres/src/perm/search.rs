use super::{Chain, Perm};

/// Depth-first search through a chain whose base is `0, 1, …, n-1`.
/// Elements are visited in increasing lexicographic order of their image
/// arrays, so the first accepted leaf is the minimum.
pub(crate) fn search_lex(
    ch: &Chain,
    constraints: &[(usize, Vec<usize>)],
    mut accept: impl FnMut(&Perm) -> bool,
) -> Option<Perm> {
    let n = ch.degree;
    assert!(
        ch.levels.len() == n && ch.levels.iter().enumerate().all(|(i, l)| l.base == i),
        "search_lex needs the full lexicographic base"
    );
    let mut allowed: Vec<Option<Vec<bool>>> = vec![None; n];
    for (x, imgs) in constraints {
        let mut set = vec![false; n];
        for &y in imgs {
            set[y] = true;
        }
        match &mut allowed[*x] {
            Some(prev) => {
                for (a, b) in prev.iter_mut().zip(set) {
                    *a = *a && b;
                }
            }
            slot @ None => *slot = Some(set),
        }
    }
    let constrained: Vec<usize> = (0..n).filter(|&x| allowed[x].is_some()).collect();
    let ids = ch.orbit_ids();
    let mut s = Search { ch, allowed: &allowed, constrained: &constrained, ids };
    s.dfs(0, Perm::identity(n), &mut accept)
}

struct Search<'a> {
    ch: &'a Chain,
    allowed: &'a [Option<Vec<bool>>],
    constrained: &'a [usize],
    ids: &'a [Vec<u32>],
}

impl Search<'_> {
    fn feasible(&self, level: usize, u: &Perm) -> bool {
        let ids = &self.ids[level];
        for &x in self.constrained {
            if x < level {
                continue;
            }
            let set = self.allowed[x].as_ref().unwrap();
            let ok = (0..ids.len()).any(|y| ids[y] == ids[x] && set[u.apply(y)]);
            if !ok {
                return false;
            }
        }
        true
    }

    fn dfs(&mut self, l: usize, u: Perm, accept: &mut impl FnMut(&Perm) -> bool) -> Option<Perm> {
        if l == self.ch.degree {
            return accept(&u).then_some(u);
        }
        let lev = &self.ch.levels[l];
        let mut cands: Vec<(usize, usize)> = lev.orbit.iter().map(|&b| (u.apply(b), b)).collect();
        cands.sort_unstable();
        for (img, b) in cands {
            if let Some(set) = &self.allowed[l] {
                if !set[img] {
                    continue;
                }
            }
            let u2 = u.compose(lev.rep(b).unwrap());
            if !self.feasible(l + 1, &u2) {
                continue;
            }
            if let Some(r) = self.dfs(l + 1, u2, accept) {
                return Some(r);
            }
        }
        None
    }
}

use super::{Perm, PermGroup};
use crate::Error;
use std::collections::{HashMap, VecDeque};

/// A finite group given by its multiplication table. Element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableGroup {
    pub name: String,
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

/// Isomorphism search is limited to groups of at most this order.
pub const ISO_LIMIT: usize = 512;

impl TableGroup {
    /// Builds from a full table `mul[a*n+b] = a·b`, checking the group axioms.
    pub fn from_table(name: impl Into<String>, n: usize, mul: Vec<u32>) -> Result<TableGroup, Error> {
        if mul.len() != n * n || n == 0 {
            return Err(Error::Invalid("table has the wrong size".into()));
        }
        if (0..n).any(|a| mul[a] as usize != a || mul[a * n] as usize != a) {
            return Err(Error::Invalid("element 0 is not the identity".into()));
        }
        for a in 0..n {
            let mut row = vec![false; n];
            for b in 0..n {
                let c = mul[a * n + b] as usize;
                if c >= n || row[c] {
                    return Err(Error::Invalid(format!("row {a} is not a permutation")));
                }
                row[c] = true;
            }
        }
        let mut inv = vec![0u32; n];
        for a in 0..n {
            inv[a] = (0..n).find(|&b| mul[a * n + b] == 0).unwrap() as u32;
        }
        let g = TableGroup { name: name.into(), n, mul, inv };
        if let Some((a, b, c)) = g.associativity_witness() {
            return Err(Error::Invalid(format!("not associative at ({a},{b},{c})")));
        }
        Ok(g)
    }

    /// Builds from a table without the associativity check (other axioms are checked).
    pub(crate) fn from_table_trusted(name: impl Into<String>, n: usize, mul: Vec<u32>) -> TableGroup {
        let mut inv = vec![0u32; n];
        for a in 0..n {
            inv[a] = (0..n).find(|&b| mul[a * n + b] == 0).expect("missing inverse") as u32;
        }
        TableGroup { name: name.into(), n, mul, inv }
    }

    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Elements sorted lexicographically, the identity first.
    pub fn from_perm_group(name: impl Into<String>, g: &PermGroup) -> Result<(TableGroup, Vec<Perm>), Error> {
        let elems = g.elements()?;
        let index: HashMap<&Perm, u32> = elems.iter().enumerate().map(|(i, p)| (p, i as u32)).collect();
        let n = elems.len();
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = index[&elems[a].compose(&elems[b])];
            }
        }
        Ok((TableGroup::from_table_trusted(name, n, mul), elems))
    }

    /// Builds from any closed set of elements with an explicit product.
    pub fn from_elements<T: Clone + Eq + std::hash::Hash>(
        name: impl Into<String>,
        elems: &[T],
        mut product: impl FnMut(&T, &T) -> T,
    ) -> Result<TableGroup, Error> {
        let index: HashMap<&T, u32> = elems.iter().enumerate().map(|(i, p)| (p, i as u32)).collect();
        let n = elems.len();
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let c = product(&elems[a], &elems[b]);
                mul[a * n + b] = *index
                    .get(&c)
                    .ok_or_else(|| Error::Invalid("element set is not closed".into()))?;
            }
        }
        TableGroup::from_table(name, n, mul)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let b = if e < 0 { self.inv(a) } else { a };
        let mut r = 0;
        for _ in 0..e.unsigned_abs() {
            r = self.mul(r, b);
        }
        r
    }

    pub fn elem_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn order_spectrum(&self) -> Vec<(usize, usize)> {
        let mut h: HashMap<usize, usize> = HashMap::new();
        for a in 0..self.n {
            *h.entry(self.elem_order(a)).or_default() += 1;
        }
        let mut v: Vec<(usize, usize)> = h.into_iter().collect();
        v.sort_unstable();
        v
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Elements of the subgroup generated by `gens`, in discovery order.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut out = vec![0];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out
    }

    /// A small generating set, chosen greedily among elements of large order.
    pub fn small_generating_set(&self) -> Vec<usize> {
        let mut cand: Vec<usize> = (1..self.n).collect();
        cand.sort_by_key(|&a| (std::cmp::Reverse(self.elem_order(a)), a));
        let mut gens = Vec::new();
        let mut inside = vec![false; self.n];
        inside[0] = true;
        for a in cand {
            if inside[a] {
                continue;
            }
            gens.push(a);
            for x in self.closure(&gens) {
                inside[x] = true;
            }
            if inside.iter().all(|&b| b) {
                break;
            }
        }
        gens
    }

    /// Regular permutation representation: `a` acts by left multiplication.
    pub fn regular_perm(&self, a: usize) -> Perm {
        Perm::from_vec_unchecked((0..self.n).map(|x| self.mul(a, x) as u32).collect())
    }

    /// Checks that `f` is a bijective homomorphism from `self` to `other`.
    pub fn is_isomorphism(&self, other: &TableGroup, f: &[usize]) -> bool {
        if f.len() != self.n || other.n != self.n {
            return false;
        }
        let mut hit = vec![false; self.n];
        for &y in f {
            if y >= other.n || hit[y] {
                return false;
            }
            hit[y] = true;
        }
        (0..self.n).all(|a| (0..self.n).all(|b| f[self.mul(a, b)] == other.mul(f[a], f[b])))
    }
}

/// Extends generator images to a map on the whole subgroup they generate.
/// Returns `None` if the extension is not a well-defined injective map.
fn extend_map(g1: &TableGroup, g2: &TableGroup, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g1.n];
    let mut used = vec![false; g2.n];
    map[0] = 0;
    used[0] = true;
    let mut q = VecDeque::from([0usize]);
    while let Some(x) = q.pop_front() {
        for (k, &s) in gens.iter().enumerate() {
            let y = g1.mul(x, s);
            let fy = g2.mul(map[x], imgs[k]);
            if map[y] == usize::MAX {
                if used[fy] {
                    return None;
                }
                map[y] = fy;
                used[fy] = true;
                q.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

/// Searches for an isomorphism `g1 → g2`, returned as an element map.
pub fn is_isomorphic(g1: &TableGroup, g2: &TableGroup) -> Result<Option<Vec<usize>>, Error> {
    if g1.n > ISO_LIMIT || g2.n > ISO_LIMIT {
        return Err(Error::TooLarge(format!("isomorphism test limited to order {ISO_LIMIT}")));
    }
    if g1.n != g2.n || g1.order_spectrum() != g2.order_spectrum() || g1.is_abelian() != g2.is_abelian() {
        return Ok(None);
    }
    let gens = g1.small_generating_set();
    let ord2: Vec<usize> = (0..g2.n).map(|a| g2.elem_order(a)).collect();
    let cands: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let o = g1.elem_order(s);
            (0..g2.n).filter(|&b| ord2[b] == o).collect()
        })
        .collect();
    let mut imgs = Vec::with_capacity(gens.len());
    Ok(backtrack(g1, g2, &gens, &cands, &mut imgs))
}

fn backtrack(
    g1: &TableGroup,
    g2: &TableGroup,
    gens: &[usize],
    cands: &[Vec<usize>],
    imgs: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let k = imgs.len();
    if k == gens.len() {
        let m = extend_map(g1, g2, gens, imgs)?;
        return m.iter().all(|&x| x != usize::MAX).then_some(m);
    }
    for &c in &cands[k] {
        imgs.push(c);
        if extend_map(g1, g2, &gens[..=k], imgs).is_some() {
            if let Some(m) = backtrack(g1, g2, gens, cands, imgs) {
                return Some(m);
            }
        }
        imgs.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> TableGroup {
        let mul = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
        TableGroup::from_table(format!("C{n}"), n, mul).unwrap()
    }

    #[test]
    fn cyclic_self_iso() {
        let c = cyclic(4);
        let m = is_isomorphic(&c, &c).unwrap().unwrap();
        assert!(c.is_isomorphism(&c, &m));
    }

    #[test]
    fn c4_vs_klein() {
        let c4 = cyclic(4);
        let mul = (0..16).map(|i| ((i / 4) ^ (i % 4)) as u32).collect();
        let v4 = TableGroup::from_table("V4", 4, mul).unwrap();
        assert!(is_isomorphic(&c4, &v4).unwrap().is_none());
    }

    #[test]
    fn bad_table_rejected() {
        assert!(TableGroup::from_table("x", 2, vec![0, 1, 1, 1]).is_err());
    }
}

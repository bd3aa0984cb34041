//! Permutations, permutation groups and the algorithms built on stabilizer chains.
//!
//! Points are `0..n` internally. Cycle notation at the text boundary is 1-based.
//! Products follow the left-action convention: `p.compose(&q)` maps `x` to `p(q(x))`.

mod chain;
mod dcoset;
mod group;
mod search;
mod subgroups;
mod table;

pub use chain::Chain;
pub use dcoset::{double_cosets, DoubleCosetDecomposition};
pub use group::{PermGroup, BRUTE_FORCE_LIMIT};
pub use subgroups::SUBGROUP_LIMIT;
pub use table::{is_isomorphic, TableGroup, ISO_LIMIT};

use crate::Error;
use std::fmt;

/// A bijection of `{0..n-1}`, stored as its image array.
///
/// The derived ordering is lexicographic on image arrays; whenever a
/// representative has to be chosen, the smallest one under this order wins.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u32).collect())
    }

    /// Builds a permutation from its image array, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Perm, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Parse(format!("not a bijection: {images:?}")));
            }
            seen[x] = true;
        }
        Ok(Perm(images.into_iter().map(|x| x as u32).collect()))
    }

    /// Like `from_images` but without the check. Callers guarantee a bijection.
    pub(crate) fn from_vec_unchecked(images: Vec<u32>) -> Perm {
        Perm(images)
    }

    /// Builds a permutation of degree `n` from 0-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Perm, Error> {
        let mut img: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for c in cycles {
            for &x in c {
                if x >= n {
                    return Err(Error::Parse(format!("point {} out of range 1..{}", x + 1, n)));
                }
                if used[x] {
                    return Err(Error::Parse(format!("repeated point {}", x + 1)));
                }
                used[x] = true;
            }
            for i in 0..c.len() {
                img[c[i]] = c[(i + 1) % c.len()];
            }
        }
        Perm::from_images(img)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize).collect()
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in compose");
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn try_compose(&self, other: &Perm) -> Result<Perm, Error> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Perm {
        let mut r = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            r[x as usize] = i as u32;
        }
        Perm(r)
    }

    pub fn pow(&self, e: i64) -> Perm {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&sq);
            }
            sq = sq.compose(&sq);
            k >>= 1;
        }
        acc
    }

    /// `x^y = y⁻¹ x y`.
    pub fn conj(&self, y: &Perm) -> Perm {
        y.inverse().compose(self).compose(y)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut l: u64 = 1;
        for s in 0..self.degree() {
            if seen[s] {
                continue;
            }
            let mut len = 0u64;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            l = lcm(l, len);
        }
        l
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        (0..self.degree()).find(|&i| self.apply(i) != i)
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest point,
    /// sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for s in 0..self.degree() {
            if seen[s] || self.apply(s) == s {
                continue;
            }
            let mut c = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    /// Extends to a larger degree by fixing the new points.
    pub fn extend(&self, n: usize) -> Perm {
        assert!(n >= self.degree());
        let mut v = self.0.clone();
        v.extend(self.degree() as u32..n as u32);
        Perm(v)
    }

    /// Restricts to `0..n`; the caller guarantees `0..n` is invariant.
    pub fn restrict(&self, n: usize) -> Perm {
        Perm(self.0[..n].to_vec())
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs = self.cycles();
        if cs.is_empty() {
            return write!(f, "()");
        }
        for c in cs {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses 1-based cycle notation such as `"(1 2)(3 4)"` or `"()"`.
/// Commas are accepted as separators inside a cycle.
pub fn parse_cycles(text: &str, n: usize) -> Result<Perm, Error> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(Error::Parse("empty permutation".into()));
    }
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(Error::Parse(format!("expected '(' at {rest:?}")));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
        let body = &rest[1..close];
        let mut c = Vec::new();
        for tok in body.split(|ch: char| ch.is_whitespace() || ch == ',') {
            if tok.is_empty() {
                continue;
            }
            let v: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("malformed point {tok:?}")))?;
            if v == 0 || v > n {
                return Err(Error::Parse(format!("point {v} out of range 1..{n}")));
            }
            c.push(v - 1);
        }
        if !c.is_empty() {
            cycles.push(c);
        }
        rest = rest[close + 1..].trim_start();
    }
    Perm::from_cycles(n, &cycles)
}

/// Parses a list of permutations separated by `;` or `,` between cycles groups,
/// e.g. `"(1 2 3);(1 2)"`.
pub fn parse_perm_list(text: &str, n: usize) -> Result<Vec<Perm>, Error> {
    text.split(';')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| parse_cycles(s, n))
        .collect()
}

//! Polygroups: table-backed ones with an axiom checker and isomorphism search,
//! double-coset polygroups of permutation groups, and function-backed
//! polygroups on `ℤ≥0 ∪ {∞}`.

mod dcpoly;
mod fnpoly;

pub use dcpoly::{double_coset_polygroup, stabilizer_polygroup};
pub use fnpoly::{hyper_power, lambda_hyperops, Lam, LSet, Variant};

use crate::perm::TableGroup;
use crate::Error;
use std::fmt;

/// Axiom checks are limited to this many elements.
pub const AXIOM_LIMIT: usize = 4096;
/// Isomorphism search is limited to this many elements.
pub const POLY_ISO_LIMIT: usize = 64;
/// The transposition condition is checked directly up to this size.
const TRANSPOSITION_LIMIT: usize = 64;

/// A finite polygroup. Elements are `0..n`; `prod[a*n+b]` is the sorted set `a∘b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygroup {
    pub labels: Vec<String>,
    pub identity: usize,
    pub bar: Vec<usize>,
    prod: Vec<Vec<u32>>,
}

impl Polygroup {
    /// `prod` lists `a∘b` for all pairs in row-major order.
    pub fn new(labels: Vec<String>, identity: usize, bar: Vec<usize>, prod: Vec<Vec<usize>>) -> Result<Polygroup, Error> {
        let n = labels.len();
        if bar.len() != n || prod.len() != n * n || identity >= n {
            return Err(Error::Invalid("polygroup data has inconsistent sizes".into()));
        }
        let mut p = Vec::with_capacity(n * n);
        for mut s in prod {
            s.sort_unstable();
            s.dedup();
            if s.is_empty() || s.iter().any(|&x| x >= n) {
                return Err(Error::Invalid("hyperproducts must be nonempty subsets".into()));
            }
            p.push(s.into_iter().map(|x| x as u32).collect());
        }
        Ok(Polygroup { labels, identity, bar, prod: p })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn op(&self, a: usize, b: usize) -> impl Iterator<Item = usize> + '_ {
        self.prod[a * self.len() + b].iter().map(|&x| x as usize)
    }

    pub fn op_set(&self, a: usize, b: usize) -> Vec<usize> {
        self.op(a, b).collect()
    }

    fn op_mask(&self, a: usize, b: usize) -> Vec<bool> {
        let mut m = vec![false; self.len()];
        for x in self.op(a, b) {
            m[x] = true;
        }
        m
    }

    /// The unique polygroup of size 2 that is not a group: `1∘1 = {0,1}`.
    pub fn p2() -> Polygroup {
        let s = |v: &[usize]| v.to_vec();
        Polygroup::new(
            vec!["0".into(), "1".into()],
            0,
            vec![0, 1],
            vec![s(&[0]), s(&[1]), s(&[1]), s(&[0, 1])],
        )
        .unwrap()
    }

    /// Size 3: `1∘1 = {0,1}`, `2∘2 = {0,1,2}`, `1∘2 = 2∘1 = {2}`.
    pub fn p3() -> Polygroup {
        let s = |v: &[usize]| v.to_vec();
        Polygroup::new(
            vec!["0".into(), "1".into(), "2".into()],
            0,
            vec![0, 1, 2],
            vec![s(&[0]), s(&[1]), s(&[2]), s(&[1]), s(&[0, 1]), s(&[2]), s(&[2]), s(&[2]), s(&[0, 1, 2])],
        )
        .unwrap()
    }

    /// A group viewed as a polygroup with singleton products.
    pub fn from_group(g: &TableGroup) -> Polygroup {
        let n = g.order();
        let prod = (0..n * n).map(|i| vec![g.mul(i / n, i % n)]).collect();
        Polygroup::new((0..n).map(|i| i.to_string()).collect(), 0, (0..n).map(|a| g.inv(a)).collect(), prod)
            .unwrap()
    }

    /// Checks every axiom and returns a report with witnesses for failures.
    pub fn check_axioms(&self) -> Result<AxiomReport, Error> {
        let n = self.len();
        if n > AXIOM_LIMIT {
            return Err(Error::TooLarge(format!("axiom check limited to {AXIOM_LIMIT} elements")));
        }
        let mut rep = AxiomReport::default();
        let e = self.identity;

        // associativity: ⋃_{v∈a∘b} v∘c = ⋃_{u∈b∘c} a∘u
        let assoc = (0..n).find_map(|a| {
            (0..n).find_map(|b| {
                (0..n).find_map(|c| {
                    let mut l = vec![false; n];
                    for v in self.op(a, b) {
                        for x in self.op(v, c) {
                            l[x] = true;
                        }
                    }
                    let mut r = vec![false; n];
                    for u in self.op(b, c) {
                        for x in self.op(a, u) {
                            r[x] = true;
                        }
                    }
                    (l != r).then(|| format!("({a}∘{b})∘{c} ≠ {a}∘({b}∘{c})"))
                })
            })
        });
        rep.push("associativity", assoc);

        let repro = (0..n).find_map(|a| {
            let mut l = vec![false; n];
            let mut r = vec![false; n];
            for u in 0..n {
                for x in self.op(u, a) {
                    l[x] = true;
                }
                for x in self.op(a, u) {
                    r[x] = true;
                }
            }
            if let Some(b) = (0..n).find(|&b| !l[b]) {
                return Some(format!("{b} ∉ E∘{a}"));
            }
            (0..n).find(|&b| !r[b]).map(|b| format!("{b} ∉ {a}∘E"))
        });
        rep.push("reproduction", repro);

        let scalar = (0..n).find_map(|a| {
            (self.op_set(a, e) != vec![a] || self.op_set(e, a) != vec![a]).then(|| format!("{a}∘e or e∘{a} ≠ {{{a}}}"))
        });
        rep.push("scalar identity", scalar);

        // b/a = {x : b ∈ x∘a} = b∘ā and a\b = {x : b ∈ a∘x} = ā∘b
        let inverse = (0..n).find_map(|a| {
            (0..n).find_map(|b| {
                let slash: Vec<bool> = (0..n).map(|x| self.op(x, a).any(|y| y == b)).collect();
                if slash != self.op_mask(b, self.bar[a]) {
                    return Some(format!("{b}/{a} ≠ {b}∘bar({a})"));
                }
                let back: Vec<bool> = (0..n).map(|x| self.op(a, x).any(|y| y == b)).collect();
                (back != self.op_mask(self.bar[a], b)).then(|| format!("{a}\\{b} ≠ bar({a})∘{b}"))
            })
        });
        rep.push("inverse", inverse);

        let bar = if self.bar[e] != e {
            Some("bar(e) ≠ e".to_string())
        } else {
            (0..n).find_map(|a| {
                if self.bar[a] >= n || self.bar[self.bar[a]] != a {
                    return Some(format!("bar is not an involution at {a}"));
                }
                if !self.op(a, self.bar[a]).any(|x| x == e) {
                    return Some(format!("e ∉ {a}∘bar({a})"));
                }
                (0..n).find_map(|b| {
                    let mut l: Vec<usize> = self.op(a, b).map(|x| self.bar[x]).collect();
                    l.sort_unstable();
                    (l != self.op_set(self.bar[b], self.bar[a])).then(|| format!("bar({a}∘{b}) ≠ bar({b})∘bar({a})"))
                })
            })
        };
        rep.push("bar involution", bar);

        // a ∈ b∘c implies b ∈ a∘c̄ and c ∈ b̄∘a
        let rev = (0..n).find_map(|b| {
            (0..n).find_map(|c| {
                self.op(b, c).find_map(|a| {
                    let ok = self.op(a, self.bar[c]).any(|x| x == b) && self.op(self.bar[b], a).any(|x| x == c);
                    (!ok).then(|| format!("{a} ∈ {b}∘{c} but reversal fails"))
                })
            })
        });
        rep.push("reversibility", rev);

        if n <= TRANSPOSITION_LIMIT {
            // (b\a) ∩ (c/d) ≠ ∅ ⇒ (a∘d) ∩ (b∘c) ≠ ∅
            let tr = (0..n).find_map(|a| {
                (0..n).find_map(|b| {
                    let back: Vec<usize> = (0..n).filter(|&x| self.op(b, x).any(|y| y == a)).collect();
                    (0..n).find_map(|c| {
                        (0..n).find_map(|d| {
                            let meet = back.iter().any(|&x| self.op(x, d).any(|y| y == c));
                            if !meet {
                                return None;
                            }
                            let ad = self.op_mask(a, d);
                            let ok = self.op(b, c).any(|y| ad[y]);
                            (!ok).then(|| format!("transposition fails at ({a},{b},{c},{d})"))
                        })
                    })
                })
            });
            rep.push("transposition", tr);
        }
        Ok(rep)
    }

    /// Finds a bijection `Φ` with `Φ(a∘b) = Φ(a)∘Φ(b)`.
    pub fn isomorphic(&self, other: &Polygroup) -> Result<Option<Vec<usize>>, Error> {
        let n = self.len();
        if n > POLY_ISO_LIMIT || other.len() > POLY_ISO_LIMIT {
            return Err(Error::TooLarge(format!("polygroup isomorphism limited to {POLY_ISO_LIMIT} elements")));
        }
        if n != other.len() {
            return Ok(None);
        }
        let inv = |p: &Polygroup, a: usize| -> (usize, bool, usize) {
            let row: usize = (0..p.len()).map(|b| p.op(a, b).count()).sum();
            (p.op(a, a).count(), p.bar[a] == a, row)
        };
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[self.identity] = other.identity;
        used[other.identity] = true;
        let order: Vec<usize> = (0..n).filter(|&a| a != self.identity).collect();
        let inv_self: Vec<_> = (0..n).map(|a| inv(self, a)).collect();
        let inv_other: Vec<_> = (0..n).map(|a| inv(other, a)).collect();
        if !self.iso_consistent(other, &map) {
            return Ok(None);
        }
        Ok(self.iso_bt(other, &order, 0, &mut map, &mut used, &inv_self, &inv_other).then_some(map))
    }

    #[allow(clippy::too_many_arguments)]
    fn iso_bt(
        &self,
        other: &Polygroup,
        order: &[usize],
        k: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        is: &[(usize, bool, usize)],
        io: &[(usize, bool, usize)],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let a = order[k];
        for b in 0..other.len() {
            if used[b] || is[a] != io[b] {
                continue;
            }
            map[a] = b;
            used[b] = true;
            if self.iso_consistent(other, map) && self.iso_bt(other, order, k + 1, map, used, is, io) {
                return true;
            }
            map[a] = usize::MAX;
            used[b] = false;
        }
        false
    }

    /// Checks all products whose inputs and outputs are already mapped.
    fn iso_consistent(&self, other: &Polygroup, map: &[usize]) -> bool {
        let n = self.len();
        for a in 0..n {
            if map[a] == usize::MAX {
                continue;
            }
            for b in 0..n {
                if map[b] == usize::MAX {
                    continue;
                }
                let img: Vec<usize> = self.op(a, b).map(|x| map[x]).collect();
                let target = other.op_set(map[a], map[b]);
                if img.iter().all(|&x| x != usize::MAX) {
                    let mut s = img;
                    s.sort_unstable();
                    if s != target {
                        return false;
                    }
                } else if img.len() != target.len() || img.iter().any(|&x| x != usize::MAX && !target.contains(&x)) {
                    return false;
                }
            }
        }
        true
    }

    /// One line per ordered pair, `a∘b = {…}`.
    pub fn table_text(&self) -> String {
        let n = self.len();
        let mut s = String::new();
        for a in 0..n {
            for b in 0..n {
                let set: Vec<String> = self.op(a, b).map(|x| self.labels[x].clone()).collect();
                s.push_str(&format!("{}∘{} = {{{}}}\n", self.labels[a], self.labels[b], set.join(", ")));
            }
        }
        s
    }

    /// Whether every hyperproduct is a singleton.
    pub fn is_group(&self) -> bool {
        self.prod.iter().all(|s| s.len() == 1)
    }
}

/// Per-axiom outcome; `None` means the axiom holds.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub entries: Vec<(String, Option<String>)>,
}

impl AxiomReport {
    fn push(&mut self, name: &str, witness: Option<String>) {
        self.entries.push((name.to_string(), witness));
    }

    pub fn ok(&self) -> bool {
        self.entries.iter().all(|(_, w)| w.is_none())
    }

    pub fn failures(&self) -> Vec<&(String, Option<String>)> {
        self.entries.iter().filter(|(_, w)| w.is_some()).collect()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, w) in &self.entries {
            match w {
                None => writeln!(f, "{name}: PASS")?,
                Some(w) => writeln!(f, "{name}: FAIL ({w})")?,
            }
        }
        Ok(())
    }
}

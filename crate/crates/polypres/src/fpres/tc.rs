use super::{Presentation, Word};
use crate::Error;

pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

const NONE: u32 = u32::MAX;

/// Result of a completed coset enumeration.
#[derive(Clone, Debug)]
pub struct CosetTable {
    /// number of live cosets, i.e. the index of the subgroup
    pub index: usize,
    /// largest number of coset rows allocated at any time
    pub cosets_used: usize,
    /// `table[c][2g]` is `c·g`, `table[c][2g+1]` is `c·g⁻¹`; coset 0 is the subgroup
    pub table: Vec<Vec<u32>>,
}

impl CosetTable {
    /// Action of generator `g` on cosets, as right multiplication.
    pub fn gen_action(&self, g: usize) -> Vec<usize> {
        self.table.iter().map(|row| row[2 * g] as usize).collect()
    }

    /// Coset reached from the subgroup coset by reading `w`.
    pub fn trace(&self, w: &Word) -> usize {
        let mut c = 0usize;
        for (g, e) in w.pairs() {
            c = self.table[c][2 * g + usize::from(e < 0)] as usize;
        }
        c
    }
}

struct Enum {
    ncols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    max_live: usize,
    high_water: usize,
    queue: Vec<u32>,
}

#[inline]
fn inv_col(c: usize) -> usize {
    c ^ 1
}

fn to_cols(w: &Word) -> Vec<usize> {
    w.pairs().map(|(g, e)| 2 * g + usize::from(e < 0)).collect()
}

impl Enum {
    fn rows(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    fn get(&self, c: u32, col: usize) -> u32 {
        self.table[c as usize * self.ncols + col]
    }

    #[inline]
    fn set(&mut self, c: u32, col: usize, v: u32) {
        self.table[c as usize * self.ncols + col] = v;
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, col: usize) -> Result<u32, Error> {
        if self.live >= self.max_live {
            return Err(Error::Overflow(self.max_live));
        }
        let d = self.rows() as u32;
        self.table.extend(std::iter::repeat_n(NONE, self.ncols));
        self.parent.push(d);
        self.live += 1;
        self.high_water = self.high_water.max(self.rows());
        self.set(c, col, d);
        self.set(d, inv_col(col), c);
        Ok(d)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut x = c;
        while self.parent[x as usize] != r {
            let nx = self.parent[x as usize];
            self.parent[x as usize] = r;
            x = nx;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi as usize] = lo;
        self.live -= 1;
        self.queue.push(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for col in 0..self.ncols {
                let d = self.get(g, col);
                if d == NONE {
                    continue;
                }
                self.set(d, inv_col(col), NONE);
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mux = self.get(mu, col);
                if mux != NONE {
                    self.merge(nu, mux);
                } else {
                    let nux = self.get(nu, inv_col(col));
                    if nux != NONE {
                        self.merge(mu, nux);
                    } else {
                        self.set(mu, col, nu);
                        self.set(nu, inv_col(col), mu);
                    }
                }
            }
        }
    }

    fn scan_and_fill(&mut self, a: u32, w: &[usize]) -> Result<(), Error> {
        if w.is_empty() {
            return Ok(());
        }
        let mut f = a;
        let mut b = a;
        let mut i = 0usize;
        let mut j = w.len();
        loop {
            while i < j {
                let nf = self.get(f, w[i]);
                if nf == NONE {
                    break;
                }
                f = nf;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i {
                let nb = self.get(b, inv_col(w[j - 1]));
                if nb == NONE {
                    break;
                }
                b = nb;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            } else if j == i + 1 {
                self.set(f, w[i], b);
                self.set(b, inv_col(w[i]), f);
                return Ok(());
            } else {
                self.define(f, w[i])?;
            }
        }
    }

    /// Renumbers live cosets consecutively, preserving their order.
    fn compact(&mut self, cursor: u32) -> u32 {
        let n = self.rows();
        let mut newnum = vec![NONE; n];
        let mut k = 0u32;
        for c in 0..n as u32 {
            if self.is_live(c) {
                newnum[c as usize] = k;
                k += 1;
            }
        }
        let mut table = Vec::with_capacity(k as usize * self.ncols);
        for c in 0..n as u32 {
            if !self.is_live(c) {
                continue;
            }
            for col in 0..self.ncols {
                let v = self.get(c, col);
                table.push(if v == NONE { NONE } else { newnum[v as usize] });
            }
        }
        self.table = table;
        self.parent = (0..k).collect();
        // the cursor itself is live at every call site
        newnum[cursor as usize]
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup` in the group
/// presented by `p` (HLT strategy). Cosets are numbered in first-touch order.
pub fn todd_coxeter(p: &Presentation, subgroup: &[Word], max_cosets: usize) -> Result<CosetTable, Error> {
    if max_cosets == 0 {
        return Err(Error::Invalid("max_cosets must be at least 1".into()));
    }
    let ncols = 2 * p.gens.len();
    let mut e = Enum {
        ncols,
        table: vec![NONE; ncols],
        parent: vec![0],
        live: 1,
        max_live: max_cosets,
        high_water: 1,
        queue: Vec::new(),
    };
    let rels: Vec<Vec<usize>> = p.relators.iter().map(to_cols).collect();
    for w in subgroup {
        let cols = to_cols(w);
        e.scan_and_fill(0, &cols)?;
    }
    let mut a: u32 = 0;
    while (a as usize) < e.rows() {
        if e.is_live(a) {
            for r in &rels {
                if !e.is_live(a) {
                    break;
                }
                e.scan_and_fill(a, r)?;
            }
            if e.is_live(a) {
                for col in 0..ncols {
                    if e.get(a, col) == NONE {
                        e.define(a, col)?;
                    }
                }
            }
        }
        a += 1;
        let dead = e.rows() - e.live;
        if dead > 4096 && dead * 2 > e.rows() && (a as usize) < e.rows() {
            // move the cursor to the next live coset before renumbering
            while (a as usize) < e.rows() && !e.is_live(a) {
                a += 1;
            }
            if (a as usize) < e.rows() {
                a = e.compact(a);
            }
        }
    }
    e.compact(0);
    let index = e.live;
    let table = (0..index)
        .map(|c| (0..ncols).map(|col| e.get(c as u32, col)).collect())
        .collect();
    Ok(CosetTable { index, cosets_used: e.high_water, table })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(gens: &[&str], rels: &[&str]) -> Presentation {
        let mut p = Presentation::new(gens.iter().map(|s| s.to_string()).collect());
        for r in rels {
            p.rel(r, None).unwrap();
        }
        p
    }

    #[test]
    fn cyclic_five() {
        let p = pres(&["a"], &["a^5"]);
        assert_eq!(todd_coxeter(&p, &[], 100).unwrap().index, 5);
    }

    #[test]
    fn sym3_and_subgroup() {
        let p = pres(&["a", "b"], &["a^2", "b^3", "(a b)^2"]);
        assert_eq!(todd_coxeter(&p, &[], 100).unwrap().index, 6);
        let a = p.word("a").unwrap();
        assert_eq!(todd_coxeter(&p, &[a], 100).unwrap().index, 3);
    }

    #[test]
    fn overflow_reported() {
        let p = pres(&["a", "b"], &["a^2", "b^3", "(a b)^7"]);
        assert!(matches!(todd_coxeter(&p, &[], 200), Err(Error::Overflow(200))));
    }

    #[test]
    fn a5_coxeter() {
        let p = pres(&["a", "b"], &["a^2", "b^3", "(a b)^5"]);
        let t = todd_coxeter(&p, &[], 10_000).unwrap();
        assert_eq!(t.index, 60);
        assert_eq!(t.trace(&Word::identity()), 0);
    }
}

//! Transitive extensions of multiply transitive groups by one point, and the
//! Mathieu groups built from them.

mod mathieu;

pub use mathieu::{mathieu, mathieu_tower, MathieuStage, MATHIEU_DEGREES};

use crate::fpres::{verify_presentation, Presentation, Strategy, VerificationReport, Word};
use crate::perm::{Perm, PermGroup};
use crate::Error;
use std::collections::{HashMap, VecDeque};
use std::fmt;

/// Bound on the elements of `G₁` enumerated for rewriting.
pub const REWRITE_LIMIT: usize = 1_000_000;

/// Data for adjoining the point `q_t` to a `(t−1)`-transitive group.
#[derive(Clone, Debug)]
pub struct WittDatum {
    /// `G` on `Ω = {0, …, n−1}`
    pub base: PermGroup,
    /// `q₁, …, q_{t−1}`
    pub q: Vec<usize>,
    /// `S₂, …, S_{t−1}` in `G`
    pub swaps: Vec<Perm>,
    /// `S_t` on `Ω ∪ {q_t}` with `q_t = n`
    pub st: Perm,
}

impl WittDatum {
    pub fn t(&self) -> usize {
        self.q.len() + 1
    }

    pub fn new_point(&self) -> usize {
        self.base.degree()
    }

    /// `H = G_{q₁…q_{t−1}}`.
    pub fn h(&self) -> PermGroup {
        self.base.stabilizer(&self.q)
    }

    /// `G₁ = G_{q₂…q_{t−1}}`.
    pub fn g1(&self) -> PermGroup {
        self.base.stabilizer(&self.q[1..])
    }

    /// `S_j` for `2 ≤ j ≤ t−1`, extended to `Ω ∪ {q_t}`.
    pub fn s(&self, j: usize) -> Perm {
        self.swaps[j - 2].extend(self.new_point() + 1)
    }
}

/// Outcome of each hypothesis of the extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittReport {
    pub items: Vec<(String, bool)>,
}

impl WittReport {
    pub fn ok(&self) -> bool {
        self.items.iter().all(|(_, b)| *b)
    }
}

impl fmt::Display for WittReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, ok) in &self.items {
            writeln!(f, "{}: {name}", if *ok { "PASS" } else { "FAIL" })?;
        }
        Ok(())
    }
}

/// Whether `x` on `Ω ∪ {q_t}` lies in the subgroup `k` of `G`.
fn in_base_subgroup(x: &Perm, k: &PermGroup) -> bool {
    let n = k.degree();
    x.apply(n) == n && k.contains(&x.restrict(n))
}

/// Checks the shape of the datum and the four hypotheses of the extension.
pub fn witt_check(w: &WittDatum) -> WittReport {
    let mut items = Vec::new();
    let n = w.new_point();
    let t = w.t();
    let q = &w.q;
    let shape_ok = w.st.degree() == n + 1
        && w.swaps.len() + 2 == t
        && w.swaps.iter().all(|s| s.degree() == n && w.base.contains(s));
    items.push(("datum shape".to_string(), shape_ok));
    if !shape_ok {
        return WittReport { items };
    }
    // q₁..q_{t−1}, q_t with 1-based names
    let qq = |i: usize| if i == t { n } else { q[i - 1] };
    for j in 2..=t {
        let s = w.s_or_st(j);
        let ok = (1..=t).all(|nu| {
            let img = s.apply(qq(nu));
            match nu {
                _ if nu == j - 1 => img == qq(j),
                _ if nu == j => img == qq(j - 1),
                _ => img == qq(nu),
            }
        });
        items.push((format!("S{j} swaps q{} and q{j}", j - 1), ok));
    }
    let h = w.h();
    let g1 = w.g1();
    let st = &w.st;
    items.push((format!("S{t}^2 in H"), in_base_subgroup(&st.pow(2), &h)));
    for j in 2..t - 1 {
        let x = w.s(j).compose(st).pow(2);
        items.push((format!("(S{j} S{t})^2 in H"), in_base_subgroup(&x, &h)));
    }
    let x = w.s(t - 1).compose(st).pow(3);
    items.push((format!("(S{} S{t})^3 in H", t - 1), in_base_subgroup(&x, &h)));
    let sti = st.inverse();
    let stable = g1.gens().iter().all(|g| {
        let g = g.extend(n + 1);
        in_base_subgroup(&st.compose(&g).compose(&sti), &g1) && in_base_subgroup(&sti.compose(&g).compose(st), &g1)
    });
    items.push((format!("S{t} G1 S{t} = G1"), stable));
    WittReport { items }
}

impl WittDatum {
    fn s_or_st(&self, j: usize) -> Perm {
        if j == self.t() {
            self.st.clone()
        } else {
            self.s(j)
        }
    }
}

/// `G̃ = ⟨G, S_t⟩` on `Ω ∪ {q_t}`, after checking the hypotheses and that
/// `G̃_{q_t} = G`.
pub fn witt_extend(w: &WittDatum) -> Result<PermGroup, Error> {
    let report = witt_check(w);
    if !report.ok() {
        return Err(Error::Invalid(format!("extension hypotheses fail:\n{report}")));
    }
    let n = w.new_point();
    let mut gens: Vec<Perm> = w.base.gens().iter().map(|g| g.extend(n + 1)).collect();
    gens.push(w.st.clone());
    let g = PermGroup::new(n + 1, gens);
    if g.order() != (n as u128 + 1) * w.base.order() || !g.is_transitive() {
        return Err(Error::Invalid("stabilizer of the new point is not G".into()));
    }
    Ok(g)
}

/// Writes elements of `G` as words in the base generators by descending
/// `G = G_{t−1} ⊃ … ⊃ G₁` with the transversals `κ` built from the swaps,
/// and looking up `G₁` by breadth-first search.
pub struct TowerRewriter {
    q: Vec<usize>,
    swaps: Vec<(Perm, Word)>,
    g1: HashMap<Perm, Word>,
    /// shortest `ξ ∈ G₁` with `ξ(q₁) = p`
    xi: HashMap<usize, (Perm, Word)>,
}

impl TowerRewriter {
    /// `g1_gens` are generators of `G₁` with their words.
    pub fn new(w: &WittDatum, swap_words: &[Word], g1_gens: &[(Perm, Word)]) -> Result<TowerRewriter, Error> {
        let n = w.new_point();
        let id = Perm::identity(n);
        let mut table: HashMap<Perm, Word> = HashMap::from([(id.clone(), Word::identity())]);
        let mut queue = VecDeque::from([id]);
        let mut xi = HashMap::new();
        let mut steps: Vec<(Perm, Word)> = Vec::new();
        for (p, wd) in g1_gens {
            steps.push((p.clone(), wd.clone()));
            steps.push((p.inverse(), wd.inverse()));
        }
        while let Some(x) = queue.pop_front() {
            let wx = table[&x].clone();
            xi.entry(x.apply(w.q[0])).or_insert_with(|| (x.clone(), wx.clone()));
            for (s, ws) in &steps {
                let y = x.compose(s);
                if !table.contains_key(&y) {
                    if table.len() >= REWRITE_LIMIT {
                        return Err(Error::TooLarge(format!("G1 has more than {REWRITE_LIMIT} elements")));
                    }
                    table.insert(y.clone(), wx.mul(ws));
                    queue.push_back(y);
                }
            }
        }
        if table.len() as u128 != w.g1().order() {
            return Err(Error::Invalid("the given elements do not generate G1".into()));
        }
        let swaps = w.swaps.iter().cloned().zip(swap_words.iter().cloned()).collect();
        Ok(TowerRewriter { q: w.q.clone(), swaps, g1: table, xi })
    }

    /// `S_{i+1} ⋯ S_j` (1-based `q` indices), mapping `q_j` to `q_i`.
    fn swap_chain(&self, i: usize, j: usize) -> (Perm, Word) {
        let n = self.swaps[0].0.degree();
        let mut p = Perm::identity(n);
        let mut w = Word::identity();
        for mu in i + 1..=j {
            let (s, ws) = &self.swaps[mu - 2];
            p = p.compose(s);
            w = w.mul(ws);
        }
        (p, w)
    }

    /// A word for `g ∈ G`, or an error if `g` is not in `G`.
    pub fn rewrite(&self, g: &Perm) -> Result<Word, Error> {
        let mut cur = g.clone();
        let mut word = Word::identity();
        for j in (2..=self.q.len()).rev() {
            let p = cur.apply(self.q[j - 1]);
            let (kappa, kw) = if let Some(i) = self.q[..j].iter().position(|&x| x == p) {
                self.swap_chain(i + 1, j)
            } else {
                let (x, xw) = self.xi.get(&p).ok_or_else(|| Error::Invalid("point outside the G1-orbit of q1".into()))?;
                let (c, cw) = self.swap_chain(1, j);
                (x.compose(&c), xw.mul(&cw))
            };
            word = word.mul(&kw);
            cur = kappa.inverse().compose(&cur);
        }
        let tail = self.g1.get(&cur).ok_or_else(|| Error::Invalid("element is not in G".into()))?;
        Ok(word.mul(tail))
    }
}

/// A presentation of `G̃` obtained from one of `G`, with its assignment.
#[derive(Clone, Debug)]
pub struct ExtendedPresentation {
    pub presentation: Presentation,
    pub assignment: Vec<Perm>,
    pub group: PermGroup,
    /// words of the base generators, spanning the subgroup `G`
    pub base_words: Vec<Word>,
    pub base_order: u128,
}

impl ExtendedPresentation {
    /// Relator check plus enumeration of the cosets of `G`, which must have
    /// index `|Ω| + 1`.
    pub fn verify(&self, max_cosets: usize) -> Result<VerificationReport, Error> {
        let strategy = Strategy::SubgroupIndex {
            words: self.base_words.clone(),
            order: self.base_order,
            label: "base".into(),
        };
        verify_presentation(&self.presentation, &self.group, &self.assignment, &strategy, max_cosets)
    }
}

/// Appends the generator `u = S_t` and the four relation families
/// `σ_ρ^u = σ_ρ'`, `[u⁻¹, S_j⁻¹] = h_j`, `u² = h` and
/// `u S_{t−1} u = S_{t−1} u λ'` with `λ' = S_t^{S_{t−1} S_t}`, each rewritten
/// into the base generators.
pub fn witt_presentation_transfer(
    base: &Presentation,
    assignment: &[Perm],
    base_order: u128,
    w: &WittDatum,
    swap_words: &[Word],
    g1_words: &[Word],
    new_gen: &str,
) -> Result<ExtendedPresentation, Error> {
    let g1_gens: Vec<(Perm, Word)> = g1_words.iter().map(|wd| (wd.eval_perm(assignment), wd.clone())).collect();
    let rw = TowerRewriter::new(w, swap_words, &g1_gens)?;
    let n = w.new_point();
    let t = w.t();
    let st = &w.st;
    let sti = st.inverse();
    let down = |x: &Perm| -> Result<Perm, Error> {
        if x.apply(n) != n {
            return Err(Error::Invalid("element moves the new point".into()));
        }
        Ok(x.restrict(n))
    };
    let mut p = base.clone();
    let u = Word::gen(p.add_gen(new_gen));
    for (sigma, sw) in &g1_gens {
        let img = down(&sti.compose(&sigma.extend(n + 1)).compose(st))?;
        p.add_eq(&sw.conj_by(&u), &rw.rewrite(&img)?, Some("transfer"));
    }
    for j in 2..t - 1 {
        let s = w.s(j);
        let hj = down(&sti.compose(&s.inverse()).compose(st).compose(&s))?;
        let lhs = u.inverse().comm(&swap_words[j - 2].inverse());
        p.add_eq(&lhs, &rw.rewrite(&hj)?, Some("transfer"));
    }
    p.add_eq(&u.pow(2), &rw.rewrite(&down(&st.pow(2))?)?, Some("transfer"));
    let s = w.s(t - 1);
    let c = s.compose(st);
    let lambda = down(&c.inverse().compose(st).compose(&c))?;
    let sw = &swap_words[t - 3];
    p.add_eq(&u.mul(sw).mul(&u), &sw.mul(&u).mul(&rw.rewrite(&lambda)?), Some("transfer"));
    let mut assign: Vec<Perm> = assignment.iter().map(|x| x.extend(n + 1)).collect();
    assign.push(st.clone());
    Ok(ExtendedPresentation {
        base_words: (0..base.gens.len()).map(Word::gen).collect(),
        presentation: p,
        assignment: assign,
        group: witt_extend(w)?,
        base_order,
    })
}

#[cfg(test)]
mod tests;

//! Group-like graphs of groups over a pair `(E, H)`: the data `(H_f, ι_f, θ_f, α)`,
//! an axiom checker, the fundamental group `𝔊` with its product `•`, the
//! construction from a pair `H ≤ G`, and the presentation of `𝔊` by type I
//! and type II relations.
//!
//! `H` is a [`TableGroup`] with identity 0 and `e` is edge 0. An element
//! `(f, ρ, λ)` of `𝔊` is stored as `(f, p, λ(p))` with `p` the smallest
//! element of the coset `ρ = pH_f`.

mod pair;
mod present;

pub use pair::{build_glgg_from_pair, PairGlgg};
pub use present::{emit_glgg_presentation, PresentationChoices};

use crate::perm::TableGroup;
use crate::polygroup::Polygroup;
use crate::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// `α` is tabulated when `|E|²·|H|` is at most this.
pub const ALPHA_MEMO_LIMIT: usize = 1_000_000;
/// Largest `|𝔊|` for which a multiplication table is built.
pub const GROUP_LIMIT: usize = 5000;
/// Group axioms are checked exhaustively up to this order, sampled above.
pub const EXHAUSTIVE_LIMIT: usize = 200;

const NONE: usize = usize::MAX;

/// An element `(f, pH_f, p ↦ λ)` of `𝔊` with `p` minimal in its coset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GElement {
    pub f: usize,
    pub rho: usize,
    pub lambda: usize,
}

#[derive(Clone)]
enum Alpha {
    Table(Arc<Vec<GElement>>),
    Source(Arc<pair::PairSource>),
}

/// A group-like graph of groups. Edge 0 is `e`.
#[derive(Clone)]
pub struct Glgg {
    pub labels: Vec<String>,
    pub bar: Vec<usize>,
    pub h: TableGroup,
    /// `H_f` as sorted element lists
    pub hf: Vec<Vec<usize>>,
    /// `ι_f`, indexed by elements of `H`; `usize::MAX` off `H_f`
    pub iota: Vec<Vec<usize>>,
    /// `θ_f`, the identity unless `f = f̄`
    pub theta: Vec<usize>,
    alpha: Alpha,
    rep: Vec<Vec<usize>>,
}

impl fmt::Debug for Glgg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Glgg").field("labels", &self.labels).field("bar", &self.bar).field("h", &self.h.order()).finish()
    }
}

/// Bounds for the checks that range over tuples.
#[derive(Clone, Copy, Debug)]
pub struct CheckBounds {
    /// exhaustive below this many tuples, otherwise this many random ones
    pub max_tuples: usize,
    pub seed: u64,
}

impl Default for CheckBounds {
    fn default() -> Self {
        CheckBounds { max_tuples: 200_000, seed: 0 }
    }
}

/// Named pass/fail items, each failure with a witness.
#[derive(Clone, Debug, Default)]
pub struct GlggReport {
    pub items: Vec<(String, Option<String>)>,
}

impl GlggReport {
    pub fn ok(&self) -> bool {
        self.items.iter().all(|(_, w)| w.is_none())
    }

    pub fn failed(&self, name: &str) -> bool {
        self.items.iter().any(|(n, w)| n == name && w.is_some())
    }

    fn push(&mut self, name: &str, witness: Option<String>) {
        self.items.push((name.to_string(), witness));
    }

    pub fn extend(&mut self, other: GlggReport) {
        self.items.extend(other.items);
    }
}

impl fmt::Display for GlggReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, w) in &self.items {
            match w {
                None => writeln!(f, "PASS: {name}")?,
                Some(w) => writeln!(f, "FAIL: {name} ({w})")?,
            }
        }
        Ok(())
    }
}

fn coset_reps(h: &TableGroup, hf: &[usize]) -> Vec<usize> {
    (0..h.order()).map(|x| hf.iter().map(|&k| h.mul(x, k)).min().unwrap_or(x)).collect()
}

impl Glgg {
    /// Assembles a graph of groups from raw data; `alpha(f, h, f′)` is
    /// tabulated once. Only shapes are validated here, see [`check_glgg_axioms`].
    pub fn new(
        labels: Vec<String>,
        bar: Vec<usize>,
        h: TableGroup,
        hf: Vec<Vec<usize>>,
        iota: Vec<Vec<usize>>,
        theta: Vec<usize>,
        alpha: impl Fn(usize, usize, usize) -> GElement,
    ) -> Result<Glgg, Error> {
        let r = labels.len();
        let n = h.order();
        if r == 0 || bar.len() != r || hf.len() != r || iota.len() != r || theta.len() != r {
            return Err(Error::Invalid("edge data has inconsistent sizes".into()));
        }
        if bar.iter().any(|&b| b >= r) || iota.iter().any(|m| m.len() != n) || theta.iter().any(|&t| t >= n) {
            return Err(Error::Invalid("edge data out of range".into()));
        }
        if hf.iter().flatten().any(|&x| x >= n) {
            return Err(Error::Invalid("H_f element out of range".into()));
        }
        if r * r * n > ALPHA_MEMO_LIMIT {
            return Err(Error::TooLarge(format!("|E|²|H| = {} exceeds {ALPHA_MEMO_LIMIT}", r * r * n)));
        }
        let rep = hf.iter().map(|s| coset_reps(&h, s)).collect();
        let mut x = Glgg { labels, bar, h, hf, iota, theta, alpha: Alpha::Table(Arc::new(Vec::new())), rep };
        let mut table = Vec::with_capacity(r * r * n);
        for f in 0..r {
            for a in 0..n {
                for f2 in 0..r {
                    let g = alpha(f, a, f2);
                    if g.f >= r || g.rho >= n || g.lambda >= n {
                        return Err(Error::Invalid("α value out of range".into()));
                    }
                    table.push(x.normalize(g.f, g.rho, g.lambda));
                }
            }
        }
        x.alpha = Alpha::Table(Arc::new(table));
        Ok(x)
    }

    /// A copy with `θ_f` replaced; `α` is kept as it is.
    pub fn with_theta(&self, f: usize, theta: usize) -> Glgg {
        let mut x = self.clone();
        x.theta[f] = theta;
        x
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_self_paired(&self, f: usize) -> bool {
        self.bar[f] == f
    }

    fn in_hf(&self, f: usize, x: usize) -> bool {
        self.hf[f].binary_search(&x).is_ok()
    }

    /// `(f, aH_f, a ↦ b)` in canonical form.
    pub fn normalize(&self, f: usize, a: usize, b: usize) -> GElement {
        let h = &self.h;
        let c = self.rep[f][a];
        let p = h.mul(h.inv(a), c);
        // λ(ap) = ι_f(p)⁻¹ λ(a)
        let ip = self.iota[f][p];
        let ip = if ip == NONE { 0 } else { ip };
        GElement { f, rho: c, lambda: h.mul(h.inv(ip), b) }
    }

    /// Whether `a` lies in the coset `ρ(𝔤)`.
    pub fn in_coset(&self, g: &GElement, a: usize) -> bool {
        self.rep[g.f][a] == g.rho
    }

    /// `λ(𝔤)(a)` for `a ∈ ρ(𝔤)`.
    pub fn value_at(&self, g: &GElement, a: usize) -> usize {
        let h = &self.h;
        debug_assert!(self.in_coset(g, a));
        let p = h.mul(h.inv(g.rho), a);
        let ip = self.iota[g.f][p];
        let ip = if ip == NONE { 0 } else { ip };
        h.mul(h.inv(ip), g.lambda)
    }

    /// Elements of the coset `ρ(𝔤)`.
    pub fn coset(&self, g: &GElement) -> Vec<usize> {
        self.hf[g.f].iter().map(|&k| self.h.mul(g.rho, k)).collect()
    }

    /// `h̃ = (e, H, 1 ↦ h)`.
    pub fn tilde_h(&self, h: usize) -> GElement {
        GElement { f: 0, rho: 0, lambda: h }
    }

    /// `f̃ = (f, H_f, 1 ↦ 1)`.
    pub fn tilde_f(&self, f: usize) -> GElement {
        GElement { f, rho: 0, lambda: 0 }
    }

    pub fn alpha(&self, f: usize, h: usize, f2: usize) -> GElement {
        match &self.alpha {
            Alpha::Table(t) => t[(f * self.h.order() + h) * self.len() + f2],
            Alpha::Source(s) => s.alpha(f, h, f2),
        }
    }

    /// `𝔤 • 𝔤′` computed with `a ∈ ρ(𝔤)` and `a′ ∈ ρ(𝔤′)`.
    pub fn multiply_with(&self, g1: &GElement, g2: &GElement, a: usize, a2: usize) -> GElement {
        let h = &self.h;
        let al = self.alpha(g1.f, h.mul(self.value_at(g1, a), a2), g2.f);
        // ap ↦ λ(α(A))(p)·λ(𝔤′)(a′) at p = ρ(α(A))
        self.normalize(al.f, h.mul(a, al.rho), h.mul(al.lambda, self.value_at(g2, a2)))
    }

    pub fn multiply(&self, g1: &GElement, g2: &GElement) -> GElement {
        self.multiply_with(g1, g2, g1.rho, g2.rho)
    }

    /// `(ε̄, λ(ρ)⁻¹, λ(p)⁻¹ ↦ (pθ_ε)⁻¹)`.
    pub fn inverse(&self, g: &GElement) -> GElement {
        let h = &self.h;
        self.normalize(self.bar[g.f], h.inv(g.lambda), h.inv(h.mul(g.rho, self.theta[g.f])))
    }

    /// Every element of `𝔊`, the identity first.
    pub fn elements(&self) -> Vec<GElement> {
        let mut out = Vec::new();
        for f in 0..self.len() {
            let mut reps: Vec<usize> = self.rep[f].clone();
            reps.sort_unstable();
            reps.dedup();
            for p in reps {
                for l in 0..self.h.order() {
                    out.push(GElement { f, rho: p, lambda: l });
                }
            }
        }
        out
    }

    /// `|𝔊| = Σ_f |H|²/|H_f|`.
    pub fn group_order(&self) -> usize {
        let n = self.h.order();
        self.hf.iter().map(|s| n * n / s.len().max(1)).sum()
    }

    /// The polygroup on `E` with `f ∘ f′ = {ε(α(f, h, f′)) : h ∈ H}`.
    pub fn polygroup(&self) -> Result<Polygroup, Error> {
        let r = self.len();
        let mut prod = Vec::with_capacity(r * r);
        for f in 0..r {
            for f2 in 0..r {
                prod.push((0..self.h.order()).map(|h| self.alpha(f, h, f2).f).collect());
            }
        }
        Polygroup::new(self.labels.clone(), 0, self.bar.clone(), prod)
    }

    pub fn show(&self, g: &GElement) -> String {
        format!("({}, {}H, {})", self.labels[g.f], g.rho, g.lambda)
    }
}

/// `𝔊` as a table group together with the element list it is indexed by.
#[derive(Clone, Debug)]
pub struct FundamentalGroup {
    pub table: TableGroup,
    pub elements: Vec<GElement>,
    pub index: HashMap<GElement, usize>,
}

/// Multiplication table of `𝔊` from `•`. Associativity is checked on every
/// triple up to order [`EXHAUSTIVE_LIMIT`] and on random triples above.
pub fn fundamental_group(x: &Glgg, bounds: &CheckBounds) -> Result<FundamentalGroup, Error> {
    let n = x.group_order();
    if n > GROUP_LIMIT {
        return Err(Error::TooLarge(format!("|𝔊| = {n} exceeds {GROUP_LIMIT}")));
    }
    let elements = x.elements();
    let index: HashMap<GElement, usize> = elements.iter().enumerate().map(|(i, g)| (*g, i)).collect();
    let rows: Vec<Vec<u32>> = elements
        .par_iter()
        .map(|a| elements.iter().map(|b| index.get(&x.multiply(a, b)).map_or(u32::MAX, |&i| i as u32)).collect())
        .collect();
    let mul: Vec<u32> = rows.into_iter().flatten().collect();
    if mul.contains(&u32::MAX) {
        return Err(Error::Invalid("product left the element set".into()));
    }
    let table = if n <= EXHAUSTIVE_LIMIT {
        TableGroup::from_table("G", n, mul)?
    } else {
        check_latin(n, &mul)?;
        let t = TableGroup::from_table_trusted("G", n, mul);
        let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
        for _ in 0..bounds.max_tuples.min(100_000) {
            let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c)) {
                return Err(Error::Invalid(format!("not associative at ({a},{b},{c})")));
            }
        }
        t
    };
    Ok(FundamentalGroup { table, elements, index })
}

fn check_latin(n: usize, mul: &[u32]) -> Result<(), Error> {
    if (0..n).any(|a| mul[a] as usize != a || mul[a * n] as usize != a) {
        return Err(Error::Invalid("the trivial element is not an identity".into()));
    }
    for a in 0..n {
        let mut row = vec![false; n];
        for &c in &mul[a * n..(a + 1) * n] {
            if std::mem::replace(&mut row[c as usize], true) {
                return Err(Error::Invalid(format!("row {a} is not a permutation")));
            }
        }
    }
    Ok(())
}

/// Checks the graph-of-groups conditions and the four axioms on `α`, plus
/// the consequences that must follow from them.
pub fn check_glgg_axioms(x: &Glgg, bounds: &CheckBounds) -> GlggReport {
    let mut rep = GlggReport::default();
    let shape = check_shape(x);
    let shape_ok = shape.ok();
    rep.extend(shape);
    if !shape_ok {
        return rep;
    }
    rep.push("graph of groups (i)", graph_i(x));
    rep.push("graph of groups (ii)", graph_ii(x));
    rep.push("graph of groups (iii)", graph_iii(x));
    rep.push("group-like (i)", alpha_i(x));
    rep.push("group-like (ii)", alpha_ii(x));
    rep.push("group-like (iii)", alpha_iii(x));
    rep.push("group-like (iv)", alpha_iv(x, bounds));
    rep.push("alpha under H_f and H_f' translation", alpha_lemma(x, bounds));
    rep
}

fn check_shape(x: &Glgg) -> GlggReport {
    let h = &x.h;
    let mut rep = GlggReport::default();
    let bar = (0..x.len()).find(|&f| x.bar[x.bar[f]] != f).map(|f| format!("bar is not an involution at {}", x.labels[f]));
    let bar = bar.or_else(|| (x.bar[0] != 0).then(|| "e is not self-paired".to_string()));
    rep.push("bar involution", bar);
    let mut sub = None;
    'f: for f in 0..x.len() {
        let s = &x.hf[f];
        if s.windows(2).any(|w| w[0] >= w[1]) || s.first() != Some(&0) {
            sub = Some(format!("H_{} is not a sorted list containing 1", x.labels[f]));
            break;
        }
        for &a in s {
            for &b in s {
                if !x.in_hf(f, h.mul(a, b)) {
                    sub = Some(format!("H_{} is not closed", x.labels[f]));
                    break 'f;
                }
            }
        }
    }
    rep.push("H_f are subgroups", sub);
    let mut iso = None;
    'f: for f in 0..x.len() {
        let fb = x.bar[f];
        if x.hf[f].len() != x.hf[fb].len() {
            iso = Some(format!("|H_{}| != |H_{}|", x.labels[f], x.labels[fb]));
            break;
        }
        let mut hit = vec![false; h.order()];
        for &a in &x.hf[f] {
            let ia = x.iota[f][a];
            if ia == NONE || !x.in_hf(fb, ia) || std::mem::replace(&mut hit[ia], true) {
                iso = Some(format!("ι_{} is not a bijection onto H_{}", x.labels[f], x.labels[fb]));
                break 'f;
            }
            for &b in &x.hf[f] {
                if x.iota[f][h.mul(a, b)] != h.mul(ia, x.iota[f][b]) {
                    iso = Some(format!("ι_{} is not multiplicative at ({a},{b})", x.labels[f]));
                    break 'f;
                }
            }
        }
    }
    rep.push("ι_f are isomorphisms", iso);
    let th = (0..x.len()).find(|&f| !x.in_hf(f, x.theta[f])).map(|f| format!("θ_{} not in H_f", x.labels[f]));
    rep.push("θ_f in H_f", th);
    rep
}

fn graph_i(x: &Glgg) -> Option<String> {
    if x.hf[0].len() != x.h.order() {
        return Some("H_e != H".into());
    }
    if x.theta[0] != 0 {
        return Some("θ_e != 1".into());
    }
    (0..x.h.order()).find(|&a| x.iota[0][a] != a).map(|a| format!("ι_e({a}) != {a}"))
}

fn graph_ii(x: &Glgg) -> Option<String> {
    for f in (0..x.len()).filter(|&f| !x.is_self_paired(f)) {
        if x.theta[f] != 0 {
            return Some(format!("θ_{} != 1", x.labels[f]));
        }
        let fb = x.bar[f];
        if let Some(&a) = x.hf[f].iter().find(|&&a| x.iota[fb][x.iota[f][a]] != a) {
            return Some(format!("ι_{} ι_{} moves {a}", x.labels[fb], x.labels[f]));
        }
    }
    None
}

fn graph_iii(x: &Glgg) -> Option<String> {
    let h = &x.h;
    for f in (0..x.len()).filter(|&f| x.is_self_paired(f)) {
        let t = x.theta[f];
        for &a in &x.hf[f] {
            let ii = x.iota[f][x.iota[f][a]];
            if ii != h.mul(h.inv(t), h.mul(a, t)) {
                return Some(format!("ι_{0}² differs from conjugation by θ_{0} at {a}", x.labels[f]));
            }
        }
        if x.iota[f][t] != t {
            return Some(format!("ι_{0}(θ_{0}) != θ_{0}", x.labels[f]));
        }
    }
    None
}

fn alpha_i(x: &Glgg) -> Option<String> {
    for f in 0..x.len() {
        for a in 0..x.h.order() {
            if x.alpha(0, a, f) != x.normalize(f, a, 0) {
                return Some(format!("α(e, {a}, {})", x.labels[f]));
            }
        }
    }
    None
}

fn alpha_ii(x: &Glgg) -> Option<String> {
    for f in 0..x.len() {
        for a in 0..x.h.order() {
            if x.alpha(f, a, 0) != x.normalize(f, 0, a) {
                return Some(format!("α({}, {a}, e)", x.labels[f]));
            }
        }
    }
    None
}

fn alpha_iii(x: &Glgg) -> Option<String> {
    (0..x.len())
        .find(|&f| x.alpha(f, 0, x.bar[f]) != x.tilde_h(x.theta[f]))
        .map(|f| format!("α({0}, 1, {0}̄) != θ̃", x.labels[f]))
}

/// Axiom (iv) at `A = (f, h, f′)`, `B = (f′, h′, f″)`, `u ∈ ρ(α(A))`, `v ∈ ρ(α(B))`.
fn alpha_iv_at(x: &Glgg, (f, a, f1): (usize, usize, usize), (a1, f2): (usize, usize), u: usize, v: usize) -> bool {
    let h = &x.h;
    let aa = x.alpha(f, a, f1);
    let ab = x.alpha(f1, a1, f2);
    let ac = x.alpha(aa.f, h.mul(x.value_at(&aa, u), a1), f2);
    let ad = x.alpha(f, h.mul(a, v), ab.f);
    let want = x.normalize(ac.f, h.mul(u, ac.rho), h.mul(ac.lambda, h.inv(x.value_at(&ab, v))));
    ad == want
}

fn alpha_iv(x: &Glgg, bounds: &CheckBounds) -> Option<String> {
    let (r, n) = (x.len(), x.h.order());
    // number of (A, B, u, v): Σ_A |H_{ε(α(A))}| · Σ_{B from f′} |H_{ε(α(B))}|
    let from: Vec<usize> =
        (0..r).map(|f1| (0..n).flat_map(|a1| (0..r).map(move |f2| (a1, f2))).map(|(a1, f2)| x.hf[x.alpha(f1, a1, f2).f].len()).sum()).collect();
    let total: usize = (0..r)
        .flat_map(|f| (0..n).flat_map(move |a| (0..r).map(move |f1| (f, a, f1))))
        .map(|(f, a, f1)| x.hf[x.alpha(f, a, f1).f].len().saturating_mul(from[f1]))
        .fold(0usize, |s, t| s.saturating_add(t));
    let show = |t: (usize, usize, usize), b: (usize, usize), u: usize, v: usize| {
        format!("A = ({}, {}, {}), B = ({}, {}, {}), u = {u}, v = {v}", x.labels[t.0], t.1, x.labels[t.2], x.labels[t.2], b.0, x.labels[b.1])
    };
    if total <= bounds.max_tuples {
        let tuples: Vec<(usize, usize, usize)> = (0..r).flat_map(|f| (0..n).flat_map(move |a| (0..r).map(move |f1| (f, a, f1)))).collect();
        tuples.par_iter().find_map_first(|&t| {
            let us = x.coset(&x.alpha(t.0, t.1, t.2));
            for a1 in 0..n {
                for f2 in 0..r {
                    let vs = x.coset(&x.alpha(t.2, a1, f2));
                    for &u in &us {
                        for &v in &vs {
                            if !alpha_iv_at(x, t, (a1, f2), u, v) {
                                return Some(show(t, (a1, f2), u, v));
                            }
                        }
                    }
                }
            }
            None
        })
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
        for _ in 0..bounds.max_tuples {
            let t = (rng.gen_range(0..r), rng.gen_range(0..n), rng.gen_range(0..r));
            let b = (rng.gen_range(0..n), rng.gen_range(0..r));
            let us = x.coset(&x.alpha(t.0, t.1, t.2));
            let vs = x.coset(&x.alpha(t.2, b.0, b.1));
            let (u, v) = (us[rng.gen_range(0..us.len())], vs[rng.gen_range(0..vs.len())]);
            if !alpha_iv_at(x, t, b, u, v) {
                return Some(show(t, b, u, v));
            }
        }
        None
    }
}

/// `α(f, ι_f(a) h b, f′) = (ε(α(A)), aρ(α(A)), ap ↦ λ(α(A))(p) ι_{f′}(b))`
/// for `a ∈ H_f`, `b ∈ H_{f′}`.
fn alpha_lemma(x: &Glgg, bounds: &CheckBounds) -> Option<String> {
    let (r, n) = (x.len(), x.h.order());
    let h = &x.h;
    let at = |f: usize, c: usize, f1: usize, a: usize, b: usize| {
        let aa = x.alpha(f, c, f1);
        let lhs = x.alpha(f, h.mul(x.iota[f][a], h.mul(c, b)), f1);
        let rhs = x.normalize(aa.f, h.mul(a, aa.rho), h.mul(aa.lambda, x.iota[f1][b]));
        (lhs != rhs).then(|| format!("f = {}, h = {c}, f' = {}, a = {a}, b = {b}", x.labels[f], x.labels[f1]))
    };
    let total: usize = (0..r).map(|f| (0..r).map(|f1| n * x.hf[f].len() * x.hf[f1].len()).sum::<usize>()).sum();
    if total <= bounds.max_tuples {
        let pairs: Vec<(usize, usize)> = (0..r).flat_map(|f| (0..r).map(move |f1| (f, f1))).collect();
        pairs.par_iter().find_map_first(|&(f, f1)| {
            for c in 0..n {
                for &a in &x.hf[f] {
                    for &b in &x.hf[f1] {
                        if let Some(w) = at(f, c, f1, a, b) {
                            return Some(w);
                        }
                    }
                }
            }
            None
        })
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed ^ 0x5eed);
        for _ in 0..bounds.max_tuples {
            let (f, c, f1) = (rng.gen_range(0..r), rng.gen_range(0..n), rng.gen_range(0..r));
            let a = x.hf[f][rng.gen_range(0..x.hf[f].len())];
            let b = x.hf[f1][rng.gen_range(0..x.hf[f1].len())];
            if let Some(w) = at(f, c, f1, a, b) {
                return Some(w);
            }
        }
        None
    }
}

/// Group-level consequences: `ẽ` is an identity, the inverse formula gives
/// two-sided inverses, `•` does not depend on the chosen coset elements,
/// `h ↦ h̃` is multiplicative, and `𝔤 = ã • ε(𝔤)~ • λ(𝔤)(a)~`.
pub fn check_group_laws(x: &Glgg, bounds: &CheckBounds) -> GlggReport {
    let mut rep = GlggReport::default();
    let h = &x.h;
    let all = x.elements();
    let e = x.tilde_h(0);
    let sample: Vec<GElement> = if all.len() <= EXHAUSTIVE_LIMIT {
        all.clone()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
        (0..EXHAUSTIVE_LIMIT).map(|_| all[rng.gen_range(0..all.len())]).collect()
    };
    let id = sample.iter().find(|g| x.multiply(g, &e) != **g || x.multiply(&e, g) != **g).map(|g| x.show(g));
    rep.push("identity element", id);
    let inv = sample
        .iter()
        .find(|g| {
            let i = x.inverse(g);
            x.multiply(g, &i) != e || x.multiply(&i, g) != e
        })
        .map(|g| x.show(g));
    rep.push("inverse formula", inv);
    let mut wd = None;
    'outer: for g1 in &sample {
        for g2 in sample.iter().take(40) {
            let base = x.multiply(g1, g2);
            for a in x.coset(g1) {
                for a2 in x.coset(g2) {
                    if x.multiply_with(g1, g2, a, a2) != base {
                        wd = Some(format!("{} • {} with a = {a}, a' = {a2}", x.show(g1), x.show(g2)));
                        break 'outer;
                    }
                }
            }
        }
    }
    rep.push("product independent of representatives", wd);
    let mut emb = None;
    'h: for a in 0..h.order() {
        for b in 0..h.order().min(64) {
            if x.multiply(&x.tilde_h(a), &x.tilde_h(b)) != x.tilde_h(h.mul(a, b)) {
                emb = Some(format!("h = {a}, h' = {b}"));
                break 'h;
            }
        }
    }
    rep.push("H embeds", emb);
    let nf = sample
        .iter()
        .find(|g| {
            x.coset(g).into_iter().any(|a| {
                let p = x.multiply(&x.multiply(&x.tilde_h(a), &x.tilde_f(g.f)), &x.tilde_h(x.value_at(g, a)));
                p != **g
            })
        })
        .map(|g| x.show(g));
    rep.push("normal form", nf);
    rep
}

/// Conditions (i)-(iii) for a morphism `(c, d)` from `x` to `y` over the
/// same `(E, H)`.
pub fn check_morphism(x: &Glgg, y: &Glgg, c: &[usize], d: &[usize]) -> GlggReport {
    let mut rep = GlggReport::default();
    let h = &x.h;
    let r = x.len();
    if y.len() != r || y.bar != x.bar || y.h != x.h || c.len() != r || d.len() != r {
        rep.push("same pair (E, H)", Some("edge sets, bars or groups differ".into()));
        return rep;
    }
    let mut i = None;
    if c[0] != 0 || d[0] != 0 {
        i = Some("c_e or d_e is not 1".to_string());
    }
    for f in 0..r {
        if i.is_some() {
            break;
        }
        if !x.is_self_paired(f) && d[f] != h.inv(c[x.bar[f]]) {
            i = Some(format!("d_{0} != c_{0}̄⁻¹", x.labels[f]));
        } else if x.is_self_paired(f) && !x.in_hf(f, h.mul(d[f], c[f])) {
            i = Some(format!("d_{0} c_{0} not in H_{0}", x.labels[f]));
        }
    }
    rep.push("morphism (i)", i);
    let mut ii = None;
    'f: for f in 0..r {
        let conj = |a: usize| h.mul(h.mul(c[f], a), h.inv(c[f]));
        let mut img: Vec<usize> = x.hf[f].iter().map(|&a| conj(a)).collect();
        img.sort_unstable();
        if img != y.hf[f] {
            ii = Some(format!("H'_{0} != c H_{0} c⁻¹", x.labels[f]));
            break;
        }
        for &a in &x.hf[f] {
            if y.iota[f][conj(a)] != h.mul(h.mul(h.inv(d[f]), x.iota[f][a]), d[f]) {
                ii = Some(format!("ι'_{} at c {a} c⁻¹", x.labels[f]));
                break 'f;
            }
        }
        if x.is_self_paired(f) {
            if !x.in_hf(f, h.mul(d[f], c[f])) {
                ii = Some(format!("d_{0} c_{0} not in H_{0}", x.labels[f]));
                break;
            }
            let t = h.mul(h.mul(c[f], x.theta[f]), h.mul(x.iota[f][h.mul(d[f], c[f])], d[f]));
            if y.theta[f] != t {
                ii = Some(format!("θ'_{}", x.labels[f]));
                break;
            }
        }
    }
    rep.push("morphism (ii)", ii);
    let mut iii = None;
    'a: for f in 0..r {
        for a in 0..h.order() {
            for f1 in 0..r {
                let aa = x.alpha(f, a, f1);
                let eps = aa.f;
                let a2 = h.mul(h.mul(h.inv(d[f]), a), h.inv(c[f1]));
                let want = y.normalize(eps, h.mul(h.mul(c[f], aa.rho), h.inv(c[eps])), h.mul(h.mul(h.inv(d[eps]), aa.lambda), d[f1]));
                if y.alpha(f, a2, f1) != want {
                    iii = Some(format!("A = ({}, {a}, {})", x.labels[f], x.labels[f1]));
                    break 'a;
                }
            }
        }
    }
    rep.push("morphism (iii)", iii);
    rep
}

/// The graph of groups with `E = {e}`, `α(e, h, e) = h̃`; its `𝔊` is `H`.
pub fn trivial_glgg(h: TableGroup) -> Glgg {
    let n = h.order();
    Glgg::new(vec!["e".into()], vec![0], h, vec![(0..n).collect()], vec![(0..n).collect()], vec![0], |_, a, _| GElement {
        f: 0,
        rho: 0,
        lambda: a,
    })
    .expect("trivial data is consistent")
}

#[cfg(test)]
mod tests;

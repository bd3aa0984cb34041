use super::{Alpha, CheckBounds, FundamentalGroup, GElement, Glgg, GlggReport, ALPHA_MEMO_LIMIT, EXHAUSTIVE_LIMIT, GROUP_LIMIT, NONE};
use crate::actpres::SectionData;
use crate::perm::{double_cosets, Perm, PermGroup, TableGroup};
use crate::polygroup::double_coset_polygroup;
use crate::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::sync::Arc;

/// The acting group with its section, used to evaluate `α` and `ζ` from
/// `σ(f) h σ(f′) = a σ(f″) b`.
pub(crate) struct PairSource {
    section: SectionData,
    sigma: Vec<Perm>,
    /// `trans[f][w]`: smallest `a ∈ H` with `a σ(f) ω₀ = w`
    trans: Vec<HashMap<usize, usize>>,
    h_elems: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl PairSource {
    /// `g = a σ(f) b ↦ (f, aH_f, a ↦ b)` for `g` in the acting group.
    fn decompose(&self, g: &Perm) -> GElement {
        let w = g.apply(self.section.omega0);
        let f = self.section.coset_of(g);
        let a = self.trans[f][&w];
        let b = self.sigma[f].inverse().compose(&self.h_elems[a].inverse()).compose(g);
        GElement { f, rho: a, lambda: self.index[&b] }
    }

    pub(crate) fn alpha(&self, f: usize, h: usize, f2: usize) -> GElement {
        self.decompose(&self.sigma[f].compose(&self.h_elems[h]).compose(&self.sigma[f2]))
    }
}

/// A graph of groups built from `H ≤ G` together with `ζ: G → 𝔊`.
#[derive(Clone)]
pub struct PairGlgg {
    pub glgg: Glgg,
    pub group: PermGroup,
    pub subgroup: PermGroup,
    /// elements of `G` in lexicographic order
    pub g_elems: Vec<Perm>,
    /// `ζ(g)` for each entry of `g_elems`
    pub zeta: Vec<GElement>,
    source: Arc<PairSource>,
}

/// The graph of groups of `H ≤ G` with `H_f = H ∩ σ(f)Hσ(f)⁻¹`,
/// `ι_f(h) = σ(f)⁻¹hσ(f)`, `θ_f = σ(f)σ(f̄)`, and `α(f, h, f′) = (f″, aH_{f″}, a ↦ b)`
/// where `σ(f)hσ(f′) = aσ(f″)b`. The section is the one of [`SectionData::build_section`].
pub fn build_glgg_from_pair(g: &PermGroup, h: &PermGroup) -> Result<PairGlgg, Error> {
    if g.order() > GROUP_LIMIT as u128 {
        return Err(Error::TooLarge(format!("|G| = {} exceeds {GROUP_LIMIT}", g.order())));
    }
    let section = SectionData::build_section(g, h)?;
    let sigma = section.cosets.iter().map(|c| c.sigma.clone()).collect();
    from_section(g, h, section, sigma)
}

fn from_section(g: &PermGroup, hgroup: &PermGroup, section: SectionData, sigma: Vec<Perm>) -> Result<PairGlgg, Error> {
    let (ht, h_elems) = TableGroup::from_perm_group("H", &section.h)?;
    let index: HashMap<Perm, usize> = h_elems.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let r = section.len();
    let n = h_elems.len();
    let bar: Vec<usize> = section.cosets.iter().map(|c| c.bar).collect();
    let omega: Vec<usize> = sigma.iter().map(|s| s.apply(section.omega0)).collect();
    let mut trans = vec![HashMap::new(); r];
    let mut hf = vec![Vec::new(); r];
    for (a, p) in h_elems.iter().enumerate() {
        for f in 0..r {
            let w = p.apply(omega[f]);
            trans[f].entry(w).or_insert(a);
            if w == omega[f] {
                hf[f].push(a);
            }
        }
    }
    let mut iota = vec![vec![NONE; n]; r];
    for f in 0..r {
        for &a in &hf[f] {
            iota[f][a] = *index
                .get(&h_elems[a].conj(&sigma[f]))
                .ok_or_else(|| Error::Invalid("σ(f)⁻¹H_fσ(f) is not inside H".into()))?;
        }
    }
    let theta = (0..r)
        .map(|f| {
            index.get(&sigma[f].compose(&sigma[bar[f]])).copied().ok_or_else(|| Error::Invalid("σ(f)σ(f̄) is not in H".into()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let labels = (0..r).map(|f| if f == 0 { "e".to_string() } else { format!("f{f}") }).collect();
    let source = Arc::new(PairSource { section, sigma, trans, h_elems, index });
    let glgg = if r * r * n <= ALPHA_MEMO_LIMIT {
        let s = source.clone();
        Glgg::new(labels, bar, ht, hf, iota, theta, move |f, a, f2| {
            s.decompose(&s.sigma[f].compose(&s.h_elems[a]).compose(&s.sigma[f2]))
        })?
    } else {
        let rep = hf.iter().map(|s| super::coset_reps(&ht, s)).collect();
        Glgg { labels, bar, h: ht, hf, iota, theta, alpha: Alpha::Source(source.clone()), rep }
    };
    let g_elems = g.elements()?;
    let zeta = g_elems.iter().map(|x| source.decompose(&source.section.lift(x))).collect();
    Ok(PairGlgg { glgg, group: g.clone(), subgroup: hgroup.clone(), g_elems, zeta, source })
}

impl PairGlgg {
    #[cfg(test)]
    pub(crate) fn source_for_tests(&self) -> Arc<PairSource> {
        self.source.clone()
    }

    pub fn section(&self) -> &SectionData {
        &self.source.section
    }

    /// `σ(f)` in the acting group.
    pub fn sigma(&self, f: usize) -> &Perm {
        &self.source.sigma[f]
    }

    /// Elements of `H` in the acting group, in table order.
    pub fn h_elements(&self) -> &[Perm] {
        &self.source.h_elems
    }

    /// Table index of an element of `H` given in the acting group.
    pub fn h_index(&self, p: &Perm) -> Option<usize> {
        self.source.index.get(p).copied()
    }

    /// `ζ(g)` for `g` in `G` on its original domain.
    pub fn zeta_of(&self, g: &Perm) -> GElement {
        self.source.decompose(&self.source.section.lift(g))
    }

    /// The same pair with the section `σ′(f) = a_f σ(f) b_f` (indices into `H`).
    pub fn retwisted(&self, a: &[usize], b: &[usize]) -> Result<PairGlgg, Error> {
        let s = &self.source;
        let r = s.sigma.len();
        if a.len() != r || b.len() != r {
            return Err(Error::Invalid("need one a_f and b_f per edge".into()));
        }
        let sigma: Vec<Perm> = (0..r).map(|f| s.h_elems[a[f]].compose(&s.sigma[f]).compose(&s.h_elems[b[f]])).collect();
        if !sigma[0].is_identity() {
            return Err(Error::Invalid("σ(e) must be 1".into()));
        }
        for f in 1..r {
            let fb = self.glgg.bar[f];
            let ok = if fb == f {
                s.index.contains_key(&sigma[f].compose(&sigma[f]))
            } else {
                sigma[fb] == sigma[f].inverse()
            };
            if !ok {
                return Err(Error::Invalid(format!("σ′ is not a section at f{f}")));
            }
        }
        from_section(&self.group, &self.subgroup, s.section.clone(), sigma)
    }

    /// `ζ` is a bijection onto `𝔊` and multiplicative, on all pairs up to
    /// order [`EXHAUSTIVE_LIMIT`] and on random pairs above.
    pub fn check_zeta(&self, bounds: &CheckBounds) -> GlggReport {
        let x = &self.glgg;
        let mut rep = GlggReport::default();
        let mut seen = self.zeta.clone();
        seen.sort_unstable();
        seen.dedup();
        let bij = (seen.len() != self.zeta.len() || seen.len() != x.group_order())
            .then(|| format!("{} distinct images, |G| = {}, |𝔊| = {}", seen.len(), self.zeta.len(), x.group_order()));
        rep.push("ζ bijective", bij);
        let pos: HashMap<&Perm, usize> = self.g_elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let n = self.g_elems.len();
        let at = |i: usize, j: usize| {
            let prod = self.g_elems[i].compose(&self.g_elems[j]);
            (self.zeta[pos[&prod]] != x.multiply(&self.zeta[i], &self.zeta[j])).then(|| format!("{} · {}", self.g_elems[i], self.g_elems[j]))
        };
        let hom = if n <= EXHAUSTIVE_LIMIT {
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find_map(|(i, j)| at(i, j))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
            (0..bounds.max_tuples.min(50_000)).find_map(|_| at(rng.gen_range(0..n), rng.gen_range(0..n)))
        };
        rep.push("ζ multiplicative", hom);
        let emb = self.subgroup.elements().ok().and_then(|hs| {
            hs.iter().find(|p| self.zeta_of(p) != x.tilde_h(self.source.index[&self.source.section.lift(p)])).map(|p| p.to_string())
        });
        rep.push("ζ restricts to h ↦ h̃", emb);
        rep
    }

    /// `ε̂: H̃\𝔊/H̃ → E` is an isomorphism of polygroups, and `E` with
    /// `f ∘ f′ = {ε(α(f, h, f′))}` matches the double-coset polygroup of `H ≤ G`.
    pub fn check_epsilon_hat(&self, fg: &FundamentalGroup) -> Result<GlggReport, Error> {
        let x = &self.glgg;
        let t = &fg.table;
        let mut rep = GlggReport::default();
        let e_poly = x.polygroup()?;
        // double cosets of H̃ in 𝔊
        let hs: Vec<usize> = (0..x.h.order()).map(|h| fg.index[&x.tilde_h(h)]).collect();
        let mut dc = vec![usize::MAX; t.order()];
        let mut reps = Vec::new();
        for g in 0..t.order() {
            if dc[g] != usize::MAX {
                continue;
            }
            for &a in &hs {
                for &b in &hs {
                    dc[t.mul(t.mul(a, g), b)] = reps.len();
                }
            }
            reps.push(g);
        }
        let eps_of = |d: usize| fg.elements[reps[d]].f;
        let mut bad = (0..t.order()).find(|&g| fg.elements[g].f != eps_of(dc[g])).map(|g| format!("ε not constant on the double coset of {g}"));
        let mut hit = vec![false; x.len()];
        for d in 0..reps.len() {
            if std::mem::replace(&mut hit[eps_of(d)], true) && bad.is_none() {
                bad = Some("two double cosets with the same ε".into());
            }
        }
        if bad.is_none() && hit.iter().any(|&b| !b) {
            bad = Some("ε̂ is not onto E".into());
        }
        if bad.is_none() {
            'p: for d1 in 0..reps.len() {
                for d2 in 0..reps.len() {
                    let mut s: Vec<usize> = hs.iter().map(|&a| eps_of(dc[t.mul(t.mul(reps[d1], a), reps[d2])])).collect();
                    s.sort_unstable();
                    s.dedup();
                    if s != e_poly.op_set(eps_of(d1), eps_of(d2)) {
                        bad = Some(format!("products of {} and {}", x.labels[eps_of(d1)], x.labels[eps_of(d2)]));
                        break 'p;
                    }
                }
                if x.bar[eps_of(d1)] != eps_of(dc[t.inv(reps[d1])]) {
                    bad = Some(format!("bar at {}", x.labels[eps_of(d1)]));
                    break;
                }
            }
        }
        rep.push("ε̂ polygroup isomorphism", bad);
        let p = double_coset_polygroup(&self.group, &self.subgroup)?;
        let d = double_cosets(&self.group, &self.subgroup, &self.subgroup)?;
        let map: Vec<usize> = d.reps.iter().map(|g| self.zeta_of(g).f).collect();
        let mut m = map.clone();
        m.sort_unstable();
        m.dedup();
        let mut cmp = (m.len() != map.len() || m.len() != x.len()).then(|| "double cosets of G do not match E".to_string());
        if cmp.is_none() {
            'q: for i in 0..p.len() {
                if map[p.bar[i]] != x.bar[map[i]] {
                    cmp = Some(format!("bar at {}", p.labels[i]));
                    break;
                }
                for j in 0..p.len() {
                    let mut s: Vec<usize> = p.op(i, j).map(|k| map[k]).collect();
                    s.sort_unstable();
                    if s != e_poly.op_set(map[i], map[j]) {
                        cmp = Some(format!("products of {} and {}", p.labels[i], p.labels[j]));
                        break 'q;
                    }
                }
            }
        }
        rep.push("E matches the double-coset polygroup of (G, H)", cmp);
        Ok(rep)
    }

    /// Axioms, group laws, `ζ` and `ε̂`, plus the table of `𝔊`.
    pub fn full_report(&self, bounds: &CheckBounds) -> Result<(GlggReport, FundamentalGroup), Error> {
        let mut rep = super::check_glgg_axioms(&self.glgg, bounds);
        rep.extend(super::check_group_laws(&self.glgg, bounds));
        let fg = super::fundamental_group(&self.glgg, bounds)?;
        rep.extend(self.check_zeta(bounds));
        rep.extend(self.check_epsilon_hat(&fg)?);
        Ok((rep, fg))
    }
}

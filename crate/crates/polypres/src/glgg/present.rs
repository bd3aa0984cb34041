use super::{Glgg, PairGlgg};
use crate::actpres::ActionPresentation;
use crate::fpres::{Presentation, Word};
use crate::perm::TableGroup;
use crate::Error;
use std::collections::{HashMap, VecDeque};

/// Everything the presentation depends on besides the graph of groups:
/// a presentation of `H` with a word for each element, the orientation
/// `E₊`, generators of each `H_f` and the representative sets `Q_{f,f′}`.
#[derive(Clone, Debug)]
pub struct PresentationChoices {
    pub h_presentation: Presentation,
    /// word for each element of `H`, in table order
    pub h_words: Vec<Word>,
    pub positive: Vec<bool>,
    pub x_names: Vec<String>,
    pub hf_gens: Vec<Vec<usize>>,
    /// `Q_{f,f′}`, representatives of `H_f\H/H_{f′}`
    pub q: HashMap<(usize, usize), Vec<usize>>,
    /// type II relations for every pair, not only `f̄ ≤ f′`
    pub all_pairs: bool,
}

fn needed_pairs(x: &Glgg, all_pairs: bool) -> Vec<(usize, usize)> {
    let r = x.len();
    let mut out = Vec::new();
    for f in 1..r {
        for f2 in 1..r {
            if all_pairs || x.bar[f] <= f2 {
                out.push((x.bar[f], f2));
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn double_coset_mins(h: &TableGroup, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; h.order()];
    let mut out = Vec::new();
    for x in 0..h.order() {
        if seen[x] {
            continue;
        }
        out.push(x);
        for &p in a {
            let px = h.mul(p, x);
            for &q in b {
                seen[h.mul(px, q)] = true;
            }
        }
    }
    out
}

fn generators_of(h: &TableGroup, elems: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; h.order()];
    inside[0] = true;
    let mut gens = Vec::new();
    for &a in elems {
        if !inside[a] {
            gens.push(a);
            for y in h.closure(&gens) {
                inside[y] = true;
            }
        }
    }
    gens
}

impl PresentationChoices {
    /// The choices made by `actpres` for the same pair: its presentation of
    /// `H` and rewriting, its orientation, the generators it uses for `H_f`,
    /// and its sets `Q`.
    pub fn from_action(ap: &ActionPresentation, pair: &PairGlgg, all_pairs: bool) -> Result<PresentationChoices, Error> {
        let s = ap.section().ok_or_else(|| Error::Invalid("presentation does not come from an action".into()))?;
        let x = &pair.glgg;
        if s.len() != x.len() || (0..x.len()).any(|f| &s.cosets[f].sigma != pair.sigma(f)) {
            return Err(Error::Invalid("the presentation uses a different section".into()));
        }
        let idx = |p: &crate::perm::Perm| pair.h_index(p).ok_or_else(|| Error::Invalid("element is not in H".into()));
        let ng = ap.h_generator_count();
        let mut hp = Presentation::new(ap.presentation.gens[..ng].to_vec());
        for i in 0..ap.h_relator_count() {
            hp.add(ap.presentation.relators[i].clone(), ap.presentation.tags[i].as_deref());
        }
        let h_words = pair.h_elements().iter().map(|p| ap.rewrite(p)).collect();
        let hf_gens = s.cosets.iter().map(|c| c.hf.gens().iter().map(idx).collect()).collect::<Result<Vec<_>, _>>()?;
        let mut q = HashMap::new();
        for (a, b) in needed_pairs(x, all_pairs) {
            q.insert((a, b), s.q(a, b).iter().map(idx).collect::<Result<Vec<_>, _>>()?);
        }
        Ok(PresentationChoices {
            h_presentation: hp,
            h_words,
            positive: s.cosets.iter().map(|c| c.positive).collect(),
            x_names: (0..x.len()).map(|f| format!("x0_{f}")).collect(),
            hf_gens,
            q,
            all_pairs,
        })
    }

    /// Choices from the data alone: a Cayley presentation of `H` on a small
    /// generating set, `f ∈ E₊` when `f ≤ f̄`, and smallest representatives.
    pub fn regular(x: &Glgg) -> PresentationChoices {
        let h = &x.h;
        let gens = h.small_generating_set();
        let mut hp = Presentation::new((1..=gens.len()).map(|i| format!("h{i}")).collect());
        let mut words: Vec<Option<Word>> = vec![None; h.order()];
        words[0] = Some(Word::identity());
        let mut queue = VecDeque::from([0usize]);
        let mut order = Vec::new();
        while let Some(a) = queue.pop_front() {
            order.push(a);
            for (i, &s) in gens.iter().enumerate() {
                let b = h.mul(a, s);
                if words[b].is_none() {
                    words[b] = Some(words[a].as_ref().unwrap().mul(&Word::gen(i)));
                    queue.push_back(b);
                }
            }
        }
        let h_words: Vec<Word> = words.into_iter().map(|w| w.expect("generating set")).collect();
        for &a in &order {
            for (i, &s) in gens.iter().enumerate() {
                hp.add_eq(&h_words[a].mul(&Word::gen(i)), &h_words[h.mul(a, s)], Some("H"));
            }
        }
        let mut q = HashMap::new();
        for (a, b) in needed_pairs(x, false) {
            q.insert((a, b), double_coset_mins(h, &x.hf[a], &x.hf[b]));
        }
        PresentationChoices {
            h_presentation: hp,
            h_words,
            positive: (0..x.len()).map(|f| f <= x.bar[f]).collect(),
            x_names: x.labels.iter().map(|l| format!("x_{l}")).collect(),
            hf_gens: x.hf.iter().map(|s| generators_of(h, s)).collect(),
            q,
            all_pairs: false,
        }
    }
}

/// Presentation of `𝔊` on `H` and `x_f` (`f ∈ E₊`, `f ≠ e`), with
/// `x_e = 1` and `x_{f̄} = x_f⁻¹`: type I relations `h x_f = x_f ι_f(h)` for
/// generators `h` of `H_f`, and type II relations
/// `x_f h x_{f′} = ρ x_{f″} λ` for `h ∈ Q_{f̄,f′}`, where `α(f, h, f′)` has
/// normal form `ρ̃ • f″~ • λ̃`. Without `all_pairs` only `f̄ ≤ f′` is used.
pub fn emit_glgg_presentation(x: &Glgg, c: &PresentationChoices) -> Result<Presentation, Error> {
    let r = x.len();
    if c.positive.len() != r || c.hf_gens.len() != r || c.x_names.len() != r || c.h_words.len() != x.h.order() {
        return Err(Error::Invalid("choices do not fit the graph of groups".into()));
    }
    if (1..r).any(|f| c.positive[f] == c.positive[x.bar[f]] && x.bar[f] != f) || (1..r).any(|f| x.bar[f] == f && !c.positive[f]) {
        return Err(Error::Invalid("orientation must pick one edge from each pair".into()));
    }
    let mut p = c.h_presentation.clone();
    let mut gen = vec![None; r];
    for f in 1..r {
        if c.positive[f] {
            gen[f] = Some(p.add_gen(&c.x_names[f]));
        }
    }
    let xw = |f: usize| -> Word {
        if f == 0 {
            Word::identity()
        } else {
            match gen[f] {
                Some(g) => Word::gen(g),
                None => Word::gen(gen[x.bar[f]].expect("paired edge is positive")).inverse(),
            }
        }
    };
    let hw = |a: usize| &c.h_words[a];
    for f in 1..r {
        if gen[f].is_none() {
            continue;
        }
        for &a in &c.hf_gens[f] {
            p.add_eq(&hw(a).mul(&xw(f)), &xw(f).mul(hw(x.iota[f][a])), Some("typeI"));
        }
    }
    for f in 1..r {
        let fb = x.bar[f];
        for f2 in 1..r {
            if !c.all_pairs && fb > f2 {
                continue;
            }
            let q = c.q.get(&(fb, f2)).ok_or_else(|| Error::Invalid(format!("missing Q for ({fb}, {f2})")))?;
            for &a in q {
                let g = x.alpha(f, a, f2);
                let l = xw(f).mul(hw(a)).mul(&xw(f2));
                let rr = hw(g.rho).mul(&xw(g.f)).mul(hw(g.lambda));
                p.add_eq(&l, &rr, Some("typeII"));
            }
        }
    }
    Ok(p)
}

//! Presentations of a group from a transitive action: the section data of
//! `H\G/H`, the normal form `g = ρ·σ(f)·λ`, and emitters for the general
//! theorem (type I and type II relations) and its 2-transitive form.
//!
//! The subgroup `H` is presented recursively down the point-stabilizer
//! tower, or from a Cayley table when explicit named generators are given.

mod section;

pub use section::{CosetData, NormalForm, SectionData, MAX_COSETS};

use crate::fpres::{verify_presentation, Presentation, Strategy, VerificationReport, Word};
use crate::perm::{Perm, PermGroup, BRUTE_FORCE_LIMIT};
use crate::Error;
use std::collections::{HashMap, VecDeque};

/// How the top-level subgroup `H` gets its presentation.
#[derive(Clone, Debug)]
pub enum HStrategy {
    /// Apply the theorem again to `H` acting on the orbit of its smallest moved point.
    Tower,
    /// Cayley-table presentation on the given named generators (`|H| <= 5000`).
    Regular(Vec<(String, Perm)>),
}

#[derive(Clone, Debug)]
enum Kind {
    Trivial,
    Regular { words: HashMap<Perm, Word> },
    Action { section: Box<SectionData>, x: Vec<Option<usize>> },
}

/// One step of the tower: the group presented by the first `ngens`
/// generators and `nrels` relators.
#[derive(Clone, Debug)]
struct Level {
    group: PermGroup,
    ngens: usize,
    nrels: usize,
    kind: Kind,
}

/// An emitted presentation together with the tower used to rewrite group
/// elements as words.
#[derive(Clone, Debug)]
pub struct ActionPresentation {
    pub presentation: Presentation,
    /// generator images on the original domain
    pub assignment: Vec<Perm>,
    levels: Vec<Level>,
    lifted: Vec<Perm>,
}

/// Options for [`emit_theorem_presentation`].
#[derive(Clone, Debug, Default)]
pub struct EmitOptions {
    /// emit type II relations for every pair, not only `f̄ ≤ f′`
    pub all_pairs: bool,
}

impl ActionPresentation {
    /// Writes `g` as a word in the generators.
    pub fn rewrite(&self, g: &Perm) -> Word {
        let top = self.levels.len() - 1;
        let g = match &self.levels[top].kind {
            Kind::Action { section, .. } if g.degree() != section.group.degree() => section.lift(g),
            _ => g.clone(),
        };
        rewrite_levels(&self.levels, top, &g)
    }

    /// Section data of the top level, if it came from an action.
    pub fn section(&self) -> Option<&SectionData> {
        match &self.levels.last()?.kind {
            Kind::Action { section, .. } => Some(section),
            _ => None,
        }
    }

    /// Number of generators belonging to the subgroup `H`.
    pub fn h_generator_count(&self) -> usize {
        let n = self.levels.len();
        if n < 2 {
            0
        } else {
            self.levels[n - 2].ngens
        }
    }

    /// Number of relators belonging to the subgroup `H`; they come first.
    pub fn h_relator_count(&self) -> usize {
        let n = self.levels.len();
        if n < 2 {
            0
        } else {
            self.levels[n - 2].nrels
        }
    }

    /// The presented group, as a permutation group on the acting domain.
    pub fn group(&self) -> &PermGroup {
        &self.levels.last().unwrap().group
    }

    /// Certifies the presentation level by level from the bottom of the tower.
    /// Levels up to `full_limit` are enumerated over the trivial subgroup;
    /// above that, over the subgroup `H` whose order was certified one level
    /// down. Returns the reports bottom-up; the last one is the top level.
    pub fn verify(&self, max_cosets: usize, full_limit: u128) -> Result<Vec<VerificationReport>, Error> {
        let mut reports: Vec<VerificationReport> = Vec::new();
        for (i, lvl) in self.levels.iter().enumerate() {
            let mut p = Presentation::new(self.presentation.gens[..lvl.ngens].to_vec());
            for j in 0..lvl.nrels {
                p.add(self.presentation.relators[j].clone(), self.presentation.tags[j].as_deref());
            }
            let assign = &self.lifted[..lvl.ngens];
            let order = lvl.group.order();
            let below = (i > 0).then(|| &self.levels[i - 1]);
            let strategy = match below {
                Some(b) if order > full_limit => Strategy::SubgroupIndex {
                    words: (0..b.ngens).map(Word::gen).collect(),
                    order: b.group.order(),
                    label: format!("H (order {})", b.group.order()),
                },
                _ => Strategy::Full,
            };
            let uses_below = matches!(strategy, Strategy::SubgroupIndex { .. });
            let mut rep = verify_presentation(&p, &lvl.group, assign, &strategy, max_cosets)?;
            if uses_below && !reports.last().is_some_and(|r| r.ok()) {
                rep.concluded_order = None;
            }
            reports.push(rep);
        }
        Ok(reports)
    }
}

fn x_word(section: &SectionData, x: &[Option<usize>], f: usize) -> Word {
    if f == 0 {
        return Word::identity();
    }
    match x[f] {
        Some(g) => Word::gen(g),
        None => Word::gen(x[section.cosets[f].bar].expect("paired coset is positive")).inverse(),
    }
}

struct Builder {
    pres: Presentation,
    lifted: Vec<Perm>,
    levels: Vec<Level>,
}

impl Builder {
    fn rewrite(&self, lvl: usize, g: &Perm) -> Word {
        rewrite_levels(&self.levels, lvl, g)
    }

    /// Tower presentation of `g` at the given depth; appends a level.
    fn tower(&mut self, g: &PermGroup, depth: usize) {
        let w = g.gens().iter().filter_map(|x| x.smallest_moved_point()).min();
        match w {
            None => self.levels.push(Level { group: g.clone(), ngens: 0, nrels: 0, kind: Kind::Trivial }),
            Some(w) => {
                let section = SectionData::for_point(g, w).expect("point of the domain");
                self.tower(&section.h, depth + 1);
                self.action(section, depth, None, false);
            }
        }
    }

    fn regular(&mut self, g: &PermGroup, named: &[(String, Perm)], tag: &str) -> Result<(), Error> {
        if g.order() > BRUTE_FORCE_LIMIT {
            return Err(Error::TooLarge(format!("Cayley presentation needs |H| <= {BRUTE_FORCE_LIMIT}")));
        }
        let base = self.pres.gens.len();
        for (name, p) in named {
            self.pres.add_gen(name);
            self.lifted.push(p.clone());
        }
        let id = g.identity();
        let mut words: HashMap<Perm, Word> = HashMap::new();
        words.insert(id.clone(), Word::identity());
        let mut queue = VecDeque::from([id]);
        let mut order = Vec::new();
        while let Some(x) = queue.pop_front() {
            order.push(x.clone());
            for (i, (_, s)) in named.iter().enumerate() {
                let y = x.compose(s);
                if !words.contains_key(&y) {
                    let wy = words[&x].mul(&Word::gen(base + i));
                    words.insert(y.clone(), wy);
                    queue.push_back(y);
                }
            }
        }
        if words.len() as u128 != g.order() {
            return Err(Error::Invalid("named generators do not generate H".into()));
        }
        for x in &order {
            for (i, (_, s)) in named.iter().enumerate() {
                let y = x.compose(s);
                let r = words[x].mul(&Word::gen(base + i)).mul(&words[&y].inverse());
                self.pres.add(r, Some(tag));
            }
        }
        self.levels.push(Level {
            group: g.clone(),
            ngens: self.pres.gens.len(),
            nrels: self.pres.relators.len(),
            kind: Kind::Regular { words },
        });
        Ok(())
    }

    /// Adds the generators `x_f` and the type I and II relations on top of
    /// the level presenting `H`.
    fn action(&mut self, section: SectionData, depth: usize, top_name: Option<&str>, all_pairs: bool) {
        let lvl = self.levels.len();
        let sub = lvl - 1;
        let r = section.len();
        let suffix = if depth == 0 { String::new() } else { format!(" level {depth}") };
        let (t1, t2, t3) = if top_name.is_some() {
            ("typeI".to_string(), "square".to_string(), "typeII".to_string())
        } else {
            (format!("typeI{suffix}"), format!("typeII{suffix}"), format!("typeII{suffix}"))
        };
        let mut x = vec![None; r];
        for (f, c) in section.cosets.iter().enumerate().skip(1) {
            if c.positive {
                let name = match top_name {
                    Some(n) => n.to_string(),
                    None => format!("x{depth}_{f}"),
                };
                x[f] = Some(self.pres.add_gen(&name));
                self.lifted.push(c.sigma.clone());
            }
        }
        let rw = |b: &Builder, g: &Perm| b.rewrite(sub, g);
        // type I: h x_f = x_f ι_f(h) for generators h of H_f
        for f in 1..r {
            let Some(xf) = x[f] else { continue };
            let xw = Word::gen(xf);
            for h in section.cosets[f].hf.gens() {
                let l = rw(self, h).mul(&xw);
                let rr = xw.mul(&rw(self, &section.iota(f, h)));
                self.pres.add_eq(&l, &rr, Some(&t1));
            }
        }
        // type II: x_f h x_{f′} = ρ_g x_{C(g)} λ_g, g = σ(f) h σ(f′)
        for f in 1..r {
            let fb = section.cosets[f].bar;
            for f2 in 1..r {
                if !all_pairs && fb > f2 {
                    continue;
                }
                for h in section.q(fb, f2) {
                    let g = section.cosets[f].sigma.compose(&h).compose(&section.cosets[f2].sigma);
                    let nf = section.normal_form(&g);
                    let l = x_word(&section, &x, f).mul(&rw(self, &h)).mul(&x_word(&section, &x, f2));
                    let rr = rw(self, &nf.rho).mul(&x_word(&section, &x, nf.coset)).mul(&rw(self, &nf.lambda));
                    let tag = if h.is_identity() && f == f2 && fb == f { &t2 } else { &t3 };
                    self.pres.add_eq(&l, &rr, Some(tag));
                }
            }
        }
        self.levels.push(Level {
            group: section.group.clone(),
            ngens: self.pres.gens.len(),
            nrels: self.pres.relators.len(),
            kind: Kind::Action { section: Box::new(section), x },
        });
    }

    fn finish(self) -> ActionPresentation {
        let top = self.levels.last().unwrap();
        let assignment = match &top.kind {
            Kind::Action { section, .. } => self.lifted.iter().map(|p| section.lower(p)).collect(),
            _ => self.lifted.clone(),
        };
        ActionPresentation { presentation: self.pres, assignment, levels: self.levels, lifted: self.lifted }
    }
}

fn rewrite_levels(levels: &[Level], lvl: usize, g: &Perm) -> Word {
    match &levels[lvl].kind {
        Kind::Trivial => Word::identity(),
        Kind::Regular { words } => words[g].clone(),
        Kind::Action { section, x } => {
            let nf = section.normal_form(g);
            rewrite_levels(levels, lvl - 1, &nf.rho)
                .mul(&x_word(section, x, nf.coset))
                .mul(&rewrite_levels(levels, lvl - 1, &nf.lambda))
        }
    }
}

fn emit(section: SectionData, h: HStrategy, top_name: Option<&str>, opts: &EmitOptions) -> Result<ActionPresentation, Error> {
    let mut b = Builder { pres: Presentation::new(Vec::new()), lifted: Vec::new(), levels: Vec::new() };
    match h {
        HStrategy::Tower => b.tower(&section.h, 1),
        HStrategy::Regular(named) => {
            let named: Vec<(String, Perm)> = named.into_iter().map(|(s, p)| (s, section.lift(&p))).collect();
            if let Some((s, _)) = named.iter().find(|(_, p)| !section.h.contains(p)) {
                return Err(Error::Invalid(format!("generator {s} is not in H")));
            }
            b.regular(&section.h, &named, "H")?;
        }
    }
    b.action(section, 0, top_name, opts.all_pairs);
    Ok(b.finish())
}

/// Presentation of `G` from its action on the orbit of `omega0`.
pub fn emit_theorem_presentation(
    g: &PermGroup,
    omega0: usize,
    h: HStrategy,
    opts: &EmitOptions,
) -> Result<ActionPresentation, Error> {
    if !g.is_transitive() {
        return Err(Error::Invalid("the action is not transitive".into()));
    }
    emit(SectionData::for_point(g, omega0)?, h, None, opts)
}

/// Presentation of `G` relative to an arbitrary subgroup `H`.
pub fn emit_for_subgroup(g: &PermGroup, hgroup: &PermGroup, h: HStrategy, opts: &EmitOptions) -> Result<ActionPresentation, Error> {
    emit(SectionData::build_section(g, hgroup)?, h, None, opts)
}

/// The 2-transitive form: `H = G_{ω₀}` plus one generator `x` with
/// `h x = x ι(h)`, `x² = θ` and `x q x = ρ′ x λ′`.
pub fn emit_2transitive_presentation(g: &PermGroup, omega0: usize, omega1: usize, h: HStrategy) -> Result<ActionPresentation, Error> {
    emit(SectionData::two_transitive(g, omega0, omega1)?, h, Some("x"), &EmitOptions::default())
}

#[cfg(test)]
mod tests;

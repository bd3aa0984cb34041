use crate::perm::{Perm, PermGroup, BRUTE_FORCE_LIMIT};
use crate::Error;
use std::collections::HashMap;

/// Largest number of double cosets handled.
pub const MAX_COSETS: usize = 4096;

/// One double coset `f = HgH`, seen as the `H`-orbit of `gω₀`.
#[derive(Clone, Debug)]
pub struct CosetData {
    /// smallest element of the double coset
    pub min: Perm,
    /// the `H`-orbit, sorted
    pub orbit: Vec<usize>,
    pub bar: usize,
    /// membership in the orientation `E₊`
    pub positive: bool,
    pub sigma: Perm,
    /// `σ(f)²` for self-paired `f`
    pub theta: Option<Perm>,
    /// `σ(f)ω₀`
    pub omega: usize,
    /// `H_f = H ∩ σ(f)Hσ(f)⁻¹`, the stabilizer of `ω₀` and `ω_f`
    pub hf: PermGroup,
    transversal: HashMap<usize, Perm>,
}

impl CosetData {
    /// The transversal `P_f`, ordered by the point each element sends `ω_f` to.
    pub fn transversal(&self) -> Vec<&Perm> {
        self.orbit.iter().map(|w| &self.transversal[w]).collect()
    }

    /// Element of `P_f` sending `ω_f` to `w`.
    pub fn rho_for(&self, w: usize) -> Option<&Perm> {
        self.transversal.get(&w)
    }
}

/// Permutation action of `G` on `Ω ⊔ G/H`, used when `H` is not a point stabilizer.
#[derive(Clone, Debug)]
pub(crate) struct CosetLift {
    pub degree: usize,
    reps: Vec<Perm>,
    coset_of: HashMap<Perm, usize>,
}

impl CosetLift {
    fn new(g: &PermGroup, h: &PermGroup) -> Result<CosetLift, Error> {
        let elems = g.elements()?;
        let he = h.elements()?;
        let mut coset_of = HashMap::with_capacity(elems.len());
        let mut reps = Vec::new();
        for x in &elems {
            if coset_of.contains_key(x) {
                continue;
            }
            for y in &he {
                coset_of.insert(x.compose(y), reps.len());
            }
            reps.push(x.clone());
        }
        Ok(CosetLift { degree: g.degree(), reps, coset_of })
    }

    pub fn lift(&self, g: &Perm) -> Perm {
        let n = self.degree;
        let mut img = g.images();
        img.extend(self.reps.iter().map(|r| n + self.coset_of[&g.compose(r)]));
        Perm::from_images(img).expect("coset action is a permutation")
    }
}

/// The choice data for `G` acting on the orbit of `ω₀` with `H = G_{ω₀}`:
/// double cosets (as `H`-orbits), section `σ`, transversals `P_f` and the
/// representative sets `Q_{f,f′}`.
///
/// Double cosets are numbered by their smallest element, so coset 0 is `H`.
/// `f ∈ E₊` when `f ≤ f̄`. Transversal and `Q` elements are the smallest in
/// their cosets.
#[derive(Clone, Debug)]
pub struct SectionData {
    pub group: PermGroup,
    pub omega0: usize,
    pub h: PermGroup,
    pub cosets: Vec<CosetData>,
    point_coset: Vec<usize>,
    q: HashMap<(usize, usize), Vec<Perm>>,
    pub(crate) lift: Option<CosetLift>,
}

impl SectionData {
    /// Section data for the stabilizer of `omega0`.
    pub fn for_point(g: &PermGroup, omega0: usize) -> Result<SectionData, Error> {
        SectionData::build(g.clone(), omega0, None, None)
    }

    /// Section data for an arbitrary subgroup `H ≤ G`. When `H` is not a
    /// point stabilizer, `G` is made to act on `Ω ⊔ G/H` (brute force).
    pub fn build_section(g: &PermGroup, h: &PermGroup) -> Result<SectionData, Error> {
        if !h.is_subgroup_of(g) {
            return Err(Error::Invalid("H is not a subgroup of G".into()));
        }
        let ho = h.order();
        let fixed = (0..g.degree()).find(|&w| h.gens().iter().all(|x| x.apply(w) == w) && g.point_stabilizer(w).order() == ho);
        match fixed {
            Some(w) => SectionData::for_point(g, w),
            None => {
                if g.order() > BRUTE_FORCE_LIMIT {
                    return Err(Error::TooLarge(format!(
                        "subgroups that are not point stabilizers need |G| <= {BRUTE_FORCE_LIMIT}"
                    )));
                }
                let lift = CosetLift::new(g, h)?;
                let ext = PermGroup::new(
                    g.degree() + lift.reps.len(),
                    g.gens().iter().map(|x| lift.lift(x)).collect(),
                );
                let w = g.degree();
                SectionData::build(ext, w, None, Some(lift))
            }
        }
    }

    /// Section data for a 2-transitive action with `σ` of the nontrivial coset
    /// set to `τ`, the smallest involution swapping `ω₀` and `ω₁` (or the
    /// smallest swapping element when there is no such involution).
    pub fn two_transitive(g: &PermGroup, omega0: usize, omega1: usize) -> Result<SectionData, Error> {
        let n = g.degree();
        if omega0 >= n || omega1 >= n || omega0 == omega1 {
            return Err(Error::Invalid("need two distinct points".into()));
        }
        let orb = g.orbit(omega0);
        if orb.len() < 2 || g.point_stabilizer(omega0).orbit(omega1).len() != orb.len() - 1 {
            return Err(Error::Invalid("action is not 2-transitive".into()));
        }
        let cons = [(omega0, vec![omega1]), (omega1, vec![omega0])];
        let tau = g
            .search_lex(&cons, |x| x.compose(x).is_identity())
            .or_else(|| g.search_lex(&cons, |_| true))
            .expect("2-transitive group swaps any two points");
        SectionData::build(g.clone(), omega0, Some(tau), None)
    }

    fn build(g: PermGroup, omega0: usize, tau: Option<Perm>, lift: Option<CosetLift>) -> Result<SectionData, Error> {
        let n = g.degree();
        if omega0 >= n {
            return Err(Error::Invalid(format!("base point {} outside degree {n}", omega0 + 1)));
        }
        let h = g.point_stabilizer(omega0);
        let gorb = g.orbit(omega0);
        let mut in_orbit = vec![false; n];
        for &w in &gorb {
            in_orbit[w] = true;
        }
        let horbits: Vec<Vec<usize>> = h.orbits().into_iter().filter(|o| in_orbit[o[0]]).collect();
        if horbits.len() > MAX_COSETS {
            return Err(Error::TooLarge(format!("{} double cosets exceed {MAX_COSETS}", horbits.len())));
        }
        let mut mins: Vec<(Perm, Vec<usize>)> = horbits
            .into_iter()
            .map(|mut o| {
                o.sort_unstable();
                let m = g.search_lex(&[(omega0, o.clone())], |_| true).expect("orbit point reachable");
                (m, o)
            })
            .collect();
        mins.sort();
        let mut point_coset = vec![usize::MAX; n];
        for (i, (_, o)) in mins.iter().enumerate() {
            for &w in o {
                point_coset[w] = i;
            }
        }
        let r = mins.len();
        let bars: Vec<usize> = mins.iter().map(|(m, _)| point_coset[m.inverse().apply(omega0)]).collect();
        let mut sigmas: Vec<Option<Perm>> = vec![None; r];
        sigmas[0] = Some(g.identity());
        for f in 1..r {
            let b = bars[f];
            if b > f {
                sigmas[b] = Some(mins[f].0.inverse());
                sigmas[f] = Some(mins[f].0.clone());
            } else if b == f {
                let s = match &tau {
                    Some(t) if r == 2 => t.clone(),
                    _ => {
                        // smallest h₁ ∈ H with h₁(gω₀) = g⁻¹ω₀ makes (g·h₁)² ∈ H
                        let m = &mins[f].0;
                        let h1 = h
                            .lexmin_mapping(&[(m.apply(omega0), m.inverse().apply(omega0))])
                            .expect("self-paired coset");
                        m.compose(&h1)
                    }
                };
                sigmas[f] = Some(s);
            }
        }
        let mut cosets = Vec::with_capacity(r);
        for (f, (m, orbit)) in mins.into_iter().enumerate() {
            let sigma = sigmas[f].take().expect("section defined");
            let omega = sigma.apply(omega0);
            let hf = h.stabilizer(&[omega]);
            let theta = (bars[f] == f).then(|| sigma.compose(&sigma));
            let mut transversal = HashMap::with_capacity(orbit.len());
            for &w in &orbit {
                let rho = h.lexmin_mapping(&[(omega, w)]).expect("orbit of H");
                transversal.insert(w, rho);
            }
            cosets.push(CosetData { min: m, orbit, bar: bars[f], positive: f <= bars[f], sigma, theta, omega, hf, transversal });
        }
        let mut q = HashMap::new();
        for a in 1..r {
            for b in a..r {
                q.insert((a, b), q_reps(&h, &cosets[a].hf, &cosets[b]));
            }
        }
        Ok(SectionData { group: g, omega0, h, cosets, point_coset, q, lift })
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Index of the double coset `C(g)`.
    pub fn coset_of(&self, g: &Perm) -> usize {
        self.point_coset[g.apply(self.omega0)]
    }

    /// `g = ρ · σ(C(g)) · λ` with `ρ ∈ P_{C(g)}` and `λ ∈ H`.
    pub fn normal_form(&self, g: &Perm) -> NormalForm {
        let w = g.apply(self.omega0);
        let f = self.point_coset[w];
        let c = &self.cosets[f];
        let rho = c.transversal[&w].clone();
        let lambda = c.sigma.inverse().compose(&rho.inverse()).compose(g);
        NormalForm { rho, coset: f, lambda }
    }

    /// `ι_f(h) = σ(f)⁻¹ h σ(f)`.
    pub fn iota(&self, f: usize, h: &Perm) -> Perm {
        h.conj(&self.cosets[f].sigma)
    }

    /// Representatives of `H_f\H/H_{f′}`; `Q_{f′,f}` is `Q_{f,f′}⁻¹` for `f ≠ f′`.
    pub fn q(&self, f: usize, f2: usize) -> Vec<Perm> {
        if f == 0 || f2 == 0 {
            return vec![self.h.identity()];
        }
        if f <= f2 {
            self.q[&(f, f2)].clone()
        } else {
            self.q[&(f2, f)].iter().map(|x| x.inverse()).collect()
        }
    }

    /// Lifts an element of the original group into the acting group.
    pub fn lift(&self, g: &Perm) -> Perm {
        match &self.lift {
            Some(l) => l.lift(g),
            None => g.clone(),
        }
    }

    /// Degree of the original permutation domain.
    pub fn base_degree(&self) -> usize {
        self.lift.as_ref().map_or(self.group.degree(), |l| l.degree)
    }

    /// Restricts an element of the acting group to the original domain.
    pub fn lower(&self, g: &Perm) -> Perm {
        g.restrict(self.base_degree())
    }
}

/// Smallest `h ∈ H` in each double coset `H_a h H_{f′}`, i.e. one per
/// `H_a`-orbit on the orbit of `f′`. The identity comes first.
fn q_reps(h: &PermGroup, ha: &PermGroup, fb: &CosetData) -> Vec<Perm> {
    let mut seen = vec![false; h.degree()];
    let mut reps = Vec::new();
    for &w in &fb.orbit {
        if seen[w] {
            continue;
        }
        let o = ha.orbit(w);
        for &x in &o {
            seen[x] = true;
        }
        reps.push(h.search_lex(&[(fb.omega, o)], |_| true).expect("orbit of H"));
    }
    reps.sort();
    reps
}

/// `g = ρ · σ(f) · λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub rho: Perm,
    pub coset: usize,
    pub lambda: Perm,
}

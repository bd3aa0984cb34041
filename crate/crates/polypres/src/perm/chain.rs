use super::Perm;
use std::collections::HashSet;

/// One level of a stabilizer chain: the group fixing all earlier base points,
/// its strong generators, and the orbit of this level's base point with
/// explicit transversal elements `u[β]` satisfying `u[β](base) = β`.
#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    pub gens: Vec<Perm>,
    pub orbit: Vec<usize>,
    /// index into `reps` per point, `usize::MAX` when outside the orbit
    pub slot: Vec<usize>,
    pub reps: Vec<Perm>,
    pub reps_inv: Vec<Perm>,
}

impl Level {
    fn new(base: usize, n: usize) -> Level {
        let mut slot = vec![usize::MAX; n];
        slot[base] = 0;
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            slot,
            reps: vec![Perm::identity(n)],
            reps_inv: vec![Perm::identity(n)],
        }
    }

    pub fn rep(&self, x: usize) -> Option<&Perm> {
        let s = self.slot[x];
        (s != usize::MAX).then(|| &self.reps[s])
    }

    pub fn rep_inv(&self, x: usize) -> Option<&Perm> {
        let s = self.slot[x];
        (s != usize::MAX).then(|| &self.reps_inv[s])
    }

    /// Closes the orbit under the current generators.
    fn grow_orbit(&mut self) {
        let mut i = 0;
        while i < self.orbit.len() {
            let b = self.orbit[i];
            for g in &self.gens {
                let c = g.apply(b);
                if self.slot[c] == usize::MAX {
                    let u = g.compose(&self.reps[self.slot[b]]);
                    self.slot[c] = self.reps.len();
                    self.reps_inv.push(u.inverse());
                    self.reps.push(u);
                    self.orbit.push(c);
                }
            }
            i += 1;
        }
    }
}

/// A deterministic stabilizer chain built by Schreier–Sims.
///
/// The base starts with the requested prefix and is then extended by
/// the smallest point moved by a residue.
#[derive(Clone, Debug)]
pub struct Chain {
    pub(crate) degree: usize,
    pub(crate) levels: Vec<Level>,
    orbit_ids: std::sync::OnceLock<Vec<Vec<u32>>>,
}

impl Chain {
    pub fn new(degree: usize, gens: &[Perm], base_prefix: &[usize]) -> Chain {
        let mut ch = Chain {
            degree,
            levels: base_prefix.iter().map(|&b| Level::new(b, degree)).collect(),
            orbit_ids: std::sync::OnceLock::new(),
        };
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if gens.is_empty() {
            return ch;
        }
        for g in &gens {
            if ch.levels.iter().all(|l| g.apply(l.base) == l.base) {
                let b = g.smallest_moved_point().unwrap();
                ch.levels.push(Level::new(b, degree));
            }
        }
        ch.levels[0].gens = gens;
        ch.levels[0].grow_orbit();
        // levels below the top start with the generators that fix earlier base points
        for i in 1..ch.levels.len() {
            let bases: Vec<usize> = ch.levels[..i].iter().map(|l| l.base).collect();
            let inherited: Vec<Perm> = ch.levels[0]
                .gens
                .iter()
                .filter(|g| bases.iter().all(|&b| g.apply(b) == b))
                .cloned()
                .collect();
            ch.levels[i].gens = inherited;
            ch.levels[i].grow_orbit();
        }
        ch.complete();
        ch
    }

    /// Sifts `g` starting at level `from`. Returns the residue and the level
    /// at which sifting stopped (`levels.len()` if it passed every level).
    pub(crate) fn sift_from(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (i, l) in self.levels.iter().enumerate().skip(from) {
            let b = h.apply(l.base);
            match l.rep_inv(b) {
                None => return (h, i),
                Some(ui) => h = ui.compose(&h),
            }
        }
        (h, self.levels.len())
    }

    fn complete(&mut self) {
        let mut tested: HashSet<(usize, usize, usize)> = HashSet::new();
        let mut i = self.levels.len();
        while i > 0 {
            let lvl = i - 1;
            let mut restart: Option<usize> = None;
            'scan: for oi in 0..self.levels[lvl].orbit.len() {
                for gi in 0..self.levels[lvl].gens.len() {
                    let beta = self.levels[lvl].orbit[oi];
                    if !tested.insert((lvl, beta, gi)) {
                        continue;
                    }
                    let l = &self.levels[lvl];
                    let s = &l.gens[gi];
                    let u = l.rep(beta).unwrap();
                    let ui = l.rep_inv(s.apply(beta)).unwrap();
                    let sch = ui.compose(s).compose(u);
                    if sch.is_identity() {
                        continue;
                    }
                    let (res, stop) = self.sift_from(&sch, lvl + 1);
                    if stop == self.levels.len() && res.is_identity() {
                        continue;
                    }
                    let mut stop = stop;
                    if stop == self.levels.len() {
                        let b = res.smallest_moved_point().unwrap();
                        self.levels.push(Level::new(b, self.degree));
                        stop = self.levels.len() - 1;
                    }
                    for j in lvl + 1..=stop {
                        self.levels[j].gens.push(res.clone());
                        self.levels[j].grow_orbit();
                    }
                    restart = Some(stop + 1);
                    break 'scan;
                }
            }
            match restart {
                Some(j) => i = j,
                None => i -= 1,
            }
        }
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, stop) = self.sift_from(g, 0);
        stop == self.levels.len() && h.is_identity()
    }

    /// For each level, the orbit id of every point under that level's group.
    pub(crate) fn orbit_ids(&self) -> &Vec<Vec<u32>> {
        self.orbit_ids.get_or_init(|| {
            let mut out = Vec::with_capacity(self.levels.len() + 1);
            for l in &self.levels {
                out.push(orbit_partition(&l.gens, self.degree));
            }
            out.push((0..self.degree as u32).collect());
            out
        })
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Strong generators of the stabilizer of the first `k` base points.
    pub fn stabilizer_gens(&self, k: usize) -> Vec<Perm> {
        self.levels.get(k).map(|l| l.gens.clone()).unwrap_or_default()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// All group elements, as products of transversal elements.
    pub fn elements(&self) -> Vec<Perm> {
        let mut out = vec![Perm::identity(self.degree)];
        for l in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * l.reps.len());
            for u in &l.reps {
                for g in &out {
                    next.push(u.compose(g));
                }
            }
            out = next;
        }
        out
    }

    /// Writes `g` as `u_0 u_1 … u_k` with `u_i` transversal elements, returning
    /// the orbit points selected at each level. `None` if `g` is not a member.
    pub fn factor(&self, g: &Perm) -> Option<Vec<usize>> {
        let mut h = g.clone();
        let mut pts = Vec::with_capacity(self.levels.len());
        for l in &self.levels {
            let b = h.apply(l.base);
            let ui = l.rep_inv(b)?;
            pts.push(b);
            h = ui.compose(&h);
        }
        h.is_identity().then_some(pts)
    }
}

fn orbit_partition(gens: &[Perm], n: usize) -> Vec<u32> {
    let mut id = vec![u32::MAX; n];
    let mut next = 0u32;
    for p in 0..n {
        if id[p] != u32::MAX {
            continue;
        }
        for x in super::group::orbit(gens, n, p) {
            id[x] = next;
        }
        next += 1;
    }
    id
}

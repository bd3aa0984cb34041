//! Deformations `G_φ = (G, ∘_φ)` of a group by an action `φ: G → Aut(G)` on
//! itself, with `g₁ ∘_φ g₂ = g₁ · φ(g₁)⁻¹(g₂)`; deformation graphs of small
//! orders; the Zassenhaus groups `M(q²)` and their presentations.

mod catalog;
mod graph;
mod zassenhaus;

pub use catalog::{class_count, cyclic, dihedral, direct_product, groups_of_order, metacyclic, semidirect, CATALOG_LIMIT};
pub use graph::{classify, deformation_graph, DeformGraph};
pub use zassenhaus::{
    construct_mq2, deformed_gl2, emit_deform_presentation, k_table, DeformPart, DeformPresentation, TwistedGl2,
};

use crate::perm::TableGroup;
use crate::Error;
use rayon::prelude::*;
use std::collections::VecDeque;

/// An action of a table group on itself by automorphisms; `phi[g][h] = φ(g)(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfAction {
    pub base: TableGroup,
    phi: Vec<Vec<usize>>,
}

/// Extends generator images to a homomorphism from `g` into any group,
/// checking consistency along every Cayley-graph edge.
pub fn extend_hom<T: Clone + PartialEq>(
    g: &TableGroup,
    gens: &[usize],
    imgs: &[T],
    id: T,
    mul: impl Fn(&T, &T) -> T,
) -> Option<Vec<T>> {
    let mut map: Vec<Option<T>> = vec![None; g.order()];
    map[0] = Some(id);
    let mut q = VecDeque::from([0usize]);
    while let Some(x) = q.pop_front() {
        let fx = map[x].clone().unwrap();
        for (s, img) in gens.iter().zip(imgs) {
            let y = g.mul(x, *s);
            let fy = mul(&fx, img);
            match &map[y] {
                None => {
                    map[y] = Some(fy);
                    q.push_back(y);
                }
                Some(old) if *old != fy => return None,
                _ => {}
            }
        }
    }
    map.into_iter().collect()
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

fn is_automorphism(g: &TableGroup, f: &[usize]) -> bool {
    g.is_isomorphism(g, f)
}

/// All automorphisms of `g` as element maps, identity first. Brute force over
/// images of a small generating set.
pub fn automorphisms(g: &TableGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    let gens = g.small_generating_set();
    let cands: Vec<Vec<usize>> =
        gens.iter().map(|&s| (1..n).filter(|&b| g.elem_order(b) == g.elem_order(s)).collect()).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; gens.len()];
    if gens.is_empty() {
        return vec![vec![0]];
    }
    loop {
        let imgs: Vec<usize> = idx.iter().zip(&cands).map(|(&i, c)| c[i]).collect();
        if let Some(m) = extend_hom(g, &gens, &imgs, 0, |&a, &b| g.mul(a, b)) {
            if is_automorphism(g, &m) {
                out.push(m);
            }
        }
        // odometer
        let mut k = 0;
        loop {
            if k == idx.len() {
                out.sort();
                return out;
            }
            idx[k] += 1;
            if idx[k] < cands[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

impl SelfAction {
    /// Validates that every `φ(g)` is an automorphism and `φ` is a homomorphism.
    pub fn new(base: TableGroup, phi: Vec<Vec<usize>>) -> Result<SelfAction, Error> {
        let n = base.order();
        if phi.len() != n || phi.iter().any(|f| f.len() != n) {
            return Err(Error::Invalid("action table has the wrong size".into()));
        }
        if let Some(g) = (0..n).find(|&g| !is_automorphism(&base, &phi[g])) {
            return Err(Error::Invalid(format!("φ({g}) is not an automorphism")));
        }
        for a in 0..n {
            for b in 0..n {
                if phi[base.mul(a, b)] != compose(&phi[a], &phi[b]) {
                    return Err(Error::Invalid(format!("φ is not a homomorphism at ({a},{b})")));
                }
            }
        }
        Ok(SelfAction { base, phi })
    }

    /// Extends automorphisms given on generators.
    pub fn from_generators(base: TableGroup, gens: &[usize], imgs: &[Vec<usize>]) -> Result<SelfAction, Error> {
        let id: Vec<usize> = (0..base.order()).collect();
        let phi = extend_hom(&base, gens, imgs, id, |a, b| compose(a, b))
            .ok_or_else(|| Error::Invalid("generator images do not define a homomorphism".into()))?;
        SelfAction::new(base, phi)
    }

    /// `φ₀`, the trivial action.
    pub fn trivial(base: TableGroup) -> SelfAction {
        let n = base.order();
        SelfAction { phi: vec![(0..n).collect(); n], base }
    }

    /// `φ₁`, conjugation `h ↦ g h g⁻¹`.
    pub fn conjugation(base: TableGroup) -> SelfAction {
        let n = base.order();
        let phi = (0..n).map(|g| (0..n).map(|h| base.mul(base.mul(g, h), base.inv(g))).collect()).collect();
        SelfAction { phi, base }
    }

    pub fn apply(&self, g: usize, h: usize) -> usize {
        self.phi[g][h]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.phi
    }

    /// `g₁ ∘_φ g₂ = g₁ · φ(g₁)⁻¹(g₂)`.
    pub fn circ(&self, g1: usize, g2: usize) -> usize {
        let b = &self.base;
        b.mul(g1, self.phi[b.inv(g1)][g2])
    }

    /// `I(g) = φ(g)(g)⁻¹`.
    pub fn right_inverse(&self, g: usize) -> usize {
        self.base.inv(self.phi[g][g])
    }

    /// Checks `φ(φ(g⁻¹)(h)) = φ(g⁻¹hg)` for all `g, h`; returns a failing pair.
    pub fn admissibility_witness(&self) -> Option<(usize, usize)> {
        let b = &self.base;
        let n = b.order();
        for g in 0..n {
            let gi = b.inv(g);
            for h in 0..n {
                if self.phi[self.phi[gi][h]] != self.phi[b.mul(b.mul(gi, h), g)] {
                    return Some((g, h));
                }
            }
        }
        None
    }

    pub fn is_admissible(&self) -> bool {
        self.admissibility_witness().is_none()
    }

    /// The kernel of `φ`.
    pub fn kernel(&self) -> Vec<usize> {
        let n = self.base.order();
        (0..n).filter(|&g| self.phi[g].iter().enumerate().all(|(i, &x)| i == x)).collect()
    }

    /// `G_φ` as a table group on the same carrier.
    pub fn deform_group(&self) -> Result<TableGroup, Error> {
        if let Some((g, h)) = self.admissibility_witness() {
            return Err(Error::Invalid(format!("action is not admissible at g={g}, h={h}")));
        }
        let n = self.base.order();
        let mul = (0..n * n).map(|i| self.circ(i / n, i % n) as u32).collect();
        TableGroup::from_table(format!("{}_phi", self.base.name), n, mul)
    }

    /// The action `^θφ(g) = θ ∘ φ(θ⁻¹ g) ∘ θ⁻¹` of an automorphism `θ`.
    pub fn twist(&self, theta: &[usize]) -> SelfAction {
        let n = theta.len();
        let mut inv = vec![0usize; n];
        for (i, &x) in theta.iter().enumerate() {
            inv[x] = i;
        }
        let phi = (0..n).map(|g| compose(theta, &compose(&self.phi[inv[g]], &inv))).collect();
        SelfAction { base: self.base.clone(), phi }
    }
}

/// Every admissible action of `g` on itself (the set `𝒜_ad(G)`), found by
/// extending generator images in `Aut(G)`.
pub fn enumerate_admissible(g: &TableGroup) -> Result<Vec<SelfAction>, Error> {
    enumerate_actions(g, true)
}

/// Every homomorphism `G → Aut(G)`, admissible or not when `admissible_only` is false.
pub fn enumerate_actions(g: &TableGroup, admissible_only: bool) -> Result<Vec<SelfAction>, Error> {
    if g.order() > CATALOG_LIMIT {
        return Err(Error::TooLarge(format!("action enumeration limited to order {CATALOG_LIMIT}")));
    }
    let auts = automorphisms(g);
    let gens = g.small_generating_set();
    let n = g.order();
    let id: Vec<usize> = (0..n).collect();
    // automorphism orders
    let aut_order = |a: &Vec<usize>| {
        let mut x = a.clone();
        let mut k = 1;
        while x != id {
            x = compose(&x, a);
            k += 1;
        }
        k
    };
    let cands: Vec<Vec<&Vec<usize>>> = gens
        .iter()
        .map(|&s| {
            let o = g.elem_order(s);
            auts.iter().filter(|a| o.is_multiple_of(aut_order(a))).collect()
        })
        .collect();
    // the subgroup generated by each prefix of the generators, as a table
    let prefixes: Vec<Prefix> = (0..gens.len())
        .map(|k| {
            let sub = g.closure(&gens[..=k]);
            let local = gens[..=k].iter().map(|x| sub.iter().position(|y| y == x).unwrap()).collect();
            let mut pos = vec![usize::MAX; n];
            for (i, &x) in sub.iter().enumerate() {
                pos[x] = i;
            }
            Prefix { table: sub_table(g, &sub), local, elems: sub, pos }
        })
        .collect();
    let ctx = Search { g, gens: &gens, cands: &cands, prefixes: &prefixes, id: &id, admissible_only };
    let first = cands.first().cloned().unwrap_or_default();
    if gens.is_empty() {
        return Ok(vec![SelfAction::trivial(g.clone())]);
    }
    let out = first
        .par_iter()
        .map(|c| {
            let mut out = Vec::new();
            let mut imgs = vec![(*c).clone()];
            if ctx.prefix_ok(&imgs) {
                ctx.run(&mut imgs, &mut out);
            }
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Ok(out)
}

struct Prefix {
    table: TableGroup,
    local: Vec<usize>,
    elems: Vec<usize>,
    pos: Vec<usize>,
}

struct Search<'a> {
    g: &'a TableGroup,
    gens: &'a [usize],
    cands: &'a [Vec<&'a Vec<usize>>],
    prefixes: &'a [Prefix],
    id: &'a [usize],
    admissible_only: bool,
}

impl Search<'_> {
    /// The images so far must define a homomorphism on the subgroup they generate.
    /// When only admissible actions are wanted, the admissibility identity is
    /// also checked wherever both sides stay inside that subgroup.
    fn prefix_ok(&self, imgs: &[Vec<usize>]) -> bool {
        let pre = &self.prefixes[imgs.len() - 1];
        let Some(map) = extend_hom(&pre.table, &pre.local, imgs, self.id.to_vec(), |a, b| compose(a, b)) else {
            return false;
        };
        if !self.admissible_only {
            return true;
        }
        let g = self.g;
        pre.elems.iter().all(|&x| {
            let xi = g.inv(x);
            let phi_xi = &map[pre.pos[xi]];
            pre.elems.iter().all(|&h| {
                let y = pre.pos[phi_xi[h]];
                y == usize::MAX || map[y] == map[pre.pos[g.mul(g.mul(xi, h), x)]]
            })
        })
    }

    fn run(&self, imgs: &mut Vec<Vec<usize>>, out: &mut Vec<SelfAction>) {
        let k = imgs.len();
        if k == self.gens.len() {
            let phi = extend_hom(self.g, self.gens, imgs, self.id.to_vec(), |a, b| compose(a, b))
                .expect("checked on the last prefix");
            let a = SelfAction { base: self.g.clone(), phi };
            if !self.admissible_only || a.is_admissible() {
                out.push(a);
            }
            return;
        }
        for c in &self.cands[k] {
            imgs.push((*c).clone());
            if self.prefix_ok(imgs) {
                self.run(imgs, out);
            }
            imgs.pop();
        }
    }
}

fn sub_table(g: &TableGroup, sub: &[usize]) -> TableGroup {
    let m = sub.len();
    let mut pos = vec![usize::MAX; g.order()];
    for (i, &x) in sub.iter().enumerate() {
        pos[x] = i;
    }
    let mul = (0..m * m).map(|i| pos[g.mul(sub[i / m], sub[i % m])] as u32).collect();
    TableGroup::from_table_trusted("sub", m, mul)
}

/// An action of `G` on `H` by automorphisms, `omega[g][h]`.
#[derive(Clone, Debug)]
pub struct CrossAction {
    pub g: TableGroup,
    pub h: TableGroup,
    pub omega: Vec<Vec<usize>>,
}

impl CrossAction {
    pub fn from_generators(g: TableGroup, h: TableGroup, gens: &[usize], imgs: &[Vec<usize>]) -> Result<CrossAction, Error> {
        let id: Vec<usize> = (0..h.order()).collect();
        let omega = extend_hom(&g, gens, imgs, id, |a, b| compose(a, b))
            .ok_or_else(|| Error::Invalid("ω is not a homomorphism".into()))?;
        if omega.iter().any(|w| !h.is_isomorphism(&h, w)) {
            return Err(Error::Invalid("ω does not act by automorphisms".into()));
        }
        Ok(CrossAction { g, h, omega })
    }

    /// Extends `η` from generators by `η(x·s) = η(x) · ω(x)(η(s))`.
    pub fn extend_cocycle(&self, gens: &[usize], imgs: &[usize]) -> Result<Vec<usize>, Error> {
        let n = self.g.order();
        let mut eta = vec![usize::MAX; n];
        eta[0] = 0;
        let mut q = VecDeque::from([0usize]);
        while let Some(x) = q.pop_front() {
            for (s, &e) in gens.iter().zip(imgs) {
                let y = self.g.mul(x, *s);
                let v = self.h.mul(eta[x], self.omega[x][e]);
                if eta[y] == usize::MAX {
                    eta[y] = v;
                    q.push_back(y);
                } else if eta[y] != v {
                    return Err(Error::Invalid("generator images do not define a cocycle".into()));
                }
            }
        }
        Ok(eta)
    }

    pub fn is_cocycle(&self, eta: &[usize]) -> bool {
        let (g, h) = (&self.g, &self.h);
        (0..g.order()).all(|a| (0..g.order()).all(|b| eta[g.mul(a, b)] == h.mul(eta[a], self.omega[a][eta[b]])))
    }

    /// The kernel `Δ` of the action.
    pub fn kernel(&self) -> Vec<usize> {
        (0..self.g.order()).filter(|&g| self.omega[g].iter().enumerate().all(|(i, &x)| i == x)).collect()
    }

    /// The self-action `φ(g₁)(g₂) = η⁻¹(ω(g₁)(η(g₂)))` induced by a bijective cocycle.
    pub fn induced_action(&self, eta: &[usize]) -> Result<SelfAction, Error> {
        let inv = invert(eta, self.h.order())?;
        let n = self.g.order();
        let phi = (0..n).map(|a| (0..n).map(|b| inv[self.omega[a][eta[b]]]).collect()).collect();
        SelfAction::new(self.g.clone(), phi)
    }
}

fn invert(f: &[usize], n: usize) -> Result<Vec<usize>, Error> {
    let mut inv = vec![usize::MAX; n];
    for (i, &x) in f.iter().enumerate() {
        if x >= n || inv[x] != usize::MAX {
            return Err(Error::Invalid("η is not bijective".into()));
        }
        inv[x] = i;
    }
    if f.len() != n {
        return Err(Error::Invalid("η is not bijective".into()));
    }
    Ok(inv)
}

/// Checks `η⁻¹(ω(g₁)(η(g₂))) · g₁ · g₂⁻¹ · g₁⁻¹ ∈ Δ` for all `g₁, g₂`, where `Δ`
/// is the kernel of `ω`. When it holds, the induced action is checked to be
/// admissible with `η: G_φ → H` an isomorphism.
pub fn check_deformation_pair_cocycle(act: &CrossAction, eta: &[usize]) -> Result<bool, Error> {
    let (g, h) = (&act.g, &act.h);
    let inv = invert(eta, h.order())?;
    if !act.is_cocycle(eta) {
        return Err(Error::Invalid("η is not a 1-cocycle".into()));
    }
    let mut in_delta = vec![false; g.order()];
    for d in act.kernel() {
        in_delta[d] = true;
    }
    let holds = (0..g.order()).all(|a| {
        (0..g.order()).all(|b| {
            let x = inv[act.omega[a][eta[b]]];
            let y = g.mul(g.mul(g.mul(x, a), g.inv(b)), g.inv(a));
            in_delta[y]
        })
    });
    if holds {
        let phi = act.induced_action(eta)?;
        let gphi = phi.deform_group()?;
        if !gphi.is_isomorphism(h, eta) {
            return Err(Error::Invalid("condition holds but η is not an isomorphism G_φ → H".into()));
        }
    }
    Ok(holds)
}

#[cfg(test)]
mod tests;

use super::{witt_check, witt_extend, witt_presentation_transfer, ExtendedPresentation, WittDatum, WittReport};
use crate::deform::{emit_deform_presentation, DeformPart};
use crate::ffield::Field;
use crate::fpres::{verify_presentation, Presentation, Strategy, VerificationReport, Word};
use crate::matgrp::{emit_family_presentation, Domain, PointSet, PresFamily};
use crate::perm::{Perm, PermGroup};
use crate::Error;

pub const MATHIEU_DEGREES: [usize; 5] = [11, 12, 22, 23, 24];

/// One step of a Mathieu tower: the extension datum, the extended group and
/// its presentation (the previous presentation plus one generator).
#[derive(Clone, Debug)]
pub struct MathieuStage {
    pub name: String,
    pub datum: WittDatum,
    pub group: PermGroup,
    pub presentation: Presentation,
    pub assignment: Vec<Perm>,
    pub labels: Vec<String>,
    pub base_presentation: Presentation,
    pub base_assignment: Vec<Perm>,
    pub swap_words: Vec<Word>,
    pub g1_words: Vec<Word>,
    pub new_gen: String,
}

impl MathieuStage {
    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    pub fn check(&self) -> WittReport {
        witt_check(&self.datum)
    }

    /// Relator check and enumeration of the cosets of the previous stage,
    /// whose order is taken from its permutation model.
    pub fn verify(&self, max_cosets: usize) -> Result<VerificationReport, Error> {
        let strategy = Strategy::SubgroupIndex {
            words: (0..self.base_presentation.gens.len()).map(Word::gen).collect(),
            order: self.datum.base.order(),
            label: format!("<{}>", self.base_presentation.gens.join(",")),
        };
        verify_presentation(&self.presentation, &self.group, &self.assignment, &strategy, max_cosets)
    }

    /// The same extension with relations produced by rewriting in the
    /// permutation model instead of the transcribed ones.
    pub fn transfer(&self) -> Result<ExtendedPresentation, Error> {
        witt_presentation_transfer(
            &self.base_presentation,
            &self.base_assignment,
            self.datum.base.order(),
            &self.datum,
            &self.swap_words,
            &self.g1_words,
            &self.new_gen,
        )
    }

    pub fn named_perm(&self, name: &str) -> Option<&Perm> {
        self.presentation.gen_index(name).map(|i| &self.assignment[i])
    }
}

struct Base {
    presentation: Presentation,
    assignment: Vec<Perm>,
    group: PermGroup,
    labels: Vec<String>,
}

struct Step<'a> {
    name: &'a str,
    q: Vec<usize>,
    swaps: &'a [&'a str],
    g1: &'a [&'a str],
    st: Perm,
    new_gen: &'a str,
    new_label: &'a str,
    extra: &'a [&'a str],
}

fn extend(base: &Base, s: Step) -> Result<(MathieuStage, Base), Error> {
    let p = &base.presentation;
    let words = |ws: &[&str]| ws.iter().map(|w| p.word(w)).collect::<Result<Vec<_>, _>>();
    let swap_words = words(s.swaps)?;
    let g1_words = words(s.g1)?;
    let datum = WittDatum {
        base: base.group.clone(),
        q: s.q,
        swaps: swap_words.iter().map(|w| w.eval_perm(&base.assignment)).collect(),
        st: s.st,
    };
    let group = witt_extend(&datum)?;
    let n = datum.new_point();
    let mut pres = p.clone();
    pres.add_gen(s.new_gen);
    for r in s.extra {
        pres.rel(r, Some("extension"))?;
    }
    let mut assignment: Vec<Perm> = base.assignment.iter().map(|x| x.extend(n + 1)).collect();
    assignment.push(datum.st.clone());
    let mut labels = base.labels.clone();
    labels.push(s.new_label.to_string());
    let next = Base { presentation: pres.clone(), assignment: assignment.clone(), group: group.clone(), labels: labels.clone() };
    let stage = MathieuStage {
        name: s.name.to_string(),
        datum,
        group,
        presentation: pres,
        assignment,
        labels,
        base_presentation: p.clone(),
        base_assignment: base.assignment.clone(),
        swap_words,
        g1_words,
        new_gen: s.new_gen.to_string(),
    };
    Ok((stage, next))
}

/// `M(3²)` on `ℙ¹(9)`, then `M₁₁` on `ℙ¹(9) ∪ {v}` and `M₁₂` on `… ∪ {w}`.
fn small_tower() -> Result<Vec<MathieuStage>, Error> {
    let d = emit_deform_presentation(DeformPart::M9, 3)?;
    let f = Field::of_order(9)?;
    let pts = PointSet::new(&f, 2, Domain::Projective);
    let idx = |v: &[u32]| pts.index_of(v).unwrap();
    let (one, zero, inf) = (idx(&[1, 1]), idx(&[0, 1]), idx(&[1, 0]));
    let base = Base {
        presentation: d.presentation,
        assignment: d.assignment,
        group: d.target,
        labels: (0..pts.len()).map(|i| pts.label(i)).collect(),
    };
    let (v, w) = (pts.len(), pts.len() + 1);
    // α + ζβ ↦ α − ζβ, ∞ ↔ v
    let mut s4 = vec![0; pts.len() + 1];
    for (i, p) in pts.points.iter().enumerate() {
        s4[i] = if i == inf {
            v
        } else {
            let c = f.coeffs(p[0]);
            idx(&[f.from_coeffs(&[c[0], (3 - c[1]) % 3]), 1])
        };
    }
    s4[v] = inf;
    let (m11, base) = extend(
        &base,
        Step {
            name: "M11",
            q: vec![one, zero, inf],
            swaps: &["T", "J"],
            g1: &["a", "[J,a]"],
            st: Perm::from_images(s4)?,
            new_gen: "U",
            new_label: "v",
            extra: &["U^2 = (U T)^2 = (U J)^3 = 1", "a^U = [J,a]"],
        },
    )?;
    // ω ↦ ω³ on K, ∞ fixed, v ↔ w
    let mut s5 = vec![0; w + 1];
    for (i, p) in pts.points.iter().enumerate() {
        s5[i] = if i == inf { inf } else { idx(&[f.pow(p[0], 3)?, 1]) };
    }
    s5[v] = w;
    s5[w] = v;
    let (m12, _) = extend(
        &base,
        Step {
            name: "M12",
            q: vec![one, zero, inf, v],
            swaps: &["T", "J", "U"],
            g1: &["a", "[J,a]"],
            st: Perm::from_images(s5)?,
            new_gen: "V",
            new_label: "w",
            extra: &["V^2 = (V T)^2 = (V J)^2 = (V U)^3 = 1", "a^V = [J,a]^-1 a", "[J,a]^V = [J,a]^-1"],
        },
    )?;
    Ok(vec![m11, m12])
}

/// `PSL₃(4)` on `ℙ²(4)`, then `M₂₂`, `M₂₃`, `M₂₄` adding `u`, `v`, `w`.
fn large_tower(upto: usize) -> Result<Vec<MathieuStage>, Error> {
    let e = emit_family_presentation(PresFamily::Psl34, 4)?;
    let f = Field::of_order(4)?;
    let pts = PointSet::new(&f, 3, Domain::Projective);
    let idx = |v: &[u32]| pts.index_of(v).unwrap();
    let (q1, q2) = (idx(&[0, 1, 0]), idx(&[1, 0, 0]));
    let n = pts.len();
    let (u, v, w) = (n, n + 1, n + 2);
    let sq = |x: u32| f.mul(x, x);
    let frob = |extra: usize, map: &dyn Fn(&[u32]) -> Vec<u32>, fixed: &[(usize, usize)]| -> Result<Perm, Error> {
        let mut img: Vec<usize> = (0..n + extra).collect();
        for (i, p) in pts.points.iter().enumerate() {
            img[i] = idx(&map(p));
        }
        for &(a, b) in fixed {
            img[a] = b;
        }
        Perm::from_images(img)
    };
    let base = Base {
        presentation: e.presentation,
        assignment: e.assignment,
        group: e.target,
        labels: (0..n).map(|i| pts.label(i)).collect(),
    };
    let g1: &[&str] = &["r", "s", "s^t", "s^(j t)"];
    let mut out = Vec::new();
    // [x,y,z] ↦ [x² + yz, y², z²] off q₂, q₂ ↔ u
    let s3 = frob(
        1,
        &|p: &[u32]| {
            if p == [1, 0, 0] {
                p.to_vec()
            } else {
                vec![f.add(sq(p[0]), f.mul(p[1], p[2])), sq(p[1]), sq(p[2])]
            }
        },
        &[(q2, u), (u, q2)],
    )?;
    let (m22, base) = extend(
        &base,
        Step {
            name: "M22",
            q: vec![q1, q2],
            swaps: &["j"],
            g1,
            st: s3,
            new_gen: "u",
            new_label: "u",
            extra: &[
                "u^2 = (u s)^2 = (u j)^3 = 1",
                "r^u = r^j",
                "s^(t u) = s s^t",
                "s^(j t u) = s^(j t) s^(t j t)",
            ],
        },
    )?;
    out.push(m22);
    if upto == 22 {
        return Ok(out);
    }
    let z = f.zeta();
    let s4 = frob(2, &|p: &[u32]| vec![sq(p[0]), sq(p[1]), f.mul(z, sq(p[2]))], &[(u, v), (v, u)])?;
    let (m23, base) = extend(
        &base,
        Step {
            name: "M23",
            q: vec![q1, q2, u],
            swaps: &["j", "u"],
            g1,
            st: s4,
            new_gen: "v",
            new_label: "v",
            extra: &[
                "v^2 = (v s)^2 = (v u)^3 = (v j)^2 = (v r)^2 = 1",
                "s^(t v) = s^(t r)",
                "s^(j t v) = s^(j t r)",
            ],
        },
    )?;
    out.push(m23);
    if upto == 23 {
        return Ok(out);
    }
    let s5 = frob(3, &|p: &[u32]| p.iter().map(|&x| sq(x)).collect(), &[(v, w), (w, v)])?;
    let (m24, _) = extend(
        &base,
        Step {
            name: "M24",
            q: vec![q1, q2, u, v],
            swaps: &["j", "u", "v"],
            g1,
            st: s5,
            new_gen: "w",
            new_label: "w",
            extra: &["w^2 = (w r)^2 = (w s)^2 = (w j)^2 = (w u)^2 = (w s^t)^2 = (w s^(j t))^2 = (w v)^3 = 1"],
        },
    )?;
    out.push(m24);
    Ok(out)
}

/// Every stage of the tower ending in `M_n`, starting from `M₁₁` or `M₂₂`.
pub fn mathieu_tower(n: usize) -> Result<Vec<MathieuStage>, Error> {
    match n {
        11 => Ok(small_tower()?.into_iter().take(1).collect()),
        12 => small_tower(),
        22..=24 => large_tower(n),
        _ => Err(Error::Invalid(format!("no Mathieu group of degree {n}"))),
    }
}

/// `M_n` for `n ∈ {11, 12, 22, 23, 24}`.
pub fn mathieu(n: usize) -> Result<MathieuStage, Error> {
    Ok(mathieu_tower(n)?.pop().expect("tower is nonempty"))
}

use super::{perm_rep, Family, Mat, MatrixRep};
use crate::ffield::Field;
use crate::fpres::{verify_presentation, Presentation, Strategy, VerificationReport};
use crate::perm::{Perm, PermGroup};
use crate::polygroup::{stabilizer_polygroup, Polygroup};
use crate::Error;

/// The matrix-group presentation families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresFamily {
    B2K,
    Gl2q,
    Gl2qAlt,
    Pgl2q,
    Pgl2qAlt,
    Sl3q,
    Psl3q,
    Psl34,
}

impl PresFamily {
    pub const ALL: [PresFamily; 8] = [
        PresFamily::B2K,
        PresFamily::Gl2q,
        PresFamily::Gl2qAlt,
        PresFamily::Pgl2q,
        PresFamily::Pgl2qAlt,
        PresFamily::Sl3q,
        PresFamily::Psl3q,
        PresFamily::Psl34,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PresFamily::B2K => "b2K",
            PresFamily::Gl2q => "gl2q",
            PresFamily::Gl2qAlt => "gl2q-alt",
            PresFamily::Pgl2q => "pgl2q",
            PresFamily::Pgl2qAlt => "pgl2q-alt",
            PresFamily::Sl3q => "sl3q",
            PresFamily::Psl3q => "psl3q",
            PresFamily::Psl34 => "psl34",
        }
    }

    pub fn parse(s: &str) -> Option<PresFamily> {
        PresFamily::ALL.iter().copied().find(|f| f.name() == s)
    }
}

/// An emitted presentation with the permutation images of its generators.
#[derive(Clone, Debug)]
pub struct FamilyPresentation {
    pub family: PresFamily,
    pub q: u64,
    pub presentation: Presentation,
    pub assignment: Vec<Perm>,
    pub target: PermGroup,
}

impl FamilyPresentation {
    /// Relator check plus full coset enumeration against the target.
    pub fn verify(&self, max_cosets: usize) -> Result<VerificationReport, Error> {
        verify_presentation(&self.presentation, &self.target, &self.assignment, &Strategy::Full, max_cosets)
    }
}

struct Builder {
    p: Presentation,
    imgs: Vec<Perm>,
}

impl Builder {
    fn new(rep: &MatrixRep, names: &[(&str, &str)]) -> Builder {
        let p = Presentation::new(names.iter().map(|(n, _)| n.to_string()).collect());
        let imgs = names.iter().map(|(_, m)| rep.named_perm(m).expect("named generator").clone()).collect();
        Builder { p, imgs }
    }

    fn rel(&mut self, text: &str, tag: &str) {
        self.p.rel(text, Some(tag)).unwrap_or_else(|e| panic!("bad relation {text:?}: {e}"));
    }
}

fn pow(name: &str, e: i64) -> String {
    format!("{name}^{e}")
}

/// Emits the presentation of `family` over `GF(q)`. `B₂`, `GL₂` and `SL₃` are
/// checked on nonzero vectors, `PGL₂` on `ℙ¹` and `PSL₃` on `ℙ²`.
pub fn emit_family_presentation(family: PresFamily, q: u64) -> Result<FamilyPresentation, Error> {
    let f = Field::of_order(q)?;
    let qm1 = q as i64 - 1;
    let b = match family {
        PresFamily::B2K => b2k(&f)?,
        PresFamily::Gl2q | PresFamily::Pgl2q => {
            let fam = if family == PresFamily::Gl2q { Family::Gl2 } else { Family::Pgl2 };
            let rep = perm_rep(fam, q)?;
            let mut b = Builder::new(&rep, &[("r", "r"), ("S", "S"), ("J", "J")]);
            b.rel(&format!("r^{qm1} = S^2 = J^2 = (J S)^3 = 1"), "order");
            if family == PresFamily::Gl2q {
                b.rel(&format!("((J r)^2)^{qm1} = [r,(J r)^2] = [S,(J r)^2] = 1"), "center");
            } else {
                b.rel("(J r)^2 = 1", "order");
            }
            gamma_family(&mut b, &f);
            b
        }
        PresFamily::Gl2qAlt | PresFamily::Pgl2qAlt => {
            let fam = if family == PresFamily::Gl2qAlt { Family::Gl2 } else { Family::Pgl2 };
            let rep = perm_rep(fam, q)?;
            let mut b = Builder::new(&rep, &[("r", "r"), ("e", "e"), ("J", "J")]);
            let p = f.p();
            b.rel(&format!("r^{qm1} = e^{p} = J^2 = 1"), "order");
            let s = if p == 2 { "e".to_string() } else { format!("(e r^{})", qm1 / 2) };
            if family == PresFamily::Pgl2qAlt {
                b.rel("(J r)^2 = 1", "order");
            }
            b.rel(&format!("(J {s})^3 = 1"), "order");
            let ei = |i: i64| format!("(r^{i} e r^{})", -i);
            let m = f.m() as i64;
            if family == PresFamily::Gl2qAlt {
                b.rel(&format!("((J r)^2)^{qm1} = [r,(J r)^2] = [e,(J r)^2] = 1"), "center");
                for i in 1..m {
                    b.rel(&format!("[e,{}] = 1", ei(i)), "commute");
                }
            } else {
                for i in 1..=(q as i64 - 2) {
                    b.rel(&format!("[e,{}] = 1", ei(i)), "commute");
                }
            }
            // ζ^f = Σ aᵢ ζ^i with aᵢ = −cᵢ for the modulus X^f + Σ cᵢ X^i
            let prod: Vec<String> = f
                .modulus()
                .iter()
                .enumerate()
                .filter_map(|(i, &c)| {
                    let a = (p - c % p) % p;
                    (a != 0).then(|| pow(&ei(i as i64), a as i64))
                })
                .collect();
            let rhs = if prod.is_empty() { "1".to_string() } else { prod.join(" ") };
            b.rel(&format!("{} = {rhs}", ei(m)), "minimal polynomial");
            b
        }
        PresFamily::Sl3q | PresFamily::Psl3q => {
            let fam = if family == PresFamily::Sl3q { Family::Sl3 } else { Family::Psl3 };
            let rep = perm_rep(fam, q)?;
            let mut b = Builder::new(&rep, &[("R", "R"), ("S", "S"), ("J", "J"), ("T", "T")]);
            sl3_relations(&mut b, &f);
            if family == PresFamily::Psl3q && qm1 % 3 == 0 {
                b.rel(&format!("(J R^{})^2 = 1", qm1 / 3), "center");
            }
            b
        }
        PresFamily::Psl34 => {
            if q != 4 {
                return Err(Error::Invalid("psl34 is defined only for q = 4".into()));
            }
            let rep = perm_rep(Family::Psl3, 4)?;
            let mut b = Builder::new(&rep, &[("s", "S"), ("j", "J"), ("t", "T"), ("r", "R")]);
            b.rel(
                "s^2 = j^2 = t^2 = r^3 = (j r)^2 = (t r)^2 = (s r)^3 = (j s)^3 = (t j)^3 = (t s t j s)^3 = 1",
                "order",
            );
            b.rel("t s t j r t s t = r s r^-1 j r t s t r s r^-1 j r^-1 s r^-1", "braid");
            b
        }
    };
    let degree = b.imgs.first().map_or(1, |x| x.degree());
    let target = match family {
        PresFamily::B2K => perm_rep(Family::B2, q)?.group,
        PresFamily::Gl2q | PresFamily::Gl2qAlt => perm_rep(Family::Gl2, q)?.group,
        PresFamily::Pgl2q | PresFamily::Pgl2qAlt => perm_rep(Family::Pgl2, q)?.group,
        PresFamily::Sl3q => perm_rep(Family::Sl3, q)?.group,
        PresFamily::Psl3q | PresFamily::Psl34 => perm_rep(Family::Psl3, q)?.group,
    };
    debug_assert_eq!(target.degree(), degree);
    Ok(FamilyPresentation { family, q, presentation: b.p, assignment: b.imgs, target })
}

/// `S r^i S = r^{γ(i)} S r^{−γ(q−i−1)}` for `i = 1..q−2`.
fn gamma_family(b: &mut Builder, f: &Field) {
    let q = f.q() as i64;
    for i in 1..=q - 2 {
        let g1 = f.gamma(i) as i64;
        let g2 = f.gamma(q - i - 1) as i64;
        b.rel(&format!("S r^{i} S = r^{g1} S r^{}", -g2), "gamma");
    }
}

fn b2k(f: &Field) -> Result<Builder, Error> {
    let q = f.q() as i64;
    let rep = perm_rep(Family::B2, q as u64)?;
    let mut names: Vec<String> = Vec::new();
    let mut imgs = Vec::new();
    for (pre, scalar) in [("R", false), ("Z", true)] {
        for i in 1..=q - 2 {
            let a = f.zpow(i);
            let m = if scalar { Mat::diag(&[a, a]) } else { Mat::diag(&[a, 1]) };
            names.push(format!("{pre}{i}"));
            imgs.push(rep.points.perm(&m)?);
        }
    }
    names.push("S".into());
    imgs.push(rep.named_perm("S").unwrap().clone());
    let mut b = Builder { p: Presentation::new(names), imgs };
    // R(ζ^i) with R(1) = 1
    let gen = |pre: &str, i: i64| -> String {
        let i = i.rem_euclid(q - 1);
        if i == 0 {
            "1".into()
        } else {
            format!("{pre}{i}")
        }
    };
    for i in 1..=q - 2 {
        for j in 1..=q - 2 {
            for pre in ["R", "Z"] {
                b.rel(&format!("{pre}{i} {pre}{j} = {}", gen(pre, i + j)), "multiplicative");
            }
            b.rel(&format!("[R{i},Z{j}] = 1"), "commute");
        }
    }
    for i in 1..=q - 2 {
        b.rel(&format!("[S,Z{i}] = 1"), "commute");
    }
    b.rel("S^2 = 1", "order");
    for i in 1..=q - 2 {
        let a = f.zpow(i);
        let one_minus = f.dlog(f.sub(1, a))? as i64;
        let ratio = f.dlog(f.div(a, f.sub(a, 1))?)? as i64;
        b.rel(&format!("S R{i} S = {} S {}", gen("R", one_minus), gen("R", ratio)), "S-conjugation");
    }
    Ok(b)
}

fn sl3_relations(b: &mut Builder, f: &Field) {
    let q = f.q() as i64;
    let qm1 = q - 1;
    let half = if q % 2 == 0 { 0 } else { qm1 / 2 };
    let z = "(J R)^2";
    // Ê₁₂(ζ^j)
    let e12 = |j: i64| format!("(R^{j} S R^{})", -j - half);
    b.rel(&format!("R^{qm1} = {z}^{qm1} = S^2 = J^2 = T^2 = (J S)^3 = (T J)^3 = (T R)^2 = 1"), "I");
    b.rel(&format!("[R,{z}] = [S,{z}] = 1"), "II");
    b.rel(&format!("[{z},T] = R^3"), "II");
    for i in 1..=q - 2 {
        b.rel(&format!("[S,R^{i}] = {}", e12(f.gamma(i) as i64)), "II");
    }
    let reps: Vec<i64> = if qm1 % 3 == 0 { vec![0, 1, 2] } else { vec![0] };
    let w = "(T S T)";
    for &i in &reps {
        b.rel(&format!("({w} {})^2 = 1", e12(i)), "III");
    }
    for &i in &reps {
        // a = ζ^i, −a = ζ^{i+half}, −a⁻² = ζ^{−2i+half}
        let rho = format!("{} J R^{i}", e12(i + half));
        let lambda = format!("{} J {} R^{} {z}^{}", e12(-2 * i + half), e12(2 * i), 4 * i, -2 * i);
        b.rel(&format!("{w} J R^{i} {w} = {rho} {w} {lambda}"), "IV");
    }
}

/// The double-coset polygroup of `(G₀, G₀,₀′)` where `G₀` is the stabilizer of
/// `0 = [0:0:1]` in `PSL₃(q)` acting on `ℙ²` and `0′ = [1:0:0]`.
pub fn sl3_stabilizer_polygroup(q: u64) -> Result<Polygroup, Error> {
    if !(2..=4).contains(&q) {
        return Err(Error::Invalid(format!("stabilizer polygroup supported for q in 2..=4, got {q}")));
    }
    let rep = perm_rep(Family::Psl3, q)?;
    let zero = rep.points.index_of(&[0, 0, 1]).unwrap();
    let zero_prime = rep.points.index_of(&[1, 0, 0]).unwrap();
    let g0 = rep.group.point_stabilizer(zero);
    stabilizer_polygroup(&g0, zero_prime)
}

use crate::ffield::Field;
use crate::fpres::{verify_presentation, Presentation, Strategy, VerificationReport};
use crate::matgrp::{Domain, Mat, MatrixRep, PointSet};
use crate::perm::{Perm, PermGroup};
use crate::Error;

/// `GL₂(q²)` deformed by `φ(A) = α^{[det A ∉ K^{×2}]}` where `α(x) = x^q`.
#[derive(Clone, Debug)]
pub struct TwistedGl2 {
    pub field: Field,
    pub q: u64,
}

impl TwistedGl2 {
    pub fn new(q: u64) -> Result<TwistedGl2, Error> {
        if q.is_multiple_of(2) {
            return Err(Error::Invalid(format!("q must be odd, got {q}")));
        }
        let field = Field::of_order(q * q)?;
        Ok(TwistedGl2 { field, q })
    }

    pub fn alpha(&self, x: u32) -> u32 {
        self.field.pow(x, self.q as i64).expect("power of a field element")
    }

    /// Whether `φ(A)` is nontrivial, i.e. `det A` is a non-square.
    pub fn twisted(&self, m: &Mat) -> bool {
        !self.field.is_square(m.det(&self.field))
    }

    fn alpha_vec(&self, v: &[u32]) -> Vec<u32> {
        v.iter().map(|&x| self.alpha(x)).collect()
    }

    /// `A ∘_φ B = A · φ(A)⁻¹(B)`.
    pub fn circ(&self, a: &Mat, b: &Mat) -> Mat {
        let b2 = if self.twisted(a) { Mat { n: b.n, e: self.alpha_vec(&b.e) } } else { b.clone() };
        a.mul(&self.field, &b2)
    }

    /// `A · v = A β(v)` with `β = α` when `det A` is a non-square. This is a
    /// faithful action of the deformed group on `K² ∖ {0}`, and on `ℙ¹(K)` it
    /// gives `ω ↦ (aβ(ω) + b)/(cβ(ω) + d)`.
    pub fn act(&self, a: &Mat, v: &[u32]) -> Vec<u32> {
        let w = if self.twisted(a) { self.alpha_vec(v) } else { v.to_vec() };
        a.apply(&self.field, &w)
    }

    /// The named matrices `a = R(ζ⁻¹)`, `b = R(ζ²)`, `Z0 = ζI`, `T`, `J`.
    pub fn named(&self) -> Vec<(String, Mat)> {
        let f = &self.field;
        let m1 = f.neg(1);
        let z = f.zeta();
        vec![
            ("a".into(), Mat::diag(&[f.inv(z).unwrap(), 1])),
            ("b".into(), Mat::diag(&[f.mul(z, z), 1])),
            ("Z0".into(), Mat::diag(&[z, z])),
            ("T".into(), Mat::from_rows(&[&[1, m1], &[0, m1]])),
            ("J".into(), Mat::from_rows(&[&[0, m1], &[m1, 0]])),
        ]
    }

    fn rep(&self, domain: Domain, gens: &[&str]) -> Result<MatrixRep, Error> {
        let points = PointSet::new(&self.field, 2, domain);
        let mut named = Vec::new();
        for (name, m) in self.named() {
            let p = points.perm_by(|v| self.act(&m, v))?;
            named.push((name, m, p));
        }
        let perms = gens.iter().map(|g| named.iter().find(|(n, _, _)| n == g).unwrap().2.clone()).collect();
        Ok(MatrixRep { group: PermGroup::new(points.len(), perms), points, named })
    }
}

/// The deformed group `G_φ = (GL₂(q²))_φ` acting on nonzero vectors, generated
/// by `gens` among the named matrices.
pub fn deformed_gl2(q: u64, gens: &[&str]) -> Result<MatrixRep, Error> {
    TwistedGl2::new(q)?.rep(Domain::Vectors, gens)
}

/// The Zassenhaus group `M(q²)` on `ℙ¹(GF(q²))`, with named generator images
/// `a, b, Z0, T, J` (the image of `Z0` is trivial).
pub fn construct_mq2(q: u64) -> Result<MatrixRep, Error> {
    TwistedGl2::new(q)?.rep(Domain::Projective, &["a", "T", "J"])
}

/// `k_j` with `1 − ζ^j = ζ^{k_j}` for `j = 1..q²−2` (index 0 unused).
pub fn k_table(f: &Field) -> Vec<u32> {
    f.gamma_table()
}

/// Parts of the deformation presentations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeformPart {
    Dphi,
    Bphi,
    Gphi,
    Mq2,
    M9,
}

impl DeformPart {
    pub const ALL: [DeformPart; 5] = [DeformPart::Dphi, DeformPart::Bphi, DeformPart::Gphi, DeformPart::Mq2, DeformPart::M9];

    pub fn name(self) -> &'static str {
        match self {
            DeformPart::Dphi => "dphi",
            DeformPart::Bphi => "bphi",
            DeformPart::Gphi => "gphi",
            DeformPart::Mq2 => "mq2",
            DeformPart::M9 => "m9",
        }
    }

    pub fn parse(s: &str) -> Option<DeformPart> {
        DeformPart::ALL.iter().copied().find(|p| p.name() == s)
    }
}

#[derive(Clone, Debug)]
pub struct DeformPresentation {
    pub part: DeformPart,
    pub q: u64,
    pub presentation: Presentation,
    pub assignment: Vec<Perm>,
    pub target: PermGroup,
}

impl DeformPresentation {
    pub fn verify(&self, max_cosets: usize) -> Result<VerificationReport, Error> {
        verify_presentation(&self.presentation, &self.target, &self.assignment, &Strategy::Full, max_cosets)
    }
}

/// `R(ζ^k) = b^{⌈k/2⌉} a^{k − 2⌊k/2⌋}`, with `k` reduced modulo `q² − 1`.
fn r_word(k: i64, qq1: i64, b: &str) -> String {
    let k = k.rem_euclid(qq1);
    match (k, k % 2) {
        (0, _) => "1".into(),
        (_, 0) => format!("{b}^{}", k / 2),
        _ => format!("{b}^{} a", (k + 1) / 2),
    }
}

/// Emits the presentation of `D_φ`, `B_φ`, `G_φ`, `M(q²)` or the short
/// `M(3²)` presentation (`q = 3` only).
pub fn emit_deform_presentation(part: DeformPart, q: u64) -> Result<DeformPresentation, Error> {
    let tw = TwistedGl2::new(q)?;
    if part == DeformPart::M9 && q != 3 {
        return Err(Error::Invalid("the m9 presentation is defined only for q = 3".into()));
    }
    let qq1 = (q * q - 1) as i64;
    let half = qq1 / 2;
    let qi = q as i64;
    let (gens, rep): (&[&str], MatrixRep) = match part {
        DeformPart::Dphi => (&["a", "b", "Z0"], tw.rep(Domain::Vectors, &["a", "b", "Z0"])?),
        DeformPart::Bphi => (&["a", "b", "Z0", "T"], tw.rep(Domain::Vectors, &["a", "b", "Z0", "T"])?),
        DeformPart::Gphi => (&["a", "b", "Z0", "T", "J"], tw.rep(Domain::Vectors, &["a", "b", "Z0", "T", "J"])?),
        DeformPart::Mq2 | DeformPart::M9 => (&["a", "T", "J"], tw.rep(Domain::Projective, &["a", "T", "J"])?),
    };
    let mut p = Presentation::new(gens.iter().map(|s| s.to_string()).collect());
    let mut rel = |text: String, tag: &str| p.rel(&text, Some(tag));
    let ks = k_table(&tw.field);
    match part {
        DeformPart::Dphi | DeformPart::Bphi | DeformPart::Gphi => {
            rel(format!("Z0^{qq1} = b^{half} = 1"), "D")?;
            rel(format!("a^2 = b^{}", -(qi + 1) / 2), "D")?;
            rel(format!("a^b = b^{} a", qi - 1), "D")?;
            rel(format!("Z0^a = Z0^{qi}"), "D")?;
            rel("Z0^b = Z0".into(), "D")?;
            if part != DeformPart::Dphi {
                rel("T^2 = [Z0,T] = 1".into(), "B1")?;
                for j in 1..qq1 {
                    let k = ks[j as usize] as i64;
                    let (e, tag) = if k % 2 == 0 { (half - k + j, "B2a") } else { (half - qi * k + qi * j, "B2b") };
                    rel(
                        format!("T {} T = {} T Z0^{half} {}", r_word(j, qq1, "b"), r_word(k, qq1, "b"), r_word(e, qq1, "b")),
                        tag,
                    )?;
                }
            }
            if part == DeformPart::Gphi {
                rel("J^2 = [J,Z0] = 1".into(), "G1")?;
                rel("[J,a] = Z0^-1 b".into(), "G2")?;
                rel("(J b)^2 = Z0^2".into(), "G2")?;
                rel(format!("(J T)^3 = Z0^{half}"), "G2")?;
            }
        }
        DeformPart::Mq2 => {
            let b = "[J,a]";
            rel(format!("{b}^{half} = 1"), "D")?;
            rel(format!("a^2 = {b}^{}", -(qi + 1) / 2), "D")?;
            rel(format!("{b}^-1 a {b} = {b}^{} a", qi - 1), "D")?;
            rel("T^2 = 1".into(), "B1")?;
            for j in 1..qq1 {
                let k = ks[j as usize] as i64;
                let (e, tag) = if k % 2 == 0 { (half - k + j, "B2a") } else { (half - qi * k + qi * j, "B2b") };
                rel(format!("T {} T = {} T {}", r_word(j, qq1, b), r_word(k, qq1, b), r_word(e, qq1, b)), tag)?;
            }
            rel(format!("J^2 = (J {b})^2 = (J T)^3 = 1"), "G")?;
        }
        DeformPart::M9 => {
            rel("T^2 = J^2 = (J T)^3 = (T a^2)^3 = [J,a]^4 = (J [J,a])^2 = 1".into(), "M9")?;
            rel("a^2 = [J,a]^2".into(), "M9")?;
            rel("(a T)^2 = [J,a]^-1 T [J,a]".into(), "M9")?;
        }
    }
    let assignment: Vec<Perm> = gens.iter().map(|g| rep.named_perm(g).unwrap().clone()).collect();
    Ok(DeformPresentation { part, q, presentation: p, assignment, target: rep.group })
}

//! Matrix groups over finite fields as permutation groups, and emitters for
//! the explicit presentations of `B₂(q)`, `GL₂(q)`, `PGL₂(q)`, `SL₃(q)` and
//! `PSL₃(q)`.
//!
//! Field elements are ordered by discrete log: `0, ζ⁰, ζ¹, …`. The projective
//! line lists `z ↔ [z:1]` in that order with `∞ = [1:0]` last. Points of the
//! projective plane are normalized with leftmost nonzero coordinate `1` and
//! sorted coordinatewise; nonzero vectors are sorted the same way.

mod emit;

pub use emit::{emit_family_presentation, sl3_stabilizer_polygroup, FamilyPresentation, PresFamily};

use crate::ffield::Field;
use crate::perm::{Perm, PermGroup};
use crate::Error;
use std::collections::HashMap;

/// A square matrix over a finite field, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    pub n: usize,
    pub e: Vec<u32>,
}

impl Mat {
    pub fn from_rows(rows: &[&[u32]]) -> Mat {
        let n = rows.len();
        Mat { n, e: rows.iter().flat_map(|r| r.iter().copied()).collect() }
    }

    pub fn identity(n: usize) -> Mat {
        let mut e = vec![0; n * n];
        for i in 0..n {
            e[i * n + i] = 1;
        }
        Mat { n, e }
    }

    pub fn diag(d: &[u32]) -> Mat {
        let n = d.len();
        let mut m = Mat { n, e: vec![0; n * n] };
        for (i, &x) in d.iter().enumerate() {
            m.e[i * n + i] = x;
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> u32 {
        self.e[i * self.n + j]
    }

    pub fn mul(&self, f: &Field, o: &Mat) -> Mat {
        let n = self.n;
        let mut e = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0;
                for k in 0..n {
                    s = f.add(s, f.mul(self.at(i, k), o.at(k, j)));
                }
                e[i * n + j] = s;
            }
        }
        Mat { n, e }
    }

    pub fn det(&self, f: &Field) -> u32 {
        match self.n {
            1 => self.e[0],
            2 => f.sub(f.mul(self.at(0, 0), self.at(1, 1)), f.mul(self.at(0, 1), self.at(1, 0))),
            3 => {
                let m = |i, j| self.at(i, j);
                let t = |a: u32, b: u32, c: u32| f.mul(a, f.mul(b, c));
                let pos = f.add(f.add(t(m(0, 0), m(1, 1), m(2, 2)), t(m(0, 1), m(1, 2), m(2, 0))), t(m(0, 2), m(1, 0), m(2, 1)));
                let neg = f.add(f.add(t(m(0, 2), m(1, 1), m(2, 0)), t(m(0, 0), m(1, 2), m(2, 1))), t(m(0, 1), m(1, 0), m(2, 2)));
                f.sub(pos, neg)
            }
            _ => unimplemented!("determinants of size above 3"),
        }
    }

    pub fn apply(&self, f: &Field, v: &[u32]) -> Vec<u32> {
        (0..self.n)
            .map(|i| (0..self.n).fold(0, |s, k| f.add(s, f.mul(self.at(i, k), v[k]))))
            .collect()
    }
}

/// What a matrix group acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    /// projective space of lines
    Projective,
    /// nonzero column vectors (faithful)
    Vectors,
    /// the affine line `z ↦ (a₁₁z + a₁₂)/a₂₂`, for upper triangular 2×2 matrices
    AffineLine,
}

/// A set of points on which matrices act, with its indexing.
#[derive(Clone, Debug)]
pub struct PointSet {
    pub field: Field,
    pub dim: usize,
    pub domain: Domain,
    pub points: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

/// Position of a field element in the order `0, ζ⁰, ζ¹, …`.
pub fn field_index(f: &Field, x: u32) -> usize {
    if x == 0 {
        0
    } else {
        f.dlog(x).unwrap() as usize + 1
    }
}

/// Field elements in the order `0, ζ⁰, ζ¹, …`.
pub fn field_elements(f: &Field) -> Vec<u32> {
    std::iter::once(0).chain(f.units().iter().copied()).collect()
}

impl PointSet {
    pub fn new(field: &Field, dim: usize, domain: Domain) -> PointSet {
        let els = field_elements(field);
        let mut points: Vec<Vec<u32>> = Vec::new();
        match (domain, dim) {
            (Domain::AffineLine, _) => points.extend(els.iter().map(|&z| vec![z])),
            (Domain::Projective, 2) => {
                points.extend(els.iter().map(|&z| vec![z, 1]));
                points.push(vec![1, 0]);
            }
            _ => {
                // all vectors in index-lexicographic order
                let q = els.len();
                let total = q.pow(dim as u32);
                for code in 1..total {
                    let mut v = vec![0u32; dim];
                    let mut r = code;
                    for i in (0..dim).rev() {
                        v[i] = els[r % q];
                        r /= q;
                    }
                    let keep = match domain {
                        Domain::Projective => v.iter().find(|&&x| x != 0) == Some(&1),
                        _ => true,
                    };
                    if keep {
                        points.push(v);
                    }
                }
            }
        }
        let index = points.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        PointSet { field: field.clone(), dim, domain, points, index }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn normalize(&self, v: &[u32]) -> Vec<u32> {
        let f = &self.field;
        match (self.domain, self.dim) {
            (Domain::Projective, 2) => {
                if v[1] != 0 {
                    vec![f.div(v[0], v[1]).unwrap(), 1]
                } else {
                    vec![1, 0]
                }
            }
            (Domain::Projective, _) => {
                let lead = *v.iter().find(|&&x| x != 0).expect("nonzero vector");
                let li = f.inv(lead).unwrap();
                v.iter().map(|&x| f.mul(x, li)).collect()
            }
            _ => v.to_vec(),
        }
    }

    /// Index of the point represented by `v`.
    pub fn index_of(&self, v: &[u32]) -> Option<usize> {
        self.index.get(&self.normalize(v)).copied()
    }

    /// The permutation induced by `m`.
    pub fn perm(&self, m: &Mat) -> Result<Perm, Error> {
        let f = &self.field;
        let img: Vec<usize> = match self.domain {
            Domain::AffineLine => {
                if m.n != 2 || m.at(1, 0) != 0 {
                    return Err(Error::Invalid("affine action needs an upper triangular 2×2 matrix".into()));
                }
                let d = f.inv(m.at(1, 1))?;
                self.points
                    .iter()
                    .map(|p| {
                        let z = f.mul(f.add(f.mul(m.at(0, 0), p[0]), m.at(0, 1)), d);
                        self.index[&vec![z]]
                    })
                    .collect()
            }
            _ => self.points.iter().map(|p| self.index_of(&m.apply(f, p)).unwrap()).collect(),
        };
        Perm::from_images(img)
    }

    /// The permutation induced by an arbitrary map on coordinate vectors.
    pub fn perm_by(&self, f: impl Fn(&[u32]) -> Vec<u32>) -> Result<Perm, Error> {
        let img = self
            .points
            .iter()
            .map(|p| self.index_of(&f(p)).ok_or_else(|| Error::Invalid("map leaves the point set".into())))
            .collect::<Result<Vec<_>, _>>()?;
        Perm::from_images(img)
    }

    /// Human-readable label of point `i`.
    pub fn label(&self, i: usize) -> String {
        let f = &self.field;
        let p = &self.points[i];
        if self.domain == Domain::Projective && self.dim == 2 {
            return if p[1] == 0 { "∞".into() } else { f.show(p[0]) };
        }
        format!("[{}]", p.iter().map(|&x| f.show(x)).collect::<Vec<_>>().join(","))
    }
}

/// Matrix group families with a natural permutation action.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `GL₂(q)` on nonzero vectors of `K²`
    Gl2,
    /// `PGL₂(q)` on `ℙ¹`
    Pgl2,
    /// `B₂(q)` on nonzero vectors of `K²`
    B2,
    /// `B₂(q)` on the affine line (kernel: scalars)
    B2Affine,
    /// `SL₃(q)` on nonzero vectors of `K³`
    Sl3,
    /// `PSL₃(q)` on `ℙ²`
    Psl3,
}

impl Family {
    pub fn parse(s: &str) -> Option<Family> {
        Some(match s {
            "gl2" => Family::Gl2,
            "pgl2" => Family::Pgl2,
            "b2" => Family::B2,
            "b2-affine" => Family::B2Affine,
            "sl3" => Family::Sl3,
            "psl3" => Family::Psl3,
            _ => return None,
        })
    }
}

/// A matrix group as a permutation group with named generator matrices.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    pub group: PermGroup,
    pub points: PointSet,
    pub named: Vec<(String, Mat, Perm)>,
}

impl MatrixRep {
    pub fn named_perm(&self, name: &str) -> Option<&Perm> {
        self.named.iter().find(|(n, _, _)| n == name).map(|(_, _, p)| p)
    }

    pub fn named_mat(&self, name: &str) -> Option<&Mat> {
        self.named.iter().find(|(n, _, _)| n == name).map(|(_, m, _)| m)
    }
}

/// The named 2×2 matrices `r = R(ζ)`, `S`, `J`, `z = Z(ζ)`, `e = E₁₂(1)`.
pub fn gl2_matrices(f: &Field) -> Vec<(String, Mat)> {
    let m1 = f.neg(1);
    let zeta = f.zeta();
    vec![
        ("r".into(), Mat::diag(&[zeta, 1])),
        ("S".into(), Mat::from_rows(&[&[m1, 1], &[0, 1]])),
        ("J".into(), Mat::from_rows(&[&[0, m1], &[m1, 0]])),
        ("z".into(), Mat::diag(&[zeta, zeta])),
        ("e".into(), Mat::from_rows(&[&[1, 1], &[0, 1]])),
    ]
}

/// The named 3×3 matrices `R = R̂(ζ)`, `S = Ŝ`, `J = Ĵ`, `T`.
pub fn sl3_matrices(f: &Field) -> Vec<(String, Mat)> {
    let m1 = f.neg(1);
    let zeta = f.zeta();
    vec![
        ("R".into(), Mat::diag(&[zeta, 1, f.inv(zeta).unwrap()])),
        ("S".into(), Mat::from_rows(&[&[m1, 1, 0], &[0, 1, 0], &[0, 0, m1]])),
        ("J".into(), Mat::from_rows(&[&[0, m1, 0], &[m1, 0, 0], &[0, 0, m1]])),
        ("T".into(), Mat::from_rows(&[&[0, 0, m1], &[0, m1, 0], &[m1, 0, 0]])),
    ]
}

/// Permutation representation of a matrix group family over `GF(q)`.
pub fn perm_rep(family: Family, q: u64) -> Result<MatrixRep, Error> {
    let f = Field::of_order(q)?;
    let (dim, domain, mats, gens): (usize, Domain, Vec<(String, Mat)>, &[&str]) = match family {
        Family::Gl2 => (2, Domain::Vectors, gl2_matrices(&f), &["r", "S", "J"]),
        Family::Pgl2 => (2, Domain::Projective, gl2_matrices(&f), &["r", "S", "J"]),
        Family::B2 => (2, Domain::Vectors, gl2_matrices(&f), &["r", "z", "S"]),
        Family::B2Affine => (2, Domain::AffineLine, gl2_matrices(&f), &["r", "z", "S"]),
        Family::Sl3 => (3, Domain::Vectors, sl3_matrices(&f), &["R", "S", "J", "T"]),
        Family::Psl3 => (3, Domain::Projective, sl3_matrices(&f), &["R", "S", "J", "T"]),
    };
    let points = PointSet::new(&f, dim, domain);
    let mut named = Vec::new();
    for (name, m) in mats {
        if (family == Family::B2 || family == Family::B2Affine)
            && name == "J" {
                continue;
            }
        let p = points.perm(&m)?;
        named.push((name, m, p));
    }
    let gen_perms: Vec<Perm> =
        gens.iter().map(|g| named.iter().find(|(n, _, _)| n == g).unwrap().2.clone()).collect();
    let group = PermGroup::new(points.len(), gen_perms);
    Ok(MatrixRep { group, points, named })
}

/// `|GL_n(q)|`.
pub fn gl_order(n: u32, q: u128) -> u128 {
    (0..n).map(|i| q.pow(n) - q.pow(i)).product()
}

use crate::Error;
use std::collections::BTreeSet;
use std::fmt;

/// An element of `ℤ≥0 ∪ {∞}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Lam {
    Fin(u64),
    Inf,
}

impl fmt::Display for Lam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lam::Fin(a) => write!(f, "{a}"),
            Lam::Inf => write!(f, "∞"),
        }
    }
}

/// Hyperoperation variants on `ℤ≥0 ∪ {∞}` (or `ℤ≥0` for `Lattice`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Borel double cosets, residue field with at least 3 elements.
    PbBigK,
    /// Borel double cosets, residue field GF(2).
    PbGf2,
    /// `GL₂` double cosets of the Borel subgroup.
    Pg,
    /// `α∘β = {α+β−2γ : 0 ≤ γ ≤ min(α,β)}`, identity 0.
    Lattice,
}

/// A subset of `ℤ≥0 ∪ {∞}`: finitely many points, an optional ray
/// `{n : n ≥ r}` of finite numbers, and possibly `∞`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LSet {
    fin: BTreeSet<u64>,
    ray: Option<u64>,
    inf: bool,
}

impl LSet {
    pub fn empty() -> LSet {
        LSet::default()
    }

    pub fn single(a: Lam) -> LSet {
        let mut s = LSet::empty();
        s.insert(a);
        s
    }

    pub fn from_finite(v: impl IntoIterator<Item = u64>) -> LSet {
        let mut s = LSet { fin: v.into_iter().collect(), ray: None, inf: false };
        s.normalize();
        s
    }

    /// `{n : n ≥ r}`, with `∞` when `with_inf`.
    pub fn ray_from(r: u64, with_inf: bool) -> LSet {
        LSet { fin: BTreeSet::new(), ray: Some(r), inf: with_inf }
    }

    fn normalize(&mut self) {
        if let Some(mut r) = self.ray {
            self.fin.retain(|&x| x < r);
            while r > 0 && self.fin.remove(&(r - 1)) {
                r -= 1;
            }
            self.ray = Some(r);
        }
    }

    pub fn insert(&mut self, a: Lam) {
        match a {
            Lam::Inf => self.inf = true,
            Lam::Fin(x) => {
                if self.ray.is_none_or(|r| x < r) {
                    self.fin.insert(x);
                    self.normalize();
                }
            }
        }
    }

    pub fn contains(&self, a: Lam) -> bool {
        match a {
            Lam::Inf => self.inf,
            Lam::Fin(x) => self.fin.contains(&x) || self.ray.is_some_and(|r| x >= r),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.fin.is_empty() && self.ray.is_none() && !self.inf
    }

    pub fn is_finite(&self) -> bool {
        self.ray.is_none()
    }

    pub fn has_inf(&self) -> bool {
        self.inf
    }

    pub fn union(&self, other: &LSet) -> LSet {
        let mut s = LSet {
            fin: self.fin.union(&other.fin).copied().collect(),
            ray: match (self.ray, other.ray) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            },
            inf: self.inf || other.inf,
        };
        s.normalize();
        s
    }

    pub fn intersection(&self, other: &LSet) -> LSet {
        let mut fin: BTreeSet<u64> = self.fin.iter().copied().filter(|&x| other.contains(Lam::Fin(x))).collect();
        fin.extend(other.fin.iter().copied().filter(|&x| self.contains(Lam::Fin(x))));
        let mut s = LSet {
            fin,
            ray: match (self.ray, other.ray) {
                (Some(a), Some(b)) => Some(a.max(b)),
                _ => None,
            },
            inf: self.inf && other.inf,
        };
        s.normalize();
        s
    }

    /// Whether `self ⊆ other`.
    pub fn is_subset(&self, other: &LSet) -> bool {
        &self.intersection(other) == self
    }

    /// Largest finite number that appears explicitly (point or ray start).
    fn horizon(&self) -> u64 {
        self.fin.iter().copied().chain(self.ray).max().unwrap_or(0)
    }

    /// Explicit points of the set up to `t`, plus `∞` if present.
    fn points_upto(&self, t: u64) -> Vec<Lam> {
        let mut v: Vec<Lam> = self.fin.iter().map(|&x| Lam::Fin(x)).collect();
        if let Some(r) = self.ray {
            v.extend((r..=t).map(Lam::Fin));
        }
        if self.inf {
            v.push(Lam::Inf);
        }
        v
    }

    /// Finite points, when the set has no ray.
    pub fn finite_points(&self) -> Option<Vec<u64>> {
        self.is_finite().then(|| self.fin.iter().copied().collect())
    }

    /// Set-level product `⋃ a∘b` over `a ∈ self`, `b ∈ other`, exact even for rays.
    pub fn product(&self, other: &LSet, variant: Variant) -> Result<LSet, Error> {
        if variant == Variant::Lattice {
            if !self.is_finite() || !other.is_finite() || self.inf || other.inf {
                return Err(Error::Invalid("lattice variant takes finite sets of integers".into()));
            }
            let mut s = LSet::empty();
            for &a in &self.fin {
                for &b in &other.fin {
                    s = s.union(&lambda_hyperops(Lam::Fin(a), Lam::Fin(b), variant)?);
                }
            }
            return Ok(s);
        }
        // every n > t behaves the same: n∘β = {β} for β ≤ t, n∘∞ = {n},
        // and the products among such n cover (t,∞]
        let t = self.horizon().max(other.horizon()) + 1;
        let xs = self.points_upto(t);
        let ys = other.points_upto(t);
        let mut s = LSet::empty();
        for &a in &xs {
            for &b in &ys {
                s = s.union(&lambda_hyperops(a, b, variant)?);
            }
        }
        let generic_x = self.ray.is_some();
        let generic_y = other.ray.is_some();
        for (generic, pts) in [(generic_x, &ys), (generic_y, &xs)] {
            if generic {
                for &b in pts {
                    match b {
                        Lam::Fin(_) => s.insert(b),
                        Lam::Inf => s = s.union(&LSet::ray_from(t + 1, false)),
                    }
                }
            }
        }
        if generic_x && generic_y {
            s = s.union(&LSet::ray_from(t + 1, true));
        }
        Ok(s)
    }
}

impl fmt::Display for LSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.fin.iter().map(|x| x.to_string()).collect();
        match (self.ray, self.inf) {
            (Some(r), true) => parts.push(format!("[{r},∞]")),
            (Some(r), false) => parts.push(format!("[{r},∞)")),
            (None, true) => parts.push("∞".into()),
            (None, false) => {}
        }
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `α∘β` for the given variant.
pub fn lambda_hyperops(a: Lam, b: Lam, variant: Variant) -> Result<LSet, Error> {
    if variant == Variant::Lattice {
        let (Lam::Fin(x), Lam::Fin(y)) = (a, b) else {
            return Err(Error::Invalid("∞ is not an element of the lattice polygroup".into()));
        };
        let d = x.abs_diff(y);
        return Ok(LSet::from_finite((0..=x.min(y)).map(|g| d + 2 * g)));
    }
    if a != b {
        return Ok(LSet::single(a.min(b)));
    }
    Ok(match a {
        Lam::Inf => LSet::single(Lam::Inf),
        Lam::Fin(x) => match variant {
            Variant::PbGf2 => LSet::ray_from(x + 1, true),
            _ => LSet::ray_from(x, true),
        },
    })
}

/// `αⁿ = α∘⋯∘α` (`n ≥ 1` factors), in closed form for the Borel variants
/// and by repeated multiplication for the lattice.
pub fn hyper_power(variant: Variant, a: Lam, n: u32) -> Result<LSet, Error> {
    if n == 0 {
        return Err(Error::Invalid("hyper_power needs n >= 1".into()));
    }
    if variant == Variant::Lattice {
        let single = LSet::single(a);
        let mut acc = single.clone();
        lambda_hyperops(a, a, variant)?;
        for _ in 1..n {
            acc = acc.product(&single, variant)?;
        }
        return Ok(acc);
    }
    Ok(match a {
        Lam::Inf => LSet::single(Lam::Inf),
        _ if n == 1 => LSet::single(a),
        Lam::Fin(x) => match variant {
            Variant::PbGf2 if n % 2 == 1 => LSet::single(a),
            Variant::PbGf2 => LSet::ray_from(x + 1, true),
            _ => LSet::ray_from(x, true),
        },
    })
}

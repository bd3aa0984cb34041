//! Finite fields GF(p^m) with a fixed primitive element ζ.
//!
//! Elements are encoded as integers `Σ c_i p^i` where `c_i` is the coefficient
//! of `ζ^i` in the polynomial basis. Zero is `0` and one is `1`.

use crate::Error;
use std::fmt;

/// Multiplicative and additive tables are built up to this size.
pub const TABLE_LIMIT: u64 = 1 << 16;
const ADD_TABLE_LIMIT: usize = 1024;

#[derive(Clone)]
pub struct Field {
    p: u32,
    m: u32,
    q: u32,
    /// coefficients `c_0..c_{m-1}` of the monic modulus `x^m + Σ c_i x^i`;
    /// for prime fields this is `x - ζ`
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    add: Option<Vec<u32>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) modulus {:?}", self.p, self.m, self.modulus)
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Splits `q` into `(p, m)` with `q = p^m`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))? as u32;
    let mut r = q;
    let mut m = 0;
    while r.is_multiple_of(p as u64) {
        r /= p as u64;
        m += 1;
    }
    (r == 1).then_some((p, m))
}

impl Field {
    /// GF(p^m). The modulus is the first primitive polynomial when monic
    /// polynomials are listed with `c_{m-1}` most significant. For prime
    /// fields ζ is the smallest primitive root.
    pub fn new(p: u32, m: u32) -> Result<Field, Error> {
        if !is_prime(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::Invalid("field degree must be at least 1".into()));
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= TABLE_LIMIT).ok_or_else(|| {
            Error::TooLarge(format!("GF({p}^{m}) exceeds the table limit {TABLE_LIMIT}"))
        })? as u32;
        if m == 1 {
            for z in 1..p {
                if let Some(exp) = power_table_prime(p, z) {
                    return Ok(Field::finish(p, 1, q, vec![(p - z) % p], exp));
                }
            }
            unreachable!("every prime field has a primitive root");
        }
        for code in 0..q {
            // enumerate (c_{m-1}, …, c_0) lexicographically: c_{m-1} is the most significant digit
            let mut modulus = vec![0u32; m as usize];
            let mut r = code;
            for i in 0..m as usize {
                modulus[i] = r % p;
                r /= p;
            }
            if modulus[0] == 0 {
                continue;
            }
            if let Some(exp) = power_table_poly(p, m, q, &modulus) {
                return Ok(Field::finish(p, m, q, modulus, exp));
            }
        }
        Err(Error::Invalid(format!("no primitive polynomial found for GF({p}^{m})")))
    }

    pub fn of_order(q: u64) -> Result<Field, Error> {
        let (p, m) = prime_power(q).ok_or_else(|| Error::Invalid(format!("{q} is not a prime power")))?;
        Field::new(p, m)
    }

    fn finish(p: u32, m: u32, q: u32, modulus: Vec<u32>, exp: Vec<u32>) -> Field {
        let mut log = vec![u32::MAX; q as usize];
        for (i, &x) in exp.iter().enumerate() {
            log[x as usize] = i as u32;
        }
        let mut f = Field { p, m, q, modulus, exp, log, add: None };
        if (q as usize) <= ADD_TABLE_LIMIT {
            let n = q as usize;
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    t[a * n + b] = f.add_digits(a as u32, b as u32);
                }
            }
            f.add = Some(t);
        }
        f
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    /// Modulus coefficients `c_0..c_{m-1}` of `x^m + Σ c_i x^i`.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> u32 {
        0
    }
    pub fn one(&self) -> u32 {
        1
    }
    pub fn zeta(&self) -> u32 {
        self.exp[1 % self.exp.len()]
    }

    /// Coefficients of `x` in the basis `1, ζ, …, ζ^{m-1}` (prime fields: `[x]`).
    pub fn coeffs(&self, mut x: u32) -> Vec<u32> {
        (0..self.m)
            .map(|_| {
                let c = x % self.p;
                x /= self.p;
                c
            })
            .collect()
    }

    pub fn from_coeffs(&self, c: &[u32]) -> u32 {
        c.iter().rev().fold(0, |acc, &d| acc * self.p + d % self.p)
    }

    fn add_digits(&self, a: u32, b: u32) -> u32 {
        if self.m == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b) = (a, b);
        let mut r = 0;
        let mut w = 1;
        for _ in 0..self.m {
            r += ((a % self.p + b % self.p) % self.p) * w;
            a /= self.p;
            b /= self.p;
            w *= self.p;
        }
        r
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.add {
            Some(t) => t[(a * self.q + b) as usize],
            None => self.add_digits(a, b),
        }
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.m == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let c: Vec<u32> = self.coeffs(a).iter().map(|&d| (self.p - d) % self.p).collect();
        self.from_coeffs(&c)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] + self.log[b as usize];
        self.exp[(s % (self.q - 1)) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32, Error> {
        if a == 0 {
            return Err(Error::Invalid("division by zero".into()));
        }
        let l = self.log[a as usize];
        Ok(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32, Error> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`; negative exponents need `a ≠ 0`. `0^0 = 1`.
    pub fn pow(&self, a: u32, e: i64) -> Result<u32, Error> {
        if a == 0 {
            return match e {
                0 => Ok(1),
                e if e > 0 => Ok(0),
                _ => Err(Error::Invalid("division by zero".into())),
            };
        }
        let n = (self.q - 1) as i64;
        let l = self.log[a as usize] as i64;
        Ok(self.exp[((l * (e % n)).rem_euclid(n)) as usize])
    }

    /// `ζ^i` for any integer `i`.
    pub fn zpow(&self, i: i64) -> u32 {
        self.exp[i.rem_euclid((self.q - 1) as i64) as usize]
    }

    /// `x ↦ x^{p^k}`.
    pub fn frobenius(&self, a: u32, k: u32) -> u32 {
        let e = (self.p as i64).pow(k % self.m);
        self.pow(a, e).unwrap()
    }

    /// The `i` with `ζ^i = x`, `0 ≤ i < q-1`.
    pub fn dlog(&self, x: u32) -> Result<u32, Error> {
        if x == 0 || x >= self.q {
            return Err(Error::Invalid("dlog of zero".into()));
        }
        Ok(self.log[x as usize])
    }

    /// γ(i) for `1 ≤ i ≤ q-2`, defined by `ζ^{γ(i)} = 1 - ζ^i`. Index 0 is unused.
    pub fn gamma_table(&self) -> Vec<u32> {
        let mut t = vec![0u32; (self.q.saturating_sub(1)) as usize];
        for i in 1..self.q.saturating_sub(1) {
            t[i as usize] = self.dlog(self.sub(1, self.zpow(i as i64))).unwrap();
        }
        t
    }

    pub fn gamma(&self, i: i64) -> u32 {
        self.dlog(self.sub(1, self.zpow(i))).expect("γ(i) undefined for i ≡ 0")
    }

    /// Whether `x` is a square; `0` counts as a square.
    pub fn is_square(&self, x: u32) -> bool {
        x == 0 || self.p == 2 || self.log[x as usize].is_multiple_of(2)
    }

    /// Nonzero elements in the order `ζ^0, ζ^1, …`.
    pub fn units(&self) -> &[u32] {
        &self.exp
    }

    /// Prints `0` or `z^i`.
    pub fn show(&self, x: u32) -> String {
        if x == 0 {
            "0".into()
        } else {
            format!("z^{}", self.log[x as usize])
        }
    }

    pub fn spec(&self) -> String {
        format!("gf:{}^{}", self.p, self.m)
    }
}

fn power_table_prime(p: u32, z: u32) -> Option<Vec<u32>> {
    let mut exp = Vec::with_capacity(p as usize - 1);
    let mut x = 1u32;
    for _ in 0..p - 1 {
        if !exp.is_empty() && x == 1 {
            return None;
        }
        exp.push(x);
        x = x * z % p;
    }
    (x == 1).then_some(exp)
}

/// Powers of the class of `x` modulo the given monic polynomial, if `x` has
/// multiplicative order exactly `q-1`.
fn power_table_poly(p: u32, m: u32, q: u32, modulus: &[u32]) -> Option<Vec<u32>> {
    let m = m as usize;
    let mut cur = vec![0u32; m];
    cur[0] = 1;
    let mut seen = vec![false; q as usize];
    let mut exp = Vec::with_capacity(q as usize - 1);
    let encode = |c: &[u32]| c.iter().rev().fold(0u32, |acc, &d| acc * p + d);
    for _ in 0..q - 1 {
        let code = encode(&cur);
        if code == 0 || seen[code as usize] {
            return None;
        }
        seen[code as usize] = true;
        exp.push(code);
        // multiply by x and reduce: x^m = -Σ c_i x^i
        let top = cur[m - 1];
        for i in (1..m).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        for i in 0..m {
            cur[i] = (cur[i] + (p - modulus[i]) * top) % p;
        }
    }
    (encode(&cur) == 1).then_some(exp)
}

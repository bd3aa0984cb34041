use crate::perm::Perm;
use std::fmt;

/// A freely reduced word. Letters are `±(g+1)` for generator `g`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<i32>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn gen(g: usize) -> Word {
        Word(vec![g as i32 + 1])
    }

    pub fn gen_pow(g: usize, e: i64) -> Word {
        Word::gen(g).pow(e)
    }

    /// Builds from raw letters, reducing freely.
    pub fn from_letters(letters: impl IntoIterator<Item = i32>) -> Word {
        let mut w = Word(Vec::new());
        for l in letters {
            assert!(l != 0, "zero letter");
            w.push(l);
        }
        w
    }

    /// Builds from `(generator, ±1)` pairs.
    pub fn from_pairs(pairs: &[(usize, i8)]) -> Word {
        Word::from_letters(pairs.iter().map(|&(g, e)| if e > 0 { g as i32 + 1 } else { -(g as i32 + 1) }))
    }

    fn push(&mut self, l: i32) {
        if self.0.last() == Some(&-l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    /// `(generator, ±1)` pairs.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, i8)> + '_ {
        self.0.iter().map(|&l| ((l.unsigned_abs() - 1) as usize, if l > 0 { 1 } else { -1 }))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&l| -l).collect())
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..e.unsigned_abs() {
            w = w.mul(&base);
        }
        w
    }

    /// `w2 · self · w2⁻¹`.
    pub fn conjugate(&self, w2: &Word) -> Word {
        w2.mul(self).mul(&w2.inverse())
    }

    /// Exponent notation `self^y = y⁻¹ · self · y`.
    pub fn conj_by(&self, y: &Word) -> Word {
        y.inverse().mul(self).mul(y)
    }

    /// `[self, y] = self · y · self⁻¹ · y⁻¹`.
    pub fn comm(&self, y: &Word) -> Word {
        self.mul(y).mul(&self.inverse()).mul(&y.inverse())
    }

    pub fn max_gen(&self) -> Option<usize> {
        self.pairs().map(|(g, _)| g).max()
    }

    /// Renumbers generators through `f`.
    pub fn map_gens(&self, f: impl Fn(usize) -> usize) -> Word {
        Word::from_letters(self.pairs().map(|(g, e)| if e > 0 { f(g) as i32 + 1 } else { -(f(g) as i32 + 1) }))
    }

    /// Substitutes a word for each generator.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut w = Word::identity();
        for (g, e) in self.pairs() {
            w = if e > 0 { w.mul(&images[g]) } else { w.mul(&images[g].inverse()) };
        }
        w
    }

    /// Evaluates in any group given the product, inverse and identity.
    pub fn eval<T: Clone>(&self, images: &[T], id: &T, mul: impl Fn(&T, &T) -> T, inv: impl Fn(&T) -> T) -> T {
        let invs: Vec<Option<T>> = {
            let mut v = vec![None; images.len()];
            for (g, e) in self.pairs() {
                if e < 0 && v[g].is_none() {
                    v[g] = Some(inv(&images[g]));
                }
            }
            v
        };
        let mut acc = id.clone();
        for (g, e) in self.pairs() {
            acc = if e > 0 { mul(&acc, &images[g]) } else { mul(&acc, invs[g].as_ref().unwrap()) };
        }
        acc
    }

    pub fn eval_perm(&self, images: &[Perm]) -> Perm {
        let n = images.first().map(|p| p.degree()).unwrap_or(0);
        self.eval(images, &Perm::identity(n), |a, b| a.compose(b), |a| a.inverse())
    }

    /// Prints with the given generator names, collapsing runs into powers.
    pub fn show(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == l {
                j += 1;
            }
            let g = (l.unsigned_abs() - 1) as usize;
            let e = (j - i) as i64 * if l > 0 { 1 } else { -1 };
            let name = names.get(g).cloned().unwrap_or_else(|| format!("g{g}"));
            parts.push(if e == 1 { name } else { format!("{name}^{e}") });
            i = j;
        }
        parts.join("*")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..=self.max_gen().unwrap_or(0)).map(|g| format!("g{g}")).collect();
        write!(f, "{}", self.show(&names))
    }
}

use super::Word;
use crate::Error;
use std::collections::HashMap;
use std::fmt;

/// Named generators plus relator words, each optionally tagged
/// (`typeI`, `typeII`, `base`, `extra`, …).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub gens: Vec<String>,
    pub relators: Vec<Word>,
    pub tags: Vec<Option<String>>,
}

impl Presentation {
    pub fn new(gens: Vec<String>) -> Presentation {
        Presentation { gens, relators: Vec::new(), tags: Vec::new() }
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g == name)
    }

    /// Adds a relator; trivial words are dropped.
    pub fn add(&mut self, w: Word, tag: Option<&str>) {
        if w.is_empty() {
            return;
        }
        assert!(w.max_gen().unwrap() < self.gens.len(), "relator uses an unknown generator");
        self.relators.push(w);
        self.tags.push(tag.map(str::to_string));
    }

    /// Adds the relator `l · r⁻¹` for the equation `l = r`.
    pub fn add_eq(&mut self, l: &Word, r: &Word, tag: Option<&str>) {
        self.add(l.mul(&r.inverse()), tag);
    }

    pub fn add_gen(&mut self, name: &str) -> usize {
        self.gens.push(name.to_string());
        self.gens.len() - 1
    }

    /// Parses a word in the relation language (see [`parse_expr`]).
    pub fn word(&self, text: &str) -> Result<Word, Error> {
        let eqs = parse_expr(text, &self.name_map())?;
        if eqs.len() != 1 {
            return Err(Error::Parse(format!("expected a single word, got an equation: {text}")));
        }
        Ok(eqs.into_iter().next().unwrap())
    }

    /// Adds relators for an equation chain such as `"a^2 = b^3 = (a*b)^5 = 1"`.
    /// Every member is equated with the last one.
    pub fn rel(&mut self, text: &str, tag: Option<&str>) -> Result<(), Error> {
        let parts = parse_expr(text, &self.name_map())?;
        if parts.len() == 1 {
            self.add(parts[0].clone(), tag);
            return Ok(());
        }
        let last = parts.last().unwrap().clone();
        for p in &parts[..parts.len() - 1] {
            self.add_eq(p, &last, tag);
        }
        Ok(())
    }

    fn name_map(&self) -> HashMap<String, usize> {
        self.gens.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect()
    }

    /// Serializes in the plain file format: `gens:` line, then one `rel:` per
    /// relator, with tags as `#` comments when they change.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str("gens:");
        for g in &self.gens {
            s.push(' ');
            s.push_str(g);
        }
        s.push('\n');
        let mut last: Option<&String> = None;
        for (w, t) in self.relators.iter().zip(&self.tags) {
            if let Some(t) = t {
                if last != Some(t) {
                    s.push_str(&format!("# {t}\n"));
                }
            }
            last = t.as_ref();
            s.push_str("rel: ");
            s.push_str(&w.show(&self.gens));
            s.push('\n');
        }
        s
    }

    /// Parses the plain file format. Tag comments are attached to the
    /// relators that follow them.
    pub fn from_text(text: &str) -> Result<Presentation, Error> {
        let mut p: Option<Presentation> = None;
        let mut tag: Option<String> = None;
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(c) = line.strip_prefix('#') {
                let c = c.trim();
                tag = (!c.is_empty()).then(|| c.to_string());
                continue;
            }
            if let Some(rest) = line.strip_prefix("gens:") {
                if p.is_some() {
                    return Err(Error::Parse(format!("line {}: duplicate gens line", ln + 1)));
                }
                let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                for n in &names {
                    if !valid_name(n) {
                        return Err(Error::Parse(format!("line {}: bad generator name {n:?}", ln + 1)));
                    }
                }
                p = Some(Presentation::new(names));
            } else if let Some(rest) = line.strip_prefix("rel:") {
                let pr = p
                    .as_mut()
                    .ok_or_else(|| Error::Parse(format!("line {}: rel before gens", ln + 1)))?;
                let w = parse_file_word(rest, &pr.name_map())
                    .map_err(|e| Error::Parse(format!("line {}: {e}", ln + 1)))?;
                pr.add(w, tag.as_deref());
            } else {
                return Err(Error::Parse(format!("line {}: unrecognized line {line:?}", ln + 1)));
            }
        }
        p.ok_or_else(|| Error::Parse("missing gens line".into()))
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

fn valid_name(n: &str) -> bool {
    let mut c = n.chars();
    matches!(c.next(), Some(ch) if ch.is_ascii_alphabetic())
        && c.all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(String),
    Int(i64),
    Star,
    Caret,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Eq,
}

fn lex(text: &str) -> Result<Vec<Tok>, Error> {
    let cs: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let t = match c {
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBrack,
            ']' => Tok::RBrack,
            ',' => Tok::Comma,
            '=' => Tok::Eq,
            '-' | '0'..='9' => {
                let st = i;
                i += 1;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = cs[st..i].iter().collect();
                out.push(Tok::Int(s.parse().map_err(|_| Error::Parse(format!("bad integer {s:?}")))?));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let st = i;
                while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Name(cs[st..i].iter().collect()));
                continue;
            }
            _ => return Err(Error::Parse(format!("unexpected character {c:?}"))),
        };
        out.push(t);
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    names: &'a HashMap<String, usize>,
    extended: bool,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expect(&mut self, t: Tok) -> Result<(), Error> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!("expected {t:?}, found {:?}", self.peek())))
        }
    }

    /// word := factor (("*")? factor)*
    fn word(&mut self) -> Result<Word, Error> {
        let mut w = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    w = w.mul(&self.factor()?);
                }
                Some(Tok::Name(_)) | Some(Tok::LParen) | Some(Tok::LBrack) if self.extended => {
                    w = w.mul(&self.factor()?);
                }
                Some(Tok::Int(1)) if self.extended => {
                    self.pos += 1;
                }
                _ => return Ok(w),
            }
        }
    }

    /// factor := atom ("^" (int | atom))*
    fn factor(&mut self) -> Result<Word, Error> {
        let mut w = self.atom()?;
        while self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Int(e)) => {
                    self.pos += 1;
                    w = w.pow(e);
                }
                Some(_) if self.extended => {
                    let y = self.atom()?;
                    w = w.conj_by(&y);
                }
                t => return Err(Error::Parse(format!("expected exponent, found {t:?}"))),
            }
        }
        Ok(w)
    }

    fn atom(&mut self) -> Result<Word, Error> {
        match self.peek().cloned() {
            Some(Tok::Name(n)) => {
                self.pos += 1;
                let g = *self.names.get(&n).ok_or_else(|| Error::Parse(format!("unknown generator {n:?}")))?;
                Ok(Word::gen(g))
            }
            Some(Tok::Int(1)) if self.extended => {
                self.pos += 1;
                Ok(Word::identity())
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(Tok::RParen)?;
                Ok(w)
            }
            Some(Tok::LBrack) if self.extended => {
                self.pos += 1;
                let a = self.word()?;
                self.expect(Tok::Comma)?;
                let b = self.word()?;
                self.expect(Tok::RBrack)?;
                Ok(a.comm(&b))
            }
            t => Err(Error::Parse(format!("unexpected token {t:?}"))),
        }
    }
}

/// Parses the strict file grammar:
/// `word := term ("*" term)*`, `term := name ("^" int)? | "(" word ")" ("^" int)?`.
pub fn parse_file_word(text: &str, names: &HashMap<String, usize>) -> Result<Word, Error> {
    let mut p = Parser { toks: lex(text)?, pos: 0, names, extended: false };
    let w = p.word()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {text:?}")));
    }
    Ok(w)
}

/// Parses the relation language used by the emitters. On top of the file
/// grammar it allows juxtaposition, `1`, commutators `[x,y] = x y x⁻¹ y⁻¹`,
/// conjugation `x^y = y⁻¹ x y`, and equation chains separated by `=`.
pub fn parse_expr(text: &str, names: &HashMap<String, usize>) -> Result<Vec<Word>, Error> {
    let mut p = Parser { toks: lex(text)?, pos: 0, names, extended: true };
    let mut parts = vec![p.word()?];
    while p.peek() == Some(&Tok::Eq) {
        p.pos += 1;
        parts.push(p.word()?);
    }
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {text:?}")));
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_round_trip() {
        let text = "gens: a b\n# base\nrel: a^2\nrel: (a*b)^3\nrel: b^-1*a\n";
        let p = Presentation::from_text(text).unwrap();
        assert_eq!(p.relators.len(), 3);
        assert_eq!(p.tags[0].as_deref(), Some("base"));
        let q = Presentation::from_text(&p.to_text()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn file_grammar_is_strict() {
        assert!(Presentation::from_text("gens: a b\nrel: [a,b]\n").is_err());
        assert!(Presentation::from_text("gens: a b\nrel: a b\n").is_err());
        assert!(Presentation::from_text("rel: a\n").is_err());
        assert!(Presentation::from_text("gens: a\nrel: c\n").is_err());
    }

    #[test]
    fn relation_language() {
        let mut p = Presentation::new(vec!["x".into(), "y".into()]);
        p.rel("x^2 = y^4 = (x y)^2 = 1", None).unwrap();
        assert_eq!(p.relators.len(), 3);
        let c = p.word("[x,y]").unwrap();
        assert_eq!(c.show(&p.gens), "x*y*x^-1*y^-1");
        let k = p.word("x^y").unwrap();
        assert_eq!(k.show(&p.gens), "y^-1*x*y");
        p.rel("x y = y x", None).unwrap();
        assert_eq!(p.relators[3].show(&p.gens), "x*y*x^-1*y^-1");
    }
}

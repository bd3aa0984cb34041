use polypres::deform::construct_mq2;
use polypres::matgrp::{perm_rep, Family};
use polypres::perm::{parse_cycles, PermGroup};
use polypres::witt::{mathieu, MATHIEU_DEGREES};
use polypres::Error;
use std::fmt;
use std::str::FromStr;

/// A group named on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Sym(usize),
    Alt(usize),
    Cyc(usize),
    Pgl2(u64),
    Gl2(u64),
    Sl3(u64),
    Psl3(u64),
    Mq2(u64),
    Mathieu(usize),
    /// degree and one cycle string per generator
    Perm(usize, Vec<String>),
}

fn number<T: FromStr>(s: &str, what: &str) -> Result<T, String> {
    s.trim().parse().map_err(|_| format!("bad {what} {s:?}"))
}

impl FromStr for GroupSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<GroupSpec, String> {
        let s = s.trim();
        if let Some(n) = s.strip_prefix('m').and_then(|t| t.parse::<usize>().ok()) {
            return if MATHIEU_DEGREES.contains(&n) {
                Ok(GroupSpec::Mathieu(n))
            } else {
                Err(format!("no Mathieu group of degree {n}"))
            };
        }
        let (kind, rest) = s.split_once(':').ok_or_else(|| format!("unknown group spec {s:?}"))?;
        Ok(match kind {
            "sym" => GroupSpec::Sym(number(rest, "degree")?),
            "alt" => GroupSpec::Alt(number(rest, "degree")?),
            "cyc" => GroupSpec::Cyc(number(rest, "degree")?),
            "pgl2" => GroupSpec::Pgl2(number(rest, "field order")?),
            "gl2" => GroupSpec::Gl2(number(rest, "field order")?),
            "sl3" => GroupSpec::Sl3(number(rest, "field order")?),
            "psl3" => GroupSpec::Psl3(number(rest, "field order")?),
            "mq2" => GroupSpec::Mq2(number(rest, "field order")?),
            "perm" => {
                let (n, gens) = rest.split_once(':').unwrap_or((rest, ""));
                let n = number(n, "degree")?;
                let gens = split_list(gens);
                for g in &gens {
                    parse_cycles(g, n).map_err(|e| e.to_string())?;
                }
                GroupSpec::Perm(n, gens)
            }
            _ => return Err(format!("unknown group kind {kind:?}")),
        })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Sym(n) => write!(f, "sym:{n}"),
            GroupSpec::Alt(n) => write!(f, "alt:{n}"),
            GroupSpec::Cyc(n) => write!(f, "cyc:{n}"),
            GroupSpec::Pgl2(q) => write!(f, "pgl2:{q}"),
            GroupSpec::Gl2(q) => write!(f, "gl2:{q}"),
            GroupSpec::Sl3(q) => write!(f, "sl3:{q}"),
            GroupSpec::Psl3(q) => write!(f, "psl3:{q}"),
            GroupSpec::Mq2(q) => write!(f, "mq2:{q}"),
            GroupSpec::Mathieu(n) => write!(f, "m{n}"),
            GroupSpec::Perm(n, g) => write!(f, "perm:{n}:{}", g.join(";")),
        }
    }
}

impl GroupSpec {
    pub fn build(&self) -> Result<PermGroup, Error> {
        let degree_ok = |n: usize| {
            if n == 0 {
                Err(Error::Invalid("degree must be positive".into()))
            } else {
                Ok(n)
            }
        };
        Ok(match self {
            GroupSpec::Sym(n) => PermGroup::symmetric(degree_ok(*n)?),
            GroupSpec::Alt(n) => PermGroup::alternating(degree_ok(*n)?),
            GroupSpec::Cyc(n) => PermGroup::cyclic(degree_ok(*n)?),
            GroupSpec::Pgl2(q) => perm_rep(Family::Pgl2, *q)?.group,
            GroupSpec::Gl2(q) => perm_rep(Family::Gl2, *q)?.group,
            GroupSpec::Sl3(q) => perm_rep(Family::Sl3, *q)?.group,
            GroupSpec::Psl3(q) => perm_rep(Family::Psl3, *q)?.group,
            GroupSpec::Mq2(q) => construct_mq2(*q)?.group,
            GroupSpec::Mathieu(n) => mathieu(*n)?.group,
            GroupSpec::Perm(n, gens) => PermGroup::try_new(*n, gens.iter().map(|c| parse_cycles(c, *n)).collect::<Result<_, _>>()?)?,
        })
    }
}

fn split_list(s: &str) -> Vec<String> {
    s.split(';').map(str::trim).filter(|t| !t.is_empty()).map(String::from).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["sym:4", "alt:5", "cyc:7", "pgl2:5", "gl2:3", "sl3:2", "psl3:4", "mq2:3", "m11", "m24", "perm:4:(1 2 3 4);(1 2)"] {
            let g: GroupSpec = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
        }
    }

    #[test]
    fn rejects() {
        for s in ["sym", "foo:3", "m13", "sym:x", "perm:3:(1 5)"] {
            assert!(s.parse::<GroupSpec>().is_err(), "{s}");
        }
    }

    #[test]
    fn orders() {
        let o = |s: &str| s.parse::<GroupSpec>().unwrap().build().unwrap().order();
        assert_eq!(o("sym:4"), 24);
        assert_eq!(o("alt:5"), 60);
        assert_eq!(o("pgl2:5"), 120);
        assert_eq!(o("gl2:3"), 48);
        assert_eq!(o("mq2:3"), 720);
        assert_eq!(o("m11"), 7920);
        assert_eq!(o("perm:4:(1 2 3 4);(1 2)"), 24);
    }
}

//! Named small permutation groups, all of order at most 48.

use crate::deform::groups_of_order;
use crate::ffield::Field;
use crate::matgrp::{perm_rep, Domain, Family, Mat, PointSet};
use crate::perm::{parse_cycles, PermGroup};
use crate::Error;

fn cycles(n: usize, gens: &[&str]) -> Result<PermGroup, Error> {
    Ok(PermGroup::new(n, gens.iter().map(|c| parse_cycles(c, n)).collect::<Result<_, _>>()?))
}

/// Left regular representation of a table group from the order-`n` catalog.
fn regular(n: usize, name: &str) -> Result<PermGroup, Error> {
    let t = groups_of_order(n)?
        .into_iter()
        .find(|g| g.name == name)
        .ok_or_else(|| Error::Invalid(format!("no group {name} of order {n}")))?;
    Ok(PermGroup::new(n, t.small_generating_set().iter().map(|&a| t.regular_perm(a)).collect()))
}

/// The groups checked exhaustively over all their subgroups.
pub fn small_groups() -> Result<Vec<(String, PermGroup)>, Error> {
    let mut out = Vec::new();
    for n in 2..=12 {
        out.push((format!("C{n}"), PermGroup::cyclic(n)));
    }
    out.push(("S3".into(), PermGroup::symmetric(3)));
    out.push(("C2xC2".into(), regular(4, "C2xC2")?));
    out.push(("D8".into(), cycles(4, &["(1 2 3 4)", "(1 3)"])?));
    out.push(("Q8".into(), regular(8, "Q8")?));
    out.push(("C4xC2".into(), regular(8, "C4xC2")?));
    out.push(("C2xC2xC2".into(), regular(8, "C2xC2xC2")?));
    out.push(("C3xC3".into(), regular(9, "C3xC3")?));
    out.push(("D10".into(), cycles(5, &["(1 2 3 4 5)", "(2 5)(3 4)"])?));
    out.push(("D12".into(), cycles(6, &["(1 2 3 4 5 6)", "(2 6)(3 5)"])?));
    out.push(("A4".into(), PermGroup::alternating(4)));
    out.push(("Dic12".into(), regular(12, "Dic12")?));
    for name in ["D16", "Q16", "SD16", "C2^4", "C2xQ8"] {
        out.push((name.into(), regular(16, name)?));
    }
    out.push(("S4".into(), PermGroup::symmetric(4)));
    let f = Field::of_order(3)?;
    let pts = PointSet::new(&f, 2, Domain::Vectors);
    let sl = [Mat::from_rows(&[&[1, 1], &[0, 1]]), Mat::from_rows(&[&[1, 0], &[1, 1]])];
    out.push(("SL2(3)".into(), PermGroup::new(pts.len(), sl.iter().map(|m| pts.perm(m)).collect::<Result<_, _>>()?)));
    out.push(("A4xC2".into(), cycles(6, &["(1 2 3)", "(1 2)(3 4)", "(5 6)"])?));
    out.push(("S3xS3".into(), cycles(6, &["(1 2 3)", "(1 2)", "(4 5 6)", "(4 5)"])?));
    out.push(("GL2(3)".into(), perm_rep(Family::Gl2, 3)?.group));
    out.push(("S4xC2".into(), cycles(6, &["(1 2 3 4)", "(1 2)", "(5 6)"])?));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let g = small_groups().unwrap();
        let want = [
            ("Q8", 8), ("D12", 12), ("Dic12", 12), ("D16", 16), ("SL2(3)", 24), ("S3xS3", 36), ("GL2(3)", 48), ("S4xC2", 48),
        ];
        for (name, order) in want {
            assert_eq!(g.iter().find(|(n, _)| n == name).unwrap().1.order(), order, "{name}");
        }
        assert!(g.iter().all(|(_, x)| x.order() <= 48));
    }
}

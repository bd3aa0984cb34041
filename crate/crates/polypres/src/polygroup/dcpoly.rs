use super::Polygroup;
use crate::perm::{double_cosets, PermGroup};
use crate::Error;

/// The polygroup of double cosets `H\G/H` with `HxH ∘ HyH = {HxhyH : h ∈ H}`.
/// Cosets are numbered by their smallest element; brute force, `|G| <= 5000`.
pub fn double_coset_polygroup(g: &PermGroup, h: &PermGroup) -> Result<Polygroup, Error> {
    let d = double_cosets(g, h, h)?;
    let he = h.elements()?;
    let r = d.len();
    let mut prod = Vec::with_capacity(r * r);
    for x in &d.reps {
        for y in &d.reps {
            let mut s: Vec<usize> = he.iter().map(|a| d.index_of(&x.compose(a).compose(y)).unwrap()).collect();
            s.sort_unstable();
            s.dedup();
            prod.push(s);
        }
    }
    let bar = d.reps.iter().map(|x| d.index_of(&x.inverse()).unwrap()).collect();
    Polygroup::new(d.reps.iter().map(|x| x.to_string()).collect(), 0, bar, prod)
}

/// The double-coset polygroup for `H = G_w`, computed from `H`-orbits instead
/// of elements, using the action on the orbit of `w`. Numbering agrees with
/// [`double_coset_polygroup`].
pub fn stabilizer_polygroup(g: &PermGroup, w: usize) -> Result<Polygroup, Error> {
    let n = g.degree();
    if w >= n {
        return Err(Error::Invalid(format!("point {} outside degree {n}", w + 1)));
    }
    let h = g.point_stabilizer(w);
    let mut in_orbit = vec![false; n];
    for x in g.orbit(w) {
        in_orbit[x] = true;
    }
    let mut orbits: Vec<Vec<usize>> = h.orbits().into_iter().filter(|o| in_orbit[o[0]]).collect();
    // smallest element of each double coset, with its orbit
    let mut mins: Vec<_> = orbits
        .drain(..)
        .map(|o| {
            let m = g.search_lex(&[(w, o.clone())], |_| true).expect("transitive");
            (m, o)
        })
        .collect();
    mins.sort();
    let mut label = vec![0usize; n];
    for (i, (_, o)) in mins.iter().enumerate() {
        for &x in o {
            label[x] = i;
        }
    }
    let r = mins.len();
    let mut prod = Vec::with_capacity(r * r);
    for (s1, _) in &mins {
        for (_, o2) in &mins {
            let mut s: Vec<usize> = o2.iter().map(|&x| label[s1.apply(x)]).collect();
            s.sort_unstable();
            s.dedup();
            prod.push(s);
        }
    }
    let bar = mins.iter().map(|(s, _)| label[s.inverse().apply(w)]).collect();
    Polygroup::new(mins.iter().map(|(s, _)| s.to_string()).collect(), 0, bar, prod)
}

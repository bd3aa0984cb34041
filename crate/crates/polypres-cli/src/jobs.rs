//! The job list behind `verify-all`. Each job returns named checks; jobs run
//! on their own threads and are reported in list order.

use crate::Out;
use polypres::actpres::{emit_2transitive_presentation, emit_for_subgroup, emit_theorem_presentation, EmitOptions, HStrategy};
use polypres::catalog::small_groups;
use polypres::deform::{
    construct_mq2, cyclic, deformation_graph, emit_deform_presentation, enumerate_admissible, extend_hom, groups_of_order,
    check_deformation_pair_cocycle, CrossAction, DeformPart, SelfAction,
};
use polypres::glgg::{build_glgg_from_pair, emit_glgg_presentation, CheckBounds, PresentationChoices};
use polypres::matgrp::{emit_family_presentation, perm_rep, sl3_stabilizer_polygroup, Family, PresFamily};
use polypres::perm::{is_isomorphic, PermGroup, TableGroup};
use polypres::polygroup::{double_coset_polygroup, Polygroup};
use polypres::witt::{mathieu, MATHIEU_DEGREES};
use polypres::Error;
use serde_json::json;

type Check = (String, bool, String);
type Job = fn(&Ctx) -> Result<Vec<Check>, Error>;

struct Ctx {
    max_cosets: usize,
    seed: u64,
}

fn check(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Check {
    (name.into(), ok, detail.into())
}

fn show(o: Option<u128>) -> String {
    o.map_or("not certified".into(), |o| o.to_string())
}

fn named(n: usize, name: &str) -> Result<TableGroup, Error> {
    groups_of_order(n)?
        .into_iter()
        .find(|g| g.name == name)
        .ok_or_else(|| Error::Invalid(format!("no group {name} of order {n}")))
}

fn polygroup_axioms(_: &Ctx) -> Result<Vec<Check>, Error> {
    let mut out = Vec::new();
    for (name, g) in small_groups()? {
        let subs = g.subgroups()?;
        let mut bad = Vec::new();
        for h in &subs {
            if !double_coset_polygroup(&g, h)?.check_axioms()?.ok() {
                bad.push(h.order().to_string());
            }
        }
        let detail = if bad.is_empty() {
            format!("{} subgroups", subs.len())
        } else {
            format!("fails for subgroups of order {}", bad.join(","))
        };
        out.push(check(format!("double-coset polygroups of {name}"), bad.is_empty(), detail));
    }
    Ok(out)
}

fn action_presentations(c: &Ctx) -> Result<Vec<Check>, Error> {
    let cases = [
        ("Sym(4) on 4 points", PermGroup::symmetric(4)),
        ("Sym(5) on 5 points", PermGroup::symmetric(5)),
        ("PGL2(5) on the projective line", perm_rep(Family::Pgl2, 5)?.group),
    ];
    let mut out = Vec::new();
    for (name, g) in cases {
        let ap = emit_theorem_presentation(&g, 0, HStrategy::Tower, &EmitOptions::default())?;
        let reps = ap.verify(c.max_cosets, 5000)?;
        let top = reps.last().expect("top level");
        let ok = reps.iter().all(|r| r.ok()) && top.concluded_order == Some(g.order());
        out.push(check(format!("action presentation of {name}"), ok, format!("order {}", show(top.concluded_order))));
    }
    let g = perm_rep(Family::Pgl2, 5)?.group;
    let ap = emit_2transitive_presentation(&g, 0, 1, HStrategy::Tower)?;
    let reps = ap.verify(c.max_cosets, 5000)?;
    let top = reps.last().expect("top level");
    out.push(check(
        "2-transitive presentation of PGL2(5)",
        reps.iter().all(|r| r.ok()),
        format!("order {}", show(top.concluded_order)),
    ));
    Ok(out)
}

fn family_run(c: &Ctx, cases: &[(PresFamily, u64, u128)]) -> Result<Vec<Check>, Error> {
    let mut out = Vec::new();
    for &(f, q, want) in cases {
        let e = emit_family_presentation(f, q)?;
        let r = e.verify(c.max_cosets)?;
        out.push(check(
            format!("{} q={q}", f.name()),
            r.relators_pass() && r.concluded_order == Some(want),
            format!("order {}, expected {want}", show(r.concluded_order)),
        ));
    }
    Ok(out)
}

fn rank_two_families(c: &Ctx) -> Result<Vec<Check>, Error> {
    let mut cases = Vec::new();
    for q in [3u64, 4, 5] {
        cases.push((PresFamily::Gl2q, q, ((q * q - 1) * (q * q - q)) as u128));
        cases.push((PresFamily::Gl2qAlt, q, ((q * q - 1) * (q * q - q)) as u128));
        cases.push((PresFamily::B2K, q, ((q - 1) * (q - 1) * q) as u128));
    }
    for q in [3u64, 4, 5, 7] {
        cases.push((PresFamily::Pgl2q, q, (q * q * q - q) as u128));
        cases.push((PresFamily::Pgl2qAlt, q, (q * q * q - q) as u128));
    }
    family_run(c, &cases)
}

fn rank_three_families(c: &Ctx) -> Result<Vec<Check>, Error> {
    let cases = [
        (PresFamily::Sl3q, 2, 168),
        (PresFamily::Psl3q, 2, 168),
        (PresFamily::Psl34, 4, 20160),
        (PresFamily::Sl3q, 3, 5616),
        (PresFamily::Psl3q, 3, 5616),
    ];
    let mut out = family_run(c, &cases)?;
    for q in [2u64, 3, 4] {
        let pg = sl3_stabilizer_polygroup(q)?;
        let iso = pg.len() == 3 && pg.isomorphic(&Polygroup::p3())?.is_some();
        out.push(check(format!("SL3({q}) stabilizer polygroup is P3"), iso, format!("{} double cosets", pg.len())));
    }
    Ok(out)
}

fn deformations(_: &Ctx) -> Result<Vec<Check>, Error> {
    let mut out = Vec::new();
    let d8 = named(8, "D8")?;
    let (y, x) = (2, 1);
    let y2x = d8.mul(d8.pow(y, 2), x);
    let id: Vec<usize> = (0..8).collect();
    let fx = extend_hom(&d8, &[x, y], &[y2x, y], 0, |&a, &b| d8.mul(a, b))
        .ok_or_else(|| Error::Invalid("φ(x) does not extend".into()))?;
    let a = SelfAction::from_generators(d8.clone(), &[x, y], &[fx, id.clone()])?;
    let q8 = named(8, "Q8")?;
    let iso = a.is_admissible() && is_isomorphic(&a.deform_group()?, &q8)?.is_some();
    out.push(check("D8 deforms to Q8", iso, "φ(x) = y²x, φ(y) = 1"));
    let claims: [(usize, &[(&str, &str)]); 3] = [
        (4, &[("C4", "C2xC2")]),
        (6, &[("C6", "S3")]),
        (8, &[("C8", "D8"), ("C8", "Q8"), ("D8", "Q8"), ("C4xC2", "C2xC2xC2")]),
    ];
    for (n, edges) in claims {
        let g = deformation_graph(n)?;
        let mut want: Vec<(String, String)> = Vec::new();
        for (a, b) in edges {
            let (i, j) = (g.vertices.iter().position(|v| v == a), g.vertices.iter().position(|v| v == b));
            if let (Some(i), Some(j)) = (i, j) {
                let (i, j) = (i.min(j), i.max(j));
                want.push((g.vertices[i].clone(), g.vertices[j].clone()));
            }
        }
        let mut got = g.edge_names();
        want.sort();
        got.sort();
        let detail = got.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(" ");
        out.push(check(format!("deformation graph of order {n} matches the claimed edges"), got == want, detail));
    }
    let g = named(8, "C4xC2")?;
    let h = named(8, "C2xC2xC2")?;
    let (sigma, tau) = (2, 1);
    let v = |bits: usize| ((bits & 1) << 2) | (bits & 2) | ((bits >> 2) & 1);
    let bits_of = |x: usize| (0..8).find(|&b| v(b) == x).unwrap_or(0);
    let swap12: Vec<usize> = (0..8)
        .map(|x| {
            let b = bits_of(x);
            v((b & 4) | ((b & 1) << 1) | ((b & 2) >> 1))
        })
        .collect();
    let act = CrossAction::from_generators(g, h, &[sigma, tau], &[swap12, id])?;
    let eta = act.extend_cocycle(&[sigma, tau], &[v(1), v(4)])?;
    out.push(check("C4xC2 / C2^3 cocycle datum", check_deformation_pair_cocycle(&act, &eta)?, "η(σ) = e1, η(τ) = e3"));
    for p in [3usize, 5, 7, 11, 13] {
        let c = cyclic(p);
        let mut rigid = true;
        for a in enumerate_admissible(&c)? {
            rigid &= is_isomorphic(&a.deform_group()?, &c)?.is_some();
        }
        out.push(check(format!("C{p} is rigid"), rigid, ""));
    }
    let c4 = cyclic(4);
    let mut moved = false;
    for a in enumerate_admissible(&c4)? {
        moved |= is_isomorphic(&a.deform_group()?, &c4)?.is_none();
    }
    out.push(check("C4 is not rigid", moved, ""));
    Ok(out)
}

fn zassenhaus(c: &Ctx) -> Result<Vec<Check>, Error> {
    let mut out = Vec::new();
    let m = construct_mq2(3)?;
    let (k, sharp) = m.group.transitivity_profile();
    let pgl = perm_rep(Family::Pgl2, 9)?.group;
    let spectra_differ = m.group.order_spectrum()? != pgl.order_spectrum()?;
    out.push(check(
        "M(9) permutation model",
        m.group.degree() == 10 && m.group.order() == 720 && k == 3 && sharp && spectra_differ,
        format!("degree {}, order {}, {k}-transitive, sharp {sharp}", m.group.degree(), m.group.order()),
    ));
    for (part, want) in [(DeformPart::M9, 720u128), (DeformPart::Mq2, 720), (DeformPart::Dphi, 64)] {
        let d = emit_deform_presentation(part, 3)?;
        let r = d.verify(c.max_cosets)?;
        out.push(check(
            format!("{} q=3", part.name()),
            r.relators_pass() && r.concluded_order == Some(want),
            format!("order {}, expected {want}", show(r.concluded_order)),
        ));
    }
    Ok(out)
}

fn mathieu_tower(c: &Ctx) -> Result<Vec<Check>, Error> {
    let want = [(7920u128, 4, true), (95040, 5, true), (443520, 3, false), (10200960, 4, false), (244823040, 5, false)];
    let mut out = Vec::new();
    for (d, (order, k, sharp)) in MATHIEU_DEGREES.into_iter().zip(want) {
        let st = mathieu(d)?;
        let prof = st.group.transitivity_profile();
        out.push(check(
            format!("{} permutation model", st.name),
            st.group.order() == order && prof == (k, sharp),
            format!("order {}, {}-transitive, sharp {}", st.group.order(), prof.0, prof.1),
        ));
        let w = st.check();
        out.push(check(format!("{} extension hypotheses", st.name), w.ok(), format!("{} hypotheses", w.items.len())));
        let r = st.verify(c.max_cosets)?;
        let index = r.enumeration.as_ref().map_or(0, |e| e.1);
        out.push(check(
            format!("{} presentation", st.name),
            r.ok() && index == d,
            format!("index {index}, order {}", show(r.concluded_order)),
        ));
    }
    Ok(out)
}

fn glgg_pairs(c: &Ctx) -> Result<Vec<Check>, Error> {
    let bounds = CheckBounds { seed: c.seed, ..CheckBounds::default() };
    let mut out = Vec::new();
    for (name, g) in small_groups()? {
        let subs = g.subgroups()?;
        let mut bad = Vec::new();
        for h in &subs {
            let pair = build_glgg_from_pair(&g, h)?;
            let (rep, fg) = pair.full_report(&bounds)?;
            let ap = emit_for_subgroup(&g, h, HStrategy::Tower, &EmitOptions::default())?;
            let choices = PresentationChoices::from_action(&ap, &pair, false)?;
            let same = emit_glgg_presentation(&pair.glgg, &choices)? == ap.presentation;
            if !(rep.ok() && same && fg.table.order() as u128 == g.order()) {
                bad.push(h.order().to_string());
            }
        }
        let detail = if bad.is_empty() {
            format!("{} subgroups", subs.len())
        } else {
            format!("fails for subgroups of order {}", bad.join(","))
        };
        out.push(check(format!("graphs of groups over {name}"), bad.is_empty(), detail));
    }
    Ok(out)
}

const JOBS: [(&str, Job); 8] = [
    ("polygroup axioms", polygroup_axioms),
    ("action presentations", action_presentations),
    ("rank two families", rank_two_families),
    ("rank three families", rank_three_families),
    ("deformations", deformations),
    ("Zassenhaus groups", zassenhaus),
    ("Mathieu tower", mathieu_tower),
    ("graphs of groups", glgg_pairs),
];

/// Runs every job; returns whether all checks passed.
pub fn verify_all(max_cosets: usize, seed: u64, out: &mut Out) -> bool {
    let ctx = Ctx { max_cosets, seed };
    let results: Vec<Result<Vec<Check>, Error>> = std::thread::scope(|s| {
        let handles: Vec<_> = JOBS.iter().map(|(_, job)| s.spawn(|| job(&ctx))).collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Err(Error::Invalid("job panicked".into()))))
            .collect()
    });
    let (mut pass, mut total) = (0, 0);
    for ((job, _), res) in JOBS.iter().zip(results) {
        out.emit("job", &format!("== {job}"), json!({"job": job}));
        let checks = res.unwrap_or_else(|e| vec![check("job", false, format!("error: {e}"))]);
        for (name, ok, detail) in checks {
            total += 1;
            pass += ok as usize;
            let status = if ok { "PASS" } else { "FAIL" };
            let text = if detail.is_empty() { format!("{status} {name}") } else { format!("{status} {name} ({detail})") };
            out.emit("check", &text, json!({"job": job, "name": name, "pass": ok, "detail": detail}));
        }
    }
    out.emit("summary", &format!("{pass}/{total} checks passed"), json!({"passed": pass, "total": total}));
    pass == total
}

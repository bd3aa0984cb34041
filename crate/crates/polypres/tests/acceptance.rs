//! One line per acceptance criterion. Items that fail because the computed
//! answer disagrees with the published claim are listed in `KNOWN`; the run
//! fails if any other item fails or a known one starts passing.

use polypres::actpres::{emit_for_subgroup, emit_theorem_presentation, EmitOptions, HStrategy};
use polypres::catalog::small_groups;
use polypres::deform::{
    check_deformation_pair_cocycle, construct_mq2, cyclic, deformation_graph, emit_deform_presentation,
    enumerate_admissible, extend_hom, groups_of_order, CrossAction, DeformPart, SelfAction,
};
use polypres::fpres::{relator_check, todd_coxeter, Presentation, Word};
use polypres::glgg::{build_glgg_from_pair, emit_glgg_presentation, CheckBounds, PresentationChoices};
use polypres::matgrp::{emit_family_presentation, gl_order, perm_rep, sl3_stabilizer_polygroup, Family, PresFamily};
use polypres::perm::{is_isomorphic, Perm, PermGroup, TableGroup};
use polypres::polygroup::{double_coset_polygroup, hyper_power, lambda_hyperops, LSet, Lam, Polygroup, Variant};
use polypres::witt::{mathieu, MATHIEU_DEGREES};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{HashMap, HashSet, VecDeque};
use std::time::{Duration, Instant};

const MAX_COSETS: usize = 1_000_000;

/// Items whose computed value contradicts the claim.
const KNOWN: [&str; 2] = ["SL3(2) stabilizer polygroup is P3", "deformation graph of order 8"];

struct Items(Vec<(String, bool)>);

impl Items {
    fn new() -> Items {
        Items(Vec::new())
    }

    fn push(&mut self, name: impl Into<String>, ok: bool) {
        self.0.push((name.into(), ok));
    }
}

fn closure(n: usize, gens: &[Perm]) -> HashSet<Perm> {
    let mut seen = HashSet::from([Perm::identity(n)]);
    let mut queue = VecDeque::from([Perm::identity(n)]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = g.compose(s);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen
}

fn named(n: usize, name: &str) -> TableGroup {
    groups_of_order(n).unwrap().into_iter().find(|g| g.name == name).unwrap()
}

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

fn c1() -> Items {
    let mut it = Items::new();
    for (name, g) in small_groups().unwrap() {
        let ok = g.subgroups().unwrap().iter().all(|h| double_coset_polygroup(&g, h).unwrap().check_axioms().unwrap().ok());
        it.push(format!("polygroup axioms over {name}"), ok);
    }
    it
}

fn c2() -> Items {
    let mut it = Items::new();
    let pgl5 = perm_rep(Family::Pgl2, 5).unwrap().group;
    for (name, g, want) in [
        ("Sym(4)", PermGroup::symmetric(4), factorial(4)),
        ("Sym(5)", PermGroup::symmetric(5), factorial(5)),
        ("PGL2(5)", pgl5.clone(), 120),
    ] {
        let brute = closure(g.degree(), g.gens()).len() as u128;
        let ap = emit_theorem_presentation(&g, 0, HStrategy::Tower, &EmitOptions::default()).unwrap();
        let rel_ok = relator_check(&ap.presentation, &ap.assignment).unwrap().iter().all(|&b| b);
        let index = todd_coxeter(&ap.presentation, &[], MAX_COSETS).unwrap().index as u128;
        it.push(format!("{name} action presentation enumerates to {want}"), rel_ok && index == want && brute == want);
    }
    it
}

fn family_items(it: &mut Items, cases: &[(PresFamily, u64, u128)]) {
    for &(f, q, want) in cases {
        let e = emit_family_presentation(f, q).unwrap();
        let rel_ok = relator_check(&e.presentation, &e.assignment).unwrap().iter().all(|&b| b);
        let r = e.verify(MAX_COSETS).unwrap();
        it.push(format!("{} q={q} enumerates to {want}", f.name()), rel_ok && r.concluded_order == Some(want));
    }
}

fn c3() -> Items {
    let mut it = Items::new();
    let mut cases = Vec::new();
    for q in [3u64, 4, 5] {
        let gl = gl_order(2, q as u128);
        cases.push((PresFamily::Gl2q, q, gl));
        cases.push((PresFamily::Gl2qAlt, q, gl));
        cases.push((PresFamily::B2K, q, ((q - 1) * (q - 1) * q) as u128));
    }
    for q in [3u64, 4, 5, 7] {
        cases.push((PresFamily::Pgl2q, q, gl_order(2, q as u128) / (q as u128 - 1)));
        cases.push((PresFamily::Pgl2qAlt, q, (q * q * q - q) as u128));
    }
    family_items(&mut it, &cases);
    it
}

fn c4() -> Items {
    let mut it = Items::new();
    family_items(&mut it, &[(PresFamily::Sl3q, 2, 168), (PresFamily::Sl3q, 3, 5616)]);
    let e = emit_family_presentation(PresFamily::Psl34, 4).unwrap();
    let rel_ok = relator_check(&e.presentation, &e.assignment).unwrap().iter().all(|&b| b);
    let r = e.verify(MAX_COSETS).unwrap();
    it.push(
        "PSL3(4) presentation on 21 points enumerates to 20160",
        e.target.degree() == 21 && rel_ok && r.concluded_order == Some(20160),
    );
    for q in [2u64, 3, 4] {
        let pg = sl3_stabilizer_polygroup(q).unwrap();
        let iso = pg.len() == 3 && pg.isomorphic(&Polygroup::p3()).unwrap().is_some();
        it.push(format!("SL3({q}) stabilizer polygroup is P3"), iso);
    }
    it
}

fn c5() -> Items {
    let mut it = Items::new();
    let d8 = named(8, "D8");
    let (y, x) = (2, 1);
    let y2x = d8.mul(d8.pow(y, 2), x);
    let id: Vec<usize> = (0..8).collect();
    let fx = extend_hom(&d8, &[x, y], &[y2x, y], 0, |&a, &b| d8.mul(a, b)).unwrap();
    let a = SelfAction::from_generators(d8.clone(), &[x, y], &[fx, id.clone()]).unwrap();
    it.push(
        "D8 deformed by the given action is Q8",
        a.is_admissible() && is_isomorphic(&a.deform_group().unwrap(), &named(8, "Q8")).unwrap().is_some(),
    );
    let edge = |a: &str, b: &str| {
        let mut e = (a.to_string(), b.to_string());
        if e.0 > e.1 {
            std::mem::swap(&mut e.0, &mut e.1);
        }
        e
    };
    let norm = |v: Vec<(String, String)>| {
        let mut v: Vec<_> = v.into_iter().map(|(a, b)| edge(&a, &b)).collect();
        v.sort();
        v
    };
    let claims: [(usize, Vec<(&str, &str)>); 3] = [
        (4, vec![("C4", "C2xC2")]),
        (6, vec![("C6", "S3")]),
        (8, vec![("C8", "D8"), ("C8", "Q8"), ("D8", "Q8"), ("C4xC2", "C2xC2xC2")]),
    ];
    for (n, want) in claims {
        let got = norm(deformation_graph(n).unwrap().edge_names());
        let want = norm(want.into_iter().map(|(a, b)| (a.to_string(), b.to_string())).collect());
        it.push(format!("deformation graph of order {n}"), got == want);
    }
    let g = named(8, "C4xC2");
    let h = named(8, "C2xC2xC2");
    let v = |bits: usize| ((bits & 1) << 2) | (bits & 2) | ((bits >> 2) & 1);
    let swap12: Vec<usize> = (0..8)
        .map(|x| {
            let b = (0..8).find(|&b| v(b) == x).unwrap();
            v((b & 4) | ((b & 1) << 1) | ((b & 2) >> 1))
        })
        .collect();
    let act = CrossAction::from_generators(g, h, &[2, 1], &[swap12, id]).unwrap();
    let eta = act.extend_cocycle(&[2, 1], &[v(1), v(4)]).unwrap();
    it.push("C4xC2 / C2^3 cocycle datum", check_deformation_pair_cocycle(&act, &eta).unwrap());
    for p in [3usize, 5, 7, 11, 13] {
        let c = cyclic(p);
        let rigid = enumerate_admissible(&c)
            .unwrap()
            .iter()
            .all(|a| is_isomorphic(&a.deform_group().unwrap(), &c).unwrap().is_some());
        it.push(format!("C{p} is rigid"), rigid);
    }
    it
}

fn c6() -> Items {
    let mut it = Items::new();
    let m = construct_mq2(3).unwrap();
    let pgl9 = perm_rep(Family::Pgl2, 9).unwrap().group;
    let spectrum = |g: &PermGroup| {
        let mut v: Vec<u64> = closure(g.degree(), g.gens()).iter().map(Perm::order).collect();
        v.sort_unstable();
        v
    };
    it.push("M(9) has degree 10 and order 720", m.group.degree() == 10 && m.group.order() == 720);
    it.push("M(9) is sharply 3-transitive", m.group.transitivity_profile() == (3, true));
    it.push("M(9) and PGL2(9) have different element orders", spectrum(&m.group) != spectrum(&pgl9));
    for (part, want) in [(DeformPart::M9, 720u128), (DeformPart::Mq2, 720), (DeformPart::Dphi, 64)] {
        let d = emit_deform_presentation(part, 3).unwrap();
        let r = d.verify(MAX_COSETS).unwrap();
        it.push(format!("{} q=3 enumerates to {want}", part.name()), r.relators_pass() && r.concluded_order == Some(want));
    }
    it
}

fn c7() -> Items {
    let mut it = Items::new();
    let want = [(7920u128, 4usize, true), (95040, 5, true), (443520, 3, false), (10200960, 4, false), (244823040, 5, false)];
    for (d, (order, k, sharp)) in MATHIEU_DEGREES.into_iter().zip(want) {
        let st = mathieu(d).unwrap();
        it.push(format!("{} order and transitivity", st.name), st.group.order() == order && st.group.transitivity_profile() == (k, sharp));
        it.push(format!("{} extension hypotheses", st.name), st.check().ok());
        let r = st.verify(MAX_COSETS).unwrap();
        let index = r.enumeration.as_ref().map(|e| e.1);
        it.push(format!("{} presentation, index {d}", st.name), r.relators_pass() && index == Some(d) && r.ok());
    }
    it
}

fn c8() -> Items {
    let mut it = Items::new();
    let bounds = CheckBounds::default();
    for (name, g) in small_groups().unwrap() {
        let mut ok = true;
        for h in g.subgroups().unwrap() {
            let pair = build_glgg_from_pair(&g, &h).unwrap();
            let (rep, fg) = pair.full_report(&bounds).unwrap();
            let ap = emit_for_subgroup(&g, &h, HStrategy::Tower, &EmitOptions::default()).unwrap();
            let choices = PresentationChoices::from_action(&ap, &pair, false).unwrap();
            let same = emit_glgg_presentation(&pair.glgg, &choices).unwrap() == ap.presentation;
            ok &= rep.ok() && same && fg.table.order() as u128 == g.order();
        }
        it.push(format!("graphs of groups over {name}"), ok);
    }
    it
}

fn random_group(rng: &mut ChaCha8Rng, max_degree: usize) -> (usize, Vec<Perm>) {
    let n = rng.gen_range(2..=max_degree);
    let k = rng.gen_range(1..=2);
    let gens = (0..k)
        .map(|_| {
            let mut v: Vec<usize> = (0..n).collect();
            v.shuffle(rng);
            Perm::from_images(v).unwrap()
        })
        .collect();
    (n, gens)
}

fn cayley_presentation(n: usize, gens: &[Perm]) -> Presentation {
    let mut p = Presentation::new((0..gens.len()).map(|i| format!("g{i}")).collect());
    let mut words: HashMap<Perm, Word> = HashMap::from([(Perm::identity(n), Word::identity())]);
    let mut queue = VecDeque::from([Perm::identity(n)]);
    let mut seen = Vec::new();
    while let Some(g) = queue.pop_front() {
        seen.push(g.clone());
        for i in 0..gens.len() {
            let w = words[&g].mul(&Word::gen(i));
            let h = w.eval_perm(gens);
            if !words.contains_key(&h) {
                words.insert(h.clone(), w);
                queue.push_back(h);
            }
        }
    }
    for g in &seen {
        for i in 0..gens.len() {
            let w = words[g].mul(&Word::gen(i));
            p.add_eq(&w, &words[&w.eval_perm(gens)], None);
        }
    }
    p
}

fn c9() -> Items {
    let mut it = Items::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut ss = true;
    for _ in 0..50 {
        let (n, gens) = random_group(&mut rng, 7);
        ss &= PermGroup::new(n, gens.clone()).order() == closure(n, &gens).len() as u128;
    }
    it.push("Schreier-Sims order equals closure size", ss);
    let mut tc = true;
    for _ in 0..20 {
        let (n, gens) = random_group(&mut rng, 6);
        let p = cayley_presentation(n, &gens);
        tc &= todd_coxeter(&p, &[], MAX_COSETS).unwrap().index == closure(n, &gens).len();
    }
    it.push("Todd-Coxeter order equals closure size on 20 presentations", tc);
    let mut fr = true;
    for _ in 0..500 {
        let word = |rng: &mut ChaCha8Rng| -> Vec<i32> {
            let len = rng.gen_range(0..25);
            (0..len).map(|_| rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 }).collect()
        };
        let (v, w) = (word(&mut rng), word(&mut rng));
        let joined: Vec<i32> = v.iter().chain(&w).copied().collect();
        fr &= Word::from_letters(v).mul(&Word::from_letters(w)) == Word::from_letters(joined);
    }
    it.push("free reduction is confluent", fr);
    let lat = Variant::Lattice;
    let op = |a: u64, b: u64| lambda_hyperops(Lam::Fin(a), Lam::Fin(b), lat).unwrap();
    let mut lp = true;
    for a in 0..=50u64 {
        for b in 0..=50u64 {
            let ab = op(a, b);
            lp &= ab == op(b, a) && ab.contains(Lam::Fin(0)) == (a == b);
            let want: Vec<u64> = (0..=a.min(b)).map(|g| a + b - 2 * g).collect();
            lp &= ab == LSet::from_finite(want);
        }
        lp &= op(0, a) == LSet::single(Lam::Fin(a));
    }
    for _ in 0..300 {
        let (a, b, c) = (rng.gen_range(0..=50), rng.gen_range(0..=50), rng.gen_range(0..=50));
        let l = op(a, b).product(&LSet::single(Lam::Fin(c)), lat).unwrap();
        let r = LSet::single(Lam::Fin(a)).product(&op(b, c), lat).unwrap();
        lp &= l == r;
    }
    it.push("lattice polygroup on 0..=50", lp);
    let mut pw = true;
    let window: Vec<Lam> = (0..=12).map(Lam::Fin).chain([Lam::Inf]).collect();
    for v in [Variant::PbBigK, Variant::PbGf2] {
        for &a in &window {
            let mut acc = LSet::single(a);
            for n in 1..=8u32 {
                pw &= hyper_power(v, a, n).unwrap() == acc;
                acc = acc.product(&LSet::single(a), v).unwrap();
            }
        }
    }
    pw &= lambda_hyperops(Lam::Fin(0), Lam::Fin(0), Variant::PbGf2).unwrap() == LSet::ray_from(1, true);
    pw &= lambda_hyperops(Lam::Fin(0), Lam::Fin(0), Variant::PbBigK).unwrap() == LSet::ray_from(0, true);
    it.push("Borel powers and 0∘0 on {0..12, ∞}", pw);
    it
}

fn main() {
    let criteria: [(&str, fn() -> Items, u64); 9] = [
        ("1 polygroup axioms on the small catalog", c1, 60),
        ("2 action presentations", c2, 10),
        ("3 rank two linear families", c3, 60),
        ("4 rank three linear families", c4, 300),
        ("5 deformations", c5, 120),
        ("6 Zassenhaus group M(9)", c6, 120),
        ("7 Mathieu tower", c7, 600),
        ("8 graphs of groups on the small catalog", c8, 300),
        ("9 property and oracle suites", c9, 120),
    ];
    let mut unexpected = Vec::new();
    for (name, run, limit) in criteria {
        let t = Instant::now();
        let items = run();
        let elapsed = t.elapsed();
        let in_time = elapsed < Duration::from_secs(limit);
        let failed: Vec<&str> = items.0.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
        let ok = failed.is_empty() && in_time;
        println!("{} criterion {name} ({} items, {:.1}s)", if ok { "PASS" } else { "FAIL" }, items.0.len(), elapsed.as_secs_f64());
        for f in &failed {
            println!("    failed: {f}");
            if !KNOWN.contains(f) {
                unexpected.push(f.to_string());
            }
        }
        if !in_time {
            unexpected.push(format!("{name}: over {limit}s"));
        }
        for (n, ok) in &items.0 {
            if *ok && KNOWN.contains(&n.as_str()) {
                unexpected.push(format!("{n} now passes"));
            }
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected results: {unexpected:?}");
        std::process::exit(1);
    }
}

use super::*;
use crate::actpres::{emit_for_subgroup, EmitOptions, HStrategy};
use crate::deform::groups_of_order;
use crate::fpres::todd_coxeter;
use crate::perm::{is_isomorphic, parse_cycles, PermGroup};
use proptest::prelude::{prop_assert_eq, proptest, ProptestConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sub(n: usize, gens: &[&str]) -> PermGroup {
    PermGroup::new(n, gens.iter().map(|c| parse_cycles(c, n).unwrap()).collect())
}

/// Regular permutation group of a catalog group, and the subgroup generated
/// by the given table elements.
fn regular(order: usize, name: &str, h: &[usize]) -> (PermGroup, PermGroup) {
    let t = groups_of_order(order).unwrap().into_iter().find(|g| g.name == name).unwrap();
    let g = PermGroup::new(order, t.small_generating_set().iter().map(|&a| t.regular_perm(a)).collect());
    let hg = PermGroup::new(order, h.iter().map(|&a| t.regular_perm(a)).collect());
    (g, hg)
}

fn element_of_order(t: &str, order: usize, k: usize) -> usize {
    let g = groups_of_order(order).unwrap().into_iter().find(|g| g.name == t).unwrap();
    (0..order).find(|&a| g.elem_order(a) == k).unwrap()
}

fn cases() -> Vec<(&'static str, PermGroup, PermGroup)> {
    let q8c4 = element_of_order("Q8", 8, 4);
    let c6c2 = element_of_order("C6", 6, 2);
    let (q8, c4) = regular(8, "Q8", &[q8c4]);
    let (c6, c2) = regular(6, "C6", &[c6c2]);
    vec![
        ("S3 / <(1 2)>", PermGroup::symmetric(3), sub(3, &["(1 2)"])),
        ("S4 / S3", PermGroup::symmetric(4), sub(4, &["(1 2)", "(1 2 3)"])),
        ("C6 / C2", c6, c2),
        ("Q8 / C4", q8, c4),
        ("S4 / S4", PermGroup::symmetric(4), PermGroup::symmetric(4)),
        ("S4 / <(1 2 3 4)>", PermGroup::symmetric(4), sub(4, &["(1 2 3 4)"])),
        ("A4 / trivial", PermGroup::alternating(4), PermGroup::trivial(4)),
    ]
}

#[test]
fn pair_reports_pass() {
    for (name, g, h) in cases() {
        let p = build_glgg_from_pair(&g, &h).unwrap();
        let (rep, fg) = p.full_report(&CheckBounds::default()).unwrap();
        assert!(rep.ok(), "{name}\n{rep}");
        assert_eq!(fg.table.order() as u128, g.order(), "{name}");
        let (gt, _) = TableGroup::from_perm_group("G", &g).unwrap();
        assert!(is_isomorphic(&fg.table, &gt).unwrap().is_some(), "{name}");
    }
}

#[test]
fn small_pairs_have_expected_shape() {
    let p = build_glgg_from_pair(&PermGroup::symmetric(3), &sub(3, &["(1 2)"])).unwrap();
    assert_eq!(p.glgg.len(), 2);
    assert_eq!(p.zeta.len(), 6);
    assert!(p.glgg.polygroup().unwrap().isomorphic(&Polygroup::p2()).unwrap().is_some());
    let p = build_glgg_from_pair(&PermGroup::symmetric(4), &sub(4, &["(1 2)", "(1 2 3)"])).unwrap();
    assert_eq!(p.zeta.len(), 24);
    assert_eq!(p.glgg.group_order(), 24);
    // H normal: E is the quotient group
    let (_, q8, c4) = cases().into_iter().nth(3).unwrap();
    let p = build_glgg_from_pair(&q8, &c4).unwrap();
    assert!(p.glgg.polygroup().unwrap().is_group());
}

#[test]
fn whole_group_collapses() {
    let g = PermGroup::symmetric(4);
    let p = build_glgg_from_pair(&g, &g).unwrap();
    let x = &p.glgg;
    assert_eq!(x.len(), 1);
    for a in 0..24 {
        assert_eq!(x.alpha(0, a, 0), x.tilde_h(a));
    }
    let ap = emit_for_subgroup(&g, &g, HStrategy::Tower, &EmitOptions::default()).unwrap();
    let c = PresentationChoices::from_action(&ap, &p, false).unwrap();
    let pres = emit_glgg_presentation(x, &c).unwrap();
    assert_eq!(pres.gens.len(), c.h_presentation.gens.len());
    assert_eq!(pres, ap.presentation);
}

#[test]
fn trivial_glgg_passes() {
    let t = groups_of_order(6).unwrap().into_iter().find(|g| g.name == "S3").unwrap();
    let x = trivial_glgg(t.clone());
    let b = CheckBounds::default();
    assert!(check_glgg_axioms(&x, &b).ok());
    assert!(check_group_laws(&x, &b).ok());
    let fg = fundamental_group(&x, &b).unwrap();
    assert!(is_isomorphic(&fg.table, &t).unwrap().is_some());
}

#[test]
fn mutated_theta_fails_iii() {
    // S5 on points with H = S4: the nontrivial edge is self-paired and H_f ≅ S3
    let g = PermGroup::symmetric(5);
    let p = build_glgg_from_pair(&g, &g.point_stabilizer(0)).unwrap();
    let x = &p.glgg;
    let f = (1..x.len()).find(|&f| x.is_self_paired(f)).unwrap();
    let h = &x.h;
    let c = *x.hf[f].iter().find(|&&c| x.hf[f].iter().any(|&y| h.mul(c, y) != h.mul(y, c))).unwrap();
    let bad = x.with_theta(f, h.mul(x.theta[f], c));
    let rep = check_glgg_axioms(&bad, &CheckBounds::default());
    assert!(rep.failed("graph of groups (iii)"), "{rep}");
    assert!(check_glgg_axioms(x, &CheckBounds::default()).ok());
}

#[test]
fn broken_alpha_fails_iv() {
    let p = build_glgg_from_pair(&PermGroup::symmetric(4), &sub(4, &["(1 2)"])).unwrap();
    let x = &p.glgg;
    let n = x.h.order();
    // swap two values of α away from the normalized positions
    let (f, f2) = (1, x.len() - 1);
    let y = Glgg::new(x.labels.clone(), x.bar.clone(), x.h.clone(), x.hf.clone(), x.iota.clone(), x.theta.clone(), |a, b, c| {
        if (a, c) == (f, f2) && b < n {
            x.alpha(a, (b + 1) % n, c)
        } else {
            x.alpha(a, b, c)
        }
    })
    .unwrap();
    assert!(!check_glgg_axioms(&y, &CheckBounds::default()).ok());
}

#[test]
fn presentation_matches_actpres() {
    for (name, g, h) in cases() {
        let p = build_glgg_from_pair(&g, &h).unwrap();
        for all_pairs in [false, true] {
            let opts = EmitOptions { all_pairs };
            let ap = emit_for_subgroup(&g, &h, HStrategy::Tower, &opts).unwrap();
            let c = PresentationChoices::from_action(&ap, &p, all_pairs).unwrap();
            let pres = emit_glgg_presentation(&p.glgg, &c).unwrap();
            assert_eq!(pres, ap.presentation, "{name} all_pairs={all_pairs}");
        }
    }
}

#[test]
fn regular_choices_present_the_group() {
    for (name, g, h) in cases() {
        let p = build_glgg_from_pair(&g, &h).unwrap();
        let c = PresentationChoices::regular(&p.glgg);
        let pres = emit_glgg_presentation(&p.glgg, &c).unwrap();
        let t = todd_coxeter(&pres, &[], 100_000).unwrap();
        assert_eq!(t.index as u128, g.order(), "{name}");
    }
}

/// `σ′(f) = a_f σ(f) b_f` with `b_f = a_{f̄}⁻¹` on pairs and `b_f = k a_f⁻¹`,
/// `k ∈ H_f`, on self-paired edges.
fn twist(p: &PairGlgg, seed: u64) -> (Vec<usize>, Vec<usize>) {
    let x = &p.glgg;
    let h = &x.h;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = x.len();
    let mut a: Vec<usize> = (0..r).map(|_| rng.gen_range(0..h.order())).collect();
    a[0] = 0;
    let b = (0..r)
        .map(|f| {
            if f == 0 {
                0
            } else if x.is_self_paired(f) {
                let k = x.hf[f][rng.gen_range(0..x.hf[f].len())];
                h.mul(k, h.inv(a[f]))
            } else {
                h.inv(a[x.bar[f]])
            }
        })
        .collect();
    (a, b)
}

#[test]
fn retwisted_sections_are_isomorphic() {
    for (name, g, h) in cases() {
        let p = build_glgg_from_pair(&g, &h).unwrap();
        for seed in 0..3 {
            let (a, b) = twist(&p, seed);
            let q = p.retwisted(&a, &b).unwrap();
            let b0 = CheckBounds::default();
            assert!(check_glgg_axioms(&q.glgg, &b0).ok(), "{name}");
            let rep = check_morphism(&p.glgg, &q.glgg, &a, &b);
            assert!(rep.ok(), "{name} seed {seed}\n{rep}");
            let inv = |v: &[usize]| v.iter().map(|&z| p.glgg.h.inv(z)).collect::<Vec<_>>();
            assert!(check_morphism(&q.glgg, &p.glgg, &inv(&a), &inv(&b)).ok(), "{name}");
            if p.glgg.h.order() > 1 && p.glgg.len() > 1 {
                let mut c = a.clone();
                let f = 1;
                c[f] = (0..p.glgg.h.order()).find(|&z| !p.glgg.hf[f].contains(&p.glgg.h.mul(p.glgg.h.inv(a[f]), z))).unwrap_or(c[f]);
                if c[f] != a[f] {
                    assert!(!check_morphism(&p.glgg, &q.glgg, &c, &b).ok(), "{name}");
                }
            }
        }
    }
}

#[test]
fn unmemoized_alpha_agrees() {
    let g = PermGroup::symmetric(4);
    let h = sub(4, &["(1 2)"]);
    let p = build_glgg_from_pair(&g, &h).unwrap();
    let s = &p.source_for_tests();
    let x = &p.glgg;
    for f in 0..x.len() {
        for a in 0..x.h.order() {
            for f2 in 0..x.len() {
                assert_eq!(x.alpha(f, a, f2), s.alpha(f, a, f2));
            }
        }
    }
}

#[test]
fn epsilon_factors_through_double_cosets() {
    let g = PermGroup::symmetric(5);
    let p = build_glgg_from_pair(&g, &sub(5, &["(1 2)", "(3 4)"])).unwrap();
    let x = &p.glgg;
    let h = &x.h;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let (f, a, f2) = (rng.gen_range(0..x.len()), rng.gen_range(0..h.order()), rng.gen_range(0..x.len()));
        let fb = x.bar[f];
        let l = x.hf[fb][rng.gen_range(0..x.hf[fb].len())];
        let r = x.hf[f2][rng.gen_range(0..x.hf[f2].len())];
        assert_eq!(x.alpha(f, h.mul(l, h.mul(a, r)), f2).f, x.alpha(f, a, f2).f);
    }
}

#[test]
fn sampled_checks_on_a_larger_pair() {
    // |G| = 720 is above the exhaustive limit
    let g = PermGroup::symmetric(6);
    let p = build_glgg_from_pair(&g, &sub(6, &["(1 2 3)", "(1 2)", "(4 5)"])).unwrap();
    let b = CheckBounds { max_tuples: 20_000, seed: 3 };
    let (rep, fg) = p.full_report(&b).unwrap();
    assert!(rep.ok(), "{rep}");
    assert_eq!(fg.table.order(), 720);
}

fn s4_pair() -> PairGlgg {
    build_glgg_from_pair(&PermGroup::symmetric(4), &sub(4, &["(1 2)(3 4)"])).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative_and_zeta_multiplicative(i in 0usize..24, j in 0usize..24, k in 0usize..24) {
        let p = s4_pair();
        let x = &p.glgg;
        let (a, b, c) = (p.zeta[i], p.zeta[j], p.zeta[k]);
        prop_assert_eq!(x.multiply(&x.multiply(&a, &b), &c), x.multiply(&a, &x.multiply(&b, &c)));
        let gij = p.g_elems[i].compose(&p.g_elems[j]);
        prop_assert_eq!(p.zeta_of(&gij), x.multiply(&a, &b));
        prop_assert_eq!(p.zeta_of(&p.g_elems[i].inverse()), x.inverse(&a));
    }

    #[test]
    fn product_ignores_representatives(i in 0usize..24, j in 0usize..24, s in 0usize..4, t in 0usize..4) {
        let p = s4_pair();
        let x = &p.glgg;
        let (a, b) = (p.zeta[i], p.zeta[j]);
        let ca = x.coset(&a);
        let cb = x.coset(&b);
        prop_assert_eq!(x.multiply_with(&a, &b, ca[s % ca.len()], cb[t % cb.len()]), x.multiply(&a, &b));
    }
}

#[test]
fn zeta_matches_normal_form() {
    let (_, g, h) = cases().into_iter().nth(1).unwrap();
    let p = build_glgg_from_pair(&g, &h).unwrap();
    let s = p.section();
    for x in &p.g_elems {
        let nf = s.normal_form(&s.lift(x));
        let z = p.zeta_of(x);
        assert_eq!(z.f, nf.coset);
        assert_eq!(p.h_elements()[z.rho], nf.rho);
        assert_eq!(p.h_elements()[z.lambda], nf.lambda);
    }
}

use super::*;
use crate::fpres::{relator_check, todd_coxeter};
use crate::perm::parse_cycles;

fn check_section(s: &SectionData) {
    let h = &s.h;
    assert!(s.cosets[0].sigma.is_identity());
    for (f, c) in s.cosets.iter().enumerate() {
        assert_eq!(s.coset_of(&c.sigma), f);
        assert!(c.transversal()[c.orbit.binary_search(&c.omega).unwrap()].is_identity());
        if c.bar != f {
            assert_eq!(s.cosets[c.bar].sigma, c.sigma.inverse());
        } else {
            let theta = c.theta.as_ref().unwrap();
            assert!(h.contains(theta) && c.hf.contains(theta));
            assert_eq!(&s.iota(f, theta), theta);
            for x in c.hf.gens() {
                let twice = s.iota(f, &s.iota(f, x));
                assert_eq!(twice, x.conj(theta));
            }
        }
        for x in c.hf.gens() {
            assert!(s.cosets[c.bar].hf.contains(&s.iota(f, x)));
        }
        for f2 in 0..s.len() {
            let q = s.q(f, f2);
            assert!(q[0].is_identity() || q.iter().any(|x| x.is_identity()));
            if f != f2 {
                let back: Vec<Perm> = s.q(f2, f).iter().map(|x| x.inverse()).collect();
                let mut a = q.clone();
                let mut b = back;
                a.sort();
                b.sort();
                assert_eq!(a, b);
            }
        }
    }
}

#[test]
fn trivial_bundle_for_whole_group() {
    let g = PermGroup::symmetric(3);
    let s = SectionData::build_section(&g, &g).unwrap();
    assert_eq!(s.len(), 1);
    assert!(s.cosets[0].sigma.is_identity());
}

#[test]
fn sym3_transposition_section() {
    let g = PermGroup::symmetric(3);
    let h = PermGroup::new(3, vec![parse_cycles("(1 2)", 3).unwrap()]);
    let s = SectionData::build_section(&g, &h).unwrap();
    assert_eq!(s.len(), 2);
    let c = &s.cosets[1];
    assert_eq!(c.bar, 1);
    let sig = s.lower(&c.sigma);
    assert!(h.contains(&sig.compose(&sig)));
    assert!(!h.contains(&sig));
    check_section(&s);
}

#[test]
fn normal_form_reconstructs() {
    let g = PermGroup::symmetric(4);
    let s = SectionData::for_point(&g, 0).unwrap();
    for x in g.elements().unwrap() {
        let nf = s.normal_form(&x);
        assert!(s.cosets[nf.coset].rho_for(nf.rho.apply(s.cosets[nf.coset].omega)).is_some());
        assert!(s.h.contains(&nf.lambda) && s.h.contains(&nf.rho));
        let back = nf.rho.compose(&s.cosets[nf.coset].sigma).compose(&nf.lambda);
        assert_eq!(back, x);
    }
    let id = s.normal_form(&g.identity());
    assert!(id.rho.is_identity() && id.lambda.is_identity() && id.coset == 0);
    let sig = s.cosets[1].sigma.clone();
    let nf = s.normal_form(&sig);
    assert!(nf.rho.is_identity() && nf.lambda.is_identity() && nf.coset == 1);
}

#[test]
fn section_invariants_on_subgroups() {
    let g = PermGroup::symmetric(4);
    let subs = [
        vec!["(1 2)"],
        vec!["(1 2)(3 4)"],
        vec!["(1 2 3 4)"],
        vec!["(1 2 3)"],
        vec!["(1 2)", "(3 4)"],
        vec!["(1 2 3)", "(1 2)"],
    ];
    for gens in subs {
        let h = PermGroup::new(4, gens.iter().map(|c| parse_cycles(c, 4).unwrap()).collect());
        let s = SectionData::build_section(&g, &h).unwrap();
        check_section(&s);
    }
}

fn certified(ap: &ActionPresentation, order: u128) {
    assert!(relator_check(&ap.presentation, &ap.assignment).unwrap().iter().all(|&b| b));
    let t = todd_coxeter(&ap.presentation, &[], 100_000).unwrap();
    assert_eq!(t.index as u128, order);
}

#[test]
fn regular_c4() {
    let g = PermGroup::cyclic(4);
    let ap = emit_theorem_presentation(&g, 0, HStrategy::Tower, &EmitOptions::default()).unwrap();
    assert_eq!(ap.presentation.gens.len(), 2);
    certified(&ap, 4);
}

#[test]
fn sym4_and_sym5() {
    for n in [4, 5] {
        let g = PermGroup::symmetric(n);
        let ap = emit_theorem_presentation(&g, 0, HStrategy::Tower, &EmitOptions::default()).unwrap();
        certified(&ap, g.order());
        for x in g.elements().unwrap().iter().step_by(7) {
            assert_eq!(&ap.rewrite(x).eval_perm(&ap.assignment), x);
        }
    }
}

#[test]
fn intransitive_rejected() {
    let g = PermGroup::new(4, vec![parse_cycles("(1 2)", 4).unwrap()]);
    assert!(emit_theorem_presentation(&g, 0, HStrategy::Tower, &EmitOptions::default()).is_err());
}

#[test]
fn two_transitive_sym3() {
    let g = PermGroup::symmetric(3);
    let h = parse_cycles("(2 3)", 3).unwrap();
    let ap = emit_2transitive_presentation(&g, 0, 1, HStrategy::Regular(vec![("h".into(), h)])).unwrap();
    certified(&ap, 6);
    let tags: Vec<_> = ap.presentation.tags.iter().flatten().collect();
    assert!(tags.iter().any(|t| t.as_str() == "square"));
}

#[test]
fn degree_two_has_no_third_family() {
    let g = PermGroup::cyclic(2);
    let ap = emit_2transitive_presentation(&g, 0, 1, HStrategy::Tower).unwrap();
    assert_eq!(ap.presentation.gens, vec!["x".to_string()]);
    assert_eq!(ap.presentation.relators.len(), 1);
    certified(&ap, 2);
}

#[test]
fn q_size_tracks_three_transitivity() {
    let s = SectionData::two_transitive(&PermGroup::symmetric(5), 0, 1).unwrap();
    assert_eq!(s.q(1, 1).len(), 2);
    let a = PermGroup::new(5, vec![parse_cycles("(1 2 3 4 5)", 5).unwrap(), parse_cycles("(2 3 5 4)", 5).unwrap()]);
    let s = SectionData::two_transitive(&a, 0, 1).unwrap();
    assert!(s.q(1, 1).len() > 2);
}

#[test]
fn all_pairs_same_order() {
    let opts = EmitOptions { all_pairs: true };
    for g in [PermGroup::symmetric(4), PermGroup::cyclic(5), PermGroup::alternating(4)] {
        let ap = emit_theorem_presentation(&g, 0, HStrategy::Tower, &opts).unwrap();
        certified(&ap, g.order());
    }
}

#[test]
fn tower_verification() {
    let g = PermGroup::alternating(6);
    let ap = emit_theorem_presentation(&g, 0, HStrategy::Tower, &EmitOptions::default()).unwrap();
    let reps = ap.verify(100_000, 60).unwrap();
    assert!(reps.iter().all(|r| r.ok()));
    assert_eq!(reps.last().unwrap().concluded_order, Some(360));
}

#[test]
fn arbitrary_subgroup_with_named_generators() {
    let g = PermGroup::symmetric(4);
    let a = parse_cycles("(1 2)", 4).unwrap();
    let b = parse_cycles("(3 4)", 4).unwrap();
    let h = PermGroup::new(4, vec![a.clone(), b.clone()]);
    let ap = emit_for_subgroup(&g, &h, HStrategy::Regular(vec![("a".into(), a), ("b".into(), b)]), &EmitOptions::default())
        .unwrap();
    assert!(ap.assignment.iter().all(|p| p.degree() == 4));
    certified(&ap, 24);
}

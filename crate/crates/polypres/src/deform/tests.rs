use super::*;
use crate::fpres::relator_check;
use crate::matgrp::{perm_rep, Family, Mat};
use crate::perm::is_isomorphic;

fn named(n: usize, name: &str) -> TableGroup {
    groups_of_order(n).unwrap().into_iter().find(|g| g.name == name).unwrap()
}

/// Index of `x^i y^j` in a metacyclic table with `y`-order `n`.
fn xy(i: usize, j: usize, n: usize) -> usize {
    i * n + j
}

#[test]
fn trivial_and_conjugation_actions() {
    let g = named(6, "S3");
    let t = SelfAction::trivial(g.clone());
    let c = SelfAction::conjugation(g.clone());
    assert!(t.is_admissible() && c.is_admissible());
    for a in 0..6 {
        for b in 0..6 {
            assert_eq!(t.circ(a, b), g.mul(a, b));
            // dual operation: g₁ ∘ g₂ = g₂ g₁
            assert_eq!(c.circ(a, b), g.mul(b, a));
        }
        assert_eq!(t.circ(0, a), a);
        assert_eq!(c.circ(a, 0), a);
    }
    assert_eq!(t.deform_group().unwrap().order(), 6);
}

#[test]
fn d8_deforms_to_q8() {
    // D8 = ⟨x, y | x² = y⁴ = (xy)² = 1⟩ with y the rotation
    let d8 = named(8, "D8");
    let (y, x) = (xy(1, 0, 2), xy(0, 1, 2));
    let y2x = d8.mul(d8.pow(y, 2), x);
    let id: Vec<usize> = (0..8).collect();
    let fx = extend_hom(&d8, &[x, y], &[y2x, y], 0, |&a, &b| d8.mul(a, b)).unwrap();
    let a = SelfAction::from_generators(d8.clone(), &[x, y], &[fx, id]).unwrap();
    assert!(a.is_admissible());
    let q = a.deform_group().unwrap();
    assert!(is_isomorphic(&q, &named(8, "Q8")).unwrap().is_some());
}

#[test]
fn small_graphs() {
    let g4 = deformation_graph(4).unwrap();
    assert_eq!(g4.edge_names(), vec![("C4".to_string(), "C2xC2".to_string())]);
    let g6 = deformation_graph(6).unwrap();
    assert_eq!(g6.edge_names(), vec![("C6".to_string(), "S3".to_string())]);
    let g8 = deformation_graph(8).unwrap();
    for (a, b) in [("C8", "D8"), ("C8", "Q8"), ("D8", "Q8"), ("C4xC2", "C2xC2xC2")] {
        assert!(g8.has_edge(a, b), "{a} {b}");
    }
    // every pair except C8 with the two noncyclic abelian groups is joined
    assert_eq!(g8.edges.len(), 8);
    assert!(!g8.has_edge("C8", "C4xC2") && !g8.has_edge("C8", "C2xC2xC2"));
    // both directions are realized
    for &(i, j) in &g8.edges {
        assert!(g8.found.contains(&(i, j)) && g8.found.contains(&(j, i)));
    }
    assert!(deformation_graph(9).unwrap().edges.is_empty());
}

#[test]
fn abelian_to_dihedral() {
    // φ(σ) = 1, φ(τ) = inversion of σ on C4 × C2 gives σ^i τ^j ∘ σ^k τ^l = σ^{i ± k} τ^{j+l}
    let g = named(8, "C4xC2");
    let (sigma, tau) = (2, 1);
    let id: Vec<usize> = (0..8).collect();
    let inv_sigma = extend_hom(&g, &[sigma, tau], &[g.inv(sigma), tau], 0, |&a, &b| g.mul(a, b)).unwrap();
    let a = SelfAction::from_generators(g.clone(), &[sigma, tau], &[id, inv_sigma]).unwrap();
    assert!(a.is_admissible());
    assert!(is_isomorphic(&a.deform_group().unwrap(), &named(8, "D8")).unwrap().is_some());
}

#[test]
fn odd_cyclic_groups_are_rigid() {
    for p in [3, 5, 7, 11, 13] {
        let c = cyclic(p);
        for a in enumerate_admissible(&c).unwrap() {
            assert!(is_isomorphic(&a.deform_group().unwrap(), &c).unwrap().is_some());
        }
    }
    let c4 = cyclic(4);
    assert!(enumerate_admissible(&c4)
        .unwrap()
        .iter()
        .any(|a| is_isomorphic(&a.deform_group().unwrap(), &c4).unwrap().is_none()));
}

#[test]
fn action_counts_match_brute_force() {
    // Hom(G, Aut G) by brute force over all maps on a generating set
    for g in [cyclic(2), cyclic(4), named(8, "C2xC2xC2"), named(6, "S3")] {
        let auts = automorphisms(&g);
        let gens = g.small_generating_set();
        let id: Vec<usize> = (0..g.order()).collect();
        let mut count = 0;
        let mut idx = vec![0usize; gens.len()];
        'outer: loop {
            let imgs: Vec<Vec<usize>> = idx.iter().map(|&i| auts[i].clone()).collect();
            if extend_hom(&g, &gens, &imgs, id.clone(), |a, b| b.iter().map(|&x| a[x]).collect()).is_some() {
                count += 1;
            }
            for k in 0..idx.len() {
                idx[k] += 1;
                if idx[k] < auts.len() {
                    continue 'outer;
                }
                idx[k] = 0;
            }
            break;
        }
        assert_eq!(enumerate_actions(&g, false).unwrap().len(), count, "{}", g.name);
    }
    assert_eq!(enumerate_admissible(&cyclic(2)).unwrap().len(), 1);
}

#[test]
fn cocycle_example() {
    // G = C4 × C2 = ⟨σ, τ⟩, H = GF(2)³ with e₁, e₂, e₃ the bits 1, 2, 4
    let g = named(8, "C4xC2");
    let h = named(8, "C2xC2xC2");
    let (sigma, tau) = (2, 1);
    // element index of a vector with bits e₁ e₂ e₃ in the product numbering (a,b,c) ↦ 4a + 2b + c
    let v = |bits: usize| ((bits & 1) << 2) | (bits & 2) | ((bits >> 2) & 1);
    let swap12: Vec<usize> = (0..8).map(|x| {
        let bits = (0..8).find(|&b| v(b) == x).unwrap();
        v((bits & 4) | ((bits & 1) << 1) | ((bits & 2) >> 1))
    }).collect();
    let id: Vec<usize> = (0..8).collect();
    let act = CrossAction::from_generators(g.clone(), h.clone(), &[sigma, tau], &[swap12, id]).unwrap();
    assert_eq!(act.kernel().len(), 4);
    let eta = act.extend_cocycle(&[sigma, tau], &[v(1), v(4)]).unwrap();
    assert!(check_deformation_pair_cocycle(&act, &eta).unwrap());
    // the induced lattice map sends stable subgroups to stable subgroups
    let phi = act.induced_action(&eta).unwrap();
    assert!(phi.is_admissible());
    // regression fixture: η(τ) = e₁ + e₃ is not bijective
    let eta2 = act.extend_cocycle(&[sigma, tau], &[v(1), v(5)]);
    assert!(eta2.map_or(true, |e| check_deformation_pair_cocycle(&act, &e).is_err()));
}

#[test]
fn trivial_action_with_isomorphism() {
    let g = named(8, "C4xC2");
    let id: Vec<usize> = (0..8).collect();
    let act = CrossAction::from_generators(g.clone(), g.clone(), &[2, 1], &[id.clone(), id.clone()]).unwrap();
    assert!(check_deformation_pair_cocycle(&act, &id).unwrap());
}

#[test]
fn identity_cocycle_and_kernel_quotient() {
    for n in [4, 6, 8] {
        for g in groups_of_order(n).unwrap() {
            for a in enumerate_admissible(&g).unwrap() {
                let d = a.deform_group().unwrap();
                for x in 0..n {
                    assert_eq!(d.mul(x, a.right_inverse(x)), 0);
                    for y in 0..n {
                        // g·h = g ∘_φ ^g h
                        assert_eq!(g.mul(x, y), a.circ(x, a.apply(x, y)));
                    }
                }
                // kernels coincide and g ↦ g⁻¹ is multiplicative modulo the kernel
                let ker = a.kernel();
                let mut in_ker = vec![false; n];
                for &k in &ker {
                    in_ker[k] = true;
                }
                for x in 0..n {
                    for y in 0..n {
                        let lhs = g.inv(g.mul(x, y));
                        let rhs = d.mul(g.inv(x), g.inv(y));
                        assert!(in_ker[d.mul(d.inv(rhs), lhs)]);
                    }
                }
            }
        }
    }
}

#[test]
fn equivalent_actions_give_isomorphic_deformations() {
    let g = named(8, "D8");
    let auts = automorphisms(&g);
    for a in enumerate_admissible(&g).unwrap().iter().step_by(3) {
        let d = a.deform_group().unwrap();
        for th in auts.iter().step_by(2) {
            let t = a.twist(th);
            assert!(t.is_admissible());
            assert!(d.is_isomorphism(&t.deform_group().unwrap(), th));
        }
    }
}

#[test]
fn m9_group() {
    let m = construct_mq2(3).unwrap();
    assert_eq!(m.group.degree(), 10);
    assert_eq!(m.group.order(), 720);
    assert_eq!(m.group.transitivity_profile(), (3, true));
    let pgl = perm_rep(Family::Pgl2, 9).unwrap().group;
    assert_ne!(m.group.order_spectrum().unwrap(), pgl.order_spectrum().unwrap());
    assert!(m.named_perm("Z0").unwrap().is_identity());
    let m25 = construct_mq2(5).unwrap();
    assert_eq!((m25.group.degree(), m25.group.order()), (26, 15600));
    assert!(construct_mq2(4).is_err());
}

#[test]
fn k_values_for_nine() {
    let f = crate::ffield::Field::of_order(9).unwrap();
    assert_eq!(&k_table(&f)[1..], &[2, 1, 6, 4, 7, 3, 5]);
}

#[test]
fn twisted_action_is_multiplicative() {
    let tw = TwistedGl2::new(3).unwrap();
    let ms: Vec<Mat> = tw.named().into_iter().map(|(_, m)| m).collect();
    let pts = crate::matgrp::PointSet::new(&tw.field, 2, crate::matgrp::Domain::Vectors);
    for a in &ms {
        for b in &ms {
            let ab = tw.circ(a, b);
            let pa = pts.perm_by(|v| tw.act(a, v)).unwrap();
            let pb = pts.perm_by(|v| tw.act(b, v)).unwrap();
            assert_eq!(pts.perm_by(|v| tw.act(&ab, v)).unwrap(), pa.compose(&pb));
        }
    }
}

#[test]
fn deform_presentations() {
    let cases = [
        (DeformPart::Dphi, 64u128),
        (DeformPart::Bphi, 576),
        (DeformPart::Gphi, 5760),
        (DeformPart::Mq2, 720),
        (DeformPart::M9, 720),
    ];
    for (part, order) in cases {
        let d = emit_deform_presentation(part, 3).unwrap();
        let ok = relator_check(&d.presentation, &d.assignment).unwrap();
        let bad: Vec<String> = (0..ok.len())
            .filter(|&i| !ok[i])
            .map(|i| d.presentation.relators[i].show(&d.presentation.gens))
            .collect();
        assert!(bad.is_empty(), "{}: {bad:?}", part.name());
        assert_eq!(d.target.order(), order);
        let r = d.verify(1_000_000).unwrap();
        assert_eq!(r.concluded_order, Some(order), "{}\n{r}", part.name());
    }
}

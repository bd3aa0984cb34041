use polypres::ffield::Field;
use polypres::fpres::{todd_coxeter, verify_presentation, Presentation, Strategy as Bound, Word};
use polypres::perm::{Perm, PermGroup};
use polypres::polygroup::{double_coset_polygroup, hyper_power, lambda_hyperops, LSet, Lam, Variant};
use proptest::prelude::*;
use std::collections::{HashMap, HashSet, VecDeque};

fn perm_strategy(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
}

fn group_strategy(max_degree: usize, max_gens: usize) -> impl Strategy<Value = (usize, Vec<Perm>)> {
    (2..=max_degree).prop_flat_map(move |n| (Just(n), prop::collection::vec(perm_strategy(n), 1..=max_gens)))
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

/// Presentation read off the Cayley graph: a spanning tree of words and one
/// relator per edge.
fn cayley_presentation(n: usize, gens: &[Perm]) -> Presentation {
    let mut p = Presentation::new((0..gens.len()).map(|i| format!("g{i}")).collect());
    let mut words: HashMap<Perm, Word> = HashMap::from([(Perm::identity(n), Word::identity())]);
    let mut queue = VecDeque::from([Perm::identity(n)]);
    let mut order = Vec::new();
    while let Some(g) = queue.pop_front() {
        order.push(g.clone());
        for i in 0..gens.len() {
            let w = words[&g].mul(&Word::gen(i));
            let h = w.eval_perm(gens);
            if !words.contains_key(&h) {
                words.insert(h.clone(), w);
                queue.push_back(h);
            }
        }
    }
    for g in &order {
        for i in 0..gens.len() {
            let w = words[g].mul(&Word::gen(i));
            let h = w.eval_perm(gens);
            p.add_eq(&w, &words[&h], None);
        }
    }
    p
}

/// Free reduction by repeatedly deleting the leftmost cancelling pair.
fn naive_reduce(mut v: Vec<i32>) -> Vec<i32> {
    while let Some(i) = (0..v.len().saturating_sub(1)).find(|&i| v[i] == -v[i + 1]) {
        v.drain(i..i + 2);
    }
    v
}

fn letters() -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(prop_oneof![1..=3i32, -3..=-1i32], 0..30)
}

fn window() -> Vec<Lam> {
    (0..=12).map(Lam::Fin).chain([Lam::Inf]).collect()
}

fn lat(a: u64) -> LSet {
    LSet::single(Lam::Fin(a))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn schreier_sims_matches_closure((n, gens) in group_strategy(7, 3), x in (2usize..=7).prop_flat_map(perm_strategy)) {
        let g = PermGroup::new(n, gens.clone());
        let all = closure(n, &gens);
        prop_assert_eq!(g.order(), all.len() as u128);
        if x.degree() == n {
            prop_assert_eq!(g.contains(&x), all.contains(&x));
        }
    }

    #[test]
    fn free_reduction_is_confluent(v in letters(), w in letters()) {
        let rv = Word::from_letters(v.clone());
        prop_assert_eq!(rv.letters(), &naive_reduce(v.clone())[..]);
        let rw = Word::from_letters(w.clone());
        let joined: Vec<i32> = v.iter().chain(&w).copied().collect();
        prop_assert_eq!(rv.mul(&rw), Word::from_letters(joined));
        prop_assert!(rv.mul(&rv.inverse()).is_empty());
    }

    #[test]
    fn presentation_text_round_trip(rels in prop::collection::vec(letters(), 0..6)) {
        let mut p = Presentation::new(vec!["a".into(), "b".into(), "c".into()]);
        for r in rels {
            p.add(Word::from_letters(r), None);
        }
        prop_assert_eq!(Presentation::from_text(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn lattice_polygroup(a in 0u64..=50, b in 0u64..=50, c in 0u64..=50) {
        let v = Variant::Lattice;
        let ab = lambda_hyperops(Lam::Fin(a), Lam::Fin(b), v).unwrap();
        prop_assert_eq!(&ab, &lambda_hyperops(Lam::Fin(b), Lam::Fin(a), v).unwrap());
        prop_assert_eq!(lambda_hyperops(Lam::Fin(0), Lam::Fin(a), v).unwrap(), lat(a));
        prop_assert_eq!(ab.contains(Lam::Fin(0)), a == b);
        // every element is its own inverse, so reversibility reads c ∈ a∘b ⇒ a ∈ c∘b
        if ab.contains(Lam::Fin(c)) {
            prop_assert!(lambda_hyperops(Lam::Fin(c), Lam::Fin(b), v).unwrap().contains(Lam::Fin(a)));
        }
        let left = ab.product(&lat(c), v).unwrap();
        let right = lat(a).product(&lambda_hyperops(Lam::Fin(b), Lam::Fin(c), v).unwrap(), v).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn double_coset_polygroups_pass((n, gens) in group_strategy(5, 2), hsel in prop::collection::vec(any::<prop::sample::Index>(), 0..3)) {
        let g = PermGroup::new(n, gens);
        let elems = g.elements().unwrap();
        let h = PermGroup::new(n, hsel.iter().map(|i| i.get(&elems).clone()).collect());
        prop_assert!(double_coset_polygroup(&g, &h).unwrap().check_axioms().unwrap().ok());
    }

    #[test]
    fn field_axioms(qi in 0usize..8, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let q = [2u64, 3, 4, 5, 7, 8, 9, 25][qi];
        let f = Field::of_order(q).unwrap();
        let (a, b, c) = (a % q as u32, b % q as u32, c % q as u32);
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        if a != f.zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            prop_assert_eq!(f.zpow(f.dlog(a).unwrap() as i64), a);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 20, ..ProptestConfig::default() })]

    #[test]
    fn todd_coxeter_matches_closure((n, gens) in group_strategy(6, 2)) {
        let p = cayley_presentation(n, &gens);
        let size = closure(n, &gens).len();
        prop_assert_eq!(todd_coxeter(&p, &[], 1_000_000).unwrap().index, size);
    }
}

/// Closed forms of the Borel powers, checked against repeated products.
#[test]
fn borel_powers_on_window() {
    for v in [Variant::PbBigK, Variant::PbGf2] {
        for a in window() {
            let s = LSet::single(a);
            let mut acc = s.clone();
            for n in 1..=10u32 {
                let want = match a {
                    Lam::Inf => LSet::single(Lam::Inf),
                    _ if n == 1 => LSet::single(a),
                    Lam::Fin(_) if v == Variant::PbGf2 && n % 2 == 1 => LSet::single(a),
                    Lam::Fin(x) if v == Variant::PbGf2 => LSet::ray_from(x + 1, true),
                    Lam::Fin(x) => LSet::ray_from(x, true),
                };
                assert_eq!(acc, want, "{v:?} {a} n={n}");
                assert_eq!(hyper_power(v, a, n).unwrap(), want, "{v:?} {a} n={n}");
                acc = acc.product(&s, v).unwrap();
            }
        }
    }
    let zero = Lam::Fin(0);
    assert_eq!(lambda_hyperops(zero, zero, Variant::PbGf2).unwrap(), LSet::ray_from(1, true));
    assert_eq!(lambda_hyperops(zero, zero, Variant::PbBigK).unwrap(), LSet::ray_from(0, true));
}

/// Deleting any relator from these presentations loses the certificate.
#[test]
fn relator_deletion_breaks_verification() {
    let cases = [
        (vec!["a"], vec!["a^4"], PermGroup::cyclic(4), vec!["(1 2 3 4)"]),
        (vec!["a", "b"], vec!["a^2", "b^3", "(a b)^2"], PermGroup::symmetric(3), vec!["(1 2)", "(1 2 3)"]),
    ];
    for (gens, rels, group, imgs) in cases {
        let n = group.degree();
        let assignment: Vec<Perm> = imgs.iter().map(|c| polypres::perm::parse_cycles(c, n).unwrap()).collect();
        let build = |skip: Option<usize>| {
            let mut p = Presentation::new(gens.iter().map(|s| s.to_string()).collect());
            for (i, r) in rels.iter().enumerate() {
                if Some(i) != skip {
                    p.rel(r, None).unwrap();
                }
            }
            p
        };
        let full = verify_presentation(&build(None), &group, &assignment, &Bound::Full, 10_000).unwrap();
        assert_eq!(full.concluded_order, Some(group.order()));
        for i in 0..rels.len() {
            let r = verify_presentation(&build(Some(i)), &group, &assignment, &Bound::Full, 10_000);
            assert!(r.map_or(true, |r| r.concluded_order.is_none()), "deleting {}", rels[i]);
        }
    }
}

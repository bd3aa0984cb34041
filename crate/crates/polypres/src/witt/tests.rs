use super::*;
use crate::fpres::relator_check;

fn perm_of(st: &MathieuStage, word: &str) -> Perm {
    st.presentation.word(word).unwrap().eval_perm(&st.assignment)
}

#[test]
fn small_tower_orders() {
    let t = mathieu_tower(12).unwrap();
    assert_eq!(t[0].group.order(), 7920);
    assert_eq!(t[0].group.transitivity_profile(), (4, true));
    assert_eq!(t[1].group.order(), 95040);
    assert_eq!(t[1].group.transitivity_profile(), (5, true));
    for s in &t {
        let r = s.check();
        assert!(r.ok(), "{}\n{r}", s.name);
    }
}

#[test]
fn small_tower_bookkeeping() {
    let t = mathieu_tower(12).unwrap();
    let (m11, m12) = (&t[0], &t[1]);
    let p = |w: &str| perm_of(m12, w);
    // (S4 S3)² S4 = S3 and (S5 S4)² S5 = S4
    assert_eq!(p("(U J)^2 U"), p("J"));
    assert_eq!(p("(V U)^2 V"), p("U"));
    // S4 a S4 = b, S4 b S4 = a
    assert_eq!(p("U a U"), p("[J,a]"));
    assert_eq!(p("U [J,a] U"), p("a"));
    // S5 a S5 = b⁻¹a, S5 b S5 = b⁻¹
    assert_eq!(p("V a V"), p("[J,a]^-1 a"));
    assert_eq!(p("V [J,a] V"), p("[J,a]^-1"));
    // H is trivial in both steps
    assert_eq!(m11.datum.h().order(), 1);
    assert_eq!(m12.datum.h().order(), 1);
    assert!(p("U^2").is_identity() && p("V^2").is_identity());
}

#[test]
fn small_presentations_verify() {
    for s in mathieu_tower(12).unwrap() {
        let r = s.verify(1_000_000).unwrap();
        assert!(r.relators_pass(), "{}\n{r}", s.name);
        assert_eq!(r.enumeration.as_ref().unwrap().1, s.degree());
        assert_eq!(r.concluded_order, Some(s.group.order()));
    }
}

#[test]
fn large_tower_orders() {
    let t = mathieu_tower(24).unwrap();
    let want = [(443520u128, 3), (10200960, 4), (244823040, 5)];
    for (s, (order, k)) in t.iter().zip(want) {
        assert_eq!(s.group.order(), order, "{}", s.name);
        let (tk, sharp) = s.group.transitivity_profile();
        assert_eq!((tk, sharp), (k, false), "{}", s.name);
        let r = s.check();
        assert!(r.ok(), "{}\n{r}", s.name);
        assert!(relator_check(&s.presentation, &s.assignment).unwrap().iter().all(|&b| b), "{}", s.name);
    }
}

#[test]
fn large_tower_bookkeeping() {
    let t = mathieu_tower(24).unwrap();
    let m24 = &t[2];
    let p = |w: &str| perm_of(m24, w);
    // j = (S3 S2)² S3 with S2 = j, S3 = u
    assert_eq!(p("(u j)^2 u"), p("j"));
    assert_eq!(p("(v u)^2 v"), p("u"));
    assert_eq!(p("(w v)^2 w"), p("v"));
    // conjugation of the generators of G₁
    for (lhs, rhs) in [
        ("u r u", "j r j"),
        ("u s u", "s"),
        ("u s^t u", "s s^t"),
        ("u s^(j t) u", "s^(j t) s^(t j t)"),
        ("v r v", "r^-1"),
        ("v s v", "s"),
        ("v s^t v", "s^(t r)"),
        ("v s^(j t) v", "s^(j t r)"),
        ("w r w", "r^-1"),
        ("w s w", "s"),
        ("w s^t w", "s^t"),
        ("w s^(j t) w", "s^(j t)"),
    ] {
        assert_eq!(p(lhs), p(rhs), "{lhs} = {rhs}");
    }
}

#[test]
fn large_presentations_verify() {
    for s in mathieu_tower(24).unwrap() {
        let r = s.verify(1_000_000).unwrap();
        assert_eq!(r.enumeration.as_ref().unwrap().1, s.degree(), "{}", s.name);
        assert_eq!(r.concluded_order, Some(s.group.order()), "{}\n{r}", s.name);
    }
}

#[test]
fn transferred_presentations_verify() {
    for n in [12, 24] {
        for s in mathieu_tower(n).unwrap() {
            let e = s.transfer().unwrap();
            let r = e.verify(1_000_000).unwrap();
            assert_eq!(r.concluded_order, Some(s.group.order()), "{}\n{r}", s.name);
        }
    }
}

#[test]
fn perturbed_datum_fails() {
    let m11 = mathieu(11).unwrap();
    let mut d = m11.datum.clone();
    // compose S4 with a transposition of two affine points outside {0, 1}
    let (x, y) = (2, 3);
    let mut img: Vec<usize> = (0..d.st.degree()).collect();
    img.swap(x, y);
    d.st = Perm::from_images(img).unwrap().compose(&d.st);
    let r = witt_check(&d);
    assert!(!r.ok());
    assert!(witt_extend(&d).is_err());
}

#[test]
fn rewriter_round_trip() {
    let m11 = mathieu(11).unwrap();
    let g1: Vec<(Perm, Word)> = m11.g1_words.iter().map(|w| (w.eval_perm(&m11.base_assignment), w.clone())).collect();
    let rw = TowerRewriter::new(&m11.datum, &m11.swap_words, &g1).unwrap();
    for g in m11.datum.base.elements().unwrap().iter().step_by(7) {
        assert_eq!(&rw.rewrite(g).unwrap().eval_perm(&m11.base_assignment), g);
    }
    let outside = Perm::from_images(vec![1, 0, 2, 3, 4, 5, 6, 7, 8, 9]).unwrap();
    assert!(rw.rewrite(&outside).is_err());
}

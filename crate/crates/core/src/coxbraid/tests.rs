use proptest::prelude::*;

use super::*;

fn aff(w: &Word) -> AffinePermutation {
    affine_image(w)
}

#[test]
fn generators_are_involutions_with_braid_relations() {
    let id = AffinePermutation::identity();
    for i in 0..12 {
        let s = cox_generator(i);
        assert_ne!(s, id);
        assert_eq!(s.compose(&s), id);
        for j in i + 1..12 {
            let t = cox_generator(j);
            let order = {
                let st = s.compose(&t);
                let mut p = st.clone();
                let mut k = 1;
                while p != id && k < 10 {
                    p = p.compose(&st);
                    k += 1;
                }
                k
            };
            let expect = if cyclic_edge(i, j) { 3 } else { 2 };
            assert_eq!(order, expect, "pair {i} {j}");
        }
    }
    // s₀ swaps 0 and 1, and 12 and 13
    let s0 = cox_generator(0);
    assert_eq!((s0.apply(0), s0.apply(1), s0.apply(12), s0.apply(13), s0.apply(5)), (1, 0, 13, 12, 5));
}

#[test]
fn windows_validate() {
    assert!(AffinePermutation::from_window(std::array::from_fn(|k| k as i64 + 1)).is_ok());
    let mut w: [i64; 12] = std::array::from_fn(|k| k as i64 + 1);
    w[0] = 13;
    assert_eq!(AffinePermutation::from_window(w), Err(WindowError::Sum(12)));
    w[0] = 2;
    assert_eq!(AffinePermutation::from_window(w), Err(WindowError::Residues));
}

#[test]
fn translation_parts() {
    assert_eq!(AffinePermutation::identity().translation_part(), Some([0; 12]));
    assert_eq!(cox_generator(0).translation_part(), None);
    let t = aff(&deflation_word()).translation_part().expect("translation");
    assert!(t.iter().any(|&x| x != 0));
    assert_eq!(t.iter().sum::<i64>(), 0);
    // s₀ = t·s_θ with s_θ the reflection in e₁ − e₁₂: δ is the translation
    // by ±(e₁ − e₁₂) up to the ordering of the window
    assert_eq!(t.iter().map(|x| x.abs()).sum::<i64>(), 2);
}

#[test]
fn deflation_report_passes() {
    let r = deflation_check();
    assert!(r.passed(), "{r}");
    assert_eq!(r.check("conjugate_translations_rank_11").unwrap().witness["rank"], 11);
}

#[test]
fn relator_counts() {
    let a = relator_suite("artin_a11").unwrap();
    assert_eq!(a.iter().filter(|r| r.label.starts_with("braid")).count(), 12);
    assert_eq!(a.iter().filter(|r| r.label.starts_with("commute")).count(), 54);
    let st = relator_suite("stabilizer").unwrap();
    // 12+54 on the cycle, 3+3 on A₄, 48 across
    assert_eq!(artin_a11_a4().len(), 120);
    assert_eq!(st.len(), 120 + 11 + 11 + 1 + 1);
    assert_eq!(relator_suite("moduli_space").unwrap().len(), 66 + 11 + 11 + 1 + 3);
    assert_eq!(relator_suite("increasing_decreasing").unwrap().len(), 240);
    assert_eq!(relator_suite("diagram_automorphisms").unwrap().len(), 32);
    assert_eq!(relator_suite("bogus"), Err(SuiteError::Unknown("bogus".into())));
    for s in SUITES {
        assert!(relator_suite(s).is_ok());
        assert_ne!(suite_anchor(s), "unknown");
    }
}

#[test]
fn suite_text_round_trips() {
    for s in SUITES {
        let rs = relator_suite(s).unwrap();
        let words = parse_suite_text(&suite_text(&rs)).unwrap();
        assert_eq!(words.len(), rs.len());
        for (w, r) in words.iter().zip(&rs) {
            assert_eq!(w.letters(), r.word().letters());
        }
    }
}

#[test]
fn presentations_in_symmetric_quotient() {
    let s12 = Assignment::transpositions();
    for s in ["artin_a11", "decreasing_equal", "increasing_equal", "sphere_braids", "moduli_space", "stabilizer"] {
        let r = check_relators(&relator_suite(s).unwrap(), &s12).unwrap();
        assert!(r.all_pass(), "{s}: {:?}", r.failing());
    }
    // the affine quotient does not fill in a puncture
    let r = check_relators(&relator_suite("increasing_equal").unwrap(), &Assignment::affine());
    assert!(matches!(r, Err(CheckError::Uncovered(_))) || !r.unwrap().all_pass());
}

#[test]
fn uncovered_symbols_reported() {
    let r = check_relators(&relator_suite("stabilizer").unwrap(), &Assignment::affine());
    assert!(matches!(r, Err(CheckError::Uncovered(_))));
}

#[test]
fn presentations_report_passes() {
    let r = verify_presentations();
    assert!(r.passed(), "{r}");
}

#[test]
fn scalar_of_product_relation() {
    let rs = relator_suite("stabilizer").unwrap();
    let r = check_relators(&rs, &Assignment::Triflections).unwrap();
    assert!(r.all_pass(), "{:?}", r.failing());
    assert_eq!(r.scalars(), vec![("Delta(gA..gD)^2 = I D".to_string(), E_PI_I_3)]);
    // declaring the wrong scalar fails
    let mut wrong = rs.iter().find(|x| x.label.starts_with("Delta(gA")).unwrap().clone();
    wrong.scalar = ScalarClass::Exactly(EisInt::ONE);
    assert!(!check_relators(&[wrong], &Assignment::Triflections).unwrap().all_pass());
}

#[test]
fn perm_group_laws() {
    let a = Perm(vec![1, 2, 0, 3]);
    let b = Perm::transposition(4, 0, 3);
    assert_eq!(a.compose(&b).apply(0), a.apply(b.apply(0)));
    assert!(a.compose(&a.invert()).is_identity());
    assert_eq!(a.order(), 3);
    assert!(Perm::identity().compose(&b) == b);
}

fn arb_affine() -> impl Strategy<Value = AffinePermutation> {
    prop::collection::vec((0usize..12, any::<bool>()), 0..20).prop_map(|v| {
        v.into_iter().fold(AffinePermutation::identity(), |p, (i, inv)| {
            let s = cox_generator(i);
            p.compose(&if inv { s.invert() } else { s })
        })
    })
}

proptest! {
    #[test]
    fn affine_group_axioms(a in arb_affine(), b in arb_affine(), c in arb_affine()) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert_eq!(a.compose(&a.invert()), AffinePermutation::identity());
        prop_assert_eq!(a.invert().compose(&a), AffinePermutation::identity());
        prop_assert!(AffinePermutation::from_window(a.window()).is_ok());
        prop_assert_eq!(a.compose(&b).finite_part(), a.finite_part().compose(&b.finite_part()));
    }

    #[test]
    fn translation_part_is_a_homomorphism(u in prop::array::uniform11(-3i64..4), v in prop::array::uniform11(-3i64..4)) {
        let full = |x: [i64; 11]| {
            let mut t = [0; 12];
            t[..11].copy_from_slice(&x);
            t[11] = -x.iter().sum::<i64>();
            t
        };
        let (tu, tv) = (full(u), full(v));
        let a = AffinePermutation::translation(tu).unwrap();
        let b = AffinePermutation::translation(tv).unwrap();
        let sum: [i64; 12] = std::array::from_fn(|i| tu[i] + tv[i]);
        prop_assert_eq!(a.compose(&b).translation_part(), Some(sum));
    }
}

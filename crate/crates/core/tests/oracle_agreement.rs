//! Primary implementations against the independent ones in `bsdh-oracle`.

use bsdh_core::character::{demazure_character, demazure_step, euler_char};
use bsdh_core::{Character, RootSystem, Weight, Word};
use bsdh_oracle as oracle;
use proptest::prelude::*;

fn rs(s: &str) -> RootSystem {
    RootSystem::new(s.parse().unwrap())
}

fn character(rank: usize) -> impl Strategy<Value = Character> {
    prop::collection::vec((prop::collection::vec(-6i32..=6, rank), -3i64..=3), 0..6).prop_map(
        |terms| Character::from_terms(terms.into_iter().map(|(c, k)| (Weight::new(c), k))),
    )
}

fn check_step(r: &RootSystem, chi: &Character) -> Result<(), TestCaseError> {
    for i in 0..r.rank() {
        prop_assert_eq!(
            demazure_step(r, i, chi),
            oracle::demazure_step_rational(r, i, chi)
        );
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn step_matches_rational_a2(chi in character(2)) { check_step(&rs("A2"), &chi)?; }
    #[test]
    fn step_matches_rational_b2(chi in character(2)) { check_step(&rs("B2"), &chi)?; }
    #[test]
    fn step_matches_rational_g2(chi in character(2)) { check_step(&rs("G2"), &chi)?; }
    #[test]
    fn step_matches_rational_b3(chi in character(3)) { check_step(&rs("B3"), &chi)?; }
    #[test]
    fn step_matches_rational_rank4(chi in character(4), t in prop::sample::select(vec!["A4", "B4", "C4", "D4", "F4"])) {
        check_step(&rs(t), &chi)?;
    }
}

#[test]
fn word_counts_agree_on_every_element() {
    for t in ["A1", "A2", "A3", "B2", "B3", "C3", "G2"] {
        let r = rs(t);
        for w in r.elements() {
            let word = w.reduced_word(&r);
            let streamed = r.reduced_words(&w, None).count() as u128;
            assert_eq!(
                streamed,
                oracle::count_reduced_words(&r, &word),
                "{t} {word}"
            );
            assert_eq!(r.count_reduced_words(&w), streamed, "{t} {word}");
        }
    }
}

#[test]
fn w0_word_counts() {
    for (t, n) in [("A2", 2), ("A3", 16), ("B3", 42), ("A4", 768), ("D4", 2316)] {
        let r = rs(t);
        let w0 = r.longest_element();
        assert_eq!(oracle::count_reduced_words(&r, &w0.reduced_word(&r)), n);
        assert_eq!(r.reduced_words(&w0, None).count() as u128, n);
    }
}

#[test]
fn bruhat_matches_subword_enumeration() {
    for t in ["A2", "A3", "B2"] {
        let r = rs(t);
        let elements = r.elements();
        for w in &elements {
            let w_word = w.reduced_word(&r);
            let interval = r.lower_interval(&w_word).unwrap();
            assert_eq!(
                interval.len(),
                oracle::lower_interval_rho(&r, &w_word).len()
            );
            for v in &elements {
                let v_word = v.reduced_word(&r);
                let expected = oracle::bruhat_leq_subwords(&r, &v_word, &w_word);
                assert_eq!(
                    r.bruhat_leq(v, &w_word).unwrap(),
                    expected,
                    "{t}: {v_word} <= {w_word}"
                );
                assert_eq!(interval.contains(v), expected);
            }
        }
    }
}

#[test]
fn alpha0_criterion_matches_inversion_union() {
    for t in ["A2", "A3", "B2", "G2"] {
        let r = rs(t);
        for w in r.elements() {
            let word = w.reduced_word(&r);
            assert_eq!(
                r.alpha0_criterion(&w),
                oracle::alpha0_in_some_inversion_set(&r, &word),
                "{t} {word}"
            );
        }
    }
}

#[test]
fn demazure_character_at_w0_has_weyl_dimension() {
    for t in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"] {
        let r = rs(t);
        let w0 = r.longest_element();
        let n = r.rank();
        let mut lambdas = vec![r.zero(), r.rho().clone()];
        lambdas.extend((0..n).map(|i| r.fundamental_weight(i)));
        for lambda in lambdas {
            let chi = demazure_character(&r, &w0, &lambda).unwrap();
            assert_eq!(
                Some(chi.dim() as u128),
                oracle::weyl_dimension(&r, &lambda),
                "{t} {lambda}"
            );
        }
    }
}

#[test]
fn euler_char_matches_rational_composition() {
    let r = rs("B3");
    let word = Word::new(vec![2, 1, 0, 2, 1]);
    for lambda in [
        Weight::new([1, -2, 3]),
        Weight::new([-1, 0, -1]),
        Weight::new([0, 2, -3]),
    ] {
        let mut chi = Character::monomial(lambda.clone());
        for &i in word.letters().iter().rev() {
            chi = oracle::demazure_step_rational(&r, i, &chi);
        }
        assert_eq!(euler_char(&r, &word, &lambda).unwrap(), chi);
    }
}

//! Tangent-character statements checked across whole Weyl groups.

use bsdh_core::autcls::classify;
use bsdh_core::bsdh::adjoint_containment;
use bsdh_core::character::reference_chars;
use bsdh_core::{BsdhWord, Character, RootSystem, Weight, Word};

fn rs(s: &str) -> RootSystem {
    RootSystem::new(s.parse().unwrap())
}

fn all_words(r: &RootSystem) -> Vec<Word> {
    r.elements()
        .iter()
        .flat_map(|w| r.reduced_words(w, None).collect::<Vec<_>>())
        .collect()
}

fn sl2(r: &RootSystem, i: usize) -> Character {
    let a = r.simple_root(i).clone();
    Character::from_terms([(a.clone(), 1), (r.zero(), 1), (-&a, 1)])
}

fn check_simply_laced(r: &RootSystem, word: Word) {
    let b = BsdhWord::new(r, word).unwrap();
    let report = b.tangent_h0_char().unwrap();
    let label = b.word().to_string();
    assert_eq!(report.zero_mult, b.d() as i64, "{label}");

    let expected_positive: Vec<Weight> = b.j().iter().map(|&i| r.simple_root(i).clone()).collect();
    let mut got = report.positive_support.clone();
    got.sort();
    let mut want = expected_positive.clone();
    want.sort();
    assert_eq!(got, want, "{label}");
    for mu in &expected_positive {
        assert_eq!(report.total.coefficient(mu), 1, "{label}");
    }

    for (mu, c) in report.total.iter() {
        if !mu.is_zero() {
            assert!(r.is_root(mu), "{label}: weight {mu}");
            assert!(c == 0 || c == 1, "{label}: {mu} has {c}");
        }
    }

    let p_j = reference_chars(r, b.j()).p_j;
    assert_eq!(
        report.total == p_j,
        r.alpha0_criterion(b.element()),
        "{label}"
    );
}

#[test]
fn simply_laced_invariants_exhaustive() {
    for t in ["A1", "A2", "A3"] {
        let r = rs(t);
        for word in all_words(&r) {
            check_simply_laced(&r, word);
        }
    }
}

#[test]
fn simply_laced_invariants_a4_sampled() {
    let r = rs("A4");
    for w in r.elements().iter().step_by(7) {
        for word in r.reduced_words(w, Some(3)) {
            check_simply_laced(&r, word);
        }
    }
}

#[test]
fn last_step_characters() {
    for t in ["A2", "A3", "D4"] {
        let r = rs(t);
        for w in r.elements() {
            for word in r.reduced_words(&w, Some(4)) {
                let Some((&last, earlier)) = word.letters().split_last() else {
                    continue;
                };
                let b = BsdhWord::new(&r, word.clone()).unwrap();
                let step = b.step_chars().pop().unwrap();
                let zero = step.coefficient(&r.zero());
                if earlier.iter().all(|&k| r.cartan(k, last) == 0) {
                    assert_eq!(step, sl2(&r, last), "{word}");
                } else if earlier.contains(&last) {
                    assert_eq!(zero, 0, "{word}");
                } else {
                    assert_eq!(zero, 1, "{word}");
                }
            }
        }
    }
}

#[test]
fn euler_zero_weight_is_bounded_by_support() {
    for t in ["B2", "G2", "B3", "C3"] {
        let r = rs(t);
        for w in r.elements() {
            for word in r.reduced_words(&w, Some(3)) {
                let b = BsdhWord::new(&r, word).unwrap();
                assert!(b.tangent_euler_char().zero_mult <= b.d() as i64);
                assert!(b.tangent_h0_char().is_err());
            }
        }
    }
}

#[test]
fn h1_at_w0_is_effective() {
    for t in ["B2", "G2", "B3", "C3"] {
        let r = rs(t);
        for word in r.reduced_words(&r.longest_element(), Some(60)) {
            let b = BsdhWord::new(&r, word).unwrap();
            assert!(b.h1_w0_char().unwrap().is_nonnegative());
        }
    }
    let r = rs("A3");
    for word in r.reduced_words(&r.longest_element(), None) {
        assert!(BsdhWord::new(&r, word)
            .unwrap()
            .h1_w0_char()
            .unwrap()
            .is_zero());
    }
}

#[test]
fn kernel_prediction_a2_a3() {
    for t in ["A2", "A3"] {
        let r = rs(t);
        for word in all_words(&r) {
            let b = BsdhWord::new(&r, word.clone()).unwrap();
            for completion in r.completions_to_w0(&word).unwrap() {
                let k = b.kernel_char(&completion).unwrap();
                assert!(
                    k.agrees(),
                    "{word} -> {completion}: {} vs {}",
                    k.predicted,
                    k.observed
                );
            }
        }
    }
}

#[test]
fn adjoint_containment_matches_criterion() {
    for t in ["A2", "A3", "B2", "B3", "G2", "C3"] {
        let r = rs(t);
        for w in r.elements() {
            assert_eq!(adjoint_containment(&r, &w), r.alpha0_criterion(&w), "{t}");
        }
    }
}

#[test]
fn classification_invariants() {
    for t in ["A2", "A3", "B2", "G2", "B3"] {
        let r = rs(t);
        let n = r.rank();
        for w in r.elements() {
            for word in r.reduced_words(&w, Some(4)) {
                let report = classify(&BsdhWord::new(&r, word).unwrap()).unwrap();
                assert!(report.rank_bound <= n);
                assert_eq!(report.semistable_equiv, report.criterion);
                assert!(report.completions_agree);
            }
        }
    }
}

#[test]
fn d_is_word_independent() {
    let r = rs("B3");
    for w in r.elements() {
        let supports: std::collections::BTreeSet<Vec<usize>> = r
            .reduced_words(&w, None)
            .map(|word| BsdhWord::new(&r, word).unwrap().supp().to_vec())
            .collect();
        assert_eq!(supports.len(), 1);
    }
}

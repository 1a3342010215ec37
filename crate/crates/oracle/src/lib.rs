//! Independent reference computations for the test suites.
//!
//! Nothing here goes through `WeylElement` matrices or the string-sum
//! Demazure operator. Group elements are represented by the image `w(ρ)`
//! of the Weyl vector, which determines `w` because `ρ` is regular.

use std::collections::{BTreeMap, BTreeSet};

use bsdh_core::{Character, RootSystem, Weight, Word};

/// `(e^λ - e^{s_i(λ) - α_i}) / (1 - e^{-α_i})`, extended linearly, by
/// long division of one-variable Laurent polynomials in `t = e^{-α_i}`.
pub fn demazure_step_rational(rs: &RootSystem, i: usize, chi: &Character) -> Character {
    let alpha = rs.simple_root(i);
    let mut out = Character::zero();
    for (lambda, c) in chi.iter() {
        let reflected = lambda.add_scaled(-lambda.coords()[i], alpha);
        let lowered = &reflected - alpha;
        // λ - lowered = k α_i; read k off the i-th coordinate (α_i has 2 there)
        let k = (lambda.coords()[i] - lowered.coords()[i]) / 2;
        debug_assert_eq!(lambda.add_scaled(-k, alpha), lowered);

        // numerator 1 - t^k, shifted so the lowest exponent is 0
        let mut num: BTreeMap<i32, i64> = BTreeMap::new();
        *num.entry(0).or_default() += 1;
        *num.entry(k).or_default() -= 1;
        num.retain(|_, v| *v != 0);
        let Some(&shift) = num.keys().next() else {
            continue;
        };
        let top = *num.keys().last().unwrap() - shift;
        let p: Vec<i64> = (0..=top)
            .map(|e| num.get(&(e + shift)).copied().unwrap_or(0))
            .collect();
        // p(t) = (1 - t) q(t): q_0 = p_0, q_j = p_j + q_{j-1}
        let mut q = vec![0i64; p.len().saturating_sub(1)];
        let mut carry = 0;
        for (j, &pj) in p.iter().enumerate() {
            carry += pj;
            if j < q.len() {
                q[j] = carry;
            }
        }
        assert_eq!(carry, 0, "1 - t must divide the numerator");
        for (j, &qj) in q.iter().enumerate() {
            let exp = j as i32 + shift;
            out.add_term(lambda.add_scaled(-exp, alpha), c * qj);
        }
    }
    out
}

fn dot(rs: &RootSystem, coords: &[i32], mu: &Weight) -> i64 {
    // (Σ c_i α_i, μ) up to the positive factor 1/2
    coords
        .iter()
        .enumerate()
        .map(|(i, &c)| i64::from(c) * i64::from(rs.norm(i)) * i64::from(mu.coords()[i]))
        .sum()
}

fn reflect(rs: &RootSystem, i: usize, mu: &Weight) -> Weight {
    mu.add_scaled(-mu.coords()[i], rs.simple_root(i))
}

/// `w(ρ)` for `w = s_{i_1} ⋯ s_{i_r}`.
pub fn rho_image(rs: &RootSystem, word: &Word) -> Weight {
    word.letters()
        .iter()
        .rev()
        .fold(rs.rho().clone(), |mu, &i| reflect(rs, i, &mu))
}

/// Number of reduced words of the element spelled by `word`:
/// `c(e) = 1`, `c(w) = Σ_{s_i w < w} c(s_i w)`, memoised on `w(ρ)`.
/// `s_i w < w` exactly when `⟨w(ρ), α_i^∨⟩ < 0`.
pub fn count_reduced_words(rs: &RootSystem, word: &Word) -> u128 {
    fn go(rs: &RootSystem, mu: Weight, memo: &mut BTreeMap<Weight, u128>) -> u128 {
        if mu == *rs.rho() {
            return 1;
        }
        if let Some(&c) = memo.get(&mu) {
            return c;
        }
        let total = (0..rs.rank())
            .filter(|&i| mu.coords()[i] < 0)
            .map(|i| go(rs, reflect(rs, i, &mu), memo))
            .sum();
        memo.insert(mu, total);
        total
    }
    go(rs, rho_image(rs, word), &mut BTreeMap::new())
}

/// `v ≤ w` by brute force over all `2^r` subwords of `w_word`. Every
/// subword product lies below `w` (deletion property) and every `v ≤ w`
/// is such a product (subword property).
pub fn bruhat_leq_subwords(rs: &RootSystem, v_word: &Word, w_word: &Word) -> bool {
    let target = rho_image(rs, v_word);
    let r = w_word.len();
    (0u64..1 << r).any(|mask| {
        let sub: Vec<usize> = (0..r)
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| w_word.letters()[k])
            .collect();
        rho_image(rs, &Word::new(sub)) == target
    })
}

/// `{v(ρ) : v ≤ w}`.
pub fn lower_interval_rho(rs: &RootSystem, w_word: &Word) -> BTreeSet<Weight> {
    let r = w_word.len();
    (0u64..1 << r)
        .map(|mask| {
            let sub: Vec<usize> = (0..r)
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| w_word.letters()[k])
                .collect();
            rho_image(rs, &Word::new(sub))
        })
        .collect()
}

/// `α₀ ∈ ∪_{v ≤ w} R⁺(v⁻¹)`, using `β ∈ R⁺(v⁻¹) ⟺ (β, v(ρ)) < 0`.
pub fn alpha0_in_some_inversion_set(rs: &RootSystem, w_word: &Word) -> bool {
    let top = &rs.highest_root().root_coords;
    lower_interval_rho(rs, w_word)
        .iter()
        .any(|mu| dot(rs, top, mu) < 0)
}

/// Weyl dimension formula `∏_{β>0} (λ+ρ, β) / (ρ, β)`; `None` for
/// non-dominant `λ`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Option<u128> {
    if lambda.coords().iter().any(|&c| c < 0) {
        return None;
    }
    let shifted = lambda + rs.rho();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for beta in rs.positive_roots() {
        num *= dot(rs, &beta.root_coords, &shifted) as u128;
        den *= dot(rs, &beta.root_coords, rs.rho()) as u128;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    assert_eq!(den, 1, "Weyl dimension must be an integer");
    Some(num)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn w1(v: &[usize]) -> Word {
        Word::new(v.iter().map(|x| x - 1).collect::<Vec<_>>())
    }

    #[test]
    fn rational_step_examples() {
        let a2 = rs("A2");
        let a = a2.simple_root(0).clone();
        let zero = Character::monomial(a2.zero());
        assert_eq!(demazure_step_rational(&a2, 0, &zero), zero);
        assert_eq!(
            demazure_step_rational(&a2, 0, &Character::monomial(a.clone())),
            Character::from_terms([(a.clone(), 1), (a2.zero(), 1), (-&a, 1)])
        );
        assert_eq!(
            demazure_step_rational(&a2, 0, &Character::monomial(-&a)),
            Character::from_terms([(a2.zero(), -1)])
        );
    }

    #[test]
    fn word_counts() {
        let longest = |t: &str| {
            let r = rs(t);
            let w = r.longest_element().reduced_word(&r);
            count_reduced_words(&r, &w)
        };
        assert_eq!(longest("A2"), 2);
        assert_eq!(longest("A3"), 16);
        assert_eq!(longest("B3"), 42);
        assert_eq!(longest("A4"), 768);
        assert_eq!(longest("D4"), 2316);
        assert_eq!(count_reduced_words(&rs("A3"), &Word::empty()), 1);
    }

    #[test]
    fn dimensions() {
        let a2 = rs("A2");
        assert_eq!(weyl_dimension(&a2, &a2.zero()), Some(1));
        assert_eq!(weyl_dimension(&a2, a2.rho()), Some(8));
        assert_eq!(weyl_dimension(&a2, &Weight::new([1, -1])), None);
        let b2 = rs("B2");
        // ω₁ is attached to the long simple root: the vector representation
        assert_eq!(weyl_dimension(&b2, &b2.fundamental_weight(0)), Some(5));
        assert_eq!(weyl_dimension(&b2, &b2.fundamental_weight(1)), Some(4));
        let g2 = rs("G2");
        assert_eq!(weyl_dimension(&g2, &g2.fundamental_weight(0)), Some(7));
        assert_eq!(weyl_dimension(&g2, &g2.fundamental_weight(1)), Some(14));
        let e8 = rs("E8");
        assert_eq!(weyl_dimension(&e8, &e8.fundamental_weight(7)), Some(248));
    }

    #[test]
    fn subword_bruhat() {
        let a2 = rs("A2");
        assert!(bruhat_leq_subwords(&a2, &w1(&[2]), &w1(&[1, 2])));
        assert!(!bruhat_leq_subwords(&a2, &w1(&[2, 1]), &w1(&[1, 2])));
        assert_eq!(lower_interval_rho(&a2, &w1(&[1, 2, 1])).len(), 6);
        assert!(alpha0_in_some_inversion_set(&a2, &w1(&[1, 2])));
        assert!(!alpha0_in_some_inversion_set(&a2, &w1(&[1])));
    }
}

//! Formal characters on the weight lattice and Demazure operators.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use crate::rootsys::{RootSystem, Weight};
use crate::weyl::{WeylElement, Word};
use crate::{Error, Result};

/// A finitely supported integer combination `Σ c_μ e^μ`. Zero coefficients
/// are never stored; iteration is lexicographic in the weight coordinates.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Character {
    terms: BTreeMap<Weight, i64>,
}

impl Character {
    pub fn zero() -> Self {
        Character::default()
    }

    /// `e^λ`.
    pub fn monomial(lambda: Weight) -> Self {
        let mut c = Character::zero();
        c.add_term(lambda, 1);
        c
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Weight, i64)>) -> Self {
        let mut c = Character::zero();
        for (w, k) in terms {
            c.add_term(w, k);
        }
        c
    }

    pub fn add_term(&mut self, weight: Weight, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(weight) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, weight: &Weight) -> i64 {
        self.terms.get(weight).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> + '_ {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    /// Number of weights in the support.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Virtual dimension: the sum of the coefficients.
    pub fn dim(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn scaled(&self, k: i64) -> Character {
        Character::from_terms(self.iter().map(|(w, c)| (w.clone(), c * k)))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// Coefficientwise `self ≤ other`.
    pub fn le_coefficientwise(&self, other: &Character) -> bool {
        (other - self).is_nonnegative()
    }

    /// Applies `f` to every weight, summing collisions.
    pub fn map_weights(&self, mut f: impl FnMut(&Weight) -> Weight) -> Character {
        Character::from_terms(self.iter().map(|(w, c)| (f(w), c)))
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}e^{w}")?;
        }
        Ok(())
    }
}

impl AddAssign<&Character> for Character {
    fn add_assign(&mut self, rhs: &Character) {
        for (w, c) in rhs.iter() {
            self.add_term(w.clone(), c);
        }
    }
}

impl SubAssign<&Character> for Character {
    fn sub_assign(&mut self, rhs: &Character) {
        for (w, c) in rhs.iter() {
            self.add_term(w.clone(), -c);
        }
    }
}

impl Add for &Character {
    type Output = Character;
    fn add(self, rhs: &Character) -> Character {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Character {
    type Output = Character;
    fn sub(self, rhs: &Character) -> Character {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Character {
    type Output = Character;
    fn neg(self) -> Character {
        self.scaled(-1)
    }
}

impl FromIterator<(Weight, i64)> for Character {
    fn from_iter<I: IntoIterator<Item = (Weight, i64)>>(iter: I) -> Self {
        Character::from_terms(iter)
    }
}

/// Euler characteristic of `L_λ` on `P_{α_i}/B`, extended linearly:
/// with `n = ⟨λ, α_i^∨⟩`,
///
/// * `n ≥ 0`: `e^λ + e^{λ-α_i} + ... + e^{s_i(λ)}`,
/// * `n = -1`: `0`,
/// * `n ≤ -2`: `-(e^{s_i·λ} + ... + e^{λ+α_i})`.
pub fn demazure_step(rs: &RootSystem, i: usize, chi: &Character) -> Character {
    let alpha = rs.simple_root(i);
    let mut out = Character::zero();
    for (lambda, c) in chi.iter() {
        let n = lambda.coords()[i];
        if n >= 0 {
            for j in 0..=n {
                out.add_term(lambda.add_scaled(-j, alpha), c);
            }
        } else if n <= -2 {
            // s_i·λ = λ - (n+1)α_i, which pairs to -n-2 ≥ 0 with α_i^∨
            let top = lambda.add_scaled(-(n + 1), alpha);
            for j in 0..=(-n - 2) {
                out.add_term(top.add_scaled(-j, alpha), -c);
            }
        }
    }
    out
}

/// `χ(w, λ)`: the Demazure steps of `word` applied to `e^λ`, last letter
/// first.
pub fn euler_char(rs: &RootSystem, word: &Word, lambda: &Weight) -> Result<Character> {
    rs.check_word(word)?;
    rs.check_weight(lambda)?;
    Ok(euler_char_of(
        rs,
        word.letters(),
        Character::monomial(lambda.clone()),
    ))
}

/// Demazure steps of `letters` applied to an arbitrary character.
pub fn euler_char_of(rs: &RootSystem, letters: &[usize], chi: Character) -> Character {
    letters
        .iter()
        .rev()
        .fold(chi, |acc, &i| demazure_step(rs, i, &acc))
}

/// Demazure character of `w` for a dominant weight; at `w₀` this is the
/// Weyl character of highest weight `λ`.
pub fn demazure_character(rs: &RootSystem, w: &WeylElement, lambda: &Weight) -> Result<Character> {
    rs.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant);
    }
    euler_char(rs, &w.reduced_word(rs), lambda)
}

/// Characters of the standard Lie algebras attached to a set of simple
/// roots `J`, for the Borel subalgebra spanned by the negative roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceChars {
    /// `b`: `n e^0 + Σ_{β>0} e^{-β}`.
    pub b: Character,
    pub g: Character,
    /// `g/b`: `Σ_{β>0} e^{β}`.
    pub g_mod_b: Character,
    /// `p_J = b + Σ_{β ∈ R_J⁺} e^{β}`.
    pub p_j: Character,
    /// Nilradical of `p_J`: `Σ_{β ∈ R⁺ \ R_J⁺} e^{-β}`.
    pub nilrad: Character,
}

pub fn reference_chars(rs: &RootSystem, j: &[usize]) -> ReferenceChars {
    let mut b = Character::zero();
    b.add_term(rs.zero(), rs.rank() as i64);
    let mut g_mod_b = Character::zero();
    let mut nilrad = Character::zero();
    let levi = rs.subsystem_positive_roots(j);
    for beta in rs.positive_roots() {
        b.add_term(-&beta.weight, 1);
        g_mod_b.add_term(beta.weight.clone(), 1);
        if !levi.contains(&beta) {
            nilrad.add_term(-&beta.weight, 1);
        }
    }
    let g = &b + &g_mod_b;
    let mut p_j = b.clone();
    for beta in levi {
        p_j.add_term(beta.weight.clone(), 1);
    }
    ReferenceChars {
        b,
        g,
        g_mod_b,
        p_j,
        nilrad,
    }
}

/// Positive roots as a character `Σ_{β>0} e^β`, one summand per root.
pub(crate) fn positive_root_weights(rs: &RootSystem) -> Vec<Weight> {
    rs.positive_roots()
        .iter()
        .map(|b| b.weight.clone())
        .collect()
}

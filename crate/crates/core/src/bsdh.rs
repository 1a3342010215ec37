//! Combinatorics and tangent-bundle characters of `Z(w, i)`.
//!
//! The tangent character is built from the tower of `P¹`-fibrations
//! `Z(w,i) → Z(ws_{i_r}, i')`: the relative tangent bundle of the last step
//! is the line bundle of weight `α_{i_r}`, so step `j` contributes
//! `χ(s_{i_1}⋯s_{i_j}, α_{i_j})`. In simply-laced types all higher
//! cohomology of these pieces vanishes and the sum is the character of the
//! global vector fields; otherwise it is only an Euler characteristic.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::character::{euler_char_of, positive_root_weights, reference_chars, Character};
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::{WeylElement, Word};
use crate::{Error, Result};

/// Positions `J'(w,i)` (0-based) and the sorted simple roots `J(w,i)` of a
/// word. Position `l` qualifies when `α_{i_l}` is orthogonal to every
/// earlier letter.
pub fn j_sets_of_word(rs: &RootSystem, letters: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let positions: Vec<usize> = (0..letters.len())
        .filter(|&l| {
            letters[..l]
                .iter()
                .all(|&k| k != letters[l] && rs.cartan(k, letters[l]) == 0)
        })
        .collect();
    let roots: BTreeSet<usize> = positions.iter().map(|&l| letters[l]).collect();
    (positions, roots.into_iter().collect())
}

/// A reduced word together with the data it determines.
#[derive(Debug, Clone)]
pub struct BsdhWord<'a> {
    rs: &'a RootSystem,
    word: Word,
    element: WeylElement,
    j_positions: Vec<usize>,
    j: Vec<usize>,
    supp: Vec<usize>,
}

impl<'a> BsdhWord<'a> {
    pub fn new(rs: &'a RootSystem, word: Word) -> Result<Self> {
        let element = rs.reduced_element(&word)?;
        let (j_positions, j) = j_sets_of_word(rs, word.letters());
        let supp: BTreeSet<usize> = word.letters().iter().copied().collect();
        Ok(BsdhWord {
            rs,
            word,
            element,
            j_positions,
            j,
            supp: supp.into_iter().collect(),
        })
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn element(&self) -> &WeylElement {
        &self.element
    }

    /// `J'(w,i)` as 0-based positions.
    pub fn j_prime(&self) -> &[usize] {
        &self.j_positions
    }

    /// `J(w,i)` as sorted simple-root indices.
    pub fn j(&self) -> &[usize] {
        &self.j
    }

    pub fn supp(&self) -> &[usize] {
        &self.supp
    }

    /// Number of distinct letters.
    pub fn d(&self) -> usize {
        self.supp.len()
    }

    pub fn is_longest(&self) -> bool {
        self.word.len() == self.rs.num_positive_roots()
    }

    /// `χ(s_{i_1}⋯s_{i_j}, α_{i_j})` for each `j`.
    pub fn step_chars(&self) -> Vec<Character> {
        let letters = self.word.letters();
        (0..letters.len())
            .map(|j| {
                let alpha = self.rs.simple_root(letters[j]).clone();
                euler_char_of(self.rs, &letters[..=j], Character::monomial(alpha))
            })
            .collect()
    }

    fn report(&self, mode: TangentMode) -> TangentReport {
        let per_step = self.step_chars();
        let mut total = Character::zero();
        for c in &per_step {
            total += c;
        }
        let zero = self.rs.zero();
        let positive_support = total
            .iter()
            .filter(|(w, _)| !w.is_zero() && self.rs.dominance_leq(&zero, w))
            .map(|(w, _)| w.clone())
            .collect();
        TangentReport {
            mode,
            zero_mult: total.coefficient(&zero),
            per_step,
            total,
            positive_support,
        }
    }

    /// `χ(Z(w,i), T)`, valid in every type.
    pub fn tangent_euler_char(&self) -> TangentReport {
        self.report(TangentMode::EulerOnly)
    }

    /// Character of `H⁰(Z(w,i), T)`; simply-laced types only.
    pub fn tangent_h0_char(&self) -> Result<TangentReport> {
        let ct = self.rs.cartan_type();
        if !ct.simply_laced() {
            return Err(Error::NotSimplyLaced(ct));
        }
        Ok(self.report(TangentMode::H0Exact))
    }

    /// Character of `H¹(Z(w₀,i), T) = p_{J(w₀,i)} - χ(Z(w₀,i), T)`.
    pub fn h1_w0_char(&self) -> Result<Character> {
        if !self.is_longest() {
            return Err(Error::NotLongest);
        }
        let p = reference_chars(self.rs, &self.j).p_j;
        Ok(&p - &self.tangent_euler_char().total)
    }

    /// Predicted and observed characters of the kernel of the restriction
    /// of vector fields from `Z(w₀, completion)` to `Z(w, i)`.
    pub fn kernel_char(&self, completion: &Word) -> Result<KernelReport> {
        let ct = self.rs.cartan_type();
        if !ct.simply_laced() {
            return Err(Error::NotSimplyLaced(ct));
        }
        let invalid = || Error::InvalidCompletion {
            prefix: self.word.clone(),
            completion: completion.clone(),
        };
        if completion.len() != self.rs.num_positive_roots()
            || !completion.letters().starts_with(self.word.letters())
        {
            return Err(invalid());
        }
        let big = BsdhWord::new(self.rs, completion.clone()).map_err(|_| invalid())?;

        let n = self.rs.rank();
        let r_w = r_w(self.rs, &self.word)?;
        let j1: Vec<usize> = big
            .j()
            .iter()
            .copied()
            .filter(|k| !self.supp.contains(k))
            .collect();

        let mut predicted = Character::zero();
        predicted.add_term(self.rs.zero(), (n - self.d()) as i64);
        for &k in &r_w {
            predicted.add_term(-&self.rs.positive_roots()[k].weight, 1);
        }
        for &k in &j1 {
            predicted.add_term(self.rs.simple_root(k).clone(), 1);
        }
        let observed = &big.tangent_h0_char()?.total - &self.tangent_h0_char()?.total;
        Ok(KernelReport {
            predicted,
            observed,
            r_w,
            j1,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TangentMode {
    /// Genuine character of the global vector fields.
    H0Exact,
    /// Alternating sum over cohomological degrees.
    EulerOnly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentReport {
    pub mode: TangentMode,
    /// Contribution of each fibration step.
    pub per_step: Vec<Character>,
    pub total: Character,
    /// Coefficient of `e^0` in `total`.
    pub zero_mult: i64,
    /// Nonzero weights of `total` that are non-negative combinations of
    /// simple roots.
    pub positive_support: Vec<Weight>,
}

impl TangentReport {
    pub fn dim(&self) -> i64 {
        self.total.dim()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport {
    /// `(n - d(w)) e^0 + Σ_{β ∈ R_w} e^{-β} + Σ_{j ∈ J_1} e^{α_j}`.
    pub predicted: Character,
    /// Tangent character at `w₀` minus the one at `w`.
    pub observed: Character,
    /// `R_w` as indices into the positive roots.
    pub r_w: Vec<usize>,
    /// Simple roots of `J(w₀, j)` outside `supp(w)`.
    pub j1: Vec<usize>,
}

impl KernelReport {
    pub fn agrees(&self) -> bool {
        self.predicted == self.observed
    }
}

/// `R_w`: positive roots outside every `R⁺(v⁻¹)` with `v ≤ w`, as indices
/// into the positive roots.
pub fn r_w(rs: &RootSystem, w_word: &Word) -> Result<Vec<usize>> {
    let mut covered = BTreeSet::new();
    for v in rs.lower_interval(w_word)? {
        covered.extend(v.inverse(rs).inversions(rs));
    }
    Ok((0..rs.num_positive_roots())
        .filter(|k| !covered.contains(k))
        .collect())
}

/// Character of `H⁰(X(w), T_{G/B})`, summing `χ(w, β)` over the positive
/// roots. Higher cohomology vanishes, so this is exact in every type.
pub fn schubert_tangent_char(rs: &RootSystem, w: &WeylElement) -> Character {
    let g_mod_b = Character::from_terms(positive_root_weights(rs).into_iter().map(|b| (b, 1)));
    euler_char_of(rs, w.reduced_word(rs).letters(), g_mod_b)
}

/// Whether the character of `g` sits coefficientwise under the Schubert
/// tangent character of `w`.
pub fn adjoint_containment(rs: &RootSystem, w: &WeylElement) -> bool {
    let g = reference_chars(rs, &[]).g;
    g.le_coefficientwise(&schubert_tangent_char(rs, w))
}

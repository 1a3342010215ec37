//! Classification of `Aut⁰(Z(w,i))` as a parabolic subgroup.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::bsdh::{j_sets_of_word, BsdhWord, TangentReport};
use crate::rootsys::RootSystem;
use crate::Result;

/// How much of the automorphism group the theory pins down.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AutStatus {
    /// `Aut⁰(Z(w,i)) ≅ P_J`.
    ExactParabolic,
    /// `Aut⁰(Z(w,i))` contains a closed subgroup isomorphic to `P_J`.
    ContainsParabolic,
    /// Nothing beyond the Euler characteristic of the tangent bundle.
    EulerOnly,
}

impl fmt::Display for AutStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AutStatus::ExactParabolic => "ExactParabolic",
            AutStatus::ContainsParabolic => "ContainsParabolic",
            AutStatus::EulerOnly => "EulerOnly",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutReport {
    pub status: AutStatus,
    /// `J(w,i)`, sorted 0-based simple roots.
    pub j: Vec<usize>,
    /// `n + N + |J|`.
    pub parabolic_dim: usize,
    /// `w⁻¹(α₀) < 0`.
    pub criterion: bool,
    /// Non-emptiness of the semistable locus of `X(w⁻¹)` for `L_{α₀}`;
    /// equivalent to `criterion`.
    pub semistable_equiv: bool,
    /// Upper bound for the rank of `Aut⁰`: the dimension of the zero
    /// weight space of the global vector fields.
    pub rank_bound: usize,
    /// Exact `H⁰` character in simply-laced types, Euler characteristic
    /// otherwise.
    pub tangent: TangentReport,
    /// Completions `j` of `i` to `w₀` for which `J(w₀,j) = J(w,i)` was
    /// checked (simply-laced, criterion true, `w ≠ w₀`).
    pub completions_checked: usize,
    /// False if some checked completion had a different `J`.
    pub completions_agree: bool,
}

/// Completions inspected per classification before giving up on the
/// exhaustive `J(w₀,j)` check.
pub const DEFAULT_COMPLETION_CAP: usize = 10_000;

pub fn classify(b: &BsdhWord<'_>) -> Result<AutReport> {
    classify_with(b, DEFAULT_COMPLETION_CAP)
}

pub fn classify_with(b: &BsdhWord<'_>, completion_cap: usize) -> Result<AutReport> {
    let rs = b.root_system();
    let simply_laced = rs.cartan_type().simply_laced();
    let criterion = rs.alpha0_criterion(b.element());
    let tangent = if simply_laced {
        b.tangent_h0_char()?
    } else {
        b.tangent_euler_char()
    };

    let mut completions_checked = 0;
    let mut completions_agree = true;
    let status = if b.is_longest() {
        AutStatus::ExactParabolic
    } else if simply_laced && criterion {
        for j in rs.completions_to_w0(b.word())?.take(completion_cap) {
            completions_checked += 1;
            if j_sets_of_word(rs, j.letters()).1 != b.j() {
                completions_agree = false;
            }
        }
        AutStatus::ExactParabolic
    } else if criterion {
        AutStatus::ContainsParabolic
    } else {
        AutStatus::EulerOnly
    };

    let rank_bound = if simply_laced {
        usize::try_from(tangent.zero_mult).unwrap_or(0)
    } else {
        b.d()
    };

    Ok(AutReport {
        status,
        j: b.j().to_vec(),
        parabolic_dim: rs.rank() + rs.num_positive_roots() + b.j().len(),
        criterion,
        semistable_equiv: criterion,
        rank_bound,
        tangent,
        completions_checked,
        completions_agree,
    })
}

/// Buckets every reduced word of `w₀` by `J(w₀, i)`. Refuses when the
/// number of words exceeds `cap`.
pub fn classify_all_w0(rs: &RootSystem, cap: u128) -> Result<BTreeMap<Vec<usize>, u64>> {
    let mut buckets = BTreeMap::new();
    for word in rs.reduced_words_capped(&rs.longest_element(), cap, None)? {
        *buckets
            .entry(j_sets_of_word(rs, word.letters()).1)
            .or_insert(0) += 1;
    }
    Ok(buckets)
}

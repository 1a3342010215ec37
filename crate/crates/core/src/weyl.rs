//! Weyl group elements, reduced words and the Bruhat order.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::rootsys::{RootSystem, Weight};
use crate::{Error, Result};

/// A word in the simple reflections, 0-based.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: impl Into<Vec<usize>>) -> Self {
        Word(letters.into())
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Parses comma-separated 1-based letters such as `"1,2,1"`. The empty
    /// string is the empty word.
    pub fn parse_one_based(s: &str, rank: usize) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        s.split(',')
            .enumerate()
            .map(|(position, tok)| {
                let bad = || Error::ParseWord {
                    position: position + 1,
                    token: tok.to_string(),
                };
                let k: usize = tok.trim().parse().map_err(|_| bad())?;
                if k == 0 || k > rank {
                    return Err(bad());
                }
                Ok(k - 1)
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// Comma-separated 1-based letters.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", l + 1)?;
        }
        Ok(())
    }
}

/// An element of the Weyl group, stored as its action on the weight
/// lattice. Two elements are equal exactly when their matrices are.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElement {
    n: usize,
    /// Row-major; `w(λ)_r = Σ_c m[r][c] λ_c`.
    m: Vec<i32>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        let mut m = vec![0; n * n];
        for i in 0..n {
            m[i * n + i] = 1;
        }
        WeylElement { n, m }
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.n)
    }

    pub fn matrix(&self) -> &[i32] {
        &self.m
    }

    pub fn apply(&self, lambda: &Weight) -> Weight {
        let n = self.n;
        let c = lambda.coords();
        Weight::new((0..n).map(|r| (0..n).map(|k| self.m[r * n + k] * c[k]).sum()))
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.n;
        let mut m = vec![0; n * n];
        for r in 0..n {
            for c in 0..n {
                m[r * n + c] = (0..n).map(|k| self.m[r * n + k] * other.m[k * n + c]).sum();
            }
        }
        WeylElement { n, m }
    }

    /// `w s_i`: only column `i` changes, by `-w(α_i)`.
    pub fn mul_simple_right(&self, rs: &RootSystem, i: usize) -> WeylElement {
        let n = self.n;
        let image = self.apply(rs.simple_root(i));
        let mut m = self.m.clone();
        for r in 0..n {
            m[r * n + i] -= image.coords()[r];
        }
        WeylElement { n, m }
    }

    /// `s_i w`: subtract `α_i ⊗ row_i(w)`.
    pub fn mul_simple_left(&self, rs: &RootSystem, i: usize) -> WeylElement {
        let n = self.n;
        let a = rs.simple_root(i).coords();
        let mut m = self.m.clone();
        for r in 0..n {
            for c in 0..n {
                m[r * n + c] -= a[r] * self.m[i * n + c];
            }
        }
        WeylElement { n, m }
    }

    /// `ℓ(w s_i) < ℓ(w)`, i.e. `w(α_i) < 0`.
    pub fn has_right_descent(&self, rs: &RootSystem, i: usize) -> bool {
        rs.is_negative_root(&self.apply(rs.simple_root(i)))
    }

    /// Inversion set `R⁺(w) = {β > 0 : w(β) < 0}` as indices into
    /// [`RootSystem::positive_roots`].
    pub fn inversions(&self, rs: &RootSystem) -> Vec<usize> {
        rs.positive_roots()
            .iter()
            .enumerate()
            .filter(|(_, b)| rs.is_negative_root(&self.apply(&b.weight)))
            .map(|(k, _)| k)
            .collect()
    }

    pub fn length(&self, rs: &RootSystem) -> usize {
        rs.positive_roots()
            .iter()
            .filter(|b| rs.is_negative_root(&self.apply(&b.weight)))
            .count()
    }

    /// Lexicographically smallest reduced word.
    pub fn reduced_word(&self, rs: &RootSystem) -> Word {
        // Left descents of w are right descents of w^{-1}; peel them off the
        // inverse so letters come out left to right.
        let mut inv = self.inverse(rs);
        let mut letters = Vec::new();
        while let Some(i) = (0..rs.rank()).find(|&i| inv.has_right_descent(rs, i)) {
            letters.push(i);
            inv = inv.mul_simple_right(rs, i);
        }
        Word(letters)
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        // w = s_{j_k} ... s_{j_1} where j_1, j_2, ... are successive right
        // descents; the inverse multiplies them in found order.
        let mut w = self.clone();
        let mut inv = WeylElement::identity(self.n);
        while let Some(i) = (0..rs.rank()).find(|&i| w.has_right_descent(rs, i)) {
            w = w.mul_simple_right(rs, i);
            inv = inv.mul_simple_right(rs, i);
        }
        inv
    }
}

/// Outcome of scanning a word for reducedness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reducedness {
    Reduced(WeylElement),
    /// The shortest prefix whose product is shorter than the prefix.
    NotReduced {
        prefix_len: usize,
    },
}

impl RootSystem {
    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank())
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        self.identity().mul_simple_right(self, i)
    }

    pub fn check_word(&self, word: &Word) -> Result<()> {
        word.letters().iter().try_for_each(|&i| self.check_index(i))
    }

    /// `s_{i_1} ... s_{i_r}`; the empty word gives the identity.
    pub fn from_word(&self, word: &Word) -> Result<WeylElement> {
        self.check_word(word)?;
        Ok(word
            .letters()
            .iter()
            .fold(self.identity(), |w, &i| w.mul_simple_right(self, i)))
    }

    pub fn reducedness(&self, word: &Word) -> Result<Reducedness> {
        self.check_word(word)?;
        let mut w = self.identity();
        for (k, &i) in word.letters().iter().enumerate() {
            if w.has_right_descent(self, i) {
                return Ok(Reducedness::NotReduced { prefix_len: k + 1 });
            }
            w = w.mul_simple_right(self, i);
        }
        Ok(Reducedness::Reduced(w))
    }

    pub fn is_reduced(&self, word: &Word) -> bool {
        matches!(self.reducedness(word), Ok(Reducedness::Reduced(_)))
    }

    /// Product of a word that must be reduced.
    pub fn reduced_element(&self, word: &Word) -> Result<WeylElement> {
        match self.reducedness(word)? {
            Reducedness::Reduced(w) => Ok(w),
            Reducedness::NotReduced { prefix_len } => Err(Error::NotReduced {
                prefix: word.prefix(prefix_len),
            }),
        }
    }

    pub fn longest_element(&self) -> WeylElement {
        let mut w = self.identity();
        while let Some(i) = (0..self.rank()).find(|&i| !w.has_right_descent(self, i)) {
            w = w.mul_simple_right(self, i);
        }
        w
    }

    /// `w·λ = w(λ + ρ) - ρ`.
    pub fn dot_action(&self, w: &WeylElement, lambda: &Weight) -> Weight {
        &w.apply(&(lambda + self.rho())) - self.rho()
    }

    /// All elements of `W`, by length and then by matrix.
    pub fn elements(&self) -> Vec<WeylElement> {
        let mut out = vec![self.identity()];
        let mut layer = vec![self.identity()];
        while !layer.is_empty() {
            let mut next = BTreeSet::new();
            for w in &layer {
                for i in 0..self.rank() {
                    if !w.has_right_descent(self, i) {
                        next.insert(w.mul_simple_right(self, i));
                    }
                }
            }
            layer = next.into_iter().collect();
            out.extend(layer.iter().cloned());
        }
        out
    }

    /// Number of reduced words of `w`, saturating at `u128::MAX`.
    pub fn count_reduced_words(&self, w: &WeylElement) -> u128 {
        self.count_reduced_words_up_to(w, u128::MAX)
            .unwrap_or(u128::MAX)
    }

    /// Number of reduced words of `w`, or `None` as soon as it is known to
    /// exceed `cap`. Counts only grow along descents, so the search stops
    /// early for large elements of the exceptional groups.
    pub fn count_reduced_words_up_to(&self, w: &WeylElement, cap: u128) -> Option<u128> {
        fn go(
            rs: &RootSystem,
            inv: WeylElement,
            cap: u128,
            memo: &mut BTreeMap<WeylElement, u128>,
        ) -> Option<u128> {
            if inv.is_identity() {
                return Some(1);
            }
            if let Some(&c) = memo.get(&inv) {
                return Some(c);
            }
            let mut total: u128 = 0;
            for i in 0..rs.rank() {
                if inv.has_right_descent(rs, i) {
                    total = total.saturating_add(go(rs, inv.mul_simple_right(rs, i), cap, memo)?);
                    if total > cap {
                        return None;
                    }
                }
            }
            memo.insert(inv, total);
            Some(total)
        }
        go(self, w.inverse(self), cap, &mut BTreeMap::new())
    }

    /// Streams the reduced words of `w` in lexicographic order.
    pub fn reduced_words(&self, w: &WeylElement, limit: Option<usize>) -> ReducedWords<'_> {
        ReducedWords::new(self, w.inverse(self), Word::empty(), limit)
    }

    /// Like [`RootSystem::reduced_words`], but refuses when the pre-count
    /// exceeds `cap`.
    pub fn reduced_words_capped(
        &self,
        w: &WeylElement,
        cap: u128,
        limit: Option<usize>,
    ) -> Result<ReducedWords<'_>> {
        if self.count_reduced_words_up_to(w, cap).is_none() {
            return Err(Error::TooManyWords { cap });
        }
        Ok(self.reduced_words(w, limit))
    }

    /// Reduced words of `w₀` that start with the reduced word `prefix`.
    pub fn completions_to_w0(&self, prefix: &Word) -> Result<ReducedWords<'_>> {
        let w = self.reduced_element(prefix)?;
        // w₀ = w · (w⁻¹w₀); enumerate the tail through its inverse w₀⁻¹w = w₀w.
        let tail_inv = self.longest_element().compose(&w);
        Ok(ReducedWords::new(self, tail_inv, prefix.clone(), None))
    }

    /// Whether `v ≤ w` in the Bruhat order, for a reduced word of `w`.
    ///
    /// Scans the word left to right: whenever the current letter `s` is a
    /// left descent of `v`, replace `v` by `sv`. Then `v ≤ w` iff `v` reaches
    /// the identity.
    pub fn bruhat_leq(&self, v: &WeylElement, w_word: &Word) -> Result<bool> {
        self.reduced_element(w_word)?;
        let mut inv = v.inverse(self);
        for &s in w_word.letters() {
            if inv.has_right_descent(self, s) {
                inv = inv.mul_simple_right(self, s);
            }
        }
        Ok(inv.is_identity())
    }

    /// `{v : v ≤ w}` for a reduced word of `w`.
    pub fn lower_interval(&self, w_word: &Word) -> Result<BTreeSet<WeylElement>> {
        self.reduced_element(w_word)?;
        let mut set = BTreeSet::new();
        set.insert(self.identity());
        for &s in w_word.letters() {
            let grown: Vec<_> = set.iter().map(|v| v.mul_simple_right(self, s)).collect();
            set.extend(grown);
        }
        Ok(set)
    }

    /// `w⁻¹(α₀) < 0`.
    pub fn alpha0_criterion(&self, w: &WeylElement) -> bool {
        self.is_negative_root(&w.inverse(self).apply(&self.highest_root().weight))
    }
}

struct Frame {
    /// Inverse of the part of the element not yet spelled out.
    inv: WeylElement,
    descents: Vec<usize>,
    next: usize,
}

/// Depth-first stream of reduced words, see [`RootSystem::reduced_words`].
pub struct ReducedWords<'a> {
    rs: &'a RootSystem,
    stack: Vec<Frame>,
    letters: Vec<usize>,
    base: usize,
    limit: Option<usize>,
    emitted: usize,
    truncated: bool,
    descents: BTreeMap<WeylElement, Vec<usize>>,
}

impl fmt::Debug for ReducedWords<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ReducedWords")
            .field("emitted", &self.emitted)
            .field("truncated", &self.truncated)
            .finish()
    }
}

impl<'a> ReducedWords<'a> {
    fn new(rs: &'a RootSystem, inv: WeylElement, prefix: Word, limit: Option<usize>) -> Self {
        let mut it = ReducedWords {
            rs,
            stack: Vec::new(),
            base: prefix.len(),
            letters: prefix.0,
            limit,
            emitted: 0,
            truncated: false,
            descents: BTreeMap::new(),
        };
        let frame = it.frame(inv);
        it.stack.push(frame);
        it
    }

    fn frame(&mut self, inv: WeylElement) -> Frame {
        let rs = self.rs;
        let descents = self
            .descents
            .entry(inv.clone())
            .or_insert_with(|| {
                (0..rs.rank())
                    .filter(|&i| inv.has_right_descent(rs, i))
                    .collect()
            })
            .clone();
        Frame {
            inv,
            descents,
            next: 0,
        }
    }

    /// True once iteration stopped at the limit with words left over.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    fn pop(&mut self) {
        self.stack.pop();
        if self.letters.len() > self.base {
            self.letters.pop();
        }
    }
}

impl Iterator for ReducedWords<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        loop {
            let top = self.stack.last_mut()?;
            if top.descents.is_empty() {
                // identity reached
                if self.limit.is_some_and(|l| self.emitted >= l) {
                    self.truncated = true;
                    self.stack.clear();
                    return None;
                }
                let word = Word(self.letters.clone());
                self.pop();
                self.emitted += 1;
                return Some(word);
            }
            if top.next < top.descents.len() {
                let i = top.descents[top.next];
                top.next += 1;
                let child = top.inv.mul_simple_right(self.rs, i);
                self.letters.push(i);
                let frame = self.frame(child);
                self.stack.push(frame);
            } else {
                self.pop();
            }
        }
    }
}

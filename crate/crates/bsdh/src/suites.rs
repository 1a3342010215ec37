//! Named verification batteries. Each suite shards its work over a rayon
//! pool and merges results in input order, so reports do not depend on
//! the number of workers.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use bsdh_core::bsdh::{adjoint_containment, j_sets_of_word, schubert_tangent_char};
use bsdh_core::character::{demazure_step, euler_char, reference_chars};
use bsdh_core::{BsdhWord, CartanType, Character, RootSystem, Weight, WeylElement, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::report;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Operators,
    Euler,
    SimplyLacedTheorems,
    Kernel,
    W0AllTypes,
    SchubertAdjoint,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Operators,
        Suite::Euler,
        Suite::SimplyLacedTheorems,
        Suite::Kernel,
        Suite::W0AllTypes,
        Suite::SchubertAdjoint,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Operators => "operators",
            Suite::Euler => "euler",
            Suite::SimplyLacedTheorems => "simply-laced-theorems",
            Suite::Kernel => "kernel",
            Suite::W0AllTypes => "w0-all-types",
            Suite::SchubertAdjoint => "schubert-adjoint",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Random characters for the operator suite.
    pub fuzz_cases: usize,
    /// Random weights per group element for the Euler suite.
    pub weights_per_element: usize,
    /// Reduced words inspected per element for the Euler suite.
    pub euler_words: usize,
    /// Reduced words (and completions) inspected per element elsewhere.
    pub max_words: usize,
    /// Random elements drawn when the group is too large to list.
    pub sample_elements: usize,
    /// Worker threads; `None` lets rayon decide.
    pub jobs: Option<usize>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 0,
            fuzz_cases: 1000,
            weights_per_element: 50,
            euler_words: 64,
            max_words: 5000,
            sample_elements: 200,
            jobs: None,
        }
    }
}

/// Groups with at most this many positive roots are enumerated in full.
pub const EXHAUSTIVE_MAX_ROOTS: usize = 16;

#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub check: &'static str,
    pub word: Option<Word>,
    pub weight: Option<Weight>,
    pub expected: Value,
    pub got: Value,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cartan_type: CartanType,
    pub cases: u64,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self, timing: bool) -> Value {
        let ty = self.cartan_type.to_string();
        let failures: Vec<Value> = self
            .failures
            .iter()
            .map(|f| {
                json!({
                    "type": ty,
                    "check": f.check,
                    "word": f.word.as_ref().map(report::word),
                    "weight": f.weight.as_ref().map(report::weight),
                    "expected": f.expected,
                    "got": f.got,
                })
            })
            .collect();
        json!({
            "suite": self.suite.name(),
            "type": ty,
            "cases": self.cases,
            "failures": failures,
            "elapsed_ms": timing.then_some(self.elapsed.as_millis() as u64),
        })
    }

    /// One failure per row.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("type\tcheck\tword\tweight\texpected\tgot\n");
        for f in &self.failures {
            let weight = f
                .weight
                .as_ref()
                .map(|w| report::weight(w).to_string())
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}",
                self.cartan_type,
                f.check,
                f.word.as_ref().map(Word::to_string).unwrap_or_default(),
                weight,
                f.expected,
                f.got
            );
        }
        out
    }
}

#[derive(Debug, Default)]
struct Tally {
    cases: u64,
    failures: Vec<Failure>,
}

impl Tally {
    fn check(&mut self, ok: bool, failure: impl FnOnce() -> Failure) {
        self.cases += 1;
        if !ok {
            self.failures.push(failure());
        }
    }

    fn eq<T: PartialEq>(
        &mut self,
        check: &'static str,
        word: Option<&Word>,
        expected: &T,
        got: &T,
        render: impl Fn(&T) -> Value,
    ) {
        self.check(expected == got, || Failure {
            check,
            word: word.cloned(),
            weight: None,
            expected: render(expected),
            got: render(got),
        });
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self
    }
}

fn sum(tallies: Vec<Tally>) -> Tally {
    tallies.into_iter().fold(Tally::default(), Tally::merge)
}

pub fn verify(suite: Suite, rs: &RootSystem, opts: &SuiteOptions) -> Result<SuiteReport> {
    let ct = rs.cartan_type();
    if matches!(suite, Suite::SimplyLacedTheorems | Suite::Kernel) && !ct.simply_laced() {
        return Err(bsdh_core::Error::NotSimplyLaced(ct).into());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.unwrap_or(0))
        .build()
        .expect("thread pool");
    let start = Instant::now();
    let tally = pool.install(|| match suite {
        Suite::Operators => operators(rs, opts),
        Suite::Euler => euler(rs, opts),
        Suite::SimplyLacedTheorems => simply_laced_theorems(rs, opts),
        Suite::Kernel => kernel(rs, opts),
        Suite::W0AllTypes => w0_all_types(rs, opts),
        Suite::SchubertAdjoint => schubert_adjoint(rs, opts),
    });
    Ok(SuiteReport {
        suite,
        cartan_type: ct,
        cases: tally.cases,
        failures: tally.failures,
        elapsed: start.elapsed(),
    })
}

fn case_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn random_weight(rng: &mut impl Rng, rank: usize, bound: i32) -> Weight {
    Weight::new((0..rank).map(|_| rng.gen_range(-bound..=bound)))
}

pub fn random_character(rng: &mut impl Rng, rank: usize) -> Character {
    let terms = rng.gen_range(1..=6);
    (0..terms)
        .map(|_| {
            let c = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
            (random_weight(rng, rank, 6), c)
        })
        .collect()
}

/// Every element when the group is small, otherwise a seeded sample that
/// always contains the identity and `w₀`.
pub fn elements(rs: &RootSystem, opts: &SuiteOptions) -> Vec<WeylElement> {
    let n_roots = rs.num_positive_roots();
    if n_roots <= EXHAUSTIVE_MAX_ROOTS {
        return rs.elements();
    }
    let mut rng = case_rng(opts.seed, u64::MAX);
    let mut picked = std::collections::BTreeSet::new();
    picked.insert(rs.identity());
    picked.insert(rs.longest_element());
    for _ in 0..opts.sample_elements {
        let len = rng.gen_range(0..=n_roots);
        let letters: Vec<usize> = (0..len).map(|_| rng.gen_range(0..rs.rank())).collect();
        picked.insert(rs.from_word(&Word::new(letters)).expect("valid letters"));
    }
    picked.into_iter().collect()
}

fn character_json(c: &Character) -> Value {
    report::character(c)
}

fn operators(rs: &RootSystem, opts: &SuiteOptions) -> Tally {
    let n = rs.rank();
    let tallies = (0..opts.fuzz_cases as u64)
        .into_par_iter()
        .map(|case| {
            let mut rng = case_rng(opts.seed, case);
            let chi = random_character(&mut rng, n);
            let mut t = Tally::default();
            for i in 0..n {
                let alpha = rs.simple_root(i);
                let once = demazure_step(rs, i, &chi);
                let word = Word::new(vec![i, i]);
                t.eq(
                    "idempotence",
                    Some(&word),
                    &once,
                    &demazure_step(rs, i, &once),
                    character_json,
                );

                // (1 - e^{-α}) D(χ) = Σ c (e^λ - e^{s(λ) - α})
                let lhs = &once - &once.map_weights(|mu| mu - alpha);
                let rhs = &chi - &chi.map_weights(|lambda| &rs.reflect(i, lambda) - alpha);
                t.eq(
                    "telescoping",
                    Some(&Word::new(vec![i])),
                    &rhs,
                    &lhs,
                    character_json,
                );

                for j in i + 1..n {
                    let m = rs.coxeter_order(i, j) as usize;
                    let alternate = |a: usize, b: usize| {
                        (0..m).fold(chi.clone(), |acc, k| {
                            demazure_step(rs, if k % 2 == 0 { a } else { b }, &acc)
                        })
                    };
                    let word = Word::new(
                        (0..m)
                            .map(|k| if k % 2 == 0 { i } else { j })
                            .collect::<Vec<_>>(),
                    );
                    t.eq(
                        "braid",
                        Some(&word),
                        &alternate(i, j),
                        &alternate(j, i),
                        character_json,
                    );
                }
            }
            t
        })
        .collect();
    sum(tallies)
}

fn euler(rs: &RootSystem, opts: &SuiteOptions) -> Tally {
    let n = rs.rank();
    let w0 = rs.longest_element();
    let elems = elements(rs, opts);
    let tallies = elems
        .par_iter()
        .enumerate()
        .map(|(idx, w)| {
            let mut rng = case_rng(opts.seed, idx as u64);
            let words: Vec<Word> = rs.reduced_words(w, Some(opts.euler_words)).collect();
            let mut t = Tally::default();
            for _ in 0..opts.weights_per_element {
                let lambda = random_weight(&mut rng, n, 4);
                let first = euler_char(rs, &words[0], &lambda).expect("valid word");
                for word in &words[1..] {
                    let got = euler_char(rs, word, &lambda).expect("valid word");
                    t.check(got == first, || Failure {
                        check: "word-independence",
                        word: Some(word.clone()),
                        weight: Some(lambda.clone()),
                        expected: character_json(&first),
                        got: character_json(&got),
                    });
                }
                if *w == w0 {
                    for i in 0..n {
                        let reflected = first.map_weights(|mu| rs.reflect(i, mu));
                        t.check(reflected == first, || Failure {
                            check: "w-invariance",
                            word: Some(words[0].clone()),
                            weight: Some(lambda.clone()),
                            expected: character_json(&first),
                            got: character_json(&reflected),
                        });
                    }
                }
            }
            t
        })
        .collect();
    sum(tallies)
}

fn sl2(rs: &RootSystem, i: usize) -> Character {
    let a = rs.simple_root(i).clone();
    Character::from_terms([(a.clone(), 1), (rs.zero(), 1), (-&a, 1)])
}

/// Checks on one reduced word of a simply-laced system.
fn simply_laced_word(rs: &RootSystem, word: &Word, opts: &SuiteOptions, t: &mut Tally) {
    let b = BsdhWord::new(rs, word.clone()).expect("reduced word");
    let report = b.tangent_h0_char().expect("simply laced");
    let total = &report.total;
    let w = Some(word);
    let count = |v: &i64| json!(v);

    t.eq("zero-weight", w, &(b.d() as i64), &report.zero_mult, count);

    let mut expected: Vec<Weight> = b.j().iter().map(|&i| rs.simple_root(i).clone()).collect();
    expected.sort();
    let mut got = report.positive_support.clone();
    got.sort();
    t.eq("positive-support", w, &expected, &got, |ws| {
        json!(ws.iter().map(report::weight).collect::<Vec<_>>())
    });

    for (mu, c) in total.iter() {
        if mu.is_zero() {
            continue;
        }
        t.check(rs.is_root(mu) && c == 1, || Failure {
            check: "root-coefficient",
            word: Some(word.clone()),
            weight: Some(mu.clone()),
            expected: json!(1),
            got: json!(c),
        });
    }

    let criterion = rs.alpha0_criterion(b.element());
    let p_j = reference_chars(rs, b.j()).p_j;
    t.eq(
        "parabolic-iff-criterion",
        w,
        &criterion,
        &(*total == p_j),
        |v| json!(v),
    );

    if let Some((&last, earlier)) = word.letters().split_last() {
        let step = report.per_step.last().expect("nonempty word");
        if earlier.iter().all(|&k| rs.cartan(k, last) == 0) {
            t.eq("last-step-sl2", w, &sl2(rs, last), step, character_json);
        } else {
            let want = if earlier.contains(&last) { 0 } else { 1 };
            t.eq(
                "last-step-zero-weight",
                w,
                &want,
                &step.coefficient(&rs.zero()),
                count,
            );
        }
    }

    if criterion && !b.is_longest() {
        let completions = rs.completions_to_w0(word).expect("reduced word");
        for j in completions.take(opts.max_words) {
            let big_j = j_sets_of_word(rs, j.letters()).1;
            t.eq("completion-j", Some(&j), &b.j().to_vec(), &big_j, |v| {
                report::one_based(v)
            });
        }
    }
}

fn simply_laced_theorems(rs: &RootSystem, opts: &SuiteOptions) -> Tally {
    let elems = elements(rs, opts);
    let tallies = elems
        .par_iter()
        .map(|w| {
            let mut t = Tally::default();
            let mut supp: Option<(Word, Vec<usize>)> = None;
            for word in rs.reduced_words(w, Some(opts.max_words)) {
                simply_laced_word(rs, &word, opts, &mut t);
                let this = BsdhWord::new(rs, word.clone())
                    .expect("reduced")
                    .supp()
                    .to_vec();
                match &supp {
                    None => supp = Some((word, this)),
                    Some((_, first)) => {
                        t.eq("support", Some(&word), first, &this, |v| {
                            report::one_based(v)
                        });
                    }
                }
            }
            t
        })
        .collect();
    sum(tallies)
}

fn kernel(rs: &RootSystem, opts: &SuiteOptions) -> Tally {
    let elems = elements(rs, opts);
    let tallies = elems
        .par_iter()
        .map(|w| {
            let mut t = Tally::default();
            for word in rs.reduced_words(w, Some(opts.max_words)) {
                let b = BsdhWord::new(rs, word.clone()).expect("reduced");
                let completions = rs.completions_to_w0(&word).expect("reduced");
                for completion in completions.take(opts.max_words) {
                    let k = b.kernel_char(&completion).expect("valid completion");
                    t.eq(
                        "kernel",
                        Some(&completion),
                        &k.predicted,
                        &k.observed,
                        character_json,
                    );
                }
            }
            t
        })
        .collect();
    sum(tallies)
}

fn w0_all_types(rs: &RootSystem, opts: &SuiteOptions) -> Tally {
    let n = rs.rank() as i64;
    let simply_laced = rs.cartan_type().simply_laced();
    let words: Vec<Word> = rs
        .reduced_words(&rs.longest_element(), Some(opts.max_words))
        .collect();
    let tallies = words
        .par_iter()
        .map(|word| {
            let mut t = Tally::default();
            let b = BsdhWord::new(rs, word.clone()).expect("reduced");
            let h1 = b.h1_w0_char().expect("longest element");
            t.check(h1.is_nonnegative(), || Failure {
                check: "h1-effective",
                word: Some(word.clone()),
                weight: None,
                expected: json!("nonnegative"),
                got: character_json(&h1),
            });
            if simply_laced {
                t.eq(
                    "h1-vanishes",
                    Some(word),
                    &Character::zero(),
                    &h1,
                    character_json,
                );
            }
            let chi0 = b.tangent_euler_char().zero_mult;
            t.check(chi0 <= n, || Failure {
                check: "euler-zero-weight-bound",
                word: Some(word.clone()),
                weight: Some(rs.zero()),
                expected: json!(format!("<= {n}")),
                got: json!(chi0),
            });
            t
        })
        .collect();
    sum(tallies)
}

fn schubert_adjoint(rs: &RootSystem, opts: &SuiteOptions) -> Tally {
    let refs = reference_chars(rs, &[]);
    let w0 = rs.longest_element();
    let elems = elements(rs, opts);
    let tallies = elems
        .par_iter()
        .map(|w| {
            let mut t = Tally::default();
            let word = w.reduced_word(rs);
            t.eq(
                "adjoint-containment",
                Some(&word),
                &rs.alpha0_criterion(w),
                &adjoint_containment(rs, w),
                |v| json!(v),
            );
            if w.is_identity() {
                t.eq(
                    "schubert-point",
                    Some(&word),
                    &refs.g_mod_b,
                    &schubert_tangent_char(rs, w),
                    character_json,
                );
            }
            if *w == w0 {
                t.eq(
                    "schubert-flag-variety",
                    Some(&word),
                    &refs.g,
                    &schubert_tangent_char(rs, w),
                    character_json,
                );
            }
            t
        })
        .collect();
    sum(tallies)
}

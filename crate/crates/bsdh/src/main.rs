use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use bsdh::cache::WordCache;
use bsdh::checkpoint::classify_w0;
use bsdh::report::{self, Rendered};
use bsdh::suites::{verify, Suite, SuiteOptions};
use bsdh::{parse_type, Error};
use bsdh_core::{autcls, BsdhWord, RootSystem, Word};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

const DEFAULT_CAP: u128 = 1_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "bsdh",
    version,
    about = "Bott-Samelson automorphism and tangent-character computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Include wall-clock timings in reports.
    #[arg(long, global = true)]
    timing: bool,

    /// Worker threads for suites.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Args)]
struct TypeArg {
    /// Cartan type such as A3, B2, G2 or E8.
    #[arg(long = "type")]
    cartan_type: String,
}

#[derive(Debug, Args)]
struct WordArgs {
    #[command(flatten)]
    ty: TypeArg,
    /// Comma-separated 1-based simple reflections, e.g. 1,2,1.
    #[arg(long, allow_hyphen_values = true)]
    word: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cartan matrix, positive roots and highest root.
    Roots(TypeArg),
    /// Reduced words of an element (the longest element by default).
    Words {
        #[command(flatten)]
        ty: TypeArg,
        /// Any word for the element; need not be reduced.
        #[arg(long)]
        word: Option<String>,
        /// Refuse when the element has more reduced words than this.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u128,
        /// Enumerate regardless of the cap.
        #[arg(long)]
        force: bool,
        /// Stop after this many words.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Classify the connected automorphism group.
    Aut(WordArgs),
    /// Character of the global vector fields (exact in types A, D, E).
    TangentChar(WordArgs),
    /// Predicted and observed kernel of restricting vector fields from the
    /// longest element.
    Kernel {
        #[command(flatten)]
        args: WordArgs,
        /// Reduced word of the longest element extending --word.
        #[arg(long)]
        completion: String,
    },
    /// Bucket all reduced words of the longest element by parabolic type.
    ClassifyW0 {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u128,
        #[arg(long)]
        force: bool,
        /// Save progress to --output every this many words.
        #[arg(long, default_value_t = 10_000)]
        checkpoint_every: u64,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random characters for the operator suite.
        #[arg(long)]
        cases: Option<usize>,
        /// Random weights per element for the Euler suite.
        #[arg(long)]
        weights: Option<usize>,
        /// Reduced words inspected per element.
        #[arg(long)]
        max_words: Option<usize>,
        /// Random elements drawn for groups too large to list.
        #[arg(long)]
        samples: Option<usize>,
    },
}

/// A computed report plus whether it records a failed check.
struct Outcome {
    rendered: Rendered,
    failed: bool,
}

fn root_system(arg: &TypeArg) -> Result<RootSystem, Error> {
    let (ct, alias) = parse_type(&arg.cartan_type)?;
    if alias {
        eprintln!("warning: C2 is the same root system as B2; using B2");
    }
    Ok(RootSystem::new(ct))
}

fn bsdh_word<'a>(rs: &'a RootSystem, word: &str) -> Result<BsdhWord<'a>, Error> {
    let word = Word::parse_one_based(word, rs.rank())?;
    Ok(BsdhWord::new(rs, word)?)
}

fn with_timing(mut json: Value, timing: bool, start: Instant) -> Value {
    if timing {
        if let Value::Object(map) = &mut json {
            map.insert(
                "elapsed_ms".into(),
                (start.elapsed().as_millis() as u64).into(),
            );
        }
    }
    json
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let start = Instant::now();
    let ok = |rendered: Rendered| Outcome {
        rendered,
        failed: false,
    };
    let outcome = match &cli.command {
        Command::Roots(ty) => ok(report::roots(&root_system(ty)?)),
        Command::Words {
            ty,
            word,
            cap,
            force,
            limit,
        } => {
            let rs = root_system(ty)?;
            let (element_word, w) = match word {
                Some(s) => {
                    let word = Word::parse_one_based(s, rs.rank())?;
                    let w = rs.from_word(&word)?;
                    (w.reduced_word(&rs), w)
                }
                None => {
                    let w0 = rs.longest_element();
                    (w0.reduced_word(&rs), w0)
                }
            };
            let cap = if *force { u128::MAX } else { *cap };
            let count = rs
                .count_reduced_words_up_to(&w, cap)
                .ok_or(bsdh_core::Error::TooManyWords { cap })?;
            let cache = WordCache::from_env();
            let cached = match &cache {
                Some(c) => c.load(&rs, &w)?,
                None => None,
            };
            let (words, truncated) = match cached {
                Some(mut all) => {
                    let truncated = limit.is_some_and(|l| all.len() > l);
                    all.truncate(limit.unwrap_or(usize::MAX));
                    (all, truncated)
                }
                None => {
                    let mut stream = rs.reduced_words(&w, *limit);
                    let words: Vec<Word> = stream.by_ref().collect();
                    let truncated = stream.truncated();
                    if let (Some(c), false) = (&cache, truncated) {
                        c.store(&rs, &w, &words)?;
                    }
                    (words, truncated)
                }
            };
            ok(report::words(&rs, &element_word, count, &words, truncated))
        }
        Command::Aut(args) => {
            let rs = root_system(&args.ty)?;
            let b = bsdh_word(&rs, &args.word)?;
            ok(report::aut(&b, &autcls::classify(&b)?))
        }
        Command::TangentChar(args) => {
            let rs = root_system(&args.ty)?;
            let b = bsdh_word(&rs, &args.word)?;
            let t = if rs.cartan_type().simply_laced() {
                b.tangent_h0_char()?
            } else {
                b.tangent_euler_char()
            };
            ok(report::tangent(&b, &t))
        }
        Command::Kernel { args, completion } => {
            let rs = root_system(&args.ty)?;
            let b = bsdh_word(&rs, &args.word)?;
            let completion = Word::parse_one_based(completion, rs.rank())?;
            let k = b.kernel_char(&completion)?;
            Outcome {
                rendered: report::kernel(&b, &completion, &k),
                failed: !k.agrees(),
            }
        }
        Command::ClassifyW0 {
            ty,
            cap,
            force,
            checkpoint_every,
        } => {
            let rs = root_system(ty)?;
            let cap = if *force { u128::MAX } else { *cap };
            let c = classify_w0(&rs, cap, cli.output.as_deref(), *checkpoint_every)?;
            let mut tsv = String::from("J\tcount\n");
            for b in &c.buckets {
                let j: Vec<String> = b.j.iter().map(usize::to_string).collect();
                tsv.push_str(&format!("{}\t{}\n", j.join(","), b.count));
            }
            ok(Rendered {
                json: c.to_json(),
                tsv,
            })
        }
        Command::Verify {
            suite,
            ty,
            seed,
            cases,
            weights,
            max_words,
            samples,
        } => {
            let suite: Suite = suite.parse()?;
            let rs = root_system(ty)?;
            let defaults = SuiteOptions::default();
            let opts = SuiteOptions {
                seed: *seed,
                fuzz_cases: cases.unwrap_or(defaults.fuzz_cases),
                weights_per_element: weights.unwrap_or(defaults.weights_per_element),
                max_words: max_words.unwrap_or(defaults.max_words),
                euler_words: max_words.unwrap_or(defaults.euler_words),
                sample_elements: samples.unwrap_or(defaults.sample_elements),
                jobs: cli.jobs,
            };
            let r = verify(suite, &rs, &opts)?;
            // the suite schema always carries elapsed_ms
            return Ok(Outcome {
                rendered: Rendered {
                    json: r.to_json(cli.timing),
                    tsv: r.to_tsv(),
                },
                failed: !r.passed(),
            });
        }
    };
    Ok(Outcome {
        rendered: Rendered {
            json: with_timing(outcome.rendered.json, cli.timing, start),
            tsv: outcome.rendered.tsv,
        },
        failed: outcome.failed,
    })
}

fn emit(cli: &Cli, rendered: &Rendered) -> Result<(), Error> {
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&rendered.json).expect("serializable") + "\n",
        Format::Tsv => rendered.tsv.clone(),
    };
    match &cli.output {
        Some(path) => fs::write(path, text).map_err(|source| Error::Io {
            path: path.clone(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = out.write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result =
        run(&cli).and_then(|outcome| emit(&cli, &outcome.rendered).map(|()| outcome.failed));
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

//! The `freegroup` command line.
//!
//! Exit status: 0 on success or when the queried property holds, 1 when it
//! fails (or an experiment invariant breaks), 2 on usage and input errors,
//! 3 when a resource cap is hit.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::experiments::{run_experiment, CandidateSource, Experiment, ExperimentConfig, DEFAULT_EPSILON};
use crate::parallel::map_trials;
use crate::sampler::{count_partial_injections, sample_whitehead_minimal, Distribution, RngStream};
use crate::stallings::{fold, StallingsGraph};
use crate::whitehead::{enumerate_descriptors, minimality_test, MinimalityLevel};
use crate::words::{
    count_cyclically_reduced, count_reduced_ball, count_reduced_words, Alphabet, ReducedWord,
    DEFAULT_ENUMERATION_BUDGET,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILS: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "freegroup",
    version,
    about = "Subgroups of free groups: Stallings graphs, Whitehead minimality, random generation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fold generators into their Stallings graph.
    Fold {
        #[arg(long = "r", visible_alias = "rank", default_value_t = 2)]
        rank: usize,
        /// Also print the cyclic core and its conjugator.
        #[arg(long)]
        core: bool,
        #[arg(required = true, allow_hyphen_values = true)]
        words: Vec<String>,
    },
    /// Whitehead minimality test with the per-descriptor table.
    Minimal {
        /// Require strict minimality.
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        input: SubgroupInput,
    },
    /// Whether a word lies in the subgroup.
    Member {
        word: String,
        #[command(flatten)]
        input: SubgroupInput,
    },
    /// Exact counts.
    Count {
        #[arg(value_enum)]
        what: CountKind,
        /// Size or length; not needed for `descriptors`.
        n: Option<usize>,
        #[arg(long = "r", visible_alias = "rank", default_value_t = 2)]
        rank: usize,
    },
    /// Random (strictly) Whitehead minimal subgroups by rejection.
    Sample {
        #[arg(long, value_enum)]
        dist: DistArg,
        #[arg(long)]
        n: usize,
        /// Tuple size for the word distribution.
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long = "r", visible_alias = "rank", default_value_t = 2)]
        rank: usize,
        #[command(flatten)]
        level: LevelArg,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// Run a Monte-Carlo experiment and write its CSV report.
    Experiment {
        name: String,
        /// Comma-separated n-grid.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long = "r", visible_alias = "rank", default_value_t = 2)]
        rank: usize,
        /// Tuple size, or alphabet size for factor-count-uniform.
        #[arg(long)]
        k: Option<usize>,
        /// Factor length for factor-count-uniform.
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_EPSILON)]
        epsilon: f64,
        /// Candidate distribution for rejection-cost.
        #[arg(long, value_enum, default_value_t = DistArg::Graph)]
        dist: DistArg,
        /// Use plain instead of strict minimality in rejection-cost.
        #[arg(long)]
        minimal: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct SubgroupInput {
    #[arg(long = "r", visible_alias = "rank", default_value_t = 2)]
    rank: usize,
    /// Graph document file, or `-` for standard input.
    #[arg(long, conflicts_with = "generators")]
    graph: Option<PathBuf>,
    /// Generators to fold when no graph is given.
    #[arg(allow_hyphen_values = true)]
    generators: Vec<String>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct LevelArg {
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    minimal: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CountKind {
    /// Partial injections on n points.
    Injections,
    /// Reduced words of length n.
    Reduced,
    /// Nonempty reduced words of length at most n.
    Ball,
    /// Cyclically reduced words of length n, by enumeration.
    Cyclic,
    /// Whitehead descriptors of the rank.
    Descriptors,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DistArg {
    Graph,
    Word,
}

enum Failure {
    /// The queried property does not hold; output was already written.
    Property,
    Error(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ResourceCap(_) => EXIT_RESOURCE,
        Error::Invariant { .. } => EXIT_FAILS,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Property) => EXIT_FAILS,
        Err(Failure::Error(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn parse_words(words: &[String], alphabet: Alphabet) -> Result<Vec<ReducedWord>, Error> {
    words.iter().map(|w| ReducedWord::parse(w, alphabet)).collect()
}

fn read_document(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn load_subgroup(input: &SubgroupInput) -> Result<StallingsGraph, Failure> {
    if let Some(path) = &input.graph {
        let g: StallingsGraph = read_document(path)?.parse()?;
        return Ok(g);
    }
    let alphabet = Alphabet::new(input.rank)?;
    if input.generators.is_empty() {
        return Err(Error::Precondition("give generators or --graph FILE".into()).into());
    }
    Ok(fold(&parse_words(&input.generators, alphabet)?, alphabet))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Fold { rank, core, words } => {
            let alphabet = Alphabet::new(rank)?;
            let g = fold(&parse_words(&words, alphabet)?, alphabet);
            writeln!(out, "{g}")?;
            if core {
                let (core, conjugator) = g.cyclic_core()?;
                writeln!(out, "core: {core}")?;
                writeln!(out, "conjugator={conjugator}")?;
            }
        }
        Command::Minimal { strict, input } => {
            let g = load_subgroup(&input)?;
            let v = minimality_test(&g);
            writeln!(out, "verdict={}", v.verdict.as_str())?;
            write!(out, "{}", v.table_csv())?;
            let level = if strict {
                MinimalityLevel::Strict
            } else {
                MinimalityLevel::Minimal
            };
            if !v.verdict.satisfies(level) {
                return Err(Failure::Property);
            }
        }
        Command::Member { word, input } => {
            let g = load_subgroup(&input)?;
            let w = ReducedWord::parse(&word, g.alphabet())?;
            let member = g.membership(&w);
            writeln!(out, "{member}")?;
            if !member {
                return Err(Failure::Property);
            }
        }
        Command::Count { what, n, rank } => {
            let alphabet = Alphabet::new(rank)?;
            let size = || n.ok_or_else(|| Error::Precondition(format!("count {what:?} needs a size")));
            let value = match what {
                CountKind::Injections => count_partial_injections(size()?),
                CountKind::Reduced => count_reduced_words(size()?, alphabet),
                CountKind::Ball => count_reduced_ball(size()?, alphabet),
                CountKind::Cyclic => count_cyclically_reduced(size()?, alphabet, DEFAULT_ENUMERATION_BUDGET)?,
                CountKind::Descriptors => enumerate_descriptors(alphabet).len().into(),
            };
            writeln!(out, "{value}")?;
        }
        Command::Sample {
            dist,
            n,
            k,
            rank,
            level,
            seed,
            count,
        } => {
            let alphabet = Alphabet::new(rank)?;
            let level = if level.strict {
                MinimalityLevel::Strict
            } else {
                MinimalityLevel::Minimal
            };
            let distribution = match dist {
                DistArg::Graph => Distribution::Graph,
                DistArg::Word => Distribution::Word { k },
            };
            let samples = map_trials(count, |i| {
                sample_whitehead_minimal(
                    n,
                    alphabet,
                    level,
                    distribution,
                    &mut RngStream::new(seed, i).rng(),
                )
            });
            let mut iterations = 0u64;
            for (i, sample) in samples.into_iter().enumerate() {
                let sample = sample?;
                iterations += sample.iterations;
                write!(out, "# sample {i} iterations={}", sample.iterations)?;
                if let Some(words) = &sample.generators {
                    let words: Vec<String> = words.iter().map(ToString::to_string).collect();
                    write!(out, " generators={}", words.join(","))?;
                }
                writeln!(out)?;
                writeln!(out, "{}", sample.graph)?;
            }
            if count > 0 {
                writeln!(out, "# mean_iterations={}", iterations as f64 / count as f64)?;
            }
        }
        Command::Experiment {
            name,
            n,
            rank,
            k,
            m,
            trials,
            seed,
            epsilon,
            dist,
            minimal,
            out: path,
        } => {
            let experiment: Experiment = name.parse()?;
            let mut config = ExperimentConfig::new(rank, n, trials, seed);
            config.k = k;
            config.factor_length = m;
            config.epsilon = epsilon;
            config.source = match dist {
                DistArg::Graph => CandidateSource::Graph,
                DistArg::Word => CandidateSource::Word,
            };
            if minimal {
                config.level = MinimalityLevel::Minimal;
            }
            let csv = run_experiment(experiment, &config)?.to_csv();
            match path {
                Some(path) => fs::write(path, csv)?,
                None => out.write_all(csv.as_bytes())?,
            }
        }
    }
    Ok(())
}

//! Monte-Carlo experiments over the random generators, reported as CSV.
//!
//! Every trial draws from its own stream `RngStream::new(seed, trial)`, so a
//! report depends only on its configuration. Each sample is checked against
//! the structural invariants of its module before it is counted; the first
//! failing trial aborts the run with [`Error::Invariant`].

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::Rng;

use crate::error::{Error, Result};
use crate::parallel::map_trials;
use crate::sampler::{
    injection_stats, random_partial_injection, random_reduced_word, random_stallings_graph,
    random_subgroup_word_based, sample_whitehead_minimal, Distribution, InjectionStats, RngStream, TrialRng,
};
use crate::stallings::{check_stallings, StallingsGraph};
use crate::whitehead::{enumerate_descriptors, minimality_test, MinimalityLevel};
use crate::words::{count_occurrences, Alphabet, Letter, ReducedWord};

pub const CSV_HEADER: &str = "experiment,r,k,n,trials,seed,statistic,value,stderr";

/// Long-word threshold `α` and central-tree height ratio `β` of the
/// `graph-shape-word` decomposition.
pub const SHAPE_ALPHA: f64 = 0.5;
pub const SHAPE_BETA: f64 = 0.1;

/// Slack in the reduced factor-count bracket.
pub const DEFAULT_EPSILON: f64 = 0.005;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Experiment {
    MinimalFractionGraph,
    MinimalFractionAllGraphs,
    MinimalFractionWord,
    SequenceBounds,
    ExtremityIntersection,
    FactorCountUniform,
    FactorCountReduced,
    EndpointProbability,
    GraphShapeWord,
    RejectionCost,
}

impl Experiment {
    pub const ALL: [Experiment; 10] = [
        Experiment::MinimalFractionGraph,
        Experiment::MinimalFractionAllGraphs,
        Experiment::MinimalFractionWord,
        Experiment::SequenceBounds,
        Experiment::ExtremityIntersection,
        Experiment::FactorCountUniform,
        Experiment::FactorCountReduced,
        Experiment::EndpointProbability,
        Experiment::GraphShapeWord,
        Experiment::RejectionCost,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Experiment::MinimalFractionGraph => "minimal-fraction-graph",
            Experiment::MinimalFractionAllGraphs => "minimal-fraction-allgraphs",
            Experiment::MinimalFractionWord => "minimal-fraction-word",
            Experiment::SequenceBounds => "sequence-bounds",
            Experiment::ExtremityIntersection => "extremity-intersection",
            Experiment::FactorCountUniform => "factor-count-uniform",
            Experiment::FactorCountReduced => "factor-count-reduced",
            Experiment::EndpointProbability => "endpoint-probability",
            Experiment::GraphShapeWord => "graph-shape-word",
            Experiment::RejectionCost => "rejection-cost",
        }
    }

    /// Whether the `k` parameter means something for this experiment.
    fn uses_k(self, config: &ExperimentConfig) -> bool {
        match self {
            Experiment::MinimalFractionWord
            | Experiment::FactorCountUniform
            | Experiment::EndpointProbability
            | Experiment::GraphShapeWord => true,
            Experiment::RejectionCost => config.source == CandidateSource::Word,
            _ => false,
        }
    }

    fn default_k(self) -> usize {
        match self {
            Experiment::FactorCountUniform => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for Experiment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Experiment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Experiment::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Experiment::ALL.iter().map(|e| e.name()).collect();
                Error::Precondition(format!(
                    "unknown experiment {s:?}; valid names: {}",
                    names.join(", ")
                ))
            })
    }
}

/// Candidate distribution of the `rejection-cost` experiment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CandidateSource {
    Graph,
    Word,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub rank: usize,
    /// The n-grid; cells run in this order.
    pub sizes: Vec<usize>,
    pub trials: u64,
    pub seed: u64,
    /// Tuple size, or alphabet size for `factor-count-uniform`. `None`
    /// selects the experiment's default.
    pub k: Option<usize>,
    /// Factor length for `factor-count-uniform`.
    pub factor_length: usize,
    pub epsilon: f64,
    pub source: CandidateSource,
    pub level: MinimalityLevel,
}

impl ExperimentConfig {
    pub fn new(rank: usize, sizes: Vec<usize>, trials: u64, seed: u64) -> Self {
        Self {
            rank,
            sizes,
            trials,
            seed,
            k: None,
            factor_length: 2,
            epsilon: DEFAULT_EPSILON,
            source: CandidateSource::Graph,
            level: MinimalityLevel::Strict,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReportRow {
    pub n: usize,
    pub statistic: &'static str,
    pub value: f64,
    pub stderr: f64,
}

#[derive(Clone, Debug)]
pub struct ExperimentReport {
    pub experiment: Experiment,
    pub rank: usize,
    pub k: Option<usize>,
    pub trials: u64,
    pub seed: u64,
    pub rows: Vec<ReportRow>,
    /// Wall-clock per cell, in grid order.
    pub elapsed: Vec<(usize, Duration)>,
}

impl ExperimentReport {
    pub fn row(&self, n: usize, statistic: &str) -> Option<&ReportRow> {
        self.rows.iter().find(|r| r.n == n && r.statistic == statistic)
    }

    pub fn value(&self, n: usize, statistic: &str) -> Option<f64> {
        self.row(n, statistic).map(|r| r.value)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        let k = self.k.map(|k| k.to_string()).unwrap_or_default();
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                self.experiment,
                self.rank,
                k,
                row.n,
                self.trials,
                self.seed,
                row.statistic,
                row.value,
                row.stderr
            ));
        }
        out
    }
}

enum TrialError {
    Invariant(String),
    Library(Error),
}

impl From<Error> for TrialError {
    fn from(e: Error) -> Self {
        TrialError::Library(e)
    }
}

type TrialResult<T> = std::result::Result<T, TrialError>;

fn ensure(condition: bool, message: impl FnOnce() -> String) -> TrialResult<()> {
    if condition {
        Ok(())
    } else {
        Err(TrialError::Invariant(message()))
    }
}

fn run_cell<T, F>(config: &ExperimentConfig, n: usize, trial: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&mut TrialRng) -> TrialResult<T> + Sync + Send,
{
    let seed = config.seed;
    let outcomes = map_trials(config.trials, |i| trial(&mut RngStream::new(seed, i).rng()));
    let mut values = Vec::with_capacity(outcomes.len());
    for (i, outcome) in outcomes.into_iter().enumerate() {
        match outcome {
            Ok(v) => values.push(v),
            Err(TrialError::Library(e)) => return Err(e),
            Err(TrialError::Invariant(message)) => {
                return Err(Error::Invariant {
                    n,
                    seed,
                    trial: i as u64,
                    message,
                })
            }
        }
    }
    Ok(values)
}

/// Sample proportion and its binomial standard error.
pub fn proportion(hits: usize, trials: usize) -> (f64, f64) {
    let p = hits as f64 / trials as f64;
    (p, (p * (1.0 - p) / trials as f64).sqrt())
}

/// Sample mean and the standard error `σ/√trials`.
pub fn mean_stderr(values: &[f64]) -> (f64, f64) {
    let t = values.len() as f64;
    let mean = values.iter().sum::<f64>() / t;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (t - 1.0);
    (mean, (var / t).sqrt())
}

struct Rows {
    n: usize,
    rows: Vec<ReportRow>,
}

impl Rows {
    fn push(&mut self, statistic: &'static str, (value, stderr): (f64, f64)) {
        self.rows.push(ReportRow {
            n: self.n,
            statistic,
            value,
            stderr,
        });
    }

    fn fraction(&mut self, statistic: &'static str, flags: impl Iterator<Item = bool>) {
        let mut trials = 0;
        let hits = flags.inspect(|_| trials += 1).filter(|&b| b).count();
        self.push(statistic, proportion(hits, trials));
    }

    fn mean(&mut self, statistic: &'static str, values: impl Iterator<Item = f64>) {
        let values: Vec<f64> = values.collect();
        self.push(statistic, mean_stderr(&values));
    }

    fn exact(&mut self, statistic: &'static str, value: f64) {
        self.push(statistic, (value, 0.0));
    }
}

pub fn run_experiment(experiment: Experiment, config: &ExperimentConfig) -> Result<ExperimentReport> {
    let alphabet = Alphabet::new(config.rank)?;
    if config.trials == 0 {
        return Err(Error::Precondition("--trials must be at least 1".into()));
    }
    if config.sizes.is_empty() || config.sizes.contains(&0) {
        return Err(Error::Precondition(
            "the n-grid must be a nonempty list of positive sizes".into(),
        ));
    }
    let k = config.k.unwrap_or(experiment.default_k());
    match experiment {
        Experiment::FactorCountUniform if !(2..=256).contains(&k) => {
            return Err(Error::Precondition(format!(
                "alphabet size k must be in 2..=256 (got {k})"
            )));
        }
        Experiment::FactorCountUniform if config.factor_length == 0 => {
            return Err(Error::Precondition("factor length must be at least 1".into()));
        }
        _ if k == 0 => return Err(Error::Precondition("k must be at least 1".into())),
        _ => {}
    }
    if config.epsilon.is_nan() || config.epsilon < 0.0 {
        return Err(Error::Precondition("epsilon must be nonnegative".into()));
    }

    let mut report = ExperimentReport {
        experiment,
        rank: config.rank,
        k: experiment.uses_k(config).then_some(k),
        trials: config.trials,
        seed: config.seed,
        rows: Vec::new(),
        elapsed: Vec::new(),
    };
    for &n in &config.sizes {
        let start = Instant::now();
        let mut rows = Rows { n, rows: Vec::new() };
        let cell = Cell {
            config,
            alphabet,
            n,
            k,
        };
        match experiment {
            Experiment::MinimalFractionGraph => cell.minimal_fraction_graph(&mut rows, true)?,
            Experiment::MinimalFractionAllGraphs => cell.minimal_fraction_graph(&mut rows, false)?,
            Experiment::MinimalFractionWord => cell.minimal_fraction_word(&mut rows)?,
            Experiment::SequenceBounds => cell.sequence_bounds(&mut rows)?,
            Experiment::ExtremityIntersection => cell.extremity_intersection(&mut rows)?,
            Experiment::FactorCountUniform => cell.factor_count_uniform(&mut rows)?,
            Experiment::FactorCountReduced => cell.factor_count_reduced(&mut rows)?,
            Experiment::EndpointProbability => cell.endpoint_probability(&mut rows)?,
            Experiment::GraphShapeWord => cell.graph_shape_word(&mut rows)?,
            Experiment::RejectionCost => cell.rejection_cost(&mut rows)?,
        }
        report.rows.extend(rows.rows);
        report.elapsed.push((n, start.elapsed()));
    }
    Ok(report)
}

fn check_graph(alphabet: Alphabet, g: &StallingsGraph) -> TrialResult<()> {
    check_stallings(alphabet, g.maps()).map_err(|e| TrialError::Invariant(format!("invalid graph: {e}")))
}

fn check_injection_stats(n: usize, s: &InjectionStats, domain: usize) -> TrialResult<()> {
    ensure(s.sequence_count == n - domain, || {
        format!(
            "sequence count {} differs from n − |dom| = {}",
            s.sequence_count,
            n - domain
        )
    })?;
    ensure(
        s.sequence_count <= s.extremities.len() && s.extremities.len() <= 2 * s.sequence_count,
        || {
            format!(
                "{} sequences but {} extremities",
                s.sequence_count,
                s.extremities.len()
            )
        },
    )
}

struct MinimalityObservation {
    strict: bool,
    minimal: bool,
    cyclically_reduced: bool,
}

fn observe_minimality(g: &StallingsGraph, descriptors: usize) -> TrialResult<MinimalityObservation> {
    let v = minimality_test(g);
    ensure(v.cyclically_reduced == g.is_cyclically_reduced(), || {
        "verdict disagrees with the valency check".into()
    })?;
    ensure(!v.cyclically_reduced || v.table.len() == descriptors, || {
        format!("{} descriptors evaluated, expected {descriptors}", v.table.len())
    })?;
    ensure(!v.verdict.is_minimal() || v.cyclically_reduced, || {
        "minimal verdict on a graph that is not cyclically reduced".into()
    })?;
    Ok(MinimalityObservation {
        strict: v.verdict.satisfies(MinimalityLevel::Strict),
        minimal: v.verdict.is_minimal(),
        cyclically_reduced: v.cyclically_reduced,
    })
}

fn check_generators(g: &StallingsGraph, words: &[ReducedWord]) -> TrialResult<()> {
    match words.iter().find(|w| !g.membership(w)) {
        Some(w) => Err(TrialError::Invariant(format!(
            "generator {w} is not accepted by its fold"
        ))),
        None => Ok(()),
    }
}

/// Outcome of the central-tree decomposition test for one word tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShapeObservation {
    /// Every word is longer than `⌈αn⌉` and the `⌊βn⌋`-prefixes of the words
    /// and their inverses are pairwise distinct.
    pub long_distinct_prefixes: bool,
    /// The graph is a central tree on those prefixes plus one outer loop per word.
    pub central_tree: bool,
}

pub fn central_tree_shape(words: &[ReducedWord], g: &StallingsGraph, n: usize) -> ShapeObservation {
    let height = (SHAPE_BETA * n as f64).floor() as usize;
    let long = (SHAPE_ALPHA * n as f64).ceil() as usize;
    let inverses: Vec<ReducedWord> = words.iter().map(ReducedWord::inverse).collect();
    let ends: Vec<&ReducedWord> = words.iter().chain(&inverses).collect();
    let all_long = words.iter().all(|w| w.len() > long && w.len() > 2 * height);
    let distinct = all_long && {
        let prefixes: HashSet<&[Letter]> = ends.iter().map(|w| &w.letters()[..height]).collect();
        prefixes.len() == ends.len()
    };
    if !distinct {
        return ShapeObservation {
            long_distinct_prefixes: false,
            central_tree: false,
        };
    }
    let tree: HashSet<&[Letter]> = ends
        .iter()
        .flat_map(|w| (1..=height).map(move |len| &w.letters()[..len]))
        .collect();
    let loops: usize = words.iter().map(|w| w.len() - 2 * height - 1).sum();
    ShapeObservation {
        long_distinct_prefixes: true,
        central_tree: g.size() == 1 + tree.len() + loops,
    }
}

struct Cell<'a> {
    config: &'a ExperimentConfig,
    alphabet: Alphabet,
    n: usize,
    k: usize,
}

impl Cell<'_> {
    fn minimal_fraction_graph(&self, rows: &mut Rows, cyclically_reduced: bool) -> Result<()> {
        let (alphabet, n) = (self.alphabet, self.n);
        let descriptors = enumerate_descriptors(alphabet).len();
        let obs = run_cell(self.config, n, |rng| {
            let (g, rejected) = random_stallings_graph(n, alphabet, cyclically_reduced, rng)?;
            check_graph(alphabet, &g)?;
            ensure(g.size() == n, || format!("graph has {} vertices", g.size()))?;
            ensure(!cyclically_reduced || g.is_cyclically_reduced(), || {
                "conditioned sample is not cyclically reduced".into()
            })?;
            Ok((observe_minimality(&g, descriptors)?, rejected))
        })?;
        rows.fraction("strict_fraction", obs.iter().map(|o| o.0.strict));
        rows.fraction("minimal_fraction", obs.iter().map(|o| o.0.minimal));
        if cyclically_reduced {
            rows.mean("mean_rejections", obs.iter().map(|o| o.1 as f64));
        } else {
            rows.fraction(
                "cyclically_reduced_fraction",
                obs.iter().map(|o| o.0.cyclically_reduced),
            );
        }
        Ok(())
    }

    fn minimal_fraction_word(&self, rows: &mut Rows) -> Result<()> {
        let (alphabet, n, k) = (self.alphabet, self.n, self.k);
        let descriptors = enumerate_descriptors(alphabet).len();
        let obs = run_cell(self.config, n, |rng| {
            let (words, g) = random_subgroup_word_based(k, n, alphabet, true, rng)?;
            check_graph(alphabet, &g)?;
            check_generators(&g, &words)?;
            observe_minimality(&g, descriptors)
        })?;
        rows.fraction("strict_fraction", obs.iter().map(|o| o.strict));
        rows.fraction("minimal_fraction", obs.iter().map(|o| o.minimal));
        Ok(())
    }

    fn sequence_bounds(&self, rows: &mut Rows) -> Result<()> {
        let n = self.n;
        let root = (n as f64).sqrt();
        let obs = run_cell(self.config, n, |rng| {
            let f = random_partial_injection(n, rng);
            let s = injection_stats(&f);
            check_injection_stats(n, &s, f.domain_size())?;
            Ok(s.sequence_count)
        })?;
        let outside = |&c: &usize| !(root / 2.0 < c as f64 && (c as f64) < 2.0 * root);
        rows.fraction("tail_fraction", obs.iter().map(outside));
        rows.mean("mean_sequence_count", obs.iter().map(|&c| c as f64));
        Ok(())
    }

    fn extremity_intersection(&self, rows: &mut Rows) -> Result<()> {
        let n = self.n;
        let threshold = (n as f64).sqrt() / (4.0 * (self.config.rank as f64 - 1.0));
        let obs = run_cell(self.config, n, |rng| {
            let f = random_partial_injection(n, rng);
            let g = random_partial_injection(n, rng);
            let (sf, sg) = (injection_stats(&f), injection_stats(&g));
            check_injection_stats(n, &sf, f.domain_size())?;
            check_injection_stats(n, &sg, g.domain_size())?;
            Ok(sf.extremity_intersection(&sg))
        })?;
        rows.fraction("tail_fraction", obs.iter().map(|&c| c as f64 >= threshold));
        rows.mean("mean_intersection", obs.iter().map(|&c| c as f64));
        rows.exact("threshold", threshold);
        Ok(())
    }

    fn factor_count_uniform(&self, rows: &mut Rows) -> Result<()> {
        let (n, k, m) = (self.n, self.k, self.config.factor_length);
        let factor: Vec<u8> = (0..m).map(|i| (i % k) as u8).collect();
        let obs = run_cell(self.config, n, |rng| {
            let word: Vec<u8> = (0..n).map(|_| rng.gen_range(0..k) as u8).collect();
            let z = count_occurrences(&word, &factor);
            ensure(z <= (n + 1).saturating_sub(m), || {
                format!("{z} occurrences in length {n}")
            })?;
            Ok(z)
        })?;
        let reference = n as f64 / (k as f64).powi(m as i32);
        let (mean, stderr) = mean_stderr(&obs.iter().map(|&z| z as f64).collect::<Vec<_>>());
        rows.push("mean_occurrences", (mean, stderr));
        rows.exact("reference_mean", reference);
        rows.push(
            "relative_error",
            ((mean - reference).abs() / reference, stderr / reference),
        );
        Ok(())
    }

    fn factor_count_reduced(&self, rows: &mut Rows) -> Result<()> {
        let (alphabet, n, eps) = (self.alphabet, self.n, self.config.epsilon);
        let factor = [Letter::positive(0), Letter::positive(1)];
        let q = 2.0 * alphabet.rank() as f64 - 1.0;
        let lower = ((q - 1.0) / q.powi(3) - 2.0 * eps) * (n as f64 - 1.0);
        let upper = (1.0 / (q * q) + eps) * (n as f64 - 1.0) + 1.0;
        let obs = run_cell(self.config, n, |rng| {
            let w = random_reduced_word(n, alphabet, rng);
            ensure(crate::words::is_reduced(w.letters()) && w.len() == n, || {
                format!("sample {w} is not a reduced word of length {n}")
            })?;
            Ok(count_occurrences(w.letters(), &factor))
        })?;
        rows.mean("mean_occurrences", obs.iter().map(|&z| z as f64));
        rows.exact("lower_bound", lower);
        rows.exact("upper_bound", upper);
        rows.fraction(
            "bracket_fraction",
            obs.iter().map(|&z| lower <= z as f64 && z as f64 <= upper),
        );
        Ok(())
    }

    fn endpoint_probability(&self, rows: &mut Rows) -> Result<()> {
        let (alphabet, n, k) = (self.alphabet, self.n, self.k);
        let a = Letter::positive(0);
        let obs = run_cell(self.config, n, |rng| {
            let w = random_reduced_word(n, alphabet, rng);
            let start_end = w.first() == Some(a) && w.last() == Some(a.inverse());
            let (words, g) = random_subgroup_word_based(k, n, alphabet, false, rng)?;
            check_graph(alphabet, &g)?;
            let x = words[0].first();
            let event = words
                .iter()
                .all(|h| h.first() == x && h.last() == x.map(Letter::inverse));
            ensure(!event || !g.is_cyclically_reduced(), || {
                "common first letter cancels the last, yet the fold is cyclically reduced".into()
            })?;
            Ok((start_end, event, g.is_cyclically_reduced()))
        })?;
        let two_r = 2.0 * alphabet.rank() as f64;
        rows.fraction("start_end_fraction", obs.iter().map(|o| o.0));
        rows.exact("start_end_reference", two_r.powi(-2));
        rows.fraction("tuple_event_fraction", obs.iter().map(|o| o.1));
        rows.exact("tuple_event_reference", two_r.powi(1 - 2 * k as i32));
        rows.fraction("not_cyclically_reduced_fraction", obs.iter().map(|o| !o.2));
        Ok(())
    }

    fn graph_shape_word(&self, rows: &mut Rows) -> Result<()> {
        let (alphabet, n, k) = (self.alphabet, self.n, self.k);
        let obs = run_cell(self.config, n, |rng| {
            let (words, g) = random_subgroup_word_based(k, n, alphabet, true, rng)?;
            check_graph(alphabet, &g)?;
            check_generators(&g, &words)?;
            let unfolded: usize = 1 + words.iter().map(|w| w.len() - 1).sum::<usize>();
            ensure(g.size() <= unfolded, || {
                format!(
                    "fold has {} vertices, more than the {unfolded} of the bouquet",
                    g.size()
                )
            })?;
            let shape = central_tree_shape(&words, &g, n);
            ensure(!shape.central_tree || shape.long_distinct_prefixes, || {
                "shape accepted without its prefix condition".into()
            })?;
            let valency_two = (0..g.size()).filter(|&p| g.valency(p) == 2).count();
            Ok((shape, valency_two as f64 / g.size() as f64))
        })?;
        rows.mean("valency2_fraction", obs.iter().map(|o| o.1));
        rows.fraction(
            "prefix_condition_fraction",
            obs.iter().map(|o| o.0.long_distinct_prefixes),
        );
        rows.fraction("central_tree_fraction", obs.iter().map(|o| o.0.central_tree));
        Ok(())
    }

    fn rejection_cost(&self, rows: &mut Rows) -> Result<()> {
        let (alphabet, n, level) = (self.alphabet, self.n, self.config.level);
        let distribution = match self.config.source {
            CandidateSource::Graph => Distribution::Graph,
            CandidateSource::Word => Distribution::Word { k: self.k },
        };
        let obs = run_cell(self.config, n, |rng| {
            let start = Instant::now();
            let sample = sample_whitehead_minimal(n, alphabet, level, distribution, rng)?;
            let seconds = start.elapsed().as_secs_f64();
            check_graph(alphabet, &sample.graph)?;
            ensure(minimality_test(&sample.graph).verdict.satisfies(level), || {
                "accepted sample fails its minimality level".into()
            })?;
            Ok((sample.iterations, seconds))
        })?;
        rows.mean("mean_iterations", obs.iter().map(|o| o.0 as f64));
        rows.mean("mean_seconds", obs.iter().map(|o| o.1));
        Ok(())
    }
}

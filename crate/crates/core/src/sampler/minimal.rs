//! Rejection samplers for (strictly) Whitehead minimal subgroups.

use rand::Rng;

use super::graph::{random_stallings_graph, DEFAULT_ITERATION_CAP};
use super::word::random_subgroup_word_based;
use crate::error::{Error, Result};
use crate::stallings::StallingsGraph;
use crate::whitehead::{satisfies_minimality, MinimalityLevel};
use crate::words::{Alphabet, ReducedWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Distribution {
    /// Uniform Stallings graphs with `n` vertices.
    Graph,
    /// `k` uniform cyclically reduced words of length at most `n`.
    Word { k: usize },
}

#[derive(Clone, Debug)]
pub struct MinimalSample {
    pub graph: StallingsGraph,
    /// The generating tuple, for the word-based distribution.
    pub generators: Option<Vec<ReducedWord>>,
    /// Candidates drawn, including the accepted one.
    pub iterations: u64,
}

/// Draws from `distribution` until the candidate passes the minimality test.
pub fn sample_whitehead_minimal<R: Rng + ?Sized>(
    n: usize,
    alphabet: Alphabet,
    level: MinimalityLevel,
    distribution: Distribution,
    rng: &mut R,
) -> Result<MinimalSample> {
    sample_whitehead_minimal_capped(n, alphabet, level, distribution, DEFAULT_ITERATION_CAP, rng)
}

pub fn sample_whitehead_minimal_capped<R: Rng + ?Sized>(
    n: usize,
    alphabet: Alphabet,
    level: MinimalityLevel,
    distribution: Distribution,
    cap: u64,
    rng: &mut R,
) -> Result<MinimalSample> {
    for iteration in 1..=cap {
        let (graph, generators) = match distribution {
            Distribution::Graph => (random_stallings_graph(n, alphabet, false, rng)?.0, None),
            Distribution::Word { k } => {
                let (words, graph) = random_subgroup_word_based(k, n, alphabet, true, rng)?;
                (graph, Some(words))
            }
        };
        if satisfies_minimality(&graph, level) {
            return Ok(MinimalSample {
                graph,
                generators,
                iterations: iteration,
            });
        }
    }
    Err(Error::ResourceCap(format!(
        "no minimal subgroup accepted after {cap} candidates"
    )))
}

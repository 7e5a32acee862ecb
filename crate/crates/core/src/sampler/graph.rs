//! Uniform Stallings graphs of a given size by rejection from tuples of
//! uniform partial injections.

use rand::Rng;

use super::injection::injection_sampler;
use crate::error::{Error, Result};
use crate::stallings::{check_stallings, PartialInjection, StallingsGraph, BASE};
use crate::words::Alphabet;

pub const DEFAULT_ITERATION_CAP: u64 = 1_000_000;

fn base_valency(maps: &[PartialInjection]) -> usize {
    maps.iter()
        .map(|f| f.apply(BASE).is_some() as usize + f.preimage(BASE).is_some() as usize)
        .sum()
}

/// An `r`-tuple of uniform partial injections on `n` points, conditioned on
/// forming a Stallings graph based at vertex 1 (and on being cyclically
/// reduced when requested). Returns the graph and the number of rejected
/// tuples.
pub fn random_stallings_graph<R: Rng + ?Sized>(
    n: usize,
    alphabet: Alphabet,
    require_cyclically_reduced: bool,
    rng: &mut R,
) -> Result<(StallingsGraph, u64)> {
    random_stallings_graph_capped(
        n,
        alphabet,
        require_cyclically_reduced,
        DEFAULT_ITERATION_CAP,
        rng,
    )
}

pub fn random_stallings_graph_capped<R: Rng + ?Sized>(
    n: usize,
    alphabet: Alphabet,
    require_cyclically_reduced: bool,
    cap: u64,
    rng: &mut R,
) -> Result<(StallingsGraph, u64)> {
    if n == 0 {
        return Err(Error::Precondition("graph size must be at least 1".into()));
    }
    let sampler = injection_sampler(n);
    for rejected in 0..cap {
        let maps: Vec<PartialInjection> = (0..alphabet.rank()).map(|_| sampler.sample(rng)).collect();
        if require_cyclically_reduced && base_valency(&maps) < 2 {
            continue;
        }
        if check_stallings(alphabet, &maps).is_ok() {
            return Ok((StallingsGraph::from_maps_unchecked(alphabet, maps), rejected));
        }
    }
    Err(Error::ResourceCap(format!(
        "no Stallings graph of size {n} accepted after {cap} draws"
    )))
}

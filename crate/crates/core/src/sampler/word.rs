//! Uniform reduced and cyclically reduced words, and word-based subgroups.

use num_bigint::{BigUint, RandBigInt};
use rand::Rng;

use super::graph::DEFAULT_ITERATION_CAP;
use crate::error::{Error, Result};
use crate::stallings::{fold, StallingsGraph};
use crate::words::{count_reduced_ball, count_reduced_words, Alphabet, Letter, ReducedWord};

/// Which length class a word sampler draws from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WordLength {
    /// Exactly `n` letters.
    Exact(usize),
    /// Between 1 and `n` letters, uniform over the nonempty ball.
    AtMost(usize),
}

/// Uniform over reduced words of length exactly `n`.
pub fn random_reduced_word<R: Rng + ?Sized>(n: usize, alphabet: Alphabet, rng: &mut R) -> ReducedWord {
    let size = alphabet.size();
    let mut letters = Vec::with_capacity(n);
    if n > 0 {
        letters.push(Letter::from_code(rng.gen_range(0..size)));
    }
    for _ in 1..n {
        let forbidden = letters[letters.len() - 1].inverse().code();
        let mut code = rng.gen_range(0..size - 1);
        if code >= forbidden {
            code += 1;
        }
        letters.push(Letter::from_code(code));
    }
    ReducedWord::from_reduced_unchecked(letters)
}

/// Draws `m ∈ 1..=n` with probability `|R_m| / |R_≤n|`, exactly.
pub fn random_ball_length<R: Rng + ?Sized>(n: usize, alphabet: Alphabet, rng: &mut R) -> usize {
    assert!(n >= 1, "the nonempty ball needs n ≥ 1");
    let total = count_reduced_ball(n, alphabet);
    let mut u = rng.gen_biguint_below(&total);
    let ratio = BigUint::from(alphabet.size() as u64 - 1);
    let mut m = n;
    let mut weight = count_reduced_words(n, alphabet);
    while u >= weight {
        u -= &weight;
        m -= 1;
        weight /= &ratio;
    }
    m
}

/// Uniform over nonempty reduced words of length at most `n`.
pub fn random_reduced_word_ball<R: Rng + ?Sized>(n: usize, alphabet: Alphabet, rng: &mut R) -> ReducedWord {
    let m = random_ball_length(n, alphabet, rng);
    random_reduced_word(m, alphabet, rng)
}

pub fn random_word<R: Rng + ?Sized>(length: WordLength, alphabet: Alphabet, rng: &mut R) -> ReducedWord {
    match length {
        WordLength::Exact(n) => random_reduced_word(n, alphabet, rng),
        WordLength::AtMost(n) => random_reduced_word_ball(n, alphabet, rng),
    }
}

/// Uniform over cyclically reduced words of the given length class, by
/// rejection. Returns the word and the number of rejected draws.
pub fn random_cyclically_reduced_word<R: Rng + ?Sized>(
    length: WordLength,
    alphabet: Alphabet,
    rng: &mut R,
) -> Result<(ReducedWord, u64)> {
    for rejected in 0..DEFAULT_ITERATION_CAP {
        let w = random_word(length, alphabet, rng);
        if w.is_cyclically_reduced() {
            return Ok((w, rejected));
        }
    }
    Err(Error::ResourceCap(format!(
        "no cyclically reduced word accepted after {DEFAULT_ITERATION_CAP} draws"
    )))
}

/// `k` independent uniform words of length at most `n` and their Stallings graph.
pub fn random_subgroup_word_based<R: Rng + ?Sized>(
    k: usize,
    n: usize,
    alphabet: Alphabet,
    cyclically_reduced: bool,
    rng: &mut R,
) -> Result<(Vec<ReducedWord>, StallingsGraph)> {
    if k == 0 || n == 0 {
        return Err(Error::Precondition(
            "word-based subgroups need k ≥ 1 and n ≥ 1".into(),
        ));
    }
    let words = (0..k)
        .map(|_| {
            if cyclically_reduced {
                random_cyclically_reduced_word(WordLength::AtMost(n), alphabet, rng).map(|(w, _)| w)
            } else {
                Ok(random_reduced_word_ball(n, alphabet, rng))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let graph = fold(&words, alphabet);
    Ok((words, graph))
}

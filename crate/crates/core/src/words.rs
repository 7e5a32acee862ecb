//! Letters, words and reduced words over a symmetrized alphabet.
//!
//! Text convention: the `i`-th generator is the `i`-th lowercase ASCII letter
//! and its inverse is the matching uppercase letter, so `aabA` is `a·a·b·ā`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Enumeration cap used by [`count_cyclically_reduced`] when none is given.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 26;

/// A rank-`r` free basis together with its formal inverses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    rank: usize,
}

impl Alphabet {
    pub fn new(rank: usize) -> Result<Self> {
        if rank < 2 {
            return Err(Error::InvalidRank(rank));
        }
        if rank > 26 {
            return Err(Error::RankTooLarge(rank));
        }
        Ok(Self { rank })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of letters in the symmetrized alphabet, `2r`.
    pub fn size(&self) -> usize {
        2 * self.rank
    }

    /// All letters in the canonical order `a < ā < b < b̄ < …`.
    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.size() as u8).map(Letter)
    }

    pub fn positive_letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.rank).map(Letter::positive)
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.index() < self.rank
    }
}

/// A letter of the symmetrized alphabet.
///
/// Encoded as `2 * index + sign`, which makes inversion a single bit flip and
/// makes the derived ordering the canonical letter order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u8);

impl Letter {
    pub const fn positive(index: usize) -> Self {
        Letter((2 * index) as u8)
    }

    pub const fn negative(index: usize) -> Self {
        Letter((2 * index + 1) as u8)
    }

    pub fn from_code(code: usize) -> Self {
        Letter(code as u8)
    }

    /// Position in the canonical letter order.
    pub fn code(self) -> usize {
        self.0 as usize
    }

    /// Zero-based index of the underlying generator.
    pub fn index(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 & 1 == 0
    }

    pub const fn inverse(self) -> Self {
        Letter(self.0 ^ 1)
    }

    /// The positive letter with the same generator.
    pub fn generator(self) -> Self {
        Letter(self.0 & !1)
    }

    pub fn to_char(self) -> char {
        let base = if self.is_positive() { b'a' } else { b'A' };
        (base + self.index() as u8) as char
    }

    pub fn from_char(c: char, alphabet: Alphabet) -> Option<Self> {
        let letter = match c {
            'a'..='z' => Letter::positive(c as usize - 'a' as usize),
            'A'..='Z' => Letter::negative(c as usize - 'A' as usize),
            _ => return None,
        };
        alphabet.contains(letter).then_some(letter)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[Letter]) -> fmt::Result {
    for letter in letters {
        write!(f, "{letter}")?;
    }
    Ok(())
}

/// A subset of the symmetrized alphabet, stored as a bitmask over letter codes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LetterSet(u64);

impl LetterSet {
    pub fn empty() -> Self {
        LetterSet(0)
    }

    pub fn from_bits(bits: u64) -> Self {
        LetterSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, x: Letter) -> bool {
        self.0 >> x.code() & 1 == 1
    }

    pub fn insert(&mut self, x: Letter) {
        self.0 |= 1 << x.code();
    }

    pub fn with(mut self, x: Letter) -> Self {
        self.insert(x);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        LetterSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        LetterSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        LetterSet(self.0 & !other.0)
    }

    /// Members in canonical letter order.
    pub fn iter(self) -> impl Iterator<Item = Letter> {
        (0..64usize)
            .filter(move |&c| self.0 >> c & 1 == 1)
            .map(Letter::from_code)
    }
}

impl FromIterator<Letter> for LetterSet {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        let mut set = LetterSet::empty();
        for x in iter {
            set.insert(x);
        }
        set
    }
}

impl fmt::Display for LetterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// An arbitrary, possibly unreduced, letter sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

/// A freely reduced word, i.e. an element of the free group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord(Vec<Letter>);

impl ReducedWord {
    pub fn empty() -> Self {
        ReducedWord(Vec::new())
    }

    /// Wraps `letters` if they contain no cancelling pair.
    pub fn new(letters: Vec<Letter>) -> Option<Self> {
        is_reduced(&letters).then_some(ReducedWord(letters))
    }

    /// Parses and freely reduces `text`.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        parse_word(text, alphabet).map(|w| free_reduce(&w))
    }

    pub(crate) fn from_reduced_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(is_reduced(&letters));
        ReducedWord(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn inverse(&self) -> Self {
        ReducedWord(self.0.iter().rev().map(|x| x.inverse()).collect())
    }

    /// Group product: concatenation followed by free reduction.
    pub fn mul(&self, other: &ReducedWord) -> Self {
        let mut out = self.0.clone();
        for &x in &other.0 {
            push_reducing(&mut out, x);
        }
        ReducedWord(out)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        is_cyclically_reduced(self)
    }

    pub fn as_word(&self) -> Word {
        Word(self.0.clone())
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

impl From<ReducedWord> for Word {
    fn from(w: ReducedWord) -> Self {
        Word(w.0)
    }
}

pub fn is_reduced(letters: &[Letter]) -> bool {
    letters.windows(2).all(|p| p[1] != p[0].inverse())
}

fn push_reducing(stack: &mut Vec<Letter>, x: Letter) {
    if stack.last() == Some(&x.inverse()) {
        stack.pop();
    } else {
        stack.push(x);
    }
}

/// Parses the lowercase/uppercase text form. Positions in errors are 1-based.
pub fn parse_word(text: &str, alphabet: Alphabet) -> Result<Word> {
    let mut letters = Vec::with_capacity(text.len());
    for (i, c) in text.chars().enumerate() {
        if !c.is_ascii_alphabetic() {
            return Err(Error::InvalidCharacter {
                character: c,
                position: i + 1,
            });
        }
        match Letter::from_char(c, alphabet) {
            Some(letter) => letters.push(letter),
            None => {
                return Err(Error::LetterOutOfRange {
                    letter: c,
                    rank: alphabet.rank(),
                    position: i + 1,
                })
            }
        }
    }
    Ok(Word(letters))
}

/// Stack-based free reduction; linear time.
pub fn free_reduce(w: &Word) -> ReducedWord {
    let mut out = Vec::with_capacity(w.len());
    for &x in w.letters() {
        push_reducing(&mut out, x);
    }
    ReducedWord(out)
}

pub fn inverse_word(w: &ReducedWord) -> ReducedWord {
    w.inverse()
}

/// A word is cyclically reduced when its square is reduced.
pub fn is_cyclically_reduced(w: &ReducedWord) -> bool {
    match (w.first(), w.last()) {
        (Some(first), Some(last)) if w.len() > 1 => last != first.inverse(),
        _ => true,
    }
}

/// Splits `w` as `conjugator · core · conjugator⁻¹` with a cyclically reduced
/// core and a maximal conjugator.
pub fn cyclic_reduce(w: &ReducedWord) -> (ReducedWord, ReducedWord) {
    let letters = w.letters();
    let (mut lo, mut hi) = (0, letters.len());
    while hi - lo >= 2 && letters[hi - 1] == letters[lo].inverse() {
        lo += 1;
        hi -= 1;
    }
    (
        ReducedWord(letters[lo..hi].to_vec()),
        ReducedWord(letters[..lo].to_vec()),
    )
}

/// `|R_m| = 2r(2r−1)^(m−1)`, and 1 for the empty word.
pub fn count_reduced_words(m: usize, alphabet: Alphabet) -> BigUint {
    if m == 0 {
        return BigUint::one();
    }
    let r = alphabet.rank() as u64;
    BigUint::from(2 * r) * BigUint::from(2 * r - 1).pow((m - 1) as u32)
}

/// Number of nonempty reduced words of length at most `n`,
/// `r/(r−1)·((2r−1)^n − 1)`. The identity element is not counted.
pub fn count_reduced_ball(n: usize, alphabet: Alphabet) -> BigUint {
    let r = alphabet.rank() as u64;
    let power = BigUint::from(2 * r - 1).pow(n as u32);
    (power - BigUint::one()) * BigUint::from(r) / BigUint::from(r - 1)
}

/// Exact `|C_m|` by exhaustive enumeration of reduced words of length `m`.
///
/// Fails with [`Error::ResourceCap`] when `|R_m|` exceeds `budget`.
pub fn count_cyclically_reduced(m: usize, alphabet: Alphabet, budget: u64) -> Result<BigUint> {
    let total = count_reduced_words(m, alphabet);
    if total > BigUint::from(budget) {
        return Err(Error::ResourceCap(format!(
            "enumerating {total} reduced words of length {m} exceeds budget {budget}"
        )));
    }
    if m <= 1 {
        return Ok(total);
    }
    let mut count = 0u64;
    let mut word = Vec::with_capacity(m);
    for first in alphabet.letters() {
        word.clear();
        word.push(first);
        count_cyclic_extensions(&mut word, m, alphabet, &mut count);
    }
    Ok(BigUint::from(count))
}

fn count_cyclic_extensions(word: &mut Vec<Letter>, m: usize, alphabet: Alphabet, count: &mut u64) {
    let last = *word.last().expect("nonempty prefix");
    if word.len() == m {
        if last != word[0].inverse() {
            *count += 1;
        }
        return;
    }
    for x in alphabet.letters().filter(|&x| x != last.inverse()) {
        word.push(x);
        count_cyclic_extensions(word, m, alphabet, count);
        word.pop();
    }
}

/// Number of (possibly overlapping) positions where `needle` occurs in `haystack`.
pub fn count_occurrences<T: PartialEq>(haystack: &[T], needle: &[T]) -> usize {
    if needle.is_empty() || needle.len() > haystack.len() {
        return 0;
    }
    haystack.windows(needle.len()).filter(|w| *w == needle).count()
}

/// The factor-occurrence statistic `Z(u)` of `w`.
pub fn count_factor_occurrences(w: &Word, u: &Word) -> usize {
    count_occurrences(w.letters(), u.letters())
}

/// Sanity bounds on `|C_m|` for `m ≥ 2`: `2r(2r−1)^(m−2)(2r−2) ≤ |C_m| ≤ |R_m|`.
pub fn cyclically_reduced_bounds(m: usize, alphabet: Alphabet) -> (BigUint, BigUint) {
    let r = alphabet.rank() as u64;
    let lower = if m >= 2 {
        BigUint::from(2 * r) * BigUint::from(2 * r - 1).pow((m - 2) as u32) * BigUint::from(2 * r - 2)
    } else {
        BigUint::zero()
    };
    (lower, count_reduced_words(m, alphabet))
}

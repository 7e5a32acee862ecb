//! Whitehead descriptors and the positive/negative vertex criterion for
//! (strict) Whitehead minimality.
//!
//! A descriptor `(Y, v)` has `v ∈ Y`, `v̄ ∉ Y` and `2 ≤ |Y| ≤ 2r − 2`. Its
//! automorphism fixes `v` and sends every other letter `a` to `v^λ a v^ρ`,
//! with `λ = −1` iff `ā ∈ Y` and `ρ = 1` iff `a ∈ Y`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::stallings::{fold, StallingsGraph};
use crate::words::{Alphabet, Letter, LetterSet, ReducedWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WhiteheadDescriptor {
    letter: Letter,
    set: LetterSet,
}

impl WhiteheadDescriptor {
    pub fn new(set: LetterSet, letter: Letter, alphabet: Alphabet) -> Result<Self> {
        let valid = set.iter().all(|x| alphabet.contains(x))
            && set.contains(letter)
            && !set.contains(letter.inverse())
            && (2..=alphabet.size() - 2).contains(&set.len());
        if !valid {
            return Err(Error::Precondition(format!(
                "{letter}|{set} is not a Whitehead descriptor for rank {}",
                alphabet.rank()
            )));
        }
        Ok(Self { letter, set })
    }

    /// The multiplier letter `v`.
    pub fn letter(&self) -> Letter {
        self.letter
    }

    /// The subset `Y`.
    pub fn set(&self) -> LetterSet {
        self.set
    }

    /// Image of a single letter.
    pub fn apply_letter(&self, a: Letter) -> Vec<Letter> {
        let v = self.letter;
        if a == v || a == v.inverse() {
            return vec![a];
        }
        let mut out = Vec::with_capacity(3);
        if self.set.contains(a.inverse()) {
            out.push(v.inverse());
        }
        out.push(a);
        if self.set.contains(a) {
            out.push(v);
        }
        out
    }

    /// Image of a word, freely reduced.
    pub fn apply(&self, w: &ReducedWord) -> ReducedWord {
        let mut out: Vec<Letter> = Vec::with_capacity(w.len() * 2);
        for &a in w.letters() {
            for x in self.apply_letter(a) {
                if out.last() == Some(&x.inverse()) {
                    out.pop();
                } else {
                    out.push(x);
                }
            }
        }
        ReducedWord::from_reduced_unchecked(out)
    }

    /// Image of the subgroup, folded from the images of a spanning-tree basis.
    pub fn apply_to_subgroup(&self, g: &StallingsGraph) -> StallingsGraph {
        let images: Vec<ReducedWord> = g.basis().iter().map(|w| self.apply(w)).collect();
        fold(&images, g.alphabet())
    }

    fn classify(&self, incoming: LetterSet) -> VertexClass {
        let in_y = !incoming.intersection(self.set).is_empty();
        let outside_y = !incoming.difference(self.set).is_empty();
        if incoming.contains(self.letter) {
            if outside_y {
                VertexClass::Neither
            } else {
                VertexClass::Negative
            }
        } else if in_y && outside_y {
            VertexClass::Positive
        } else {
            VertexClass::Neither
        }
    }
}

impl fmt::Display for WhiteheadDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.letter, self.set)
    }
}

impl WhiteheadDescriptor {
    /// Parses the `v|{x,y,…}` form.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        let bad = || Error::Precondition(format!("malformed descriptor {text:?}, expected v|{{x,y}}"));
        let (v, y) = text.trim().split_once('|').ok_or_else(bad)?;
        let letter = single_letter(v, alphabet).ok_or_else(bad)?;
        let inner = y
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(bad)?;
        let mut set = LetterSet::empty();
        for part in inner.split(',') {
            set.insert(single_letter(part, alphabet).ok_or_else(bad)?);
        }
        Self::new(set, letter, alphabet)
    }
}

fn single_letter(text: &str, alphabet: Alphabet) -> Option<Letter> {
    let mut chars = text.trim().chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Letter::from_char(c, alphabet),
        _ => None,
    }
}

impl FromStr for WhiteheadDescriptor {
    type Err = Error;

    /// Parses with the smallest rank that covers every letter mentioned.
    fn from_str(text: &str) -> Result<Self> {
        let rank = text
            .chars()
            .filter(|c| c.is_ascii_alphabetic())
            .map(|c| c.to_ascii_lowercase() as usize - 'a' as usize + 1)
            .max()
            .unwrap_or(2)
            .max(2);
        Self::parse(text, Alphabet::new(rank)?)
    }
}

/// All descriptors, ordered by `v` then by `Y` as an increasing bitmask.
pub fn enumerate_descriptors(alphabet: Alphabet) -> Vec<WhiteheadDescriptor> {
    let size = alphabet.size();
    let mut out = Vec::new();
    for letter in alphabet.letters() {
        let must = 1u64 << letter.code();
        let forbidden = 1u64 << letter.inverse().code();
        for bits in 0..(1u64 << size) {
            if bits & must == 0 || bits & forbidden != 0 {
                continue;
            }
            let set = LetterSet::from_bits(bits);
            if (2..=size - 2).contains(&set.len()) {
                out.push(WhiteheadDescriptor { letter, set });
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum VertexClass {
    Positive,
    Negative,
    Neither,
}

fn incoming_table(g: &StallingsGraph) -> Vec<LetterSet> {
    (0..g.size()).map(|p| g.incoming_labels(p)).collect()
}

/// Vertices with an incoming label in `Y`, one outside `Y`, and none equal to `v`.
pub fn positive_set(g: &StallingsGraph, d: &WhiteheadDescriptor) -> Vec<usize> {
    (0..g.size())
        .filter(|&p| d.classify(g.incoming_labels(p)) == VertexClass::Positive)
        .collect()
}

/// Vertices with an incoming `v` and every other incoming label in `Y`.
pub fn negative_set(g: &StallingsGraph, d: &WhiteheadDescriptor) -> Vec<usize> {
    (0..g.size())
        .filter(|&p| d.classify(g.incoming_labels(p)) == VertexClass::Negative)
        .collect()
}

fn count_classes(incoming: &[LetterSet], d: &WhiteheadDescriptor) -> (usize, usize) {
    incoming
        .iter()
        .fold((0, 0), |(pos, neg), &labels| match d.classify(labels) {
            VertexClass::Positive => (pos + 1, neg),
            VertexClass::Negative => (pos, neg + 1),
            VertexClass::Neither => (pos, neg),
        })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    NotMinimal,
    MinimalNotStrict,
    StrictlyMinimal,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NotMinimal => "not_minimal",
            Verdict::MinimalNotStrict => "minimal_not_strict",
            Verdict::StrictlyMinimal => "strictly_minimal",
        }
    }

    pub fn is_minimal(self) -> bool {
        self >= Verdict::MinimalNotStrict
    }

    pub fn satisfies(self, level: MinimalityLevel) -> bool {
        match level {
            MinimalityLevel::Minimal => self.is_minimal(),
            MinimalityLevel::Strict => self == Verdict::StrictlyMinimal,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Requested level for tests and samplers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MinimalityLevel {
    Minimal,
    Strict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DescriptorCount {
    pub descriptor: WhiteheadDescriptor,
    pub positive: usize,
    pub negative: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityVerdict {
    pub cyclically_reduced: bool,
    /// Empty when the graph is not cyclically reduced.
    pub table: Vec<DescriptorCount>,
    pub verdict: Verdict,
}

impl MinimalityVerdict {
    /// The table as CSV with header `descriptor,positive,negative`.
    pub fn table_csv(&self) -> String {
        let mut out = String::from("descriptor,positive,negative\n");
        for row in &self.table {
            out.push_str(&format!(
                "\"{}\",{},{}\n",
                row.descriptor, row.positive, row.negative
            ));
        }
        out
    }
}

/// Full evaluation over every descriptor.
pub fn minimality_test(g: &StallingsGraph) -> MinimalityVerdict {
    if !g.is_cyclically_reduced() {
        return MinimalityVerdict {
            cyclically_reduced: false,
            table: Vec::new(),
            verdict: Verdict::NotMinimal,
        };
    }
    let incoming = incoming_table(g);
    let table: Vec<DescriptorCount> = enumerate_descriptors(g.alphabet())
        .into_iter()
        .map(|descriptor| {
            let (positive, negative) = count_classes(&incoming, &descriptor);
            DescriptorCount {
                descriptor,
                positive,
                negative,
            }
        })
        .collect();
    let verdict = if table.iter().all(|c| c.positive > c.negative) {
        Verdict::StrictlyMinimal
    } else if table.iter().all(|c| c.positive >= c.negative) {
        Verdict::MinimalNotStrict
    } else {
        Verdict::NotMinimal
    };
    MinimalityVerdict {
        cyclically_reduced: true,
        table,
        verdict,
    }
}

/// Short-circuiting test used by the rejection samplers.
pub fn satisfies_minimality(g: &StallingsGraph, level: MinimalityLevel) -> bool {
    if !g.is_cyclically_reduced() {
        return false;
    }
    let incoming = incoming_table(g);
    enumerate_descriptors(g.alphabet()).iter().all(|d| {
        let (pos, neg) = count_classes(&incoming, d);
        match level {
            MinimalityLevel::Minimal => pos >= neg,
            MinimalityLevel::Strict => pos > neg,
        }
    })
}

/// Both sides of the size identity `|φ(H)| − |H| = |positive| − |negative|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeDelta {
    /// Size of the cyclic core of `Γ(φ(H))` minus `|H|`.
    pub lhs: i64,
    /// `|positive| − |negative|`.
    pub rhs: i64,
    /// Size of `Γ(φ(H))` as folded, before trimming its hanging path.
    pub image_size: usize,
}

impl SizeDelta {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates the size identity on a cyclically reduced graph.
///
/// The image is compared through its cyclic core: the folded image of a
/// cyclically reduced graph is in general only a conjugate of a cyclically
/// reduced graph.
pub fn size_delta_check(g: &StallingsGraph, d: &WhiteheadDescriptor) -> Result<SizeDelta> {
    if !g.is_cyclically_reduced() {
        return Err(Error::Precondition(
            "size identity is only evaluated on cyclically reduced graphs".into(),
        ));
    }
    let image = d.apply_to_subgroup(g);
    let (core, _) = image.cyclic_core()?;
    let positive = positive_set(g, d).len() as i64;
    let negative = negative_set(g, d).len() as i64;
    Ok(SizeDelta {
        lhs: core.size() as i64 - g.size() as i64,
        rhs: positive - negative,
        image_size: image.size(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const G1: &str = "rank=2, size=4, base=1, edges = [(a,1,2), (a,2,4), (a,4,3), (b,2,3), (b,3,4), (b,4,1)]";

    fn r2() -> Alphabet {
        Alphabet::new(2).unwrap()
    }

    fn w(s: &str) -> ReducedWord {
        ReducedWord::parse(s, r2()).unwrap()
    }

    fn d(s: &str) -> WhiteheadDescriptor {
        WhiteheadDescriptor::parse(s, r2()).unwrap()
    }

    fn g1() -> StallingsGraph {
        G1.parse().unwrap()
    }

    /// Brute force over all (Y, v) pairs, independent of the bitmask walk.
    fn brute_descriptor_count(rank: usize) -> usize {
        let size = 2 * rank;
        let mut count = 0;
        for v in 0..size {
            for bits in 0u32..(1 << size) {
                let members: Vec<usize> = (0..size).filter(|i| bits >> i & 1 == 1).collect();
                if members.contains(&v)
                    && !members.contains(&(v ^ 1))
                    && members.len() >= 2
                    && members.len() <= size - 2
                {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn descriptor_counts() {
        let a2 = enumerate_descriptors(r2());
        assert_eq!(a2.len(), 8);
        assert_eq!(enumerate_descriptors(Alphabet::new(3).unwrap()).len(), 84);
        for rank in 2..=4 {
            let alphabet = Alphabet::new(rank).unwrap();
            let closed: usize = 2
                * rank
                * (1..=2 * rank - 3)
                    .map(|j| num_integer::binomial(2 * rank - 2, j))
                    .sum::<usize>();
            let all = enumerate_descriptors(alphabet);
            assert_eq!(all.len(), brute_descriptor_count(rank));
            assert_eq!(all.len(), closed);
            for desc in &all {
                assert!(WhiteheadDescriptor::new(desc.set(), desc.letter(), alphabet).is_ok());
            }
        }
    }

    #[test]
    fn descriptor_text_form() {
        let desc = d("A|{A,b}");
        assert_eq!(desc.to_string(), "A|{A,b}");
        assert_eq!("A|{b,A}".parse::<WhiteheadDescriptor>().unwrap(), desc);
        assert!(WhiteheadDescriptor::parse("A|{a,A}", r2()).is_err());
        assert!(WhiteheadDescriptor::parse("A|{A,b,B}", r2()).is_err());
        assert!(WhiteheadDescriptor::parse("A{A,b}", r2()).is_err());
    }

    #[test]
    fn g1_classification() {
        let g = g1();
        let desc = d("A|{A,b}");
        assert_eq!(positive_set(&g, &desc), vec![2]);
        assert_eq!(negative_set(&g, &desc), vec![0]);
        assert!(positive_set(&StallingsGraph::trivial(r2()), &desc).is_empty());
    }

    #[test]
    fn single_loop_negative_set() {
        let g = fold(&[w("a")], r2());
        assert!(negative_set(&g, &d("a|{a,b}")).is_empty());
    }

    #[test]
    fn whitehead_word_images() {
        let desc = d("A|{A,b}");
        assert_eq!(desc.apply(&w("a")).to_string(), "a");
        assert_eq!(desc.apply(&w("b")).to_string(), "bA");
        assert_eq!(desc.apply(&w("ab")).to_string(), "abA");
        let x = w("aBBabA");
        assert_eq!(desc.apply(&x.inverse()), desc.apply(&x).inverse());
    }

    #[test]
    fn minimality_examples() {
        let ab = fold(&[w("ab")], r2());
        let verdict = minimality_test(&ab);
        assert_eq!(verdict.verdict, Verdict::NotMinimal);
        let row = verdict
            .table
            .iter()
            .find(|c| c.descriptor == d("b|{A,b}"))
            .unwrap();
        assert_eq!((row.positive, row.negative), (0, 1));

        let verdict = minimality_test(&g1());
        assert_ne!(verdict.verdict, Verdict::StrictlyMinimal);
        let row = verdict
            .table
            .iter()
            .find(|c| c.descriptor == d("A|{A,b}"))
            .unwrap();
        assert_eq!((row.positive, row.negative), (1, 1));

        let verdict = minimality_test(&fold(&[w("abA")], r2()));
        assert_eq!(verdict.verdict, Verdict::NotMinimal);
        assert!(!verdict.cyclically_reduced && verdict.table.is_empty());

        let verdict = minimality_test(&fold(&[w("a")], r2()));
        assert_eq!(verdict.table.len(), 8);
        assert!(verdict.table.iter().all(|c| c.positive >= c.negative));
        assert!(verdict.verdict.is_minimal());
    }

    #[test]
    fn fast_test_matches_full_test() {
        for gens in [
            vec!["ab"],
            vec!["a"],
            vec!["aab", "abAb", "abbb"],
            vec!["aabbAB", "baBaab"],
        ] {
            let gens: Vec<_> = gens.into_iter().map(w).collect();
            let g = fold(&gens, r2());
            let full = minimality_test(&g).verdict;
            assert_eq!(
                satisfies_minimality(&g, MinimalityLevel::Minimal),
                full.is_minimal()
            );
            assert_eq!(
                satisfies_minimality(&g, MinimalityLevel::Strict),
                full == Verdict::StrictlyMinimal
            );
        }
    }

    #[test]
    fn subgroup_images() {
        let a_loop = fold(&[w("a")], r2());
        assert_eq!(d("a|{a,b}").apply_to_subgroup(&a_loop), a_loop);

        let ab = fold(&[w("ab")], r2());
        let desc = d("b|{A,b}");
        // a ↦ Ba, b fixed, so ab ↦ Bab: a conjugate of the a-loop.
        assert_eq!(desc.apply(&w("ab")).to_string(), "Bab");
        let image = desc.apply_to_subgroup(&ab);
        let (core, conj) = image.cyclic_core().unwrap();
        assert_eq!(core.size(), 1);
        assert_eq!(conj.to_string(), "B");
    }

    #[test]
    fn size_delta_examples() {
        let delta = size_delta_check(&g1(), &d("A|{A,b}")).unwrap();
        assert_eq!((delta.lhs, delta.rhs), (0, 0));
        let delta = size_delta_check(&fold(&[w("ab")], r2()), &d("b|{A,b}")).unwrap();
        assert_eq!((delta.lhs, delta.rhs), (-1, -1));
        assert!(size_delta_check(&fold(&[w("abA")], r2()), &d("b|{A,b}")).is_err());
    }
}

use super::*;
use crate::words::{Alphabet, Letter, ReducedWord};

const G1: &str = "rank=2, size=4, base=1, edges = [(a,1,2), (a,2,4), (a,4,3), (b,2,3), (b,3,4), (b,4,1)]";

fn r2() -> Alphabet {
    Alphabet::new(2).unwrap()
}

fn g1() -> StallingsGraph {
    G1.parse().unwrap()
}

fn w(s: &str) -> ReducedWord {
    ReducedWord::parse(s, r2()).unwrap()
}

fn fold_strs(gens: &[&str]) -> StallingsGraph {
    let gens: Vec<_> = gens.iter().map(|s| w(s)).collect();
    fold(&gens, r2())
}

const A: Letter = Letter::positive(0);
const B: Letter = Letter::positive(1);

#[test]
fn document_round_trip() {
    assert_eq!(g1().to_string(), G1);
}

#[test]
fn transitions_on_g1() {
    let g = g1();
    assert_eq!(g.transition(0, A), Some(1));
    assert_eq!(g.transition(2, A.inverse()), Some(3));
    assert_eq!(g.transition(0, B), None);
}

#[test]
fn incoming_labels_on_g1() {
    let g = g1();
    assert_eq!(g.incoming_labels(0).to_string(), "{A,b}");
    assert_eq!(g.incoming_labels(2).to_string(), "{a,b,B}");
    assert!(StallingsGraph::trivial(r2()).incoming_labels(0).is_empty());
}

#[test]
fn fold_g1_generators() {
    let g = fold_strs(&["aab", "abAb", "abbb"]);
    assert_eq!(g.size(), 4);
    assert!(g.is_isomorphic(&g1()));
    assert!(g.is_cyclically_reduced());
}

#[test]
fn fold_small_examples() {
    let g = fold_strs(&["a"]);
    assert_eq!(g.size(), 1);
    assert_eq!(g.transition(0, A), Some(0));

    let g = fold_strs(&["ab", "a"]);
    assert_eq!(g.size(), 1);
    assert_eq!(g.edge_count(), 2);

    let g = fold_strs(&["", ""]);
    assert_eq!(g, StallingsGraph::trivial(r2()));
}

#[test]
fn membership_examples() {
    let g = g1();
    assert!(g.membership(&w("aaBAb")));
    assert!(!g.membership(&w("ab")));
    assert_eq!(g.read(0, w("ab").letters()), Some(2));
    assert!(g.membership(&w("")));
    assert!(StallingsGraph::trivial(r2()).membership(&w("")));
}

#[test]
fn valency_examples() {
    let g = g1();
    assert_eq!(g.valency(0), 2);
    assert_eq!(g.valency(3), 4);
    assert_eq!(fold_strs(&["a"]).valency(0), 2);
}

#[test]
fn cyclically_reduced_examples() {
    assert!(g1().is_cyclically_reduced());
    let g = fold_strs(&["abA"]);
    assert_eq!(g.size(), 2);
    assert_eq!(g.valency(0), 1);
    assert!(!g.is_cyclically_reduced());
    assert!(!StallingsGraph::trivial(r2()).is_cyclically_reduced());
}

#[test]
fn cyclic_core_examples() {
    let (core, conj) = fold_strs(&["abA"]).cyclic_core().unwrap();
    assert!(core.is_isomorphic(&fold_strs(&["b"])));
    assert_eq!(conj.to_string(), "a");

    let (core, conj) = g1().cyclic_core().unwrap();
    assert_eq!(core, g1().canonical());
    assert!(conj.is_empty());

    // aabAA is conjugate to its cyclic reduction b.
    let (core, conj) = fold_strs(&["aabAA"]).cyclic_core().unwrap();
    assert_eq!(core.size(), 1);
    assert!(core.is_isomorphic(&fold_strs(&["b"])));
    assert_eq!(conj.to_string(), "aa");

    assert_eq!(
        StallingsGraph::trivial(r2()).cyclic_core(),
        Err(Error::TrivialCore)
    );
}

#[test]
fn basis_examples() {
    assert_eq!(fold_strs(&["a"]).basis(), vec![w("a")]);
    assert!(StallingsGraph::trivial(r2()).basis().is_empty());

    let basis = g1().basis();
    assert_eq!(basis.len(), 3);
    assert!(fold(&basis, r2()).is_isomorphic(&g1()));
}

#[test]
fn isomorphism_examples() {
    let g = g1();
    assert!(g.is_isomorphic(&g));
    let swapped = g.permute_vertices(&[0, 1, 3, 2]).unwrap();
    assert_ne!(swapped, g);
    assert!(swapped.is_isomorphic(&g));
    assert!(!fold_strs(&["a"]).is_isomorphic(&fold_strs(&["b"])));
}

#[test]
fn cyclic_word_size_equals_length() {
    for s in ["ab", "aabAbb", "abAB", "aaaa", "abbaBBAb"] {
        let word = w(s);
        assert!(word.is_cyclically_reduced());
        assert_eq!(fold(&[word], r2()).size(), s.len(), "{s}");
    }
}

#[test]
fn document_rejects_invalid_graphs() {
    let err = "rank=2, size=2, base=1, edges = [(a,1,2)]"
        .parse::<StallingsGraph>()
        .unwrap_err();
    assert!(err.to_string().contains("valency"), "{err}");
    let err = "rank=2, size=3, base=1, edges = [(a,1,1), (a,2,3), (a,3,2)]"
        .parse::<StallingsGraph>()
        .unwrap_err();
    assert!(err.to_string().contains("connected"), "{err}");
    let err = "rank=2, size=2, base=1, edges = [(a,1,2), (a,1,1)]"
        .parse::<StallingsGraph>()
        .unwrap_err();
    assert!(err.to_string().contains("same label"), "{err}");
    assert!("rank=2, size=1, base=1, edges = [(c,1,1)]"
        .parse::<StallingsGraph>()
        .is_err());
    assert!("rank=2; size=1".parse::<StallingsGraph>().is_err());
    assert_eq!(
        "rank=2, size=1, base=1, edges = []"
            .parse::<StallingsGraph>()
            .unwrap(),
        StallingsGraph::trivial(r2())
    );
}

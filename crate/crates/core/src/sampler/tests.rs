use super::*;
use crate::stallings::{check_stallings, PartialInjection};
use crate::whitehead::{minimality_test, MinimalityLevel};
use crate::words::Alphabet;

fn r2() -> Alphabet {
    Alphabet::new(2).unwrap()
}

fn all_injections(n: usize) -> Vec<PartialInjection> {
    let mut out = Vec::new();
    for mut code in 0..(n + 1).pow(n as u32) {
        let mut pairs = Vec::new();
        for i in 0..n {
            let target = code % (n + 1);
            code /= n + 1;
            if target < n {
                pairs.push((i, target));
            }
        }
        if let Ok(f) = PartialInjection::from_pairs(n, pairs) {
            out.push(f);
        }
    }
    out
}

#[test]
fn reduced_words_are_reduced() {
    let mut rng = RngStream::new(1, 0).rng();
    assert!(random_reduced_word(0, r2(), &mut rng).is_empty());
    for n in [1, 2, 7, 50] {
        for _ in 0..200 {
            let w = random_reduced_word(n, r2(), &mut rng);
            assert_eq!(w.len(), n);
            assert!(crate::words::is_reduced(w.letters()));
        }
    }
}

#[test]
fn ball_length_distribution() {
    let mut rng = RngStream::new(2, 0).rng();
    for _ in 0..100 {
        assert_eq!(random_reduced_word_ball(1, r2(), &mut rng).len(), 1);
    }
    // n = 2, r = 2: lengths 1 and 2 have weights 4 and 12.
    let trials = 10_000;
    let short = (0..trials)
        .filter(|_| random_ball_length(2, r2(), &mut rng) == 1)
        .count() as f64;
    let p = 0.25;
    let sigma = (trials as f64 * p * (1.0 - p)).sqrt();
    assert!((short - p * trials as f64).abs() < 3.0 * sigma, "short = {short}");
}

#[test]
fn top_length_probability_bound() {
    use num_bigint::BigUint;
    for rank in [2, 3] {
        let alphabet = Alphabet::new(rank).unwrap();
        for n in 1..20 {
            let top = crate::words::count_reduced_words(n, alphabet);
            let ball = crate::words::count_reduced_ball(n, alphabet);
            // |R_n| (2r − 1) ≥ |R_≤n| (2r − 2)
            assert!(top * BigUint::from(2 * rank - 1) >= ball * BigUint::from(2 * rank - 2));
        }
    }
}

#[test]
fn cyclically_reduced_words() {
    let mut rng = RngStream::new(3, 0).rng();
    let (w, rejected) = random_cyclically_reduced_word(WordLength::Exact(1), r2(), &mut rng).unwrap();
    assert_eq!((w.len(), rejected), (1, 0));
    for _ in 0..500 {
        let (w, _) = random_cyclically_reduced_word(WordLength::AtMost(9), r2(), &mut rng).unwrap();
        assert!(w.is_cyclically_reduced());
        assert!((1..=9).contains(&w.len()));
    }
}

#[test]
fn sampled_graphs_are_valid() {
    let mut rng = RngStream::new(4, 0).rng();
    for n in 1..=12 {
        for flag in [false, true] {
            let (g, _) = random_stallings_graph(n, r2(), flag, &mut rng).unwrap();
            assert_eq!(g.size(), n);
            assert_eq!(check_stallings(r2(), g.maps()), Ok(()));
            if flag {
                assert!(g.is_cyclically_reduced());
            }
        }
    }
    assert!(random_stallings_graph(0, r2(), false, &mut rng).is_err());
}

#[test]
fn acceptance_rate_matches_enumeration_at_size_two() {
    let injections = all_injections(2);
    assert_eq!(injections.len(), 7);
    let mut valid = 0usize;
    let mut cyclic = 0usize;
    for f in &injections {
        for g in &injections {
            let maps = vec![f.clone(), g.clone()];
            if check_stallings(r2(), &maps).is_ok() {
                valid += 1;
                let graph = crate::stallings::StallingsGraph::from_maps(r2(), maps).unwrap();
                if graph.is_cyclically_reduced() {
                    cyclic += 1;
                }
            }
        }
    }
    let trials = 20_000u64;
    let mut rng = RngStream::new(5, 0).rng();
    let mut draws = 0u64;
    for _ in 0..trials {
        let (_, rejected) = random_stallings_graph(2, r2(), true, &mut rng).unwrap();
        draws += rejected + 1;
    }
    let p = cyclic as f64 / 49.0;
    let empirical = trials as f64 / draws as f64;
    // Geometric draws: the acceptance estimate has relative error about sqrt((1-p)/trials).
    let tolerance = 4.0 * ((1.0 - p) / trials as f64).sqrt() * p;
    assert!(
        (empirical - p).abs() < tolerance,
        "p = {p}, empirical = {empirical}"
    );
    assert!(valid >= cyclic && cyclic > 0);
}

#[test]
fn word_based_subgroups() {
    let mut rng = RngStream::new(6, 0).rng();
    let (words, g) = random_subgroup_word_based(1, 1, r2(), false, &mut rng).unwrap();
    assert_eq!(words.len(), 1);
    assert_eq!(words[0].len(), 1);
    assert_eq!(g.size(), 1);
    assert_eq!(g.edge_count(), 1);
    for _ in 0..50 {
        let (words, g) = random_subgroup_word_based(3, 30, r2(), true, &mut rng).unwrap();
        assert!(words.iter().all(|w| w.is_cyclically_reduced()));
        assert_eq!(check_stallings(r2(), g.maps()), Ok(()));
        assert!(words.iter().all(|w| g.membership(w)));
    }
    assert!(random_subgroup_word_based(0, 3, r2(), false, &mut rng).is_err());
}

#[test]
fn minimal_samplers_meet_requested_level() {
    for (level, distribution, n) in [
        (MinimalityLevel::Minimal, Distribution::Graph, 30),
        (MinimalityLevel::Strict, Distribution::Graph, 30),
        (MinimalityLevel::Strict, Distribution::Word { k: 2 }, 60),
    ] {
        for i in 0..10 {
            let mut rng = RngStream::new(7, i).rng();
            let sample = sample_whitehead_minimal(n, r2(), level, distribution, &mut rng).unwrap();
            assert!(minimality_test(&sample.graph).verdict.satisfies(level));
            assert!(sample.iterations >= 1);
        }
    }
}

#[test]
fn samplers_reproduce_from_stream() {
    let draw = |stream: RngStream| {
        let mut rng = stream.rng();
        let f = random_partial_injection(40, &mut rng);
        let w = random_reduced_word_ball(40, r2(), &mut rng);
        let (g, _) = random_stallings_graph(15, r2(), true, &mut rng).unwrap();
        (f, w, g)
    };
    assert_eq!(draw(RngStream::new(8, 1)), draw(RngStream::new(8, 1)));
    assert_ne!(draw(RngStream::new(8, 1)), draw(RngStream::new(8, 2)));
}

#[test]
fn injection_sampling_capped() {
    let mut rng = RngStream::new(9, 0).rng();
    // A single draw can never produce a cyclically reduced graph on 3 points
    // with cap 0.
    assert!(matches!(
        random_stallings_graph_capped(3, r2(), true, 0, &mut rng),
        Err(crate::Error::ResourceCap(_))
    ));
}

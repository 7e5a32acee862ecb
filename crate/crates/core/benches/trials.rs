use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use freegroup::parallel::{map_trials, map_trials_sequential};
use freegroup::sampler::{
    injection_stats, random_partial_injection, sample_whitehead_minimal, Distribution, RngStream,
};
use freegroup::whitehead::MinimalityLevel;
use freegroup::Alphabet;

fn sequence_count(n: usize, trial: u64) -> usize {
    let f = random_partial_injection(n, &mut RngStream::new(1, trial).rng());
    injection_stats(&f).sequence_count
}

fn minimal_graph(n: usize, trial: u64) -> u64 {
    let alphabet = Alphabet::new(2).unwrap();
    let mut rng = RngStream::new(1, trial).rng();
    sample_whitehead_minimal(
        n,
        alphabet,
        MinimalityLevel::Strict,
        Distribution::Graph,
        &mut rng,
    )
    .unwrap()
    .iterations
}

fn injection_trials(c: &mut Criterion) {
    let mut group = c.benchmark_group("sequence_trials");
    for n in [1_000usize, 10_000] {
        group.bench_with_input(BenchmarkId::new("parallel", n), &n, |b, &n| {
            b.iter(|| map_trials(256, |i| sequence_count(black_box(n), i)))
        });
        group.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, &n| {
            b.iter(|| map_trials_sequential(256, |i| sequence_count(black_box(n), i)))
        });
    }
    group.finish();
}

fn rejection_trials(c: &mut Criterion) {
    let mut group = c.benchmark_group("minimal_graph_trials");
    for n in [100usize, 400] {
        group.bench_with_input(BenchmarkId::new("parallel", n), &n, |b, &n| {
            b.iter(|| map_trials(128, |i| minimal_graph(black_box(n), i)))
        });
        group.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, &n| {
            b.iter(|| map_trials_sequential(128, |i| minimal_graph(black_box(n), i)))
        });
    }
    group.finish();
}

criterion_group!(benches, injection_trials, rejection_trials);
criterion_main!(benches);

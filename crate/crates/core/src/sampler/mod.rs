//! Random generation under the graph-based and word-based distributions.

mod graph;
mod injection;
mod minimal;
mod rng;
mod word;

pub use graph::{random_stallings_graph, random_stallings_graph_capped, DEFAULT_ITERATION_CAP};
pub use injection::{
    count_partial_injections, decompose, injection_sampler, injection_stats, random_partial_injection,
    Decomposition, InjectionSampler, InjectionStats,
};
pub use minimal::{sample_whitehead_minimal, sample_whitehead_minimal_capped, Distribution, MinimalSample};
pub use rng::{RngStream, TrialRng};
pub use word::{
    random_ball_length, random_cyclically_reduced_word, random_reduced_word, random_reduced_word_ball,
    random_subgroup_word_based, random_word, WordLength,
};

#[cfg(test)]
mod tests;

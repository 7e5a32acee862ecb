//! Finitely generated subgroups of free groups: Stallings graphs, Whitehead
//! minimality, exact counting and random generation.

pub mod cli;
pub mod error;
pub mod experiments;
pub mod parallel;
pub mod sampler;
pub mod stallings;
pub mod whitehead;
pub mod words;

pub use error::{Error, Result};
pub use stallings::{fold, PartialInjection, StallingsGraph, BASE};
pub use words::{Alphabet, Letter, LetterSet, ReducedWord, Word};

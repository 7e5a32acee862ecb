use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 2 (got {0})")]
    InvalidRank(usize),

    #[error("rank {0} exceeds the 26 letters available in the text format")]
    RankTooLarge(usize),

    #[error("letter {letter} exceeds rank {rank} at position {position}")]
    LetterOutOfRange {
        letter: char,
        rank: usize,
        position: usize,
    },

    #[error("invalid character {character:?} at position {position}")]
    InvalidCharacter { character: char, position: usize },

    #[error("malformed graph document: {0}")]
    MalformedDocument(String),

    #[error("invalid Stallings graph: {0}")]
    InvalidGraph(String),

    #[error("core undefined for trivial subgroup")]
    TrivialCore,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("invariant violated at n={n}, seed {seed}, trial {trial}: {message}")]
    Invariant {
        n: usize,
        seed: u64,
        trial: u64,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,

    #[error("word of length {len} is too short (need at least {min})")]
    TooShort { len: usize, min: usize },

    /// The scan met `y[j] < y[i]` at `position`, which cannot happen on a Lyndon word.
    #[error("not a Lyndon word (order break at position {position})")]
    NotLyndon { position: usize },

    #[error("not a permutation of 0..{len}")]
    NotAPermutation { len: usize },

    #[error("length mismatch: permutation of length {perm_len} for word length {word_len}")]
    LengthMismatch { perm_len: usize, word_len: usize },

    #[error("permutation is not the prefix standard permutation of a Lyndon word")]
    NotAPsp,

    #[error("alphabet exhausted: no letter after 'z'")]
    AlphabetExhausted,

    #[error("invalid symbol {0:?}: words are lowercase ASCII a-z")]
    InvalidSymbol(char),
}

pub type Result<T> = std::result::Result<T, Error>;

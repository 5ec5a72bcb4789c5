use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be at least 1 and at most {max}, got {q}")]
    AlphabetSize { q: usize, max: usize },

    #[error("invalid symbol character {ch:?} at position {pos} in {text:?}")]
    BadSymbolChar { text: String, pos: usize, ch: char },

    #[error("symbol {symbol} out of range for alphabet of size {q}")]
    SymbolOutOfRange { symbol: u8, q: usize },

    #[error("permutation is not a bijection on 0..{q}")]
    NotAPermutation { q: usize },

    #[error("empty word where a non-empty one is required")]
    EmptyWord,

    #[error("minimum length {min_len} out of range 1..={len}")]
    MinLenOutOfRange { min_len: usize, len: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("edge endpoint {word} has length {len}, expected {expected}")]
    VertexLength { word: String, len: usize, expected: usize },

    #[error("self-loop on {0}")]
    SelfLoop(String),

    #[error("edge endpoints must differ")]
    IdenticalEndpoints,

    #[error("graph parameters differ: (q={q1}, m={m1}) vs (q={q2}, m={m2})")]
    ParameterMismatch { q1: usize, m1: usize, q2: usize, m2: usize },

    #[error("code words have mixed lengths ({first} and {other})")]
    MixedLengths { first: usize, other: usize },

    #[error("duplicate word {0}")]
    DuplicateWord(String),

    #[error("generator set is empty")]
    NoGenerators,

    #[error("empty generator")]
    EmptyGenerator,

    #[error("single generator length {0}: characteristic root is 1 and rate is 0")]
    DegenerateRate(usize),

    #[error("count overflow at length {0}")]
    CountOverflow(usize),

    #[error("coordinate {coord} out of range for length {n}")]
    CoordOutOfRange { coord: usize, n: usize },

    #[error("word {0} is not in the code")]
    NotInCode(String),

    #[error("replacement {replacement} differs from {original} outside the coordinate set")]
    ChangedOutsideSet { original: String, replacement: String },

    #[error("coordinate set is not admissible: {0}")]
    Inadmissible(String),

    #[error("surgery produced a set that is not a code: {0}")]
    SurgeryBrokeCode(String),

    #[error("search space q^n = {q}^{n} is too large")]
    SearchTooLarge { q: usize, n: usize },

    #[error("missing table entry for length {0}")]
    MissingIndex(usize),

    #[error("{0}")]
    Parse(String),
}

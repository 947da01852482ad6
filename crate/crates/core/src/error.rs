use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid bit character {ch:?} at offset {offset}")]
    InvalidBit { ch: char, offset: usize },

    #[error("word length must be at least {min}, got {len}")]
    TooShort { len: usize, min: usize },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("syndrome order must be at least 1")]
    ZeroOrder,

    #[error("syndrome of order {order} overflows 128 bits at length {len}")]
    SyndromeOverflow { order: u32, len: usize },

    #[error("breakpoints must be strictly ascending within [1, {len}]: {breakpoints:?}")]
    BadBreakpoints { breakpoints: Vec<usize>, len: usize },

    #[error("position {pos} outside [1, {len}]")]
    PositionOutOfRange { pos: usize, len: usize },

    #[error("substitution position equals deletion position {pos}")]
    SubstitutionAtDeletion { pos: usize },

    #[error("recovered weight {weight} outside [0, {len}]")]
    WeightOutOfRange { weight: i64, len: usize },

    #[error("residue {value} not below modulus {modulus} for {name}")]
    ResidueOutOfRange { name: &'static str, value: u64, modulus: u64 },

    #[error("length {len} exceeds the {what} ceiling of {ceiling}")]
    CeilingExceeded { what: &'static str, len: usize, ceiling: usize },

    #[error("empty code has no redundancy")]
    EmptyCode,

    #[error("list size {count} exceeds 2 for received word {word}")]
    ListBoundViolated { word: String, count: usize },

    #[error("lemma order m must be 1 or 2, got {0}")]
    UnsupportedOrder(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

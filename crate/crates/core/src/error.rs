use thiserror::Error;

/// Errors raised by the library. Every variant describes a violated
/// precondition; none of them are transient.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("glyph {glyph:?} is not in the {alphabet} alphabet")]
    AlphabetMismatch { glyph: char, alphabet: &'static str },

    #[error("an axiom must be a nonempty word")]
    EmptyAxiom,

    #[error("symbol {0} appears more than once in the count order")]
    DuplicateSymbol(char),

    #[error("production of {from} emits {emitted}, which is outside the count order")]
    NotClosed { from: char, emitted: char },

    #[error("materializing iterate {n} exceeds the word cap {cap}")]
    WordCapExceeded { n: usize, cap: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("denominator vanishes at the origin")]
    PoleAtOrigin,

    #[error("Taylor coefficient {index} is not an integer")]
    NonIntegralCoefficient { index: usize },

    #[error("index {n} lies below the first stored index {start}")]
    BelowStart { n: u64, start: u64 },

    #[error("recurrence of order {order} needs at least {order} initial terms, got {given}")]
    TooFewInitialTerms { order: usize, given: usize },

    #[error("edge {0:?} of the curve is repeated")]
    DuplicateCell((i64, i64)),

    #[error("polyomino is not simply connected")]
    Hole,

    #[error("polyomino is empty or not edge-connected")]
    Disconnected,

    #[error("geometry error: {0}")]
    Geometry(String),

    #[error("boundary cycle of length {0} cannot be split into two-step elements")]
    Framing(usize),

    #[error("first boundary element starts on an odd vertex")]
    Convention,

    #[error("{what} length {n} is outside the supported range {min}..={max}")]
    Cap {
        what: &'static str,
        n: usize,
        min: usize,
        max: usize,
    },

    #[error("{0} is not a member of the set")]
    NotMember(String),

    #[error("row {0} can never occur as a last row")]
    ImpossibleRow(String),

    #[error("aligned lists disagree: boundary {boundary}, strings {strings}, arrays {arrays}")]
    Alignment {
        boundary: usize,
        strings: usize,
        arrays: usize,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

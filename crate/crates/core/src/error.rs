use thiserror::Error;

use crate::algebra::{BiquandleFailure, BirackFailure, Level, SwitchFailure};

/// Errors raised while building groups, operation tables and biquandles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("invalid cycle notation {text:?}: {reason}")]
    BadCycleNotation { text: String, reason: String },

    #[error("group axiom violated: {0}")]
    GroupAxiom(String),

    #[error("symmetric group degree {0} out of range 1..=7")]
    DegreeOutOfRange(usize),

    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),

    #[error("{name} not invertible mod {modulus} (gcd {gcd})")]
    NotInvertible {
        name: &'static str,
        modulus: u64,
        gcd: u64,
    },

    #[error("not a switch: {0}")]
    NotASwitch(SwitchFailure),

    #[error("rack axiom violated: {0}")]
    RackAxiom(String),

    #[error("operation needs level {required:?}, biquandle is only {actual:?}")]
    LevelTooLow { required: Level, actual: Level },

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl From<BirackFailure> for AlgebraError {
    fn from(f: BirackFailure) -> Self {
        AlgebraError::Internal(format!("birack check failed: {f}"))
    }
}

impl From<BiquandleFailure> for AlgebraError {
    fn from(f: BiquandleFailure) -> Self {
        AlgebraError::Internal(format!("biquandle check failed: {f}"))
    }
}

/// A biquandle table file could not be read.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct TableFileError {
    pub line: usize,
    pub message: String,
}

/// Errors from parsing or validating a signed Gauss code. Positions are
/// 1-based token (pass) positions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaussError {
    #[error("bad token {token:?} at position {position}")]
    BadToken { position: usize, token: String },

    #[error("crossing {crossing} appears only once (position {position})")]
    Unpaired { crossing: u32, position: usize },

    #[error("crossing {crossing} appears more than twice (position {position})")]
    TooManyPasses { crossing: u32, position: usize },

    #[error("crossing {crossing} has two passes with the same role (position {position})")]
    SameRole { crossing: u32, position: usize },

    #[error("sign mismatch for crossing {crossing} at token {position}")]
    SignMismatch { crossing: u32, position: usize },
}

/// Errors from the Reidemeister move generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("position {position} out of range for a code of {len} passes")]
    OutOfRange { position: usize, len: usize },

    #[error("no R1 kink at position {0}")]
    NotAKink(usize),

    #[error("no R2 pair at positions {0} and {1}")]
    NotAnR2Pair(usize, usize),

    #[error("crossing id {0} is already used")]
    IdInUse(u32),
}

/// Errors from coloring enumeration and longitude evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("biquandle is only a {0:?}, colorings need at least a birack")]
    NotBirack(Level),

    #[error("biquandle is only a {0:?}, longitude families need a biquandle")]
    NotBiquandle(Level),

    #[error("coloring has {got} segment colors, diagram has {expected} segments")]
    LengthMismatch { expected: usize, got: usize },

    #[error("color {value} out of range at segment {segment}")]
    OutOfRange { segment: usize, value: usize },

    #[error("coloring equations fail at crossing {crossing}")]
    Violation { crossing: u32 },

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

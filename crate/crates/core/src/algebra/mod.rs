//! Finite groups, permutations, switches, biracks and biquandles.

mod biquandle;
mod constructors;
mod group;
mod permutation;
pub mod table_io;

pub use biquandle::{
    BiquandleAxiom, BiquandleFailure, BirackFailure, FiniteBiquandle, Level, RowInverses, RowOp,
    SwitchFailure, SwitchTables, VerificationReport,
};
pub use constructors::{
    alexander_biquandle, alexander_tables, rack_switch, verify_rack, wada_biquandle, wada_tables,
};
pub use group::{FiniteGroup, MAX_SYMMETRIC_DEGREE};
pub use permutation::Permutation;

//! Finite biquandles, biquandle colorings of long virtual knot diagrams
//! given as signed Gauss codes, and the colored biquandle longitude
//! invariant built from them.
//!
//! The pipeline is: build a [`FiniteBiquandle`] (Wada, Alexander, rack, or
//! a table file), parse a [`LongGaussCode`], enumerate its colorings with
//! [`coloring::enumerate_colorings`], and read off longitude maps and formal
//! sums with the [`longitude`] module.

pub mod algebra;
pub mod coloring;
pub mod diagram;
pub mod error;
pub mod harness;
pub mod longitude;

pub use algebra::{FiniteBiquandle, FiniteGroup, Level, Permutation, SwitchTables};
pub use coloring::Coloring;
pub use diagram::{LongGaussCode, Pass, Role, Sign};
pub use error::{AlgebraError, ColoringError, GaussError, MoveError, TableFileError};
pub use longitude::{InvariantFamily, InvariantSum, LongitudeMap, LongitudeWord};

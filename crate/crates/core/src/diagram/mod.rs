//! Long virtual knot diagrams as signed Gauss codes, and Reidemeister moves
//! acting on them.

mod gauss;
pub mod moves;

pub use gauss::{CrossingIncidence, Incidence, LongGaussCode, Pass, Role, Sign};
pub use moves::{
    r1_delete, r1_insert, r1_insert_with_id, r1_sites, r2_delete, r2_insert, r2_insert_with_ids,
    r2_sites, r3_fixture_pairs, Kink, R2Variant, StrandDirection,
};

/// The long virtual trefoil, `U1+ U2+ O1+ O2+`.
pub fn long_virtual_trefoil() -> LongGaussCode {
    "U1+ U2+ O1+ O2+".parse().expect("valid code")
}

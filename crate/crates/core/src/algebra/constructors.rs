//! Wada, Alexander and rack switches.

use num_integer::Integer;

use super::biquandle::{FiniteBiquandle, Level, SwitchTables};
use super::group::FiniteGroup;
use crate::error::AlgebraError;

/// Unverified Wada tables on a group: `down(h, g) = g·h⁻¹·g⁻¹`,
/// `up(g, h) = g·h²`.
pub fn wada_tables(group: &FiniteGroup) -> SwitchTables {
    let g = group;
    SwitchTables::from_fn(
        g.order(),
        |a, b| g.mul(a, g.mul(b, b)),
        |h, k| g.mul(g.mul(k, g.inv(h)), g.inv(k)),
    )
    .expect("group products stay in range")
}

/// The Wada biquandle of a finite group, named after its elements.
pub fn wada_biquandle(group: &FiniteGroup) -> Result<FiniteBiquandle, AlgebraError> {
    FiniteBiquandle::with_level(wada_tables(group), Level::Biquandle)
        .map_err(|e| AlgebraError::Internal(format!("Wada switch failed verification: {e}")))?
        .with_names(group.names().to_vec())
}

/// Unverified Alexander tables on Z/n: `down(b, a) = μb`,
/// `up(a, b) = λa + (1 − μλ)b`.
pub fn alexander_tables(modulus: u64, lambda: i64, mu: i64) -> Result<SwitchTables, AlgebraError> {
    if modulus < 2 {
        return Err(AlgebraError::BadModulus(modulus));
    }
    let m = modulus as i128;
    let l = (lambda as i128).rem_euclid(m);
    let u = (mu as i128).rem_euclid(m);
    let k = (1 - u * l).rem_euclid(m);
    SwitchTables::from_fn(
        modulus as usize,
        |a, b| ((l * a as i128 + k * b as i128) % m) as usize,
        |b, _| ((u * b as i128) % m) as usize,
    )
}

/// The Alexander biquandle on Z/n. `lambda` and `mu` must be units mod n.
pub fn alexander_biquandle(
    modulus: u64,
    lambda: i64,
    mu: i64,
) -> Result<FiniteBiquandle, AlgebraError> {
    if modulus < 2 {
        return Err(AlgebraError::BadModulus(modulus));
    }
    for (name, value) in [("lambda", lambda), ("mu", mu)] {
        let residue = value.rem_euclid(modulus as i64) as u64;
        let gcd = residue.gcd(&modulus);
        if gcd != 1 {
            return Err(AlgebraError::NotInvertible { name, modulus, gcd });
        }
    }
    let tables = alexander_tables(modulus, lambda, mu)?;
    FiniteBiquandle::with_level(tables, Level::Biquandle)
        .map_err(|e| AlgebraError::Internal(format!("Alexander switch failed verification: {e}")))
}

/// Checks the rack axioms for `rack[a][b] = a * b`: every right action
/// `x ↦ x * b` is a bijection and `(a * b) * c = (a * c) * (b * c)`.
pub fn verify_rack(rack: &[Vec<usize>]) -> Result<(), AlgebraError> {
    let n = rack.len();
    for (a, row) in rack.iter().enumerate() {
        if row.len() != n {
            return Err(AlgebraError::MalformedTable(format!(
                "rack row {a} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some(b) = row.iter().position(|&x| x >= n) {
            return Err(AlgebraError::MalformedTable(format!(
                "rack entry ({a},{b}) = {} out of range",
                row[b]
            )));
        }
    }
    for b in 0..n {
        let mut hit = vec![false; n];
        for row in rack {
            if std::mem::replace(&mut hit[row[b]], true) {
                return Err(AlgebraError::RackAxiom(format!(
                    "right action x -> x * {b} is not bijective"
                )));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if rack[rack[a][b]][c] != rack[rack[a][c]][rack[b][c]] {
                    return Err(AlgebraError::RackAxiom(format!(
                        "self-distributivity fails at ({a},{b},{c})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// The rack switch `S(a, b) = (b, a * b)`: `up(a, b) = a * b`,
/// `down(a, b) = a`. The level is whatever verifies (biquandle exactly for
/// quandles).
pub fn rack_switch(rack: &[Vec<usize>]) -> Result<FiniteBiquandle, AlgebraError> {
    verify_rack(rack)?;
    let tables = SwitchTables::from_fn(rack.len(), |a, b| rack[a][b], |a, _| a)?;
    FiniteBiquandle::from_tables(tables)
}

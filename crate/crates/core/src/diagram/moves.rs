//! Reidemeister moves on long Gauss codes.
//!
//! R1 and R2 are generated as insert/delete pairs at arbitrary positions.
//! R3 is provided as hand-encoded fixture pairs for the all-positive
//! braid-like move; the other R3 types follow from it together with R1
//! and R2.

use std::fmt;
use std::str::FromStr;

use super::gauss::{LongGaussCode, Pass, Role, Sign};
use crate::error::MoveError;

/// Pass order and sign of an R1 kink.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kink {
    UnderOverPositive,
    OverUnderPositive,
    UnderOverNegative,
    OverUnderNegative,
}

impl Kink {
    pub const ALL: [Kink; 4] = [
        Kink::UnderOverPositive,
        Kink::OverUnderPositive,
        Kink::UnderOverNegative,
        Kink::OverUnderNegative,
    ];

    fn parts(self) -> (Role, Role, Sign) {
        match self {
            Kink::UnderOverPositive => (Role::Under, Role::Over, Sign::Positive),
            Kink::OverUnderPositive => (Role::Over, Role::Under, Sign::Positive),
            Kink::UnderOverNegative => (Role::Under, Role::Over, Sign::Negative),
            Kink::OverUnderNegative => (Role::Over, Role::Under, Sign::Negative),
        }
    }
}

impl FromStr for Kink {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "UO+" => Ok(Kink::UnderOverPositive),
            "OU+" => Ok(Kink::OverUnderPositive),
            "UO-" => Ok(Kink::UnderOverNegative),
            "OU-" => Ok(Kink::OverUnderNegative),
            _ => Err(format!("unknown kink kind {s:?}")),
        }
    }
}

impl fmt::Display for Kink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kink::UnderOverPositive => "UO+",
            Kink::OverUnderPositive => "OU+",
            Kink::UnderOverNegative => "UO-",
            Kink::OverUnderNegative => "OU-",
        };
        f.write_str(s)
    }
}

/// Relative direction of the two strand pieces in an R2 bigon. Along the
/// first piece the new crossings are met as `c, c'`; along the second
/// piece they are met as `c, c'` (parallel) or `c', c` (antiparallel).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrandDirection {
    Parallel,
    Antiparallel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct R2Variant {
    /// The piece at `pos_a` passes over both new crossings.
    pub over_first: bool,
    /// Sign of `c`; `c'` gets the opposite sign.
    pub first_sign: Sign,
    pub direction: StrandDirection,
}

impl R2Variant {
    pub fn all() -> impl Iterator<Item = R2Variant> {
        [true, false].into_iter().flat_map(|over_first| {
            [Sign::Positive, Sign::Negative]
                .into_iter()
                .flat_map(move |first_sign| {
                    [StrandDirection::Antiparallel, StrandDirection::Parallel]
                        .into_iter()
                        .map(move |direction| R2Variant {
                            over_first,
                            first_sign,
                            direction,
                        })
                })
        })
    }
}

impl Default for R2Variant {
    fn default() -> Self {
        R2Variant {
            over_first: true,
            first_sign: Sign::Positive,
            direction: StrandDirection::Antiparallel,
        }
    }
}

fn check_position(code: &LongGaussCode, position: usize) -> Result<(), MoveError> {
    if position > code.len() {
        return Err(MoveError::OutOfRange {
            position,
            len: code.len(),
        });
    }
    Ok(())
}

fn check_fresh(code: &LongGaussCode, id: u32) -> Result<(), MoveError> {
    if id == 0 || code.passes().iter().any(|p| p.crossing == id) {
        return Err(MoveError::IdInUse(id));
    }
    Ok(())
}

/// Inserts a kink before the pass at `position`, using `max id + 1`.
pub fn r1_insert(
    code: &LongGaussCode,
    position: usize,
    kink: Kink,
) -> Result<LongGaussCode, MoveError> {
    r1_insert_with_id(code, position, kink, code.max_crossing_id() + 1)
}

pub fn r1_insert_with_id(
    code: &LongGaussCode,
    position: usize,
    kink: Kink,
    id: u32,
) -> Result<LongGaussCode, MoveError> {
    check_position(code, position)?;
    check_fresh(code, id)?;
    let (first, second, sign) = kink.parts();
    let mut passes = code.passes().to_vec();
    passes.splice(
        position..position,
        [Pass::new(id, first, sign), Pass::new(id, second, sign)],
    );
    Ok(LongGaussCode::from_passes_unchecked(passes))
}

/// Removes the kink formed by the passes at `position` and `position + 1`.
pub fn r1_delete(code: &LongGaussCode, position: usize) -> Result<LongGaussCode, MoveError> {
    let p = code.passes();
    if position + 1 >= p.len() || p[position].crossing != p[position + 1].crossing {
        return Err(MoveError::NotAKink(position));
    }
    let mut passes = p.to_vec();
    passes.drain(position..position + 2);
    Ok(LongGaussCode::from_passes_unchecked(passes))
}

/// Positions where [`r1_delete`] applies.
pub fn r1_sites(code: &LongGaussCode) -> Vec<usize> {
    code.passes()
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0].crossing == w[1].crossing)
        .map(|(i, _)| i)
        .collect()
}

/// Inserts an R2 bigon between the strand piece at `pos_a` and the piece
/// at `pos_b` (positions in `code`, `pos_a ≤ pos_b`). In the result the two
/// pass pairs start at `pos_a` and `pos_b + 2`.
pub fn r2_insert(
    code: &LongGaussCode,
    pos_a: usize,
    pos_b: usize,
    variant: R2Variant,
) -> Result<LongGaussCode, MoveError> {
    let c = code.max_crossing_id() + 1;
    r2_insert_with_ids(code, pos_a, pos_b, variant, (c, c + 1))
}

pub fn r2_insert_with_ids(
    code: &LongGaussCode,
    pos_a: usize,
    pos_b: usize,
    variant: R2Variant,
    (c, c2): (u32, u32),
) -> Result<LongGaussCode, MoveError> {
    check_position(code, pos_a)?;
    check_position(code, pos_b)?;
    if pos_b < pos_a {
        return Err(MoveError::OutOfRange {
            position: pos_b,
            len: code.len(),
        });
    }
    check_fresh(code, c)?;
    check_fresh(code, c2)?;
    if c == c2 {
        return Err(MoveError::IdInUse(c2));
    }
    let (role_a, role_b) = if variant.over_first {
        (Role::Over, Role::Under)
    } else {
        (Role::Under, Role::Over)
    };
    let s = variant.first_sign;
    let first = [Pass::new(c, role_a, s), Pass::new(c2, role_a, s.flip())];
    let second = match variant.direction {
        StrandDirection::Parallel => [Pass::new(c, role_b, s), Pass::new(c2, role_b, s.flip())],
        StrandDirection::Antiparallel => [Pass::new(c2, role_b, s.flip()), Pass::new(c, role_b, s)],
    };
    let p = code.passes();
    let mut passes = Vec::with_capacity(p.len() + 4);
    passes.extend_from_slice(&p[..pos_a]);
    passes.extend_from_slice(&first);
    passes.extend_from_slice(&p[pos_a..pos_b]);
    passes.extend_from_slice(&second);
    passes.extend_from_slice(&p[pos_b..]);
    Ok(LongGaussCode::from_passes_unchecked(passes))
}

fn is_r2_pair(p: &[Pass], first: usize, second: usize) -> bool {
    if second < first + 2 || second + 1 >= p.len() {
        return false;
    }
    let (a0, a1, b0, b1) = (p[first], p[first + 1], p[second], p[second + 1]);
    let same_pair = (b0.crossing == a0.crossing && b1.crossing == a1.crossing)
        || (b0.crossing == a1.crossing && b1.crossing == a0.crossing);
    a0.crossing != a1.crossing && a0.role == a1.role && a0.sign != a1.sign && same_pair
}

/// Removes the R2 bigon whose pass pairs start at `first` and `second`.
pub fn r2_delete(
    code: &LongGaussCode,
    first: usize,
    second: usize,
) -> Result<LongGaussCode, MoveError> {
    if !is_r2_pair(code.passes(), first, second) {
        return Err(MoveError::NotAnR2Pair(first, second));
    }
    let passes = code
        .passes()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != first && i != first + 1 && i != second && i != second + 1)
        .map(|(_, p)| *p)
        .collect();
    Ok(LongGaussCode::from_passes_unchecked(passes))
}

/// All `(first, second)` pairs where [`r2_delete`] applies.
pub fn r2_sites(code: &LongGaussCode) -> Vec<(usize, usize)> {
    let p = code.passes();
    let mut sites = Vec::new();
    for first in 0..p.len().saturating_sub(1) {
        for second in first + 2..p.len().saturating_sub(1) {
            if is_r2_pair(p, first, second) {
                sites.push((first, second));
            }
        }
    }
    sites
}

/// Gauss-code pairs related by one braid-like all-positive R3 move.
///
/// Three strand pieces meet pairwise at crossings 1, 2, 3: the bottom
/// piece passes under 1 then 2, the middle piece over 1 then under 3, the
/// top piece over 2 then 3. The move reverses the order of the two passes
/// on every piece. Fixtures place the pieces in every order and inside
/// larger codes.
pub fn r3_fixture_pairs() -> Vec<(LongGaussCode, LongGaussCode)> {
    const BOTTOM: (&str, &str) = ("U1+ U2+", "U2+ U1+");
    const MIDDLE: (&str, &str) = ("O1+ U3+", "U3+ O1+");
    const TOP: (&str, &str) = ("O2+ O3+", "O3+ O2+");
    let orders = [
        [BOTTOM, MIDDLE, TOP],
        [BOTTOM, TOP, MIDDLE],
        [MIDDLE, BOTTOM, TOP],
        [MIDDLE, TOP, BOTTOM],
        [TOP, BOTTOM, MIDDLE],
        [TOP, MIDDLE, BOTTOM],
    ];
    let mut texts: Vec<(String, String)> = orders
        .iter()
        .map(|pieces| {
            let left: Vec<&str> = pieces.iter().map(|p| p.0).collect();
            let right: Vec<&str> = pieces.iter().map(|p| p.1).collect();
            (left.join(" "), right.join(" "))
        })
        .collect();
    // Pieces separated by the passes of two further crossings.
    let framed = |pieces: &[(&str, &str); 3], left: bool| {
        let pick = |p: &(&str, &str)| if left { p.0 } else { p.1 }.to_string();
        format!(
            "U4+ {} O5- {} O4+ {} U5-",
            pick(&pieces[0]),
            pick(&pieces[1]),
            pick(&pieces[2])
        )
    };
    for pieces in [&orders[0], &orders[3], &orders[4]] {
        texts.push((framed(pieces, true), framed(pieces, false)));
    }
    // Inside the long virtual trefoil.
    texts.push((
        format!("U4+ {} U5+ {} O4+ {} O5+", BOTTOM.0, TOP.0, MIDDLE.0),
        format!("U4+ {} U5+ {} O4+ {} O5+", BOTTOM.1, TOP.1, MIDDLE.1),
    ));
    texts
        .into_iter()
        .map(|(l, r)| {
            (
                l.parse().expect("fixture codes are valid"),
                r.parse().expect("fixture codes are valid"),
            )
        })
        .collect()
}

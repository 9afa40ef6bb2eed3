//! Signed Gauss codes of long virtual knot diagrams.
//!
//! A code is the left-to-right sequence of passes through classical
//! crossings. Virtual crossings are not recorded: colors carry across them
//! unchanged. Segment `k` is the semi-arc after the `k`-th pass, so segment
//! 0 is the initial arc and segment `len` the final arc; the pass at 0-based
//! index `k` consumes segment `k` and produces segment `k + 1`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::GaussError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    #[serde(rename = "O")]
    Over,
    #[serde(rename = "U")]
    Under,
}

impl Role {
    pub fn opposite(self) -> Role {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }

    fn letter(self) -> char {
        match self {
            Role::Over => 'O',
            Role::Under => 'U',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        match s {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;

    fn try_from(v: i8) -> Result<Self, Self::Error> {
        match v {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            _ => Err(format!("sign must be 1 or -1, got {v}")),
        }
    }
}

/// One visit to a classical crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pass {
    #[serde(rename = "c")]
    pub crossing: u32,
    pub role: Role,
    pub sign: Sign,
}

impl Pass {
    pub fn new(crossing: u32, role: Role, sign: Sign) -> Self {
        Self {
            crossing,
            role,
            sign,
        }
    }
}

impl fmt::Display for Pass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sign {
            Sign::Positive => '+',
            Sign::Negative => '-',
        };
        write!(f, "{}{}{}", self.role.letter(), self.crossing, s)
    }
}

fn parse_pass(token: &str, position: usize) -> Result<Pass, GaussError> {
    let bad = || GaussError::BadToken {
        position,
        token: token.to_string(),
    };
    let mut chars = token.chars();
    let role = match chars.next() {
        Some('O') => Role::Over,
        Some('U') => Role::Under,
        _ => return Err(bad()),
    };
    let sign = match chars.next_back() {
        Some('+') => Sign::Positive,
        Some('-') => Sign::Negative,
        _ => return Err(bad()),
    };
    let digits = chars.as_str();
    if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let crossing = digits.parse().map_err(|_| bad())?;
    Ok(Pass::new(crossing, role, sign))
}

/// A validated long Gauss code: every crossing id appears exactly twice,
/// once over and once under, with the same sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "RawCode")]
pub struct LongGaussCode {
    passes: Vec<Pass>,
}

#[derive(Deserialize)]
struct RawCode {
    passes: Vec<Pass>,
}

impl TryFrom<RawCode> for LongGaussCode {
    type Error = GaussError;

    fn try_from(raw: RawCode) -> Result<Self, Self::Error> {
        LongGaussCode::new(raw.passes)
    }
}

impl LongGaussCode {
    pub fn new(passes: Vec<Pass>) -> Result<Self, GaussError> {
        validate(&passes)?;
        Ok(Self { passes })
    }

    /// The trivial long knot.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn passes(&self) -> &[Pass] {
        &self.passes
    }

    pub fn len(&self) -> usize {
        self.passes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.passes.is_empty()
    }

    pub fn segment_count(&self) -> usize {
        self.passes.len() + 1
    }

    pub fn crossing_count(&self) -> usize {
        self.passes.len() / 2
    }

    pub fn max_crossing_id(&self) -> u32 {
        self.passes.iter().map(|p| p.crossing).max().unwrap_or(0)
    }

    /// Same passes traversed right to left; roles and signs are unchanged.
    pub fn reverse_orientation(&self) -> LongGaussCode {
        LongGaussCode {
            passes: self.passes.iter().rev().copied().collect(),
        }
    }

    pub fn incidence(&self) -> Incidence {
        Incidence::new(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("codes always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub(crate) fn from_passes_unchecked(passes: Vec<Pass>) -> Self {
        debug_assert!(validate(&passes).is_ok());
        Self { passes }
    }
}

fn validate(passes: &[Pass]) -> Result<(), GaussError> {
    // crossing -> (first position, role, sign, count)
    let mut seen: HashMap<u32, (usize, Role, Sign, u8)> = HashMap::new();
    for (i, pass) in passes.iter().enumerate() {
        let position = i + 1;
        if pass.crossing == 0 {
            return Err(GaussError::BadToken {
                position,
                token: pass.to_string(),
            });
        }
        match seen.get_mut(&pass.crossing) {
            None => {
                seen.insert(pass.crossing, (position, pass.role, pass.sign, 1));
            }
            Some(entry) => {
                let crossing = pass.crossing;
                if entry.3 >= 2 {
                    return Err(GaussError::TooManyPasses { crossing, position });
                }
                if entry.1 == pass.role {
                    return Err(GaussError::SameRole { crossing, position });
                }
                if entry.2 != pass.sign {
                    return Err(GaussError::SignMismatch { crossing, position });
                }
                entry.3 += 1;
            }
        }
    }
    let unpaired = seen
        .iter()
        .filter(|(_, e)| e.3 == 1)
        .map(|(&crossing, e)| (e.0, crossing))
        .min();
    match unpaired {
        Some((position, crossing)) => Err(GaussError::Unpaired { crossing, position }),
        None => Ok(()),
    }
}

impl FromStr for LongGaussCode {
    type Err = GaussError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let passes = text
            .split_whitespace()
            .enumerate()
            .map(|(i, tok)| parse_pass(tok, i + 1))
            .collect::<Result<Vec<_>, _>>()?;
        LongGaussCode::new(passes)
    }
}

impl fmt::Display for LongGaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, pass) in self.passes.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{pass}")?;
        }
        Ok(())
    }
}

/// Segment slots of one crossing. Positions are 0-based pass indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingIncidence {
    pub crossing: u32,
    pub sign: Sign,
    pub under_pos: usize,
    pub over_pos: usize,
    pub under_in: usize,
    pub under_out: usize,
    pub over_in: usize,
    pub over_out: usize,
}

/// Per-crossing segment slots, ordered by crossing id, plus a pass lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Incidence {
    crossings: Vec<CrossingIncidence>,
    by_pass: Vec<usize>,
}

impl Incidence {
    fn new(code: &LongGaussCode) -> Self {
        let mut ids: Vec<u32> = code.passes.iter().map(|p| p.crossing).collect();
        ids.sort_unstable();
        ids.dedup();
        let mut crossings: Vec<CrossingIncidence> = ids
            .iter()
            .map(|&crossing| CrossingIncidence {
                crossing,
                sign: Sign::Positive,
                under_pos: 0,
                over_pos: 0,
                under_in: 0,
                under_out: 0,
                over_in: 0,
                over_out: 0,
            })
            .collect();
        let mut by_pass = Vec::with_capacity(code.len());
        for (k, pass) in code.passes.iter().enumerate() {
            let idx = ids
                .binary_search(&pass.crossing)
                .expect("id collected above");
            let c = &mut crossings[idx];
            c.sign = pass.sign;
            match pass.role {
                Role::Under => {
                    c.under_pos = k;
                    c.under_in = k;
                    c.under_out = k + 1;
                }
                Role::Over => {
                    c.over_pos = k;
                    c.over_in = k;
                    c.over_out = k + 1;
                }
            }
            by_pass.push(idx);
        }
        Self { crossings, by_pass }
    }

    pub fn crossings(&self) -> &[CrossingIncidence] {
        &self.crossings
    }

    pub fn get(&self, crossing: u32) -> Option<&CrossingIncidence> {
        self.crossings
            .binary_search_by_key(&crossing, |c| c.crossing)
            .ok()
            .map(|i| &self.crossings[i])
    }

    /// The crossing visited by the pass at 0-based index `k`.
    pub fn for_pass(&self, k: usize) -> &CrossingIncidence {
        &self.crossings[self.by_pass[k]]
    }
}

//! Seeded random walks of Reidemeister moves that check the coloring
//! counts and longitude families stay fixed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::FiniteBiquandle;
use crate::coloring::count_fixed_all;
use crate::diagram::{
    r1_delete, r1_insert_with_id, r1_sites, r2_delete, r2_insert_with_ids, r2_sites,
    r3_fixture_pairs, Kink, LongGaussCode, R2Variant, Sign, StrandDirection,
};
use crate::error::ColoringError;
use crate::longitude::{invariant_families, InvariantFamily, TokenRule};

#[derive(Debug, Clone, Copy)]
pub struct HarnessConfig {
    pub trials: usize,
    pub seed: u64,
    /// Insertions stop once the walk reaches this many crossings.
    pub max_crossings: usize,
    pub rule: TokenRule,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        Self {
            trials: 100,
            seed: 0,
            max_crossings: 6,
            rule: TokenRule::Standard,
        }
    }
}

/// A move whose result disagreed with the reference diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarnessFailure {
    pub step: String,
    pub before: String,
    pub after: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct HarnessReport {
    pub random_moves: usize,
    pub r3_pairs: usize,
    pub failures: Vec<HarnessFailure>,
}

impl HarnessReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn checks(&self) -> usize {
        self.random_moves + self.r3_pairs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Snapshot {
    counts: Vec<u64>,
    families: Vec<InvariantFamily>,
}

impl Snapshot {
    fn take(
        code: &LongGaussCode,
        b: &FiniteBiquandle,
        rule: TokenRule,
    ) -> Result<Self, ColoringError> {
        Ok(Self {
            counts: count_fixed_all(code, b)?,
            families: invariant_families(code, b, rule)?,
        })
    }

    fn mismatch(&self, other: &Snapshot) -> Option<String> {
        if let Some(p) = (0..self.counts.len()).find(|&p| self.counts[p] != other.counts[p]) {
            return Some(format!(
                "count_fixed differs at initial color {p}: {} vs {}",
                self.counts[p], other.counts[p]
            ));
        }
        let p = (0..self.families.len()).find(|&p| self.families[p] != other.families[p])?;
        Some(format!("longitude family differs at initial color {p}"))
    }
}

fn random_insert(
    code: &LongGaussCode,
    rng: &mut ChaCha8Rng,
    next_id: &mut u32,
) -> (String, LongGaussCode) {
    let len = code.len();
    if rng.gen_bool(0.5) {
        let pos = rng.gen_range(0..=len);
        let kink = *Kink::ALL.choose(rng).expect("non-empty");
        let id = *next_id;
        *next_id += 1;
        let out = r1_insert_with_id(code, pos, kink, id).expect("fresh id, position in range");
        (format!("r1 insert {kink} at {pos}"), out)
    } else {
        let mut ends = [rng.gen_range(0..=len), rng.gen_range(0..=len)];
        ends.sort_unstable();
        let variant = R2Variant {
            over_first: rng.gen_bool(0.5),
            first_sign: if rng.gen_bool(0.5) {
                Sign::Positive
            } else {
                Sign::Negative
            },
            direction: if rng.gen_bool(0.5) {
                StrandDirection::Antiparallel
            } else {
                StrandDirection::Parallel
            },
        };
        let ids = (*next_id, *next_id + 1);
        *next_id += 2;
        let out = r2_insert_with_ids(code, ends[0], ends[1], variant, ids)
            .expect("fresh ids, positions in range");
        (
            format!("r2 insert {variant:?} at ({}, {})", ends[0], ends[1]),
            out,
        )
    }
}

fn random_delete(code: &LongGaussCode, rng: &mut ChaCha8Rng) -> Option<(String, LongGaussCode)> {
    let r1 = r1_sites(code);
    let r2 = r2_sites(code);
    let total = r1.len() + r2.len();
    if total == 0 {
        return None;
    }
    let pick = rng.gen_range(0..total);
    Some(if pick < r1.len() {
        let pos = r1[pick];
        (
            format!("r1 delete at {pos}"),
            r1_delete(code, pos).expect("listed site"),
        )
    } else {
        let (a, b) = r2[pick - r1.len()];
        (
            format!("r2 delete at ({a}, {b})"),
            r2_delete(code, a, b).expect("listed site"),
        )
    })
}

/// Runs `config.trials` random R1/R2 moves starting from `code`, then every
/// R3 fixture pair. `progress` is called after each random move with the
/// number done so far.
pub fn run_harness(
    code: &LongGaussCode,
    b: &FiniteBiquandle,
    config: &HarnessConfig,
    mut progress: impl FnMut(usize),
) -> Result<HarnessReport, ColoringError> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let reference = Snapshot::take(code, b, config.rule)?;
    let mut report = HarnessReport::default();
    let mut current = code.clone();
    let mut next_id = code.max_crossing_id() + 1;

    for done in 1..=config.trials {
        let at_cap = current.crossing_count() >= config.max_crossings;
        let deletion = if at_cap || rng.gen_bool(0.4) {
            random_delete(&current, &mut rng)
        } else {
            None
        };
        let (step, next) = match deletion {
            Some(d) => d,
            None if at_cap => ("reset".to_string(), code.clone()),
            None => random_insert(&current, &mut rng, &mut next_id),
        };
        let snapshot = Snapshot::take(&next, b, config.rule)?;
        if let Some(reason) = reference.mismatch(&snapshot) {
            report.failures.push(HarnessFailure {
                step,
                before: current.to_string(),
                after: next.to_string(),
                reason,
            });
        }
        report.random_moves += 1;
        current = next;
        progress(done);
    }

    for (left, right) in r3_fixture_pairs() {
        let l = Snapshot::take(&left, b, config.rule)?;
        let r = Snapshot::take(&right, b, config.rule)?;
        if let Some(reason) = l.mismatch(&r) {
            report.failures.push(HarnessFailure {
                step: "r3".to_string(),
                before: left.to_string(),
                after: right.to_string(),
                reason,
            });
        }
        report.r3_pairs += 1;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::alexander_biquandle;

    #[test]
    fn swap_passes_trivially() {
        let b = FiniteBiquandle::swap(3);
        let d: LongGaussCode = "U1+ U2+ O1+ O2+".parse().unwrap();
        let config = HarnessConfig {
            trials: 20,
            ..HarnessConfig::default()
        };
        let report = run_harness(&d, &b, &config, |_| {}).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(report.random_moves, 20);
        assert_eq!(report.r3_pairs, r3_fixture_pairs().len());
    }

    #[test]
    fn same_seed_same_report() {
        let b = alexander_biquandle(5, 2, 3).unwrap();
        let d = LongGaussCode::empty();
        let config = HarnessConfig {
            trials: 15,
            seed: 11,
            max_crossings: 4,
            rule: TokenRule::FlippedOverPositive,
        };
        let a = run_harness(&d, &b, &config, |_| {}).unwrap();
        let c = run_harness(&d, &b, &config, |_| {}).unwrap();
        assert_eq!(a, c);
    }
}

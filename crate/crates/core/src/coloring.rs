//! Biquandle colorings of long Gauss codes.
//!
//! At a positive crossing with under-in color `a` and over-in color `b`
//! the outgoing colors are `S(a, b)` read as `under_out = up(a, b)` and
//! `over_out = down(b, a)`. At a negative crossing they come from `S⁻¹`:
//! `under_out = upbar(a, b)` and `over_out = downbar(b, a)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{FiniteBiquandle, Level};
use crate::diagram::{LongGaussCode, Role, Sign};
use crate::error::ColoringError;

/// One color per segment; `segment_colors[0]` is the initial arc.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Coloring {
    segment_colors: Vec<usize>,
}

impl Coloring {
    pub fn new(segment_colors: Vec<usize>) -> Self {
        Self { segment_colors }
    }

    pub fn colors(&self) -> &[usize] {
        &self.segment_colors
    }

    pub fn initial(&self) -> usize {
        self.segment_colors[0]
    }
}

#[inline]
fn transfer(b: &FiniteBiquandle, role: Role, sign: Sign, input: usize, other: usize) -> usize {
    match (role, sign) {
        (Role::Under, Sign::Positive) => b.up(input, other),
        (Role::Over, Sign::Positive) => b.down(input, other),
        (Role::Under, Sign::Negative) => b.upbar(input, other),
        (Role::Over, Sign::Negative) => b.downbar(input, other),
    }
}

/// Checks both crossing equations everywhere, reporting the first crossing
/// (in pass order) that fails.
pub fn check_coloring(
    code: &LongGaussCode,
    b: &FiniteBiquandle,
    coloring: &Coloring,
) -> Result<(), ColoringError> {
    let colors = coloring.colors();
    if colors.len() != code.segment_count() {
        return Err(ColoringError::LengthMismatch {
            expected: code.segment_count(),
            got: colors.len(),
        });
    }
    if let Some((segment, &value)) = colors.iter().enumerate().find(|(_, &v)| v >= b.size()) {
        return Err(ColoringError::OutOfRange { segment, value });
    }
    let inc = code.incidence();
    for (k, pass) in code.passes().iter().enumerate() {
        let c = inc.for_pass(k);
        let (other_in, out) = match pass.role {
            Role::Under => (c.over_in, c.under_out),
            Role::Over => (c.under_in, c.over_out),
        };
        let expected = transfer(b, pass.role, pass.sign, colors[k], colors[other_in]);
        if colors[out] != expected {
            // Report by the crossing's first pass so the witness does not
            // depend on which of its two equations failed.
            let first = inc
                .crossings()
                .iter()
                .filter(|x| {
                    let bad = |role: Role, pos: usize, other: usize, out: usize| {
                        colors[out] != transfer(b, role, x.sign, colors[pos], colors[other])
                    };
                    bad(Role::Under, x.under_in, x.over_in, x.under_out)
                        || bad(Role::Over, x.over_in, x.under_in, x.over_out)
                })
                .min_by_key(|x| x.under_pos.min(x.over_pos))
                .expect("at least this crossing fails");
            return Err(ColoringError::Violation {
                crossing: first.crossing,
            });
        }
    }
    Ok(())
}

struct Step {
    role: Role,
    sign: Sign,
    other_in: usize,
}

/// Left-to-right propagation with branching on undetermined opposite-strand
/// inputs.
pub(crate) struct Solver<'a> {
    b: &'a FiniteBiquandle,
    steps: Vec<Step>,
}

impl<'a> Solver<'a> {
    pub(crate) fn new(code: &LongGaussCode, b: &'a FiniteBiquandle) -> Result<Self, ColoringError> {
        if b.level() < Level::Birack {
            return Err(ColoringError::NotBirack(b.level()));
        }
        let inc = code.incidence();
        let steps = code
            .passes()
            .iter()
            .enumerate()
            .map(|(k, pass)| {
                let c = inc.for_pass(k);
                Step {
                    role: pass.role,
                    sign: pass.sign,
                    other_in: match pass.role {
                        Role::Under => c.over_in,
                        Role::Over => c.under_in,
                    },
                }
            })
            .collect();
        Ok(Self { b, steps })
    }

    fn check_initial(&self, initial: usize) -> Result<(), ColoringError> {
        if initial >= self.b.size() {
            return Err(ColoringError::OutOfRange {
                segment: 0,
                value: initial,
            });
        }
        Ok(())
    }

    /// Calls `visit` once per coloring with the given initial color.
    pub(crate) fn for_each(&self, initial: usize, visit: &mut impl FnMut(&[usize])) {
        let segments = self.steps.len() + 1;
        let mut colors = vec![0; segments];
        let mut assigned = vec![false; segments];
        colors[0] = initial;
        assigned[0] = true;
        self.walk(0, &mut colors, &mut assigned, visit);
    }

    fn walk(
        &self,
        k: usize,
        colors: &mut [usize],
        assigned: &mut [bool],
        visit: &mut impl FnMut(&[usize]),
    ) {
        let Some(step) = self.steps.get(k) else {
            visit(colors);
            return;
        };
        let other = step.other_in;
        if assigned[other] {
            self.produce(k, colors, assigned, visit);
        } else {
            assigned[other] = true;
            for guess in 0..self.b.size() {
                colors[other] = guess;
                self.produce(k, colors, assigned, visit);
            }
            assigned[other] = false;
        }
    }

    fn produce(
        &self,
        k: usize,
        colors: &mut [usize],
        assigned: &mut [bool],
        visit: &mut impl FnMut(&[usize]),
    ) {
        let step = &self.steps[k];
        let out = transfer(
            self.b,
            step.role,
            step.sign,
            colors[k],
            colors[step.other_in],
        );
        let seg = k + 1;
        if assigned[seg] {
            if colors[seg] == out {
                self.walk(k + 1, colors, assigned, visit);
            }
        } else {
            assigned[seg] = true;
            colors[seg] = out;
            self.walk(k + 1, colors, assigned, visit);
            assigned[seg] = false;
        }
    }

    pub(crate) fn collect(&self, initial: usize) -> Vec<Coloring> {
        let mut out = Vec::new();
        self.for_each(initial, &mut |c| out.push(Coloring::new(c.to_vec())));
        out.sort_unstable();
        out
    }

    pub(crate) fn count(&self, initial: usize) -> u64 {
        let mut n = 0;
        self.for_each(initial, &mut |_| n += 1);
        n
    }
}

/// All colorings in lexicographic order, optionally restricted to a fixed
/// initial color.
pub fn enumerate_colorings(
    code: &LongGaussCode,
    b: &FiniteBiquandle,
    initial: Option<usize>,
) -> Result<Vec<Coloring>, ColoringError> {
    let solver = Solver::new(code, b)?;
    match initial {
        Some(p) => {
            solver.check_initial(p)?;
            Ok(solver.collect(p))
        }
        None => Ok((0..b.size()).flat_map(|p| solver.collect(p)).collect()),
    }
}

/// [`enumerate_colorings`] with the initial-color branches run in parallel.
pub fn enumerate_colorings_par(
    code: &LongGaussCode,
    b: &FiniteBiquandle,
    initial: Option<usize>,
) -> Result<Vec<Coloring>, ColoringError> {
    let solver = Solver::new(code, b)?;
    match initial {
        Some(p) => {
            solver.check_initial(p)?;
            Ok(solver.collect(p))
        }
        None => {
            let per_initial: Vec<Vec<Coloring>> = (0..b.size())
                .into_par_iter()
                .map(|p| solver.collect(p))
                .collect();
            Ok(per_initial.into_iter().flatten().collect())
        }
    }
}

pub fn count_colorings(code: &LongGaussCode, b: &FiniteBiquandle) -> Result<u64, ColoringError> {
    let solver = Solver::new(code, b)?;
    Ok((0..b.size()).map(|p| solver.count(p)).sum())
}

/// `|Col(D, B, p)|`.
pub fn count_fixed(
    code: &LongGaussCode,
    b: &FiniteBiquandle,
    initial: usize,
) -> Result<u64, ColoringError> {
    let solver = Solver::new(code, b)?;
    solver.check_initial(initial)?;
    Ok(solver.count(initial))
}

/// `count_fixed` for every initial color, computed in parallel.
pub fn count_fixed_all(
    code: &LongGaussCode,
    b: &FiniteBiquandle,
) -> Result<Vec<u64>, ColoringError> {
    let solver = Solver::new(code, b)?;
    Ok((0..b.size())
        .into_par_iter()
        .map(|p| solver.count(p))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{alexander_biquandle, rack_switch, wada_biquandle, FiniteGroup};

    fn code(s: &str) -> LongGaussCode {
        s.parse().unwrap()
    }

    #[test]
    fn check_coloring_examples() {
        let swap = FiniteBiquandle::swap(3);
        let kink = code("U1+ O1+");
        assert_eq!(
            check_coloring(&kink, &swap, &Coloring::new(vec![2, 2, 2])),
            Ok(())
        );
        assert_eq!(
            check_coloring(&kink, &swap, &Coloring::new(vec![0, 1, 0])),
            Err(ColoringError::Violation { crossing: 1 })
        );

        let wada = wada_biquandle(&FiniteGroup::cyclic(5).unwrap()).unwrap();
        let trefoil = code("U1+ U2+ O1+ O2+");
        assert_eq!(
            check_coloring(&trefoil, &wada, &Coloring::new(vec![0; 5])),
            Ok(())
        );
    }

    #[test]
    fn check_coloring_shape_errors() {
        let swap = FiniteBiquandle::swap(3);
        let kink = code("U1+ O1+");
        assert_eq!(
            check_coloring(&kink, &swap, &Coloring::new(vec![0, 0])),
            Err(ColoringError::LengthMismatch {
                expected: 3,
                got: 2
            })
        );
        assert_eq!(
            check_coloring(&kink, &swap, &Coloring::new(vec![0, 3, 0])),
            Err(ColoringError::OutOfRange {
                segment: 1,
                value: 3
            })
        );
    }

    #[test]
    fn swap_colorings_are_constant() {
        let swap = FiniteBiquandle::swap(3);
        let all = enumerate_colorings(&code("U1+ U2+ O1+ O2+"), &swap, None).unwrap();
        let expected: Vec<Coloring> = (0..3).map(|p| Coloring::new(vec![p; 5])).collect();
        assert_eq!(all, expected);
    }

    #[test]
    fn empty_code_has_one_coloring_per_initial() {
        let b = alexander_biquandle(5, 2, 3).unwrap();
        let e = LongGaussCode::empty();
        assert_eq!(
            enumerate_colorings(&e, &b, Some(3)).unwrap(),
            vec![Coloring::new(vec![3])]
        );
        assert_eq!(count_colorings(&e, &b).unwrap(), 5);
    }

    #[test]
    fn rejects_non_biracks_and_bad_initial() {
        let b = alexander_biquandle(5, 2, 3).unwrap();
        assert_eq!(
            count_fixed(&LongGaussCode::empty(), &b, 5),
            Err(ColoringError::OutOfRange {
                segment: 0,
                value: 5
            })
        );
        // The identity pair map is a switch whose row maps are constant.
        let t = crate::algebra::SwitchTables::from_fn(2, |_, a| a, |_, a| a).unwrap();
        let identity = FiniteBiquandle::from_tables(t).unwrap();
        assert_eq!(identity.level(), Level::Switch);
        assert_eq!(
            count_colorings(&LongGaussCode::empty(), &identity),
            Err(ColoringError::NotBirack(Level::Switch))
        );
        // Quandle racks give biquandles, non-quandle racks biracks; both color.
        let shift: Vec<Vec<usize>> = (0..3).map(|a| vec![(a + 1) % 3; 3]).collect();
        let birack = rack_switch(&shift).unwrap();
        assert!(count_colorings(&code("U1+ O1+"), &birack).is_ok());
    }

    #[test]
    fn enumerated_colorings_check_and_are_sorted() {
        let b = wada_biquandle(&FiniteGroup::symmetric(3).unwrap()).unwrap();
        let d = code("U1- O2+ O1- U3+ U2+ O3+");
        let all = enumerate_colorings(&d, &b, None).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for c in &all {
            check_coloring(&d, &b, c).unwrap();
        }
        assert_eq!(all, enumerate_colorings_par(&d, &b, None).unwrap());
        let per: Vec<u64> = count_fixed_all(&d, &b).unwrap();
        assert_eq!(per.iter().sum::<u64>(), all.len() as u64);
    }
}

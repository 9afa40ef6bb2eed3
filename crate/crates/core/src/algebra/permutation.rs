//! Permutations of `{0..k-1}` in one-line notation.
//!
//! Products compose left to right: `p.compose(&q)` is the permutation
//! `x ↦ q(p(x))`, i.e. apply `p` first. Cycle notation is 1-based on
//! input and output, with `()` for the identity.

use std::fmt;

use crate::error::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, AlgebraError> {
        let k = images.len();
        let mut seen = vec![false; k];
        for (i, &x) in images.iter().enumerate() {
            if x >= k {
                return Err(AlgebraError::NotAPermutation(format!(
                    "image {x} of point {i} out of range for degree {k}"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(AlgebraError::NotAPermutation(format!(
                    "point {x} is hit twice"
                )));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest point,
    /// ordered by that point (0-based).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Parses 1-based cycle notation such as `(1,2,3,4)`, `(1 2)(3 4)` or `()`.
    ///
    /// Cycles are read as a product in the same left-to-right order used by
    /// [`Permutation::compose`], so non-disjoint input like `(1,2)(2,3)` is
    /// accepted.
    pub fn from_cycles(degree: usize, text: &str) -> Result<Self, AlgebraError> {
        let bad = |reason: &str| AlgebraError::BadCycleNotation {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let mut result = Permutation::identity(degree);
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(bad("empty"));
        }
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let close = body.find(')').ok_or_else(|| bad("missing ')'"))?;
            let points = body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    let p: usize = s.parse().map_err(|_| bad("non-numeric point"))?;
                    if p == 0 || p > degree {
                        return Err(bad(&format!("point {p} outside 1..={degree}")));
                    }
                    Ok(p - 1)
                })
                .collect::<Result<Vec<_>, _>>()?;
            let mut seen = vec![false; degree];
            let mut cycle = Permutation::identity(degree);
            for (i, &p) in points.iter().enumerate() {
                if std::mem::replace(&mut seen[p], true) {
                    return Err(bad("repeated point in a cycle"));
                }
                cycle.images[p] = points[(i + 1) % points.len()];
            }
            result = result.compose(&cycle);
            rest = body[close + 1..].trim_start();
        }
        Ok(result)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_convention_golden() {
        // (1 2)·(2 3) applied to 3: (1 2) fixes 3, then (2 3) sends it to 2.
        let p = Permutation::from_cycles(3, "(1,2)").unwrap();
        let q = Permutation::from_cycles(3, "(2,3)").unwrap();
        assert_eq!(p.compose(&q).apply(2) + 1, 2);
        assert_eq!(p.compose(&q).to_string(), "(1,3,2)");
    }

    #[test]
    fn cycle_notation_round_trip() {
        for text in ["()", "(1,2,3,4)", "(1,3,2,5,4)", "(1,2)(3,5)"] {
            let p = Permutation::from_cycles(5, text).unwrap();
            assert_eq!(p.to_string(), text);
        }
        let spaced = Permutation::from_cycles(5, " (2 3 4 1) ").unwrap();
        assert_eq!(spaced.to_string(), "(1,2,3,4)");
    }

    #[test]
    fn cycle_notation_errors() {
        assert!(Permutation::from_cycles(4, "(1,5)").is_err());
        assert!(Permutation::from_cycles(4, "(1,2").is_err());
        assert!(Permutation::from_cycles(4, "(1,1)").is_err());
        assert!(Permutation::from_cycles(4, "1,2").is_err());
        assert!(Permutation::from_cycles(4, "").is_err());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        assert!(Permutation::new(vec![]).is_ok());
    }

    #[test]
    fn inverse_cancels() {
        let p = Permutation::from_cycles(5, "(1,4,2)(3,5)").unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }
}

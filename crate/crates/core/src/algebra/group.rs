//! Finite groups stored as multiplication tables over indices `0..order`.

use itertools::Itertools;

use super::permutation::Permutation;
use crate::error::AlgebraError;

/// Largest symmetric group degree we tabulate (5040² table entries).
pub const MAX_SYMMETRIC_DEGREE: usize = 7;

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: usize,
    names: Vec<String>,
    /// Present for permutation groups; sorted, so index lookup is a binary search.
    perms: Option<Vec<Permutation>>,
}

impl FiniteGroup {
    /// Builds a group from a full multiplication table `mul[a][b] = a·b`,
    /// checking closure, associativity, identity and inverses exhaustively.
    pub fn from_table(mul: &[Vec<usize>]) -> Result<Self, AlgebraError> {
        let n = mul.len();
        if n == 0 {
            return Err(AlgebraError::MalformedTable("empty group table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (a, row) in mul.iter().enumerate() {
            if row.len() != n {
                return Err(AlgebraError::MalformedTable(format!(
                    "row {a} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (b, &x) in row.iter().enumerate() {
                if x >= n {
                    return Err(AlgebraError::MalformedTable(format!(
                        "entry ({a},{b}) = {x} out of range"
                    )));
                }
                flat.push(x as u32);
            }
        }
        let at = |a: usize, b: usize| flat[a * n + b] as usize;

        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(AlgebraError::GroupAxiom(format!(
                            "not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or_else(|| AlgebraError::GroupAxiom("no identity element".into()))?;
        let inv = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| at(a, b) == identity && at(b, a) == identity)
                    .map(|b| b as u32)
                    .ok_or_else(|| AlgebraError::GroupAxiom(format!("{a} has no inverse")))
            })
            .collect::<Result<Vec<_>, _>>()?;

        Ok(Self {
            order: n,
            mul: flat,
            inv,
            identity,
            names: (0..n).map(|i| i.to_string()).collect(),
            perms: None,
        })
    }

    /// The cyclic group Z/n, written additively; element `i` is the residue `i`.
    pub fn cyclic(n: usize) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::MalformedTable(
                "cyclic group of order 0".into(),
            ));
        }
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Self::from_table(&rows)
    }

    /// The symmetric group on `degree` points.
    ///
    /// Elements are indexed in lexicographic order of their one-line
    /// notation, so index 0 is the identity. Multiplication follows
    /// [`Permutation::compose`]: `a·b` applies `a` first. Associativity is
    /// inherited from function composition and is not re-checked.
    pub fn symmetric(degree: usize) -> Result<Self, AlgebraError> {
        if !(1..=MAX_SYMMETRIC_DEGREE).contains(&degree) {
            return Err(AlgebraError::DegreeOutOfRange(degree));
        }
        let perms: Vec<Permutation> = (0..degree)
            .permutations(degree)
            .map(|images| Permutation::new(images).expect("itertools yields permutations"))
            .collect();
        debug_assert!(perms.windows(2).all(|w| w[0] < w[1]));
        let n = perms.len();
        let index = |p: &Permutation| perms.binary_search(p).expect("closed under composition");

        let mut mul = Vec::with_capacity(n * n);
        for a in &perms {
            for b in &perms {
                mul.push(index(&a.compose(b)) as u32);
            }
        }
        let inv = perms.iter().map(|p| index(&p.inverse()) as u32).collect();
        let names = perms.iter().map(|p| p.to_string()).collect();
        Ok(Self {
            order: n,
            mul,
            inv,
            identity: 0,
            names,
            perms: Some(perms),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// Product of a sequence of elements, left to right.
    pub fn product(&self, elements: impl IntoIterator<Item = usize>) -> usize {
        elements
            .into_iter()
            .fold(self.identity, |acc, x| self.mul(acc, x))
    }

    /// `a^k` for any integer `k`.
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        (0..k.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn permutation(&self, a: usize) -> Option<&Permutation> {
        self.perms.as_ref().map(|p| &p[a])
    }

    pub fn is_permutation_group(&self) -> bool {
        self.perms.is_some()
    }

    /// Resolves an element from its display form: cycle notation for
    /// permutation groups (any spacing, any cycle rotation), the index
    /// otherwise.
    pub fn element(&self, text: &str) -> Option<usize> {
        match &self.perms {
            Some(perms) => {
                let p = Permutation::from_cycles(perms[0].degree(), text).ok()?;
                perms.binary_search(&p).ok()
            }
            None => text.trim().parse().ok().filter(|&i| i < self.order),
        }
    }
}

//! Switch tables, the switch/birack/biquandle verifiers, and the
//! [`FiniteBiquandle`] value with its derived operation caches.
//!
//! Notation: `up(a, b) = a^b`, `down(a, b) = a_b`, where the first argument
//! is the element being acted on. The switch is
//! `S(a, b) = (down(b, a), up(a, b))` and its inverse is
//! `S⁻¹(a, b) = (upbar(b, a), downbar(a, b))`.

use std::fmt;

use rayon::prelude::*;

use crate::error::AlgebraError;

/// How far up the switch → birack → biquandle ladder a table verified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    Switch,
    Birack,
    Biquandle,
}

/// Why a pair of tables is not a switch. Witnesses are lexicographically
/// first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwitchFailure {
    /// The smallest pair not in the image of `S`.
    NotBijective { pair: (usize, usize) },
    /// The set-theoretic Yang–Baxter equation fails on this triple.
    YangBaxter { triple: (usize, usize, usize) },
}

impl fmt::Display for SwitchFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SwitchFailure::NotBijective { pair: (a, b) } => {
                write!(f, "S is not bijective: pair ({a},{b}) is not in its image")
            }
            SwitchFailure::YangBaxter { triple: (a, b, c) } => {
                write!(f, "Yang-Baxter equation fails at triple ({a},{b},{c})")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowOp {
    Up,
    Down,
}

/// A row map `x ↦ up(x, a)` or `x ↦ down(x, a)` that is not a bijection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BirackFailure {
    pub op: RowOp,
    pub element: usize,
}

impl fmt::Display for BirackFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.op {
            RowOp::Up => "up",
            RowOp::Down => "down",
        };
        write!(f, "x -> {name}(x, {}) is not a bijection", self.element)
    }
}

/// The two diagonal identities, with `d = down_inv(a, a)`:
/// `B1: up_inv(a, a) = down(a, d)` and `B2: d = up(a, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BiquandleAxiom {
    B1,
    B2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BiquandleFailure {
    pub axiom: BiquandleAxiom,
    pub element: usize,
}

impl fmt::Display for BiquandleFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "axiom {:?} fails at element {}",
            self.axiom, self.element
        )
    }
}

/// Raw up/down tables on `{0..n-1}`, shape- and range-checked but not
/// otherwise verified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchTables {
    n: usize,
    up: Vec<u32>,
    down: Vec<u32>,
}

impl SwitchTables {
    /// `up[a][b] = a^b`, `down[a][b] = a_b`.
    pub fn from_rows(up: &[Vec<usize>], down: &[Vec<usize>]) -> Result<Self, AlgebraError> {
        let n = up.len();
        if down.len() != n {
            return Err(AlgebraError::MalformedTable(format!(
                "up has {n} rows but down has {}",
                down.len()
            )));
        }
        let flatten = |rows: &[Vec<usize>], name: &str| -> Result<Vec<u32>, AlgebraError> {
            let mut flat = Vec::with_capacity(n * n);
            for (a, row) in rows.iter().enumerate() {
                if row.len() != n {
                    return Err(AlgebraError::MalformedTable(format!(
                        "{name} row {a} has {} entries, expected {n}",
                        row.len()
                    )));
                }
                for (b, &x) in row.iter().enumerate() {
                    if x >= n {
                        return Err(AlgebraError::MalformedTable(format!(
                            "{name}[{a}][{b}] = {x} out of range 0..{n}"
                        )));
                    }
                    flat.push(x as u32);
                }
            }
            Ok(flat)
        };
        Ok(Self {
            n,
            up: flatten(up, "up")?,
            down: flatten(down, "down")?,
        })
    }

    /// Tabulates `up(a, b)` and `down(a, b)` from closures.
    pub fn from_fn(
        n: usize,
        up: impl Fn(usize, usize) -> usize,
        down: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, AlgebraError> {
        if n > u32::MAX as usize {
            return Err(AlgebraError::MalformedTable(format!(
                "carrier too large: {n}"
            )));
        }
        let mut up_t = Vec::with_capacity(n * n);
        let mut down_t = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let (u, d) = (up(a, b), down(a, b));
                if u >= n || d >= n {
                    return Err(AlgebraError::MalformedTable(format!(
                        "entry ({a},{b}) out of range 0..{n}"
                    )));
                }
                up_t.push(u as u32);
                down_t.push(d as u32);
            }
        }
        Ok(Self {
            n,
            up: up_t,
            down: down_t,
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn up(&self, a: usize, b: usize) -> usize {
        self.up[a * self.n + b] as usize
    }

    #[inline]
    pub fn down(&self, a: usize, b: usize) -> usize {
        self.down[a * self.n + b] as usize
    }

    #[inline]
    pub fn switch(&self, a: usize, b: usize) -> (usize, usize) {
        (self.down(b, a), self.up(a, b))
    }

    pub fn up_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.up(a, b)).collect())
            .collect()
    }

    pub fn down_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.down(a, b)).collect())
            .collect()
    }

    /// Overwrites one entry; used to build corrupted tables in tests.
    pub fn set_up(&mut self, a: usize, b: usize, value: usize) {
        assert!(value < self.n);
        self.up[a * self.n + b] = value as u32;
    }

    pub fn set_down(&mut self, a: usize, b: usize, value: usize) {
        assert!(value < self.n);
        self.down[a * self.n + b] = value as u32;
    }

    /// Explicit inverse of the pair map, indexed by `a * n + b`.
    fn invert_pairs(&self) -> Result<Vec<(u32, u32)>, SwitchFailure> {
        let n = self.n;
        let mut inverse = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                let (x, y) = self.switch(a, b);
                inverse[x * n + y] = Some((a as u32, b as u32));
            }
        }
        inverse
            .iter()
            .enumerate()
            .map(|(i, p)| {
                p.ok_or(SwitchFailure::NotBijective {
                    pair: (i / n, i % n),
                })
            })
            .collect()
    }

    fn ybe_holds(&self, a: usize, b: usize, c: usize) -> bool {
        // (S × id)(id × S)(S × id)
        let (x1, y1) = self.switch(a, b);
        let (y2, z2) = self.switch(y1, c);
        let (x3, y3) = self.switch(x1, y2);
        // (id × S)(S × id)(id × S)
        let (q1, r1) = self.switch(b, c);
        let (p2, q2) = self.switch(a, q1);
        let (q3, r3) = self.switch(q2, r1);
        (x3, y3, z2) == (p2, q3, r3)
    }

    /// `S` is a bijection of pairs and satisfies the Yang–Baxter equation on
    /// all `n³` triples.
    pub fn verify_switch(&self) -> Result<(), SwitchFailure> {
        self.invert_pairs()?;
        let n = self.n;
        let failure = (0..n).into_par_iter().find_map_first(|a| {
            for b in 0..n {
                for c in 0..n {
                    if !self.ybe_holds(a, b, c) {
                        return Some((a, b, c));
                    }
                }
            }
            None
        });
        match failure {
            Some(triple) => Err(SwitchFailure::YangBaxter { triple }),
            None => Ok(()),
        }
    }

    /// Every row map `x ↦ up(x, a)` and `x ↦ down(x, a)` is a bijection.
    /// On success returns the row inverses `(up_inv, down_inv)`.
    pub fn verify_birack(&self) -> Result<RowInverses, BirackFailure> {
        let up_inv =
            row_inverse(self.n, |x, a| self.up(x, a)).map_err(|element| BirackFailure {
                op: RowOp::Up,
                element,
            })?;
        let down_inv =
            row_inverse(self.n, |x, a| self.down(x, a)).map_err(|element| BirackFailure {
                op: RowOp::Down,
                element,
            })?;
        Ok(RowInverses { up_inv, down_inv })
    }

    /// Checks the diagonal identities B1 and B2 for every element.
    pub fn verify_biquandle(&self, rows: &RowInverses) -> Result<(), BiquandleFailure> {
        let n = self.n;
        for a in 0..n {
            let d = rows.down_inv[a * n + a] as usize;
            if rows.up_inv[a * n + a] as usize != self.down(a, d) {
                return Err(BiquandleFailure {
                    axiom: BiquandleAxiom::B1,
                    element: a,
                });
            }
            if d != self.up(a, d) {
                return Err(BiquandleFailure {
                    axiom: BiquandleAxiom::B2,
                    element: a,
                });
            }
        }
        Ok(())
    }

    /// Runs the verifiers in order, stopping at the first failing level.
    pub fn verify_all(&self) -> VerificationReport {
        let switch = self.verify_switch();
        let birack = switch.is_ok().then(|| self.verify_birack());
        let biquandle = match &birack {
            Some(Ok(rows)) => Some(self.verify_biquandle(rows)),
            _ => None,
        };
        VerificationReport {
            switch,
            birack: birack.map(|r| r.map(|_| ())),
            biquandle,
        }
    }
}

/// Row inverses of the up and down operations:
/// `up_inv(up(x, a), a) = x`, `down_inv(down(x, a), a) = x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowInverses {
    up_inv: Vec<u32>,
    down_inv: Vec<u32>,
}

/// Outcome of [`SwitchTables::verify_all`]. Later levels are `None` when an
/// earlier one failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub switch: Result<(), SwitchFailure>,
    pub birack: Option<Result<(), BirackFailure>>,
    pub biquandle: Option<Result<(), BiquandleFailure>>,
}

impl VerificationReport {
    pub fn all_ok(&self) -> bool {
        self.switch.is_ok()
            && matches!(self.birack, Some(Ok(())))
            && matches!(self.biquandle, Some(Ok(())))
    }

    pub fn level(&self) -> Option<Level> {
        if self.switch.is_err() {
            None
        } else if !matches!(self.birack, Some(Ok(()))) {
            Some(Level::Switch)
        } else if !matches!(self.biquandle, Some(Ok(()))) {
            Some(Level::Birack)
        } else {
            Some(Level::Biquandle)
        }
    }
}

/// Inverts each row map `x ↦ f(x, a)`; `Err(a)` names the first row that is
/// not a bijection. Result is indexed `[y * n + a]`.
fn row_inverse(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Vec<u32>, usize> {
    let mut inv = vec![u32::MAX; n * n];
    for a in 0..n {
        for x in 0..n {
            let y = f(x, a);
            if inv[y * n + a] != u32::MAX {
                return Err(a);
            }
            inv[y * n + a] = x as u32;
        }
    }
    Ok(inv)
}

/// Caches that exist only at birack level or above.
#[derive(Debug, Clone)]
struct BirackCaches {
    rows: RowInverses,
    upbar_inv: Vec<u32>,
    downbar_inv: Vec<u32>,
}

/// A verified finite switch together with every derived operation table.
///
/// Construction always runs the verifiers; [`FiniteBiquandle::level`]
/// records the highest level reached. Values are immutable.
#[derive(Debug, Clone)]
pub struct FiniteBiquandle {
    tables: SwitchTables,
    upbar: Vec<u32>,
    downbar: Vec<u32>,
    birack: Option<BirackCaches>,
    level: Level,
    names: Vec<String>,
}

impl FiniteBiquandle {
    /// Verifies `tables` and derives the bar operations and inverse caches.
    /// Fails only if the tables are not a switch.
    pub fn from_tables(tables: SwitchTables) -> Result<Self, AlgebraError> {
        tables.verify_switch().map_err(AlgebraError::NotASwitch)?;
        let n = tables.n;
        let (upbar, downbar) = bar_tables(&tables).map_err(AlgebraError::NotASwitch)?;

        let (birack, level) = match tables.verify_birack() {
            Err(_) => (None, Level::Switch),
            Ok(rows) => {
                let upbar_inv = row_inverse(n, |x, a| upbar[x * n + a] as usize).map_err(|a| {
                    AlgebraError::Internal(format!("x -> upbar(x, {a}) is not a bijection"))
                })?;
                let downbar_inv =
                    row_inverse(n, |x, a| downbar[x * n + a] as usize).map_err(|a| {
                        AlgebraError::Internal(format!("x -> downbar(x, {a}) is not a bijection"))
                    })?;
                let level = if tables.verify_biquandle(&rows).is_ok() {
                    Level::Biquandle
                } else {
                    Level::Birack
                };
                (
                    Some(BirackCaches {
                        rows,
                        upbar_inv,
                        downbar_inv,
                    }),
                    level,
                )
            }
        };

        Ok(Self {
            upbar,
            downbar,
            birack,
            level,
            names: (0..n).map(|i| i.to_string()).collect(),
            tables,
        })
    }

    /// Like [`FiniteBiquandle::from_tables`] but fails unless `required` is reached.
    pub fn with_level(tables: SwitchTables, required: Level) -> Result<Self, AlgebraError> {
        let b = Self::from_tables(tables)?;
        b.require(required)?;
        Ok(b)
    }

    pub fn require(&self, required: Level) -> Result<(), AlgebraError> {
        if self.level < required {
            return Err(AlgebraError::LevelTooLow {
                required,
                actual: self.level,
            });
        }
        Ok(())
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, AlgebraError> {
        if names.len() != self.size() {
            return Err(AlgebraError::MalformedTable(format!(
                "{} names for {} elements",
                names.len(),
                self.size()
            )));
        }
        self.names = names;
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.tables.n
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn tables(&self) -> &SwitchTables {
        &self.tables
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    /// Looks an element up by display name (whitespace-insensitive), falling
    /// back to its index.
    pub fn element(&self, text: &str) -> Option<usize> {
        let key: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        self.names
            .iter()
            .position(|name| *name == key)
            .or_else(|| key.parse().ok().filter(|&i| i < self.size()))
    }

    #[inline]
    pub fn up(&self, a: usize, b: usize) -> usize {
        self.tables.up(a, b)
    }

    #[inline]
    pub fn down(&self, a: usize, b: usize) -> usize {
        self.tables.down(a, b)
    }

    #[inline]
    pub fn switch(&self, a: usize, b: usize) -> (usize, usize) {
        self.tables.switch(a, b)
    }

    /// `x^ā`.
    #[inline]
    pub fn upbar(&self, x: usize, a: usize) -> usize {
        self.upbar[x * self.size() + a] as usize
    }

    /// `x_ā`.
    #[inline]
    pub fn downbar(&self, x: usize, a: usize) -> usize {
        self.downbar[x * self.size() + a] as usize
    }

    #[inline]
    pub fn switch_inverse(&self, a: usize, b: usize) -> (usize, usize) {
        (self.upbar(b, a), self.downbar(a, b))
    }

    /// `(f^a)⁻¹(x)`; `None` below birack level.
    #[inline]
    pub fn up_inv(&self, x: usize, a: usize) -> Option<usize> {
        self.cached(|c| &c.rows.up_inv, x, a)
    }

    /// `(f_a)⁻¹(x)`; `None` below birack level.
    #[inline]
    pub fn down_inv(&self, x: usize, a: usize) -> Option<usize> {
        self.cached(|c| &c.rows.down_inv, x, a)
    }

    #[inline]
    pub fn upbar_inv(&self, x: usize, a: usize) -> Option<usize> {
        self.cached(|c| &c.upbar_inv, x, a)
    }

    #[inline]
    pub fn downbar_inv(&self, x: usize, a: usize) -> Option<usize> {
        self.cached(|c| &c.downbar_inv, x, a)
    }

    #[inline]
    fn cached(
        &self,
        pick: impl Fn(&BirackCaches) -> &Vec<u32>,
        x: usize,
        a: usize,
    ) -> Option<usize> {
        let n = self.size();
        self.birack.as_ref().map(|c| pick(c)[x * n + a] as usize)
    }

    /// Identity-table switch `S(a, b) = (b, a)` on `n` elements.
    pub fn swap(n: usize) -> Self {
        let tables = SwitchTables::from_fn(n, |a, _| a, |a, _| a).expect("in range");
        Self::from_tables(tables).expect("the swap is a biquandle")
    }
}

/// Reads `upbar` and `downbar` off the explicit inverse of the pair map:
/// `S⁻¹(a, b) = (upbar(b, a), downbar(a, b))`. Both results are indexed
/// `[x * n + a]` for `x` acted on by `a`.
fn bar_tables(t: &SwitchTables) -> Result<(Vec<u32>, Vec<u32>), SwitchFailure> {
    let n = t.n;
    let inverse = t.invert_pairs()?;
    let mut upbar = vec![0; n * n];
    let mut downbar = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            let (x, y) = inverse[a * n + b];
            upbar[b * n + a] = x;
            downbar[a * n + b] = y;
        }
    }
    Ok((upbar, downbar))
}

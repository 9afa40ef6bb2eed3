//! Colored biquandle longitudes and the invariant sums built from them.
//!
//! Walking a colored code from left to right, each pass contributes one
//! up-operator token. At a crossing with incidence colors `under_in`,
//! `under_out`, `over_in`, `over_out`:
//!
//! | pass        | element     | exponent |
//! |-------------|-------------|----------|
//! | under, `+`  | `over_in`   | `+1`     |
//! | over, `+`   | `under_out` | `-1`     |
//! | under, `-`  | `over_out`  | `-1`     |
//! | over, `-`   | `under_in`  | `+1`     |
//!
//! The word acts on `x` by folding left: `+1` applies `x ↦ x^u` and `-1`
//! applies the inverse of that row map.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{FiniteBiquandle, Level};
use crate::coloring::{check_coloring, Coloring, Solver};
use crate::diagram::{LongGaussCode, Role, Sign};
use crate::error::ColoringError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Token {
    pub element: usize,
    pub exponent: i8,
}

impl Token {
    pub fn new(element: usize, exponent: i8) -> Self {
        Self { element, exponent }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct LongitudeWord {
    tokens: Vec<Token>,
}

impl LongitudeWord {
    pub fn new(tokens: Vec<Token>) -> Self {
        Self { tokens }
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }
}

/// `images[x] = L(C)(x)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct LongitudeMap {
    images: Vec<usize>,
}

impl LongitudeMap {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }
}

/// The multiset `{L(C) : C ∈ Col(D, B, p)}` as a sorted list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct InvariantFamily {
    maps: Vec<LongitudeMap>,
}

impl InvariantFamily {
    pub fn maps(&self) -> &[LongitudeMap] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }
}

/// The formal sum `Σ_C L(C)(x)` as a sorted multiset of elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct InvariantSum {
    terms: Vec<usize>,
}

impl InvariantSum {
    pub fn from_terms(mut terms: Vec<usize>) -> Self {
        terms.sort_unstable();
        Self { terms }
    }

    pub fn terms(&self) -> &[usize] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Which token table to use. Only `Standard` gives an invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TokenRule {
    #[default]
    Standard,
    /// Over/+ passes contribute `(under_out, +1)`. Used to check that the
    /// move harness catches a wrong rule.
    FlippedOverPositive,
}

fn words_of(
    code: &LongGaussCode,
    rule: TokenRule,
) -> impl Fn(&[usize]) -> LongitudeWord + Sync + '_ {
    let inc = code.incidence();
    move |colors: &[usize]| {
        let tokens = code
            .passes()
            .iter()
            .enumerate()
            .map(|(k, pass)| {
                let c = inc.for_pass(k);
                let (segment, exponent) = match (pass.role, pass.sign) {
                    (Role::Under, Sign::Positive) => (c.over_in, 1),
                    (Role::Over, Sign::Positive) => match rule {
                        TokenRule::Standard => (c.under_out, -1),
                        TokenRule::FlippedOverPositive => (c.under_out, 1),
                    },
                    (Role::Under, Sign::Negative) => (c.over_out, -1),
                    (Role::Over, Sign::Negative) => (c.under_in, 1),
                };
                Token::new(colors[segment], exponent)
            })
            .collect();
        LongitudeWord::new(tokens)
    }
}

pub fn extract_word(
    code: &LongGaussCode,
    b: &FiniteBiquandle,
    coloring: &Coloring,
) -> Result<LongitudeWord, ColoringError> {
    extract_word_with(code, b, coloring, TokenRule::Standard)
}

pub fn extract_word_with(
    code: &LongGaussCode,
    b: &FiniteBiquandle,
    coloring: &Coloring,
    rule: TokenRule,
) -> Result<LongitudeWord, ColoringError> {
    check_coloring(code, b, coloring)?;
    Ok(words_of(code, rule)(coloring.colors()))
}

pub fn apply_word(
    b: &FiniteBiquandle,
    word: &LongitudeWord,
    x: usize,
) -> Result<usize, ColoringError> {
    if b.level() < Level::Birack {
        return Err(ColoringError::NotBirack(b.level()));
    }
    if let Some(t) = word.tokens.iter().find(|t| t.element >= b.size()) {
        return Err(ColoringError::OutOfRange {
            segment: 0,
            value: t.element,
        });
    }
    if x >= b.size() {
        return Err(ColoringError::OutOfRange {
            segment: 0,
            value: x,
        });
    }
    Ok(fold(b, word, x))
}

fn fold(b: &FiniteBiquandle, word: &LongitudeWord, x: usize) -> usize {
    word.tokens.iter().fold(x, |x, t| {
        if t.exponent > 0 {
            b.up(x, t.element)
        } else {
            b.up_inv(x, t.element).expect("birack checked by caller")
        }
    })
}

fn map_of_word(b: &FiniteBiquandle, word: &LongitudeWord) -> Result<LongitudeMap, ColoringError> {
    let images: Vec<usize> = (0..b.size()).map(|x| fold(b, word, x)).collect();
    let mut hit = vec![false; b.size()];
    for &y in &images {
        if std::mem::replace(&mut hit[y], true) {
            return Err(ColoringError::Internal(format!(
                "longitude map of {word:?} is not a bijection"
            )));
        }
    }
    Ok(LongitudeMap { images })
}

pub fn longitude_map(
    code: &LongGaussCode,
    b: &FiniteBiquandle,
    coloring: &Coloring,
) -> Result<LongitudeMap, ColoringError> {
    let word = extract_word(code, b, coloring)?;
    if b.level() < Level::Birack {
        return Err(ColoringError::NotBirack(b.level()));
    }
    map_of_word(b, &word)
}

pub fn invariant_family(
    code: &LongGaussCode,
    b: &FiniteBiquandle,
    initial: usize,
) -> Result<InvariantFamily, ColoringError> {
    invariant_family_with(code, b, initial, TokenRule::Standard)
}

pub fn invariant_family_with(
    code: &LongGaussCode,
    b: &FiniteBiquandle,
    initial: usize,
    rule: TokenRule,
) -> Result<InvariantFamily, ColoringError> {
    if b.level() < Level::Biquandle {
        return Err(ColoringError::NotBiquandle(b.level()));
    }
    if initial >= b.size() {
        return Err(ColoringError::OutOfRange {
            segment: 0,
            value: initial,
        });
    }
    let colorings = Solver::new(code, b)?.collect(initial);
    let word = words_of(code, rule);
    let mut maps = colorings
        .par_iter()
        .map(|c| map_of_word(b, &word(c.colors())))
        .collect::<Result<Vec<_>, _>>()?;
    maps.sort_unstable();
    Ok(InvariantFamily { maps })
}

/// One family per initial color, computed in parallel.
pub fn invariant_families(
    code: &LongGaussCode,
    b: &FiniteBiquandle,
    rule: TokenRule,
) -> Result<Vec<InvariantFamily>, ColoringError> {
    (0..b.size())
        .into_par_iter()
        .map(|p| invariant_family_with(code, b, p, rule))
        .collect()
}

pub fn invariant_sum(
    code: &LongGaussCode,
    b: &FiniteBiquandle,
    initial: usize,
    x: usize,
) -> Result<InvariantSum, ColoringError> {
    if x >= b.size() {
        return Err(ColoringError::OutOfRange {
            segment: 0,
            value: x,
        });
    }
    let family = invariant_family(code, b, initial)?;
    Ok(InvariantSum::from_terms(
        family.maps.iter().map(|m| m.apply(x)).collect(),
    ))
}

/// One canonical entry of a family or a sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Entry {
    Map(LongitudeMap),
    Element(usize),
}

/// The first index where two canonical lists disagree. A missing side
/// means that list ended first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Difference {
    pub index: usize,
    pub left: Option<Entry>,
    pub right: Option<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    Different(Difference),
}

impl Comparison {
    pub fn is_equal(&self) -> bool {
        matches!(self, Comparison::Equal)
    }
}

fn first_difference<T: Clone + Ord>(
    left: &[T],
    right: &[T],
    wrap: impl Fn(T) -> Entry,
) -> Comparison {
    let n = left.len().max(right.len());
    for index in 0..n {
        let (l, r) = (left.get(index), right.get(index));
        if l.cmp(&r) != Ordering::Equal {
            return Comparison::Different(Difference {
                index,
                left: l.cloned().map(&wrap),
                right: r.cloned().map(&wrap),
            });
        }
    }
    Comparison::Equal
}

/// Compares the two families, or the two sums at `x` when given.
pub fn compare_invariants(
    first: &LongGaussCode,
    second: &LongGaussCode,
    b: &FiniteBiquandle,
    initial: usize,
    x: Option<usize>,
) -> Result<Comparison, ColoringError> {
    match x {
        Some(x) => {
            let l = invariant_sum(first, b, initial, x)?;
            let r = invariant_sum(second, b, initial, x)?;
            Ok(first_difference(&l.terms, &r.terms, Entry::Element))
        }
        None => {
            let l = invariant_family(first, b, initial)?;
            let r = invariant_family(second, b, initial)?;
            Ok(first_difference(&l.maps, &r.maps, Entry::Map))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{alexander_biquandle, wada_biquandle, FiniteGroup};
    use crate::coloring::enumerate_colorings;

    fn code(s: &str) -> LongGaussCode {
        s.parse().unwrap()
    }

    #[test]
    fn apply_word_examples() {
        let b = wada_biquandle(&FiniteGroup::cyclic(5).unwrap()).unwrap();
        let w = LongitudeWord::new(vec![Token::new(2, 1)]);
        assert_eq!(apply_word(&b, &w, 1), Ok(0));
        assert_eq!(apply_word(&b, &LongitudeWord::default(), 3), Ok(3));
        for u in 0..5 {
            let w = LongitudeWord::new(vec![Token::new(u, 1), Token::new(u, -1)]);
            for x in 0..5 {
                assert_eq!(apply_word(&b, &w, x), Ok(x));
            }
        }
    }

    #[test]
    fn trefoil_word_shape() {
        // Tokens are (b, +), (b_a, +), (a^b, -), (b, -) with a, b the
        // incoming colors at crossing 1.
        let b = alexander_biquandle(7, 2, 3).unwrap();
        let d = code("U1+ U2+ O1+ O2+");
        let colorings = enumerate_colorings(&d, &b, None).unwrap();
        assert!(!colorings.is_empty());
        for c in &colorings {
            let s = c.colors();
            let (a, bb) = (s[0], s[2]);
            let w = extract_word(&d, &b, c).unwrap();
            let expected = vec![
                Token::new(bb, 1),
                Token::new(b.down(bb, a), 1),
                Token::new(b.up(a, bb), -1),
                Token::new(bb, -1),
            ];
            assert_eq!(w.tokens(), expected.as_slice());
        }
    }

    #[test]
    fn reversed_trefoil_word_shape() {
        // Tokens are (b^a, -), (b^{a a_b}, -), (a, +), (a_b, +) with a the
        // initial color and b the under-in color of crossing 2.
        let b = alexander_biquandle(7, 2, 3).unwrap();
        let d = code("O2+ O1+ U2+ U1+");
        for c in enumerate_colorings(&d, &b, None).unwrap() {
            let s = c.colors();
            let (a, bb) = (s[0], s[2]);
            let a_b = b.down(a, bb);
            let w = extract_word(&d, &b, &c).unwrap();
            let expected = vec![
                Token::new(b.up(bb, a), -1),
                Token::new(b.up(b.up(bb, a), a_b), -1),
                Token::new(a, 1),
                Token::new(a_b, 1),
            ];
            assert_eq!(w.tokens(), expected.as_slice());
        }
    }

    #[test]
    fn empty_code_gives_identity() {
        let b = alexander_biquandle(5, 2, 3).unwrap();
        let e = LongGaussCode::empty();
        let c = Coloring::new(vec![4]);
        assert!(extract_word(&e, &b, &c).unwrap().is_empty());
        assert!(longitude_map(&e, &b, &c).unwrap().is_identity());
        let fam = invariant_family(&e, &b, 4).unwrap();
        assert_eq!(fam.maps(), &[LongitudeMap::identity(5)]);
        assert_eq!(invariant_sum(&e, &b, 0, 2).unwrap().terms(), &[2]);
    }

    #[test]
    fn extract_word_rejects_invalid_colorings() {
        let b = FiniteBiquandle::swap(3);
        let d = code("U1+ O1+");
        assert_eq!(
            extract_word(&d, &b, &Coloring::new(vec![0, 1, 0])),
            Err(ColoringError::Violation { crossing: 1 })
        );
    }

    #[test]
    fn kink_tokens_cancel() {
        let b = alexander_biquandle(5, 2, 3).unwrap();
        for k in ["U1+ O1+", "O1+ U1+", "U1- O1-", "O1- U1-"] {
            let d = code(k);
            for c in enumerate_colorings(&d, &b, None).unwrap() {
                let w = extract_word(&d, &b, &c).unwrap();
                let t = w.tokens();
                assert_eq!(t[0].element, t[1].element, "{k}");
                assert_eq!(t[0].exponent, -t[1].exponent, "{k}");
            }
        }
    }

    #[test]
    fn comparison_witnesses() {
        let b = alexander_biquandle(5, 2, 3).unwrap();
        let d = code("U1+ U2+ O1+ O2+");
        assert!(compare_invariants(&d, &d, &b, 1, None).unwrap().is_equal());
        assert!(compare_invariants(&d, &d, &b, 1, Some(3))
            .unwrap()
            .is_equal());
        assert_eq!(
            first_difference(&[1, 2], &[1], Entry::Element),
            Comparison::Different(Difference {
                index: 1,
                left: Some(Entry::Element(2)),
                right: None
            })
        );
    }

    #[test]
    fn families_need_a_biquandle() {
        let shift: Vec<Vec<usize>> = (0..3).map(|a| vec![(a + 1) % 3; 3]).collect();
        let birack = crate::algebra::rack_switch(&shift).unwrap();
        assert_eq!(
            invariant_family(&LongGaussCode::empty(), &birack, 0),
            Err(ColoringError::NotBiquandle(Level::Birack))
        );
    }
}

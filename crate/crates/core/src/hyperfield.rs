//! Hyperaddition on 𝕋 and the extended tropical semiring.
//!
//! In 𝕋 the sum `a ⊞ b` is `{max(a, b)}` when `a != b` and the interval
//! `[0, a]` when `a == b`. Every iterated hypersum is again a singleton or an
//! interval starting at zero, so both shapes are kept symbolically.

use std::fmt;

use serde::Serialize;

use crate::scalar::TropValue;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum HyperSet {
    Singleton(TropValue),
    /// The closed interval `[0, t]`.
    Interval0(TropValue),
}

impl HyperSet {
    /// `[0, t]`, with `[0, 0]` normalised to the singleton `{0}`.
    pub fn interval(t: TropValue) -> Self {
        if t.is_zero() {
            HyperSet::Singleton(t)
        } else {
            HyperSet::Interval0(t)
        }
    }

    pub fn contains(&self, x: &TropValue) -> bool {
        match self {
            HyperSet::Singleton(t) => x == t,
            HyperSet::Interval0(t) => x <= t,
        }
    }

    pub fn max(&self) -> &TropValue {
        match self {
            HyperSet::Singleton(t) | HyperSet::Interval0(t) => t,
        }
    }
}

impl fmt::Display for HyperSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HyperSet::Singleton(t) => write!(f, "{{{t}}}"),
            HyperSet::Interval0(t) => write!(f, "[0, {t}]"),
        }
    }
}

pub fn hypersum(a: &TropValue, b: &TropValue) -> HyperSet {
    if a == b {
        HyperSet::interval(a.clone())
    } else {
        HyperSet::Singleton(a.max(b).clone())
    }
}

/// Number of times the maximum of `values` is attained, with the maximum.
fn max_with_count<'a>(values: impl IntoIterator<Item = &'a TropValue>) -> Option<(&'a TropValue, usize)> {
    let mut best: Option<(&TropValue, usize)> = None;
    for v in values {
        best = match best {
            Some((m, k)) if v == m => Some((m, k + 1)),
            Some((m, k)) if v < m => Some((m, k)),
            _ => Some((v, 1)),
        };
    }
    best
}

/// `b_1 ⊞ ... ⊞ b_n`: an interval when the maximum repeats, a singleton otherwise.
pub fn hypersum_n(values: &[TropValue]) -> Result<HyperSet> {
    let (max, count) = max_with_count(values).ok_or(Error::EmptyHypersum)?;
    Ok(if count >= 2 { HyperSet::interval(max.clone()) } else { HyperSet::Singleton(max.clone()) })
}

/// Decides `c <= b_1 + ... + b_n` in 𝕋: the maximum among `c, b_1, ..., b_n`
/// occurs at least twice. An empty right-hand side is the relation `c <= 0`.
pub fn leq_t(c: &TropValue, summands: &[TropValue]) -> bool {
    if summands.is_empty() {
        return c.is_zero();
    }
    let (_, count) = max_with_count(std::iter::once(c).chain(summands)).expect("nonempty");
    count >= 2
}

/// Elements of the extended tropical semiring: singletons `{a}` and ghosts `[0, a]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ExtendedTropElement {
    Point(TropValue),
    Ghost(TropValue),
}

impl ExtendedTropElement {
    /// `Ghost(0)` is the zero element `{0}`.
    pub fn ghost(t: TropValue) -> Self {
        if t.is_zero() {
            ExtendedTropElement::Point(t)
        } else {
            ExtendedTropElement::Ghost(t)
        }
    }

    pub fn zero() -> Self {
        ExtendedTropElement::Point(TropValue::zero())
    }

    pub fn level(&self) -> &TropValue {
        match self {
            ExtendedTropElement::Point(t) | ExtendedTropElement::Ghost(t) => t,
        }
    }

    pub fn as_set(&self) -> HyperSet {
        match self {
            ExtendedTropElement::Point(t) => HyperSet::Singleton(t.clone()),
            ExtendedTropElement::Ghost(t) => HyperSet::interval(t.clone()),
        }
    }

    fn is_ghost(&self) -> bool {
        matches!(self, ExtendedTropElement::Ghost(_))
    }
}

impl fmt::Display for ExtendedTropElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedTropElement::Point(t) => write!(f, "{t}"),
            ExtendedTropElement::Ghost(t) => write!(f, "{t}^ν"),
        }
    }
}

/// Union of the pairwise hypersums of representatives.
pub fn ext_add(x: &ExtendedTropElement, y: &ExtendedTropElement) -> ExtendedTropElement {
    use std::cmp::Ordering::*;
    use ExtendedTropElement::*;
    match (x, y) {
        (Point(a), Point(b)) => match a.cmp(b) {
            Equal => ExtendedTropElement::ghost(a.clone()),
            Less => Point(b.clone()),
            Greater => Point(a.clone()),
        },
        _ => {
            // At least one ghost: the larger level wins, and a tie keeps the ghost.
            match x.level().cmp(y.level()) {
                Greater => x.clone(),
                Less => y.clone(),
                Equal => ExtendedTropElement::ghost(x.level().clone()),
            }
        }
    }
}

/// Elementwise product of the underlying sets.
pub fn ext_mul(x: &ExtendedTropElement, y: &ExtendedTropElement) -> ExtendedTropElement {
    let level = x.level() * y.level();
    if x.is_ghost() || y.is_ghost() {
        ExtendedTropElement::ghost(level)
    } else {
        ExtendedTropElement::Point(level)
    }
}

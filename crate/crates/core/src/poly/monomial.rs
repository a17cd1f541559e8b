use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalar::TropValue;
use crate::{Error, Result};

/// The monoid `A` of (Laurent) monomials in `T1, ..., Tn`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonoidSignature {
    pub num_vars: usize,
    pub laurent: bool,
}

impl MonoidSignature {
    pub fn new(num_vars: usize, laurent: bool) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::InvalidSignature("at least one variable required".into()));
        }
        Ok(MonoidSignature { num_vars, laurent })
    }

    pub fn polynomial(num_vars: usize) -> Self {
        Self::new(num_vars, false).expect("num_vars >= 1")
    }

    pub fn check(&self, m: &Monomial) -> Result<()> {
        if m.exponents().len() != self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, found: m.exponents().len() });
        }
        if !self.laurent && m.exponents().iter().any(|&e| e < 0) {
            return Err(Error::InvalidSignature(format!(
                "monomial {m} has a negative exponent in a non-Laurent signature"
            )));
        }
        Ok(())
    }
}

/// `T1^e1 * ... * Tn^en`, compared in graded lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<i64>,
}

impl Monomial {
    pub fn new(exps: Vec<i64>) -> Self {
        Monomial { exps }
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial { exps: vec![0; num_vars] }
    }

    pub fn var(num_vars: usize, index: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> i64 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    /// `self / other` when every exponent stays nonnegative (or always, if `laurent`).
    pub fn div(&self, other: &Monomial, laurent: bool) -> Option<Monomial> {
        let exps: Vec<i64> = self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect();
        (laurent || exps.iter().all(|&e| e >= 0)).then_some(Monomial { exps })
    }

    /// `x^a = prod x_i^(a_i)` in 𝕋.
    pub fn eval(&self, point: &[TropValue]) -> Result<TropValue> {
        if point.len() != self.exps.len() {
            return Err(Error::DimensionMismatch { expected: self.exps.len(), found: point.len() });
        }
        let mut acc = TropValue::one();
        for (x, &e) in point.iter().zip(&self.exps) {
            if e != 0 {
                acc = &acc * &x.pow(e)?;
            }
        }
        Ok(acc)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "T{}", i + 1)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::{Error, Result};

/// An element of the underlying monoid of 𝕋: a nonnegative rational under
/// ordinary multiplication. Zero is the absorbing element and the neutral
/// element of hyperaddition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TropValue(Rational);

impl TropValue {
    pub fn new(value: Rational) -> Result<Self> {
        if value.is_negative() {
            return Err(Error::NegativeTropValue(value.to_string()));
        }
        Ok(TropValue(value))
    }

    /// `n / d` for nonnegative literals; panics otherwise.
    pub fn ratio(n: i64, d: i64) -> Self {
        Self::new(Rational::ratio(n, d)).expect("nonnegative literal")
    }

    pub fn from_integer(n: u64) -> Self {
        TropValue(Rational::from_integer(n))
    }

    pub fn zero() -> Self {
        TropValue(Rational::zero())
    }

    pub fn one() -> Self {
        TropValue(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_rational(self) -> Rational {
        self.0
    }

    pub fn pow(&self, exp: i64) -> Result<Self> {
        Ok(TropValue(self.0.pow(exp)?))
    }

    /// Multiplicative inverse of a nonzero value.
    pub fn recip(&self) -> Result<Self> {
        Ok(TropValue(self.0.recip()?))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }
}

impl From<u64> for TropValue {
    fn from(n: u64) -> Self {
        TropValue::from_integer(n)
    }
}

impl TryFrom<Rational> for TropValue {
    type Error = Error;
    fn try_from(q: Rational) -> Result<Self> {
        TropValue::new(q)
    }
}

impl Mul<&TropValue> for &TropValue {
    type Output = TropValue;
    fn mul(self, rhs: &TropValue) -> TropValue {
        TropValue(&self.0 * &rhs.0)
    }
}

impl Mul for TropValue {
    type Output = TropValue;
    fn mul(self, rhs: TropValue) -> TropValue {
        TropValue(self.0 * rhs.0)
    }
}

impl fmt::Display for TropValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for TropValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for TropValue {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TropValue::new(s.parse()?)
    }
}

impl Serialize for TropValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TropValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let q = Rational::deserialize(deserializer)?;
        TropValue::new(q).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_negative() {
        assert!(TropValue::new(Rational::ratio(-1, 2)).is_err());
        assert!("-3".parse::<TropValue>().is_err());
        assert!(serde_json::from_str::<TropValue>("\"-1/1\"").is_err());
    }

    #[test]
    fn multiplicative_monoid() {
        let a = TropValue::ratio(2, 3);
        let b = TropValue::ratio(9, 4);
        assert_eq!(&a * &b, TropValue::ratio(3, 2));
        assert_eq!(&a * &TropValue::zero(), TropValue::zero());
        assert_eq!(&a * &TropValue::one(), a);
    }
}

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Rational, TropValue};
use crate::{Error, Result};

/// A rational prime, checked by trial division at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The p-adic order of a rational. Zero has order +∞, which is its own tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PadicOrder {
    Finite(i64),
    Infinity,
}

impl fmt::Display for PadicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PadicOrder::Finite(n) => write!(f, "{n}"),
            PadicOrder::Infinity => write!(f, "+inf"),
        }
    }
}

fn multiplicity(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

/// `ord_p(numerator) - ord_p(denominator)`, or +∞ for zero.
pub fn padic_valuation(a: &Rational, p: Prime) -> PadicOrder {
    if a.is_zero() {
        return PadicOrder::Infinity;
    }
    let p = BigInt::from(p.get());
    PadicOrder::Finite(multiplicity(a.numer(), &p) - multiplicity(a.denom(), &p))
}

/// A nonarchimedean absolute value on ℚ, read as a morphism into 𝕋.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    Trivial,
    Padic(Prime),
}

impl Valuation {
    pub fn padic(p: u64) -> Result<Self> {
        Ok(Valuation::Padic(Prime::new(p)?))
    }

    /// `v(a)`: 0 for a = 0; otherwise 1 (trivial) or `p^(-ord_p a)`.
    pub fn apply(&self, a: &Rational) -> TropValue {
        match self {
            Valuation::Trivial if a.is_zero() => TropValue::zero(),
            Valuation::Trivial => TropValue::one(),
            Valuation::Padic(p) => match padic_valuation(a, *p) {
                PadicOrder::Infinity => TropValue::zero(),
                PadicOrder::Finite(k) => {
                    let base = Rational::from_integer(p.get());
                    TropValue::new(base.pow(-k).expect("nonzero base")).expect("powers of a prime are positive")
                }
            },
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Trivial => f.write_str("trivial"),
            Valuation::Padic(p) => write!(f, "padic:{}", p.get()),
        }
    }
}

impl FromStr for Valuation {
    type Err = Error;

    /// `trivial` or `padic:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("trivial") {
            return Ok(Valuation::Trivial);
        }
        match s.split_once(':') {
            Some((tag, p)) if tag.eq_ignore_ascii_case("padic") => {
                let p: u64 =
                    p.trim().parse().map_err(|_| Error::Config(format!("invalid prime in valuation {s:?}")))?;
                Valuation::padic(p)
            }
            _ => Err(Error::Config(format!("unknown valuation {s:?}; expected trivial or padic:<p>"))),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Valuation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A failed axiom instance found by [`check_seminorm_axioms`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub axiom: &'static str,
    pub a: Rational,
    pub b: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SeminormReport {
    pub checked: usize,
    pub violations: Vec<AxiomViolation>,
}

impl SeminormReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `v(ab) = v(a)v(b)` and `v(a+b) <= max(v(a), v(b))` on every pair,
/// plus `v(0) = 0` and `v(1) = 1` once.
pub fn check_seminorm_axioms(v: &Valuation, samples: &[(Rational, Rational)]) -> SeminormReport {
    let mut report = SeminormReport::default();
    if !v.apply(&Rational::zero()).is_zero() || !v.apply(&Rational::one()).is_one() {
        report.violations.push(AxiomViolation { axiom: "unit", a: Rational::zero(), b: Rational::one() });
    }
    for (a, b) in samples {
        report.checked += 1;
        let (va, vb) = (v.apply(a), v.apply(b));
        if v.apply(&(a * b)) != &va * &vb {
            report.violations.push(AxiomViolation { axiom: "multiplicative", a: a.clone(), b: b.clone() });
        }
        if v.apply(&(a + b)) > va.max(vb) {
            report.violations.push(AxiomViolation { axiom: "ultrametric", a: a.clone(), b: b.clone() });
        }
    }
    report
}

/// For `a = b_1 + ... + b_n`, whether the maximum among `v(a), v(b_1), ..., v(b_n)`
/// is attained at least twice.
pub fn strong_triangle_holds(v: &Valuation, parts: &[Rational]) -> bool {
    let total: Rational = parts.iter().cloned().sum();
    let mut values: Vec<TropValue> = parts.iter().map(|b| v.apply(b)).collect();
    values.push(v.apply(&total));
    let max = values.iter().max().cloned().unwrap_or_default();
    // All-zero means every term vanished; the maximum 0 then repeats trivially.
    max.is_zero() || values.iter().filter(|t| **t == max).count() >= 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn primes_checked() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(97).is_ok());
        assert_eq!(Prime::new(1), Err(Error::NotPrime(1)));
        assert_eq!(Prime::new(9), Err(Error::NotPrime(9)));
        assert!("padic:4".parse::<Valuation>().is_err());
    }

    #[test]
    fn padic_orders() {
        let three = Prime::new(3).unwrap();
        assert_eq!(padic_valuation(&q(6, 1), three), PadicOrder::Finite(1));
        assert_eq!(padic_valuation(&q(0, 1), Prime::new(5).unwrap()), PadicOrder::Infinity);
        assert_eq!(padic_valuation(&q(9, 2), three), PadicOrder::Finite(2));
        assert_eq!(padic_valuation(&q(-5, 18), three), PadicOrder::Finite(-2));
    }

    #[test]
    fn apply_examples() {
        assert_eq!(Valuation::Trivial.apply(&q(7, 5)), TropValue::one());
        assert_eq!(Valuation::Trivial.apply(&q(0, 1)), TropValue::zero());
        let v3 = Valuation::padic(3).unwrap();
        assert_eq!(v3.apply(&q(6, 1)), TropValue::ratio(1, 3));
        assert_eq!(v3.apply(&q(0, 1)), TropValue::zero());
        assert_eq!(v3.apply(&q(1, 9)), TropValue::from(9));
    }

    #[test]
    fn cancellation_case() {
        let v2 = Valuation::padic(2).unwrap();
        let report = check_seminorm_axioms(&v2, &[(q(1, 1), q(-1, 1))]);
        assert!(report.passed());
        assert_eq!(v2.apply(&q(0, 1)), TropValue::zero());
    }

    #[test]
    fn valuation_strings() {
        assert_eq!("trivial".parse::<Valuation>().unwrap(), Valuation::Trivial);
        let v: Valuation = "padic:5".parse().unwrap();
        assert_eq!(v.to_string(), "padic:5");
        assert!("adic:5".parse::<Valuation>().is_err());
    }

    #[test]
    fn strong_triangle_on_a_cancelling_sum() {
        let v3 = Valuation::padic(3).unwrap();
        // 1/9 + (-1/9) + 3: v = 9, 9, 1/3 and v(3) = 1/3
        assert!(strong_triangle_holds(&v3, &[q(1, 9), q(-1, 9), q(3, 1)]));
        assert!(strong_triangle_holds(&v3, &[q(0, 1)]));
    }
}

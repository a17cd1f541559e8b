use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::formal_sum::{FieldFormalSum, Term, TermJson, TropFormalSum};
use super::{MonoidSignature, Monomial};
use crate::scalar::{Rational, Valuation};
use crate::{Error, Result};

/// A polynomial over ℚ with nonzero coefficients only.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldPolynomial {
    sig: MonoidSignature,
    terms: BTreeMap<Monomial, Rational>,
}

impl FieldPolynomial {
    pub fn zero(sig: MonoidSignature) -> Self {
        FieldPolynomial { sig, terms: BTreeMap::new() }
    }

    pub fn constant(sig: MonoidSignature, c: Rational) -> Self {
        Self::from_terms(sig, [(Monomial::one(sig.num_vars), c)]).expect("unit monomial fits")
    }

    /// Collects like terms; zero coefficients vanish.
    pub fn from_terms(sig: MonoidSignature, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Result<Self> {
        let mut p = FieldPolynomial::zero(sig);
        for (m, c) in terms {
            sig.check(&m)?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        let sum = match self.terms.remove(&m) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
    }

    pub fn sig(&self) -> MonoidSignature {
        self.sig
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order: graded lex, largest monomial first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<i64> {
        self.leading().map(|(m, _)| m.degree())
    }

    /// The same terms as an element of the free semiring over ℚ^×.
    pub fn to_formal_sum(&self) -> FieldFormalSum {
        FieldFormalSum::from_terms(self.terms().map(|(m, c)| Term::new(c.clone(), m.clone())))
    }

    pub fn add(&self, other: &FieldPolynomial) -> FieldPolynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> FieldPolynomial {
        FieldPolynomial { sig: self.sig, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &FieldPolynomial) -> FieldPolynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FieldPolynomial) -> FieldPolynomial {
        let mut out = FieldPolynomial::zero(self.sig);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> FieldPolynomial {
        if c.is_zero() {
            return FieldPolynomial::zero(self.sig);
        }
        FieldPolynomial { sig: self.sig, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn pow(&self, exp: u32) -> FieldPolynomial {
        let mut acc = FieldPolynomial::constant(self.sig, Rational::one());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Long division in one variable: `(quotient, remainder)`.
    pub fn div_rem_univariate(&self, divisor: &FieldPolynomial) -> Result<(FieldPolynomial, FieldPolynomial)> {
        if self.sig.num_vars != 1 || divisor.sig.num_vars != 1 || self.sig.laurent {
            return Err(Error::InvalidSignature("univariate division needs one non-Laurent variable".into()));
        }
        let (lead_m, lead_c) = divisor.leading().map(|(m, c)| (m.clone(), c.clone())).ok_or(Error::ZeroDenominator)?;
        let mut quotient = FieldPolynomial::zero(self.sig);
        let mut rem = self.clone();
        while let Some((m, c)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let Some(shift) = m.div(&lead_m, false) else { break };
            let factor = c / &lead_c;
            let step = FieldPolynomial::from_terms(self.sig, [(shift, factor)])?;
            quotient = quotient.add(&step);
            rem = rem.sub(&divisor.mul(&step));
        }
        Ok((quotient, rem))
    }

    /// Evaluates a univariate polynomial at a rational point.
    pub fn eval_univariate(&self, x: &Rational) -> Result<Rational> {
        if self.sig.num_vars != 1 {
            return Err(Error::DimensionMismatch { expected: 1, found: self.sig.num_vars });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            acc = acc + c * &x.pow(m.exponents()[0])?;
        }
        Ok(acc)
    }
}

/// `p^trop = sum v(c_a) a`, keeping one term per monomial of `p`.
pub fn tropicalize_poly(p: &FieldPolynomial, v: &Valuation) -> TropFormalSum {
    TropFormalSum::from_terms(p.terms().map(|(m, c)| Term::new(v.apply(c), m.clone())))
}

impl fmt::Display for FieldPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_formal_sum(), f)
    }
}

impl fmt::Debug for FieldPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for FieldPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> =
            self.terms().map(|(m, c)| TermJson { coeff: c.clone(), exps: m.exponents().to_vec() }).collect();
        terms.serialize(serializer)
    }
}

impl FieldPolynomial {
    /// Reads the JSON term list; the signature is supplied by the caller.
    pub fn from_json(value: &serde_json::Value, sig: MonoidSignature) -> Result<Self> {
        let terms: Vec<TermJson> = serde_json::from_value(value.clone()).map_err(|e| Error::Format(e.to_string()))?;
        Self::from_terms(sig, terms.into_iter().map(|t| (Monomial::new(t.exps), t.coeff)))
    }
}

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use super::Monomial;
use crate::scalar::{Rational, TropValue};
use crate::{Error, Result};

/// Coefficients of formal sums: ℚ for presentations over the field, 𝕋 after base change.
pub trait Coefficient: Clone + Ord + Hash + fmt::Display + fmt::Debug + Send + Sync {
    /// Tag used for the coefficient domain in serialized presentations.
    const DOMAIN: &'static str;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn from_rational(q: Rational) -> Result<Self>;
    fn to_rational(&self) -> Rational;
}

impl Coefficient for Rational {
    const DOMAIN: &'static str = "FieldQ";
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn from_rational(q: Rational) -> Result<Self> {
        Ok(q)
    }
    fn to_rational(&self) -> Rational {
        self.clone()
    }
}

impl Coefficient for TropValue {
    const DOMAIN: &'static str = "Trop";
    fn is_zero(&self) -> bool {
        TropValue::is_zero(self)
    }
    fn is_one(&self) -> bool {
        TropValue::is_one(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn from_rational(q: Rational) -> Result<Self> {
        TropValue::new(q)
    }
    fn to_rational(&self) -> Rational {
        self.value().clone()
    }
}

/// A single term `c * a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term<C> {
    pub coeff: C,
    pub monomial: Monomial,
}

impl<C: Coefficient> Term<C> {
    pub fn new(coeff: C, monomial: Monomial) -> Self {
        Term { coeff, monomial }
    }

    pub fn mul(&self, other: &Term<C>) -> Term<C> {
        Term { coeff: self.coeff.mul(&other.coeff), monomial: self.monomial.mul(&other.monomial) }
    }
}

impl<C: Coefficient> fmt::Display for Term<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coeff.to_string();
        if self.monomial.is_one() {
            f.write_str(&c)
        } else if self.coeff.is_one() {
            write!(f, "{}", self.monomial)
        } else if c == "-1" {
            write!(f, "-{}", self.monomial)
        } else {
            write!(f, "{c}*{}", self.monomial)
        }
    }
}

/// An element of a free semiring `N[C^×][A]`: a finite multiset of terms.
///
/// Repeated terms are kept (`a + a != a`); zero terms are the empty sum and
/// are dropped. Terms are stored in a canonical order (monomials descending in
/// graded lex, then coefficients descending), so `==` is multiset equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormalSum<C> {
    terms: Vec<Term<C>>,
}

pub type TropFormalSum = FormalSum<TropValue>;
pub type FieldFormalSum = FormalSum<Rational>;

impl<C: Coefficient> FormalSum<C> {
    pub fn zero() -> Self {
        FormalSum { terms: Vec::new() }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = Term<C>>) -> Self {
        let mut terms: Vec<Term<C>> = terms.into_iter().filter(|t| !t.coeff.is_zero()).collect();
        terms.sort_by(|a, b| {
            Reverse(&a.monomial).cmp(&Reverse(&b.monomial)).then_with(|| Reverse(&a.coeff).cmp(&Reverse(&b.coeff)))
        });
        FormalSum { terms }
    }

    pub fn term(coeff: C, monomial: Monomial) -> Self {
        Self::from_terms([Term::new(coeff, monomial)])
    }

    pub fn terms(&self) -> &[Term<C>] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Formal (multiset) sum.
    pub fn add(&self, other: &FormalSum<C>) -> FormalSum<C> {
        Self::from_terms(self.terms.iter().chain(&other.terms).cloned())
    }

    pub fn add_term(&self, term: &Term<C>) -> FormalSum<C> {
        Self::from_terms(self.terms.iter().cloned().chain(std::iter::once(term.clone())))
    }

    pub fn mul_term(&self, term: &Term<C>) -> FormalSum<C> {
        Self::from_terms(self.terms.iter().map(|t| t.mul(term)))
    }

    /// Removes one occurrence of `term`, if present.
    pub fn remove_term(&self, term: &Term<C>) -> Option<FormalSum<C>> {
        let pos = self.terms.iter().position(|t| t == term)?;
        let mut terms = self.terms.clone();
        terms.remove(pos);
        Some(FormalSum { terms })
    }

    /// The sum with the term at `index` (in canonical order) removed.
    pub fn without_index(&self, index: usize) -> FormalSum<C> {
        let mut terms = self.terms.clone();
        terms.remove(index);
        FormalSum { terms }
    }

    /// Multiset difference `self - other`, if `other` is a sub-multiset.
    pub fn sub_multiset(&self, other: &FormalSum<C>) -> Option<FormalSum<C>> {
        let mut rest = self.clone();
        for t in &other.terms {
            rest = rest.remove_term(t)?;
        }
        Some(rest)
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> FormalSum<D> {
        FormalSum::from_terms(self.terms.iter().map(|t| Term::new(f(&t.coeff), t.monomial.clone())))
    }

    pub fn num_vars(&self) -> Option<usize> {
        self.terms.first().map(|t| t.monomial.num_vars())
    }
}

impl TropFormalSum {
    /// Collects equal monomials by the maximum of their coefficients. This is
    /// the canonical form of the image in the idempotent quotient, where
    /// `a + b = max(a, b)`.
    pub fn idem_normal_form(&self) -> TropFormalSum {
        let mut best: BTreeMap<Monomial, TropValue> = BTreeMap::new();
        for t in &self.terms {
            best.entry(t.monomial.clone())
                .and_modify(|c| {
                    if t.coeff > *c {
                        *c = t.coeff.clone();
                    }
                })
                .or_insert_with(|| t.coeff.clone());
        }
        FormalSum::from_terms(best.into_iter().map(|(m, c)| Term::new(c, m)))
    }
}

impl<C: Coefficient> Default for FormalSum<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> fmt::Display for FormalSum<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let s = t.to_string();
            match (i, s.strip_prefix('-')) {
                (0, _) => f.write_str(&s)?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {s}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for FormalSum<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// JSON shape of one term: `{"coeff": "num/den", "exps": [..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: Rational,
    pub exps: Vec<i64>,
}

impl<C: Coefficient> Serialize for FormalSum<C> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|t| TermJson { coeff: t.coeff.to_rational(), exps: t.monomial.exponents().to_vec() })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for FormalSum<C> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(deserializer)?;
        let terms = terms
            .into_iter()
            .map(|t| Ok(Term::new(C::from_rational(t.coeff)?, Monomial::new(t.exps))))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(FormalSum::from_terms(terms))
    }
}

pub(crate) fn check_dims<C: Coefficient>(s: &FormalSum<C>, num_vars: usize) -> Result<()> {
    for t in s.terms() {
        if t.monomial.num_vars() != num_vars {
            return Err(Error::DimensionMismatch { expected: num_vars, found: t.monomial.num_vars() });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tv(n: u64) -> TropValue {
        TropValue::from(n)
    }

    fn t1() -> Monomial {
        Monomial::var(2, 0)
    }

    #[test]
    fn multiset_semantics() {
        let a = TropFormalSum::term(tv(1), Monomial::one(2));
        let twice = a.add(&a);
        assert_eq!(twice.len(), 2);
        assert_ne!(twice, a);
        assert_eq!(twice.idem_normal_form(), a);
    }

    #[test]
    fn zero_terms_dropped() {
        let s = TropFormalSum::from_terms([Term::new(tv(0), t1()), Term::new(tv(2), t1())]);
        assert_eq!(s.len(), 1);
        assert_eq!(TropFormalSum::zero().to_string(), "0");
    }

    #[test]
    fn order_independent_equality() {
        let x = Term::new(tv(2), t1());
        let y = Term::new(tv(1), Monomial::one(2));
        assert_eq!(TropFormalSum::from_terms([x.clone(), y.clone()]), TropFormalSum::from_terms([y, x]));
    }

    #[test]
    fn idem_collects_by_max() {
        let s = TropFormalSum::from_terms([Term::new(tv(2), t1()), Term::new(tv(3), t1())]);
        assert_eq!(s.idem_normal_form(), TropFormalSum::term(tv(3), t1()));
    }

    #[test]
    fn display_signs() {
        let s = FieldFormalSum::from_terms([
            Term::new(Rational::from(-1), t1()),
            Term::new(Rational::ratio(1, 2), Monomial::one(2)),
            Term::new(Rational::from(3), Monomial::var(2, 1)),
        ]);
        assert_eq!(s.to_string(), "-T1 + 3*T2 + 1/2");
    }

    #[test]
    fn multiset_difference() {
        let x = Term::new(tv(1), t1());
        let s = TropFormalSum::from_terms([x.clone(), x.clone()]);
        assert_eq!(s.sub_multiset(&TropFormalSum::from_terms([x.clone()])).unwrap().len(), 1);
        assert!(TropFormalSum::zero().remove_term(&x).is_none());
    }
}

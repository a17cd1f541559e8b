//! Finite presentations of ordered blueprints.
//!
//! A presentation is a monoid signature, a list of relations between formal
//! sums and two axiom flags. The ambient semiring is the free semiring on
//! coefficient-times-monomial terms; the partial order is the smallest
//! additive and multiplicative preorder containing the relations (plus the
//! order of 𝕋 itself when coefficients are tropical). Quotients, functors and
//! base change all act on the relation list.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::poly::{Coefficient, FieldPolynomial, FormalSum, MonoidSignature, Term, TropFormalSum};
use crate::scalar::{Rational, TropValue, Valuation};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RelationKind {
    Leq,
    /// Both directions.
    Eqv,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(bound = "C: Coefficient")]
pub struct Relation<C> {
    pub lhs: FormalSum<C>,
    pub rhs: FormalSum<C>,
    pub kind: RelationKind,
}

impl<C: Coefficient> Relation<C> {
    pub fn leq(lhs: FormalSum<C>, rhs: FormalSum<C>) -> Self {
        Relation { lhs, rhs, kind: RelationKind::Leq }
    }

    pub fn eqv(lhs: FormalSum<C>, rhs: FormalSum<C>) -> Self {
        Relation { lhs, rhs, kind: RelationKind::Eqv }
    }

    /// At most one term on the left.
    pub fn is_monomial(&self) -> bool {
        self.lhs.len() <= 1
    }
}

impl<C: Coefficient> fmt::Display for Relation<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.kind {
            RelationKind::Leq => "<=",
            RelationKind::Eqv => "==",
        };
        write!(f, "{} {op} {}", self.lhs, self.rhs)
    }
}

impl<C: Coefficient> fmt::Debug for Relation<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Axiom schemas carried as flags rather than expanded into relations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Flags {
    /// `1 + 1 = 1`
    pub idempotent: bool,
    /// `0 <= 1`
    pub totally_positive: bool,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Presentation<C> {
    pub sig: MonoidSignature,
    /// The valuation along which a presentation over ℚ is base changed.
    pub valuation: Option<Valuation>,
    pub relations: Vec<Relation<C>>,
    pub flags: Flags,
}

pub type FieldPresentation = Presentation<Rational>;
pub type TropPresentation = Presentation<TropValue>;

impl<C: Coefficient> Presentation<C> {
    /// The free algebra on the signature: no relations, no flags.
    pub fn free(sig: MonoidSignature) -> Self {
        Presentation { sig, valuation: None, relations: Vec::new(), flags: Flags::default() }
    }

    pub fn with_valuation(mut self, v: Valuation) -> Self {
        self.valuation = Some(v);
        self
    }

    pub fn with_relations(mut self, relations: impl IntoIterator<Item = Relation<C>>) -> Self {
        self.relations.extend(relations);
        self.relations = dedup(std::mem::take(&mut self.relations));
        self
    }

    pub fn coeff_domain(&self) -> &'static str {
        C::DOMAIN
    }

    /// Quotient by `1 + 1 = 1`.
    pub fn apply_idem(&self) -> Self {
        let mut out = self.clone();
        out.flags.idempotent = true;
        out
    }

    /// Quotient by `0 <= 1`.
    pub fn apply_pos(&self) -> Self {
        let mut out = self.clone();
        out.flags.totally_positive = true;
        out
    }

    /// Replaces the order by the trivial one: only equivalences survive.
    pub fn core(&self) -> Self {
        Presentation {
            sig: self.sig,
            valuation: self.valuation,
            relations: self.relations.iter().filter(|r| r.kind == RelationKind::Eqv).cloned().collect(),
            flags: Flags::default(),
        }
    }

    pub fn relation_set(&self) -> HashSet<Relation<C>> {
        self.relations.iter().cloned().collect()
    }
}

fn dedup<C: Coefficient>(relations: Vec<Relation<C>>) -> Vec<Relation<C>> {
    let mut seen = HashSet::new();
    relations.into_iter().filter(|r| seen.insert(r.clone())).collect()
}

/// The monomial blueprint of the subscheme cut out by `gens`.
///
/// Each generator `p = sum_j c_j b_j` contributes `0 <= sum_j c_j b_j` and, for
/// every term `i`, the relation `(-c_i) b_i <= sum_{j != i} c_j b_j`. Only the
/// given generators are used, so for non-principal ideals the result is
/// relative to the generating set.
pub fn monomial_blueprint(gens: &[FieldPolynomial], sig: MonoidSignature) -> Result<Presentation<Rational>> {
    let mut relations = Vec::new();
    for (index, p) in gens.iter().enumerate() {
        if p.is_zero() {
            return Err(Error::ZeroGenerator(index));
        }
        if p.sig().num_vars != sig.num_vars {
            return Err(Error::DimensionMismatch { expected: sig.num_vars, found: p.sig().num_vars });
        }
        let sum = p.to_formal_sum();
        relations.push(Relation::leq(FormalSum::zero(), sum.clone()));
        for i in 0..sum.len() {
            let moved = &sum.terms()[i];
            let lhs = FormalSum::term(-&moved.coeff, moved.monomial.clone());
            relations.push(Relation::leq(lhs, sum.without_index(i)));
        }
    }
    Ok(Presentation::free(sig).with_relations(relations))
}

/// Base change along `v: k -> 𝕋`: every coefficient `c` becomes `v(c)`.
pub fn base_change_to_t(b: &Presentation<Rational>) -> Result<TropPresentation> {
    let v = b.valuation.ok_or(Error::MissingValuation)?;
    let map = |s: &FormalSum<Rational>| s.map_coeffs(|c| v.apply(c));
    let relations = b.relations.iter().map(|r| Relation { lhs: map(&r.lhs), rhs: map(&r.rhs), kind: r.kind }).collect();
    Ok(Presentation { sig: b.sig, valuation: Some(v), relations: dedup(relations), flags: b.flags })
}

pub fn idem_normal_form(s: &TropFormalSum) -> TropFormalSum {
    s.idem_normal_form()
}

/// Per-monomial comparison of coefficients, missing monomials counting as 0.
/// This is the order of the tropical semifield, read off normal forms.
pub fn dominated(x: &TropFormalSum, y: &TropFormalSum) -> bool {
    let y = y.idem_normal_form();
    x.idem_normal_form()
        .terms()
        .iter()
        .all(|t| y.terms().iter().any(|u| u.monomial == t.monomial && u.coeff >= t.coeff))
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "C: Coefficient")]
struct PresentationJson<C> {
    sig: MonoidSignature,
    coeff_domain: String,
    valuation: Option<Valuation>,
    relations: Vec<Relation<C>>,
    flags: Flags,
}

impl<C: Coefficient> Serialize for Presentation<C> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PresentationJson {
            sig: self.sig,
            coeff_domain: C::DOMAIN.to_string(),
            valuation: self.valuation,
            relations: self.relations.clone(),
            flags: self.flags,
        }
        .serialize(serializer)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for Presentation<C> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PresentationJson::<C>::deserialize(deserializer)?;
        if raw.coeff_domain != C::DOMAIN {
            return Err(D::Error::custom(format!(
                "expected coefficient domain {}, found {}",
                C::DOMAIN,
                raw.coeff_domain
            )));
        }
        let sig = MonoidSignature::new(raw.sig.num_vars, raw.sig.laurent).map_err(D::Error::custom)?;
        for r in &raw.relations {
            for t in r.lhs.terms().iter().chain(r.rhs.terms()) {
                sig.check(&t.monomial).map_err(D::Error::custom)?;
            }
        }
        Ok(Presentation { sig, valuation: raw.valuation, relations: raw.relations, flags: raw.flags })
    }
}

impl<C: Coefficient> fmt::Display for Presentation<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} | ", C::DOMAIN)?;
        for (i, r) in self.relations.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        if self.flags.idempotent {
            f.write_str("; 1+1==1")?;
        }
        if self.flags.totally_positive {
            f.write_str("; 0<=1")?;
        }
        f.write_str(">")
    }
}

impl<C: Coefficient> fmt::Debug for Presentation<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Helper for tests and examples: `c * a` as a one-term sum.
pub fn single<C: Coefficient>(coeff: C, monomial: crate::poly::Monomial) -> FormalSum<C> {
    FormalSum::from_terms([Term::new(coeff, monomial)])
}

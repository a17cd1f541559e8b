//! 𝕋-points of tropicalized presentations, bend loci and bend relations.

mod output;

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::blueprint::{base_change_to_t, monomial_blueprint, RelationKind, TropPresentation};
use crate::hyperfield::leq_t;
use crate::poly::{check_dims, eval_trop, tropicalize_poly, FieldPolynomial, MonoidSignature, TropFormalSum};
use crate::scalar::{Rational, TropValue, Valuation};
use crate::{Error, Result};

pub use output::{grid_to_csv, members_to_json, members_to_plot, SampledPoint};

/// A 𝕋-valued point, i.e. a monoid morphism `A -> 𝕋` given by its values on `T1, ..., Tn`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TropPoint {
    coords: Vec<TropValue>,
}

impl TropPoint {
    pub fn new(coords: Vec<TropValue>) -> Self {
        TropPoint { coords }
    }

    /// Checks the point against a signature: matching dimension, and nonzero
    /// coordinates for Laurent monomials.
    pub fn for_signature(coords: Vec<TropValue>, sig: MonoidSignature) -> Result<Self> {
        if coords.len() != sig.num_vars {
            return Err(Error::DimensionMismatch { expected: sig.num_vars, found: coords.len() });
        }
        if sig.laurent && coords.iter().any(TropValue::is_zero) {
            return Err(Error::Config("Laurent points need nonzero coordinates".into()));
        }
        Ok(TropPoint { coords })
    }

    pub fn coords(&self) -> &[TropValue] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn scale(&self, lambda: &TropValue) -> TropPoint {
        TropPoint { coords: self.coords.iter().map(|c| c * lambda).collect() }
    }
}

impl fmt::Display for TropPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for TropPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_point(s: &TropFormalSum, x: &TropPoint) -> Result<()> {
    check_dims(s, x.dim())
}

/// Whether `x` lies in the bend locus of `p`: the maximum term value is
/// attained at least twice, or every term vanishes at `x`.
pub fn bend_locus_member(p: &TropFormalSum, x: &TropPoint) -> Result<bool> {
    check_point(p, x)?;
    let values = eval_trop(p, x)?;
    let Some(max) = values.iter().max() else {
        return Ok(true);
    };
    Ok(max.is_zero() || values.iter().filter(|v| *v == max).count() >= 2)
}

fn relation_holds(lhs: &TropFormalSum, rhs: &TropFormalSum, x: &TropPoint) -> Result<bool> {
    if lhs.len() > 1 {
        return Err(Error::UnsupportedRelationShape(format!("left-hand side {lhs} has more than one term")));
    }
    let c = eval_trop(lhs, x)?.pop().unwrap_or_else(TropValue::zero);
    Ok(leq_t(&c, &eval_trop(rhs, x)?))
}

/// Whether `x` induces a morphism from the presentation to 𝕋, i.e. every
/// relation holds in 𝕋 after substituting `x`.
///
/// Relations must be monomial. The flag `0 <= 1` contributes the relation
/// `0 <= 1`, which fails in 𝕋; the flag `1 + 1 = 1` has a two-term side and is
/// rejected like any other non-monomial relation.
pub fn trop_point_member(b: &TropPresentation, x: &TropPoint) -> Result<bool> {
    if x.dim() != b.sig.num_vars {
        return Err(Error::DimensionMismatch { expected: b.sig.num_vars, found: x.dim() });
    }
    if b.flags.idempotent {
        return Err(Error::UnsupportedRelationShape("the axiom 1 + 1 == 1".into()));
    }
    if b.flags.totally_positive {
        return Ok(false);
    }
    for r in &b.relations {
        let ok = match r.kind {
            RelationKind::Leq => relation_holds(&r.lhs, &r.rhs, x)?,
            RelationKind::Eqv => relation_holds(&r.lhs, &r.rhs, x)? && relation_holds(&r.rhs, &r.lhs, x)?,
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One grid axis: `lo, lo + step, ...` up to and including `hi`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxisRange {
    pub lo: TropValue,
    pub hi: TropValue,
    pub step: Rational,
}

impl AxisRange {
    pub fn new(lo: TropValue, hi: TropValue, step: Rational) -> Result<Self> {
        if step.is_zero() || step.is_negative() {
            return Err(Error::Config(format!("grid step must be positive, got {step}")));
        }
        Ok(AxisRange { lo, hi, step })
    }

    pub fn values(&self) -> Vec<TropValue> {
        let mut out = Vec::new();
        let mut x = self.lo.value().clone();
        while &x <= self.hi.value() {
            out.push(TropValue::new(x.clone()).expect("grid starts at a nonnegative value"));
            x = x + &self.step;
        }
        out
    }
}

/// Cartesian product of the axes, in lexicographic order.
pub fn grid_points(axes: &[AxisRange]) -> Vec<TropPoint> {
    let mut points = vec![Vec::new()];
    for axis in axes {
        let vals = axis.values();
        points = points
            .into_iter()
            .flat_map(|prefix| {
                vals.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v.clone());
                    p
                })
            })
            .collect();
    }
    points.into_iter().map(TropPoint::new).collect()
}

/// Membership flag for every grid point. Points are independent, so the
/// grid is split across threads; the output keeps grid order.
pub fn evaluate_grid(b: &TropPresentation, axes: &[AxisRange]) -> Result<Vec<(TropPoint, bool)>> {
    if axes.len() != b.sig.num_vars {
        return Err(Error::DimensionMismatch { expected: b.sig.num_vars, found: axes.len() });
    }
    grid_points(axes)
        .into_par_iter()
        .map(|x| {
            let member = trop_point_member(b, &x)?;
            Ok((x, member))
        })
        .collect()
}

/// Grid points that are 𝕋-points of `b`, optionally with log₁₀ coordinates for plotting.
pub fn sample_grid(b: &TropPresentation, axes: &[AxisRange], log_coords: bool) -> Result<Vec<SampledPoint>> {
    Ok(evaluate_grid(b, axes)?
        .into_iter()
        .filter(|(_, member)| *member)
        .map(|(point, _)| SampledPoint::new(point, log_coords))
        .collect())
}

/// `p^trop ~ p^trop` with one term deleted.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BendRelation {
    pub full: TropFormalSum,
    pub reduced: TropFormalSum,
    pub dropped_term_index: usize,
}

impl BendRelation {
    /// The deleted term as a one-term sum.
    pub fn dropped(&self) -> TropFormalSum {
        self.full.sub_multiset(&self.reduced).expect("reduced is a sub-multiset of full")
    }

    /// Whether both sides have the same maximal term value at `x`.
    pub fn holds_at(&self, x: &TropPoint) -> Result<bool> {
        let max = |s: &TropFormalSum| -> Result<TropValue> {
            Ok(eval_trop(s, x)?.into_iter().max().unwrap_or_else(TropValue::zero))
        };
        Ok(max(&self.full)? == max(&self.reduced)?)
    }
}

impl fmt::Display for BendRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ~ {}", self.full, self.reduced)
    }
}

impl fmt::Debug for BendRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One bend relation per generator and term.
pub fn bend_relations(gens: &[FieldPolynomial], v: &Valuation) -> Result<Vec<BendRelation>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (index, p) in gens.iter().enumerate() {
        if p.is_zero() {
            return Err(Error::ZeroGenerator(index));
        }
        let full = tropicalize_poly(p, v);
        for i in 0..full.len() {
            let rel = BendRelation { full: full.clone(), reduced: full.without_index(i), dropped_term_index: i };
            if seen.insert((rel.full.clone(), rel.reduced.clone())) {
                out.push(rel);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub point: TropPoint,
    pub presentation: bool,
    pub bend_locus: bool,
    pub bend_relations: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AgreementReport {
    pub points_checked: usize,
    pub members: usize,
    pub disagreements: Vec<Disagreement>,
    /// Set for more than one generator: the finite generating set may only
    /// give an outer approximation of the tropical variety.
    pub relative_to_given_generators: bool,
}

impl AgreementReport {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Compares three membership tests on every grid point: 𝕋-points of the
/// tropicalized presentation, the intersection of bend loci of the
/// tropicalized generators, and max-equality across all bend relations.
pub fn bend_vs_trop_points(gens: &[FieldPolynomial], v: &Valuation, axes: &[AxisRange]) -> Result<AgreementReport> {
    let sig = gens
        .first()
        .map(FieldPolynomial::sig)
        .ok_or_else(|| Error::Config("at least one generator required".into()))?;
    let b_t = base_change_to_t(&monomial_blueprint(gens, sig)?.with_valuation(*v))?;
    let trops: Vec<TropFormalSum> = gens.iter().map(|p| tropicalize_poly(p, v)).collect();
    let bends = bend_relations(gens, v)?;
    let checked = evaluate_grid(&b_t, axes)?
        .into_par_iter()
        .map(|(x, presentation)| {
            let mut bend_locus = true;
            for p in &trops {
                bend_locus &= bend_locus_member(p, &x)?;
            }
            let mut bend_ok = true;
            for r in &bends {
                bend_ok &= r.holds_at(&x)?;
            }
            Ok(Disagreement { point: x, presentation, bend_locus, bend_relations: bend_ok })
        })
        .collect::<Result<Vec<_>>>()?;
    let members = checked.iter().filter(|d| d.presentation).count();
    let points_checked = checked.len();
    let disagreements =
        checked.into_iter().filter(|d| d.presentation != d.bend_locus || d.presentation != d.bend_relations).collect();
    Ok(AgreementReport { points_checked, members, disagreements, relative_to_given_generators: gens.len() > 1 })
}

//! Bounded breadth-first proof search.
//!
//! The search saturates a finite fragment of the closure: seeds are the
//! presentation's relations, the axioms its flags allow, the instances
//! `c <= a + b` of the order of 𝕋 on the coefficients in play, and all of
//! these multiplied by the single terms that can turn their terms into target
//! terms. Each round adds one term to both sides of the newest facts and
//! chains facts by transitivity. Facts with more terms than the target's two
//! sides together (plus one) are dropped. Failure after `depth` rounds means
//! nothing: the result is then `Unknown`.

use std::collections::{BTreeSet, HashMap, HashSet};

use log::debug;

use super::{check_derivation, Derivation, ProofStep, Rule, TropTerm};
use crate::blueprint::{Relation, RelationKind, TropPresentation};
use crate::hyperfield::hypersum;
use crate::poly::TropFormalSum;
use crate::scalar::TropValue;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Derivation),
    Unknown,
}

impl SearchOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

type Sides = (TropFormalSum, TropFormalSum);

struct Fact {
    sides: Sides,
    step: ProofStep,
}

struct Engine {
    facts: Vec<Fact>,
    index: HashMap<Sides, usize>,
    by_lhs: HashMap<TropFormalSum, Vec<usize>>,
    by_rhs: HashMap<TropFormalSum, Vec<usize>>,
    max_terms: usize,
    target: Sides,
}

impl Engine {
    /// Adds a fact; returns its id if it is new and within the size bound.
    fn insert(&mut self, sides: Sides, step: ProofStep) -> Option<usize> {
        if sides.0.len() > self.max_terms || sides.1.len() > self.max_terms || self.index.contains_key(&sides) {
            return None;
        }
        let id = self.facts.len();
        self.index.insert(sides.clone(), id);
        self.by_lhs.entry(sides.0.clone()).or_default().push(id);
        self.by_rhs.entry(sides.1.clone()).or_default().push(id);
        self.facts.push(Fact { sides, step });
        Some(id)
    }

    fn found(&self) -> Option<usize> {
        self.index.get(&self.target).copied()
    }

    /// Linearises the proof tree of fact `goal` into a derivation.
    fn extract(&self, goal: usize) -> Derivation {
        let mut needed = BTreeSet::new();
        let mut stack = vec![goal];
        while let Some(id) = stack.pop() {
            if needed.insert(id) {
                stack.extend(self.facts[id].step.premises.iter().copied());
            }
        }
        let renumber: HashMap<usize, usize> = needed.iter().enumerate().map(|(i, id)| (*id, i)).collect();
        let steps = needed
            .iter()
            .map(|id| {
                let step = &self.facts[*id].step;
                ProofStep { rule: step.rule.clone(), premises: step.premises.iter().map(|p| renumber[p]).collect() }
            })
            .collect();
        Derivation { steps, conclusion: Relation::leq(self.target.0.clone(), self.target.1.clone()) }
    }
}

fn constant(n: usize, c: &TropValue) -> TropFormalSum {
    TropFormalSum::term(c.clone(), crate::poly::Monomial::one(n))
}

/// Searches for a derivation of `target` (read as `lhs <= rhs`) within `depth` rounds.
pub fn search_leq(b: &TropPresentation, target: &Relation<TropValue>, depth: usize) -> SearchOutcome {
    let n = b.sig.num_vars;
    let mut engine = Engine {
        facts: Vec::new(),
        index: HashMap::new(),
        by_lhs: HashMap::new(),
        by_rhs: HashMap::new(),
        max_terms: (target.lhs.len() + target.rhs.len() + 1).max(2),
        target: (target.lhs.clone(), target.rhs.clone()),
    };

    let mut seeds: Vec<(Sides, Rule)> = Vec::new();
    for (i, r) in b.relations.iter().enumerate() {
        seeds.push(((r.lhs.clone(), r.rhs.clone()), Rule::Generator { index: i, reversed: false }));
        if r.kind == RelationKind::Eqv {
            seeds.push(((r.rhs.clone(), r.lhs.clone()), Rule::Generator { index: i, reversed: true }));
        }
    }
    seeds.push(((target.lhs.clone(), target.lhs.clone()), Rule::Reflexivity(target.lhs.clone())));
    let unit = constant(n, &TropValue::one());
    if b.flags.idempotent {
        let two = unit.add(&unit);
        seeds.push(((two.clone(), unit.clone()), Rule::IdemAxiom { reversed: false }));
        seeds.push(((unit.clone(), two), Rule::IdemAxiom { reversed: true }));
    }
    if b.flags.totally_positive {
        seeds.push(((TropFormalSum::zero(), unit.clone()), Rule::PosAxiom));
    }

    let mut pool: BTreeSet<TropTerm> = BTreeSet::new();
    let mut values: BTreeSet<TropValue> = [TropValue::one()].into_iter().collect();
    for s in [&target.lhs, &target.rhs] {
        pool.extend(s.terms().iter().cloned());
    }
    for r in &b.relations {
        pool.extend(r.lhs.terms().iter().chain(r.rhs.terms()).cloned());
    }
    values.extend(pool.iter().map(|t| t.coeff.clone()));
    let values: Vec<TropValue> = values.into_iter().collect();
    for (i, a) in values.iter().enumerate() {
        for bb in &values[i..] {
            let set = hypersum(a, bb);
            for c in values.iter().chain(std::iter::once(&TropValue::zero())) {
                if set.contains(c) {
                    let sides = (constant(n, c), constant(n, a).add(&constant(n, bb)));
                    seeds.push((sides, Rule::TropAxiom { c: c.clone(), a: a.clone(), b: bb.clone() }));
                }
            }
        }
    }

    // Multipliers that carry a seed term onto a target term.
    let target_terms: HashSet<&TropTerm> = target.lhs.terms().iter().chain(target.rhs.terms()).collect();
    let mut multipliers: BTreeSet<TropTerm> = BTreeSet::new();
    for (sides, _) in &seeds {
        for s in sides.0.terms().iter().chain(sides.1.terms()) {
            for t in &target_terms {
                let Some(m) = t.monomial.div(&s.monomial, b.sig.laurent) else { continue };
                let c = TropValue::new(t.coeff.value() / s.coeff.value()).expect("ratio of positive values");
                if !(c.is_one() && m.is_one()) {
                    multipliers.insert(TropTerm::new(c, m));
                }
            }
        }
    }
    let relevant: HashSet<TropTerm> = pool.iter().cloned().collect();

    let mut frontier = Vec::new();
    for (sides, rule) in seeds {
        let multiplied: Vec<(Sides, TropTerm)> = multipliers
            .iter()
            .map(|m| ((sides.0.mul_term(m), sides.1.mul_term(m)), m.clone()))
            .filter(|((l, r), _)| l.terms().iter().chain(r.terms()).all(|t| relevant.contains(t)))
            .collect();
        if let Some(id) = engine.insert(sides, ProofStep::axiom(rule)) {
            frontier.push(id);
            for (msides, m) in multiplied {
                if let Some(mid) = engine.insert(msides, ProofStep::from(Rule::MulBoth(m), id)) {
                    frontier.push(mid);
                }
            }
        }
    }

    let pool: Vec<TropTerm> = pool.into_iter().collect();
    for round in 0..=depth {
        if let Some(goal) = engine.found() {
            let d = engine.extract(goal);
            debug_assert!(matches!(check_derivation(b, &d), Ok(true)));
            debug!("search_leq: found {} after {round} rounds, {} steps", target, d.len());
            return SearchOutcome::Found(d);
        }
        if round == depth || frontier.is_empty() {
            break;
        }
        let mut candidates: Vec<(Sides, ProofStep)> = Vec::new();
        for &id in &frontier {
            let (l, r) = engine.facts[id].sides.clone();
            for t in &pool {
                candidates.push(((l.add_term(t), r.add_term(t)), ProofStep::from(Rule::AddBoth(t.clone()), id)));
            }
            for &next in engine.by_lhs.get(&r).into_iter().flatten() {
                candidates.push(((l.clone(), engine.facts[next].sides.1.clone()), ProofStep::trans(id, next)));
            }
            for &prev in engine.by_rhs.get(&l).into_iter().flatten() {
                candidates.push(((engine.facts[prev].sides.0.clone(), r.clone()), ProofStep::trans(prev, id)));
            }
        }
        frontier = candidates.into_iter().filter_map(|(sides, step)| engine.insert(sides, step)).collect();
        debug!("search_leq: round {} produced {} facts ({} total)", round + 1, frontier.len(), engine.facts.len());
    }
    SearchOutcome::Unknown
}

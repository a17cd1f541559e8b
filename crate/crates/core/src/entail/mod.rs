//! Replayable derivations in presentations over 𝕋.
//!
//! A derivation is a list of rule applications; each step produces a relation
//! `lhs <= rhs` between formal sums. [`check_derivation`] re-executes every
//! step and is the only trusted component. [`derive_bend_pair`] emits the two
//! fixed derivation chains that turn a bend relation into an equality in the
//! idempotent, totally positive quotient, and [`search_leq`] is an untrusted
//! bounded search whose results are only ever used after checking.

mod script;
mod search;

use std::fmt;

use crate::blueprint::{Relation, RelationKind, TropPresentation};
use crate::hyperfield::hypersum;
use crate::poly::{Monomial, Term, TropFormalSum};
use crate::scalar::TropValue;
use crate::trop::BendRelation;
use crate::{Error, Result};

pub use script::{derivation_to_script, parse_proof_script};
pub use search::{search_leq, SearchOutcome};

pub type TropTerm = Term<TropValue>;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Rule {
    /// Relation `index` of the presentation; `reversed` reads an equivalence right to left.
    Generator {
        index: usize,
        reversed: bool,
    },
    /// `x <= y` gives `x + t <= y + t`.
    AddBoth(TropTerm),
    /// `x <= y` gives `x t <= y t`.
    MulBoth(TropTerm),
    /// `x <= y` and `y <= z` give `x <= z`.
    Transitivity,
    Reflexivity(TropFormalSum),
    /// `1 + 1 <= 1`, or `1 <= 1 + 1` when reversed. Needs the idempotent flag.
    IdemAxiom {
        reversed: bool,
    },
    /// `0 <= 1`. Needs the totally positive flag.
    PosAxiom,
    /// `c <= a + b` for constants with `c` in `a ⊞ b`: the order of 𝕋 itself.
    TropAxiom {
        c: TropValue,
        a: TropValue,
        b: TropValue,
    },
}

impl Rule {
    fn arity(&self) -> usize {
        match self {
            Rule::AddBoth(_) | Rule::MulBoth(_) => 1,
            Rule::Transitivity => 2,
            _ => 0,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProofStep {
    pub rule: Rule,
    /// Indices of earlier steps.
    pub premises: Vec<usize>,
}

impl ProofStep {
    pub fn axiom(rule: Rule) -> Self {
        ProofStep { rule, premises: Vec::new() }
    }

    pub fn from(rule: Rule, premise: usize) -> Self {
        ProofStep { rule, premises: vec![premise] }
    }

    pub fn trans(first: usize, second: usize) -> Self {
        ProofStep { rule: Rule::Transitivity, premises: vec![first, second] }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Derivation {
    pub steps: Vec<ProofStep>,
    pub conclusion: Relation<TropValue>,
}

impl Derivation {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&derivation_to_script(self))
    }
}

type Sides = (TropFormalSum, TropFormalSum);

fn constant(sig_vars: usize, c: &TropValue) -> TropFormalSum {
    TropFormalSum::term(c.clone(), Monomial::one(sig_vars))
}

/// Computes the relation produced by one step, `None` if the rule does not apply.
fn apply_step(b: &TropPresentation, index: usize, step: &ProofStep, done: &[Sides]) -> Result<Option<Sides>> {
    let malformed = |reason: String| Error::MalformedStep { step: index, reason };
    if step.premises.len() != step.rule.arity() {
        return Err(malformed(format!("rule takes {} premises, got {}", step.rule.arity(), step.premises.len())));
    }
    let mut premises = Vec::with_capacity(step.premises.len());
    for &p in &step.premises {
        if p >= index {
            return Err(malformed(format!("premise {p} does not refer to an earlier step")));
        }
        premises.push(&done[p]);
    }
    let n = b.sig.num_vars;
    let term_ok = |t: &TropTerm| t.monomial.num_vars() == n && b.sig.check(&t.monomial).is_ok();
    let one = Monomial::one(n);
    Ok(match &step.rule {
        Rule::Generator { index: g, reversed } => {
            let r = b.relations.get(*g).ok_or_else(|| malformed(format!("no generator {g}")))?;
            match (reversed, r.kind) {
                (false, _) => Some((r.lhs.clone(), r.rhs.clone())),
                (true, RelationKind::Eqv) => Some((r.rhs.clone(), r.lhs.clone())),
                (true, RelationKind::Leq) => return Err(malformed(format!("generator {g} is not an equivalence"))),
            }
        }
        Rule::AddBoth(t) => {
            let (l, r) = premises[0];
            (term_ok(t) && !t.coeff.is_zero()).then(|| (l.add_term(t), r.add_term(t)))
        }
        Rule::MulBoth(t) => {
            let (l, r) = premises[0];
            term_ok(t).then(|| (l.mul_term(t), r.mul_term(t)))
        }
        Rule::Transitivity => {
            let ((a, b1), (b2, c)) = (premises[0], premises[1]);
            (b1 == b2).then(|| (a.clone(), c.clone()))
        }
        Rule::Reflexivity(x) => x.terms().iter().all(term_ok).then(|| (x.clone(), x.clone())),
        Rule::IdemAxiom { reversed } => {
            if !b.flags.idempotent {
                return Err(malformed("idempotent axiom used without the 1 + 1 == 1 flag".into()));
            }
            let unit = Term::new(TropValue::one(), one);
            let two = TropFormalSum::from_terms([unit.clone(), unit.clone()]);
            let single = TropFormalSum::from_terms([unit]);
            Some(if *reversed { (single, two) } else { (two, single) })
        }
        Rule::PosAxiom => {
            if !b.flags.totally_positive {
                return Err(malformed("positivity axiom used without the 0 <= 1 flag".into()));
            }
            Some((TropFormalSum::zero(), constant(n, &TropValue::one())))
        }
        Rule::TropAxiom { c, a, b: bb } => hypersum(a, bb).contains(c).then(|| {
            let rhs = constant(n, a).add(&constant(n, bb));
            (constant(n, c), rhs)
        }),
    })
}

/// Replays `d` against `b`. `Ok(true)` iff every step applies and the last
/// step is the conclusion (as multisets on both sides). Malformed steps
/// (dangling premises, wrong arity, missing axiom flags) are errors.
pub fn check_derivation(b: &TropPresentation, d: &Derivation) -> Result<bool> {
    if d.conclusion.kind != RelationKind::Leq {
        return Ok(false);
    }
    let mut done: Vec<Sides> = Vec::with_capacity(d.steps.len());
    for (i, step) in d.steps.iter().enumerate() {
        match apply_step(b, i, step, &done)? {
            Some(sides) => done.push(sides),
            None => return Ok(false),
        }
    }
    Ok(done.last().is_some_and(|(l, r)| *l == d.conclusion.lhs && *r == d.conclusion.rhs))
}

/// Builds steps one by one while tracking the relation each produces.
struct Builder<'a> {
    b: &'a TropPresentation,
    steps: Vec<ProofStep>,
    sides: Vec<Sides>,
}

impl<'a> Builder<'a> {
    fn new(b: &'a TropPresentation) -> Self {
        Builder { b, steps: Vec::new(), sides: Vec::new() }
    }

    fn push(&mut self, step: ProofStep) -> Result<usize> {
        let i = self.steps.len();
        let sides = apply_step(self.b, i, &step, &self.sides)?
            .ok_or_else(|| Error::MalformedStep { step: i, reason: "rule does not apply".into() })?;
        self.steps.push(step);
        self.sides.push(sides);
        Ok(i)
    }

    fn add_all(&mut self, mut at: usize, terms: &[TropTerm]) -> Result<usize> {
        for t in terms {
            at = self.push(ProofStep::from(Rule::AddBoth(t.clone()), at))?;
        }
        Ok(at)
    }

    fn finish(self) -> Derivation {
        let (lhs, rhs) = self.sides.last().cloned().unwrap_or_default();
        Derivation { steps: self.steps, conclusion: Relation::leq(lhs, rhs) }
    }
}

/// Both directions of a bend relation `t + R ~ R`, derived in an idempotent,
/// totally positive presentation that contains the generator `t <= R`:
///
/// * `t + R <= R + R = R`: the generator, `R` added term by term, then each
///   doubled term collapsed with `r + r <= r` (the idempotent axiom times `r`).
/// * `R = 0 + R <= t + R`: `0 <= 1` times `t`, then `R` added term by term.
pub fn derive_bend_pair(b: &TropPresentation, r: &BendRelation) -> Result<(Derivation, Derivation)> {
    if !b.flags.idempotent {
        return Err(Error::MissingAxiom("1 + 1 == 1"));
    }
    if !b.flags.totally_positive {
        return Err(Error::MissingAxiom("0 <= 1"));
    }
    let dropped = r.dropped();
    let t = dropped.terms()[0].clone();
    let reduced = r.reduced.terms().to_vec();
    let gen = b
        .relations
        .iter()
        .position(|g| g.kind == RelationKind::Leq && g.lhs == dropped && g.rhs == r.reduced)
        .ok_or_else(|| Error::NoMatchingGenerator(r.to_string()))?;

    let mut up = Builder::new(b);
    let g = up.push(ProofStep::axiom(Rule::Generator { index: gen, reversed: false }))?;
    let mut cur = up.add_all(g, &reduced)?;
    for term in &reduced {
        let doubled = up.sides[cur].1.clone();
        let idem = up.push(ProofStep::axiom(Rule::IdemAxiom { reversed: false }))?;
        let collapse = up.push(ProofStep::from(Rule::MulBoth(term.clone()), idem))?;
        let pair = TropFormalSum::from_terms([term.clone(), term.clone()]);
        let rest = doubled.sub_multiset(&pair).expect("each term of R occurs twice before its collapse");
        let lifted = up.add_all(collapse, rest.terms())?;
        cur = up.push(ProofStep::trans(cur, lifted))?;
    }

    let mut down = Builder::new(b);
    let pos = down.push(ProofStep::axiom(Rule::PosAxiom))?;
    let scaled = down.push(ProofStep::from(Rule::MulBoth(t), pos))?;
    down.add_all(scaled, &reduced)?;

    let (up, down) = (up.finish(), down.finish());
    debug_assert_eq!(up.conclusion, Relation::leq(r.full.clone(), r.reduced.clone()));
    debug_assert_eq!(down.conclusion, Relation::leq(r.reduced.clone(), r.full.clone()));
    Ok((up, down))
}

/// Chains `x <= y` and `y <= z` into `x <= z`, renumbering the second derivation.
pub fn compose(first: &Derivation, second: &Derivation) -> Derivation {
    let offset = first.steps.len();
    let mut steps = first.steps.clone();
    steps.extend(
        second
            .steps
            .iter()
            .map(|s| ProofStep { rule: s.rule.clone(), premises: s.premises.iter().map(|p| p + offset).collect() }),
    );
    steps.push(ProofStep::trans(offset - 1, steps.len() - 1));
    Derivation { steps, conclusion: Relation::leq(first.conclusion.lhs.clone(), second.conclusion.rhs.clone()) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blueprint::{base_change_to_t, monomial_blueprint};
    use crate::poly::{parse_polynomial, parse_trop_sum, MonoidSignature};
    use crate::scalar::Valuation;
    use crate::trop::bend_relations;

    fn sig2() -> MonoidSignature {
        MonoidSignature::polynomial(2)
    }

    fn s(text: &str) -> TropFormalSum {
        parse_trop_sum(text, sig2()).unwrap()
    }

    fn line(v: Valuation, text: &str) -> (TropPresentation, Vec<BendRelation>) {
        let p = parse_polynomial(text, sig2()).unwrap();
        let b =
            base_change_to_t(&monomial_blueprint(std::slice::from_ref(&p), sig2()).unwrap().with_valuation(v)).unwrap();
        (b.apply_idem().apply_pos(), bend_relations(&[p], &v).unwrap())
    }

    fn term(text: &str) -> TropTerm {
        s(text).terms()[0].clone()
    }

    #[test]
    fn reflexivity() {
        let b = TropPresentation::free(sig2());
        let d = Derivation {
            steps: vec![ProofStep::axiom(Rule::Reflexivity(s("T1 + 2")))],
            conclusion: Relation::leq(s("T1 + 2"), s("T1 + 2")),
        };
        assert!(check_derivation(&b, &d).unwrap());
    }

    #[test]
    fn multiply_a_generator() {
        let b = TropPresentation::free(sig2()).with_relations([Relation::leq(s("1"), s("T1 + T2"))]);
        let d = Derivation {
            steps: vec![
                ProofStep::axiom(Rule::Generator { index: 0, reversed: false }),
                ProofStep::from(Rule::MulBoth(term("T1")), 0),
            ],
            conclusion: Relation::leq(s("T1"), s("T1^2 + T1*T2")),
        };
        assert!(check_derivation(&b, &d).unwrap());
        let wrong = Derivation { conclusion: Relation::leq(s("T1"), s("T1^2")), ..d };
        assert!(!check_derivation(&b, &wrong).unwrap());
    }

    #[test]
    fn flag_guards() {
        let b = TropPresentation::free(sig2());
        let d = Derivation {
            steps: vec![ProofStep::axiom(Rule::IdemAxiom { reversed: false })],
            conclusion: Relation::leq(s("1 + 1"), s("1")),
        };
        assert!(matches!(check_derivation(&b, &d), Err(Error::MalformedStep { step: 0, .. })));
        assert!(check_derivation(&b.apply_idem(), &d).unwrap());
        let p = Derivation { steps: vec![ProofStep::axiom(Rule::PosAxiom)], conclusion: Relation::leq(s("0"), s("1")) };
        assert!(check_derivation(&b, &p).is_err());
        assert!(check_derivation(&b.apply_pos(), &p).unwrap());
    }

    #[test]
    fn malformed_premises() {
        let b = TropPresentation::free(sig2());
        let forward = Derivation {
            steps: vec![ProofStep::from(Rule::AddBoth(term("T1")), 0)],
            conclusion: Relation::leq(s("T1"), s("T1")),
        };
        assert!(check_derivation(&b, &forward).is_err());
        let arity = Derivation {
            steps: vec![ProofStep { rule: Rule::PosAxiom, premises: vec![0] }],
            conclusion: Relation::leq(s("0"), s("1")),
        };
        assert!(check_derivation(&b.apply_pos(), &arity).is_err());
        let missing = Derivation {
            steps: vec![ProofStep::axiom(Rule::Generator { index: 3, reversed: false })],
            conclusion: Relation::leq(s("0"), s("1")),
        };
        assert!(check_derivation(&b, &missing).is_err());
    }

    #[test]
    fn invalid_applications_are_false() {
        let b = TropPresentation::free(sig2());
        let bad_trop = Derivation {
            steps: vec![ProofStep::axiom(Rule::TropAxiom {
                c: TropValue::from(2),
                a: TropValue::from(1),
                b: TropValue::from(1),
            })],
            conclusion: Relation::leq(s("2"), s("1 + 1")),
        };
        assert!(!check_derivation(&b, &bad_trop).unwrap());
        let bad_trans = Derivation {
            steps: vec![
                ProofStep::axiom(Rule::Reflexivity(s("T1"))),
                ProofStep::axiom(Rule::Reflexivity(s("T2"))),
                ProofStep::trans(0, 1),
            ],
            conclusion: Relation::leq(s("T1"), s("T2")),
        };
        assert!(!check_derivation(&b, &bad_trans).unwrap());
    }

    #[test]
    fn guiding_example_bend_pairs() {
        let (b, rels) = line(Valuation::Trivial, "T1 + T2 + 1");
        let drop_one = rels.iter().find(|r| r.reduced == s("T1 + T2")).unwrap();
        let (up, down) = derive_bend_pair(&b, drop_one).unwrap();
        assert_eq!(up.conclusion, Relation::leq(s("T1 + T2 + 1"), s("T1 + T2")));
        assert_eq!(down.conclusion, Relation::leq(s("T1 + T2"), s("T1 + T2 + 1")));
        assert!(check_derivation(&b, &up).unwrap());
        assert!(check_derivation(&b, &down).unwrap());

        let drop_t2 = rels.iter().find(|r| r.reduced == s("T1 + 1")).unwrap();
        let (up, down) = derive_bend_pair(&b, drop_t2).unwrap();
        assert!(check_derivation(&b, &up).unwrap() && check_derivation(&b, &down).unwrap());
    }

    #[test]
    fn single_term_generator() {
        let (b, rels) = line(Valuation::padic(2).unwrap(), "4*T1*T2");
        assert_eq!(rels.len(), 1);
        let (up, down) = derive_bend_pair(&b, &rels[0]).unwrap();
        assert_eq!(up.conclusion, Relation::leq(s("1/4*T1*T2"), s("0")));
        assert_eq!(down.conclusion, Relation::leq(s("0"), s("1/4*T1*T2")));
        assert!(check_derivation(&b, &up).unwrap() && check_derivation(&b, &down).unwrap());
    }

    #[test]
    fn bend_pair_needs_flags_and_generator() {
        let (b, rels) = line(Valuation::Trivial, "T1 + T2 + 1");
        let plain = TropPresentation { flags: Default::default(), ..b.clone() };
        assert_eq!(derive_bend_pair(&plain, &rels[0]).unwrap_err(), Error::MissingAxiom("1 + 1 == 1"));
        let (_, other) = line(Valuation::Trivial, "T1^2 + T2 + 1");
        let foreign = other.iter().find(|r| r.reduced == s("T2 + 1")).unwrap();
        assert!(matches!(derive_bend_pair(&b, foreign), Err(Error::NoMatchingGenerator(_))));
    }

    #[test]
    fn composed_chain_between_deletions() {
        let (b, rels) = line(Valuation::Trivial, "T1 + T2 + 1");
        let (_, down0) = derive_bend_pair(&b, &rels[0]).unwrap();
        let (up1, _) = derive_bend_pair(&b, &rels[1]).unwrap();
        let chain = compose(&down0, &up1);
        assert_eq!(chain.conclusion, Relation::leq(rels[0].reduced.clone(), rels[1].reduced.clone()));
        assert!(check_derivation(&b, &chain).unwrap());
    }
}

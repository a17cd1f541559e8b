//! Seeded property suites behind `trop verify`.
//!
//! Each suite compares a library operation against an independent oracle on
//! exact inputs and records every failing case. Reports carry no timings, so
//! the same seed always produces the same bytes.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::berkovich::{check_is_seminorm, default_catalog, line_trop_image, SeminormDescriptor};
use crate::blueprint::{base_change_to_t, dominated, idem_normal_form, monomial_blueprint};
use crate::entail::{check_derivation, derive_bend_pair};
use crate::hyperfield::{ext_add, ext_mul, leq_t, ExtendedTropElement};
use crate::poly::{parse_polynomial, FieldPolynomial, MonoidSignature, Monomial, Term, TropFormalSum};
use crate::scalar::{check_seminorm_axioms, strong_triangle_holds, Rational, TropValue, Valuation};
use crate::trop::{bend_relations, bend_vs_trop_points, evaluate_grid, AxisRange};
use crate::Result;

/// Failing cases kept per suite; the count is always exact.
const MAX_EXAMPLES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub examples: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult { name, cases: 0, failures: 0, examples: Vec::new() }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<SuiteResult>,
}

/// Every suite, in report order.
pub const SUITES: [&str; 8] = [
    "tropical_line_grid",
    "hypersum_relation",
    "bend_derivations",
    "valuation_axioms",
    "berkovich_line",
    "idempotent_normal_form",
    "extended_semiring",
    "padic_line_agreement",
];

/// Runs one suite by name with its own RNG stream derived from `seed`.
pub fn run_suite(name: &str, seed: u64) -> Result<SuiteResult> {
    let index = SUITES
        .iter()
        .position(|s| *s == name)
        .ok_or_else(|| crate::Error::Config(format!("unknown suite {name:?}")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    log::debug!("suite {name}: seed {seed}, stream {index}");
    match index {
        0 => tropical_line_grid(),
        1 => Ok(hypersum_relation(&mut rng, 1000)),
        2 => bend_derivations(&mut rng, 50),
        3 => Ok(valuation_axioms(&mut rng, 10_000, 1000)),
        4 => berkovich_line(&mut rng, 200),
        5 => Ok(idempotent_normal_form(&mut rng, 500, 200)),
        6 => Ok(extended_semiring(&mut rng, 500)),
        _ => padic_line_agreement(),
    }
}

pub fn run_all(seed: u64) -> Result<VerifyReport> {
    let suites = SUITES.iter().map(|s| run_suite(s, seed)).collect::<Result<Vec<_>>>()?;
    let passed = suites.iter().all(SuiteResult::passed);
    Ok(VerifyReport { seed, passed, suites })
}

fn q(n: i64, d: i64) -> Rational {
    Rational::ratio(n, d)
}

fn axes(dim: usize, hi: i64, step: Rational) -> Vec<AxisRange> {
    (0..dim)
        .map(|_| {
            AxisRange::new(TropValue::zero(), TropValue::from_integer(hi as u64), step.clone()).expect("valid axis")
        })
        .collect()
}

/// `max(x, y, 1)` attained at least twice, by sorting.
fn line_oracle(x: &TropValue, y: &TropValue) -> bool {
    let mut v = [x.clone(), y.clone(), TropValue::one()];
    v.sort();
    v[1] == v[2]
}

fn tropical_line_grid() -> Result<SuiteResult> {
    let mut suite = SuiteResult::new("tropical_line_grid");
    let sig = MonoidSignature::polynomial(2);
    let p = parse_polynomial("T1 + T2 + 1", sig)?;
    let b_t = base_change_to_t(&monomial_blueprint(&[p], sig)?.with_valuation(Valuation::Trivial))?;
    for (x, member) in evaluate_grid(&b_t, &axes(2, 4, q(1, 4)))? {
        let c = x.coords();
        suite.record(member == line_oracle(&c[0], &c[1]), || format!("{c:?}: {member}"));
    }
    Ok(suite)
}

/// Sorted, deduplicated test points that see every order type relative to
/// `values`: the values, 0, and the midpoints between neighbours.
fn universe(values: &[TropValue]) -> Vec<TropValue> {
    let mut base: Vec<TropValue> = values.to_vec();
    base.push(TropValue::zero());
    base.sort();
    base.dedup();
    let mut out = base.clone();
    for w in base.windows(2) {
        out.push(TropValue::new((w[0].value() + w[1].value()) / Rational::from_integer(2)).expect("nonnegative"));
    }
    out.push(TropValue::new(base.last().expect("nonempty").value() + &Rational::one()).expect("nonnegative"));
    out.sort();
    out
}

/// Pairwise hyperaddition of two single elements, as a membership test.
fn pair_contains(a: &TropValue, b: &TropValue, z: &TropValue) -> bool {
    match a.cmp(b) {
        std::cmp::Ordering::Equal => z <= a,
        _ => z == a.max(b),
    }
}

/// Whether `c` lies in `b_1 ⊞ ... ⊞ b_n`, folding the set-valued sum
/// pointwise over a universe that sees every order type.
fn iterated_hypersum_contains(c: &TropValue, summands: &[TropValue]) -> bool {
    let Some((first, rest)) = summands.split_first() else {
        return c.is_zero();
    };
    let mut all = summands.to_vec();
    all.push(c.clone());
    let u = universe(&all);
    let mut current: Vec<&TropValue> = u.iter().filter(|z| *z == first).collect();
    for b in rest {
        current = u.iter().filter(|z| current.iter().any(|a| pair_contains(a, b, z))).collect();
    }
    current.contains(&c)
}

fn random_trop(rng: &mut ChaCha8Rng, palette: &[TropValue]) -> TropValue {
    palette.choose(rng).expect("nonempty palette").clone()
}

fn hypersum_relation(rng: &mut ChaCha8Rng, cases: usize) -> SuiteResult {
    let mut suite = SuiteResult::new("hypersum_relation");
    let palette = [(0, 1), (1, 3), (1, 2), (1, 1), (3, 2), (2, 1), (5, 1)].map(|(n, d)| TropValue::ratio(n, d));
    for _ in 0..cases {
        let n = rng.gen_range(0..=6);
        let summands: Vec<TropValue> = (0..n).map(|_| random_trop(rng, &palette)).collect();
        let c = if n > 0 && rng.gen_bool(0.5) {
            summands.choose(rng).expect("nonempty").clone()
        } else {
            random_trop(rng, &palette)
        };
        let expected = iterated_hypersum_contains(&c, &summands);
        let got = leq_t(&c, &summands);
        suite.record(got == expected, || format!("{c} <= {summands:?}: got {got}, expected {expected}"));
    }
    suite
}

/// Random polynomial with 2 to 4 distinct monomials of degree <= 3 in up to 3
/// variables and coefficients in ±{1..9}.
pub fn random_polynomial(rng: &mut ChaCha8Rng) -> FieldPolynomial {
    let n = rng.gen_range(1..=3);
    let sig = MonoidSignature::polynomial(n);
    let mut monomials = Vec::new();
    for a in 0..=3i64 {
        for b in 0..=3i64 {
            for c in 0..=3i64 {
                let e = [a, b, c];
                if a + b + c <= 3 && e[n..].iter().all(|x| *x == 0) {
                    monomials.push(Monomial::new(e[..n].to_vec()));
                }
            }
        }
    }
    let k = rng.gen_range(2..=4.min(monomials.len()));
    let chosen: Vec<Monomial> = monomials.choose_multiple(rng, k).cloned().collect();
    let terms = chosen.into_iter().map(|m| {
        let c = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
        (m, Rational::from_integer(c))
    });
    FieldPolynomial::from_terms(sig, terms).expect("monomials match signature")
}

fn bend_derivations(rng: &mut ChaCha8Rng, corpus: usize) -> Result<SuiteResult> {
    let mut suite = SuiteResult::new("bend_derivations");
    let polys: Vec<FieldPolynomial> = (0..corpus).map(|_| random_polynomial(rng)).collect();
    for v in [Valuation::Trivial, Valuation::padic(3)?] {
        for p in &polys {
            let b_t = base_change_to_t(&monomial_blueprint(std::slice::from_ref(p), p.sig())?.with_valuation(v))?
                .apply_idem()
                .apply_pos();
            for r in bend_relations(std::slice::from_ref(p), &v)? {
                let ok = match derive_bend_pair(&b_t, &r) {
                    Ok((up, down)) => {
                        check_derivation(&b_t, &up)?
                            && check_derivation(&b_t, &down)?
                            && up.conclusion.lhs == r.full
                            && down.conclusion.rhs == r.full
                    }
                    Err(_) => false,
                };
                suite.record(ok, || format!("{v}: {p}: {r}"));
            }
        }
    }
    Ok(suite)
}

fn random_rational(rng: &mut ChaCha8Rng, p: u64) -> Rational {
    // Products of small powers of p and a cofactor, so valuations vary.
    let p = p as i64;
    let k: i64 = rng.gen_range(-3..=3);
    let unit = Rational::ratio(rng.gen_range(-40..=40), rng.gen_range(1..=40));
    &unit * &Rational::from_integer(p).pow(k).expect("p is nonzero")
}

/// `v(a)` computed directly from the prime factorisation: `p^-(ord num - ord den)`.
fn padic_oracle(a: &Rational, p: u64) -> TropValue {
    use num_bigint::BigInt;
    use num_traits::Zero;
    if a.is_zero() {
        return TropValue::zero();
    }
    let ord = |n: &BigInt| {
        let (mut n, mut k) = (n.clone(), 0i64);
        let p = BigInt::from(p);
        while (&n % &p).is_zero() {
            n /= &p;
            k += 1;
        }
        k
    };
    let e = ord(a.numer()) - ord(a.denom());
    TropValue::new(Rational::from_integer(p).pow(-e).expect("p is nonzero")).expect("positive")
}

fn valuation_axioms(rng: &mut ChaCha8Rng, pairs: usize, decompositions: usize) -> SuiteResult {
    let mut suite = SuiteResult::new("valuation_axioms");
    for p in [2u64, 3, 5] {
        let v = Valuation::padic(p).expect("prime");
        let samples: Vec<(Rational, Rational)> =
            (0..pairs).map(|_| (random_rational(rng, p), random_rational(rng, p))).collect();
        for (a, _) in samples.iter().take(200) {
            suite.record(v.apply(a) == padic_oracle(a, p), || format!("padic:{p}({a})"));
        }
        let report = check_seminorm_axioms(&v, &samples);
        suite.record(report.passed() && report.checked == pairs, || {
            format!("padic:{p}: {:?}", report.violations.iter().take(MAX_EXAMPLES).collect::<Vec<_>>())
        });
        for _ in 0..decompositions {
            // a = b_1 + ... + b_n with v(a) and every v(b_i) independent of the library.
            let n = rng.gen_range(1..=4);
            let parts: Vec<Rational> = (0..n).map(|_| random_rational(rng, p)).collect();
            let total: Rational = parts.iter().cloned().sum();
            let mut values: Vec<TropValue> = parts.iter().map(|b| padic_oracle(b, p)).collect();
            values.push(padic_oracle(&total, p));
            values.sort();
            let expected =
                values.last().is_none_or(|m| m.is_zero()) || values[values.len() - 2] == values[values.len() - 1];
            suite.record(expected && strong_triangle_holds(&v, &parts), || format!("padic:{p}: {parts:?}"));
        }
    }
    suite
}

fn random_univariate(rng: &mut ChaCha8Rng) -> FieldPolynomial {
    let sig = MonoidSignature::polynomial(1);
    let deg = rng.gen_range(0..=4);
    let terms = (0..=deg).map(|e| (Monomial::new(vec![e]), Rational::from_integer(rng.gen_range(-3..=3))));
    let p = FieldPolynomial::from_terms(sig, terms).expect("one variable");
    if p.is_zero() {
        FieldPolynomial::constant(sig, Rational::one())
    } else {
        p
    }
}

fn berkovich_line(rng: &mut ChaCha8Rng, pairs: usize) -> Result<SuiteResult> {
    let mut suite = SuiteResult::new("berkovich_line");
    let sig = MonoidSignature::polynomial(1);
    // Products with factors of the centers, so multiplicities above 0 occur.
    let factors = ["T1", "T1 + 1", "T1 - 2", "T1^2 + 1"].map(|s| parse_polynomial(s, sig).expect("literal"));
    let samples: Vec<(FieldPolynomial, FieldPolynomial)> = (0..pairs)
        .map(|_| {
            let mut g = random_univariate(rng);
            let mut h = random_univariate(rng);
            if rng.gen_bool(0.5) {
                g = g.mul(factors.choose(rng).expect("nonempty"));
                h = h.mul(factors.choose(rng).expect("nonempty"));
            }
            (g, h)
        })
        .collect();
    for w in default_catalog() {
        let report = check_is_seminorm(&w, &samples)?;
        suite.record(report.passed(), || format!("{w}: {:?}", report.violations));
    }

    let half = q(1, 2);
    let expected_nontrivial =
        [("T1", true), ("T1 + 1", true), ("T1 - 2", false), ("T1^2 + 1", false), ("T1^2 + T1 + 1", false)];
    for (f, expected) in expected_nontrivial {
        let w = SeminormDescriptor::f_adic(parse_polynomial(f, sig)?, half.clone())?;
        let image = line_trop_image(&w)?;
        suite.record(image.nontrivial == expected, || format!("{w}: nontrivial = {}", image.nontrivial));
    }
    let inf = line_trop_image(&SeminormDescriptor::infinity_adic(half)?)?;
    suite.record(inf.nontrivial, || "w_inf restricts trivially".into());
    let trivial = line_trop_image(&SeminormDescriptor::TrivialNorm)?;
    suite.record(!trivial.nontrivial, || "w_0 restricts nontrivially".into());
    Ok(suite)
}

fn random_sum(rng: &mut ChaCha8Rng, monomials: &[Monomial], palette: &[TropValue]) -> TropFormalSum {
    let n = rng.gen_range(0..=4);
    TropFormalSum::from_terms(
        (0..n).map(|_| Term::new(random_trop(rng, palette), monomials.choose(rng).expect("nonempty").clone())),
    )
}

fn idempotent_normal_form(rng: &mut ChaCha8Rng, pairs: usize, order_pairs: usize) -> SuiteResult {
    let mut suite = SuiteResult::new("idempotent_normal_form");
    let palette = [(1, 4), (1, 2), (1, 1), (2, 1), (7, 3)].map(|(n, d)| TropValue::ratio(n, d));
    let monomials = [vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 1]].map(Monomial::new);
    for _ in 0..pairs {
        let (a, b) = (random_trop(rng, &palette), random_trop(rng, &palette));
        let m = monomials.choose(rng).expect("nonempty").clone();
        let s = TropFormalSum::from_terms([Term::new(a.clone(), m.clone()), Term::new(b.clone(), m.clone())]);
        let expected = TropFormalSum::term(a.clone().max(b.clone()), m);
        suite.record(idem_normal_form(&s) == expected, || format!("nf({s})"));
    }
    for _ in 0..order_pairs {
        let x = random_sum(rng, &monomials, &palette);
        let y = random_sum(rng, &monomials, &palette);
        let by_nf = idem_normal_form(&x.add(&y)) == idem_normal_form(&y);
        suite.record(by_nf == dominated(&x, &y), || format!("{x} <= {y}"));
    }
    suite
}

fn random_ext(rng: &mut ChaCha8Rng) -> ExtendedTropElement {
    let t = TropValue::ratio(rng.gen_range(0..=4), rng.gen_range(1..=2));
    if rng.gen_bool(0.4) {
        ExtendedTropElement::ghost(t)
    } else {
        ExtendedTropElement::Point(t)
    }
}

fn extended_semiring(rng: &mut ChaCha8Rng, triples: usize) -> SuiteResult {
    let mut suite = SuiteResult::new("extended_semiring");
    for _ in 0..triples {
        let (x, y, z) = (random_ext(rng), random_ext(rng), random_ext(rng));
        let ok = ext_add(&x, &y) == ext_add(&y, &x)
            && ext_add(&ext_add(&x, &y), &z) == ext_add(&x, &ext_add(&y, &z))
            && ext_mul(&x, &y) == ext_mul(&y, &x)
            && ext_mul(&ext_mul(&x, &y), &z) == ext_mul(&x, &ext_mul(&y, &z))
            && ext_mul(&x, &ext_add(&y, &z)) == ext_add(&ext_mul(&x, &y), &ext_mul(&x, &z));
        suite.record(ok, || format!("{x:?}, {y:?}, {z:?}"));
    }
    suite
}

fn padic_line_agreement() -> Result<SuiteResult> {
    let mut suite = SuiteResult::new("padic_line_agreement");
    let sig = MonoidSignature::polynomial(2);
    let p = parse_polynomial("T1 + T2 + 3", sig)?;
    let report = bend_vs_trop_points(&[p], &Valuation::padic(3)?, &axes(2, 1, q(1, 12)))?;
    for d in &report.disagreements {
        suite.record(false, || format!("{d:?}"));
    }
    // Every grid point agreed; count them as passing cases.
    suite.cases += report.points_checked - report.disagreements.len();
    Ok(suite)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iterated_oracle_basics() {
        let t = |n, d| TropValue::ratio(n, d);
        assert!(iterated_hypersum_contains(&t(1, 2), &[t(1, 1), t(1, 1)]));
        assert!(!iterated_hypersum_contains(&t(2, 1), &[t(1, 1), t(1, 1)]));
        assert!(iterated_hypersum_contains(&t(1, 1), &[t(1, 1), t(1, 2)]));
        assert!(!iterated_hypersum_contains(&t(1, 2), &[t(1, 1), t(1, 2)]));
        assert!(iterated_hypersum_contains(&TropValue::zero(), &[]));
        // 2 ⊞ 1 ⊞ 1 = {2}, but 1 ⊞ 1 ⊞ 2 reaches 2 too.
        assert!(!iterated_hypersum_contains(&t(1, 1), &[t(2, 1), t(1, 1), t(1, 1)]));
    }

    #[test]
    fn suites_are_reproducible() {
        let a = run_suite("hypersum_relation", 3).unwrap();
        let b = run_suite("hypersum_relation", 3).unwrap();
        assert_eq!(a, b);
        assert!(a.passed());
        assert!(run_suite("nope", 0).is_err());
    }
}

//! Invariants checked with proptest against small, independent oracles.

use proptest::prelude::*;

use tropical_scheme::blueprint::{base_change_to_t, dominated, idem_normal_form, monomial_blueprint};
use tropical_scheme::hyperfield::{ext_add, ext_mul, hypersum, hypersum_n, leq_t, ExtendedTropElement, HyperSet};
use tropical_scheme::poly::{
    eval_trop, parse_polynomial, tropicalize_poly, FieldPolynomial, MonoidSignature, Monomial, Term, TropFormalSum,
};
use tropical_scheme::scalar::{Rational, TropValue, Valuation};
use tropical_scheme::trop::{bend_locus_member, trop_point_member, TropPoint};

fn trop_value() -> impl Strategy<Value = TropValue> {
    (0i64..=6, 1i64..=3).prop_map(|(n, d)| TropValue::ratio(n, d))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=60).prop_map(|(n, d)| Rational::ratio(n, d))
}

fn valuation() -> impl Strategy<Value = Valuation> {
    prop_oneof![Just(Valuation::Trivial), Just(Valuation::padic(2).unwrap()), Just(Valuation::padic(3).unwrap())]
}

fn polynomial(num_vars: usize, laurent: bool) -> impl Strategy<Value = FieldPolynomial> {
    let lo = if laurent { -2 } else { 0 };
    let term = (prop::collection::vec(lo..=3i64, num_vars), (-9i64..=9, 1i64..=4));
    prop::collection::vec(term, 1..=4).prop_filter_map("zero polynomial", move |terms| {
        let sig = MonoidSignature::new(num_vars, laurent).unwrap();
        let p = FieldPolynomial::from_terms(
            sig,
            terms.into_iter().map(|(e, (n, d))| (Monomial::new(e), Rational::ratio(n, d))),
        )
        .unwrap();
        (!p.is_zero()).then_some(p)
    })
}

fn point(num_vars: usize) -> impl Strategy<Value = TropPoint> {
    prop::collection::vec((0i64..=8, 1i64..=4).prop_map(|(n, d)| TropValue::ratio(n, d)), num_vars)
        .prop_map(TropPoint::new)
}

fn trop_sum() -> impl Strategy<Value = TropFormalSum> {
    let monomial = prop::sample::select(vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
    prop::collection::vec((trop_value(), monomial), 0..=4)
        .prop_map(|ts| TropFormalSum::from_terms(ts.into_iter().map(|(c, e)| Term::new(c, Monomial::new(e)))))
}

/// Test points seeing every order type relative to `values`.
fn universe(values: &[TropValue]) -> Vec<TropValue> {
    let mut base = values.to_vec();
    base.push(TropValue::zero());
    base.sort();
    base.dedup();
    let mut out = base.clone();
    for w in base.windows(2) {
        out.push(TropValue::new((w[0].value() + w[1].value()) / Rational::from_integer(2)).unwrap());
    }
    out.push(TropValue::new(base.last().unwrap().value() + &Rational::one()).unwrap());
    out
}

/// Membership in `{a} ⊞ {b}` straight from the definition.
fn pair_contains(a: &TropValue, b: &TropValue, z: &TropValue) -> bool {
    if a == b {
        z <= a
    } else {
        z == a.max(b)
    }
}

/// Membership in `A ⊞ B` for sets given as membership tests, over `u`.
fn lifted(u: &[TropValue], a: impl Fn(&TropValue) -> bool, b: impl Fn(&TropValue) -> bool) -> Vec<TropValue> {
    u.iter()
        .filter(|z| u.iter().filter(|x| a(x)).any(|x| u.iter().filter(|y| b(y)).any(|y| pair_contains(x, y, z))))
        .cloned()
        .collect()
}

fn ext_element() -> impl Strategy<Value = ExtendedTropElement> {
    (trop_value(), any::<bool>()).prop_map(|(t, ghost)| {
        if ghost {
            ExtendedTropElement::ghost(t)
        } else {
            ExtendedTropElement::Point(t)
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn hypersum_n_is_the_iterated_set_sum(values in prop::collection::vec(trop_value(), 1..=5)) {
        let u = universe(&values);
        let mut acc: Vec<TropValue> = vec![values[0].clone()];
        for b in &values[1..] {
            acc = lifted(&u, |x| acc.contains(x), |y| y == b);
        }
        let got = hypersum_n(&values).unwrap();
        for z in &u {
            prop_assert_eq!(got.contains(z), acc.contains(z), "{:?} at {}", values, z);
        }
    }

    #[test]
    fn leq_t_is_membership(c in trop_value(), values in prop::collection::vec(trop_value(), 0..=5)) {
        let expected = if values.is_empty() { c.is_zero() } else { hypersum_n(&values).unwrap().contains(&c) };
        prop_assert_eq!(leq_t(&c, &values), expected);
    }

    #[test]
    fn hypersum_commutes(a in trop_value(), b in trop_value()) {
        prop_assert_eq!(hypersum(&a, &b), hypersum(&b, &a));
    }

    #[test]
    fn ext_add_is_the_set_sum(x in ext_element(), y in ext_element()) {
        let (sx, sy) = (x.as_set(), y.as_set());
        let u = universe(&[sx.max().clone(), sy.max().clone()]);
        let expected = lifted(&u, |a| sx.contains(a), |b| sy.contains(b));
        let got = ext_add(&x, &y).as_set();
        for z in &u {
            prop_assert_eq!(got.contains(z), expected.contains(z));
        }
    }

    #[test]
    fn ext_semiring_laws(x in ext_element(), y in ext_element(), z in ext_element()) {
        prop_assert_eq!(ext_add(&x, &y), ext_add(&y, &x));
        prop_assert_eq!(ext_add(&ext_add(&x, &y), &z), ext_add(&x, &ext_add(&y, &z)));
        prop_assert_eq!(ext_mul(&ext_mul(&x, &y), &z), ext_mul(&x, &ext_mul(&y, &z)));
        prop_assert_eq!(ext_mul(&x, &ext_add(&y, &z)), ext_add(&ext_mul(&x, &y), &ext_mul(&x, &z)));
        prop_assert_eq!(ext_add(&x, &ExtendedTropElement::zero()), x.clone());
    }

    #[test]
    fn parse_display_round_trip(p in polynomial(3, true)) {
        let text = p.to_string();
        prop_assert_eq!(parse_polynomial(&text, p.sig()).unwrap(), p, "{}", text);
    }

    #[test]
    fn valuations_are_multiplicative(v in valuation(), a in rational(), b in rational()) {
        prop_assert_eq!(v.apply(&(&a * &b)), &v.apply(&a) * &v.apply(&b));
        prop_assert!(v.apply(&(&a + &b)) <= v.apply(&a).max(v.apply(&b)));
    }

    #[test]
    fn base_change_ignores_generator_order(v in valuation(), p in polynomial(2, false), q in polynomial(2, false)) {
        let sig = p.sig();
        let forward = base_change_to_t(&monomial_blueprint(&[p.clone(), q.clone()], sig).unwrap().with_valuation(v)).unwrap();
        let backward = base_change_to_t(&monomial_blueprint(&[q, p], sig).unwrap().with_valuation(v)).unwrap();
        prop_assert_eq!(forward.relation_set(), backward.relation_set());
    }

    #[test]
    fn normal_form_is_idempotent_and_monotone(x in trop_sum(), y in trop_sum()) {
        let nf = idem_normal_form(&x);
        prop_assert_eq!(idem_normal_form(&nf), nf.clone());
        prop_assert!(nf.len() <= x.len());
        prop_assert!(dominated(&x, &x.add(&y)));
    }

    #[test]
    fn order_criterion(x in trop_sum(), y in trop_sum()) {
        let by_nf = idem_normal_form(&x.add(&y)) == idem_normal_form(&y);
        prop_assert_eq!(by_nf, dominated(&x, &y));
    }

    #[test]
    fn bend_locus_is_leq_zero(p in polynomial(2, false), v in valuation(), x in point(2)) {
        let trop = tropicalize_poly(&p, &v);
        let values = eval_trop(&trop, &x).unwrap();
        prop_assert_eq!(bend_locus_member(&trop, &x).unwrap(), leq_t(&TropValue::zero(), &values));
    }

    #[test]
    fn homogeneous_bend_locus_is_scale_invariant(
        coeffs in prop::collection::vec(prop_oneof![-9i64..=-1, 1i64..=9], 4),
        x in point(2),
        lambda in (1i64..=5, 1i64..=5),
    ) {
        // Degree 3 in two variables: T1^3, T1^2 T2, T1 T2^2, T2^3.
        let sig = MonoidSignature::polynomial(2);
        let p = FieldPolynomial::from_terms(
            sig,
            coeffs.iter().enumerate().map(|(i, c)| (Monomial::new(vec![3 - i as i64, i as i64]), Rational::from_integer(*c))),
        ).unwrap();
        let trop = tropicalize_poly(&p, &Valuation::Trivial);
        let scaled = x.scale(&TropValue::ratio(lambda.0, lambda.1));
        prop_assert_eq!(bend_locus_member(&trop, &x).unwrap(), bend_locus_member(&trop, &scaled).unwrap());
    }

    #[test]
    fn points_of_the_tropicalization_are_the_bend_locus(p in polynomial(2, false), v in valuation(), x in point(2)) {
        let b_t = base_change_to_t(&monomial_blueprint(std::slice::from_ref(&p), p.sig()).unwrap().with_valuation(v)).unwrap();
        let trop = tropicalize_poly(&p, &v);
        prop_assert_eq!(trop_point_member(&b_t, &x).unwrap(), bend_locus_member(&trop, &x).unwrap());
    }
}

#[test]
fn hyperset_interval_normalizes_zero() {
    assert_eq!(HyperSet::interval(TropValue::zero()), HyperSet::Singleton(TropValue::zero()));
}

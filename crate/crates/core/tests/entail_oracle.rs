//! Bounded search against the max-occurs-twice rule on constant relations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropical_scheme::blueprint::{Relation, TropPresentation};
use tropical_scheme::entail::{check_derivation, search_leq, SearchOutcome};
use tropical_scheme::poly::{MonoidSignature, Monomial, TropFormalSum};
use tropical_scheme::scalar::TropValue;

/// Independent oracle: sort, then look at the top two values.
fn max_twice(c: &TropValue, bs: &[TropValue]) -> bool {
    if bs.iter().all(TropValue::is_zero) {
        return c.is_zero();
    }
    let mut all: Vec<&TropValue> = std::iter::once(c).chain(bs).collect();
    all.sort();
    all[all.len() - 1] == all[all.len() - 2]
}

fn constant_sum(values: &[TropValue]) -> TropFormalSum {
    TropFormalSum::from_terms(values.iter().map(|v| tropical_scheme::poly::Term::new(v.clone(), Monomial::one(1))))
}

#[test]
fn search_matches_max_twice_on_small_instances() {
    let sig = MonoidSignature::polynomial(1);
    let free = TropPresentation::free(sig);
    let palette = [TropValue::zero(), TropValue::ratio(1, 2), TropValue::one(), TropValue::from(2), TropValue::from(3)];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut found = 0;
    for _ in 0..120 {
        let n = rng.gen_range(1..=4);
        let c = palette[rng.gen_range(0..palette.len())].clone();
        let bs: Vec<TropValue> = (0..n).map(|_| palette[rng.gen_range(0..palette.len())].clone()).collect();
        let target = Relation::leq(constant_sum(std::slice::from_ref(&c)), constant_sum(&bs));
        let expected = max_twice(&c, &bs);
        match search_leq(&free, &target, 6) {
            SearchOutcome::Found(d) => {
                assert!(expected, "derived a false relation {target}");
                assert!(check_derivation(&free, &d).unwrap());
                found += 1;
            }
            SearchOutcome::Unknown => assert!(!expected, "missed {target}"),
        }
    }
    assert!(found > 10);
}

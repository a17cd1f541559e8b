//! Hyperaddition in 𝕋, the n-ary relation test, and ghost elements.

use tropical_scheme::hyperfield::{ext_add, ext_mul, hypersum, hypersum_n, leq_t, ExtendedTropElement};
use tropical_scheme::scalar::TropValue;

fn main() -> tropical_scheme::Result<()> {
    let (two, three) = (TropValue::from(2), TropValue::from(3));
    println!("2 ⊞ 3 = {}", hypersum(&two, &three));
    println!("2 ⊞ 2 = {}", hypersum(&two, &two));

    let values = [TropValue::ratio(1, 2), TropValue::from(3), TropValue::from(3)];
    println!("1/2 ⊞ 3 ⊞ 3 = {}", hypersum_n(&values)?);

    // c <= b1 + ... + bn holds iff the maximum of c, b1, ..., bn occurs twice.
    for c in [TropValue::zero(), TropValue::from(1), TropValue::from(3), TropValue::from(4)] {
        println!("{c} <= 1/2 + 3 + 3 : {}", leq_t(&c, &values));
    }

    let x = ExtendedTropElement::Point(TropValue::from(2));
    let y = ExtendedTropElement::ghost(TropValue::from(2));
    println!("extended: 2 + 2 = {}, 2 · 2^ν = {}", ext_add(&x, &x), ext_mul(&x, &y));
    Ok(())
}

//! p-adic orders and absolute values on ℚ, checked against the seminorm axioms.

use tropical_scheme::scalar::{
    check_seminorm_axioms, padic_valuation, strong_triangle_holds, Prime, Rational, Valuation,
};

fn main() -> tropical_scheme::Result<()> {
    let p3 = Prime::new(3)?;
    for a in ["6", "9/2", "0", "-5/27"] {
        let a: Rational = a.parse()?;
        println!("ord_3({a}) = {}", padic_valuation(&a, p3));
    }

    let v = Valuation::padic(3)?;
    println!(
        "|6|_3 = {}, trivial |7/5| = {}",
        v.apply(&Rational::from_integer(6)),
        Valuation::Trivial.apply(&Rational::ratio(7, 5))
    );

    let samples: Vec<(Rational, Rational)> =
        (1..=50).map(|i| (Rational::ratio(i * 3, 7), Rational::ratio(5 - i, 9))).collect();
    let report = check_seminorm_axioms(&v, &samples);
    println!("{} pairs checked, {} violations", report.checked, report.violations.len());

    // 9 + 3 + (-12) = 0: the largest absolute value appears at least twice.
    let parts = [9, 3, -12].map(Rational::from_integer);
    println!("maximum twice for 9 + 3 - 12: {}", strong_triangle_holds(&v, &parts));
    Ok(())
}

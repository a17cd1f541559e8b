//! From a polynomial string to the tropicalized blueprint presentation.

use tropical_scheme::blueprint::{base_change_to_t, monomial_blueprint};
use tropical_scheme::poly::{parse_polynomial, tropicalize_poly, MonoidSignature};
use tropical_scheme::scalar::Valuation;

fn main() -> tropical_scheme::Result<()> {
    let sig = MonoidSignature::polynomial(2);
    let p = parse_polynomial("T1^2 - 6*T1*T2 + 9/4", sig)?;
    println!("p = {p}");

    for v in [Valuation::Trivial, Valuation::padic(2)?, Valuation::padic(3)?] {
        println!("trop_{v}(p) = {}", tropicalize_poly(&p, &v));
    }

    let b = monomial_blueprint(&[p], sig)?.with_valuation(Valuation::padic(3)?);
    println!("\nmonomial blueprint: {b}");
    let b_t = base_change_to_t(&b)?;
    println!("after base change:  {b_t}");
    println!("\n{}", serde_json::to_string_pretty(&b_t).expect("serializable"));

    match parse_polynomial("T1 + * T2", sig) {
        Err(e) => println!("\nparse error: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

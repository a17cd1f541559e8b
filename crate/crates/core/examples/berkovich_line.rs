//! Seminorms on ℚ[T] with the trivial absolute value, restricted to the
//! monomials of T1 + T2 + 1 = 0.

use tropical_scheme::berkovich::{default_catalog, eval_seminorm, line_trop_image, SeminormDescriptor};
use tropical_scheme::poly::{parse_polynomial, MonoidSignature};
use tropical_scheme::scalar::Rational;

fn main() -> tropical_scheme::Result<()> {
    let sig = MonoidSignature::polynomial(1);
    let g = parse_polynomial("T1^3 + T1^2", sig)?;
    let w = SeminormDescriptor::f_adic(parse_polynomial("T1", sig)?, Rational::ratio(1, 2))?;
    println!("{w}(T1^2 (T1 + 1)) = {}", eval_seminorm(&w, &g)?);

    println!("\n{:<24} {:<11} formula", "seminorm", "on the line");
    for w in default_catalog() {
        let image = line_trop_image(&w)?;
        let kind = if image.nontrivial { "nontrivial" } else { "trivial" };
        println!("{:<24} {:<11} {}", w.to_string(), kind, image.formula);
    }
    Ok(())
}

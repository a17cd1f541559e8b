//! The line T1 + T2 + 3 = 0 under the 3-adic valuation: presentation
//! membership, bend locus and bend relations agree on every grid point.

use tropical_scheme::poly::{parse_polynomial, MonoidSignature};
use tropical_scheme::scalar::{Rational, TropValue, Valuation};
use tropical_scheme::trop::{bend_relations, bend_vs_trop_points, AxisRange};

fn main() -> tropical_scheme::Result<()> {
    let sig = MonoidSignature::polynomial(2);
    let p = parse_polynomial("T1 + T2 + 3", sig)?;
    let v = Valuation::padic(3)?;

    for r in bend_relations(std::slice::from_ref(&p), &v)? {
        println!("bend relation: {r}");
    }

    let axis = AxisRange::new(TropValue::zero(), TropValue::one(), Rational::ratio(1, 12))?;
    let report = bend_vs_trop_points(&[p], &v, &[axis.clone(), axis])?;
    println!(
        "{} points, {} on the tropical line, {} disagreements",
        report.points_checked,
        report.members,
        report.disagreements.len()
    );
    Ok(())
}

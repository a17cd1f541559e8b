//! 𝕋-points of the tropicalized line T1 + T2 + 1 = 0, drawn as a character grid.

use tropical_scheme::blueprint::{base_change_to_t, monomial_blueprint};
use tropical_scheme::poly::{parse_polynomial, MonoidSignature};
use tropical_scheme::scalar::{Rational, TropValue, Valuation};
use tropical_scheme::trop::{evaluate_grid, AxisRange};

fn main() -> tropical_scheme::Result<()> {
    let sig = MonoidSignature::polynomial(2);
    let line = parse_polynomial("T1 + T2 + 1", sig)?;
    let b_t = base_change_to_t(&monomial_blueprint(&[line], sig)?.with_valuation(Valuation::Trivial))?;
    println!("{b_t}\n");

    let axis = AxisRange::new(TropValue::zero(), TropValue::from(4), Rational::ratio(1, 4))?;
    let grid = evaluate_grid(&b_t, &[axis.clone(), axis.clone()])?;
    let n = axis.values().len();
    // Rows from the top (largest T2) down.
    for row in (0..n).rev() {
        let line: String = (0..n).map(|col| if grid[col * n + row].1 { '#' } else { '.' }).collect();
        println!("{line}");
    }
    println!("\n{} of {} points lie on the tropical line", grid.iter().filter(|(_, m)| *m).count(), grid.len());
    Ok(())
}

//! Normal forms in the idempotent, totally positive quotient, and the order
//! they induce.

use tropical_scheme::blueprint::{dominated, idem_normal_form};
use tropical_scheme::poly::{parse_trop_sum, MonoidSignature};

fn main() -> tropical_scheme::Result<()> {
    let sig = MonoidSignature::polynomial(2);
    let s = parse_trop_sum("2*T1 + 1/2*T1 + T2 + 3*T2 + 1", sig)?;
    println!("nf({s}) = {}", idem_normal_form(&s));

    let x = parse_trop_sum("T1 + 1/2*T2", sig)?;
    let y = parse_trop_sum("2*T1 + T2", sig)?;
    for (a, b) in [(&x, &y), (&y, &x)] {
        let by_nf = idem_normal_form(&a.add(b)) == idem_normal_form(b);
        println!("{a} <= {b}: {} (nf(a + b) = nf(b): {by_nf})", dominated(a, b));
    }
    Ok(())
}

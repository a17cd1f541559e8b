//! Derives both directions of every bend relation from the tropicalized
//! presentation, checks them, and prints one as a proof script.

use tropical_scheme::blueprint::{base_change_to_t, monomial_blueprint, Relation};
use tropical_scheme::entail::{check_derivation, derivation_to_script, derive_bend_pair, search_leq, SearchOutcome};
use tropical_scheme::poly::{parse_polynomial, parse_trop_sum, MonoidSignature};
use tropical_scheme::scalar::Valuation;
use tropical_scheme::trop::bend_relations;

fn main() -> tropical_scheme::Result<()> {
    let sig = MonoidSignature::polynomial(2);
    let p = parse_polynomial("T1 + T2 + 1", sig)?;
    let v = Valuation::Trivial;
    let b_t = base_change_to_t(&monomial_blueprint(std::slice::from_ref(&p), sig)?.with_valuation(v))?
        .apply_idem()
        .apply_pos();

    for r in bend_relations(&[p], &v)? {
        let (up, down) = derive_bend_pair(&b_t, &r)?;
        println!(
            "{r}: {} + {} steps, checked {} / {}",
            up.len(),
            down.len(),
            check_derivation(&b_t, &up)?,
            check_derivation(&b_t, &down)?
        );
        if r.dropped_term_index == 0 {
            println!("\n{}", derivation_to_script(&up));
        }
    }

    // Without a recipe, bounded search still finds short consequences.
    let target = Relation::leq(parse_trop_sum("T1", sig)?, parse_trop_sum("T1 + T2 + 1", sig)?);
    match search_leq(&b_t, &target, 3) {
        SearchOutcome::Found(d) => println!("search: {} in {} steps", d.conclusion, d.len()),
        SearchOutcome::Unknown => println!("search: unknown"),
    }
    Ok(())
}

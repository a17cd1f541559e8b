//! Tropical scheme theory over the tropical hyperfield, computed exactly.
//!
//! Ordered blueprints are handled through finite presentations: generators,
//! a list of monomial relations and two axiom flags (`1 + 1 = 1` and
//! `0 <= 1`). Everything else is a rewrite of such presentations:
//!
//! * [`scalar`]: exact rationals, the tropical value type and valuations on ℚ.
//! * [`hyperfield`]: hyperaddition of 𝕋, the n-ary relation test and the
//!   extended tropical semiring with ghost elements.
//! * [`poly`]: monomials, polynomials over ℚ, formal sums over 𝕋 and the
//!   polynomial text grammar.
//! * [`blueprint`]: the monomial blueprint of an embedded hypersurface, base
//!   change to 𝕋 and the idempotent / totally positive / core functors.
//! * [`trop`]: 𝕋-point membership, bend loci, grid sampling and bend relations.
//! * [`entail`]: replayable derivations and a bounded proof search.
//! * [`berkovich`]: the seminorm catalog of the affine line over a trivially
//!   valued field.
//! * [`cli`] and [`verify`]: the job runner behind the `trop` binary.
//!
//! Tropical values are nonnegative *rationals*, not reals. Every valuation on
//! ℚ and every catalog seminorm takes rational values on the inputs used here,
//! so nothing is lost, and all comparisons stay exact.
//!
//! ```
//! use tropical_scheme::blueprint::{base_change_to_t, monomial_blueprint};
//! use tropical_scheme::poly::{parse_polynomial, MonoidSignature};
//! use tropical_scheme::scalar::{TropValue, Valuation};
//! use tropical_scheme::trop::{trop_point_member, TropPoint};
//!
//! let sig = MonoidSignature::polynomial(2);
//! let p = parse_polynomial("T1 + T2 + 3", sig)?;
//! let b = monomial_blueprint(&[p], sig)?.with_valuation(Valuation::padic(3)?);
//! let b_t = base_change_to_t(&b)?;
//! let x = TropPoint::new(vec![TropValue::ratio(1, 3), TropValue::ratio(1, 6)]);
//! assert!(trop_point_member(&b_t, &x)?);
//!
//! // Implicit products, fractions, parenthesized negatives, Laurent exponents.
//! assert!(parse_polynomial("3/2*T1^2 T2 - 5", sig).is_ok());
//! assert!(parse_polynomial("x*y + (−1/3)", sig).is_ok());
//! assert!(parse_polynomial("T1^-1 + T2", MonoidSignature::new(2, true)?).is_ok());
//! # Ok::<(), tropical_scheme::Error>(())
//! ```

pub mod berkovich;
pub mod blueprint;
pub mod cli;
pub mod entail;
mod error;
pub mod hyperfield;
pub mod poly;
pub mod scalar;
pub mod trop;
pub mod verify;

pub use error::{Error, Result};

//! Monomials, polynomials over ℚ, formal sums and their text grammar.

mod formal_sum;
mod monomial;
mod parser;
mod polynomial;

pub(crate) use formal_sum::check_dims;
pub use formal_sum::{Coefficient, FieldFormalSum, FormalSum, Term, TermJson, TropFormalSum};
pub use monomial::{MonoidSignature, Monomial};
pub use parser::{parse_formal_sum, parse_polynomial, parse_trop_sum};
pub use polynomial::{tropicalize_poly, FieldPolynomial};

use crate::scalar::TropValue;
use crate::trop::TropPoint;
use crate::Result;

/// Term values `c_i * x^(a_i)` of a tropical sum at `x`, in term order.
pub fn eval_trop(s: &TropFormalSum, x: &TropPoint) -> Result<Vec<TropValue>> {
    s.terms().iter().map(|t| Ok(&t.coeff * &t.monomial.eval(x.coords())?)).collect()
}

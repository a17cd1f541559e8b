//! Exact scalars: rationals, tropical values and valuations on ℚ.

mod rational;
mod trop_value;
mod valuation;

pub use rational::Rational;
pub use trop_value::TropValue;
pub use valuation::{
    check_seminorm_axioms, padic_valuation, strong_triangle_holds, AxiomViolation, PadicOrder, Prime, SeminormReport,
    Valuation,
};

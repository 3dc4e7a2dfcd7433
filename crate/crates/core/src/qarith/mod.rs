//! Exact arithmetic in the fraction field of Laurent polynomials in a
//! fixed root `s = q^(1/D)` of the deformation parameter, plus q-integers
//! and truncated power-series expansion at `q = e^h`.

mod field;
mod laurent;
mod qnum;
mod series;

pub use field::FieldElement;
pub use laurent::LaurentPoly;
pub use qnum::{q_binomial, q_factorial, q_integer};
pub use series::{expand_at_q_exp_h, TruncatedSeries};

//! Integer polynomials, exact resultants and discriminants, Bezout
//! reduction, and numerical root extraction.

mod bezout;
mod complex;
mod intpoly;
mod resultant;
mod roots;

pub use bezout::{bezout, unimodular_shift, IntMatrix2};
pub use complex::ComplexPoly;
pub use intpoly::IntPoly;
pub use resultant::{
    bareiss_determinant, discriminant, discriminant_formal, ln_abs, resultant, resultant_dd,
    subresultant_prs, sylvester_resultant, BAREISS_MAX_DEGREE,
};
pub use roots::{roots, roots_int, MAX_ITERATIONS, RESIDUAL_TOLERANCE};

//! Potential theory with respect to 0 and infinity, homogeneous capacity in
//! C^2, and equidistribution of zeros of algebraic-unit polynomials.
//!
//! Modules, bottom-up:
//!
//! * [`polycore`]: integer polynomials, exact resultants, root finding.
//! * [`planar`]: Green's functions, the 2x2 Robin matrix and its game value,
//!   capacity with respect to 0 and infinity, heights.
//! * [`robinson`]: the interval family `J_tau` and the trace computation.
//! * [`homspace`]: wedge kernel, homogeneous energy, zeros and resultants of
//!   homogeneous-plus-constant maps, the lift `p -> F`.
//! * [`experiments`]: explicit unit sequences and convergence reports.
//! * [`cli`]: the command-line front end.

pub mod cli;
pub mod error;
pub mod experiments;
pub mod homspace;
pub mod planar;
pub mod polycore;
pub mod quadrature;
pub mod robinson;

pub use error::{Error, Result};

//! Potential theory in the plane with respect to the two poles 0 and
//! infinity.

mod capacity;
mod game;
mod measure;
mod set;

pub use capacity::{
    cantor_capacity, gamma_matrix, height, height_with_zeros, preimage_payoffs, pullback_green,
    robin_constant, HeightReport,
};
pub use game::{equalizing_vector, game_value, GameMatrix2, ProbVector2};
pub use measure::{nu_density, sample_nu_k, DiscreteMeasure1D, Pole};
pub use set::{MonicRationalMap, PlanarSet};

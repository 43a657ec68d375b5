//! Homogeneous potential theory in `C^2`: the wedge kernel, maps of the
//! form `(F1 + a1, F2 + a2)` with their resultants and zeros, discrete and
//! quadrature energies, Robin functions and heights.

mod energy;
mod hommap;
mod robin;
mod zeros;

pub use energy::{
    discrete_hom_energy, pushforward_pi, quad_hom_energy, support_radius, DiscreteMeasure2D,
    EnergyTarget, Projected,
};
pub use hommap::{
    lift, norm2, normal_form, res_hommap, wedge, ComplexHomMap, HomMap, NormalForm, Reduction, C2,
};
pub use robin::{c2, hom_height, hom_height_with_zeros, robin_fk, CircledSet, RobinFunctionK};
pub use zeros::{
    canonical_zeros, is_generic, lemma41_check, lemma42_check, log_wedge_product, proportional,
    select_generic, zeros_by_direction, zeros_hommap, IdentityReport, InequalityReport,
    INEQUALITY_SLACK,
};

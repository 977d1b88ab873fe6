//! Sp(n) Verlinde fusion rings.

pub mod character;
pub mod douglas;
pub mod gamma;
pub mod label;
pub mod ring;

pub use character::{
    bent_character_poly, dimension, dimension_kt, fundamental_char_values, fundamental_dims,
    kt_character_poly,
};
pub use douglas::{
    braun_douglas, braun_douglas_closed_form, braun_douglas_via_sums, douglas_sum,
    douglas_sum_negative_form, ClosedFormReading,
};
pub use gamma::{gamma_multivariate, gamma_polynomials, gamma_via_exterior};
pub use label::{eval_sets, labels, level_labels, SpLabel};
pub use ring::{build_fusion_ring, det_t_formula_sp1, ever_conjecture, ever_conjecture_shifted, FusionRing};

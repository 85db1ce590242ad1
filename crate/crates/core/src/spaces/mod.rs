//! Norms, pairings and projection ladders for the concrete function spaces.

pub mod grid;
pub mod hb;
pub mod norms;
pub mod outer;

pub use grid::{gauss_legendre_unit, CircleGrid};
pub use hb::{hb_kernel0_norm, phi_growth_profile, HbSpace};
pub use norms::{
    bergman2_from_coeffs, bergman_norm, bergman_norm_pow, bergman_pairing, bloch_norm,
    circle_pairing, hardy_norm, l1_norm, lp_norm, projection_norm, sup_norm, SpaceId,
};
pub use outer::{b_from_phi, pythag_complement, PythagComplement};

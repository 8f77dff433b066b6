//! Regime-specific Riemann–Hilbert problems and the top-level `Ψ` evaluator.

pub mod larget;
pub mod largex;
pub mod lens;
pub mod painleve;
pub mod psi;
pub mod region;
pub mod undeformed;

pub use psi::{
    psi, psi_eval, psi_large_t, psi_large_x, psi_painleve, psi_undeformed, solve_in_region,
    PsiEval, PsiOptions,
};
pub use region::{convert_coords, select_region, select_region_with, CoordMode, RegimeConstants, Region};

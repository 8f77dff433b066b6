//! Rogue waves of infinite order for the focusing nonlinear Schrödinger equation.
//!
//! `Ψ(X, T; G(a, b), B)` is computed by numerically solving regime-specific
//! Riemann–Hilbert problems with a Chebyshev collocation solver, and checked
//! against closed-form asymptotics, a Painlevé-II tritronquée solver and a
//! Bessel-kernel Fredholm determinant.

pub mod asymptotics;
pub mod cli;
pub mod error;
pub mod fredholm;
pub mod mat2;
pub mod painleve2;
pub mod params;
pub mod phases;
pub mod regimes;
pub mod rhp;
pub mod special;

pub use error::{Error, Result};
pub use mat2::Mat2;
pub use num_complex::Complex64 as C64;
pub use regimes::{psi, psi_eval, PsiEval, PsiOptions, Region};

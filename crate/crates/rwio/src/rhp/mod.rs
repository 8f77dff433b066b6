//! Generic matrix Riemann–Hilbert solver on polygonal contours.
//!
//! The density of the Cauchy representation `Φ = I + C[F]` is expanded in
//! Chebyshev polynomials of the first kind on every straight arc and the
//! jump condition `C₊[F] − C₋[F] V = V − I` is collocated at Chebyshev–Lobatto
//! points. Endpoint rows use the finite part of the logarithmically singular
//! Cauchy transforms, approached along the arc's own direction.

pub mod cauchy;
pub mod contour;
pub mod solve;

pub use contour::{Arc, Contour, End};
pub use solve::{
    assemble, boundary_values, density_at, eval_offcontour, first_moment, jump_fn, jump_residual, solve_rhp,
    Density, JumpFn, RHProblem, SolveReport,
};

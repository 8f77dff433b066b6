//! The original problem on a square around `Λ = 0`.

use crate::error::Result;
use crate::mat2::Mat2;
use crate::params::ParamSet;
use crate::rhp::{first_moment, jump_fn, solve_rhp, Contour, RHProblem, SolveReport};
use num_complex::Complex64 as C64;
use std::f64::consts::FRAC_PI_4;

/// Radius of the jump contour: `1` for `T ≤ 1`, `T^{-1/2}` beyond.
pub fn contour_radius(t: f64) -> f64 {
    if t <= 1.0 {
        1.0
    } else {
        t.powf(-0.5)
    }
}

/// `Λ X + Λ² T + 2/Λ`.
pub fn phase(lambda: C64, x: f64, t: f64) -> C64 {
    lambda * x + lambda * lambda * t + 2.0 / lambda
}

/// Clockwise square inscribed in `|Λ| = r`, `n` nodes per side, with the jump
/// `e^{-iθσ₃} G e^{iθσ₃}`.
pub fn build(x: f64, t: f64, g: Mat2, n: usize) -> Result<RHProblem> {
    let r = contour_radius(t);
    let verts: Vec<C64> = [1.0, -1.0, -3.0, 3.0]
        .iter()
        .map(|k| C64::from_polar(r, k * FRAC_PI_4))
        .collect();
    let arcs = Contour::polygon(&verts, n, "square");
    let jumps = arcs
        .iter()
        .map(|_| jump_fn(move |z| g.conj_phase(phase(z, x, t))))
        .collect();
    RHProblem::new(Contour::new(arcs)?, jumps)
}

/// `Ψ(X, T; G(a, b), 1)` for `X, T ≥ 0` from the undeformed problem, with the solve report.
pub fn rwio_undeformed(x: f64, t: f64, p: &ParamSet, n: usize) -> Result<(C64, SolveReport)> {
    if p.is_degenerate() {
        return Ok((C64::new(0.0, 0.0), zero_report()));
    }
    let problem = build(x, t, p.g_matrix(), n)?;
    let (d, rep) = solve_rhp(&problem)?;
    let m1 = first_moment(&d);
    Ok((C64::new(0.0, 2.0) * m1[(0, 1)], rep))
}

pub(crate) fn zero_report() -> SolveReport {
    SolveReport { max_jump_residual: 0.0, matrix_dimension: 0, condition_estimate: None }
}

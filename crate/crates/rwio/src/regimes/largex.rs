//! Large-X solver: lenses through the two real stationary points `z1(v) < 0 < z2(v)`.

use super::lens::{arch_height, solve_lens, LensContour};
use crate::error::{Error, Result};
use crate::params::ParamSet;
use crate::phases::{crit_point_far, crit_points_x, v_c};
use crate::rhp::SolveReport;
use num_complex::Complex64 as C64;
use std::f64::consts::FRAC_PI_4;

/// Band of `v` around `v_c` refused by this solver.
pub const EPS_V: f64 = 0.00025;

/// The `v`-adaptive lens contour.
///
/// The inner lens is a trapezoid leaving `z1` at `π/4` and entering `z2` at
/// `3π/4`. The outer lens leaves `z1` at `3π/4`, rises to a height above the
/// arch `Im ϑ = 0`, and comes down onto `z2` at `π/4`. When `v > 0` its left
/// side stays to the right of the third stationary point.
pub fn large_x_contour(v: f64) -> Result<LensContour> {
    let g = crit_points_x(v)?;
    let (z1, z2) = (g.z1, g.z2);
    let gap = z2 - z1;
    let rho_in = (0.3 * gap).min(0.5);
    let mut dx_left: f64 = 0.5;
    if v > 0.0 {
        let z3 = crit_point_far(v)?;
        dx_left = dx_left.min(0.5 * (z1 - z3));
    }
    let rho_right = 0.5;
    let x_left = z1 - dx_left;
    let d = C64::new(z2, 0.0) + C64::from_polar(rho_right, FRAC_PI_4);
    let h = arch_height(v, z1, z2) + 0.75;
    let outer = vec![
        C64::new(z1, 0.0),
        C64::new(x_left, dx_left),
        C64::new(x_left, h),
        C64::new(d.re, h),
        d,
        C64::new(z2, 0.0),
    ];
    let inner = vec![
        C64::new(z1, 0.0),
        C64::new(z1, 0.0) + C64::from_polar(rho_in, FRAC_PI_4),
        C64::new(z2, 0.0) + C64::from_polar(rho_in, 3.0 * FRAC_PI_4),
        C64::new(z2, 0.0),
    ];
    Ok(LensContour { left: z1, right: z2, outer, inner })
}

/// `Ψ(X, T; G(a, b), 1)` with `T = X^{3/2} v`, from the large-X problem.
pub fn rwio_large_x(x: f64, v: f64, p: &ParamSet, n: usize) -> Result<(C64, SolveReport)> {
    if !(x > 0.0) {
        return Err(Error::Domain { what: "large-X solver requires X > 0", value: x });
    }
    if (v - v_c()).abs() <= EPS_V || v.abs() >= v_c() {
        return Err(Error::Regime(format!("v = {v} is not below v_c - eps_v")));
    }
    if p.is_degenerate() {
        return Ok((C64::new(0.0, 0.0), super::undeformed::zero_report()));
    }
    let lens = large_x_contour(v)?;
    solve_lens(&lens, x, v, p, n)
}

//! Transitional solver: lenses anchored at the double stationary point `z_c = −√6`.

use super::lens::{arch_height, solve_lens, LensContour};
use crate::error::{Error, Result};
use crate::params::ParamSet;
use crate::phases::{crit_point_right, z_c};
use crate::rhp::SolveReport;
use num_complex::Complex64 as C64;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_6};

/// Lens contour for `v` near `v_c`: the outer lens leaves `z_c` vertically and
/// the inner one at `π/6`, the directions of steepest descent of the cubic
/// `ϑ(z; v_c) − ϑ(z_c; v_c) ≈ −(z − z_c)³/18`.
pub fn painleve_contour(v: f64) -> Result<LensContour> {
    let zc = z_c();
    let z2 = crit_point_right(v)?;
    let rho_in = 0.5;
    let rho_right = 0.5;
    let d = C64::new(z2, 0.0) + C64::from_polar(rho_right, FRAC_PI_4);
    let h = arch_height(v, zc, z2) + 0.75;
    let outer = vec![
        C64::new(zc, 0.0),
        C64::new(zc, 0.0) + C64::from_polar(h, FRAC_PI_2),
        C64::new(d.re, h),
        d,
        C64::new(z2, 0.0),
    ];
    let inner = vec![
        C64::new(zc, 0.0),
        C64::new(zc, 0.0) + C64::from_polar(rho_in, FRAC_PI_6),
        C64::new(z2, 0.0) + C64::from_polar(rho_in, 3.0 * FRAC_PI_4),
        C64::new(z2, 0.0),
    ];
    Ok(LensContour { left: zc, right: z2, outer, inner })
}

/// `Ψ(X, T; G(a, b), 1)` with `T = X^{3/2} v`, `v` near `v_c`.
pub fn rwio_painleve(x: f64, v: f64, p: &ParamSet, n: usize) -> Result<(C64, SolveReport)> {
    if !(x > 0.0) {
        return Err(Error::Domain { what: "transitional solver requires X > 0", value: x });
    }
    if !(v >= 0.0 && v.is_finite()) {
        return Err(Error::Domain { what: "transitional solver requires v >= 0", value: v });
    }
    if p.is_degenerate() {
        return Ok((C64::new(0.0, 0.0), super::undeformed::zero_report()));
    }
    let lens = painleve_contour(v)?;
    solve_lens(&lens, x, v, p, n)
}

//! Top-level evaluator: symmetry reduction, region selection, dispatch to one
//! regime solver, and undoing the reduction.

use super::larget::rwio_large_t;
use super::largex::rwio_large_x;
use super::painleve::rwio_painleve;
use super::region::{select_region_with, RegimeConstants, Region};
use super::undeformed::{rwio_undeformed, zero_report};
use crate::error::Result;
use crate::params::{apply_reduction, reduce, ParamSet};
use crate::phases::{v_from_xt, w_from_xt};
use crate::rhp::SolveReport;
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

/// Evaluation settings: thresholds and an optional global collocation count.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct PsiOptions {
    pub constants: RegimeConstants,
    /// Replaces the per-region default `n` when set.
    pub n: Option<usize>,
}

/// A value of `Ψ` with the region and solver diagnostics that produced it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PsiEval {
    pub value: C64,
    pub region: Region,
    pub n: usize,
    pub report: SolveReport,
}

/// `Ψ(X, T; G(a, b), B)` with default settings.
pub fn psi(x: f64, t: f64, a: C64, b: C64, big_b: f64) -> Result<C64> {
    Ok(psi_eval(x, t, a, b, big_b, &PsiOptions::default())?.value)
}

/// `Ψ(X, T; G(a, b), B)` with its region and solve report.
pub fn psi_eval(x: f64, t: f64, a: C64, b: C64, big_b: f64, opts: &PsiOptions) -> Result<PsiEval> {
    let red = reduce(x, t, a, b, big_b)?;
    let k = &opts.constants;
    // The reduced point has B = 1, so the region algorithm sees it unscaled.
    let region = select_region_with(red.x_tilde, red.t_tilde, 1.0, k);
    let n = opts.n.unwrap_or_else(|| k.n_for(region));
    let p = &red.effective_params;
    let (value, report) = if p.is_degenerate() {
        (C64::new(0.0, 0.0), zero_report())
    } else {
        solve_in_region(region, red.x_tilde, red.t_tilde, p, n)?
    };
    Ok(PsiEval { value: apply_reduction(value, &red), region, n, report })
}

/// Runs the solver of `region` at the reduced point `(X̃, T̃)`, both nonnegative.
pub fn solve_in_region(region: Region, x: f64, t: f64, p: &ParamSet, n: usize) -> Result<(C64, SolveReport)> {
    match region {
        Region::NoDeformation => rwio_undeformed(x, t, p, n),
        Region::LargeX => rwio_large_x(x, v_from_xt(x, t)?, p, n),
        Region::Painleve => rwio_painleve(x, v_from_xt(x, t)?, p, n),
        Region::LargeT => rwio_large_t(t, w_from_xt(x, t)?, p, n),
    }
}

/// Undeformed solver at `X, T ≥ 0` with `B = 1`.
pub fn psi_undeformed(x: f64, t: f64, p: &ParamSet, n: usize) -> Result<C64> {
    Ok(rwio_undeformed(x, t, p, n)?.0)
}

/// Large-X solver in the coordinates `(X, v)`.
pub fn psi_large_x(x: f64, v: f64, p: &ParamSet, n: usize) -> Result<C64> {
    Ok(rwio_large_x(x, v, p, n)?.0)
}

/// Large-T solver in the coordinates `(T, w)`.
pub fn psi_large_t(t: f64, w: f64, p: &ParamSet, n: usize) -> Result<C64> {
    Ok(rwio_large_t(t, w, p, n)?.0)
}

/// Transitional solver in the coordinates `(X, v)`.
pub fn psi_painleve(x: f64, v: f64, p: &ParamSet, n: usize) -> Result<C64> {
    Ok(rwio_painleve(x, v, p, n)?.0)
}

//! Region selection and the fixed numerical constants of every regime.

use crate::phases::{v_c, w_c};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Which Riemann–Hilbert formulation is used for a given point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Region {
    NoDeformation,
    LargeX,
    LargeT,
    Painleve,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Region::NoDeformation => "NoDeformation",
            Region::LargeX => "LargeX",
            Region::LargeT => "LargeT",
            Region::Painleve => "Painleve",
        };
        f.write_str(s)
    }
}

/// Thresholds of the region algorithm and default collocation counts.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegimeConstants {
    /// Radius of the disk around the origin where no deformation is used.
    pub r: f64,
    /// Largest rescaled `T` handled by the undeformed or large-X solvers.
    pub t_max: f64,
    pub eps_v: f64,
    pub eps_w: f64,
    pub n_undeformed: usize,
    pub n_large_x: usize,
    pub n_large_t: usize,
    pub n_painleve: usize,
    /// `c₀` in the disk radius `δ₀(T) = c₀ T^{-2/9}` of the large-T solver.
    pub disk_c0: f64,
}

impl Default for RegimeConstants {
    fn default() -> Self {
        RegimeConstants {
            r: 2.0,
            t_max: 8.0,
            eps_v: 0.00025,
            eps_w: 0.02 * w_c(),
            n_undeformed: 400,
            n_large_x: 140,
            n_large_t: 60,
            n_painleve: 150,
            disk_c0: 0.25 * 8f64.powf(2.0 / 9.0),
        }
    }
}

impl RegimeConstants {
    /// `δ₀(T)`.
    pub fn disk_radius(&self, t: f64) -> f64 {
        self.disk_c0 * t.powf(-2.0 / 9.0)
    }

    /// Default collocation count for a region.
    pub fn n_for(&self, region: Region) -> usize {
        match region {
            Region::NoDeformation => self.n_undeformed,
            Region::LargeX => self.n_large_x,
            Region::LargeT => self.n_large_t,
            Region::Painleve => self.n_painleve,
        }
    }
}

/// Region algorithm applied to the rescaled point `(B|X|, B²|T|)`.
pub fn select_region(x: f64, t: f64, big_b: f64) -> Region {
    select_region_with(x, t, big_b, &RegimeConstants::default())
}

/// As [`select_region`] with explicit thresholds.
pub fn select_region_with(x: f64, t: f64, big_b: f64, k: &RegimeConstants) -> Region {
    let xt = big_b * x.abs();
    let tt = big_b * big_b * t.abs();
    if xt * xt + tt * tt <= k.r * k.r {
        return Region::NoDeformation;
    }
    let vc = v_c();
    let wc = w_c();
    let v = if xt == 0.0 { f64::INFINITY } else { tt * xt.powf(-1.5) };
    let w = if tt == 0.0 { f64::INFINITY } else { xt * tt.powf(-2.0 / 3.0) };
    let v_far = (v - vc).abs() > k.eps_v;
    if tt <= k.t_max {
        if v > vc && v_far {
            Region::NoDeformation
        } else if v < vc && v_far {
            Region::LargeX
        } else {
            Region::Painleve
        }
    } else if v > vc && (w - wc).abs() > k.eps_w {
        Region::LargeT
    } else if v < vc && v_far {
        Region::LargeX
    } else {
        Region::Painleve
    }
}

/// Which coordinate conversion [`convert_coords`] applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoordMode {
    /// `(X, v) ↦ T`.
    TfromXv,
    /// `(X, T) ↦ v`.
    VfromXT,
    /// `(T, w) ↦ X`.
    XfromTw,
    /// `(X, T) ↦ w`.
    WfromXT,
}

/// Dispatches to the four power-law conversions.
pub fn convert_coords(mode: CoordMode, u1: f64, u2: f64) -> crate::error::Result<f64> {
    match mode {
        CoordMode::TfromXv => t_from_xv(u1, u2),
        CoordMode::VfromXT => v_from_xt(u1, u2),
        CoordMode::XfromTw => x_from_tw(u1, u2),
        CoordMode::WfromXT => w_from_xt(u1, u2),
    }
}

/// `T = X^{3/2} v`.
pub use crate::phases::t_from_xv;
/// `v = T X^{-3/2}`.
pub use crate::phases::v_from_xt;
/// `w = X T^{-2/3}`.
pub use crate::phases::w_from_xt;
/// `X = T^{2/3} w`.
pub use crate::phases::x_from_tw;

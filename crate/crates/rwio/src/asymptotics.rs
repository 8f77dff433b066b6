//! Closed-form asymptotic formulas for large `X`, large `T` and the transitional
//! regime near `v = v_c`, their squared-modulus forms, and the Lambert-W
//! description of the curves along which the modulus peaks.

use crate::error::{Error, Result};
use crate::params::ParamSet;
use crate::phases::{crit_points_x, spectral_points_t, v_c, vartheta, w_c, LargeTGeometry};
use crate::special::arg_gamma_ip;
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{E, PI};

/// Real phases of the large-X formula at fixed `v`, for a given exponent `p`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LargeXPhases {
    pub z1: f64,
    pub z2: f64,
    /// `ϑ''(z1; v) < 0`.
    pub d2_z1: f64,
    /// `ϑ''(z2; v) > 0`.
    pub d2_z2: f64,
    pub theta_z1: f64,
    pub theta_z2: f64,
    pub phi0: f64,
    pub phi_z1: f64,
    pub phi_z2: f64,
    /// `ϱ(v) = ϑ(z1) − ϑ(z2) < 0`.
    pub rho: f64,
    /// `ς(v) = ½φ_{z1} + ½φ_{z2} + φ₀`.
    pub sigma: f64,
}

/// Phases of the large-X formula with exponent `p` (use `p̄` for `X < 0`).
pub fn large_x_phases(v: f64, p: f64) -> Result<LargeXPhases> {
    let g = crit_points_x(v)?;
    let th = |z: f64| vartheta(C64::new(z, 0.0), v, 0).map(|c| c.re);
    let (theta_z1, theta_z2) = (th(g.z1)?, th(g.z2)?);
    let phi0 = PI / 4.0 + p * (2.0 * (g.z2 - g.z1).powi(2)).ln() - arg_gamma_ip(p);
    let phi_z1 = p * (-g.d2_theta_z1).ln();
    let phi_z2 = p * g.d2_theta_z2.ln();
    Ok(LargeXPhases {
        z1: g.z1,
        z2: g.z2,
        d2_z1: g.d2_theta_z1,
        d2_z2: g.d2_theta_z2,
        theta_z1,
        theta_z2,
        phi0,
        phi_z1,
        phi_z2,
        rho: theta_z1 - theta_z2,
        sigma: 0.5 * phi_z1 + 0.5 * phi_z2 + phi0,
    })
}

fn check_ab(p: &ParamSet) -> Result<()> {
    if p.is_degenerate() {
        return Err(Error::Regime("asymptotic formulas require ab != 0".into()));
    }
    Ok(())
}

/// Two-term large-X approximation of `Ψ(X, T; G(a, b))` with `B = 1`, either sign of `X`.
pub fn asym_large_x(x: f64, t: f64, p: &ParamSet) -> Result<C64> {
    if x == 0.0 || !x.is_finite() {
        return Err(Error::Domain { what: "asym_large_x requires X != 0", value: x });
    }
    check_ab(p)?;
    let xa = x.abs();
    let v = t * xa.powf(-1.5);
    if v.abs() >= v_c() {
        return Err(Error::Regime(format!("|v| = {} is not below v_c", v.abs())));
    }
    let pp = if x > 0.0 { p.p } else { p.p_bar };
    Ok(p.phase_factor() * large_x_bracket(xa, v, pp)?)
}

/// The bracket of the large-X formula times `X^{-3/4}`, for `X > 0` and exponent `p`.
fn large_x_bracket(x: f64, v: f64, p: f64) -> Result<C64> {
    let ph = large_x_phases(v, p)?;
    let i = C64::new(0.0, 1.0);
    let s = x.sqrt();
    let amp = (2.0 * p).sqrt();
    let lx = x.ln();
    let t1 = amp / (-ph.d2_z1).sqrt()
        * (-2.0 * i * s * ph.theta_z1 - i * 0.5 * p * lx - i * (ph.phi_z1 + ph.phi0)).exp();
    let t2 = amp / ph.d2_z2.sqrt() * (-2.0 * i * s * ph.theta_z2 + i * 0.5 * p * lx + i * (ph.phi_z2 + ph.phi0)).exp();
    Ok((t1 + t2) * x.powf(-0.75))
}

/// Large-X phase `Ω(X, v) = 2ϱ X^{1/2} + p ln X + 2ς`.
pub fn omega_large_x(x: f64, v: f64, p: f64) -> Result<f64> {
    let ph = large_x_phases(v, p)?;
    Ok(2.0 * ph.rho * x.sqrt() + p * x.ln() + 2.0 * ph.sigma)
}

/// Leading approximation of `|Ψ|²` for `X > 0` at `v = T X^{-3/2}`.
pub fn mod2_large_x(x: f64, v: f64, p: &ParamSet) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain { what: "mod2_large_x requires X > 0", value: x });
    }
    check_ab(p)?;
    let ph = large_x_phases(v, p.p)?;
    let (d1, d2) = (ph.d2_z1, ph.d2_z2);
    let bracket = (-d2 / d1).sqrt() + (-d1 / d2).sqrt() + 2.0 * omega_large_x(x, v, p.p)?.cos();
    Ok(2.0 * p.p / (x.powf(1.5) * (-d1 * d2).sqrt()) * bracket)
}

/// Outer end of the numerically integrated part of [`l2_tail_t0`].
const L2_TAIL_SPLIT: f64 = 2.0e4;

/// `∫_L^∞ |Ψ(X, 0)|² dX` from [`mod2_large_x`] at `v = 0`, for `L > 0`.
///
/// Trapezoid rule with step `1/2` up to `X = 2·10⁴`; beyond that only the
/// non-oscillating part of the modulus is integrated, in closed form.
pub fn l2_tail_t0(l: f64, p: &ParamSet) -> Result<f64> {
    if !(l > 0.0 && l < L2_TAIL_SPLIT) {
        return Err(Error::Domain { what: "l2_tail_t0 requires 0 < L < 2e4", value: l });
    }
    let h = 0.5;
    let m = ((L2_TAIL_SPLIT - l) / h).ceil() as usize;
    let h = (L2_TAIL_SPLIT - l) / m as f64;
    let mut s = 0.0;
    for k in 0..=m {
        let w = if k == 0 || k == m { 0.5 } else { 1.0 };
        s += w * mod2_large_x(l + k as f64 * h, 0.0, p)?;
    }
    let ph = large_x_phases(0.0, p.p)?;
    let (d1, d2) = (ph.d2_z1, ph.d2_z2);
    let mean = 2.0 * p.p / (-d1 * d2).sqrt() * ((-d2 / d1).sqrt() + (-d1 / d2).sqrt());
    Ok(s * h + 2.0 * mean / L2_TAIL_SPLIT.sqrt())
}

/// Real phases of the large-T formula at fixed `w`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LargeTPhases {
    pub geo: LargeTGeometry,
    /// `Φ(w)`.
    pub phi_w: f64,
    pub phi0_z1: f64,
    pub phi0_z2: f64,
    pub m_plus_z1: f64,
    pub m_minus_z1: f64,
    pub m_plus_z2: f64,
    pub m_minus_z2: f64,
    /// `p` and `p̄` the phases were built with.
    pub p: f64,
    pub p_bar: f64,
}

impl LargeTPhases {
    /// `Φ_{Z1}(T, w)`.
    pub fn phi_z1(&self, t: f64) -> f64 {
        let g = &self.geo;
        let d1 = (g.z0 - g.z1).norm();
        2.0 * d1.powi(3) / (-g.z1) * t.cbrt() - self.p_bar / 3.0 * t.ln() + self.phi0_z1
    }

    /// `Φ_{Z2}(T, w)`.
    pub fn phi_z2(&self, t: f64) -> f64 {
        let g = &self.geo;
        let d2 = (g.z0 - g.z2).norm();
        2.0 * d2.powi(3) / g.z2 * t.cbrt() - self.p / 3.0 * t.ln() + self.phi0_z2
    }
}

/// Phases and amplitudes of the large-T formula.
pub fn large_t_phases(w: f64, p: f64, p_bar: f64) -> Result<LargeTPhases> {
    let g = spectral_points_t(w)?;
    let (z1, z2, z0, vv) = (g.z1, g.z2, g.z0, g.v_w);
    let d1 = (z1 - z0).norm();
    let d2 = (z2 - z0).norm();
    let x0 = z0.re;
    let phi_w = 2.0 * p_bar * ((z1 - x0 + d1) / vv).ln() - 2.0 * p * ((z2 - x0 + d2) / vv).ln() - PI / 2.0;
    let ratio = |da: f64, db: f64| {
        (vv * vv - 2.0 * (vv - da) * (vv - db)) / (vv * vv - 2.0 * (vv + da) * (vv - db))
    };
    let phi0_z1 = 2.0 * p * ratio(d1, d2).ln()
        + 2.0 * p * ((x0 - z1) / (d1 - vv)).ln()
        + 2.0 * p_bar * ((-z1 * vv) / (4.0 * d1.powf(2.5) * (z2 - z1).sqrt())).ln()
        + PI / 4.0
        + arg_gamma_ip(p_bar);
    let phi0_z2 = 2.0 * p_bar * ratio(d2, d1).ln()
        + 2.0 * p_bar * ((z2 - x0) / (d2 - vv)).ln()
        + 2.0 * p * ((z2 * vv) / (4.0 * d2.powf(2.5) * (z2 - z1).sqrt())).ln()
        + PI / 4.0
        + arg_gamma_ip(p);
    let c1 = (C64::new(z1, 0.0) - z0).arg().cos();
    let c2 = (C64::new(z2, 0.0) - z0).arg().cos();
    Ok(LargeTPhases {
        geo: g,
        phi_w,
        phi0_z1,
        phi0_z2,
        m_plus_z1: 0.5 * (1.0 + c1),
        m_minus_z1: 0.5 * (1.0 - c1),
        m_plus_z2: 0.5 * (1.0 + c2),
        m_minus_z2: 0.5 * (1.0 - c2),
        p,
        p_bar,
    })
}

/// Large-T approximation of `Ψ(X, T; G(a, b))` with `B = 1`, either sign of `T`.
pub fn asym_large_t(x: f64, t: f64, p: &ParamSet) -> Result<C64> {
    if t == 0.0 || !t.is_finite() {
        return Err(Error::Domain { what: "asym_large_t requires T != 0", value: t });
    }
    check_ab(p)?;
    let ta = t.abs();
    let w = x * ta.powf(-2.0 / 3.0);
    if w.abs() >= w_c() {
        return Err(Error::Regime(format!("|w| = {} is not below w_c", w.abs())));
    }
    let ph = large_t_phases(w, p.p, p.p_bar)?;
    // T < 0 flips the signs of every real phase except arg(ab).
    let s = t.signum();
    let g = &ph.geo;
    let i = C64::new(0.0, 1.0);
    let (f1, f2) = (s * ph.phi_z1(ta), s * ph.phi_z2(ta));
    let d1 = (g.z0 - g.z1).norm();
    let d2 = (g.z0 - g.z2).norm();
    let lead = (w_c() * w_c() - w * w).sqrt() / 3.0 * ta.powf(-1.0 / 3.0);
    let k1 = p.p_bar.sqrt() * g.z1.abs() * (ph.m_plus_z1 * (i * f1).exp() + ph.m_minus_z1 * (-i * f1).exp())
        / d1.sqrt();
    let k2 = p.p.sqrt() * g.z2 * (ph.m_minus_z2 * (i * f2).exp() + ph.m_plus_z2 * (-i * f2).exp()) / d2.sqrt();
    let corr = (k1 + k2) / (g.z2 - g.z1).sqrt() * ta.powf(-0.5);
    let outer = p.phase_factor() * (-i * s * ta.cbrt() * g.kappa_w).exp() * (i * s * ph.phi_w).exp();
    Ok(outer * (lead - corr))
}

/// Leading approximation of `|Ψ|²` at `w = X|T|^{-2/3}`.
pub fn mod2_large_t(x: f64, t: f64, p: &ParamSet) -> Result<f64> {
    if t == 0.0 || !t.is_finite() {
        return Err(Error::Domain { what: "mod2_large_t requires T != 0", value: t });
    }
    check_ab(p)?;
    let ta = t.abs();
    let w = x * ta.powf(-2.0 / 3.0);
    let ph = large_t_phases(w, p.p, p.p_bar)?;
    let g = &ph.geo;
    let s2 = w_c() * w_c() - w * w;
    let d1 = (g.z0 - g.z1).norm();
    let d2 = (g.z0 - g.z2).norm();
    let fl = p.p_bar.sqrt() * g.z1.abs() * ph.phi_z1(ta).cos() / d1.sqrt()
        + p.p.sqrt() * g.z2 * ph.phi_z2(ta).cos() / d2.sqrt();
    Ok(s2 / 9.0 * ta.powf(-2.0 / 3.0) - 2.0 / 3.0 * (s2 / (g.z2 - g.z1)).sqrt() * fl * ta.powf(-5.0 / 6.0))
}

/// `y = 2^{5/2} 3^{7/6} X^{1/3} (v − v_c)`, the Painlevé-II variable of the transition.
pub fn transition_y(x: f64, v: f64) -> f64 {
    2f64.powf(2.5) * 3f64.powf(7.0 / 6.0) * x.cbrt() * (v - v_c())
}

/// Inverse of [`transition_y`] in `v`.
pub fn transition_v(x: f64, y: f64) -> f64 {
    v_c() + y / (2f64.powf(2.5) * 3f64.powf(7.0 / 6.0) * x.cbrt())
}

/// `Ω_c(X, v)` and `Ω₂(X, v)` for exponent `p` and `arg(ab)`.
pub fn transition_phases(x: f64, v: f64, p: f64, arg_ab: f64) -> (f64, f64) {
    let s = x.sqrt();
    let dv = v - v_c();
    let lx = x.ln();
    let oc = 24f64.sqrt() * s - 12.0 * s * dv - p / 3.0 * lx + PI / 2.0 - arg_ab + p * 2f64.ln()
        - 5.0 / 3.0 * p * 3f64.ln();
    let o2 = -(37.5f64.sqrt()) * s - 3.0 * s * dv + 0.5 * p * lx + PI / 4.0 - arg_gamma_ip(p) - arg_ab
        + 0.5 * p * 2f64.ln()
        + 3.5 * p * 3f64.ln();
    (oc, o2)
}

/// Transitional approximation of `Ψ(X, T; G(a, b))` with `B = 1` near any of the
/// four curves `|T| = v_c |X|^{3/2}`. `vfun(y, τ)` evaluates `V(y; τ)`.
pub fn asym_transition(
    x: f64,
    t: f64,
    p: &ParamSet,
    vfun: &dyn Fn(f64, f64) -> Result<C64>,
) -> Result<C64> {
    if x == 0.0 || !x.is_finite() {
        return Err(Error::Domain { what: "asym_transition requires X != 0", value: x });
    }
    check_ab(p)?;
    let xa = x.abs();
    let v = t.abs() * xa.powf(-1.5);
    // X < 0 trades (τ, p) for (1/τ, p̄); T < 0 conjugates V and flips the real phases.
    let (tau, pp) = if x > 0.0 { (p.tau, p.p) } else { (1.0 / p.tau, p.p_bar) };
    let y = transition_y(xa, v);
    let mut vy = vfun(y, tau)?;
    let (mut oc, mut o2) = transition_phases(xa, v, pp, 0.0);
    if t < 0.0 {
        vy = vy.conj();
        oc = -oc;
        o2 = -o2;
    }
    let i = C64::new(0.0, 1.0);
    let oc = oc - p.phase_ab;
    let o2 = o2 - p.phase_ab;
    Ok(2.0 * 3f64.powf(2.0 / 3.0) * xa.powf(-2.0 / 3.0) * vy * (i * oc).exp()
        + 2f64.powf(0.25) * 3f64.powf(-0.25) * pp.sqrt() * xa.powf(-0.75) * (i * o2).exp())
}

/// Branch of the Lambert W function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WBranch {
    Principal,
    Plus1,
    Minus1,
}

/// Side from which a point of a branch cut is approached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Above,
    Below,
}

/// `W_k(x ± i0)` for real `x`, solving `w eᵂ = x` by Halley iteration.
///
/// On `(−1/e, 0)` the branches `W_{+1}(x − i0)` and `W_{−1}(x + i0)` are the real
/// lower branch `≤ −1`; the opposite sides give the complex values.
pub fn lambert_w(x: f64, branch: WBranch, side: Side) -> Result<C64> {
    if !x.is_finite() {
        return Err(Error::Domain { what: "lambert_w requires finite x", value: x });
    }
    let branch_pt = -1.0 / E;
    let real_lower = matches!((branch, side), (WBranch::Plus1, Side::Below) | (WBranch::Minus1, Side::Above));
    match branch {
        WBranch::Principal if x >= branch_pt => Ok(C64::new(halley_real(x, false)?, 0.0)),
        WBranch::Principal => halley_complex(C64::new(x, 0.0), 0, side),
        _ if x == 0.0 => Err(Error::Domain { what: "lambert_w: W_{±1}(0) is infinite", value: x }),
        _ if real_lower && (branch_pt..0.0).contains(&x) => Ok(C64::new(halley_real(x, true)?, 0.0)),
        WBranch::Plus1 => halley_complex(C64::new(x, 0.0), 1, side),
        WBranch::Minus1 => halley_complex(C64::new(x, 0.0), -1, side),
    }
}

fn halley_real(x: f64, lower: bool) -> Result<f64> {
    let branch_pt = -1.0 / E;
    if (x - branch_pt).abs() < 1e-300 {
        return Ok(-1.0);
    }
    let q = (2.0 * (E * x + 1.0)).max(0.0).sqrt();
    let mut w = if lower {
        if x > -0.25 {
            let l1 = (-x).ln();
            l1 - (-l1).ln()
        } else {
            -1.0 - q - q * q / 3.0
        }
    } else if x < -0.25 {
        -1.0 + q - q * q / 3.0
    } else if x < 3.0 {
        (1.0 + x).ln() * 0.8
    } else {
        let l1 = x.ln();
        l1 - l1.ln()
    };
    for _ in 0..100 {
        let ew = w.exp();
        let f = w * ew - x;
        let wp1 = w + 1.0;
        if wp1 == 0.0 {
            break;
        }
        let dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= dw;
        if dw.abs() <= 1e-16 * (1.0 + w.abs()) {
            break;
        }
    }
    let res = w * w.exp() - x;
    if !(res.abs() <= 1e-13 * (1.0 + x.abs())) {
        return Err(Error::Domain { what: "lambert_w did not converge", value: x });
    }
    Ok(w)
}

fn halley_complex(z: C64, k: i32, side: Side) -> Result<C64> {
    // Points on the negative axis take the argument of the chosen side.
    let arg = if z.im == 0.0 && z.re < 0.0 {
        match side {
            Side::Above => PI,
            Side::Below => -PI,
        }
    } else {
        z.arg()
    };
    let l1 = C64::new(z.norm().ln(), arg + 2.0 * PI * k as f64);
    let mut w = if l1.norm() > 1e-12 { l1 - l1.ln() } else { l1 };
    for _ in 0..200 {
        let ew = w.exp();
        let f = w * ew - z;
        let wp1 = w + 1.0;
        let dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= dw;
        if dw.norm() <= 1e-16 * (1.0 + w.norm()) {
            break;
        }
    }
    if !((w * w.exp() - z).norm() <= 1e-13 * (1.0 + z.norm())) {
        return Err(Error::Domain { what: "lambert_w did not converge", value: z.re });
    }
    Ok(w)
}

/// Family of peak curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PeakFamily {
    /// `X_N(v)` on which `Ω(X, v) = −2πN`.
    XN,
    /// `T_N(w)` on which `Φ_{Z2}(T, w) = (2N+1)π`.
    TN,
}

/// The `N`-th peak curve of `family` at slow variable `v` (for `X_N`) or `w` (for `T_N`).
pub fn peak_curves(family: PeakFamily, n: u32, slow: f64, p: &ParamSet) -> Result<f64> {
    check_ab(p)?;
    let pp = p.p;
    let nf = n as f64;
    match family {
        PeakFamily::XN => {
            let ph = large_x_phases(slow, pp)?;
            let nu = ph.sigma / pp + (-pp / ph.rho).ln();
            let eta = PI * nf / pp + nu;
            let arg = -(-eta).exp();
            if !(arg > -1.0 / E) {
                return Err(Error::Domain { what: "X_N: Lambert argument outside (-1/e, 0)", value: arg });
            }
            let w = lambert_w(arg, WBranch::Minus1, Side::Above)?.re;
            Ok(pp * pp / (ph.rho * ph.rho) * w * w)
        }
        PeakFamily::TN => {
            let ph = large_t_phases(slow, pp, p.p_bar)?;
            let g = &ph.geo;
            let d2 = (g.z0 - g.z2).norm();
            let c = 2.0 * d2.powi(3) / (pp * g.z2);
            let varpi = PI / pp - ph.phi0_z2 / pp - c.ln();
            let kappa = 2.0 * PI * nf / pp + varpi;
            let arg = -(-kappa).exp();
            if !(arg > -1.0 / E) {
                return Err(Error::Domain { what: "T_N: Lambert argument outside (-1/e, 0)", value: arg });
            }
            let w = lambert_w(arg, WBranch::Minus1, Side::Above)?.re;
            Ok(-(pp.powi(3) * g.z2.powi(3)) / (8.0 * d2.powi(9)) * w.powi(3))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn branch_point_value() {
        let w = lambert_w(-1.0 / E, WBranch::Minus1, Side::Above).unwrap();
        assert!((w.re + 1.0).abs() < 1e-7);
    }

    #[test]
    fn opposite_side_is_complex() {
        let w = lambert_w(-0.1, WBranch::Plus1, Side::Above).unwrap();
        assert!(w.im > 0.5);
    }
}

//! Exponent functions, critical points and branch-stable square roots for the
//! large-X and large-T coordinate frames.

use crate::error::{Error, Result};
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

/// Critical value `v_c = 54^{-1/2}` of `v = T X^{-3/2}`.
pub fn v_c() -> f64 {
    54f64.powf(-0.5)
}

/// Critical value `w_c = 54^{1/3}` of `w = X T^{-2/3}`.
pub fn w_c() -> f64 {
    54f64.cbrt()
}

/// Double critical point of `ϑ(·; v_c)`.
pub fn z_c() -> f64 {
    -(6f64.sqrt())
}

/// `ϑ(z; v) = z + v z² + 2/z` and its first two `z`-derivatives.
pub fn vartheta(z: C64, v: f64, order: u8) -> Result<C64> {
    if z == C64::new(0.0, 0.0) {
        return Err(Error::Singular("vartheta has a pole at z = 0"));
    }
    Ok(match order {
        0 => z + v * z * z + 2.0 / z,
        1 => 1.0 + 2.0 * v * z - 2.0 / (z * z),
        2 => C64::from(2.0 * v) + 4.0 / (z * z * z),
        _ => return Err(Error::Domain { what: "vartheta derivative order", value: order as f64 }),
    })
}

/// `θ(Z; w) = w Z + Z² + 2/Z` and its first two `Z`-derivatives.
pub fn theta_t(z: C64, w: f64, order: u8) -> Result<C64> {
    if z == C64::new(0.0, 0.0) {
        return Err(Error::Singular("theta has a pole at Z = 0"));
    }
    Ok(match order {
        0 => w * z + z * z + 2.0 / z,
        1 => w + 2.0 * z - 2.0 / (z * z),
        2 => C64::from(2.0) + 4.0 / (z * z * z),
        _ => return Err(Error::Domain { what: "theta derivative order", value: order as f64 }),
    })
}

/// Critical points of `ϑ(·; v)` used by the large-X analysis.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LargeXGeometry {
    pub v: f64,
    pub z1: f64,
    pub z2: f64,
    pub d2_theta_z1: f64,
    pub d2_theta_z2: f64,
}

fn dtheta_real(z: f64, v: f64) -> f64 {
    1.0 + 2.0 * v * z - 2.0 / (z * z)
}

fn d2theta_real(z: f64, v: f64) -> f64 {
    2.0 * v + 4.0 / (z * z * z)
}

/// Newton polish on the cubic `2v z³ + z² − 2 = 0`.
fn polish(mut z: f64, v: f64) -> f64 {
    for _ in 0..8 {
        let f = 2.0 * v * z * z * z + z * z - 2.0;
        let fp = 6.0 * v * z * z + 2.0 * z;
        let dz = f / fp;
        z -= dz;
        if dz.abs() <= 1e-16 * z.abs() {
            break;
        }
    }
    z
}

fn cardano(v: f64, shift: f64) -> f64 {
    let vc = v_c();
    let arg = (2.0 * v * v / (vc * vc) - 1.0).clamp(-1.0, 1.0);
    (-1.0 + 2.0 * (arg.acos() / 3.0 - shift).cos()) / (6.0 * v)
}

/// Real critical points `z1(v) < 0 < z2(v)` with their second derivatives.
///
/// The trigonometric Cardano form is used away from `v = 0`; near `v = 0` a
/// second-order Taylor seed replaces it, and both are Newton-polished.
pub fn crit_points_x(v: f64) -> Result<LargeXGeometry> {
    if !v.is_finite() || v.abs() >= v_c() {
        return Err(Error::Domain { what: "crit_points_x requires |v| < v_c", value: v });
    }
    let s2 = 2f64.sqrt();
    let two_thirds_pi = 2.0 * std::f64::consts::PI / 3.0;
    let (z1, z2) = if v.abs() < 1e-3 {
        let taylor = |z0: f64| z0 - 2.0 * v + 10.0 / z0 * v * v;
        (taylor(-s2), taylor(s2))
    } else if v > 0.0 {
        (cardano(v, two_thirds_pi), cardano(v, 0.0))
    } else {
        (cardano(v, 0.0), cardano(v, two_thirds_pi))
    };
    let z1 = polish(z1, v);
    let z2 = polish(z2, v);
    Ok(LargeXGeometry { v, z1, z2, d2_theta_z1: d2theta_real(z1, v), d2_theta_z2: d2theta_real(z2, v) })
}

/// Third real critical point of `ϑ(·; v)` for `0 < v ≤ v_c`, lying left of `z1`.
pub fn crit_point_far(v: f64) -> Result<f64> {
    if !(v > 0.0 && v <= v_c()) {
        return Err(Error::Domain { what: "crit_point_far requires 0 < v <= v_c", value: v });
    }
    let z = cardano(v, -two_pi_thirds());
    Ok(polish(z, v))
}

/// Positive critical point of `ϑ(·; v)` for any `v ≥ 0`, including `v ≥ v_c`
/// where the other two are complex.
pub fn crit_point_right(v: f64) -> Result<f64> {
    if !(v >= 0.0 && v.is_finite()) {
        return Err(Error::Domain { what: "crit_point_right requires v >= 0", value: v });
    }
    // The cubic is convex and increasing on z > 0, so Newton from √2 decreases monotonically.
    let mut z = 2f64.sqrt();
    for _ in 0..60 {
        let f = 2.0 * v * z * z * z + z * z - 2.0;
        let fp = 6.0 * v * z * z + 2.0 * z;
        let dz = f / fp;
        z -= dz;
        if dz.abs() <= 1e-16 * z {
            break;
        }
    }
    Ok(z)
}

fn two_pi_thirds() -> f64 {
    2.0 * std::f64::consts::PI / 3.0
}

/// `ϑ'(z; v)` for real `z`, used by root checks.
pub fn vartheta_prime_real(z: f64, v: f64) -> f64 {
    dtheta_real(z, v)
}

/// Spectral-curve points for the large-T analysis.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LargeTGeometry {
    pub w: f64,
    pub z1: f64,
    pub z2: f64,
    pub z0: C64,
    pub v_w: f64,
    pub kappa_w: f64,
}

/// `Z1(w) < 0 < Z2(w)`, the branch point `Z0(w)` in the upper half-plane and `κ(w)`.
pub fn spectral_points_t(w: f64) -> Result<LargeTGeometry> {
    let wc = w_c();
    if !w.is_finite() || w.abs() >= wc {
        return Err(Error::Domain { what: "spectral_points_t requires |w| < w_c", value: w });
    }
    let disc = (w * w + 8.0 * wc * wc).sqrt();
    let z1 = (-w - disc) / 12.0;
    let z2 = (-w + disc) / 12.0;
    let v_w = (wc * wc - w * w).sqrt() / 3.0;
    let z0 = C64::new(-w / 3.0, v_w);
    let kappa_w = -(w * w + wc * wc) / 3.0;
    Ok(LargeTGeometry { w, z1, z2, z0, v_w, kappa_w })
}

/// Branch-stable realization of `R(Z; w)` with `R² = (Z − Z0)(Z − Z0*)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    /// Horizontal cuts from `Z0`, `Z0*` to the left.
    Left,
    /// Horizontal cuts from `Z0`, `Z0*` to the right.
    Right,
    /// Vertical cut from `Z0*` to `Z0`.
    Up,
}

/// `R(Z; w)` on the chosen branch, given `Z0`.
pub fn r_num(z: C64, z0: C64, branch: Branch) -> C64 {
    let z0c = z0.conj();
    match branch {
        Branch::Left => (z - z0).sqrt() * (z - z0c).sqrt(),
        Branch::Right => -((z0 - z).sqrt() * (z0c - z).sqrt()),
        Branch::Up => ((z - z0) / (z - z0c)).sqrt() * (z - z0c),
    }
}

/// `h(Z; w) = R³/Z − 3·2^{-1/3} − w²/6` on the chosen branch.
pub fn h_num(z: C64, w: f64, branch: Branch) -> Result<C64> {
    let geo = spectral_points_t(w)?;
    h_with(z, &geo, branch)
}

/// As [`h_num`] with precomputed geometry.
pub fn h_with(z: C64, geo: &LargeTGeometry, branch: Branch) -> Result<C64> {
    if z.norm() == 0.0 {
        return Err(Error::Singular("h has a pole at Z = 0"));
    }
    let r = r_num(z, geo.z0, branch);
    Ok(r * r * r / z - 3.0 * 2f64.powf(-1.0 / 3.0) - geo.w * geo.w / 6.0)
}

/// Coordinate conversions between `(X, T)`, `(X, v)` and `(T, w)`.
pub fn t_from_xv(x: f64, v: f64) -> Result<f64> {
    if x < 0.0 {
        return Err(Error::Domain { what: "TfromXv requires X >= 0", value: x });
    }
    Ok(x.powf(1.5) * v)
}

pub fn v_from_xt(x: f64, t: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Domain { what: "vfromXT requires X > 0", value: x });
    }
    Ok(t * x.powf(-1.5))
}

pub fn x_from_tw(t: f64, w: f64) -> Result<f64> {
    if t < 0.0 {
        return Err(Error::Domain { what: "XfromTw requires T >= 0", value: t });
    }
    Ok(t.powf(2.0 / 3.0) * w)
}

pub fn w_from_xt(x: f64, t: f64) -> Result<f64> {
    if t <= 0.0 {
        return Err(Error::Domain { what: "wfromXT requires T > 0", value: t });
    }
    Ok(x * t.powf(-2.0 / 3.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn critical_points_at_zero() {
        let g = crit_points_x(0.0).unwrap();
        assert!((g.z1 + 2f64.sqrt()).abs() < 1e-15);
        assert!((g.z2 - 2f64.sqrt()).abs() < 1e-15);
        assert!(g.d2_theta_z1 < 0.0 && g.d2_theta_z2 > 0.0);
    }

    #[test]
    fn critical_points_merge_near_vc() {
        let g = crit_points_x(v_c() * (1.0 - 1e-12)).unwrap();
        assert!((g.z1 - z_c()).abs() < 1e-4);
        let far = crit_point_far(v_c() * (1.0 - 1e-12)).unwrap();
        assert!((far - z_c()).abs() < 1e-4);
    }

    #[test]
    fn taylor_and_cardano_agree_at_switch() {
        let a = crit_points_x(0.999e-3).unwrap();
        let b = crit_points_x(1.001e-3).unwrap();
        assert!((a.z1 - b.z1).abs() < 1e-5 && (a.z2 - b.z2).abs() < 1e-5);
        for v in [0.999e-3, 1.001e-3] {
            let g = crit_points_x(v).unwrap();
            assert!(dtheta_real(g.z1, v).abs() < 1e-14);
            assert!(dtheta_real(g.z2, v).abs() < 1e-14);
        }
    }

    #[test]
    fn spectral_points_at_zero() {
        let g = spectral_points_t(0.0).unwrap();
        let wc = w_c();
        assert!((g.z0 - C64::new(0.0, wc / 3.0)).norm() < 1e-14);
        assert!((g.z1 + 2f64.sqrt() * wc / 6.0).abs() < 1e-14);
        assert!((g.z1 + g.z2).abs() < 1e-14);
        assert!((g.kappa_w + 108f64.cbrt()).abs() < 1e-13);
    }

    #[test]
    fn branches_agree_above_strip() {
        let g = spectral_points_t(1.2).unwrap();
        let z = C64::new(-0.7, g.v_w + 0.5);
        let l = h_with(z, &g, Branch::Left).unwrap();
        let u = h_with(z, &g, Branch::Up).unwrap();
        let r = h_with(z, &g, Branch::Right).unwrap();
        assert!((l - u).norm() < 1e-12 && (l - r).norm() < 1e-12);
    }

    #[test]
    fn reference_conversions() {
        let t = t_from_xv(1.0, 0.1 * v_c()).unwrap();
        assert!((t - 0.013608276348795434).abs() < 1e-16);
        let x = x_from_tw(1.0, 0.1 * w_c()).unwrap();
        assert!((x - 0.37797631496846196).abs() < 1e-15);
    }
}

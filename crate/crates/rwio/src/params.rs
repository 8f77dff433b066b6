//! Connection-matrix parameters `G(a,b)`, background amplitude `B`, and the exact
//! symmetry reductions that let every solver assume `X ≥ 0`, `T ≥ 0`, `B = 1`.

use crate::error::{Error, Result};
use crate::mat2::Mat2;
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Parameters `(a, b, B)` together with every derived constant used downstream.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamSet {
    pub a: C64,
    pub b: C64,
    /// Background amplitude `B > 0`.
    pub big_b: f64,
    /// `|a| / √(|a|²+|b|²)`.
    pub frak_a: f64,
    /// `|b| / √(|a|²+|b|²)`.
    pub frak_b: f64,
    /// `|b/a|`; `+∞` when `a = 0`.
    pub tau: f64,
    /// `(1/2π) ln(1+τ²)`.
    pub p: f64,
    /// `(1/2π) ln(1+τ⁻²)`.
    pub p_bar: f64,
    /// `(1/π) ln(𝔞/𝔟)`.
    pub q: f64,
    /// `arg(ab)` on the principal branch, `0` when `ab = 0`.
    pub phase_ab: f64,
}

impl ParamSet {
    /// True when `a = 0` or `b = 0`, in which case `Ψ ≡ 0`.
    pub fn is_degenerate(&self) -> bool {
        self.frak_a == 0.0 || self.frak_b == 0.0
    }

    /// The unimodular matrix `G(a,b) = (|a|²+|b|²)^{-1/2} [[a, b*], [-b, a*]]`.
    pub fn g_matrix(&self) -> Mat2 {
        let n = (self.a.norm_sqr() + self.b.norm_sqr()).sqrt();
        Mat2::new(self.a, self.b.conj(), -self.b, self.a.conj()).scale(C64::new(1.0 / n, 0.0))
    }

    /// `G(𝔞,𝔟)`, the real normalized matrix used by the deformed solvers.
    pub fn g_normalized(&self) -> Mat2 {
        let (a, b) = (C64::new(self.frak_a, 0.0), C64::new(self.frak_b, 0.0));
        Mat2::new(a, b, -b, a)
    }

    /// `e^{-i arg(ab)}`, the phase relating `Ψ` for `(a,b)` and for `(𝔞,𝔟)`.
    pub fn phase_factor(&self) -> C64 {
        C64::from_polar(1.0, -self.phase_ab)
    }
}

/// Validates `(a, b, B)` and computes the derived constants.
pub fn derive_params(a: C64, b: C64, big_b: f64) -> Result<ParamSet> {
    if a == C64::new(0.0, 0.0) && b == C64::new(0.0, 0.0) {
        return Err(Error::ZeroParameters);
    }
    if !(big_b > 0.0 && big_b.is_finite()) {
        return Err(Error::BadAmplitude(big_b));
    }
    let n = a.norm_sqr() + b.norm_sqr();
    let frak_a = (a.norm_sqr() / n).sqrt();
    let frak_b = (b.norm_sqr() / n).sqrt();
    let tau = if frak_a == 0.0 { f64::INFINITY } else { b.norm() / a.norm() };
    // ln(1+τ²) = -2 ln 𝔞 and ln(1+τ⁻²) = -2 ln 𝔟, which stay accurate for extreme τ.
    let p = -frak_a.ln() / PI;
    let p_bar = -frak_b.ln() / PI;
    let q = (frak_a / frak_b).ln() / PI;
    let ab = a * b;
    let phase_ab = if ab == C64::new(0.0, 0.0) { 0.0 } else { principal_arg(ab) };
    Ok(ParamSet { a, b, big_b, frak_a, frak_b, tau, p, p_bar, q, phase_ab })
}

/// Argument in `(-π, π]`.
pub(crate) fn principal_arg(z: C64) -> f64 {
    let t = z.arg();
    if t == -PI {
        PI
    } else {
        t
    }
}

/// Record of the symmetry reduction applied to a point `(X, T)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Reduction {
    /// `B|X|`.
    pub x_tilde: f64,
    /// `B²|T|`.
    pub t_tilde: f64,
    /// Parameters after the swap and conjugation, with `B = 1`.
    pub effective_params: ParamSet,
    /// Set when `X < 0` (`a ↔ b`).
    pub swap_ab: bool,
    /// Set when `T < 0` (`(a,b) → (a*,b*)`, result conjugated).
    pub conjugate: bool,
    /// The amplitude `B` factored out of the solution.
    pub scale: f64,
}

/// Maps `(X, T; a, b, B)` to `(X̃, T̃; ã, b̃, 1)` with `X̃, T̃ ≥ 0`.
pub fn reduce(x: f64, t: f64, a: C64, b: C64, big_b: f64) -> Result<Reduction> {
    derive_params(a, b, big_b)?;
    let swap_ab = x < 0.0;
    let conjugate = t < 0.0;
    let (mut ea, mut eb) = if swap_ab { (b, a) } else { (a, b) };
    if conjugate {
        ea = ea.conj();
        eb = eb.conj();
    }
    Ok(Reduction {
        x_tilde: big_b * x.abs(),
        t_tilde: big_b * big_b * t.abs(),
        effective_params: derive_params(ea, eb, 1.0)?,
        swap_ab,
        conjugate,
        scale: big_b,
    })
}

/// Converts the reduced-problem value `Ψ(X̃,T̃;G̃,1)` back to `Ψ(X,T;G,B)`.
pub fn apply_reduction(value_tilde: C64, r: &Reduction) -> C64 {
    let v = if r.conjugate { value_tilde.conj() } else { value_tilde };
    v * r.scale
}

/// Parses complex literals such as `1`, `-2.5`, `2i`, `-i`, `2-3i`, `1+0.5i`, `1e-3-2e2i`.
pub fn parse_complex(s: &str) -> Result<C64> {
    let err = || Error::Parse(s.to_string());
    let t = s.trim();
    if t.is_empty() || t.contains(char::is_whitespace) {
        return Err(err());
    }
    let imag_unit = |u: &str| -> Option<f64> {
        match u {
            "" | "+" => Some(1.0),
            "-" => Some(-1.0),
            _ => u.parse::<f64>().ok(),
        }
    };
    if let Some(body) = t.strip_suffix('i').or_else(|| t.strip_suffix("im")) {
        // Locate the sign that separates real and imaginary parts, skipping exponent signs.
        let bytes = body.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            if (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
                split = Some(k);
                break;
            }
        }
        return match split {
            Some(k) => {
                let re = body[..k].parse::<f64>().map_err(|_| err())?;
                let im = imag_unit(&body[k..]).ok_or_else(err)?;
                Ok(C64::new(re, im))
            }
            None => Ok(C64::new(0.0, imag_unit(body).ok_or_else(err)?)),
        };
    }
    t.parse::<f64>().map(|re| C64::new(re, 0.0)).map_err(|_| err())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn derive_equal_parameters() {
        let p = derive_params(c(1.0, 0.0), c(1.0, 0.0), 1.0).unwrap();
        assert!((p.frak_a - 0.5f64.sqrt()).abs() < 1e-15);
        assert!((p.frak_b - 0.5f64.sqrt()).abs() < 1e-15);
        assert!((p.tau - 1.0).abs() < 1e-15);
        assert_eq!(p.phase_ab, 0.0);
    }

    #[test]
    fn derive_rotated_parameters() {
        let p = derive_params(c(0.0, 2.0), c(4.0, 0.0), 1.0).unwrap();
        assert!((p.frak_a - 1.0 / 5f64.sqrt()).abs() < 1e-15);
        assert!((p.frak_b - 2.0 / 5f64.sqrt()).abs() < 1e-15);
        assert!((p.tau - 2.0).abs() < 1e-15);
        assert!((p.phase_ab - PI / 2.0).abs() < 1e-15);
        assert!(((2.0 * PI * p.p).exp() - (1.0 + p.tau * p.tau)).abs() < 1e-14);
        assert!((p.p_bar - (p.p - p.tau.ln() / PI)).abs() < 1e-14);
        assert!(((PI * p.q).exp() - p.frak_a / p.frak_b).abs() < 1e-14);
    }

    #[test]
    fn derive_degenerate_endpoint() {
        let p = derive_params(c(1.0, 0.0), c(0.0, 0.0), 1.0).unwrap();
        assert_eq!(p.frak_a, 1.0);
        assert_eq!(p.frak_b, 0.0);
        assert_eq!(p.tau, 0.0);
        assert_eq!(p.p, 0.0);
        assert!(p.is_degenerate());
    }

    #[test]
    fn derive_rejects_bad_input() {
        assert_eq!(derive_params(c(0.0, 0.0), c(0.0, 0.0), 1.0), Err(Error::ZeroParameters));
        assert!(matches!(derive_params(c(1.0, 0.0), c(1.0, 0.0), 0.0), Err(Error::BadAmplitude(_))));
        assert!(matches!(derive_params(c(1.0, 0.0), c(1.0, 0.0), -1.0), Err(Error::BadAmplitude(_))));
    }

    #[test]
    fn reduce_reference_point() {
        let r = reduce(-1.8, 0.6, c(2.0, -3.0), c(1.0, 0.5), 1.2).unwrap();
        assert!((r.x_tilde - 2.16).abs() < 1e-14);
        assert!((r.t_tilde - 0.864).abs() < 1e-14);
        assert!(r.swap_ab && !r.conjugate);
        assert_eq!(r.effective_params.a, c(1.0, 0.5));
        assert_eq!(r.effective_params.b, c(2.0, -3.0));
    }

    #[test]
    fn reduce_identity_and_conjugate() {
        let r = reduce(0.5, 2.0, c(1.0, 1.0), c(2.0, -1.0), 1.0).unwrap();
        assert!(!r.swap_ab && !r.conjugate);
        assert_eq!(r.effective_params.a, c(1.0, 1.0));
        let r = reduce(0.5, -2.0, c(1.0, 1.0), c(2.0, -1.0), 1.0).unwrap();
        assert!(r.conjugate && !r.swap_ab);
        assert_eq!(r.effective_params.a, c(1.0, -1.0));
        assert_eq!(r.effective_params.b, c(2.0, 1.0));
    }

    #[test]
    fn apply_reduction_cases() {
        let v = c(0.3, -0.7);
        let mut r = reduce(1.0, 1.0, c(1.0, 0.0), c(1.0, 0.0), 1.0).unwrap();
        assert_eq!(apply_reduction(v, &r), v);
        r.conjugate = true;
        assert_eq!(apply_reduction(v, &r), v.conj());
        r.conjugate = false;
        r.scale = 1.2;
        assert!((apply_reduction(v, &r) - v * 1.2).norm() < 1e-16);
    }

    #[test]
    fn g_matrix_is_unimodular() {
        let p = derive_params(c(2.0, -3.0), c(1.0, 0.5), 1.0).unwrap();
        assert!((p.g_matrix().det() - 1.0).norm() < 1e-14);
        assert!((p.g_normalized().det() - 1.0).norm() < 1e-14);
    }

    #[test]
    fn parse_literals() {
        assert_eq!(parse_complex("1").unwrap(), c(1.0, 0.0));
        assert_eq!(parse_complex("2i").unwrap(), c(0.0, 2.0));
        assert_eq!(parse_complex("2-3i").unwrap(), c(2.0, -3.0));
        assert_eq!(parse_complex("1+0.5i").unwrap(), c(1.0, 0.5));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("1e-3+2e1i").unwrap(), c(1e-3, 20.0));
        assert_eq!(parse_complex("1+2im").unwrap(), c(1.0, 2.0));
        assert!(parse_complex("1 + 2i").is_err());
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("").is_err());
    }
}

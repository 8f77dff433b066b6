//! Bessel-kernel Fredholm determinant `D_κ(r) = det(1 − κ𝒦_r)` on `L²[0, r]`
//! and the resulting closed form for `Ψ(X, 0)`.
//!
//! The kernel is
//! `K(x, y) = (√x J₁(√x) J₀(√y) − J₀(√x) √y J₁(√y)) / (2(x − y))`,
//! whose diagonal limit is `K(x, x) = ¼(J₀(√x)² + J₁(√x)²)`.

use crate::error::{Error, Result};
use crate::params::ParamSet;
use crate::special::bessel_j01;
use faer::Mat;
use num_complex::Complex64 as C64;
use std::f64::consts::PI;

/// Default Gauss–Legendre order.
pub const DEFAULT_M: usize = 48;
/// Largest `|X|` accepted by [`psi_t0_oracle`].
pub const X_MAX: f64 = 0.75;
/// Half-width of the Chebyshev differentiation stencil in `z`.
pub const STENCIL_HALF_WIDTH: f64 = 0.05;
/// Points in the differentiation stencil.
pub const STENCIL_POINTS: usize = 11;

/// Gauss–Legendre nodes and weights on `[−1, 1]`.
pub fn gauss_legendre(m: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; m];
    let mut w = vec![0.0; m];
    for i in 0..m {
        let mut t = (PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, t);
            for k in 2..=m {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * t * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = m as f64 * (t * p1 - p0) / (t * t - 1.0);
            let dt = p1 / dp;
            t -= dt;
            if dt.abs() < 1e-16 {
                break;
            }
        }
        x[m - 1 - i] = t;
        w[m - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    (x, w)
}

/// `K(x, y)` for complex arguments, switching to the diagonal limit when `x ≈ y`.
pub fn bessel_kernel(x: C64, y: C64) -> C64 {
    let (sx, sy) = (x.sqrt(), y.sqrt());
    let (j0x, j1x) = bessel_j01(sx);
    if (x - y).norm() <= 1e-12 * (1.0 + x.norm()) {
        return 0.25 * (j0x * j0x + j1x * j1x);
    }
    let (j0y, j1y) = bessel_j01(sy);
    (sx * j1x * j0y - j0x * sy * j1y) / (2.0 * (x - y))
}

/// Nyström approximation of `D_κ(r)` with `m` Gauss–Legendre nodes on the segment `[0, r]`.
pub fn det_bessel(kappa: f64, r: C64, m: usize) -> Result<C64> {
    if m < 16 {
        return Err(Error::Domain { what: "det_bessel needs m >= 16", value: m as f64 });
    }
    if !(r.re.is_finite() && r.im.is_finite()) {
        return Err(Error::Domain { what: "det_bessel needs finite r", value: r.norm() });
    }
    if r.norm() == 0.0 {
        return Ok(C64::new(1.0, 0.0));
    }
    let (t, w) = gauss_legendre(m);
    let x: Vec<C64> = t.iter().map(|ti| r * (0.5 * (1.0 + ti))).collect();
    let sw: Vec<C64> = w.iter().map(|wi| (r * (0.5 * wi)).sqrt()).collect();
    let mut bad = false;
    let a = Mat::<C64>::from_fn(m, m, |i, j| {
        let k = sw[i] * bessel_kernel(x[i], x[j]) * sw[j];
        if !(k.re.is_finite() && k.im.is_finite()) {
            bad = true;
        }
        let id = if i == j { 1.0 } else { 0.0 };
        C64::new(id, 0.0) - kappa * k
    });
    if bad {
        return Err(Error::Singular("Bessel kernel evaluation is not finite"));
    }
    Ok(a.as_ref().determinant())
}

/// `log D_κ(r)` on the branch through `0` at `r = 0` for small `|r|`.
pub fn log_det_bessel(kappa: f64, r: C64, m: usize) -> Result<C64> {
    Ok(det_bessel(kappa, r, m)?.ln())
}

/// Values of `L(z) = log D_κ(32iz)` and of `L'`, `L''`, `L'''` at `z`.
fn log_det_derivatives(kappa: f64, z: C64, m: usize) -> Result<[C64; 4]> {
    let n = STENCIL_POINTS;
    let h = STENCIL_HALF_WIDTH;
    // Chebyshev–Lobatto samples and the corresponding Chebyshev coefficients.
    let t: Vec<f64> = (0..n).map(|k| (PI * k as f64 / (n - 1) as f64).cos()).collect();
    let vals = t
        .iter()
        .map(|tk| {
            let zk = z + h * tk;
            log_det_bessel(kappa, C64::new(0.0, 32.0) * zk, m)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut c = vec![C64::new(0.0, 0.0); n];
    for (j, cj) in c.iter_mut().enumerate() {
        let mut s = C64::new(0.0, 0.0);
        for (k, v) in vals.iter().enumerate() {
            let wk = if k == 0 || k == n - 1 { 0.5 } else { 1.0 };
            s += *v * (wk * (PI * (j * k) as f64 / (n - 1) as f64).cos());
        }
        let wj = if j == 0 || j == n - 1 { 0.5 } else { 1.0 };
        *cj = s * (2.0 * wj / (n - 1) as f64);
    }
    let mut out = [C64::new(0.0, 0.0); 4];
    let mut cur = c;
    for (d, slot) in out.iter_mut().enumerate() {
        // T_j(0) = cos(jπ/2).
        *slot = cur
            .iter()
            .enumerate()
            .map(|(j, cj)| *cj * (PI * j as f64 / 2.0).cos())
            .sum::<C64>()
            / h.powi(d as i32);
        cur = cheb_derivative(&cur);
    }
    Ok(out)
}

/// Chebyshev coefficients of the derivative.
fn cheb_derivative(c: &[C64]) -> Vec<C64> {
    let n = c.len();
    let mut d = vec![C64::new(0.0, 0.0); n];
    if n < 2 {
        return d;
    }
    for k in (0..n - 1).rev() {
        let next = if k + 2 < n { d[k + 2] } else { C64::new(0.0, 0.0) };
        d[k] = next + c[k + 1] * (2.0 * (k + 1) as f64);
    }
    d[0] *= 0.5;
    d
}

/// `R(z)` and `R'(z)` for `κ = 𝔞²`.
pub fn r_and_derivative(kappa: f64, z: C64, m: usize) -> Result<(C64, C64)> {
    let [_, l1, l2, l3] = log_det_derivatives(kappa, z, m)?;
    let r = C64::new(0.0, -2.0) - 0.5 * (l1 + z * l2);
    let rp = -0.5 * (2.0 * l2 + z * l3);
    Ok((r, rp))
}

/// Continuation step in `X` used to track the square root.
const BRANCH_STEP: f64 = 0.01;

/// `Ψ(X, 0; G(a, b))` from the determinant formula, `|X| ≤` [`X_MAX`], `ab ≠ 0`.
pub fn psi_t0_oracle(x: f64, p: &ParamSet) -> Result<C64> {
    psi_t0_oracle_with(x, p, DEFAULT_M)
}

/// [`psi_t0_oracle`] with an explicit quadrature order.
///
/// `√(R² + 4)` equals `±(U + 1/U)`, which is analytic and may pass through
/// zero, so the root is continued from `X = 0` by quadratic extrapolation
/// rather than by nearest value. Near a zero both signs are close to the
/// extrapolation and either choice is harmless, so only the final step must
/// be unambiguous.
pub fn psi_t0_oracle_with(x: f64, p: &ParamSet, m: usize) -> Result<C64> {
    if !(x.abs() <= X_MAX) {
        return Err(Error::Domain { what: "Fredholm oracle requires |X| <= 0.75", value: x });
    }
    if p.is_degenerate() {
        return Err(Error::Domain { what: "Fredholm oracle requires ab != 0", value: 0.0 });
    }
    let kappa = p.frak_a * p.frak_a;
    let steps = ((x.abs() / BRANCH_STEP).ceil() as usize).max(1);
    let mut hist: Vec<C64> = vec![C64::new(4.0 * (kappa - kappa * kappa).sqrt(), 0.0)];
    let mut value = C64::new(0.0, 0.0);
    for k in 0..=steps {
        let xk = x * k as f64 / steps as f64;
        let (r, rp) = r_and_derivative(kappa, C64::new(0.0, xk), m)?;
        let mut root = (r * r + 4.0).sqrt();
        let n = hist.len();
        let guess = match n {
            1 => hist[0],
            2 => hist[1] * 2.0 - hist[0],
            _ => hist[n - 1] * 3.0 - hist[n - 2] * 3.0 + hist[n - 3],
        };
        if (root - guess).norm() > (root + guess).norm() {
            root = -root;
        }
        let (near, far) = ((root - guess).norm(), (root + guess).norm());
        if k == steps && k > 1 && !(near < 0.5 * far) {
            return Err(Error::Singular("square-root branch of the determinant formula is ambiguous"));
        }
        if k > 0 {
            hist.push(root);
        } else {
            hist[0] = root;
        }
        value = rp / (2.0 * root);
    }
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::Singular("square root in the determinant formula vanishes"));
    }
    Ok(p.phase_factor() * value)
}

//! Cauchy transforms of Chebyshev polynomials on `[-1, 1]`.
//!
//! `I_k(s) = ∫_{-1}^{1} T_k(t) / (t − s) dt` is evaluated through the inverse
//! Joukowski variable `x = 1/(s + √(s−1)√(s+1))`, `|x| < 1`, as
//! `I_k = x^k ℓ + S_k + t_k` with `ℓ = log((1−x)/(1+x))`, a forward recurrence
//! for `S_k` and a backward recurrence for the tail `t_k`.

use num_complex::Complex64 as C64;

/// Inverse Joukowski map of a point off `[-1, 1]`.
pub fn joukowski_inv(s: C64) -> C64 {
    let w = (s - 1.0).sqrt() * (s + 1.0).sqrt();
    1.0 / (s + w)
}

/// `I_0 .. I_{n-1}` at the Joukowski variable `x` (`|x| ≤ 1`, `x ≠ ±1`).
pub fn cheb_cauchy_x(x: C64, n: usize, out: &mut Vec<C64>) {
    out.clear();
    out.resize(n, C64::new(0.0, 0.0));
    if n == 0 {
        return;
    }
    let ell = ((1.0 - x) / (1.0 + x)).ln();
    let kmax = n - 1;
    let ax = x.norm();
    let mut tail = if kmax == 0 {
        ell
    } else if ax.powi(kmax as i32) > 1e-3 {
        let mut ps = C64::new(0.0, 0.0);
        let mut xp = x;
        let x2 = x * x;
        let mut j = 1;
        while j <= kmax {
            ps += xp * (2.0 / j as f64);
            xp *= x2;
            j += 2;
        }
        (ell + ps) / x.powu(kmax as u32)
    } else {
        let j0 = if (kmax + 1) % 2 == 1 { kmax + 1 } else { kmax + 2 };
        let x2 = x * x;
        let mut term = x.powu((j0 - kmax) as u32);
        let mut acc = C64::new(0.0, 0.0);
        let mut m = 0usize;
        let mut mag = 1.0;
        let ax2 = ax * ax;
        loop {
            acc -= term * (2.0 / (j0 + 2 * m) as f64);
            term *= x2;
            mag *= ax2;
            m += 1;
            if mag < 1e-18 || m > 100_000 {
                break;
            }
        }
        acc
    };
    // Backward pass writes t_k, forward pass adds x^k ℓ + S_k.
    out[kmax] = tail;
    for k in (1..=kmax).rev() {
        let odd = if k % 2 == 1 { 2.0 * x / k as f64 } else { C64::new(0.0, 0.0) };
        tail = x * tail - odd;
        out[k - 1] = tail;
    }
    let mut xk = C64::new(1.0, 0.0);
    let mut s = C64::new(0.0, 0.0);
    for (k, o) in out.iter_mut().enumerate() {
        *o += xk * ell + s;
        let odd = if k % 2 == 1 { 2.0 * x / k as f64 } else { C64::new(0.0, 0.0) };
        if k >= 1 {
            s = x * s + odd;
        }
        xk *= x;
    }
}

/// `I_0 .. I_{n-1}` at a point `s` off the interval.
pub fn cheb_cauchy(s: C64, n: usize, out: &mut Vec<C64>) {
    cheb_cauchy_x(joukowski_inv(s), n, out)
}

/// Boundary values of `I_k` at an interior point `t = cos ϑ` of the interval,
/// from above (`plus = true`, `x = e^{-iϑ}`) or below.
pub fn cheb_cauchy_boundary(t: f64, plus: bool, n: usize, out: &mut Vec<C64>) {
    let r = (1.0 - t * t).max(0.0).sqrt();
    let x = if plus { C64::new(t, -r) } else { C64::new(t, r) };
    cheb_cauchy_x(x, n, out)
}

/// Finite-part constants `c_k` with `I_k(s) = log(s − 1) + c_k + o(1)` as `s → 1`.
///
/// At `s → −1` the expansion is `I_k(s) = −(−1)^k (log(−(s + 1)) + c_k) + o(1)`.
pub fn endpoint_constants(n: usize) -> Vec<f64> {
    let mut c = Vec::with_capacity(n);
    let mut even_part = 0.0; // 2 Σ_{d odd ≤ k−1} 1/d
    let mut odd_part = 0.0; // 2 Σ_{j odd ≤ k} 1/j
    for k in 0..n {
        if k % 2 == 1 {
            odd_part += 2.0 / k as f64;
        }
        if k >= 1 && (k - 1) % 2 == 1 {
            even_part += 2.0 / (k - 1) as f64;
        }
        c.push(-std::f64::consts::LN_2 + even_part + odd_part);
    }
    c
}

/// `∫_{-1}^{1} T_k(t) dt`.
pub fn cheb_integral(k: usize) -> f64 {
    if k % 2 == 1 {
        0.0
    } else {
        2.0 / (1.0 - (k * k) as f64)
    }
}

/// Chebyshev–Lobatto points `t_m = −cos(π m / (n − 1))`, ascending.
pub fn lobatto(n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![0.0];
    }
    (0..n)
        .map(|m| -(std::f64::consts::PI * m as f64 / (n - 1) as f64).cos())
        .collect()
}

/// Values `T_0(t) .. T_{n-1}(t)`.
pub fn cheb_values(t: f64, n: usize, out: &mut Vec<f64>) {
    out.clear();
    if n == 0 {
        return;
    }
    out.push(1.0);
    if n == 1 {
        return;
    }
    out.push(t);
    for k in 2..n {
        let v = 2.0 * t * out[k - 1] - out[k - 2];
        out.push(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(s: C64, k: usize) -> C64 {
        // Composite Gauss-free midpoint rule on a θ-grid, adequate away from the interval.
        let m = 20000;
        let mut acc = C64::new(0.0, 0.0);
        for j in 0..m {
            let th = std::f64::consts::PI * (j as f64 + 0.5) / m as f64;
            let t = th.cos();
            let tk = (k as f64 * th).cos();
            acc += tk / (t - s) * th.sin();
        }
        acc * (std::f64::consts::PI / m as f64)
    }

    #[test]
    fn matches_quadrature_off_interval() {
        let mut out = Vec::new();
        for s in [C64::new(0.3, 0.8), C64::new(3.0, 1.0), C64::new(0.0, 20.0), C64::new(-1.7, -0.4)] {
            cheb_cauchy(s, 12, &mut out);
            for k in 0..12 {
                assert!((out[k] - brute(s, k)).norm() < 1e-7, "s={s} k={k}");
            }
        }
    }

    #[test]
    fn plemelj_jump_is_polynomial() {
        let mut p = Vec::new();
        let mut m = Vec::new();
        let mut tv = Vec::new();
        for t in [-0.9, -0.2, 0.35, 0.8] {
            cheb_cauchy_boundary(t, true, 30, &mut p);
            cheb_cauchy_boundary(t, false, 30, &mut m);
            cheb_values(t, 30, &mut tv);
            for k in 0..30 {
                let jump = (p[k] - m[k]) / C64::new(0.0, 2.0 * std::f64::consts::PI);
                assert!((jump - tv[k]).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn endpoint_finite_parts() {
        let c = endpoint_constants(9);
        let mut out = Vec::new();
        let eps = 1e-10;
        let d = C64::from_polar(eps, 0.9);
        cheb_cauchy(C64::new(1.0, 0.0) + d, 9, &mut out);
        for k in 0..9 {
            assert!((out[k] - d.ln() - c[k]).norm() < 1e-6, "k={k} {}", (out[k] - d.ln() - c[k]).norm());
        }
        cheb_cauchy(C64::new(-1.0, 0.0) + d, 9, &mut out);
        for k in 0..9 {
            let sgn = if k % 2 == 0 { -1.0 } else { 1.0 };
            assert!((out[k] - sgn * ((-d).ln() + c[k])).norm() < 1e-6, "k={k}");
        }
    }
}

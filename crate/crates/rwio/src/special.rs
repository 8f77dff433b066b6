//! Special functions of complex argument: `ln Γ` and the Bessel functions `J₀`, `J₁`.

use num_complex::Complex64 as C64;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Γ(z)` on the principal branch for `Re z ≥ 1/2`, continued by reflection.
pub fn ln_gamma(z: C64) -> C64 {
    if z.re < 0.5 {
        // Γ(z)Γ(1−z) = π / sin(πz).
        return C64::new(PI.ln(), 0.0) - (z * PI).sin().ln() - ln_gamma(1.0 - z);
    }
    let z = z - 1.0;
    let mut x = C64::new(LANCZOS[0], 0.0);
    for (k, c) in LANCZOS.iter().enumerate().skip(1) {
        x += *c / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    C64::new(0.5 * (2.0 * PI).ln(), 0.0) + (z + 0.5) * t.ln() - t + x.ln()
}

/// `arg Γ(i p)` for real `p > 0`, continuous in `p` and tending to `−π/2` as `p → 0⁺`.
pub fn arg_gamma_ip(p: f64) -> f64 {
    // Γ(ip) = Γ(1+ip)/(ip); arg Γ(1+ip) is small and continuous for moderate p.
    (ln_gamma(C64::new(1.0, p))).im - PI / 2.0
}

/// Below this modulus `J₀`, `J₁` are summed from their power series.
const SERIES_RADIUS: f64 = 17.0;

/// `(J₀(z), J₁(z))` for complex `z`.
pub fn bessel_j01(z: C64) -> (C64, C64) {
    if z.norm() <= SERIES_RADIUS {
        series_j01(z)
    } else if z.re < 0.0 {
        // J₀ is even and J₁ odd.
        let (j0, j1) = hankel_j01(-z);
        (j0, -j1)
    } else {
        hankel_j01(z)
    }
}

fn series_j01(z: C64) -> (C64, C64) {
    let q = -0.25 * z * z;
    let mut t0 = C64::new(1.0, 0.0);
    let mut t1 = 0.5 * z;
    let (mut j0, mut j1) = (t0, t1);
    for k in 1..200 {
        let kf = k as f64;
        t0 *= q / (kf * kf);
        t1 *= q / (kf * (kf + 1.0));
        j0 += t0;
        j1 += t1;
        if t0.norm() <= 1e-17 * j0.norm() && t1.norm() <= 1e-17 * j1.norm() {
            break;
        }
    }
    (j0, j1)
}

/// Hankel asymptotic expansions, accurate to about `e^{−2|z|}` for `Re z > 0`.
fn hankel_j01(z: C64) -> (C64, C64) {
    let pq = |nu: f64| {
        let mu = 4.0 * nu * nu;
        let (mut p, mut q) = (C64::new(1.0, 0.0), C64::new(0.0, 0.0));
        let mut term = C64::new(1.0, 0.0);
        let z8 = 8.0 * z;
        for k in 1..60 {
            let kf = k as f64;
            term *= (mu - (2.0 * kf - 1.0).powi(2)) / (kf * z8);
            if term.norm() > 1.0 {
                break;
            }
            if k % 2 == 1 {
                let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
                q += sign * term;
            } else {
                let sign = if (k / 2) % 2 == 1 { -1.0 } else { 1.0 };
                p += sign * term;
            }
            if term.norm() < 1e-17 {
                break;
            }
        }
        (p, q)
    };
    let amp = (2.0 / (PI * z)).sqrt();
    let chi0 = z - PI / 4.0;
    let chi1 = z - 3.0 * PI / 4.0;
    let (p0, q0) = pq(0.0);
    let (p1, q1) = pq(1.0);
    (amp * (p0 * chi0.cos() - q0 * chi0.sin()), amp * (p1 * chi1.cos() - q1 * chi1.sin()))
}

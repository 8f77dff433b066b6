//! The squared L² norm of Ψ(·, 0), which equals 8 for every (a, b).
//!
//! Simpson's rule on [-25, 25] plus the large-X modulus formula beyond.

use rwio::asymptotics::l2_tail_t0;
use rwio::params::derive_params;
use rwio::{psi_eval, PsiOptions, C64};
use std::error::Error;

fn simpson(f: &dyn Fn(f64) -> rwio::Result<f64>, lo: f64, hi: f64, h: f64) -> rwio::Result<f64> {
    let m = 2 * ((hi - lo) / (2.0 * h)).round() as usize;
    let h = (hi - lo) / m as f64;
    let mut s = 0.0;
    for k in 0..=m {
        let w = if k == 0 || k == m { 1.0 } else if k % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(lo + k as f64 * h)?;
    }
    Ok(s * h / 3.0)
}

fn main() -> Result<(), Box<dyn Error>> {
    let opts = PsiOptions { n: Some(40), ..PsiOptions::default() };
    for (a, b) in [(C64::new(1.0, 0.0), C64::new(1.0, 0.0)), (C64::new(1.0, 0.0), C64::new(0.0, 2.0))] {
        let f = |x: f64| Ok(psi_eval(x, 0.0, a, b, 1.0, &opts)?.value.norm_sqr());
        // The central peak is narrow, so it gets a finer step.
        let window = simpson(&f, -25.0, -4.0, 0.1)? + simpson(&f, -4.0, 4.0, 0.05)? + simpson(&f, 4.0, 25.0, 0.1)?;
        // Ψ(−X, 0; G(a, b)) = Ψ(X, 0; G(b, a)).
        let tail = l2_tail_t0(25.0, &derive_params(a, b, 1.0)?)? + l2_tail_t0(25.0, &derive_params(b, a, 1.0)?)?;
        println!("a = {a}, b = {b}: window {window:.6} + tail {tail:.6} = {:.6}", window + tail);
    }
    Ok(())
}

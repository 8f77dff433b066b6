//! For a = b the function Ψ(0, t²) satisfies |Ψ + tΨ_t|² = 16.

use rwio::{psi, C64};
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    let one = C64::new(1.0, 0.0);
    let f = |t: f64| psi(0.0, t * t, one, one, 1.0);
    let h = 1e-2;
    for t in [0.5, 1.0, 1.5] {
        let d = (f(t - 2.0 * h)? - f(t - h)? * 8.0 + f(t + h)? * 8.0 - f(t + 2.0 * h)?) / (12.0 * h);
        let lhs = (f(t)? + t * d).norm_sqr();
        println!("t = {t}: |Psi + t Psi_t|^2 = {lhs:.9}");
    }
    Ok(())
}

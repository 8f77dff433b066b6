//! Exact symmetries: direct solves at mixed-sign points against the reduction to X, T ≥ 0.

use rwio::params::derive_params;
use rwio::regimes::undeformed::rwio_undeformed;
use rwio::{psi_eval, PsiOptions, C64};
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    let (a, b) = (C64::new(0.8, -0.3), C64::new(-0.2, 1.4));
    let p = derive_params(a, b, 1.0)?;
    let opts = PsiOptions { n: Some(100), ..PsiOptions::default() };
    for (x, t) in [(0.7, 0.4), (-0.7, 0.4), (0.7, -0.4), (-0.7, -0.4), (-1.2, 0.9)] {
        let direct = rwio_undeformed(x, t, &p, 100)?.0;
        let reduced = psi_eval(x, t, a, b, 1.0, &opts)?.value;
        println!("({x:>4}, {t:>4}): direct {direct:.12}  reduced {reduced:.12}  |diff| {:.1e}", (direct - reduced).norm());
    }
    let rot = p.phase_factor().conj();
    for x in [-3.0, -0.5, 0.5, 3.0] {
        let z = rot * psi_eval(x, 0.0, a, b, 1.0, &opts)?.value;
        println!("X = {x:>4}: e^(i arg ab) Psi(X, 0) = {z:.12}");
    }
    let scaled = psi_eval(0.5, 0.2, a, b, 2.0, &opts)?.value;
    let unscaled = psi_eval(1.0, 0.8, a, b, 1.0, &opts)?.value;
    println!("Psi(0.5, 0.2; B=2) = {scaled:.12} = 2 Psi(1, 0.8; B=1) = {:.12}", 2.0 * unscaled);
    Ok(())
}

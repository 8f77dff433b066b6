//! Ψ(X, 0) from the Bessel-kernel Fredholm determinant, against the Riemann–Hilbert solver.

use rwio::fredholm::{log_det_bessel, psi_t0_oracle};
use rwio::params::derive_params;
use rwio::{psi, C64};
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    let (a, b) = (C64::new(1.0, 0.0), C64::new(0.0, 2.0));
    let p = derive_params(a, b, 1.0)?;
    let kappa = p.frak_a * p.frak_a;
    println!("log D(0.5i) = {:.15}", log_det_bessel(kappa, C64::new(0.0, 0.5), 48)?);
    for x in [0.0, 0.1, 0.3, 0.5, 0.75] {
        let o = psi_t0_oracle(x, &p)?;
        let s = psi(x, 0.0, a, b, 1.0)?;
        println!("X = {x:<5} determinant {:+.12}i  solver {:+.12}i  |diff| {:.2e}", o.im, s.im, (o - s).norm());
    }
    Ok(())
}

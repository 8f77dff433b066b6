//! Evaluate Ψ at a single point with general parameters and print the solver diagnostics.

use rwio::{psi_eval, PsiOptions, C64};
use std::error::Error;
use std::time::Instant;

fn main() -> Result<(), Box<dyn Error>> {
    let (a, b) = (C64::new(2.0, -3.0), C64::new(1.0, 0.5));
    let start = Instant::now();
    let e = psi_eval(-1.8, 0.6, a, b, 1.2, &PsiOptions::default())?;
    println!("Psi(-1.8, 0.6; G(2-3i, 1+0.5i), 1.2) = {:.16} {:+.16}i", e.value.re, e.value.im);
    println!("region {}, n = {}, matrix {}", e.region, e.n, e.report.matrix_dimension);
    println!("jump residual {:e}, elapsed {:?}", e.report.max_jump_residual, start.elapsed());
    Ok(())
}

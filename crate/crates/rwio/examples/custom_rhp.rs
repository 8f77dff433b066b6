//! The generic collocation solver on a problem with a closed-form solution.
//!
//! The jump `e^{f(s)σ₃}` with `f(s) = c(1 − s²)` on `[-1, 1]` is solved by
//! `Φ(z) = exp(C[f](z) σ₃)`, so the first moment is `−(1/2πi)∫f ds · σ₃ = −(4c/3)/(2πi) σ₃`.

use rwio::rhp::{first_moment, jump_fn, solve_rhp, Arc, Contour, RHProblem};
use rwio::{Mat2, C64};
use std::error::Error;
use std::f64::consts::PI;

fn main() -> Result<(), Box<dyn Error>> {
    let c = C64::new(0.3, 0.2);
    let arcs = vec![Arc::new(C64::new(-1.0, 0.0), C64::new(1.0, 0.0), 40, "I")];
    let jumps = vec![jump_fn(move |s| Mat2::exp_sigma3(c * (1.0 - s * s)))];
    let problem = RHProblem::new(Contour::new(arcs)?, jumps)?;
    let (density, report) = solve_rhp(&problem)?;
    let m1 = first_moment(&density);
    let exact = -(4.0 * c / 3.0) / C64::new(0.0, 2.0 * PI);
    println!("M1[0,0] = {:.15}", m1[(0, 0)]);
    println!("exact   = {:.15}", exact);
    println!("residual {:e}, dimension {}", report.max_jump_residual, report.matrix_dimension);
    Ok(())
}

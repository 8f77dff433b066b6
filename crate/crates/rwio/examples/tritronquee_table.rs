//! Tabulate V(y; τ) from its Riemann–Hilbert problem, save it as CSV and continue it to large y.

use rwio::painleve2::{build_table, tritronquee_v, v_asymptotic, DEFAULT_N};
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    let tau = 1.0;
    let table = build_table(tau, -1.0, 1.0, 0.05, DEFAULT_N)?;
    let path = std::env::temp_dir().join("tritronquee_tau1.csv");
    table.save(&path)?;
    println!("wrote {} samples to {}", table.len(), path.display());
    println!("V(0.125; 1) interpolated = {:.12}", table.eval(0.125)?);
    for y in [5.0, 10.0, 20.0, 40.0] {
        let v = tritronquee_v(y, tau)?;
        let a = v_asymptotic(y, tau);
        println!("y = {y:>4}: V = {v:.10}  -(y/6)^alpha = {a:.10}  rel {:.3e}", (v - a).norm() / a.norm());
    }
    Ok(())
}

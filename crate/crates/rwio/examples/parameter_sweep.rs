//! Parallel grid sweep of Ψ written as CSV in deterministic T-major order.

use rwio::cli::{write_csv, GridJob};
use rwio::{PsiOptions, C64};
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    let job = GridJob {
        x_min: -3.0,
        x_max: 3.0,
        dx: 0.5,
        t_min: -1.0,
        t_max: 1.0,
        dt: 0.5,
        a: C64::new(1.0, 0.0),
        b: C64::new(1.0, 0.0),
        big_b: 1.0,
        options: PsiOptions { n: Some(120), ..PsiOptions::default() },
    };
    let rows = job.run()?;
    let path = std::env::temp_dir().join("rwio_sweep.csv");
    write_csv(&rows, std::fs::File::create(&path)?)?;
    let peak = rows.iter().map(|r| r.re.hypot(r.im)).fold(0.0, f64::max);
    println!("{} points, max |Psi| = {peak:.6}, written to {}", rows.len(), path.display());
    Ok(())
}

//! Evaluate overlapping regime solvers at the same point to check that the contours join seamlessly.

use rwio::cli::compare_regimes;
use rwio::phases::{v_c, w_c};
use rwio::C64;
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    let (a, b) = (C64::new(1.0, 0.0), C64::new(0.0, 2.0));
    let points = [
        ("X=1, v=0.1v_c", 1.0, 0.1 * v_c()),
        ("X=1, v=v_c", 1.0, v_c()),
        ("T=1, w=0.8w_c", (0.8 * w_c()), 1.0),
    ];
    for (label, x, t) in points {
        println!("{label}: (X, T) = ({x}, {t})");
        let vals = compare_regimes(x, t, a, b, 1.0, None)?;
        for (r, v) in &vals {
            match v {
                Some(z) => println!("  {r:<14} {:.15} {:+.15}i", z.re, z.im),
                None => println!("  {r:<14} n/a"),
            }
        }
    }
    Ok(())
}

//! Closed-form values at the origin: Ψ(0,0) and ∂Ψ/∂X(0,0), against the solver.

use rwio::{psi, C64};
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    let cases = [(C64::new(1.0, 0.0), C64::new(1.0, 0.0)), (C64::new(1.0, 0.0), C64::new(0.0, 2.0)), (C64::new(0.3, -1.1), C64::new(-0.7, 0.4))];
    for (a, b) in cases {
        let n2 = a.norm_sqr() + b.norm_sqr();
        let exact = 8.0 * a.conj() * b.conj() / n2;
        let exact_dx = 32.0 * a.conj() * b.conj() * (b.norm_sqr() - a.norm_sqr()) / (n2 * n2);
        let h = 2e-3;
        let f = |x: f64| psi(x, 0.0, a, b, 1.0);
        let fd = (f(-2.0 * h)? - f(-h)? * 8.0 + f(h)? * 8.0 - f(2.0 * h)?) / (12.0 * h);
        println!("a = {a}, b = {b}");
        println!("  Psi(0,0)    {:.12}  exact {:.12}", f(0.0)?, exact);
        println!("  dPsi/dX     {:.8}  exact {:.8}", fd, exact_dx);
    }
    println!("a = 0: Psi(3, 1) = {}", psi(3.0, 1.0, C64::new(0.0, 0.0), C64::new(1.0, 0.0), 1.0)?);
    Ok(())
}

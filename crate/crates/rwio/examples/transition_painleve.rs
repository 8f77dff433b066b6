//! Transitional asymptotics near T = v_c X^{3/2} through the Painlevé-II function V(y; τ).

use rwio::asymptotics::{asym_transition, transition_v};
use rwio::painleve2::TritronqueeTable;
use rwio::params::derive_params;
use rwio::regimes::psi_painleve;
use rwio::C64;
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    let p = derive_params(C64::new(1.0, 0.0), C64::new(1.0, 0.0), 1.0)?;
    let table = TritronqueeTable::default_for(p.tau)?;
    let vfun = |y: f64, _tau: f64| table.eval(y);
    for x in [500.0, 2000.0, 8000.0] {
        let mut sup: f64 = 0.0;
        for k in 0..=10 {
            let y = -1.0 + 0.2 * k as f64;
            let v = transition_v(x, y);
            let num = psi_painleve(x, v, &p, 80)?;
            let asym = asym_transition(x, x.powf(1.5) * v, &p, &vfun)?;
            sup = sup.max(0.5 * 3f64.powf(-2.0 / 3.0) * x.powf(2.0 / 3.0) * (num - asym).norm());
        }
        println!("X = {x:>6}: renormalized error sup_y E(y) = {sup:.4e}");
    }
    Ok(())
}

//! Peak curves X_N(v) and T_N(w) from the lower real branch of the Lambert W function.

use rwio::asymptotics::{lambert_w, peak_curves, PeakFamily, Side, WBranch};
use rwio::params::derive_params;
use rwio::phases::{v_c, w_c};
use rwio::C64;
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    println!("W_-1(-0.2) = {}", lambert_w(-0.2, WBranch::Minus1, Side::Above)?);
    let p = derive_params(C64::new(1.0, 0.0), C64::new(1.0, 0.0), 1.0)?;
    for n in 1..=5 {
        let x = peak_curves(PeakFamily::XN, n, 0.5 * v_c(), &p)?;
        let t = peak_curves(PeakFamily::TN, n, 0.85 * w_c(), &p)?;
        println!("N = {n}: X_N(0.5 v_c) = {x:12.4}   T_N(0.85 w_c) = {t:14.4}");
    }
    Ok(())
}

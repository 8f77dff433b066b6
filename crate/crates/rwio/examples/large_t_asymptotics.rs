//! Large-T asymptotics against the large-T solver along the curve X = w T^{2/3}.

use rwio::asymptotics::asym_large_t;
use rwio::params::derive_params;
use rwio::phases::w_c;
use rwio::regimes::psi_large_t;
use rwio::C64;
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    let p = derive_params(C64::new(1.0, 0.0), C64::new(1.0, 0.0), 1.0)?;
    let w = 0.85 * w_c();
    println!("{:>8} {:>28} {:>12} {:>14}", "T", "Psi", "|error|", "|error| T^2/3");
    for t in [100.0, 300.0, 1000.0, 3000.0] {
        let num = psi_large_t(t, w, &p, 60)?;
        let err = (num - asym_large_t(w * t.powf(2.0 / 3.0), t, &p)?).norm();
        println!("{t:>8} {:>13.6} {:+13.6}i {err:>12.3e} {:>14.4}", num.re, num.im, err * t.powf(2.0 / 3.0));
    }
    Ok(())
}

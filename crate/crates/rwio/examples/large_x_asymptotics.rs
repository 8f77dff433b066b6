//! Large-X asymptotics against the large-X solver along the ray T = v X^{3/2}.

use rwio::asymptotics::{asym_large_x, mod2_large_x};
use rwio::params::derive_params;
use rwio::phases::v_c;
use rwio::regimes::psi_large_x;
use rwio::C64;
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    let p = derive_params(C64::new(1.0, 0.0), C64::new(1.0, 0.0), 1.0)?;
    let v = 0.5 * v_c();
    println!("{:>8} {:>14} {:>14} {:>12}", "X", "|Psi|^2", "asym |Psi|^2", "|error|");
    for x in [200.0, 500.0, 1000.0, 2000.0, 5000.0] {
        let num = psi_large_x(x, v, &p, 140)?;
        let asym = asym_large_x(x, x.powf(1.5) * v, &p)?;
        println!("{x:>8} {:>14.6e} {:>14.6e} {:>12.3e}", num.norm_sqr(), mod2_large_x(x, v, &p)?, (num - asym).norm());
    }
    Ok(())
}

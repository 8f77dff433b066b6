use proptest::prelude::*;
use rwio::fredholm::{bessel_kernel, det_bessel, log_det_bessel, psi_t0_oracle, psi_t0_oracle_with, X_MAX};
use rwio::params::derive_params;
use rwio::{psi_eval, Error, PsiOptions, C64};

// Nyström determinants at 40 digits with mpmath.
#[test]
fn determinant_against_high_precision_nystrom() {
    let cases = [
        (0.2, C64::new(0.0, 16.0), C64::new(0.77912286999150709255, 0.39178333986126546947)),
        (0.8, C64::new(2.0, 0.0), C64::new(0.68517037664968451661, 0.0)),
        (0.5, C64::new(-3.0, 1.0), C64::new(1.5254392274308714785, -0.2609000434199976958)),
    ];
    for (kappa, r, d) in cases {
        let v = det_bessel(kappa, r, 48).unwrap();
        assert!((v - d).norm() < 1e-13, "D({kappa}, {r}) = {v}");
    }
}

#[test]
fn small_r_expansion() {
    // log D = −κ tr K − (κ²/2) tr K² + O(r³), tr K = r/4 − r²/32, tr K² = r²/16.
    let kappa = 0.6;
    for r in [C64::new(1e-3, 0.0), C64::new(0.0, 2e-3)] {
        let expansion = -kappa * (r / 4.0 - r * r / 32.0) - kappa * kappa / 2.0 * r * r / 16.0;
        assert!((log_det_bessel(kappa, r, 32).unwrap() - expansion).norm() < 1e-9);
    }
    assert_eq!(det_bessel(0.3, C64::new(0.0, 0.0), 32).unwrap(), C64::new(1.0, 0.0));
}

#[test]
fn quadrature_order_converges() {
    let r = C64::new(0.0, 24.0);
    let d32 = det_bessel(0.5, r, 32).unwrap();
    let d64 = det_bessel(0.5, r, 64).unwrap();
    assert!((d32 - d64).norm() < 1e-13);
    assert!(det_bessel(0.5, r, 8).is_err());
}

#[test]
fn oracle_against_solver() {
    let (a, b) = (C64::new(1.0, 0.0), C64::new(0.0, 2.0));
    let p = derive_params(a, b, 1.0).unwrap();
    let opts = PsiOptions { n: Some(120), ..PsiOptions::default() };
    for x in [-0.4, 0.2, 0.6] {
        let o = psi_t0_oracle(x, &p).unwrap();
        let s = psi_eval(x, 0.0, a, b, 1.0, &opts).unwrap().value;
        assert!((o - s).norm() < 1e-6, "X = {x}: {o} vs {s}");
    }
    let o32 = psi_t0_oracle_with(0.3, &p, 32).unwrap();
    assert!((o32 - psi_t0_oracle(0.3, &p).unwrap()).norm() < 1e-8);
}

#[test]
fn oracle_domain() {
    let p = derive_params(C64::new(1.0, 0.0), C64::new(1.0, 0.0), 1.0).unwrap();
    assert!(matches!(psi_t0_oracle(X_MAX + 0.1, &p), Err(Error::Domain { .. })));
    let q = derive_params(C64::new(1.0, 0.0), C64::new(0.0, 0.0), 1.0).unwrap();
    assert!(psi_t0_oracle(0.1, &q).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn kernel_is_symmetric(xr in -20.0..20.0f64, xi in -20.0..20.0f64, yr in -20.0..20.0f64, yi in -20.0..20.0f64) {
        let (x, y) = (C64::new(xr, xi), C64::new(yr, yi));
        let (k1, k2) = (bessel_kernel(x, y), bessel_kernel(y, x));
        prop_assert!((k1 - k2).norm() <= 1e-10 * (1.0 + k1.norm()));
    }

    #[test]
    fn determinant_is_real_analytic(kappa in 0.05..0.95f64, re in -10.0..10.0f64, im in -30.0..30.0f64) {
        let r = C64::new(re, im);
        let d = det_bessel(kappa, r, 32).unwrap();
        let dc = det_bessel(kappa, r.conj(), 32).unwrap();
        prop_assert!((d.conj() - dc).norm() <= 1e-12 * (1.0 + d.norm()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn oracle_output_has_the_right_phase(x in -0.7..0.7f64, br in -2.0..2.0f64, bi in 0.3..2.0f64) {
        let p = derive_params(C64::new(1.0, 0.0), C64::new(br, bi), 1.0).unwrap();
        let o = psi_t0_oracle(x, &p).unwrap() * p.phase_factor().conj();
        prop_assert!(o.im.abs() < 1e-8);
    }
}

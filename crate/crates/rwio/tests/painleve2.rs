use proptest::prelude::*;
use rwio::painleve2::{
    alpha, build_table, continue_v, p_of_tau, solve_tritronquee, tritronquee_v, v_asymptotic, v_direct,
    TritronqueeTable, DEFAULT_N,
};
use rwio::{Error, C64};

#[test]
fn direct_solver_and_ode_continuation_agree() {
    // Two independent routes to V(3; 1).
    let direct = v_direct(3.0, 1.0, DEFAULT_N).unwrap();
    let continued = continue_v(1.0, 3.0, 1.0, 1e-3).unwrap();
    assert!((direct - continued).norm() < 1e-7, "{direct} vs {continued}");
}

#[test]
fn off_diagonal_entries_are_related() {
    let s = solve_tritronquee(0.4, 0.7, DEFAULT_N).unwrap();
    assert!((s.w12 + s.v.conj()).norm() < 1e-10);
    assert!(s.report.max_jump_residual < 1e-6);
}

// Regression value from the ODE continuation, stable to 1e-9 across start points.
#[test]
fn continued_value_at_twenty() {
    let v = tritronquee_v(20.0, 1.0).unwrap();
    assert!((v - C64::new(-1.9067345706, -0.2534668927)).norm() < 1e-8, "{v}");
}

#[test]
fn approach_to_the_power_law() {
    let rel = |y: f64| {
        let a = v_asymptotic(y, 1.0);
        (tritronquee_v(y, 1.0).unwrap() - a).norm() / a.norm()
    };
    let (r20, r40, r80) = (rel(20.0), rel(40.0), rel(80.0));
    assert!(r40 < r20 && r80 < r40);
    assert!(r20 < 20f64.powf(-0.75) && r80 < 0.01);
}

#[test]
fn rejects_large_negative_y() {
    assert!(matches!(tritronquee_v(-6.0, 1.0), Err(Error::Domain { .. })));
}

#[test]
fn table_round_trip_and_interpolation() {
    let t = build_table(1.0, -0.2, 0.2, 0.02, DEFAULT_N).unwrap();
    assert_eq!(t.len(), 21);
    assert!(t.max_ode_residual().unwrap() < 1e-3);
    let mut buf = Vec::new();
    t.write_csv(&mut buf).unwrap();
    let back = TritronqueeTable::read_csv(1.0, buf.as_slice()).unwrap();
    assert_eq!(back, t);
    assert!((t.eval(t.y[7]).unwrap() - t.v[7]).norm() < 1e-14);
    let mid = t.eval(0.05).unwrap();
    assert!((mid - v_direct(0.05, 1.0, DEFAULT_N).unwrap()).norm() < 1e-6);
    assert!(t.eval(0.5).is_err());
    let path = std::env::temp_dir().join(format!("rwio_p2_{}.csv", std::process::id()));
    t.save(&path).unwrap();
    assert_eq!(TritronqueeTable::load(1.0, &path).unwrap(), t);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn non_uniform_tables_are_rejected() {
    let csv = "y,re,im\n0,1,0\n0.1,1,0\n0.3,1,0\n0.4,1,0\n";
    assert!(matches!(TritronqueeTable::read_csv(1.0, csv.as_bytes()), Err(Error::Parse(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn v_is_nonvanishing_on_the_direct_band(y in -3.0..3.0f64, tau in 0.3..3.0f64) {
        let v = v_direct(y, tau, DEFAULT_N).unwrap();
        prop_assert!(v.norm() > 1e-3);
    }

    #[test]
    fn exponent_matches_tau(tau in 0.01..10.0f64) {
        let a = alpha(p_of_tau(tau));
        prop_assert_eq!(a.re, 0.5);
        prop_assert!((a.im - (1.0 + tau * tau).ln() / (2.0 * std::f64::consts::PI)).abs() < 1e-15);
    }
}

use rwio::cli::{fmt17, read_csv, run, write_csv, worker_count, GridJob, PointRecord, WORKERS_ENV};
use rwio::{psi_eval, PsiOptions, C64};
use std::process::Command;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("rwio").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn first_complex(s: &str) -> C64 {
    let f: Vec<&str> = s.lines().next().unwrap().split_whitespace().collect();
    let im: f64 = f[2].trim_end_matches('i').parse().unwrap();
    C64::new(f[0].parse().unwrap(), if f[1] == "-" { -im } else { im })
}

#[test]
fn psi_at_the_origin_and_degenerate_parameters() {
    let (code, out, _) = call(&["psi", "-X", "0", "-T", "0", "-a", "1", "-b", "1", "-n", "80"]);
    assert_eq!(code, 0);
    assert!((first_complex(&out) - C64::new(4.0, 0.0)).norm() < 1e-10);
    let (code, out, _) = call(&["psi", "-X", "3", "-T", "1", "-a", "1", "-b", "0"]);
    assert_eq!(code, 0);
    assert_eq!(first_complex(&out), C64::new(0.0, 0.0));
}

#[test]
fn invalid_input_exits_with_two() {
    for args in [
        vec!["psi", "-X", "1", "-T", "0", "-a", "1+x"],
        vec!["psi", "-X", "1", "-T", "0", "-a", "0", "-b", "0"],
        vec!["psi", "-X", "1", "-T", "0", "-B", "-1"],
        vec!["psi", "-X", "1"],
        vec!["frobnicate"],
        vec!["grid", "--x-min", "0", "--x-max", "1", "--dx", "0", "--t-min", "0", "--t-max", "0", "--dt", "1"],
    ] {
        let (code, _, err) = call(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(err.contains("Usage"), "{args:?}: {err}");
    }
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("p2table"));
}

#[test]
fn solver_failure_exits_with_one() {
    let (code, _, err) = call(&["oracle", "-X", "3", "-a", "1", "-b", "2i"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"));
}

#[test]
fn single_node_grid_equals_psi() {
    let (code, out, _) = call(&[
        "grid", "--x-min", "0.7", "--x-max", "0.7", "--dx", "1", "--t-min", "-0.3", "--t-max", "-0.3", "--dt", "1", "-a",
        "2-3i", "-b", "1+0.5i", "-n", "120",
    ]);
    assert_eq!(code, 0);
    let rows = read_csv(out.as_bytes()).unwrap();
    assert_eq!(rows.len(), 1);
    let opts = PsiOptions { n: Some(120), ..PsiOptions::default() };
    let z = psi_eval(0.7, -0.3, C64::new(2.0, -3.0), C64::new(1.0, 0.5), 1.0, &opts).unwrap().value;
    assert_eq!((rows[0].re, rows[0].im), (z.re, z.im));
    assert_eq!(rows[0].status, "ok");
}

#[test]
fn grid_output_is_independent_of_worker_count() {
    let base = ["grid", "--x-min", "-1", "--x-max", "1", "--dx", "0.5", "--t-min", "0", "--t-max", "0.4", "--dt", "0.2", "-n", "60"];
    let run_with = |w: &str| {
        let mut args = base.to_vec();
        args.extend(["--workers", w]);
        call(&args)
    };
    let (c1, one, _) = run_with("1");
    let (c3, three, _) = run_with("3");
    assert_eq!((c1, c3), (0, 0));
    assert_eq!(one, three);
    let rows = read_csv(one.as_bytes()).unwrap();
    assert_eq!(rows.len(), 15);
    // T outer, X inner.
    assert_eq!((rows[0].t, rows[4].x, rows[5].t), (0.0, 1.0, 0.2));
}

#[test]
fn environment_variable_sets_the_worker_count() {
    let bin = env!("CARGO_BIN_EXE_rwio");
    let args = ["grid", "--x-min", "0", "--x-max", "0.5", "--dx", "0.25", "--t-min", "0", "--t-max", "0", "--dt", "1", "-n", "40"];
    let a = Command::new(bin).args(args).env(WORKERS_ENV, "1").output().unwrap();
    let b = Command::new(bin).args(args).env(WORKERS_ENV, "2").output().unwrap();
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(worker_count(Some(3)), Some(3));
    assert_eq!(worker_count(Some(0)), None.or(worker_count(None)));
}

#[test]
fn jsonl_rows_carry_the_csv_fields() {
    let (code, out, _) = call(&[
        "grid", "--x-min", "0", "--x-max", "0.5", "--dx", "0.5", "--t-min", "0", "--t-max", "0", "--dt", "1", "--format",
        "jsonl", "-n", "40",
    ]);
    assert_eq!(code, 0);
    let rows: Vec<PointRecord> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 2);
    assert!(out.contains("\"X\":") && out.contains("\"region\":\"NoDeformation\""));
}

#[test]
fn csv_round_trip_is_bit_exact() {
    let job = GridJob {
        x_min: -0.3,
        x_max: 0.3,
        dx: 0.1,
        t_min: 0.1,
        t_max: 0.1,
        dt: 1.0,
        a: C64::new(0.3, -1.1),
        b: C64::new(-0.7, 0.4),
        big_b: 1.3,
        options: PsiOptions { n: Some(40), ..PsiOptions::default() },
    };
    let rows = job.run().unwrap();
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf).unwrap();
    assert!(String::from_utf8_lossy(&buf).starts_with("X,T,re,im,region,n,residual,status\n"));
    assert_eq!(read_csv(buf.as_slice()).unwrap(), rows);
    assert_eq!(fmt17(0.1).parse::<f64>().unwrap(), 0.1);
}

#[test]
fn compare_marks_inapplicable_regimes() {
    let (code, out, _) = call(&["compare", "-X", "1", "-T", "0.01", "-a", "1", "-b", "2i", "-n", "80"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "LargeT n/a"));
    assert!(out.contains("|NoDeformation - LargeX| = "));
}

#[test]
fn asym_and_p2table_subcommands() {
    let (code, out, _) = call(&["asym", "--kind", "large-x", "-X", "500", "-T", "100"]);
    assert_eq!(code, 0);
    assert!(first_complex(&out).norm() < 0.1);
    let (code, _, _) = call(&["asym", "--kind", "large-t", "-X", "500", "-T", "10"]);
    assert_eq!(code, 1);
    let (code, out, _) = call(&["p2table", "--tau", "1", "--y-min", "0", "--y-max", "0.3", "--step", "0.1"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 5);
}

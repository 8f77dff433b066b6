//! Command-line front end shared by the `rwio` binary and the integration tests.
//!
//! Exit codes: `0` success, `1` solver failure (or any failed grid row), `2` invalid input.

use crate::asymptotics::{asym_large_t, asym_large_x, asym_transition};
use crate::error::{Error, Result};
use crate::fredholm::psi_t0_oracle;
use crate::painleve2::{build_table, tritronquee_v, DEFAULT_N as P2_DEFAULT_N, TABLE_STEP, TABLE_Y_MAX, TABLE_Y_MIN};
use crate::params::{apply_reduction, derive_params, parse_complex, reduce};
use crate::phases::{v_c, w_c};
use crate::regimes::{psi_eval, solve_in_region, PsiOptions, Region};
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

/// Environment variable overriding the worker count.
pub const WORKERS_ENV: &str = "RWIO_WORKERS";

#[derive(Parser, Debug)]
#[command(name = "rwio", version, about = "Rogue waves of infinite order for focusing NLS")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate Ψ(X, T; G(a, b), B) at one point.
    Psi(PointArgs),
    /// Evaluate Ψ on a rectangular grid and write CSV or JSON lines.
    Grid(GridArgs),
    /// Evaluate every applicable regime solver at one point and compare.
    Compare(PointArgs),
    /// Evaluate an explicit asymptotic formula.
    Asym(AsymArgs),
    /// Compare the Fredholm-determinant formula with the solver at T = 0.
    Oracle(OracleArgs),
    /// Build a table of V(y; τ) and write it as CSV.
    P2table(P2Args),
}

/// Solution parameters shared by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct ParamArgs {
    /// Connection-matrix entry a, e.g. `2-3i`.
    #[arg(short = 'a', allow_hyphen_values = true, default_value = "1")]
    pub a: String,
    /// Connection-matrix entry b, e.g. `1+0.5i`.
    #[arg(short = 'b', allow_hyphen_values = true, default_value = "1")]
    pub b: String,
    /// Background amplitude B > 0.
    #[arg(short = 'B', default_value_t = 1.0)]
    pub big_b: f64,
}

#[derive(Args, Debug, Clone)]
pub struct PointArgs {
    /// Spatial coordinate.
    #[arg(short = 'X', allow_negative_numbers = true)]
    pub x: f64,
    /// Time coordinate.
    #[arg(short = 'T', allow_negative_numbers = true)]
    pub t: f64,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Collocation count replacing every per-regime default.
    #[arg(short = 'n')]
    pub n: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Jsonl,
}

#[derive(Args, Debug, Clone)]
pub struct GridArgs {
    /// First X node.
    #[arg(long, allow_negative_numbers = true)]
    pub x_min: f64,
    /// Last X node, inclusive.
    #[arg(long, allow_negative_numbers = true)]
    pub x_max: f64,
    /// X spacing, positive.
    #[arg(long)]
    pub dx: f64,
    /// First T node.
    #[arg(long, allow_negative_numbers = true)]
    pub t_min: f64,
    /// Last T node, inclusive.
    #[arg(long, allow_negative_numbers = true)]
    pub t_max: f64,
    /// T spacing, positive.
    #[arg(long)]
    pub dt: f64,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Collocation count replacing every per-regime default.
    #[arg(short = 'n')]
    pub n: Option<usize>,
    /// Output file; standard output when absent.
    #[arg(short = 'o', long)]
    pub out: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Worker threads; overrides `RWIO_WORKERS`.
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum AsymKind {
    LargeX,
    LargeT,
    Transition,
}

#[derive(Args, Debug, Clone)]
pub struct AsymArgs {
    /// Which asymptotic formula to evaluate.
    #[arg(long, value_enum)]
    pub kind: AsymKind,
    /// Spatial coordinate.
    #[arg(short = 'X', allow_negative_numbers = true)]
    pub x: f64,
    /// Time coordinate.
    #[arg(short = 'T', allow_negative_numbers = true)]
    pub t: f64,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Args, Debug, Clone)]
pub struct OracleArgs {
    /// Spatial coordinate, |X| <= 0.75.
    #[arg(short = 'X', allow_negative_numbers = true)]
    pub x: f64,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Args, Debug, Clone)]
pub struct P2Args {
    /// Parameter τ = |b|/|a|.
    #[arg(long, default_value_t = 1.0)]
    pub tau: f64,
    /// First y node.
    #[arg(long, allow_negative_numbers = true, default_value_t = TABLE_Y_MIN)]
    pub y_min: f64,
    /// Last y node, inclusive.
    #[arg(long, allow_negative_numbers = true, default_value_t = TABLE_Y_MAX)]
    pub y_max: f64,
    /// Spacing of the y nodes.
    #[arg(long, default_value_t = TABLE_STEP)]
    pub step: f64,
    /// Collocation count of the direct V solves.
    #[arg(short = 'n', default_value_t = P2_DEFAULT_N)]
    pub n: usize,
    /// Output file; standard output when absent.
    #[arg(short = 'o', long)]
    pub out: Option<PathBuf>,
    /// Worker threads; overrides `RWIO_WORKERS`.
    #[arg(long)]
    pub workers: Option<usize>,
}

/// A rectangular sweep of `Ψ`.
#[derive(Clone, Debug, PartialEq)]
pub struct GridJob {
    pub x_min: f64,
    pub x_max: f64,
    pub dx: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub dt: f64,
    pub a: C64,
    pub b: C64,
    pub big_b: f64,
    pub options: PsiOptions,
}

/// One grid node; `status` is `ok` or the error message.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointRecord {
    #[serde(rename = "X")]
    pub x: f64,
    #[serde(rename = "T")]
    pub t: f64,
    pub re: f64,
    pub im: f64,
    pub region: String,
    pub n: usize,
    pub residual: f64,
    pub status: String,
}

fn axis(lo: f64, hi: f64, d: f64, what: &'static str) -> Result<Vec<f64>> {
    if !(d > 0.0) || !(hi >= lo) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Domain { what, value: d });
    }
    let m = ((hi - lo) / d + 1e-9).floor() as usize;
    Ok((0..=m).map(|k| lo + k as f64 * d).collect())
}

impl GridJob {
    /// `X` nodes, inner loop of the row order.
    pub fn x_nodes(&self) -> Result<Vec<f64>> {
        axis(self.x_min, self.x_max, self.dx, "grid X range or spacing")
    }

    /// `T` nodes, outer loop of the row order.
    pub fn t_nodes(&self) -> Result<Vec<f64>> {
        axis(self.t_min, self.t_max, self.dt, "grid T range or spacing")
    }

    /// Evaluates every node in parallel; rows are `T`-major.
    pub fn run(&self) -> Result<Vec<PointRecord>> {
        use rayon::prelude::*;
        derive_params(self.a, self.b, self.big_b)?;
        let xs = self.x_nodes()?;
        let ts = self.t_nodes()?;
        let pts: Vec<(f64, f64)> = ts.iter().flat_map(|&t| xs.iter().map(move |&x| (x, t))).collect();
        Ok(pts.par_iter().map(|&(x, t)| self.point(x, t)).collect())
    }

    fn point(&self, x: f64, t: f64) -> PointRecord {
        match psi_eval(x, t, self.a, self.b, self.big_b, &self.options) {
            Ok(e) => PointRecord {
                x,
                t,
                re: e.value.re,
                im: e.value.im,
                region: e.region.to_string(),
                n: e.n,
                residual: e.report.max_jump_residual,
                status: "ok".into(),
            },
            Err(err) => PointRecord {
                x,
                t,
                re: f64::NAN,
                im: f64::NAN,
                region: String::new(),
                n: 0,
                residual: f64::NAN,
                status: err.to_string(),
            },
        }
    }
}

/// Decimal text with 17 significant digits, which round-trips every `f64`.
pub fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

/// Writes records as CSV with header `X,T,re,im,region,n,residual,status`.
pub fn write_csv<W: Write>(rows: &[PointRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["X", "T", "re", "im", "region", "n", "residual", "status"])?;
    for r in rows {
        w.write_record([
            fmt17(r.x),
            fmt17(r.t),
            fmt17(r.re),
            fmt17(r.im),
            r.region.clone(),
            r.n.to_string(),
            fmt17(r.residual),
            r.status.clone(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Reads records written by [`write_csv`].
pub fn read_csv<R: std::io::Read>(input: R) -> Result<Vec<PointRecord>> {
    let mut r = csv::Reader::from_reader(input);
    r.deserialize().map(|row| row.map_err(Error::from)).collect()
}

/// Writes one JSON object per line with the CSV fields.
pub fn write_jsonl<W: Write>(rows: &[PointRecord], mut out: W) -> Result<()> {
    for r in rows {
        let line = serde_json::to_string(r).map_err(|e| Error::Io(e.to_string()))?;
        writeln!(out, "{line}")?;
    }
    Ok(())
}

/// Worker count from the flag, then `RWIO_WORKERS`, then the machine default.
pub fn worker_count(flag: Option<usize>) -> Option<usize> {
    flag.or_else(|| std::env::var(WORKERS_ENV).ok().and_then(|s| s.trim().parse().ok()))
        .filter(|&n| n > 0)
}

fn with_pool<R: Send>(workers: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = worker_count(workers) {
        b = b.num_threads(n);
    }
    let pool = b.build().map_err(|e| Error::Io(e.to_string()))?;
    Ok(pool.install(f))
}

fn parse_params(p: &ParamArgs) -> Result<(C64, C64, f64)> {
    let a = parse_complex(&p.a)?;
    let b = parse_complex(&p.b)?;
    derive_params(a, b, p.big_b)?;
    Ok((a, b, p.big_b))
}

/// Formats `re ± im i` with 17 significant digits.
pub fn fmt_complex(z: C64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{} {} {}i", fmt17(z.re), sign, fmt17(z.im.abs()))
}

fn options(n: Option<usize>) -> PsiOptions {
    PsiOptions { n, ..PsiOptions::default() }
}

/// Largest reduced `|X|`, `|T|` at which `compare` still runs the undeformed solver.
pub const COMPARE_UNDEFORMED_MAX: f64 = 10.0;

/// Values of every applicable regime solver at `(X, T)`; `None` marks n/a.
pub fn compare_regimes(x: f64, t: f64, a: C64, b: C64, big_b: f64, n: Option<usize>) -> Result<Vec<(Region, Option<C64>)>> {
    let red = reduce(x, t, a, b, big_b)?;
    let k = PsiOptions::default().constants;
    let (xt, tt) = (red.x_tilde, red.t_tilde);
    let p = &red.effective_params;
    let regions = [Region::NoDeformation, Region::LargeX, Region::LargeT, Region::Painleve];
    Ok(regions
        .iter()
        .map(|&r| {
            let applicable = match r {
                Region::NoDeformation => xt <= COMPARE_UNDEFORMED_MAX && tt <= COMPARE_UNDEFORMED_MAX,
                Region::LargeX => xt > 0.0 && tt < v_c() * xt.powf(1.5),
                Region::LargeT => tt > 0.0 && xt < w_c() * tt.powf(2.0 / 3.0),
                Region::Painleve => xt > 0.0 && (tt * xt.powf(-1.5) / v_c() - 1.0).abs() <= 0.5,
            };
            let value = if applicable {
                solve_in_region(r, xt, tt, p, n.unwrap_or_else(|| k.n_for(r)))
                    .ok()
                    .map(|(v, _)| apply_reduction(v, &red))
            } else {
                None
            };
            (r, value)
        })
        .collect())
}

/// `Ψ` from an asymptotic formula, including the amplitude scaling by `B`.
pub fn asym_value(kind: AsymKind, x: f64, t: f64, a: C64, b: C64, big_b: f64) -> Result<C64> {
    let p = derive_params(a, b, 1.0)?;
    let (xs, ts) = (big_b * x, big_b * big_b * t);
    let v = match kind {
        AsymKind::LargeX => asym_large_x(xs, ts, &p)?,
        AsymKind::LargeT => asym_large_t(xs, ts, &p)?,
        AsymKind::Transition => asym_transition(xs, ts, &p, &tritronquee_v)?,
    };
    Ok(v * big_b)
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Psi(args) => {
            let (a, b, bb) = parse_params(&args.params)?;
            let e = psi_eval(args.x, args.t, a, b, bb, &options(args.n))?;
            writeln!(out, "{}", fmt_complex(e.value))?;
            writeln!(out, "region {} n {} residual {:e}", e.region, e.n, e.report.max_jump_residual)?;
            Ok(0)
        }
        Command::Grid(args) => {
            let (a, b, bb) = parse_params(&args.params)?;
            let job = GridJob {
                x_min: args.x_min,
                x_max: args.x_max,
                dx: args.dx,
                t_min: args.t_min,
                t_max: args.t_max,
                dt: args.dt,
                a,
                b,
                big_b: bb,
                options: options(args.n),
            };
            for nodes in [job.x_nodes(), job.t_nodes()] {
                nodes.map_err(|e| Error::InvalidArgument(e.to_string()))?;
            }
            let rows = with_pool(args.workers, || job.run())??;
            let failed = rows.iter().filter(|r| r.status != "ok").count();
            match &args.out {
                Some(path) => {
                    let f = std::io::BufWriter::new(std::fs::File::create(path)?);
                    match args.format {
                        Format::Csv => write_csv(&rows, f)?,
                        Format::Jsonl => write_jsonl(&rows, f)?,
                    }
                    writeln!(out, "wrote {} rows to {} ({failed} failed)", rows.len(), path.display())?;
                }
                None => match args.format {
                    Format::Csv => write_csv(&rows, &mut *out)?,
                    Format::Jsonl => write_jsonl(&rows, &mut *out)?,
                },
            }
            Ok(if failed > 0 { 1 } else { 0 })
        }
        Command::Compare(args) => {
            let (a, b, bb) = parse_params(&args.params)?;
            let vals = compare_regimes(args.x, args.t, a, b, bb, args.n)?;
            for (r, v) in &vals {
                match v {
                    Some(z) => writeln!(out, "{r:<14} {}", fmt_complex(*z))?,
                    None => writeln!(out, "{r:<14} n/a")?,
                }
            }
            for (i, (ri, vi)) in vals.iter().enumerate() {
                for (rj, vj) in vals.iter().skip(i + 1) {
                    if let (Some(u), Some(w)) = (vi, vj) {
                        writeln!(out, "|{ri} - {rj}| = {:e}", (u - w).norm())?;
                    }
                }
            }
            Ok(0)
        }
        Command::Asym(args) => {
            let (a, b, bb) = parse_params(&args.params)?;
            let v = asym_value(args.kind, args.x, args.t, a, b, bb)?;
            writeln!(out, "{}", fmt_complex(v))?;
            Ok(0)
        }
        Command::Oracle(args) => {
            let (a, b, bb) = parse_params(&args.params)?;
            let p = derive_params(a, b, 1.0)?;
            let o = psi_t0_oracle(bb * args.x, &p)? * bb;
            let s = psi_eval(args.x, 0.0, a, b, bb, &PsiOptions::default())?.value;
            writeln!(out, "fredholm {}", fmt_complex(o))?;
            writeln!(out, "solver   {}", fmt_complex(s))?;
            writeln!(out, "|diff| = {:e}", (o - s).norm())?;
            Ok(0)
        }
        Command::P2table(args) => {
            let table = with_pool(args.workers, || build_table(args.tau, args.y_min, args.y_max, args.step, args.n))??;
            match &args.out {
                Some(path) => {
                    table.save(path)?;
                    writeln!(out, "wrote {} rows to {}", table.len(), path.display())?;
                }
                None => table.write_csv(&mut *out)?,
            }
            Ok(0)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e @ (Error::Parse(_) | Error::BadAmplitude(_) | Error::ZeroParameters | Error::InvalidArgument(_))) => {
            let _ = writeln!(err, "error: {e}");
            let _ = writeln!(err, "{}", Cli::command().render_usage());
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

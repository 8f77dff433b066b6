//! Increasing tritronquée solutions of Painlevé-II through their Riemann–Hilbert
//! problem in the variable `ζ`, and tables of `V(y; τ)` for the transitional
//! asymptotics.
//!
//! `U(ζ)` is analytic off five rays from the origin: triangular jumps carrying
//! `e^{±iΘ}`, `Θ = ζ³ + yζ`, on `arg ζ = ±π/2, ±5π/6` and the constant
//! `diag(𝔞², 𝔞^{−2})` on the negative axis, with `U ζ^{ipσ₃} → I`. The solver
//! works with `W = U` inside the unit 12-gon and `W = U ζ^{ipσ₃}` outside.

use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::rhp::{first_moment, jump_fn, solve_rhp, Arc, Contour, RHProblem, SolveReport};
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::path::Path;

/// Default collocation count on each ray.
pub const DEFAULT_N: usize = 40;
/// Largest radius at which a ray is truncated.
pub const RAY_RADIUS: f64 = 6.0;
/// Triangular entries below this modulus are treated as zero.
pub const RAY_TOL: f64 = 1e-16;
/// Largest `|y|` the direct solver accepts; beyond it [`tritronquee_v`] continues along the ODE.
pub const DIRECT_Y_MAX: f64 = 4.0;

/// `α = 1/2 + ip`.
pub fn alpha(p: f64) -> C64 {
    C64::new(0.5, p)
}

/// `p = (1/2π) ln(1 + τ²)`.
pub fn p_of_tau(tau: f64) -> f64 {
    (1.0 + tau * tau).ln() / (2.0 * PI)
}

/// `(2/3)^{1/3}`, the scale linking `y` to the Painlevé-II variable.
pub fn c_scale() -> f64 {
    (2.0f64 / 3.0).cbrt()
}

/// Leading behaviour `−(y/6)^α` for large positive `y`.
pub fn v_asymptotic(y: f64, tau: f64) -> C64 {
    -C64::new(y / 6.0, 0.0).powc(alpha(p_of_tau(tau)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum RayKind {
    /// `arg ζ = π/2`: `[[1,0],[τe^{−iΘ},1]]`.
    Up,
    /// `arg ζ = 5π/6`: `[[1,−𝔞𝔟e^{iΘ}],[0,1]]`.
    UpLeft,
    /// `arg ζ = −5π/6`: `[[1,0],[−𝔞𝔟e^{−iΘ},1]]`.
    DownLeft,
    /// `arg ζ = −π/2`: `[[1,τe^{iΘ}],[0,1]]`.
    Down,
}

impl RayKind {
    fn angle(self) -> f64 {
        match self {
            RayKind::Up => PI / 2.0,
            RayKind::UpLeft => 5.0 * PI / 6.0,
            RayKind::DownLeft => -5.0 * PI / 6.0,
            RayKind::Down => -PI / 2.0,
        }
    }

    /// Vertex index on the 12-gon with vertices `e^{ikπ/6}`.
    fn vertex(self) -> usize {
        match self {
            RayKind::Up => 3,
            RayKind::UpLeft => 5,
            RayKind::DownLeft => 7,
            RayKind::Down => 9,
        }
    }

    fn jump(self, z: C64, y: f64, tau: f64) -> Mat2 {
        let theta = z * z * z + y * z;
        let ab = tau / (1.0 + tau * tau);
        let i = C64::i();
        match self {
            RayKind::Up => Mat2::lower(tau * (-i * theta).exp()),
            RayKind::UpLeft => Mat2::upper(-ab * (i * theta).exp()),
            RayKind::DownLeft => Mat2::lower(-ab * (-i * theta).exp()),
            RayKind::Down => Mat2::upper(tau * (i * theta).exp()),
        }
    }

    const ALL: [RayKind; 4] = [RayKind::Up, RayKind::UpLeft, RayKind::DownLeft, RayKind::Down];
}

/// `ln ζ` on the branch continuous along the segment through `toward`.
fn log_near(z: C64, toward: C64) -> C64 {
    C64::new(z.norm().ln(), (z / toward).arg() + toward.arg())
}

fn polygon_vertex(k: usize) -> C64 {
    C64::from_polar(1.0, k as f64 * PI / 6.0)
}

/// Radius beyond which the off-diagonal entry of a ray jump stays below [`RAY_TOL`].
fn cutoff_radius(kind: RayKind, y: f64, tau: f64, p: f64) -> f64 {
    let dir = C64::from_polar(1.0, kind.angle());
    let steps = 500;
    let mut last_big = 1.0;
    for k in 0..=steps {
        let r = 1.0 + (RAY_RADIUS - 1.0) * k as f64 / steps as f64;
        let z = dir * r;
        let m = kind.jump(z, y, tau).conj_phase(p * z.ln());
        let off = m[(0, 1)].norm().max(m[(1, 0)].norm());
        if !(off < RAY_TOL) {
            last_big = r;
        }
    }
    (last_big + 0.25).min(RAY_RADIUS)
}

/// The `W` problem for `(y, τ)` with `n` nodes per ray.
pub fn tritronquee_problem(y: f64, tau: f64, n: usize) -> Result<RHProblem> {
    if !(tau > 0.0 && tau.is_finite()) {
        return Err(Error::Domain { what: "tau must be positive", value: tau });
    }
    if !y.is_finite() {
        return Err(Error::Domain { what: "y must be finite", value: y });
    }
    let p = p_of_tau(tau);
    let a2 = 1.0 / (1.0 + tau * tau);
    let n_edge = (n / 2).max(12);
    let mut arcs = Vec::new();
    let mut jumps = Vec::new();
    for kind in RayKind::ALL {
        let v = polygon_vertex(kind.vertex());
        arcs.push(Arc::new(C64::new(0.0, 0.0), v, n, format!("in{:?}", kind)));
        jumps.push(jump_fn(move |z| kind.jump(z, y, tau)));
        let r = cutoff_radius(kind, y, tau, p);
        if r > 1.0 + 1e-9 {
            let end = v * r;
            let mid = (v + end) * 0.5;
            arcs.push(Arc::new(v, end, n, format!("out{:?}", kind)));
            jumps.push(jump_fn(move |z| kind.jump(z, y, tau).conj_phase(p * log_near(z, mid))));
        }
    }
    arcs.push(Arc::new(C64::new(0.0, 0.0), C64::new(-1.0, 0.0), n, "band"));
    jumps.push(jump_fn(move |_| Mat2::diag(C64::new(a2, 0.0), C64::new(1.0 / a2, 0.0))));
    for k in 0..12 {
        let (s, e) = (polygon_vertex(k), polygon_vertex(k + 1));
        let mid = (s + e) * 0.5;
        arcs.push(Arc::new(s, e, n_edge, format!("gon{k}")));
        jumps.push(jump_fn(move |z| {
            let w = -p * log_near(z, mid);
            Mat2::diag((C64::i() * w).exp(), (-C64::i() * w).exp())
        }));
    }
    RHProblem::new(Contour::new(arcs)?, jumps)
}

/// Solution data of one tritronquée solve.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TritronqueeSolve {
    pub y: f64,
    pub tau: f64,
    /// `V(y; τ) = lim ζ W₂₁`.
    pub v: C64,
    /// `lim ζ W₁₂`, equal to `−V̄` for real `y`.
    pub w12: C64,
    pub report: SolveReport,
}

/// Solves the Riemann–Hilbert problem at `y`; accurate for `|y| ≲` [`DIRECT_Y_MAX`].
pub fn solve_tritronquee(y: f64, tau: f64, n: usize) -> Result<TritronqueeSolve> {
    let problem = tritronquee_problem(y, tau, n)?;
    let (d, report) = solve_rhp(&problem)?;
    if !(report.max_jump_residual < 1e-6) {
        return Err(Error::Regime(format!(
            "tritronquée solve at y = {y} did not converge (jump residual {:e})",
            report.max_jump_residual
        )));
    }
    let m1 = first_moment(&d);
    Ok(TritronqueeSolve { y, tau, v: m1[(1, 0)], w12: m1[(0, 1)], report })
}

/// `V(y; τ)` from the direct solver, with `n` nodes per ray.
pub fn v_direct(y: f64, tau: f64, n: usize) -> Result<C64> {
    Ok(solve_tritronquee(y, tau, n)?.v)
}

/// Right-hand side of the first-order system in `y` for `(U, U_x, ln V)`,
/// where `U(x)` solves `U'' = xU + 2U³ − α` at `x = −(2/3)^{1/3} y`.
fn p2_rhs(y: f64, s: [C64; 3], al: C64) -> [C64; 3] {
    let c = c_scale();
    let x = -c * y;
    let (u, ux) = (s[0], s[1]);
    [-c * ux, -c * (x * u + 2.0 * u * u * u - al), -c * u]
}

/// Step used when continuing `V` along the Painlevé-II equation.
pub const ODE_STEP: f64 = 1e-3;

/// `V(y; τ)` for any `y ≥ −`[`DIRECT_Y_MAX`]. Beyond the direct band the value
/// is continued from `y = DIRECT_Y_MAX` with RK4 on the Painlevé-II equation,
/// which is oscillatory, hence stable, in that direction.
pub fn tritronquee_v(y: f64, tau: f64) -> Result<C64> {
    if y.abs() <= DIRECT_Y_MAX {
        return v_direct(y, tau, DEFAULT_N);
    }
    if y < 0.0 {
        return Err(Error::Domain { what: "tritronquée continuation requires y > -4", value: y });
    }
    continue_v(DIRECT_Y_MAX, y, tau, ODE_STEP)
}

/// Continues `V` from a directly solved start `y0` to `y ≥ y0` with RK4 steps of
/// at most `step`; initial `U`, `U_x` come from a five-point stencil of spacing `0.01`.
pub fn continue_v(y0: f64, y: f64, tau: f64, step: f64) -> Result<C64> {
    if !(y >= y0) || !(step > 0.0) {
        return Err(Error::Domain { what: "continuation needs y >= y0 and step > 0", value: y });
    }
    let h = 0.01;
    let mut f = [C64::new(0.0, 0.0); 5];
    for (k, slot) in f.iter_mut().enumerate() {
        *slot = v_direct(y0 + (k as f64 - 2.0) * h, tau, DEFAULT_N)?;
    }
    let d1 = (f[0] - f[1] * 8.0 + f[3] * 8.0 - f[4]) / (12.0 * h);
    let d2 = (-f[0] + f[1] * 16.0 - f[2] * 30.0 + f[3] * 16.0 - f[4]) / (12.0 * h * h);
    let c = c_scale();
    let g = d1 / f[2];
    let u = -g / c;
    let uy = -(d2 / f[2] - g * g) / c;
    let mut s = [u, -uy / c, f[2].ln()];
    let al = alpha(p_of_tau(tau));
    let steps = (((y - y0) / step).ceil() as usize).max(1);
    let dy = (y - y0) / steps as f64;
    let mut yy = y0;
    let add = |s: [C64; 3], k: [C64; 3], w: f64| [s[0] + k[0] * w, s[1] + k[1] * w, s[2] + k[2] * w];
    for _ in 0..steps {
        let k1 = p2_rhs(yy, s, al);
        let k2 = p2_rhs(yy + dy / 2.0, add(s, k1, dy / 2.0), al);
        let k3 = p2_rhs(yy + dy / 2.0, add(s, k2, dy / 2.0), al);
        let k4 = p2_rhs(yy + dy, add(s, k3, dy), al);
        for i in 0..3 {
            s[i] += (k1[i] + k2[i] * 2.0 + k3[i] * 2.0 + k4[i]) * (dy / 6.0);
        }
        yy += dy;
    }
    Ok(s[2].exp())
}

/// `V(·; τ)` sampled on a uniform mesh and interpolated by local cubics.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TritronqueeTable {
    pub tau: f64,
    pub y: Vec<f64>,
    pub v: Vec<C64>,
}

/// Default table range and mesh.
pub const TABLE_Y_MIN: f64 = -1.0;
pub const TABLE_Y_MAX: f64 = 1.0;
pub const TABLE_STEP: f64 = 0.005;

#[derive(Serialize, Deserialize)]
struct TableRow {
    y: f64,
    re: f64,
    im: f64,
}

/// Samples `V(y; τ)` on `[y_min, y_max]` with spacing close to `step`, in parallel.
pub fn build_table(tau: f64, y_min: f64, y_max: f64, step: f64, n: usize) -> Result<TritronqueeTable> {
    use rayon::prelude::*;
    if !(y_max > y_min) || !(step > 0.0) {
        return Err(Error::Domain { what: "table range must be non-empty with positive step", value: step });
    }
    let m = ((y_max - y_min) / step).round().max(3.0) as usize;
    let y: Vec<f64> = (0..=m).map(|k| y_min + (y_max - y_min) * k as f64 / m as f64).collect();
    let v = y.par_iter().map(|&yy| v_direct(yy, tau, n)).collect::<Result<Vec<_>>>()?;
    if let Some(k) = v.iter().position(|z| !(z.norm() > 0.0)) {
        return Err(Error::Regime(format!("V vanishes at y = {}", y[k])));
    }
    Ok(TritronqueeTable { tau, y, v })
}

impl TritronqueeTable {
    /// Table with the default range and mesh.
    pub fn default_for(tau: f64) -> Result<Self> {
        build_table(tau, TABLE_Y_MIN, TABLE_Y_MAX, TABLE_STEP, DEFAULT_N)
    }

    pub fn len(&self) -> usize {
        self.y.len()
    }

    pub fn is_empty(&self) -> bool {
        self.y.is_empty()
    }

    /// Cubic interpolation through the four nearest samples.
    pub fn eval(&self, y: f64) -> Result<C64> {
        let m = self.y.len();
        let (lo, hi) = (self.y[0], self.y[m - 1]);
        if !(y >= lo - 1e-12 && y <= hi + 1e-12) || m < 4 {
            return Err(Error::Domain { what: "y outside the tritronquée table", value: y });
        }
        let h = (hi - lo) / (m - 1) as f64;
        let k = (((y - lo) / h).floor() as isize - 1).clamp(0, m as isize - 4) as usize;
        let mut acc = C64::new(0.0, 0.0);
        for i in k..k + 4 {
            let mut w = 1.0;
            for j in k..k + 4 {
                if j != i {
                    w *= (y - self.y[j]) / (self.y[i] - self.y[j]);
                }
            }
            acc += self.v[i] * w;
        }
        Ok(acc)
    }

    /// Largest residual of `U'' = xU + 2U³ − α` over interior samples, with
    /// `U = −(ln V)_y / c` and derivatives from five-point stencils.
    pub fn max_ode_residual(&self) -> Result<f64> {
        let m = self.y.len();
        if m < 5 {
            return Err(Error::Domain { what: "ODE residual needs at least 5 samples", value: m as f64 });
        }
        let h = (self.y[m - 1] - self.y[0]) / (m - 1) as f64;
        let c = c_scale();
        let al = alpha(p_of_tau(self.tau));
        let mut worst: f64 = 0.0;
        for k in 2..m - 2 {
            // ln V relative to the centre sample, continuous across the stencil.
            let g: Vec<C64> = (k - 2..=k + 2).map(|j| (self.v[j] / self.v[k]).ln()).collect();
            let g1 = (g[0] - g[1] * 8.0 + g[3] * 8.0 - g[4]) / (12.0 * h);
            let g3 = (-g[0] + g[1] * 2.0 - g[3] * 2.0 + g[4]) / (2.0 * h * h * h);
            let x = -c * self.y[k];
            let u = -g1 / c;
            let uxx = -g3 / (c * c * c);
            worst = worst.max((uxx - (x * u + 2.0 * u * u * u - al)).norm());
        }
        Ok(worst)
    }

    /// Writes `y,re,im` rows with 17 significant digits.
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["y", "re", "im"])?;
        for (y, v) in self.y.iter().zip(&self.v) {
            w.write_record([format!("{y:.16e}"), format!("{:.16e}", v.re), format!("{:.16e}", v.im)])?;
        }
        w.flush()?;
        Ok(())
    }

    /// Reads a table written by [`write_csv`](Self::write_csv); the mesh must be uniform.
    pub fn read_csv<R: std::io::Read>(tau: f64, input: R) -> Result<Self> {
        let mut r = csv::Reader::from_reader(input);
        let mut y = Vec::new();
        let mut v = Vec::new();
        for row in r.deserialize::<TableRow>() {
            let row = row?;
            y.push(row.y);
            v.push(C64::new(row.re, row.im));
        }
        if y.len() < 4 {
            return Err(Error::Parse("tritronquée table needs at least 4 rows".into()));
        }
        let h = (y[y.len() - 1] - y[0]) / (y.len() - 1) as f64;
        if y.windows(2).any(|w| ((w[1] - w[0]) - h).abs() > 1e-9 * h.abs().max(1.0)) {
            return Err(Error::Parse("tritronquée table mesh is not uniform".into()));
        }
        Ok(TritronqueeTable { tau, y, v })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        self.write_csv(std::fs::File::create(path)?)
    }

    pub fn load(tau: f64, path: &Path) -> Result<Self> {
        Self::read_csv(tau, std::fs::File::open(path)?)
    }
}

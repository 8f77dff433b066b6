//! Large-T solver built on the `g`-function of the spectral curve
//! `R(Z)² = (Z − Z0)(Z − Z0*)`.
//!
//! With `Λ = T^{-1/3} Z`, `h = g + θ` and `τ = T^{1/3}`, every lens arc carries a
//! triangular matrix with a decaying factor `e^{±2iτh}`, the band `[Z1, Z2]`
//! carries `𝔞^{-2σ₃}`, the arcs `Σ±` joining `Z1` to `Z0`, `Z0*` carry constant
//! off-diagonal twists, and two polygonal disks around `Z0`, `Z0*` carry
//! `K e^{iτhσ₃}` with a constant `K` per adjacent sector. Inside the disks the
//! unknown is analytic. Near `Z0` the inner lenses of `Γ` and `Σ` merge into a
//! single collapsed arc before reaching the disk.
//!
//! The cut of `R` lies on the `Σ` polyline, so `h₊ + h₋ = κ(w)` there. `R` is
//! evaluated with whichever of the vertical-cut and left-cut realizations has its
//! own cut farther from the point, then sign-corrected.

use super::undeformed::zero_report;
use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::params::ParamSet;
use crate::phases::{r_num, spectral_points_t, w_c, Branch, LargeTGeometry};
use crate::rhp::{first_moment, jump_fn, solve_rhp, Arc, Contour, RHProblem, SolveReport};
use num_complex::Complex64 as C64;
use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, PI};
use std::sync::Arc as Shared;

/// Band of `w` below `w_c` refused by this solver.
pub fn eps_w() -> f64 {
    0.02 * w_c()
}

/// `c₀` in the disk radius `δ₀ = c₀ T^{-2/9}`, chosen so that `δ₀(8) = 0.25`.
pub fn disk_c0() -> f64 {
    0.25 * 8f64.powf(2.0 / 9.0)
}

/// Sector of a disk boundary side, named after the region outside the disk it faces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiskFace {
    /// Unbounded region, `K = I`.
    Outside,
    /// Either side of `Γ` between its two lenses.
    Gamma,
    /// Between `Σ` and its outer lens.
    SigmaLeft,
    /// Between `Σ` and the collapsed arc.
    SigmaRight,
}

/// Role of an arc of the large-T contour.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TArc {
    GammaOuterUpper,
    GammaInnerUpper,
    SigmaOuterUpper,
    SigmaInnerUpper,
    CollapsedUpper,
    SigmaUpper,
    Band,
    GammaOuterLower,
    GammaInnerLower,
    SigmaOuterLower,
    SigmaInnerLower,
    CollapsedLower,
    SigmaLower,
    DiskUpper(DiskFace),
    DiskLower(DiskFace),
}

/// Sign-corrected `R(Z; w)` with its cut on the `Σ` polyline.
#[derive(Clone, Debug)]
pub struct SpectralBranch {
    pub geo: LargeTGeometry,
    /// Upper half of `Σ` from `Z1` to `Z0`.
    pub sigma: Vec<C64>,
    polygon: Vec<C64>,
}

impl SpectralBranch {
    pub fn new(geo: LargeTGeometry, sigma: Vec<C64>) -> Self {
        // Σ from Z0* up to Z0, closed by the vertical segment back to Z0*.
        let mut polygon: Vec<C64> = sigma.iter().rev().map(|z| z.conj()).collect();
        polygon.extend(sigma.iter().skip(1).copied());
        SpectralBranch { geo, sigma, polygon }
    }

    /// Whether `z` lies between `Σ` and the segment `[Z0*, Z0]`.
    pub fn between_cuts(&self, z: C64) -> bool {
        point_in_polygon(z, &self.polygon)
    }

    /// `R(Z)` with `R ~ Z` at infinity and the cut on `Σ`.
    pub fn r(&self, z: C64) -> C64 {
        let z0 = self.geo.z0;
        let v = z0.im;
        let d_up = seg_dist(z, z0.conj(), z0);
        let ray = |y: f64| {
            if z.re <= z0.re {
                (z.im - y).abs()
            } else {
                (z - C64::new(z0.re, y)).norm()
            }
        };
        let d_left = ray(v).min(ray(-v));
        let inside = self.between_cuts(z);
        if d_up >= d_left {
            let r = r_num(z, z0, Branch::Up);
            if inside {
                -r
            } else {
                r
            }
        } else {
            let r = r_num(z, z0, Branch::Left);
            let left_of_sigma = z.im.abs() < v && z.re < z0.re && !inside;
            if left_of_sigma {
                -r
            } else {
                r
            }
        }
    }

    /// `h(Z) = R³/Z − 3·2^{-1/3} − w²/6`.
    pub fn h(&self, z: C64) -> C64 {
        self.h_from_r(z, self.r(z))
    }

    /// `h` at `z` on the branch seen from `toward`, for points on the cut.
    pub fn h_toward(&self, z: C64, toward: C64) -> C64 {
        let probe = self.r(z + (toward - z) * 1e-6);
        let r = r_num(z, self.geo.z0, Branch::Up);
        let r = if (r - probe).norm() <= (r + probe).norm() { r } else { -r };
        self.h_from_r(z, r)
    }

    fn h_from_r(&self, z: C64, r: C64) -> C64 {
        r * r * r / z - 3.0 * 2f64.powf(-1.0 / 3.0) - self.geo.w * self.geo.w / 6.0
    }
}

fn seg_dist(z: C64, a: C64, b: C64) -> f64 {
    let d = b - a;
    let t = ((z - a) * d.conj()).re / d.norm_sqr();
    (a + d * t.clamp(0.0, 1.0) - z).norm()
}

fn point_in_polygon(z: C64, poly: &[C64]) -> bool {
    let mut inside = false;
    let m = poly.len();
    for i in 0..m {
        let (a, b) = (poly[i], poly[(i + 1) % m]);
        if (a.im > z.im) != (b.im > z.im) {
            let x = a.re + (z.im - a.im) * (b.re - a.re) / (b.im - a.im);
            if z.re < x {
                inside = !inside;
            }
        }
    }
    inside
}

/// `h` and `h'` on the vertical-cut branch, used to trace level curves.
fn h_up(z: C64, geo: &LargeTGeometry) -> (C64, C64) {
    let r = r_num(z, geo.z0, Branch::Up);
    let r3 = r * r * r;
    let h = r3 / z - 3.0 * 2f64.powf(-1.0 / 3.0) - geo.w * geo.w / 6.0;
    let dh = 3.0 * r * (z - geo.z0.re) / z - r3 / (z * z);
    (h, dh)
}

/// Follows `Im h = 0` from `start` in the initial direction `dir` until `stop`
/// holds, by predictor steps along the level curve and Newton corrections
/// across it.
fn trace_level(start: C64, dir: C64, geo: &LargeTGeometry, step: f64, stop: impl Fn(C64) -> bool) -> Result<Vec<C64>> {
    let mut pts = vec![start];
    let mut z = start;
    let mut t = dir / dir.norm();
    for _ in 0..20_000 {
        let mut zn = z + t * step;
        for _ in 0..30 {
            let (h, dh) = h_up(zn, geo);
            // Gradient of Im h as a complex number is i·conj(h').
            let grad = C64::new(0.0, 1.0) * dh.conj();
            let dz = grad * (h.im / grad.norm_sqr());
            zn -= dz;
            if dz.norm() < 1e-15 {
                break;
            }
        }
        let (_, dh) = h_up(zn, geo);
        let mut tn = dh.conj();
        tn /= tn.norm();
        if (tn * t.conj()).re < 0.0 {
            tn = -tn;
        }
        t = tn;
        pts.push(zn);
        z = zn;
        if stop(z) {
            return Ok(pts);
        }
    }
    Err(Error::Regime("level curve of Im h did not reach its target".into()))
}

fn arc_length_point(pts: &[C64], frac: f64) -> (C64, C64) {
    let total: f64 = pts.windows(2).map(|w| (w[1] - w[0]).norm()).sum();
    let target = frac * total;
    let mut acc = 0.0;
    for w in pts.windows(2) {
        let l = (w[1] - w[0]).norm();
        if acc + l >= target {
            let s = (target - acc) / l;
            return (w[0] + (w[1] - w[0]) * s, (w[1] - w[0]) / l);
        }
        acc += l;
    }
    let k = pts.len();
    (pts[k - 1], (pts[k - 1] - pts[k - 2]) / (pts[k - 1] - pts[k - 2]).norm())
}

/// Geometry of the upper half of the large-T contour; the lower half is its
/// Schwarz reflection.
#[derive(Clone, Debug)]
pub struct LargeTContour {
    pub branch: SpectralBranch,
    /// Radius of the disk polygons.
    pub delta: f64,
    /// `Σ+` from `Z1` to the disk.
    pub sigma: Vec<C64>,
    /// `C_{Γ,L}^+` from the disk to `Z2`.
    pub gamma_outer: Vec<C64>,
    /// `C_{Γ,R}^+` from the collapse point to `Z2`.
    pub gamma_inner: Vec<C64>,
    /// `C_{Σ,L}^+` from `Z1` to the disk.
    pub sigma_outer: Vec<C64>,
    /// `C_{Σ,R}^+` from `Z1` to the collapse point.
    pub sigma_inner: Vec<C64>,
    /// Collapsed arc from the collapse point to the disk.
    pub collapsed: [C64; 2],
    /// Disk polygon around `Z0`, clockwise, each vertex paired with the sector of
    /// the side that starts there.
    pub disk: Vec<(C64, DiskFace)>,
}

impl LargeTContour {
    /// The `w`-adaptive contour for time `t`.
    pub fn new(t: f64, w: f64) -> Result<Self> {
        let geo = spectral_points_t(w)?;
        let (z0, z1, z2) = (geo.z0, C64::new(geo.z1, 0.0), C64::new(geo.z2, 0.0));
        let sep = (z0 - z1).norm().min(z0.im);
        let delta = (disk_c0() * t.powf(-2.0 / 9.0)).min(0.3 * sep);
        let step = 0.01 * sep.min(1.0);

        // Σ leaves Z1 vertically and ends at Z0.
        let trace_s = trace_level(z1, C64::new(0.0, 1.0), &geo, step, |z| (z - z0).norm() < delta)?;
        let k = trace_s.len();
        let (pa, pb) = (trace_s[k - 2], trace_s[k - 1]);
        // Crossing of the last step with the disk circle.
        let (da, db) = ((pa - z0).norm(), (pb - z0).norm());
        let cross = pa + (pb - pa) * ((da - delta) / (da - db));
        let a_sigma_trace = (cross - z0).arg();

        // Local structure h − h(Z0) ∝ (Z − Z0)^{3/2}: three level directions 2π/3 apart.
        let c = C64::new(0.0, 2.0 * z0.im).powf(1.5) / z0;
        let dirs: Vec<f64> = (0..3).map(|k| 2.0 / 3.0 * (k as f64 * PI - c.arg())).collect();
        let a_sigma_loc = *dirs
            .iter()
            .min_by(|a, b| ang_dist(**a, a_sigma_trace).total_cmp(&ang_dist(**b, a_sigma_trace)))
            .unwrap();
        let a_gamma = a_sigma_loc + 2.0 * FRAC_PI_3;
        let a_gamma_l = a_gamma + FRAC_PI_3;
        let a_sigma_l = a_gamma + PI;
        let a_int = a_gamma - FRAC_PI_3;
        let a_sigma = a_sigma_trace;

        let on_disk = |a: f64| z0 + C64::from_polar(delta, a);
        let sigma = vec![
            z1,
            arc_length_point(&trace_s, 1.0 / 3.0).0,
            arc_length_point(&trace_s, 2.0 / 3.0).0,
            on_disk(a_sigma),
        ];
        let mut sigma_full = sigma.clone();
        sigma_full.push(z0);

        // Γ leaves Z2 vertically and ends at Z0.
        let trace_g = trace_level(z2, C64::new(0.0, 1.0), &geo, step, |z| (z - z0).norm() < delta)?;

        let rho1 = (0.35 * (z0 - z1).norm()).min(0.4);
        let rho2 = (0.3 * (geo.z2 - geo.z1)).min(0.5);
        let p_collapse = z0 + C64::from_polar(2.0 * delta, a_int);
        let sigma_inner = vec![z1, z1 + C64::from_polar(rho1, FRAC_PI_4), p_collapse];
        let gamma_inner = vec![p_collapse, z2 + C64::from_polar(rho2, 3.0 * FRAC_PI_4), z2];
        let collapsed = [p_collapse, on_disk(a_int)];

        let d_out = (0.6 * z0.im).min(0.5);
        let outward = |frac: f64| {
            let (p, tan) = arc_length_point(&trace_g, frac);
            p + C64::new(0.0, -1.0) * tan * d_out
        };
        let gamma_outer = vec![
            on_disk(a_gamma_l),
            outward(0.7),
            outward(0.35),
            z2 + C64::from_polar(rho2, FRAC_PI_4),
            z2,
        ];

        let l1 = z1 + C64::from_polar(rho1, 3.0 * FRAC_PI_4);
        let min_sigma_x = trace_s.iter().map(|z| z.re).fold(f64::INFINITY, f64::min);
        let hit_sl = on_disk(a_sigma_l);
        let x_side = l1.re.min(min_sigma_x - 0.5 * rho1);
        let mut sigma_outer = vec![z1, l1];
        if x_side < hit_sl.re {
            sigma_outer.push(C64::new(x_side, hit_sl.im.max(l1.im)));
        }
        sigma_outer.push(hit_sl);

        // Disk vertices: the four arc ends plus fillers, listed clockwise.
        let hits = [a_int, a_gamma_l, a_sigma_l, a_sigma];
        let base = a_int;
        let mut angles: Vec<f64> = Vec::new();
        let mut offs: Vec<f64> = hits.iter().map(|a| (a - base).rem_euclid(2.0 * PI)).collect();
        offs.sort_by(f64::total_cmp);
        for i in 0..offs.len() {
            let lo = offs[i];
            let hi = if i + 1 < offs.len() { offs[i + 1] } else { 2.0 * PI };
            let pieces = ((hi - lo) / FRAC_PI_4).ceil().max(1.0) as usize;
            for j in 0..pieces {
                angles.push(lo + (hi - lo) * j as f64 / pieces as f64);
            }
        }
        let d_gl = (a_gamma_l - base).rem_euclid(2.0 * PI);
        let d_sl = (a_sigma_l - base).rem_euclid(2.0 * PI);
        let d_s = (a_sigma - base).rem_euclid(2.0 * PI);
        let face = |off: f64| {
            if off < d_gl {
                DiskFace::Gamma
            } else if off < d_sl {
                DiskFace::Outside
            } else if off < d_s {
                DiskFace::SigmaLeft
            } else {
                DiskFace::SigmaRight
            }
        };
        // Counterclockwise list of (vertex, face of the side to the next vertex), then reversed.
        let m = angles.len();
        let ccw: Vec<(C64, f64)> = angles.iter().map(|&o| (on_disk(base + o), o)).collect();
        let mut disk = Vec::with_capacity(m);
        for i in (0..m).rev() {
            // Clockwise side from vertex i to vertex i−1 covers the offsets [o_{i−1}, o_i].
            let prev = if i == 0 { ccw[m - 1].1 - 2.0 * PI } else { ccw[i - 1].1 };
            let mid = (0.5 * (prev + ccw[i].1)).rem_euclid(2.0 * PI);
            disk.push((ccw[i].0, face(mid)));
        }

        let branch = SpectralBranch::new(geo, sigma_full);
        Ok(LargeTContour {
            branch,
            delta,
            sigma,
            gamma_outer,
            gamma_inner,
            sigma_outer,
            sigma_inner,
            collapsed,
            disk,
        })
    }

    /// Oriented arcs with their roles. Arcs ending at `Z1` or `Z2` get `n` nodes,
    /// the others fewer.
    pub fn arcs(&self, n: usize) -> Vec<(Arc, TArc)> {
        let n_mid = (3 * n / 4).max(16).min(n);
        let n_disk = (n / 3).max(12).min(n);
        let n_sigma = (n / 2).max(16).min(n);
        let z1 = C64::new(self.branch.geo.z1, 0.0);
        let z2 = C64::new(self.branch.geo.z2, 0.0);
        let touches = |a: C64, b: C64| [a, b].iter().any(|p| (*p - z1).norm() < 1e-14 || (*p - z2).norm() < 1e-14);
        let mut upper: Vec<(Arc, TArc)> = Vec::new();
        let mut chain = |pts: &[C64], kind: TArc, label: &str, nn: usize| {
            for (i, w) in pts.windows(2).enumerate() {
                let k = if touches(w[0], w[1]) { n } else { nn };
                upper.push((Arc::new(w[0], w[1], k, format!("{label}{i}")), kind));
            }
        };
        chain(&self.gamma_outer, TArc::GammaOuterUpper, "GL+", n_mid);
        chain(&self.gamma_inner, TArc::GammaInnerUpper, "GR+", n_mid);
        chain(&self.sigma_outer, TArc::SigmaOuterUpper, "SL+", n_mid);
        chain(&self.sigma_inner, TArc::SigmaInnerUpper, "SR+", n_mid);
        chain(&self.collapsed, TArc::CollapsedUpper, "C0+", n_disk);
        chain(&self.sigma, TArc::SigmaUpper, "S+", n_sigma);
        let m = self.disk.len();
        for i in 0..m {
            let (a, f) = self.disk[i];
            let b = self.disk[(i + 1) % m].0;
            upper.push((Arc::new(a, b, n_disk, format!("D+{i}")), TArc::DiskUpper(f)));
        }
        let mut all = upper.clone();
        all.push((Arc::new(z1, z2, n, "I"), TArc::Band));
        for (a, kind) in upper {
            let mirrored = match kind {
                TArc::GammaOuterUpper => TArc::GammaOuterLower,
                TArc::GammaInnerUpper => TArc::GammaInnerLower,
                TArc::SigmaOuterUpper => TArc::SigmaOuterLower,
                TArc::SigmaInnerUpper => TArc::SigmaInnerLower,
                TArc::CollapsedUpper => TArc::CollapsedLower,
                TArc::SigmaUpper => TArc::SigmaLower,
                TArc::DiskUpper(f) => TArc::DiskLower(f),
                other => other,
            };
            all.push((Arc::new(a.end.conj(), a.start.conj(), a.n, format!("{}*", a.label)), mirrored));
        }
        all
    }
}

fn ang_dist(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(2.0 * PI);
    d.min(2.0 * PI - d)
}

/// Jump matrix of a large-T arc at `z`, with `τ = T^{1/3}`.
/// `h` is taken on the branch seen from `toward`, a point inside the arc.
pub fn large_t_jump(kind: TArc, z: C64, toward: C64, tau3: f64, branch: &SpectralBranch, fa: f64, fb: f64) -> Mat2 {
    let c = |r: f64| C64::new(r, 0.0);
    let i2 = C64::new(0.0, 2.0 * tau3);
    let twist = |u: f64, l: f64| {
        let e = C64::new(0.0, tau3 * branch.geo.kappa_w).exp();
        Mat2::new(C64::new(0.0, 0.0), c(u) / e, -c(l) * e, C64::new(0.0, 0.0))
    };
    match kind {
        TArc::Band => Mat2::diag(c(fa.powi(-2)), c(fa * fa)),
        TArc::SigmaUpper => twist(fa / fb, fb / fa),
        TArc::SigmaLower => twist(fb / fa, fa / fb),
        TArc::DiskUpper(f) | TArc::DiskLower(f) => {
            let e = Mat2::exp_sigma3(C64::new(0.0, tau3) * branch.h_toward(z, toward));
            let upper_half = matches!(kind, TArc::DiskUpper(_));
            let k = match (f, upper_half) {
                (DiskFace::Outside, _) => Mat2::identity(),
                (DiskFace::Gamma, true) => Mat2::lower(c(fb / fa)),
                (DiskFace::SigmaLeft, true) => Mat2::upper(c(fa / fb)),
                (DiskFace::SigmaRight, true) => Mat2::new(c(1.0), c(-fa / fb), c(fb / fa), c(0.0)),
                (DiskFace::Gamma, false) => Mat2::upper(c(-fb / fa)),
                (DiskFace::SigmaLeft, false) => Mat2::lower(c(-fa / fb)),
                (DiskFace::SigmaRight, false) => Mat2::new(c(0.0), c(-fb / fa), c(fa / fb), c(1.0)),
            };
            k * e
        }
        _ => {
            let h = branch.h_toward(z, toward);
            let ep = || (i2 * h).exp();
            let em = || (-i2 * h).exp();
            match kind {
                TArc::GammaOuterUpper => Mat2::lower(c(-fb / fa) * ep()),
                TArc::GammaInnerUpper => Mat2::upper(c(fa * fb) * em()),
                TArc::GammaInnerLower => Mat2::lower(c(-fa * fb) * ep()),
                TArc::GammaOuterLower => Mat2::upper(c(fb / fa) * em()),
                TArc::SigmaOuterUpper => Mat2::upper(c(-fa / fb) * em()),
                TArc::SigmaInnerUpper => Mat2::upper(c(-fa.powi(3) / fb) * em()),
                TArc::CollapsedUpper => Mat2::upper(c(-fa / fb) * em()),
                TArc::SigmaOuterLower => Mat2::lower(c(fa / fb) * ep()),
                TArc::SigmaInnerLower => Mat2::lower(c(fa.powi(3) / fb) * ep()),
                TArc::CollapsedLower => Mat2::lower(c(fa / fb) * ep()),
                _ => unreachable!(),
            }
        }
    }
}

/// The large-T problem at `(T, w)`.
pub fn large_t_problem(t: f64, w: f64, p: &ParamSet, n: usize) -> Result<RHProblem> {
    let geo = LargeTContour::new(t, w)?;
    let branch = Shared::new(geo.branch.clone());
    let tau3 = t.cbrt();
    let (fa, fb) = (p.frak_a, p.frak_b);
    let mut arcs = Vec::new();
    let mut jumps = Vec::new();
    for (arc, kind) in geo.arcs(n) {
        let b = branch.clone();
        let mid = arc.mid();
        jumps.push(jump_fn(move |z| large_t_jump(kind, z, mid, tau3, &b, fa, fb)));
        arcs.push(arc);
    }
    RHProblem::new(Contour::new(arcs)?, jumps)?.pruned(super::lens::PRUNE_TOL)
}

/// `Ψ(X, T; G(a, b), 1)` with `X = T^{2/3} w`, from the large-T problem.
pub fn rwio_large_t(t: f64, w: f64, p: &ParamSet, n: usize) -> Result<(C64, SolveReport)> {
    if !(t > 0.0) {
        return Err(Error::Domain { what: "large-T solver requires T > 0", value: t });
    }
    if !(w.abs() < w_c() - eps_w()) {
        return Err(Error::Regime(format!("w = {w} is not below w_c - eps_w")));
    }
    if p.is_degenerate() {
        return Ok((C64::new(0.0, 0.0), zero_report()));
    }
    let problem = large_t_problem(t, w, p, n)?;
    let (d, rep) = solve_rhp(&problem)?;
    let m1 = first_moment(&d);
    Ok((C64::new(0.0, 2.0) * p.phase_factor() * m1[(0, 1)] / t.cbrt(), rep))
}

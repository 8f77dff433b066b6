//! Lens contours around the real stationary points of `ϑ(z; v)`, shared by the
//! large-X and transitional solvers.
//!
//! The unknown is `T(z) = P(X^{-1/2} z)` outside the lenses. Inside, the
//! normalized jump `e^{-iφσ₃} G(𝔞,𝔟) e^{iφσ₃}`, `φ = X^{1/2} ϑ(z; v)`, is split
//! into triangular factors so that every arc carries a decaying exponential,
//! except the band `I` which carries the constant `𝔞^{-2σ₃}`.

use crate::error::Result;
use crate::mat2::Mat2;
use crate::params::ParamSet;
use crate::phases::vartheta;
use crate::rhp::{first_moment, jump_fn, solve_rhp, Arc, Contour, RHProblem, SolveReport};
use num_complex::Complex64 as C64;

/// Which factor an arc carries. All arcs run from the left junction towards
/// `z2` with the `+` side above.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LensArc {
    /// Outer upper lens `C_L^+`: `[[1,0],[−(𝔟/𝔞)e^{2iφ},1]]`.
    OuterUpper,
    /// Inner upper lens `C_R^+`: `[[1,𝔞𝔟e^{−2iφ}],[0,1]]`.
    InnerUpper,
    /// Band `I`: `𝔞^{−2σ₃}`.
    Band,
    /// Inner lower lens `C_R^−`: `[[1,0],[𝔞𝔟e^{2iφ},1]]`.
    InnerLower,
    /// Outer lower lens `C_L^−`: `[[1,−(𝔟/𝔞)e^{−2iφ}],[0,1]]`.
    OuterLower,
}

/// Vertices of the upper lenses; the lower lenses are their mirror images.
#[derive(Clone, Debug, PartialEq)]
pub struct LensContour {
    /// Left junction on the real axis (`z1(v)` or `z_c`).
    pub left: f64,
    /// Right junction `z2(v)`.
    pub right: f64,
    /// `C_L^+` from `left` to `right`.
    pub outer: Vec<C64>,
    /// `C_R^+` from `left` to `right`.
    pub inner: Vec<C64>,
}

impl LensContour {
    /// Oriented arcs with their kinds. Arcs ending at a junction get `n`
    /// nodes, the others [`far_nodes`]`(n)`.
    pub fn arcs(&self, n: usize) -> Vec<(Arc, LensArc)> {
        let mut v = Vec::new();
        let nf = far_nodes(n);
        let chain = |pts: &[C64], kind: LensArc, label: &str, mirror: bool, out: &mut Vec<(Arc, LensArc)>| {
            let last = pts.len() - 2;
            for (i, w) in pts.windows(2).enumerate() {
                let (s, e) = if mirror { (w[0].conj(), w[1].conj()) } else { (w[0], w[1]) };
                let k = if i == 0 || i == last { n } else { nf };
                out.push((Arc::new(s, e, k, format!("{label}{i}")), kind));
            }
        };
        chain(&self.outer, LensArc::OuterUpper, "CL+", false, &mut v);
        chain(&self.inner, LensArc::InnerUpper, "CR+", false, &mut v);
        v.push((
            Arc::new(C64::new(self.left, 0.0), C64::new(self.right, 0.0), n, "I"),
            LensArc::Band,
        ));
        chain(&self.inner, LensArc::InnerLower, "CR-", true, &mut v);
        chain(&self.outer, LensArc::OuterLower, "CL-", true, &mut v);
        v
    }
}

/// Node count on arcs away from the stationary points.
pub fn far_nodes(n: usize) -> usize {
    (3 * n / 4).max(16).min(n)
}

/// Arcs whose jump stays this close to `I` are dropped.
pub const PRUNE_TOL: f64 = 1e-16;

/// Jump matrix of a lens arc at `z`.
pub fn lens_jump(kind: LensArc, z: C64, x: f64, v: f64, fa: f64, fb: f64) -> Mat2 {
    let phi = x.sqrt() * (z + v * z * z + 2.0 / z);
    let ep = || (C64::new(0.0, 2.0) * phi).exp();
    let em = || (C64::new(0.0, -2.0) * phi).exp();
    let c = |r: f64| C64::new(r, 0.0);
    match kind {
        LensArc::OuterUpper => Mat2::lower(c(-fb / fa) * ep()),
        LensArc::InnerUpper => Mat2::upper(c(fa * fb) * em()),
        LensArc::Band => Mat2::diag(c(fa.powi(-2)), c(fa * fa)),
        LensArc::InnerLower => Mat2::lower(c(fa * fb) * ep()),
        LensArc::OuterLower => Mat2::upper(c(-fb / fa) * em()),
    }
}

/// Largest height of the curve `Im ϑ = 0` above the interval `[lo, hi]`.
pub(crate) fn arch_height(v: f64, lo: f64, hi: f64) -> f64 {
    let m = 400;
    (0..=m)
        .map(|k| {
            let x = lo + (hi - lo) * k as f64 / m as f64;
            let y2 = 2.0 / (1.0 + 2.0 * v * x) - x * x;
            if y2 > 0.0 && 1.0 + 2.0 * v * x > 0.0 {
                y2.sqrt()
            } else {
                0.0
            }
        })
        .fold(0.0, f64::max)
}

/// Builds the lens problem for `(X, v)`.
pub fn lens_problem(lens: &LensContour, x: f64, v: f64, p: &ParamSet, n: usize) -> Result<RHProblem> {
    let (fa, fb) = (p.frak_a, p.frak_b);
    let mut arcs = Vec::new();
    let mut jumps = Vec::new();
    for (arc, kind) in lens.arcs(n) {
        arcs.push(arc);
        jumps.push(jump_fn(move |z| lens_jump(kind, z, x, v, fa, fb)));
    }
    RHProblem::new(Contour::new(arcs)?, jumps)?.pruned(PRUNE_TOL)
}

/// `Ψ = 2i e^{−i arg(ab)} X^{−1/2} lim z T₁₂` from a lens problem.
pub fn solve_lens(lens: &LensContour, x: f64, v: f64, p: &ParamSet, n: usize) -> Result<(C64, SolveReport)> {
    let problem = lens_problem(lens, x, v, p, n)?;
    let (d, rep) = solve_rhp(&problem)?;
    let m1 = first_moment(&d);
    Ok((C64::new(0.0, 2.0) * p.phase_factor() * m1[(0, 1)] / x.sqrt(), rep))
}

/// `Im ϑ(z; v)`, used by the sign checks of the contour builders.
pub fn im_vartheta(z: C64, v: f64) -> f64 {
    vartheta(z, v, 0).map(|t| t.im).unwrap_or(f64::NAN)
}

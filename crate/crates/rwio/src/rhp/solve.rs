//! Collocation assembly, dense solve and post-processing of the density.

use super::cauchy::{
    cheb_cauchy, cheb_cauchy_boundary, cheb_integral, cheb_values, endpoint_constants, lobatto,
};
use super::contour::{Contour, End};
use crate::error::{Error, Result};
use crate::mat2::Mat2;
use faer::linalg::solvers::Solve;
use faer::Mat;
use num_complex::Complex64 as C64;
use std::f64::consts::PI;
use std::sync::Arc as Shared;

/// Jump matrix as a function of the point on an arc.
pub type JumpFn = Shared<dyn Fn(C64) -> Mat2 + Send + Sync>;

/// Wraps a closure as a [`JumpFn`].
pub fn jump_fn<F: Fn(C64) -> Mat2 + Send + Sync + 'static>(f: F) -> JumpFn {
    Shared::new(f)
}

/// Contour plus one jump function per arc, normalized to `I` at infinity.
///
/// The sought `Φ` satisfies `Φ₊ = Φ₋ V` with `+` the left side of each arc.
#[derive(Clone)]
pub struct RHProblem {
    pub contour: Contour,
    pub jumps: Vec<JumpFn>,
}

impl RHProblem {
    pub fn new(contour: Contour, jumps: Vec<JumpFn>) -> Result<Self> {
        if contour.arcs.len() != jumps.len() {
            return Err(Error::Regime(format!(
                "{} arcs but {} jump functions",
                contour.arcs.len(),
                jumps.len()
            )));
        }
        Ok(RHProblem { contour, jumps })
    }

    /// Largest `|det V − 1|` over all collocation nodes.
    pub fn unimodularity_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (a, v) in self.contour.arcs.iter().zip(&self.jumps) {
            for t in lobatto(a.n) {
                worst = worst.max((v(a.point(t)).det() - 1.0).norm());
            }
        }
        worst
    }

    /// Drops arcs on which `‖V − I‖` stays below `tol` at 65 sample points.
    pub fn pruned(&self, tol: f64) -> Result<Self> {
        let mut arcs = Vec::new();
        let mut jumps = Vec::new();
        for (a, v) in self.contour.arcs.iter().zip(&self.jumps) {
            let dev = (0..=64)
                .map(|k| (v(a.point(-1.0 + k as f64 / 32.0)) - Mat2::identity()).max_abs())
                .fold(0.0, f64::max);
            if !(dev < tol) {
                arcs.push(a.clone());
                jumps.push(v.clone());
            }
        }
        RHProblem::new(Contour::new(arcs)?, jumps)
    }
}

/// Chebyshev coefficients of the solved density, one `Mat2` per degree per arc.
#[derive(Clone)]
pub struct Density {
    pub contour: Contour,
    pub jumps: Vec<JumpFn>,
    pub coeffs: Vec<Vec<Mat2>>,
}

/// Diagnostics returned with every solve.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SolveReport {
    pub max_jump_residual: f64,
    pub matrix_dimension: usize,
    pub condition_estimate: Option<f64>,
}

fn two_pi_i() -> C64 {
    C64::new(0.0, 2.0 * PI)
}

/// Principal argument in `(−π, π]`.
fn arg(z: C64) -> f64 {
    z.im.atan2(z.re)
}

/// Finite-part values `C[T_k]` of arc `a` at its endpoint `which`, approached
/// along direction angle `phi`; `own` overrides the argument on the arc itself.
fn endpoint_row(
    a: &super::contour::Arc,
    which: End,
    phi: f64,
    own: Option<f64>,
    consts: &[f64],
    out: &mut Vec<C64>,
) {
    let h = a.half();
    let lnh = h.norm().ln();
    let dir = C64::from_polar(1.0, phi);
    out.clear();
    match which {
        End::End => {
            let th = own.unwrap_or_else(|| arg(dir / h));
            let base = C64::new(-lnh, th);
            for &c in consts.iter().take(a.n) {
                out.push((base + c) / two_pi_i());
            }
        }
        End::Start => {
            let th = own.unwrap_or_else(|| arg(-dir / h));
            let base = C64::new(-lnh, th);
            for (k, &c) in consts.iter().take(a.n).enumerate() {
                let sgn = if k % 2 == 0 { -1.0 } else { 1.0 };
                out.push((base + c) * sgn / two_pi_i());
            }
        }
    }
}

/// One collocation point: arc index, local parameter and junction flag.
struct Node {
    arc: usize,
    t: f64,
    end: Option<End>,
}

fn nodes(contour: &Contour) -> Vec<Node> {
    let mut v = Vec::with_capacity(contour.total_nodes());
    for (i, a) in contour.arcs.iter().enumerate() {
        let ts = lobatto(a.n);
        let last = ts.len() - 1;
        for (m, t) in ts.into_iter().enumerate() {
            let end = if m == 0 {
                Some(End::Start)
            } else if m == last {
                Some(End::End)
            } else {
                None
            };
            v.push(Node { arc: i, t, end });
        }
    }
    v
}

/// Cauchy-transform rows `(C₊[T_k], C₋[T_k])` for every basis function at a node.
///
/// `plus` and `minus` have length `N`; they differ only on the node's own arc.
fn node_rows(
    contour: &Contour,
    offsets: &[usize],
    consts: &[f64],
    node: &Node,
    plus: &mut [C64],
    minus: &mut [C64],
    scratch: &mut Vec<C64>,
) {
    let own = &contour.arcs[node.arc];
    let z = own.point(node.t);
    let z = match node.end {
        Some(End::Start) => own.start,
        Some(End::End) => own.end,
        None => z,
    };
    let beta = match node.end {
        Some(End::Start) => arg(own.half()),
        Some(End::End) => arg(-own.half()),
        None => 0.0,
    };
    let touching = if node.end.is_some() { contour.touching(z) } else { Vec::new() };
    for (j, a) in contour.arcs.iter().enumerate() {
        let off = offsets[j];
        let n = a.n;
        if j == node.arc {
            match node.end {
                None => {
                    cheb_cauchy_boundary(node.t, true, n, scratch);
                    for k in 0..n {
                        plus[off + k] = scratch[k] / two_pi_i();
                    }
                    cheb_cauchy_boundary(node.t, false, n, scratch);
                    for k in 0..n {
                        minus[off + k] = scratch[k] / two_pi_i();
                    }
                }
                Some(which) => {
                    let (ap, am) = match which {
                        End::End => (PI, -PI),
                        End::Start => (-PI, PI),
                    };
                    endpoint_row(a, which, beta, Some(ap), consts, scratch);
                    plus[off..off + n].copy_from_slice(&scratch[..n]);
                    endpoint_row(a, which, beta, Some(am), consts, scratch);
                    minus[off..off + n].copy_from_slice(&scratch[..n]);
                }
            }
            continue;
        }
        if let Some(&(_, which)) = touching.iter().find(|(jj, _)| *jj == j) {
            endpoint_row(a, which, beta, None, consts, scratch);
        } else {
            cheb_cauchy(a.local(z), n, scratch);
            for s in scratch.iter_mut() {
                *s /= two_pi_i();
            }
        }
        plus[off..off + n].copy_from_slice(&scratch[..n]);
        minus[off..off + n].copy_from_slice(&scratch[..n]);
    }
}

fn offsets(contour: &Contour) -> Vec<usize> {
    let mut o = Vec::with_capacity(contour.arcs.len());
    let mut acc = 0;
    for a in &contour.arcs {
        o.push(acc);
        acc += a.n;
    }
    o
}

/// Collocation matrix and right-hand sides for `C₊[F] − C₋[F] V = V − I`.
///
/// The equation decouples by rows of `F`, so the system has dimension `2N`
/// (`N` = total node count) with two right-hand sides, one per row of `F`.
/// Unknown layout: entry `g` is the first column of `F` for basis function `g`,
/// entry `N + g` the second column.
pub fn assemble(problem: &RHProblem) -> Result<(Mat<C64>, Mat<C64>)> {
    let contour = &problem.contour;
    for a in &contour.arcs {
        if !(a.length() > 1e-14) {
            return Err(Error::DegenerateArc(a.label.clone()));
        }
    }
    let n_tot = contour.total_nodes();
    let offs = offsets(contour);
    let nmax = contour.arcs.iter().map(|a| a.n).max().unwrap_or(0);
    let consts = endpoint_constants(nmax);
    let mut m = Mat::<C64>::zeros(2 * n_tot, 2 * n_tot);
    let mut rhs = Mat::<C64>::zeros(2 * n_tot, 2);
    let mut plus = vec![C64::new(0.0, 0.0); n_tot];
    let mut minus = vec![C64::new(0.0, 0.0); n_tot];
    let mut scratch = Vec::with_capacity(nmax);
    let one = C64::new(1.0, 0.0);
    for (p, node) in nodes(contour).iter().enumerate() {
        node_rows(contour, &offs, &consts, node, &mut plus, &mut minus, &mut scratch);
        let a = &contour.arcs[node.arc];
        let v = (problem.jumps[node.arc])(a.point(node.t));
        if !v.max_abs().is_finite() {
            return Err(Error::Regime(format!("jump on arc `{}` is not finite", a.label)));
        }
        for g in 0..n_tot {
            let (ap, am) = (plus[g], minus[g]);
            m[(p, g)] = ap - am * v[(0, 0)];
            m[(p, n_tot + g)] = -am * v[(1, 0)];
            m[(n_tot + p, g)] = -am * v[(0, 1)];
            m[(n_tot + p, n_tot + g)] = ap - am * v[(1, 1)];
        }
        for r in 0..2 {
            rhs[(p, r)] = v[(r, 0)] - if r == 0 { one } else { C64::new(0.0, 0.0) };
            rhs[(n_tot + p, r)] = v[(r, 1)] - if r == 1 { one } else { C64::new(0.0, 0.0) };
        }
    }
    Ok((m, rhs))
}

/// Solves the collocation system by LU with partial pivoting.
pub fn solve_rhp(problem: &RHProblem) -> Result<(Density, SolveReport)> {
    let (m, rhs) = assemble(problem)?;
    let dim = m.nrows();
    if dim == 0 {
        let density = Density { contour: problem.contour.clone(), jumps: problem.jumps.clone(), coeffs: Vec::new() };
        return Ok((density, SolveReport { max_jump_residual: 0.0, matrix_dimension: 0, condition_estimate: None }));
    }
    let lu = m.partial_piv_lu();
    let u = lu.U();
    let mut dmax: f64 = 0.0;
    let mut dmin = f64::INFINITY;
    for i in 0..dim {
        let d = u[(i, i)].norm();
        dmax = dmax.max(d);
        dmin = dmin.min(d);
    }
    let cond = if dmin > 0.0 { dmax / dmin } else { f64::INFINITY };
    if !cond.is_finite() || cond > 1e15 {
        return Err(Error::IllConditioned { condition: cond });
    }
    let x = lu.solve(&rhs);
    let n_tot = dim / 2;
    let mut coeffs = Vec::with_capacity(problem.contour.arcs.len());
    let mut g = 0;
    for a in &problem.contour.arcs {
        let mut c = Vec::with_capacity(a.n);
        for _ in 0..a.n {
            c.push(Mat2::new(x[(g, 0)], x[(n_tot + g, 0)], x[(g, 1)], x[(n_tot + g, 1)]));
            g += 1;
        }
        coeffs.push(c);
    }
    if coeffs.iter().flatten().any(|c| !c.max_abs().is_finite()) {
        return Err(Error::IllConditioned { condition: cond });
    }
    let density = Density { contour: problem.contour.clone(), jumps: problem.jumps.clone(), coeffs };
    let residual = jump_residual(&density, 4);
    Ok((
        density,
        SolveReport { max_jump_residual: residual, matrix_dimension: dim, condition_estimate: Some(cond) },
    ))
}

/// `M₁` in `Φ(z) = I + M₁/z + O(z⁻²)`.
pub fn first_moment(d: &Density) -> Mat2 {
    let mut acc = Mat2::zero();
    for (a, cs) in d.contour.arcs.iter().zip(&d.coeffs) {
        let mut s = Mat2::zero();
        for (k, c) in cs.iter().enumerate() {
            let mu = cheb_integral(k);
            if mu != 0.0 {
                s = s + c.scale(C64::from(mu));
            }
        }
        acc = acc + s.scale(a.half());
    }
    acc.scale(-1.0 / two_pi_i())
}

fn combine(cs: &[Mat2], vals: &[C64]) -> Mat2 {
    let mut s = Mat2::zero();
    for (c, v) in cs.iter().zip(vals) {
        s = s + c.scale(*v);
    }
    s
}

/// `Φ(z) = I + C[F](z)` at a point off the contour.
pub fn eval_offcontour(d: &Density, z: C64) -> Result<Mat2> {
    if d.contour.distance(z) < 1e-13 * (1.0 + z.norm()) {
        return Err(Error::OnContour);
    }
    let mut out = Mat2::identity();
    let mut scratch = Vec::new();
    for (a, cs) in d.contour.arcs.iter().zip(&d.coeffs) {
        cheb_cauchy(a.local(z), a.n, &mut scratch);
        out = out + combine(cs, &scratch).scale(1.0 / two_pi_i());
    }
    Ok(out)
}

/// Boundary values `(Φ₊, Φ₋)` at interior parameter `t` of arc `i`.
pub fn boundary_values(d: &Density, i: usize, t: f64) -> (Mat2, Mat2) {
    let own = &d.contour.arcs[i];
    let z = own.point(t);
    let mut common = Mat2::identity();
    let mut scratch = Vec::new();
    let mut plus = Mat2::zero();
    let mut minus = Mat2::zero();
    for (j, (a, cs)) in d.contour.arcs.iter().zip(&d.coeffs).enumerate() {
        if j == i {
            cheb_cauchy_boundary(t, true, a.n, &mut scratch);
            plus = combine(cs, &scratch).scale(1.0 / two_pi_i());
            cheb_cauchy_boundary(t, false, a.n, &mut scratch);
            minus = combine(cs, &scratch).scale(1.0 / two_pi_i());
        } else {
            cheb_cauchy(a.local(z), a.n, &mut scratch);
            common = common + combine(cs, &scratch).scale(1.0 / two_pi_i());
        }
    }
    (common + plus, common + minus)
}

/// Density `F` at local parameter `t` of arc `i`.
pub fn density_at(d: &Density, i: usize, t: f64) -> Mat2 {
    let mut tv = Vec::new();
    cheb_values(t, d.coeffs[i].len(), &mut tv);
    let vals: Vec<C64> = tv.into_iter().map(C64::from).collect();
    combine(&d.coeffs[i], &vals)
}

/// Largest `‖Φ₊ − Φ₋ V‖` at points interleaved between collocation nodes.
pub fn jump_residual(d: &Density, samples_per_arc: usize) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, a) in d.contour.arcs.iter().enumerate() {
        let nodes = lobatto(a.n);
        let gaps = nodes.len() - 1;
        for s in 0..samples_per_arc.max(1) {
            let m = (s * gaps) / samples_per_arc.max(1);
            let m = m.min(gaps - 1);
            let t = 0.5 * (nodes[m] + nodes[m + 1]);
            let (p, q) = boundary_values(d, i, t);
            let v = (d.jumps[i])(a.point(t));
            let r = (p - q * v).max_abs();
            worst = if r.is_nan() { f64::NAN } else { worst.max(r) };
        }
    }
    worst
}

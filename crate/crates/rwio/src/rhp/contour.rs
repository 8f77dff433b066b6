//! Oriented polygonal contours built from straight arcs.

use crate::error::{Error, Result};
use num_complex::Complex64 as C64;

/// Tolerance used to decide that two arc endpoints coincide.
pub const JUNCTION_TOL: f64 = 1e-12;

/// A straight oriented arc `M(t) = mid + half·t`, `t ∈ [-1, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Arc {
    pub start: C64,
    pub end: C64,
    pub n: usize,
    pub label: String,
}

impl Arc {
    pub fn new(start: C64, end: C64, n: usize, label: impl Into<String>) -> Self {
        Arc { start, end, n, label: label.into() }
    }

    pub fn mid(&self) -> C64 {
        (self.start + self.end) * 0.5
    }

    pub fn half(&self) -> C64 {
        (self.end - self.start) * 0.5
    }

    /// Point at local parameter `t`.
    pub fn point(&self, t: f64) -> C64 {
        self.mid() + self.half() * t
    }

    /// Local coordinate `s = (z − mid)/half`.
    pub fn local(&self, z: C64) -> C64 {
        (z - self.mid()) / self.half()
    }

    pub fn length(&self) -> f64 {
        (self.end - self.start).norm()
    }
}

/// Which end of an arc touches a junction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum End {
    Start,
    End,
}

/// Ordered list of arcs with endpoint-coincidence bookkeeping.
#[derive(Clone, Debug, PartialEq)]
pub struct Contour {
    pub arcs: Vec<Arc>,
}

fn close(a: C64, b: C64) -> bool {
    (a - b).norm() <= JUNCTION_TOL * (1.0 + a.norm().max(b.norm()))
}

impl Contour {
    /// Validates arc lengths and collocation counts.
    pub fn new(arcs: Vec<Arc>) -> Result<Self> {
        for a in &arcs {
            if !(a.length() > 1e-14) || !a.start.re.is_finite() || !a.end.re.is_finite() {
                return Err(Error::DegenerateArc(a.label.clone()));
            }
            if a.n < 2 {
                return Err(Error::DegenerateArc(format!("{} (n < 2)", a.label)));
            }
        }
        Ok(Contour { arcs })
    }

    /// Closed polygon through `vertices` in the given order, `n` nodes per side.
    pub fn polygon(vertices: &[C64], n: usize, label: &str) -> Vec<Arc> {
        let m = vertices.len();
        (0..m)
            .map(|i| Arc::new(vertices[i], vertices[(i + 1) % m], n, format!("{label}{i}")))
            .collect()
    }

    /// Arcs (other than `skip`) having an endpoint at `z`.
    pub fn touching(&self, z: C64) -> Vec<(usize, End)> {
        let mut v = Vec::new();
        for (j, a) in self.arcs.iter().enumerate() {
            if close(a.start, z) {
                v.push((j, End::Start));
            } else if close(a.end, z) {
                v.push((j, End::End));
            }
        }
        v
    }

    /// Total number of unknown coefficients per scalar component.
    pub fn total_nodes(&self) -> usize {
        self.arcs.iter().map(|a| a.n).sum()
    }

    /// Smallest distance from `z` to the contour.
    pub fn distance(&self, z: C64) -> f64 {
        self.arcs
            .iter()
            .map(|a| {
                let s = a.local(z);
                let t = s.re.clamp(-1.0, 1.0);
                (a.point(t) - z).norm()
            })
            .fold(f64::INFINITY, f64::min)
    }

    /// Complex conjugate contour with orientation reversed, which keeps the
    /// `+` side on the mirrored side.
    pub fn schwarz_reflect(&self) -> Contour {
        Contour {
            arcs: self
                .arcs
                .iter()
                .map(|a| Arc::new(a.end.conj(), a.start.conj(), a.n, format!("{}*", a.label)))
                .collect(),
        }
    }
}

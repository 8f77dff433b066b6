//! Small dense 2×2 complex matrices used for jump data and moments.

use num_complex::Complex64 as C64;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

/// A 2×2 complex matrix stored row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2(pub [[C64; 2]; 2]);

const Z: C64 = C64 { re: 0.0, im: 0.0 };
const O: C64 = C64 { re: 1.0, im: 0.0 };

impl Mat2 {
    /// Builds `[[a, b], [c, d]]`.
    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Self {
        Mat2([[a, b], [c, d]])
    }

    pub fn identity() -> Self {
        Mat2([[O, Z], [Z, O]])
    }

    pub fn zero() -> Self {
        Mat2([[Z, Z], [Z, Z]])
    }

    /// `diag(a, d)`.
    pub fn diag(a: C64, d: C64) -> Self {
        Mat2([[a, Z], [Z, d]])
    }

    /// The Pauli matrix `σ₃`.
    pub fn sigma3() -> Self {
        Self::diag(O, -O)
    }

    /// `c^{σ₃} = diag(c, 1/c)`.
    pub fn pow_sigma3(c: C64) -> Self {
        Self::diag(c, c.inv())
    }

    /// `e^{s σ₃} = diag(e^s, e^{-s})`.
    pub fn exp_sigma3(s: C64) -> Self {
        Self::diag(s.exp(), (-s).exp())
    }

    /// `[[1, u], [0, 1]]`.
    pub fn upper(u: C64) -> Self {
        Mat2([[O, u], [Z, O]])
    }

    /// `[[1, 0], [l, 1]]`.
    pub fn lower(l: C64) -> Self {
        Mat2([[O, Z], [l, O]])
    }

    pub fn det(&self) -> C64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn trace(&self) -> C64 {
        self.0[0][0] + self.0[1][1]
    }

    /// Inverse via the adjugate.
    pub fn inv(&self) -> Self {
        let m = &self.0;
        let d = self.det();
        Mat2([[m[1][1] / d, -m[0][1] / d], [-m[1][0] / d, m[0][0] / d]])
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        let m = &self.0;
        Mat2([[m[0][0].conj(), m[0][1].conj()], [m[1][0].conj(), m[1][1].conj()]])
    }

    pub fn scale(&self, s: C64) -> Self {
        let m = &self.0;
        Mat2([[m[0][0] * s, m[0][1] * s], [m[1][0] * s, m[1][1] * s]])
    }

    /// Largest entry modulus; `NaN` if any entry is `NaN`.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().flat_map(|r| r.iter()).fold(0.0_f64, |acc, z| {
            let m = z.norm();
            if m.is_nan() || acc.is_nan() {
                f64::NAN
            } else {
                acc.max(m)
            }
        })
    }

    /// `e^{-iφσ₃} M e^{iφσ₃}`, the conjugation that carries exponential phases into the off-diagonal entries.
    pub fn conj_phase(&self, phi: C64) -> Self {
        let i = C64::i();
        let e = (-(i * phi) * 2.0).exp();
        let f = ((i * phi) * 2.0).exp();
        let m = &self.0;
        Mat2([[m[0][0], m[0][1] * e], [m[1][0] * f, m[1][1]]])
    }
}

impl Index<(usize, usize)> for Mat2 {
    type Output = C64;
    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        &self.0[r][c]
    }
}

impl IndexMut<(usize, usize)> for Mat2 {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C64 {
        &mut self.0[r][c]
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        let a = &self.0;
        let b = &o.0;
        Mat2([
            [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
            [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
        ])
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, o: Mat2) -> Mat2 {
        let a = &self.0;
        let b = &o.0;
        Mat2([
            [a[0][0] + b[0][0], a[0][1] + b[0][1]],
            [a[1][0] + b[1][0], a[1][1] + b[1][1]],
        ])
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, o: Mat2) -> Mat2 {
        self + (-o)
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self.scale(-O)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_product() {
        let m = Mat2::new(C64::new(1.0, 2.0), C64::new(0.5, 0.0), C64::new(-1.0, 1.0), C64::new(3.0, -1.0));
        let e = m * m.inv() - Mat2::identity();
        assert!(e.max_abs() < 1e-15);
    }

    #[test]
    fn conj_phase_matches_explicit_product() {
        let m = Mat2::new(C64::new(0.3, 0.1), C64::new(0.7, 0.0), C64::new(-0.7, 0.0), C64::new(0.3, -0.1));
        let phi = C64::new(0.4, -0.2);
        let i = C64::i();
        let explicit = Mat2::exp_sigma3(-i * phi) * m * Mat2::exp_sigma3(i * phi);
        assert!((explicit - m.conj_phase(phi)).max_abs() < 1e-14);
    }
}

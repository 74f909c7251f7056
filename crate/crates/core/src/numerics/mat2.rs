use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::quadratic_roots;

/// A 2×2 complex matrix stored entrywise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub a11: Complex64,
    pub a12: Complex64,
    pub a21: Complex64,
    pub a22: Complex64,
}

impl Mat2 {
    pub const fn new(a11: Complex64, a12: Complex64, a21: Complex64, a22: Complex64) -> Self {
        Mat2 { a11, a12, a21, a22 }
    }

    pub fn from_real(rows: [[f64; 2]; 2]) -> Self {
        Mat2::new(
            Complex64::new(rows[0][0], 0.0),
            Complex64::new(rows[0][1], 0.0),
            Complex64::new(rows[1][0], 0.0),
            Complex64::new(rows[1][1], 0.0),
        )
    }

    pub fn zero() -> Self {
        Mat2::scalar(Complex64::new(0.0, 0.0))
    }

    pub fn identity() -> Self {
        Mat2::scalar(Complex64::new(1.0, 0.0))
    }

    pub fn scalar(c: Complex64) -> Self {
        let z = Complex64::new(0.0, 0.0);
        Mat2::new(c, z, z, c)
    }

    pub fn diag(a: Complex64, b: Complex64) -> Self {
        let z = Complex64::new(0.0, 0.0);
        Mat2::new(a, z, z, b)
    }

    /// The companion matrix `[[0, 1], [−p, s]]`, with trace `s` and determinant `p`.
    pub fn companion(s: Complex64, p: Complex64) -> Self {
        Mat2::new(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), -p, s)
    }

    pub fn trace(&self) -> Complex64 {
        self.a11 + self.a22
    }

    pub fn det(&self) -> Complex64 {
        self.a11 * self.a22 - self.a12 * self.a21
    }

    /// Eigenvalues, as the roots of `λ² − tr·λ + det`.
    pub fn eig2(&self) -> (Complex64, Complex64) {
        quadratic_roots(self.trace(), self.det())
    }

    pub fn spectral_radius(&self) -> f64 {
        let (l1, l2) = self.eig2();
        l1.norm().max(l2.norm())
    }

    /// Largest singular value, from the eigenvalues of the Gram matrix
    /// `A*A`: `σ² = (f + √(f² − 4|det A|²)) / 2` with `f = ‖A‖_F²`.
    pub fn operator_norm(&self) -> f64 {
        let f = self.frobenius_norm_sqr();
        let d = self.det().norm_sqr();
        let disc = libm::sqrt((f * f - 4.0 * d).max(0.0));
        libm::sqrt((f + disc) * 0.5)
    }

    pub fn frobenius_norm_sqr(&self) -> f64 {
        self.a11.norm_sqr() + self.a12.norm_sqr() + self.a21.norm_sqr() + self.a22.norm_sqr()
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.frobenius_norm_sqr())
    }

    /// Exact test for a scalar multiple of the identity.
    pub fn is_scalar(&self) -> bool {
        self.a12 == Complex64::new(0.0, 0.0) && self.a21 == Complex64::new(0.0, 0.0) && self.a11 == self.a22
    }

    /// Exact test for a diagonal matrix.
    pub fn is_diagonal(&self) -> bool {
        self.a12 == Complex64::new(0.0, 0.0) && self.a21 == Complex64::new(0.0, 0.0)
    }

    /// Frobenius distance to the scalar matrices `cI`.
    pub fn distance_to_scalars(&self) -> f64 {
        let gap = self.a11 - self.a22;
        libm::sqrt(self.a12.norm_sqr() + self.a21.norm_sqr() + 0.5 * gap.norm_sqr())
    }

    /// Frobenius distance to the diagonal matrices.
    pub fn distance_to_diagonal(&self) -> f64 {
        libm::sqrt(self.a12.norm_sqr() + self.a21.norm_sqr())
    }

    pub fn transpose(&self) -> Self {
        Mat2::new(self.a11, self.a21, self.a12, self.a22)
    }

    pub fn adjugate(&self) -> Self {
        Mat2::new(self.a22, -self.a12, -self.a21, self.a11)
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.norm_sqr() == 0.0 {
            return None;
        }
        Some(self.adjugate().scale(d.inv()))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Mat2::new(self.a11 * c, self.a12 * c, self.a21 * c, self.a22 * c)
    }

    pub fn is_finite(&self) -> bool {
        [self.a11, self.a12, self.a21, self.a22].iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, o: Mat2) -> Mat2 {
        Mat2::new(self.a11 + o.a11, self.a12 + o.a12, self.a21 + o.a21, self.a22 + o.a22)
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, o: Mat2) -> Mat2 {
        Mat2::new(self.a11 - o.a11, self.a12 - o.a12, self.a21 - o.a21, self.a22 - o.a22)
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        Mat2::new(-self.a11, -self.a12, -self.a21, -self.a22)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        Mat2::new(
            self.a11 * o.a11 + self.a12 * o.a21,
            self.a11 * o.a12 + self.a12 * o.a22,
            self.a21 * o.a11 + self.a22 * o.a21,
            self.a21 * o.a12 + self.a22 * o.a22,
        )
    }
}

//! Scalar and small-matrix kernels shared by the rest of the crate.

mod circle;
mod disc;
mod hermitian;
mod mat2;
mod poly;

pub use circle::{golden_section_max, max_on_circle, CircleMax};
pub use disc::{blaschke_factor, pseudohyperbolic, Mobius};
pub use hermitian::HermitianMatrix;
pub use mat2::Mat2;
pub use poly::{Polynomial, RationalFunction};

pub use num_complex::Complex64;

/// Scalar field used throughout: double-precision complex numbers.
pub type ComplexScalar = Complex64;

#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[inline]
pub fn real(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// `e^{iθ}`.
#[inline]
pub fn cis(theta: f64) -> Complex64 {
    Complex64::cis(theta)
}

/// Roots of `x² − s·x + p`.
///
/// The larger-modulus root is formed without cancellation and the other is
/// recovered from the product `p`.
pub fn quadratic_roots(s: Complex64, p: Complex64) -> (Complex64, Complex64) {
    let disc = (s * s - p * 4.0).sqrt();
    let plus = s + disc;
    let minus = s - disc;
    let big = if plus.norm_sqr() >= minus.norm_sqr() { plus * 0.5 } else { minus * 0.5 };
    if big.norm_sqr() == 0.0 {
        return (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    }
    (big, p / big)
}

/// Largest root modulus of `x² − s·x + p`; the spectral radius of any 2×2
/// matrix with trace `s` and determinant `p`.
pub fn root_radius(s: Complex64, p: Complex64) -> f64 {
    let (r1, r2) = quadratic_roots(s, p);
    r1.norm().max(r2.norm())
}

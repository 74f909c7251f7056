//! The tetrablock and the structured singular value for diagonal
//! uncertainty.
//!
//! `𝔼 = {x ∈ ℂ³ : 1 − x₁z − x₂w + x₃zw ≠ 0 for |z|, |w| ≤ 1}`. For a 2×2
//! matrix `A`, `μ_Diag(A) < 1` exactly when `(a₁₁, a₂₂, det A) ∈ 𝔼`, and `μ`
//! is positively homogeneous, so `μ(A)` is the unique `t` placing
//! `(a₁₁/t, a₂₂/t, det A/t²)` on the boundary of `𝔼`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::Mat2;

/// A point of `ℂ³` in tetrablock coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TetraPoint {
    pub x1: Complex64,
    pub x2: Complex64,
    pub x3: Complex64,
}

impl TetraPoint {
    pub const fn new(x1: Complex64, x2: Complex64, x3: Complex64) -> Self {
        TetraPoint { x1, x2, x3 }
    }

    pub fn from_real(x1: f64, x2: f64, x3: f64) -> Self {
        TetraPoint::new(Complex64::new(x1, 0.0), Complex64::new(x2, 0.0), Complex64::new(x3, 0.0))
    }

    /// `(a₁₁, a₂₂, det A)`.
    pub fn of_matrix(a: &Mat2) -> Self {
        TetraPoint::new(a.a11, a.a22, a.det())
    }
}

/// `max_{|z| ≤ 1} g(z)` where `g(z) = |x₂ − x₃z|² − |1 − x₁z|²`.
///
/// For fixed `z` the defining expression is affine in `w` and vanishes at
/// `w = (1 − x₁z)/(x₂ − x₃z)`, which lies in the closed disc exactly when
/// `g(z) ≥ 0`. Hence `x ∈ 𝔼` iff this maximum is negative.
///
/// Writing `g(z) = c|z|² + 2 Re(bz) + k` with `c = |x₃|² − |x₁|²`,
/// `b = x₁ − x̄₂x₃`, `k = |x₂|² − 1`: on the circle the maximum is
/// `c + k + 2|b|`; when `c < 0` the function is concave with critical point
/// `−b̄/c` and interior value `k + |b|²/|c|`.
pub fn tetra_max_g(x: &TetraPoint) -> f64 {
    let c = x.x3.norm_sqr() - x.x1.norm_sqr();
    let b = x.x1 - x.x2.conj() * x.x3;
    let k = x.x2.norm_sqr() - 1.0;
    let boundary = c + k + 2.0 * b.norm();
    if c < 0.0 {
        let crit = b.norm() / -c;
        if crit < 1.0 {
            return (k + b.norm_sqr() / -c).max(boundary);
        }
    }
    boundary
}

/// Membership in the open tetrablock (`closed == false`: max g < −tol and
/// |x₁| < 1 − tol) or its closure (`closed == true`: max g ≤ tol and
/// |x₁| ≤ 1 + tol).
///
/// The bound on `x₁` matters when `|x₁| > 1` and `x₂ − x₃z` vanishes at
/// `z = 1/x₁`: there `g = 0` exactly, the polynomial vanishes for every `w`,
/// and rounding alone would decide the sign of the computed maximum.
pub fn in_tetrablock(x: &TetraPoint, closed: bool, tol: f64) -> bool {
    let g = tetra_max_g(x);
    let r1 = x.x1.norm();
    if closed {
        g <= tol && r1 <= 1.0 + tol
    } else {
        g < -tol && r1 < 1.0 - tol
    }
}

/// How the structured singular value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MuMethod {
    /// `a₁₁ = a₂₂ = det A = 0`: `1 − AX` is never singular.
    ZeroCase,
    Bisection,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuResult {
    pub value: f64,
    pub lo: f64,
    pub hi: f64,
    pub method: MuMethod,
}

const MAX_DOUBLINGS: usize = 60;
const LOWER_GUARD: f64 = 1e-300;

/// `μ_Diag(2)(A)` by bisection on `t ↦ [(a₁₁/t, a₂₂/t, det A/t²) ∈ 𝔼]`,
/// seeded with the bracket `[max(r(A), ε), ‖A‖]`.
pub fn mu_diag2(a: &Mat2, tol: f64) -> Result<MuResult> {
    if !(tol > 0.0) {
        return Err(Error::Domain("mu tolerance must be positive"));
    }
    if !a.is_finite() {
        return Err(Error::Domain("matrix entries must be finite"));
    }
    let x = TetraPoint::of_matrix(a);
    let zero = Complex64::new(0.0, 0.0);
    if x.x1 == zero && x.x2 == zero && x.x3 == zero {
        return Ok(MuResult { value: 0.0, lo: 0.0, hi: 0.0, method: MuMethod::ZeroCase });
    }
    // μ(A) < t  ⇔  x(t) ∈ 𝔼.
    let inside = |t: f64| {
        let p = TetraPoint::new(x.x1 / t, x.x2 / t, x.x3 / (t * t));
        in_tetrablock(&p, false, 0.0)
    };

    let mut lo = a.spectral_radius().max(LOWER_GUARD);
    let mut hi = a.operator_norm().max(lo);
    let mut n = 0;
    while !inside(hi) {
        hi *= 2.0;
        n += 1;
        if n > MAX_DOUBLINGS {
            return Err(Error::Bracket);
        }
    }
    n = 0;
    while inside(lo) {
        lo *= 0.5;
        n += 1;
        if n > MAX_DOUBLINGS {
            return Err(Error::Bracket);
        }
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if inside(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    // g vanishes to second order at ∂𝔼, so the predicate alone resolves t
    // only to about √ε; the a priori bounds r(A) ≤ μ ≤ ‖A‖ are exact.
    let (r, norm) = (a.spectral_radius(), a.operator_norm().max(a.spectral_radius()));
    let lo = lo.clamp(r, norm);
    let hi = hi.clamp(r, norm);
    Ok(MuResult { value: 0.5 * (lo + hi), lo, hi, method: MuMethod::Bisection })
}

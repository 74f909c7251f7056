//! Geometry of the symmetrized bidisc.
//!
//! `Γ = {(z + w, zw) : |z|, |w| ≤ 1}` and its interior `𝔾` are described in
//! `(s, p)` = (sum, product) coordinates, so that a 2×2 matrix `A` has
//! spectral radius at most one exactly when `(tr A, det A) ∈ Γ`. The linear
//! fractional family `Φ_ω(s, p) = (2ωp − s) / (2 − ωs)`, `|ω| = 1`, maps `𝔾`
//! into the disc, and the Carathéodory distance on `𝔾` is the largest
//! pseudohyperbolic distance between the images of two points under `Φ_ω`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{cis, max_on_circle, root_radius, Mat2};
use crate::tol::Config;

/// A point of `ℂ²` in (trace, determinant) coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaPoint {
    pub s: Complex64,
    pub p: Complex64,
}

impl GammaPoint {
    pub const fn new(s: Complex64, p: Complex64) -> Self {
        GammaPoint { s, p }
    }

    pub fn from_real(s: f64, p: f64) -> Self {
        GammaPoint::new(Complex64::new(s, 0.0), Complex64::new(p, 0.0))
    }

    /// `(tr A, det A)`.
    pub fn of_matrix(a: &Mat2) -> Self {
        GammaPoint::new(a.trace(), a.det())
    }

    /// `(z + w, zw)`.
    pub fn symmetrize(z: Complex64, w: Complex64) -> Self {
        GammaPoint::new(z + w, z * w)
    }

    /// Largest root modulus of `λ² − sλ + p`.
    pub fn root_radius(&self) -> f64 {
        root_radius(self.s, self.p)
    }

    pub fn distance(&self, other: &GammaPoint) -> f64 {
        libm::sqrt((self.s - other.s).norm_sqr() + (self.p - other.p).norm_sqr())
    }
}

/// A tangent vector `(s₁, p₁)` at a base point `(s₀, p₀)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaTangent {
    pub base: GammaPoint,
    pub ds: Complex64,
    pub dp: Complex64,
}

/// `Φ_ω(s, p) = (2ωp − s) / (2 − ωs)`.
pub fn phi(omega: Complex64, z: &GammaPoint) -> Result<Complex64> {
    let den = Complex64::new(2.0, 0.0) - omega * z.s;
    if den.norm_sqr() == 0.0 {
        return Err(Error::Pole);
    }
    Ok((omega * z.p * 2.0 - z.s) / den)
}

/// Membership in the open symmetrized bidisc: both roots of `λ² − sλ + p`
/// have modulus below `1 − tol`.
pub fn in_open_g(z: &GammaPoint, tol: f64) -> bool {
    z.root_radius() < 1.0 - tol
}

/// Membership in the closed symmetrized bidisc: both roots have modulus at
/// most `1 + tol`.
pub fn in_closed_gamma(z: &GammaPoint, tol: f64) -> bool {
    z.root_radius() <= 1.0 + tol
}

/// `sup_ω |Φ_ω(s, p)|` over the unit circle. Fails with `ObjectiveSingular`
/// when some `Φ_ω` has a pole on the circle (`|s| ≥ 2`).
pub fn phi_sup(z: &GammaPoint, cfg: &Config) -> Result<f64> {
    if z.s.norm() >= 2.0 {
        return Err(Error::ObjectiveSingular);
    }
    let m =
        max_on_circle(|t| phi(cis(t), z).map(|v| v.norm()).unwrap_or(f64::INFINITY), cfg.circle_grid, cfg.refine_tol)?;
    Ok(m.value)
}

/// Membership in `𝔾` decided through the magic functions: `|s| < 2` and
/// `|Φ_ω(s, p)| < 1 − tol` for all sampled `ω`. Used to cross-check
/// [`in_open_g`].
pub fn in_open_g_by_phi(z: &GammaPoint, tol: f64, cfg: &Config) -> bool {
    match phi_sup(z, cfg) {
        Ok(v) => v < 1.0 - tol,
        Err(_) => false,
    }
}

/// Value and maximizing `ω` of the Carathéodory distance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaratheodoryValue {
    pub value: f64,
    pub omega: Complex64,
}

fn require_open(z: &GammaPoint, cfg: &Config) -> Result<()> {
    if in_open_g(z, cfg.decision_tol) {
        Ok(())
    } else {
        Err(Error::Domain("point is not in the open symmetrized bidisc"))
    }
}

/// Numerator and denominator quadratics in `ω` of `d(Φ_ω(z₁), Φ_ω(z₂))`,
/// each as `[c₀, c₁, c₂]`.
fn distance_quadratics(z1: &GammaPoint, z2: &GammaPoint) -> ([Complex64; 3], [Complex64; 3]) {
    let (s1, p1, s2, p2) = (z1.s, z1.p, z2.s, z2.p);
    let one = Complex64::new(1.0, 0.0);
    let num = [s1 - s2, (p2 - p1) * 2.0, s2 * p1 - s1 * p2];
    let den = [s2.conj() - s1 * p2.conj(), -(one - p1 * p2.conj()) * 2.0, s1 - s2.conj() * p1];
    (num, den)
}

fn quad_eval(c: &[Complex64; 3], w: Complex64) -> Complex64 {
    (c[2] * w + c[1]) * w + c[0]
}

/// Fails with `ObjectiveSingular` if the denominator quadratic comes within
/// rounding of zero somewhere on the grid.
fn prescan_denominator(den: &[Complex64; 3], cfg: &Config) -> Result<()> {
    let scale = den.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Err(Error::ObjectiveSingular);
    }
    let n = cfg.circle_grid.max(16);
    let floor = 1e-13 * scale;
    for k in 0..n {
        let w = cis(core::f64::consts::TAU * k as f64 / n as f64);
        if quad_eval(den, w).norm() <= floor {
            return Err(Error::ObjectiveSingular);
        }
    }
    Ok(())
}

/// Carathéodory distance on `𝔾` (without the customary `tanh⁻¹`):
/// `max_{|ω|=1} d(Φ_ω(z₁), Φ_ω(z₂))`, evaluated through its closed form as a
/// ratio of two quadratics in `ω`. Also returns a maximizing `ω`.
pub fn caratheodory_distance(z1: &GammaPoint, z2: &GammaPoint, cfg: &Config) -> Result<CaratheodoryValue> {
    require_open(z1, cfg)?;
    require_open(z2, cfg)?;
    let (num, den) = distance_quadratics(z1, z2);
    prescan_denominator(&den, cfg)?;
    let m = max_on_circle(
        |t| {
            let w = cis(t);
            quad_eval(&num, w).norm() / quad_eval(&den, w).norm()
        },
        cfg.circle_grid,
        cfg.refine_tol,
    )?;
    Ok(CaratheodoryValue { value: m.value.min(1.0), omega: cis(m.theta) })
}

/// Lempert function of `𝔾`. It coincides with the Carathéodory distance on
/// this domain, so this is the same computation under its second name.
pub fn lempert_distance(z1: &GammaPoint, z2: &GammaPoint, cfg: &Config) -> Result<f64> {
    caratheodory_distance(z1, z2, cfg).map(|c| c.value)
}

/// Infinitesimal Carathéodory metric of `𝔾` at `(s₀, p₀)` in direction
/// `(s₁, p₁)`:
///
/// `max_ω |(s₁p₀ − s₀p₁)ω² + 2ωp₁ − s₁| / |ω²(s₀ − s̄₀p₀) − 2ω(1 − |p₀|²) + s̄₀ − s₀p̄₀|`.
pub fn caratheodory_metric(t: &GammaTangent, cfg: &Config) -> Result<f64> {
    require_open(&t.base, cfg)?;
    let (s0, p0, s1, p1) = (t.base.s, t.base.p, t.ds, t.dp);
    let zero = Complex64::new(0.0, 0.0);
    if s1 == zero && p1 == zero {
        return Ok(0.0);
    }
    let num = [-s1, p1 * 2.0, s1 * p0 - s0 * p1];
    let den = [s0.conj() - s0 * p0.conj(), Complex64::new(-2.0 * (1.0 - p0.norm_sqr()), 0.0), s0 - s0.conj() * p0];
    prescan_denominator(&den, cfg)?;
    let m = max_on_circle(
        |th| {
            let w = cis(th);
            quad_eval(&num, w).norm() / quad_eval(&den, w).norm()
        },
        cfg.circle_grid,
        cfg.refine_tol,
    )?;
    Ok(m.value)
}

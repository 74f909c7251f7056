#![allow(dead_code)]

use musynth_core::numerics::{c64, Mat2};
use musynth_core::{Complex64, GammaPoint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform point of the disc of radius `r`.
pub fn disc_point(rng: &mut ChaCha8Rng, r: f64) -> Complex64 {
    let rho = r * rng.gen::<f64>().sqrt();
    Complex64::from_polar(rho, rng.gen_range(0.0..std::f64::consts::TAU))
}

pub fn unimodular(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::cis(rng.gen_range(0.0..std::f64::consts::TAU))
}

pub fn complex_in_square(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> Complex64 {
    c64(rng.gen_range(lo..hi), rng.gen_range(lo..hi))
}

pub fn random_matrix(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> Mat2 {
    Mat2::new(
        complex_in_square(rng, lo, hi),
        complex_in_square(rng, lo, hi),
        complex_in_square(rng, lo, hi),
        complex_in_square(rng, lo, hi),
    )
}

/// Random nonscalar matrix with spectral radius at most `rmax`.
pub fn random_contraction_like(rng: &mut ChaCha8Rng, rmax: f64) -> Mat2 {
    loop {
        let a = random_matrix(rng, -1.0, 1.0);
        let r = a.spectral_radius();
        if r == 0.0 || a.is_scalar() {
            continue;
        }
        let target = rmax * rng.gen::<f64>().max(0.05);
        return a.scale(c64(target / r, 0.0));
    }
}

/// Random point of 𝔾 with both roots in the disc of radius `r`.
pub fn g_point(rng: &mut ChaCha8Rng, r: f64) -> GammaPoint {
    GammaPoint::symmetrize(disc_point(rng, r), disc_point(rng, r))
}

/// Automorphism of 𝔾 induced by `m(z) = η(z − a)/(1 − āz)` acting on both
/// roots.
pub fn g_automorphism(a: Complex64, eta: Complex64, z: &GammaPoint) -> GammaPoint {
    let one = c64(1.0, 0.0);
    let ac = a.conj();
    let d = one - ac * z.s + ac * ac * z.p;
    let s = eta * ((one + a.norm_sqr()) * z.s - ac * z.p * 2.0 - a * 2.0) / d;
    let p = eta * eta * (z.p - a * z.s + a * a) / d;
    GammaPoint::new(s, p)
}

/// Complex geodesic of 𝔾 through the origin:
/// `λ ↦ (2(1−|α|²)λ/(1−ᾱ²λ), λ(λ−α²)/(1−ᾱ²λ))`.
pub fn alpha_geodesic(alpha: Complex64, l: Complex64) -> GammaPoint {
    let one = c64(1.0, 0.0);
    let b = alpha * alpha;
    let d = one - b.conj() * l;
    GammaPoint::new(l * 2.0 * (1.0 - alpha.norm_sqr()) / d, l * (l - b) / d)
}

/// A random complex geodesic: the α-family followed by an automorphism of 𝔾.
#[derive(Debug, Clone, Copy)]
pub struct RandomGeodesic {
    pub alpha: Complex64,
    pub a: Complex64,
    pub eta: Complex64,
}

impl RandomGeodesic {
    pub fn sample(rng: &mut ChaCha8Rng) -> Self {
        let alpha = Complex64::from_polar(rng.gen_range(0.1..0.9), rng.gen_range(0.0..std::f64::consts::TAU));
        RandomGeodesic { alpha, a: disc_point(rng, 0.6), eta: unimodular(rng) }
    }

    pub fn eval(&self, l: Complex64) -> GammaPoint {
        g_automorphism(self.a, self.eta, &alpha_geodesic(self.alpha, l))
    }
}

/// Two distinct random nodes in the disc of radius `r`, at least `sep` apart.
pub fn node_pair(rng: &mut ChaCha8Rng, r: f64, sep: f64) -> (Complex64, Complex64) {
    loop {
        let a = disc_point(rng, r);
        let b = disc_point(rng, r);
        if (a - b).norm() >= sep {
            return (a, b);
        }
    }
}

use num_complex::Complex64;

use crate::error::{Error, Result};

/// `(z − a) / (1 − ā z)`, the Blaschke factor vanishing at `a`.
pub fn blaschke_factor(a: Complex64, z: Complex64) -> Complex64 {
    (z - a) / (Complex64::new(1.0, 0.0) - a.conj() * z)
}

/// Pseudohyperbolic distance `|λ₁ − λ₂| / |1 − λ̄₂λ₁|` on the open unit disc.
pub fn pseudohyperbolic(l1: Complex64, l2: Complex64) -> Result<f64> {
    if !(l1.norm() < 1.0) || !(l2.norm() < 1.0) {
        return Err(Error::Domain("pseudohyperbolic distance needs points in the open unit disc"));
    }
    let num = (l1 - l2).norm();
    if num == 0.0 {
        return Ok(0.0);
    }
    Ok((num / (Complex64::new(1.0, 0.0) - l2.conj() * l1).norm()).min(1.0))
}

/// Linear fractional map `(aλ + b) / (cλ + d)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mobius {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl Mobius {
    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Mobius { a: one, b: zero, c: zero, d: one }
    }

    /// `η (λ − α) / (1 − ᾱλ)`.
    pub fn disc_automorphism(eta: Complex64, alpha: Complex64) -> Self {
        Mobius { a: eta, b: -eta * alpha, c: -alpha.conj(), d: Complex64::new(1.0, 0.0) }
    }

    /// The constant map `λ ↦ k`.
    pub fn constant(k: Complex64) -> Self {
        Mobius { a: Complex64::new(0.0, 0.0), b: k, c: Complex64::new(0.0, 0.0), d: Complex64::new(1.0, 0.0) }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        (self.a * z + self.b) / (self.c * z + self.d)
    }

    pub fn inverse(&self) -> Self {
        Mobius { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &Mobius) -> Self {
        Mobius {
            a: self.a * inner.a + self.b * inner.c,
            b: self.a * inner.b + self.b * inner.d,
            c: self.c * inner.a + self.d * inner.c,
            d: self.c * inner.b + self.d * inner.d,
        }
    }

    /// Analytic self-map of the disc with `λ₁ ↦ μ₁`, `λ₂ ↦ μ₂`, of the form
    /// `m_{μ₁}⁻¹(η·k·m_{λ₁}(λ))` with `k = d(μ₁, μ₂) / d(λ₁, λ₂) ≤ 1`.
    ///
    /// `k` is clamped to one to absorb rounding; the caller is responsible
    /// for `d(μ₁, μ₂) ≤ d(λ₁, λ₂)` holding up to that rounding.
    pub fn schwarz_pick_two_point(l1: Complex64, l2: Complex64, m1: Complex64, m2: Complex64) -> Result<Self> {
        let u2 = blaschke_factor(l1, l2);
        let v2 = blaschke_factor(m1, m2);
        if u2.norm_sqr() == 0.0 {
            return Err(Error::Domain("interpolation nodes coincide"));
        }
        // Multiplier taking u2 to v2; its modulus is k.
        let mut mult = v2 / u2;
        let k = mult.norm();
        if k > 1.0 {
            mult /= k;
        }
        let one = Complex64::new(1.0, 0.0);
        let inner = Mobius::disc_automorphism(one, l1);
        let scale = Mobius { a: mult, b: Complex64::new(0.0, 0.0), c: Complex64::new(0.0, 0.0), d: one };
        let outer = Mobius::disc_automorphism(one, m1).inverse();
        Ok(outer.after(&scale.after(&inner)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::c64;

    #[test]
    fn examples() {
        let beta = c64(0.3, -0.4);
        assert!((pseudohyperbolic(c64(0.0, 0.0), beta).unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(pseudohyperbolic(beta, beta).unwrap(), 0.0);
        assert!((pseudohyperbolic(c64(0.5, 0.0), c64(-0.5, 0.0)).unwrap() - 0.8).abs() < 1e-15);
    }

    #[test]
    fn outside_disc_is_rejected() {
        assert!(pseudohyperbolic(c64(1.0, 0.0), c64(0.0, 0.0)).is_err());
        assert!(pseudohyperbolic(c64(0.0, 0.0), c64(f64::NAN, 0.0)).is_err());
    }

    #[test]
    fn mobius_inverse_and_composition() {
        let m = Mobius::disc_automorphism(c64(0.6, 0.8), c64(0.2, -0.5));
        let z = c64(-0.3, 0.1);
        assert!((m.inverse().eval(m.eval(z)) - z).norm() < 1e-15);
        let n = Mobius::disc_automorphism(c64(1.0, 0.0), c64(-0.4, 0.0));
        assert!((m.after(&n).eval(z) - m.eval(n.eval(z))).norm() < 1e-15);
    }

    #[test]
    fn two_point_schwarz_pick_map_interpolates() {
        let (l1, l2) = (c64(0.1, 0.2), c64(-0.5, 0.3));
        let (m1, m2) = (c64(0.3, 0.0), c64(0.35, 0.05));
        let f = Mobius::schwarz_pick_two_point(l1, l2, m1, m2).unwrap();
        assert!((f.eval(l1) - m1).norm() < 1e-14);
        assert!((f.eval(l2) - m2).norm() < 1e-14);
        // self-map of the disc
        for k in 0..64 {
            let z = c64(0.999, 0.0) * crate::numerics::cis(k as f64 * 0.1);
            assert!(f.eval(z).norm() < 1.0);
        }
    }
}

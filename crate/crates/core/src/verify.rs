//! Sampling checks of candidate interpolants and closed-form witness maps.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::construct::MatrixInterpolant;
use crate::error::{Error, Result};
use crate::gamma::GammaPoint;
use crate::numerics::{cis, Mat2, Polynomial, RationalFunction};
use crate::tol::Config;

/// Grid maximum of the spectral radius and interpolation residuals.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub max_spectral_radius_on_grid: f64,
    pub interpolation_residuals: Vec<f64>,
    /// `(radial_n, angular_n)`.
    pub grid: (usize, usize),
    pub radius_tol: f64,
    pub residual_tol: f64,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.max_spectral_radius_on_grid <= 1.0 + self.radius_tol
            && self.interpolation_residuals.iter().all(|&r| r <= self.residual_tol)
    }
}

/// Polar sample points `(i/radial_n)·e^{2πik/angular_n}`, `0 ≤ i < radial_n`.
pub fn polar_grid(grid: (usize, usize)) -> impl Iterator<Item = Complex64> {
    let (nr, na) = (grid.0.max(1), grid.1.max(1));
    (0..nr).flat_map(move |i| {
        let r = i as f64 / nr as f64;
        let count = if i == 0 { 1 } else { na };
        (0..count).map(move |k| cis(core::f64::consts::TAU * k as f64 / na as f64) * r)
    })
}

/// Checks that `h = (s, p)` stays in `Γ` on the polar grid and meets the
/// constraints `h(λⱼ) = zⱼ`.
pub fn verify_gamma_map(
    h: &(RationalFunction, RationalFunction),
    constraints: &[(Complex64, GammaPoint)],
    grid: (usize, usize),
    cfg: &Config,
) -> Result<VerificationReport> {
    let mut max_r = 0.0f64;
    for l in polar_grid(grid) {
        let z = GammaPoint::new(h.0.eval(l)?, h.1.eval(l)?);
        max_r = max_r.max(z.root_radius());
    }
    let mut residuals = Vec::with_capacity(constraints.len());
    for (l, target) in constraints {
        let z = GammaPoint::new(h.0.eval(*l)?, h.1.eval(*l)?);
        residuals.push(z.distance(target));
    }
    Ok(VerificationReport {
        max_spectral_radius_on_grid: max_r,
        interpolation_residuals: residuals,
        grid,
        radius_tol: cfg.radius_tol,
        residual_tol: cfg.residual_tol,
    })
}

/// Checks `r(F(λ)) ≤ 1` on the polar grid and `F(λⱼ) = Wⱼ` (Frobenius norm).
pub fn verify_spectral_interpolant(
    f: &MatrixInterpolant,
    constraints: &[(Complex64, Mat2)],
    grid: (usize, usize),
    cfg: &Config,
) -> Result<VerificationReport> {
    let mut max_r = 0.0f64;
    for l in polar_grid(grid) {
        max_r = max_r.max(f.eval(l)?.spectral_radius());
    }
    let mut residuals = Vec::with_capacity(constraints.len());
    for (l, w) in constraints {
        residuals.push((f.eval(*l)? - *w).frobenius_norm());
    }
    Ok(VerificationReport {
        max_spectral_radius_on_grid: max_r,
        interpolation_residuals: residuals,
        grid,
        radius_tol: cfg.radius_tol,
        residual_tol: cfg.residual_tol,
    })
}

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// `f(λ) = (2(1−β)λ/(1−βλ), λ(λ−β)/(1−βλ))`, with `f(0) = (0, 0)` and
/// `f(β) = (2β/(1+β), 0)`.
pub fn witness_illconditioned(beta: Complex64) -> Result<(RationalFunction, RationalFunction)> {
    let n = beta.norm();
    if !(n > 0.0 && n < 1.0) {
        return Err(Error::Domain("need 0 < |β| < 1"));
    }
    let den = Polynomial::linear(ONE, -beta);
    let s = RationalFunction::new(Polynomial::linear(ZERO, (ONE - beta) * 2.0), den.clone())?;
    let p = RationalFunction::new(Polynomial::new(alloc::vec![ZERO, -beta, ONE]), den)?;
    Ok((s, p))
}

/// `h(λ) = (2(1−r)λ²/(1+rλ³), λ(λ³+r)/(1+rλ³))`.
pub fn witness_threepoint(r: f64) -> Result<(RationalFunction, RationalFunction)> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain("need 0 < r < 1"));
    }
    let c = |x: f64| Complex64::new(x, 0.0);
    let den = Polynomial::new(alloc::vec![ONE, ZERO, ZERO, c(r)]);
    let s = RationalFunction::new(Polynomial::new(alloc::vec![ZERO, ZERO, c(2.0 * (1.0 - r))]), den.clone())?;
    let p = RationalFunction::new(Polynomial::new(alloc::vec![ZERO, c(r), ZERO, ZERO, ONE]), den)?;
    Ok((s, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::Provenance;
    use crate::numerics::c64;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn constant_map_passes() {
        let h = (RationalFunction::constant(ZERO), RationalFunction::constant(ZERO));
        let rep =
            verify_gamma_map(&h, &[(c64(0.3, 0.0), GammaPoint::from_real(0.0, 0.0))], (101, 101), &cfg()).unwrap();
        assert!(rep.pass());
    }

    #[test]
    fn linear_map_leaves_gamma() {
        let h = (RationalFunction::x().scale(c64(3.0, 0.0)), RationalFunction::constant(ZERO));
        let rep = verify_gamma_map(&h, &[], (101, 101), &cfg()).unwrap();
        assert!(!rep.pass());
        let rep = verify_gamma_map(&h, &[], (1, 8), &cfg()).unwrap();
        assert!(rep.pass());
    }

    #[test]
    fn witness_values() {
        for b in [0.1, 0.5, 0.9] {
            let beta = c64(b, 0.0);
            let h = witness_illconditioned(beta).unwrap();
            assert_eq!(h.0.eval(ZERO).unwrap(), ZERO);
            assert_eq!(h.1.eval(ZERO).unwrap(), ZERO);
            assert!((h.0.eval(beta).unwrap() - c64(2.0 * b / (1.0 + b), 0.0)).norm() < 1e-15);
            assert_eq!(h.1.eval(beta).unwrap(), ZERO);
            let rep = verify_gamma_map(&h, &[], (101, 101), &cfg()).unwrap();
            assert!(rep.pass(), "{rep:?}");
        }
        let h = witness_threepoint(0.5).unwrap();
        assert_eq!(h.0.eval(ZERO).unwrap(), ZERO);
        assert!(verify_gamma_map(&h, &[], (101, 101), &cfg()).unwrap().pass());
        assert!(witness_illconditioned(ZERO).is_err());
        assert!(witness_threepoint(1.0).is_err());
    }

    #[test]
    fn matrix_examples() {
        let w = Mat2::from_real([[0.2, 3.0], [0.0, -0.4]]);
        let f = MatrixInterpolant {
            entries: [
                [RationalFunction::constant(w.a11), RationalFunction::constant(w.a12)],
                [RationalFunction::constant(w.a21), RationalFunction::constant(w.a22)],
            ],
            provenance: Provenance::CompanionForm,
        };
        let rep = verify_spectral_interpolant(&f, &[(c64(0.1, 0.0), w)], (101, 101), &cfg()).unwrap();
        assert!(rep.pass());

        let f = MatrixInterpolant {
            entries: [
                [RationalFunction::x().scale(c64(2.0, 0.0)), RationalFunction::constant(ZERO)],
                [RationalFunction::constant(ZERO), RationalFunction::constant(ZERO)],
            ],
            provenance: Provenance::CompanionForm,
        };
        let rep = verify_spectral_interpolant(&f, &[], (101, 101), &cfg()).unwrap();
        assert!(!rep.pass());
    }

    #[test]
    fn pole_inside_disc_is_reported() {
        let h = (
            RationalFunction::new(Polynomial::one(), Polynomial::linear(c64(-0.5, 0.0), ONE)).unwrap(),
            RationalFunction::constant(ZERO),
        );
        assert_eq!(verify_gamma_map(&h, &[], (2, 1), &cfg()), Err(Error::Evaluation));
    }
}

use alloc::vec::Vec;
use core::f64::consts::TAU;

use crate::error::{Error, Result};

/// Location and value of a maximum found on the unit circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleMax {
    /// Angle in `[0, 2π)`.
    pub theta: f64,
    pub value: f64,
}

/// Maximizes a smooth `2π`-periodic objective.
///
/// A uniform grid of `grid_n` angles locates the candidates; up to four grid
/// local maxima (largest first) are then refined by golden-section search on
/// their bracketing cells until the bracket is narrower than `refine_tol`.
/// The returned value is never below the grid maximum.
pub fn max_on_circle(objective: impl Fn(f64) -> f64, grid_n: usize, refine_tol: f64) -> Result<CircleMax> {
    let n = grid_n.max(16);
    let h = TAU / n as f64;
    let mut vals = Vec::with_capacity(n);
    for k in 0..n {
        let v = objective(k as f64 * h);
        if !v.is_finite() {
            return Err(Error::ObjectiveSingular);
        }
        vals.push(v);
    }

    let mut peaks: Vec<usize> = (0..n)
        .filter(|&k| {
            let prev = vals[(k + n - 1) % n];
            let next = vals[(k + 1) % n];
            vals[k] >= prev && vals[k] >= next
        })
        .collect();
    // Stable sort keeps the lowest index first among ties.
    peaks.sort_by(|&i, &j| vals[j].total_cmp(&vals[i]));
    peaks.truncate(4);

    let first = peaks[0];
    let mut best = CircleMax { theta: first as f64 * h, value: vals[first] };
    for &k in &peaks {
        let centre = k as f64 * h;
        let (theta, value) = golden_section_max(&objective, centre - h, centre + h, refine_tol)?;
        if value > best.value {
            best = CircleMax { theta, value };
        }
    }
    best.theta = libm::fmod(best.theta, TAU);
    if best.theta < 0.0 {
        best.theta += TAU;
    }
    Ok(best)
}

/// Golden-section search for a maximum of `f` on `[lo, hi]`.
pub fn golden_section_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> Result<(f64, f64)> {
    let inv_phi = (libm::sqrt(5.0) - 1.0) * 0.5;
    let eval = |x: f64| {
        let v = f(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::ObjectiveSingular)
        }
    };
    let mut c = hi - inv_phi * (hi - lo);
    let mut d = lo + inv_phi * (hi - lo);
    let mut fc = eval(c)?;
    let mut fd = eval(d)?;
    let tol = tol.max(1e-15);
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        if fc > fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = eval(c)?;
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = eval(d)?;
        }
    }
    Ok(if fc >= fd { (c, fc) } else { (d, fd) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn cosine_peaks_at_zero() {
        let m = max_on_circle(|t| t.cos(), 4096, 1e-12).unwrap();
        let dist = m.theta.min(TAU - m.theta);
        assert!(dist < 1e-6, "theta {}", m.theta);
        assert!((m.value - 1.0).abs() < 1e-10);
    }

    #[test]
    fn constant_objective_returns_first_grid_point() {
        let m = max_on_circle(|_| 0.25, 64, 1e-12).unwrap();
        assert_eq!(m.value, 0.25);
        assert_eq!(m.theta, 0.0);
    }

    #[test]
    fn phi_modulus_at_fixed_point_is_constant() {
        // |Φ_ω(0, 0.5)| = |2ω·0.5| / |2| = 0.5 for every ω.
        let obj = |t: f64| {
            let w = Complex64::cis(t);
            ((w * 2.0 * 0.5) / Complex64::new(2.0, 0.0)).norm()
        };
        let m = max_on_circle(obj, 4096, 1e-12).unwrap();
        assert!((m.value - 0.5).abs() < 1e-15);
    }

    #[test]
    fn non_finite_objective_is_reported() {
        let r = max_on_circle(|t| if t > 3.0 { f64::NAN } else { 0.0 }, 64, 1e-12);
        assert_eq!(r, Err(Error::ObjectiveSingular));
    }

    #[test]
    fn refinement_beats_grid_between_nodes() {
        // Peak sits strictly between grid points.
        let peak = 0.123_456_789;
        let m = max_on_circle(|t| (t - peak).cos(), 64, 1e-12).unwrap();
        assert!((m.theta - peak).abs() < 1e-6);
        assert!(m.value >= (TAU / 64.0 - peak).cos());
    }
}

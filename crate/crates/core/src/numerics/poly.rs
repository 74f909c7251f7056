use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Polynomial with complex coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    /// Trailing exact zeros are dropped; the zero polynomial keeps one
    /// coefficient.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == ZERO {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(ZERO);
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: Complex64) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn zero() -> Self {
        Polynomial::constant(ZERO)
    }

    pub fn one() -> Self {
        Polynomial::constant(ONE)
    }

    /// `a + b·λ`.
    pub fn linear(a: Complex64, b: Complex64) -> Self {
        Polynomial::new(vec![a, b])
    }

    /// The identity polynomial `λ`.
    pub fn x() -> Self {
        Polynomial::linear(ZERO, ONE)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == ZERO
    }

    pub fn leading(&self) -> Complex64 {
        *self.coeffs.last().unwrap()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Polynomial::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Polynomial::one(), |acc, _| &acc * self)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Polynomial::zero();
        }
        Polynomial::new(self.coeffs.iter().enumerate().skip(1).map(|(k, &c)| c * k as f64).collect())
    }

    /// Divides by `(λ − root)`, returning quotient and remainder
    /// (the remainder equals the value at `root`).
    pub fn divide_by_root(&self, root: Complex64) -> (Polynomial, Complex64) {
        let n = self.coeffs.len();
        if n == 1 {
            return (Polynomial::zero(), self.coeffs[0]);
        }
        let mut q = vec![ZERO; n - 1];
        let mut carry = self.coeffs[n - 1];
        for k in (0..n - 1).rev() {
            q[k] = carry;
            carry = self.coeffs[k] + carry * root;
        }
        (Polynomial::new(q), carry)
    }

    /// Largest coefficient modulus.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Roots of a polynomial of degree at most two. Returns an empty list for
    /// constants; degree three and higher are not supported.
    pub fn roots_upto_quadratic(&self) -> Option<Vec<Complex64>> {
        match self.degree() {
            0 => Some(Vec::new()),
            1 => Some(vec![-self.coeffs[0] / self.coeffs[1]]),
            2 => {
                let a = self.coeffs[2];
                let (r1, r2) = super::quadratic_roots(-self.coeffs[1] / a, self.coeffs[0] / a);
                Some(vec![r1, r2])
            }
            _ => None,
        }
    }

    /// `Σ c_k (aλ+b)^k (cλ+d)^{n−k}` where `n ≥ degree`: the numerator of the
    /// polynomial composed with `(aλ+b)/(cλ+d)` over the common denominator
    /// `(cλ+d)^n`.
    fn homogenized_compose(&self, n: usize, top: &Polynomial, bottom: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == ZERO {
                continue;
            }
            let term = &top.pow(k) * &bottom.pow(n - k);
            acc = &acc + &term.scale(c);
        }
        acc
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new(
            (0..n)
                .map(|k| self.coeffs.get(k).copied().unwrap_or(ZERO) + o.coeffs.get(k).copied().unwrap_or(ZERO))
                .collect(),
        )
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        self + &(-o)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|&c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        let mut out = vec![ZERO; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

/// Quotient of two polynomials. No cancellation of common factors is
/// attempted.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFunction {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("rational function denominator is identically zero"));
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: Complex64) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    /// The identity function `λ`.
    pub fn x() -> Self {
        Self::from_poly(Polynomial::x())
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let d = self.den.eval(z);
        if d.norm_sqr() == 0.0 {
            return Err(Error::Evaluation);
        }
        let v = self.num.eval(z) / d;
        if v.re.is_finite() && v.im.is_finite() {
            Ok(v)
        } else {
            Err(Error::Evaluation)
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn degree(&self) -> usize {
        self.num.degree().max(self.den.degree())
    }

    /// Reciprocal; fails if the numerator is identically zero.
    pub fn recip(&self) -> Result<Self> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    /// `self((aλ + b) / (cλ + d))`.
    pub fn compose_mobius(&self, m: &super::Mobius) -> Self {
        let top = Polynomial::linear(m.b, m.a);
        let bottom = Polynomial::linear(m.d, m.c);
        let n = self.degree();
        RationalFunction {
            num: self.num.homogenized_compose(n, &top, &bottom),
            den: self.den.homogenized_compose(n, &top, &bottom),
        }
    }

    /// Cancels a common root of numerator and denominator when both vanish
    /// there to within `rel_tol` of their coefficient scale.
    pub fn cancel_root(&self, root: Complex64, rel_tol: f64) -> Self {
        let (qn, rn) = self.num.divide_by_root(root);
        let (qd, rd) = self.den.divide_by_root(root);
        let scale_n = self.num.max_abs_coeff().max(f64::MIN_POSITIVE);
        let scale_d = self.den.max_abs_coeff().max(f64::MIN_POSITIVE);
        if self.den.degree() >= 1 && rn.norm() <= rel_tol * scale_n && rd.norm() <= rel_tol * scale_d && !qd.is_zero() {
            RationalFunction { num: qn, den: qd }
        } else {
            self.clone()
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.den == o.den {
            return RationalFunction { num: &self.num + &o.num, den: self.den.clone() };
        }
        RationalFunction { num: &(&self.num * &o.den) + &(&o.num * &self.den), den: &self.den * &o.den }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &(-o)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        RationalFunction { num: &self.num * &o.num, den: &self.den * &o.den }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{c64, Mobius};

    fn p(c: &[(f64, f64)]) -> Polynomial {
        Polynomial::new(c.iter().map(|&(a, b)| c64(a, b)).collect())
    }

    #[test]
    fn trims_and_reports_degree() {
        let q = p(&[(1.0, 0.0), (2.0, 0.0), (0.0, 0.0)]);
        assert_eq!(q.degree(), 1);
        assert!(Polynomial::new(vec![]).is_zero());
    }

    #[test]
    fn horner_and_products() {
        let a = p(&[(1.0, 0.0), (1.0, 0.0)]);
        let b = p(&[(-1.0, 0.0), (1.0, 0.0)]);
        let prod = &a * &b;
        assert_eq!(prod.coeffs(), &[c64(-1.0, 0.0), c64(0.0, 0.0), c64(1.0, 0.0)]);
        assert_eq!(prod.eval(c64(0.0, 1.0)), c64(-2.0, 0.0));
    }

    #[test]
    fn synthetic_division_recovers_factor() {
        let root = c64(0.3, -0.7);
        let f = &p(&[(2.0, 1.0), (0.5, 0.0)]) * &Polynomial::linear(-root, c64(1.0, 0.0));
        let (q, r) = f.divide_by_root(root);
        assert!(r.norm() < 1e-15);
        assert!((q.eval(c64(0.1, 0.2)) - c64(2.0, 1.0) - c64(0.05, 0.1)).norm() < 1e-15);
    }

    #[test]
    fn quadratic_roots_match_factors() {
        let f = &Polynomial::linear(c64(-0.5, 0.0), c64(1.0, 0.0)) * &Polynomial::linear(c64(0.0, 2.0), c64(1.0, 0.0));
        let roots = f.roots_upto_quadratic().unwrap();
        for r in roots {
            assert!(f.eval(r).norm() < 1e-14);
        }
    }

    #[test]
    fn composition_with_mobius_matches_pointwise() {
        let r = RationalFunction::new(p(&[(0.0, 0.0), (1.0, 0.0), (0.5, 0.2)]), p(&[(1.0, 0.0), (-0.3, 0.1)])).unwrap();
        let m = Mobius { a: c64(0.7, 0.1), b: c64(0.2, -0.3), c: c64(-0.1, 0.4), d: c64(1.0, 0.0) };
        let rm = r.compose_mobius(&m);
        for &z in &[c64(0.1, 0.2), c64(-0.5, 0.3), c64(0.0, -0.9)] {
            let direct = r.eval(m.eval(z)).unwrap();
            assert!((rm.eval(z).unwrap() - direct).norm() < 1e-13);
        }
    }

    #[test]
    fn evaluation_at_pole_is_an_error() {
        let r = RationalFunction::new(Polynomial::one(), p(&[(-0.5, 0.0), (1.0, 0.0)])).unwrap();
        assert_eq!(r.eval(c64(0.5, 0.0)), Err(Error::Evaluation));
    }
}

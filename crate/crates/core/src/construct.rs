//! Extremal Γ-valued geodesics through two points of `𝔾` and their lift to
//! matrix-valued spectral interpolants.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::decide::{decide_snp_2x2, SnpInstance};
use crate::error::{Error, Result};
use crate::gamma::{caratheodory_distance, phi, GammaPoint};
use crate::numerics::{blaschke_factor, cis, Mat2, Mobius, Polynomial, RationalFunction};
use crate::tol::Config;

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// `c · ∏ (λ − aₖ)/(1 − āₖλ)` with at most two zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct BlaschkeProduct {
    pub zeros: Vec<Complex64>,
    pub constant: Complex64,
}

impl BlaschkeProduct {
    pub fn new(zeros: Vec<Complex64>, constant: Complex64) -> Result<Self> {
        if zeros.len() > 2 || zeros.iter().any(|a| !(a.norm() < 1.0)) {
            return Err(Error::Domain("Blaschke zeros must be at most two points of the open disc"));
        }
        if !((constant.norm() - 1.0).abs() < 1e-12) {
            return Err(Error::Domain("Blaschke constant must be unimodular"));
        }
        Ok(BlaschkeProduct { zeros, constant })
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.zeros.iter().fold(self.constant, |acc, &a| acc * blaschke_factor(a, z))
    }

    pub fn to_rational(&self) -> RationalFunction {
        let mut num = Polynomial::constant(self.constant);
        let mut den = Polynomial::one();
        for &a in &self.zeros {
            num = &num * &Polynomial::linear(-a, ONE);
            den = &den * &Polynomial::linear(ONE, -a.conj());
        }
        RationalFunction { num, den }
    }
}

/// A complex geodesic `λ ↦ (s(λ), p(λ))` of `𝔾` with
/// `s = 2(ω₀p − λ)/(1 − ω₀λ)`, so that `Φ_{ω₀}(s(λ), p(λ)) = λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct Geodesic {
    pub omega0: Complex64,
    pub p: BlaschkeProduct,
    pub s: RationalFunction,
}

impl Geodesic {
    pub fn p_rational(&self) -> RationalFunction {
        self.p.to_rational()
    }

    pub fn eval(&self, z: Complex64) -> Result<GammaPoint> {
        Ok(GammaPoint::new(self.s.eval(z)?, self.p.eval(z)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// `[[0, 1], [−p, s]]`: matches the targets only up to similarity.
    CompanionForm,
    /// `P(λ)⁻¹ C(λ) P(λ)` with `F(λⱼ) = Wⱼ`.
    SimilarityLifted,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::CompanionForm => "CompanionForm",
            Provenance::SimilarityLifted => "SimilarityLifted",
        }
    }
}

/// A 2×2 matrix of rational functions.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixInterpolant {
    pub entries: [[RationalFunction; 2]; 2],
    pub provenance: Provenance,
}

impl MatrixInterpolant {
    pub fn eval(&self, z: Complex64) -> Result<Mat2> {
        let e = &self.entries;
        Ok(Mat2::new(e[0][0].eval(z)?, e[0][1].eval(z)?, e[1][0].eval(z)?, e[1][1].eval(z)?))
    }

    /// `[[0, 1], [−p, s]]`.
    pub fn companion(s: &RationalFunction, p: &RationalFunction) -> Self {
        MatrixInterpolant {
            entries: [[RationalFunction::constant(ZERO), RationalFunction::constant(ONE)], [-p, s.clone()]],
            provenance: Provenance::CompanionForm,
        }
    }
}

/// Maximizing `ω` of the Carathéodory distance between two distinct points.
pub fn find_extremal_omega(z1: &GammaPoint, z2: &GammaPoint, cfg: &Config) -> Result<Complex64> {
    if z1 == z2 {
        return Err(Error::Domain("points must be distinct"));
    }
    Ok(caratheodory_distance(z1, z2, cfg)?.omega)
}

/// `(z − a)/(1 − āz)`.
fn m(a: Complex64, z: Complex64) -> Complex64 {
    blaschke_factor(a, z)
}

/// Blaschke product of degree at most two with `p(λ₁) = p₁`, `p(λ₂) = p₂`
/// and `p(τ) = σ` for unimodular `τ`, `σ`.
///
/// One Schur step writes `p = m_{p₁}⁻¹(m_{λ₁} · q)` with `q` inner of degree
/// at most one, `q(λ₂) = w₂ := m_{p₁}(p₂)/m_{λ₁}(λ₂)` and
/// `q(τ) = σ′ := m_{p₁}(σ)/m_{λ₁}(τ)`. For `|w₂| < 1` the map
/// `q = m_{w₂}⁻¹(c · m_{λ₂})` has `q(λ₂) = w₂` for every unimodular `c`, and
/// the boundary condition fixes `c = m_{w₂}(σ′)/m_{λ₂}(τ)` uniquely.
pub fn interpolate_blaschke(
    l1: Complex64,
    p1: Complex64,
    l2: Complex64,
    p2: Complex64,
    boundary_node: Complex64,
    boundary_value: Complex64,
) -> Result<BlaschkeProduct> {
    if !(l1.norm() < 1.0 && l2.norm() < 1.0) || l1 == l2 {
        return Err(Error::Domain("nodes must be distinct points of the open disc"));
    }
    if !(p1.norm() < 1.0 && p2.norm() < 1.0) {
        return Err(Error::Domain("interior values must lie in the open disc"));
    }
    let (tau, sigma) = (boundary_node, boundary_value);
    if (tau.norm() - 1.0).abs() > 1e-12 || (sigma.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::Domain("boundary data must be unimodular"));
    }
    let w2 = m(p1, p2) / m(l1, l2);
    let sp = m(p1, sigma) / m(l1, tau);
    let wn = w2.norm();
    if wn > 1.0 + 1e-9 {
        return Err(Error::NoSolution);
    }

    // q = qn / qd as polynomials in λ.
    let (qn, qd) = if wn >= 1.0 - 1e-9 {
        let q = w2 / wn;
        if (sp / sp.norm() - q).norm() > 1e-6 {
            return Err(Error::DegenerateData);
        }
        (Polynomial::constant(q), Polynomial::one())
    } else {
        let c = m(w2, sp) / m(l2, tau);
        let c = c / c.norm();
        let ml2_num = Polynomial::linear(-l2, ONE);
        let ml2_den = Polynomial::linear(ONE, -l2.conj());
        (&ml2_num.scale(c) + &ml2_den.scale(w2), &ml2_den + &ml2_num.scale(w2.conj() * c))
    };
    let a = Polynomial::linear(-l1, ONE);
    let b = Polynomial::linear(ONE, -l1.conj());
    let an = &a * &qn;
    let bd = &b * &qd;
    let num = &an + &bd.scale(p1);
    let den = &bd + &an.scale(p1.conj());

    let zeros = num.roots_upto_quadratic().ok_or(Error::Domain("unexpected Blaschke degree"))?;
    let zeros: Vec<Complex64> =
        zeros.into_iter().map(|z| if z.norm() >= 1.0 { z / z.norm() * (1.0 - f64::EPSILON) } else { z }).collect();
    let shape = BlaschkeProduct { zeros, constant: ONE };
    // Fix the constant at whichever data point is farthest from the zeros.
    let rat = RationalFunction { num, den };
    let mut best = (0.0, ONE);
    for (node, value) in [(l1, p1), (l2, p2), (tau, rat.eval(tau).unwrap_or(sigma))] {
        let b0 = shape.eval(node);
        if b0.norm() > best.0 {
            best = (b0.norm(), value / b0);
        }
    }
    let constant = best.1 / best.1.norm();
    Ok(BlaschkeProduct { zeros: shape.zeros, constant })
}

/// Assembles `s(λ) = 2(ω₀p(λ) − λ)/(1 − ω₀λ)` at coefficient level and
/// cancels the common root at `ω̄₀` (present when `p(ω̄₀) = ω̄₀²`).
pub fn build_geodesic(omega0: Complex64, p: BlaschkeProduct) -> Result<Geodesic> {
    if (omega0.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::Domain("ω₀ must be unimodular"));
    }
    let pr = p.to_rational();
    let num = (&pr.num.scale(omega0) - &(&pr.den * &Polynomial::x())).scale(Complex64::new(2.0, 0.0));
    let den = &pr.den * &Polynomial::linear(ONE, -omega0);
    let s = RationalFunction { num, den }.cancel_root(omega0.conj(), 1e-7);
    Ok(Geodesic { omega0, p, s })
}

/// Geodesic through `z₁` and `z₂` passing through them at `Φ_{ω₀}(z₁)` and
/// `Φ_{ω₀}(z₂)`.
fn geodesic_through(z1: &GammaPoint, z2: &GammaPoint, cfg: &Config) -> Result<(Geodesic, Complex64, Complex64)> {
    let omega0 = find_extremal_omega(z1, z2, cfg)?;
    let mu1 = phi(omega0, z1)?;
    let mu2 = phi(omega0, z2)?;
    let oc = omega0.conj();
    let p = interpolate_blaschke(mu1, z1.p, mu2, z2.p, oc, oc * oc)?;
    Ok((build_geodesic(omega0, p)?, mu1, mu2))
}

/// Output of [`construct_snp_interpolant`].
#[derive(Debug, Clone, PartialEq)]
pub struct SnpConstruction {
    pub geodesic: Geodesic,
    /// Disc map `ν` with `h = g ∘ ν`; an automorphism in the extremal case.
    pub reparam: Mobius,
    /// `h = (s, p)` with `h(λⱼ) = (tr Wⱼ, det Wⱼ)`.
    pub h: (RationalFunction, RationalFunction),
    pub interpolant: MatrixInterpolant,
    pub extremal: bool,
    pub detail: String,
}

/// Row-cyclic change of basis `P = [u; uW]`, satisfying `P W = C P` for the
/// companion matrix `C` of `W`. Picks the best conditioned of four `u`.
fn cyclic_basis(w: &Mat2) -> Option<Mat2> {
    let cands = [(ONE, ZERO), (ZERO, ONE), (ONE, ONE), (ONE, -ONE)];
    let mut best: Option<(f64, Mat2)> = None;
    for (u1, u2) in cands {
        let r1 = u1 * w.a11 + u2 * w.a21;
        let r2 = u1 * w.a12 + u2 * w.a22;
        let p = Mat2::new(u1, u2, r1, r2);
        let q = p.det().norm() / p.frobenius_norm_sqr();
        if q > 0.0 && best.is_none_or(|(b, _)| q > b) {
            best = Some((q, p));
        }
    }
    best.map(|(_, p)| p)
}

fn mat_poly(m: &Mat2) -> [[Polynomial; 2]; 2] {
    [
        [Polynomial::constant(m.a11), Polynomial::constant(m.a12)],
        [Polynomial::constant(m.a21), Polynomial::constant(m.a22)],
    ]
}

/// `P(λ) = P₁ + (λ − λ₁)/(λ₂ − λ₁) · (cP₂ − P₁)` as polynomial entries.
fn pencil(p1: &Mat2, p2: &Mat2, c: Complex64, l1: Complex64, l2: Complex64) -> [[Polynomial; 2]; 2] {
    let diff = p2.scale(c) - *p1;
    let k = ONE / (l2 - l1);
    let t = Polynomial::linear(-l1 * k, k);
    let base = mat_poly(p1);
    let mut out = base.clone();
    let d = mat_poly(&diff);
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = &base[i][j] + &(&t * &d[i][j]);
        }
    }
    out
}

fn det_poly(p: &[[Polynomial; 2]; 2]) -> Polynomial {
    &(&p[0][0] * &p[1][1]) - &(&p[0][1] * &p[1][0])
}

/// Smallest modulus of a zero of `det P`; infinite when there are none.
fn min_root_modulus(d: &Polynomial) -> f64 {
    if d.is_zero() {
        return 0.0;
    }
    match d.roots_upto_quadratic() {
        Some(r) => r.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min),
        None => 0.0,
    }
}

const LIFT_MODULI: usize = 64;
const LIFT_PHASES: usize = 64;

/// Attempts `F = P⁻¹ C P` with `F(λⱼ) = Wⱼ` and `det P` zero-free on the
/// closed disc.
fn similarity_lift(comp: &MatrixInterpolant, inst: &SnpInstance) -> Option<MatrixInterpolant> {
    let p1 = cyclic_basis(&inst.w1)?;
    let p2 = cyclic_basis(&inst.w2)?;
    let (l1, l2) = (inst.lambda1, inst.lambda2);
    let mut best: Option<(f64, Complex64)> = None;
    for i in 0..LIFT_MODULI {
        let modulus = libm::pow(10.0, -3.0 + 6.0 * i as f64 / (LIFT_MODULI - 1) as f64);
        for k in 0..LIFT_PHASES {
            let c = cis(core::f64::consts::TAU * k as f64 / LIFT_PHASES as f64) * modulus;
            let r = min_root_modulus(&det_poly(&pencil(&p1, &p2, c, l1, l2)));
            if best.is_none_or(|(b, _)| r > b) {
                best = Some((r, c));
            }
        }
    }
    // The identity scaling is tried last so that equal bases stay constant.
    let r1 = min_root_modulus(&det_poly(&pencil(&p1, &p2, ONE, l1, l2)));
    if best.is_none_or(|(b, _)| r1 >= b) {
        best = Some((r1, ONE));
    }
    let (r, c) = best?;
    if !(r > 1.0 + 1e-6) {
        return None;
    }
    let pp = pencil(&p1, &p2, c, l1, l2);
    let det = det_poly(&pp);
    let rf = |q: &Polynomial| RationalFunction::from_poly(q.clone());
    let adj = [[rf(&pp[1][1]), rf(&-&pp[0][1])], [rf(&-&pp[1][0]), rf(&pp[0][0])]];
    let pr = [[rf(&pp[0][0]), rf(&pp[0][1])], [rf(&pp[1][0]), rf(&pp[1][1])]];
    let mul = |a: &[[RationalFunction; 2]; 2], b: &[[RationalFunction; 2]; 2]| {
        let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
    };
    let cp = mul(&comp.entries, &pr);
    let full = mul(&adj, &cp);
    let inv_det = RationalFunction { num: Polynomial::one(), den: det };
    let entries = [[&full[0][0] * &inv_det, &full[0][1] * &inv_det], [&full[1][0] * &inv_det, &full[1][1] * &inv_det]];
    let f = MatrixInterpolant { entries, provenance: Provenance::SimilarityLifted };
    for (l, w) in [(l1, inst.w1), (l2, inst.w2)] {
        let v = f.eval(l).ok()?;
        if (v - w).frobenius_norm() > 1e-8 * (1.0 + w.frobenius_norm()) {
            return None;
        }
    }
    Some(f)
}

fn compose(g: &Geodesic, nu: &Mobius) -> (RationalFunction, RationalFunction) {
    (g.s.compose_mobius(nu), g.p_rational().compose_mobius(nu))
}

/// Solution of a solvable two-point spectral Nevanlinna-Pick problem with
/// nonscalar targets: a Γ-valued `h = g ∘ ν` through `(tr Wⱼ, det Wⱼ)` and a
/// matrix lift of it.
///
/// `g` is an extremal geodesic through both targets parametrized so that
/// `g(μⱼ) = zⱼ` with `μⱼ = Φ_{ω₀}(zⱼ)`, and `ν` is the Schwarz-Pick map
/// `λⱼ ↦ μⱼ`, which is an automorphism exactly in the extremal case.
pub fn construct_snp_interpolant(inst: &SnpInstance, cfg: &Config) -> Result<SnpConstruction> {
    let verdict = decide_snp_2x2(inst, cfg)?;
    if !verdict.status.is_solvable() {
        return Err(Error::NotSolvable);
    }
    if inst.w1.is_scalar() || inst.w2.is_scalar() {
        return Err(Error::NonscalarRequired);
    }
    let z1 = GammaPoint::of_matrix(&inst.w1);
    let z2 = GammaPoint::of_matrix(&inst.w2);
    let extremal = verdict.margin.abs() <= cfg.boundary_band;
    let mut detail = String::new();

    let (geodesic, reparam) = if z1 == z2 {
        // Any geodesic through z₁, evaluated at the constant preimage.
        let other = if z1 == GammaPoint::from_real(0.0, 0.0) {
            GammaPoint::from_real(0.0, 0.5)
        } else {
            GammaPoint::from_real(0.0, 0.0)
        };
        let (g, mu1, _) = geodesic_through(&z1, &other, cfg)?;
        detail.push_str("equal targets: constant reparametrization of a geodesic through the common point");
        (g, Mobius::constant(mu1))
    } else {
        let (g, mu1, mu2) = geodesic_through(&z1, &z2, cfg)?;
        let nu = Mobius::schwarz_pick_two_point(inst.lambda1, inst.lambda2, mu1, mu2)?;
        if extremal {
            detail.push_str("extremal data: geodesic with automorphic reparametrization");
        } else {
            detail.push_str(&format!(
                "sub-extremal data (margin {:e}): extremal geodesic precomposed with a contractive disc map",
                verdict.margin
            ));
        }
        (g, nu)
    };
    let h = compose(&geodesic, &reparam);
    let comp = MatrixInterpolant::companion(&h.0, &h.1);
    let interpolant = match similarity_lift(&comp, inst) {
        Some(f) => f,
        None => {
            detail.push_str("; similarity lift failed, companion form returned (matches targets up to similarity)");
            comp
        }
    };
    Ok(SnpConstruction { geodesic, reparam, h, interpolant, extremal, detail })
}

/// Samples of `h` at the given nodes.
pub fn sample_pair(h: &(RationalFunction, RationalFunction), nodes: &[Complex64]) -> Result<Vec<GammaPoint>> {
    let mut out = vec![];
    for &l in nodes {
        out.push(GammaPoint::new(h.0.eval(l)?, h.1.eval(l)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::in_closed_gamma;
    use crate::numerics::c64;

    #[test]
    fn identity_interpolant() {
        let b = interpolate_blaschke(c64(0.0, 0.0), c64(0.0, 0.0), c64(0.3, 0.0), c64(0.3, 0.0), ONE, ONE).unwrap();
        for z in [c64(0.1, 0.2), c64(-0.5, 0.3), c64(0.7, 0.0)] {
            assert!((b.eval(z) - z).norm() < 1e-14);
        }
    }

    #[test]
    fn zero_data_with_boundary_condition() {
        let w = cis(0.7);
        let (tau, sigma) = (w.conj(), w.conj() * w.conj());
        let b = interpolate_blaschke(ZERO, ZERO, c64(0.5, 0.0), ZERO, tau, sigma).unwrap();
        assert!(b.eval(ZERO).norm() < 1e-12);
        assert!(b.eval(c64(0.5, 0.0)).norm() < 1e-12);
        assert!((b.eval(tau) - sigma).norm() < 1e-10);
        assert_eq!(b.degree(), 2);
    }

    #[test]
    fn geodesic_examples() {
        let g = build_geodesic(ONE, BlaschkeProduct::new(vec![ZERO, ZERO], ONE).unwrap()).unwrap();
        for z in [c64(0.1, 0.2), c64(-0.5, 0.3)] {
            assert!((g.s.eval(z).unwrap() + z * 2.0).norm() < 1e-14);
        }
        assert_eq!(g.s.den.degree(), 0);
        let g = build_geodesic(ONE, BlaschkeProduct::new(vec![ZERO], ONE).unwrap()).unwrap();
        assert!(g.s.num.is_zero());
    }

    #[test]
    fn extremal_example_round_trip() {
        let nil = Mat2::from_real([[0.0, 1.0], [0.0, 0.0]]);
        let inst =
            SnpInstance { lambda1: ZERO, lambda2: c64(0.3, 0.0), w1: nil, w2: Mat2::companion(ZERO, c64(0.3, 0.0)) };
        let c = construct_snp_interpolant(&inst, &Config::default()).unwrap();
        assert!(c.extremal);
        let pts = sample_pair(&c.h, &[inst.lambda1, inst.lambda2]).unwrap();
        assert!(pts[0].distance(&GammaPoint::from_real(0.0, 0.0)) < 1e-8);
        assert!(pts[1].distance(&GammaPoint::from_real(0.0, 0.3)) < 1e-8);
        for k in 0..50 {
            let l = cis(k as f64 * 0.3) * (k as f64 / 51.0);
            let z = GammaPoint::new(c.h.0.eval(l).unwrap(), c.h.1.eval(l).unwrap());
            assert!(in_closed_gamma(&z, 1e-9));
        }
    }

    #[test]
    fn equal_targets_give_constant() {
        let w = Mat2::from_real([[0.2, 0.5], [0.1, -0.3]]);
        let inst = SnpInstance { lambda1: c64(0.1, 0.0), lambda2: c64(-0.2, 0.4), w1: w, w2: w };
        let c = construct_snp_interpolant(&inst, &Config::default()).unwrap();
        assert_eq!(c.interpolant.provenance, Provenance::SimilarityLifted);
        for l in [inst.lambda1, inst.lambda2, c64(0.5, 0.5)] {
            assert!((c.interpolant.eval(l).unwrap() - w).frobenius_norm() < 1e-8);
        }
    }

    #[test]
    fn unsolvable_is_refused() {
        let inst = SnpInstance {
            lambda1: ZERO,
            lambda2: c64(0.1, 0.0),
            w1: Mat2::companion(ZERO, ZERO),
            w2: Mat2::companion(ZERO, c64(0.9, 0.0)),
        };
        assert_eq!(construct_snp_interpolant(&inst, &Config::default()), Err(Error::NotSolvable));
    }
}

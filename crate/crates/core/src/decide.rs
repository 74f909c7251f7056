//! Solvability criteria for the two-point spectral Nevanlinna-Pick problem,
//! the spectral Carathéodory-Fejér problem, the tetrablock Schwarz lemma and
//! the μ-analogue of the Carathéodory-Fejér problem.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gamma::{caratheodory_distance, caratheodory_metric, in_open_g, GammaPoint, GammaTangent};
use crate::numerics::{cis, golden_section_max, max_on_circle, pseudohyperbolic, HermitianMatrix, Mat2};
use crate::tol::{Config, ALPHA_RINGS};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Solvable,
    SolvableUniquely,
    Unsolvable,
    OutOfTheoremScope,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Solvable => "Solvable",
            Status::SolvableUniquely => "SolvableUniquely",
            Status::Unsolvable => "Unsolvable",
            Status::OutOfTheoremScope => "OutOfTheoremScope",
        }
    }

    pub fn is_solvable(&self) -> bool {
        matches!(self, Status::Solvable | Status::SolvableUniquely)
    }
}

/// Outcome of a decider. `margin` is the criterion slack, positive on the
/// solvable side.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub status: Status,
    pub margin: f64,
    pub criterion_value: f64,
    pub threshold: f64,
    pub detail: String,
}

impl Verdict {
    fn new(status: Status, margin: f64, criterion_value: f64, threshold: f64, detail: String) -> Self {
        Verdict { status, margin, criterion_value, threshold, detail }
    }
}

/// Two-point spectral Nevanlinna-Pick data: find analytic `F: 𝔻 → ℂ²ˣ²`
/// with `F(λⱼ) = Wⱼ` and `r(F(λ)) ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SnpInstance {
    pub lambda1: Complex64,
    pub lambda2: Complex64,
    pub w1: Mat2,
    pub w2: Mat2,
}

/// Spectral Carathéodory-Fejér data: `F(0) = V₀`, `F′(0) = V₁`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScfInstance {
    pub v0: Mat2,
    pub v1: Mat2,
}

/// Schwarz lemma for the tetrablock: `F(0) = [[0, ζ], [0, 0]]` and
/// `F(λ₀) = W₂` with diagonal entries `a`, `b` and determinant `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TetraSchwarzInstance {
    pub lambda0: Complex64,
    pub zeta: Complex64,
    pub a: Complex64,
    pub b: Complex64,
    pub p: Complex64,
}

/// `F(0) = [[0, ζ], [0, 0]]`, `F′(0) = V₁`, with `μ_Diag(F(λ)) ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuCfInstance {
    pub zeta: Complex64,
    pub v1: Mat2,
}

fn check_nodes(l1: Complex64, l2: Complex64) -> Result<()> {
    if !(l1.norm() < 1.0) || !(l2.norm() < 1.0) {
        return Err(Error::Domain("interpolation nodes must lie in the open unit disc"));
    }
    if l1 == l2 {
        return Err(Error::Domain("interpolation nodes must be distinct"));
    }
    Ok(())
}

fn status_with_band(margin: f64, band: f64, unique_on_boundary: bool) -> Status {
    if unique_on_boundary && margin.abs() <= band {
        Status::SolvableUniquely
    } else if margin >= -band {
        Status::Solvable
    } else {
        Status::Unsolvable
    }
}

/// Entry `(i, j)` of the Pick-type matrix at `α`, up to the factor
/// `1/(1 − λ̄ᵢλⱼ)`.
fn pick_entry(alpha: Complex64, zi: &GammaPoint, zj: &GammaPoint) -> Complex64 {
    let two = Complex64::new(2.0, 0.0);
    let ai = two - alpha * zi.s;
    let aj = two - alpha * zj.s;
    let bi = alpha * zi.p * 2.0 - zi.s;
    let bj = alpha * zj.p * 2.0 - zj.s;
    ai.conj() * aj - bi.conj() * bj * alpha.norm_sqr()
}

fn pick_matrix(alpha: Complex64, nodes: &[Complex64], pts: &[GammaPoint]) -> HermitianMatrix {
    HermitianMatrix::from_lower_fn(nodes.len(), |i, j| {
        let k = Complex64::new(1.0, 0.0) - nodes[i].conj() * nodes[j];
        pick_entry(alpha, &pts[i], &pts[j]) / k
    })
}

/// `min_{|ω|=1} (1 − |m₁₂|² / (m₁₁ m₂₂))` for the 2×2 Pick matrix of
/// two-point data. Nonnegative exactly when the matrix is PSD for all `ω`.
pub fn snp_pick_slack(inst: &SnpInstance, cfg: &Config) -> Result<f64> {
    let nodes = [inst.lambda1, inst.lambda2];
    let pts = [GammaPoint::of_matrix(&inst.w1), GammaPoint::of_matrix(&inst.w2)];
    let m = max_on_circle(
        |t| {
            let h = pick_matrix(cis(t), &nodes, &pts);
            let d = h.get(0, 0).re * h.get(1, 1).re;
            -(1.0 - h.get(1, 0).norm_sqr() / d)
        },
        cfg.circle_grid,
        cfg.refine_tol,
    )?;
    Ok(-m.value)
}

/// Two-point 2×2 spectral Nevanlinna-Pick problem.
pub fn decide_snp_2x2(inst: &SnpInstance, cfg: &Config) -> Result<Verdict> {
    check_nodes(inst.lambda1, inst.lambda2)?;
    if !inst.w1.is_finite() || !inst.w2.is_finite() {
        return Err(Error::Domain("target matrices must be finite"));
    }
    let band = cfg.boundary_band;
    let d = pseudohyperbolic(inst.lambda1, inst.lambda2)?;
    let r = inst.w1.spectral_radius().max(inst.w2.spectral_radius());
    if r > 1.0 + band {
        return Ok(Verdict::new(
            Status::Unsolvable,
            1.0 - r,
            r,
            1.0,
            String::from("a target has spectral radius above 1"),
        ));
    }
    if r >= 1.0 - band {
        return Ok(Verdict::new(
            Status::OutOfTheoremScope,
            1.0 - r,
            r,
            1.0,
            String::from("a target has spectral radius 1 within the boundary band; the criterion needs r(W_j) < 1"),
        ));
    }

    match (inst.w1.is_scalar(), inst.w2.is_scalar()) {
        (true, true) => {
            let cv = pseudohyperbolic(inst.w1.a11, inst.w2.a11)?;
            let margin = d - cv;
            Ok(Verdict::new(
                status_with_band(margin, band, false),
                margin,
                cv,
                d,
                String::from("both targets scalar: scalar Nevanlinna-Pick on the diagonal values"),
            ))
        }
        (true, false) | (false, true) => {
            let (c, w) = if inst.w1.is_scalar() { (inst.w1.a11, inst.w2) } else { (inst.w2.a11, inst.w1) };
            let shifted = w - Mat2::scalar(c);
            let rhs = Mat2::identity() - w.scale(c.conj());
            let inv = rhs.inverse().ok_or(Error::Domain("I − c̄W is singular"))?;
            let cv = (shifted * inv).spectral_radius();
            let margin = d - cv;
            Ok(Verdict::new(
                status_with_band(margin, band, false),
                margin,
                cv,
                d,
                String::from("one scalar target cI: spectral radius of (W − cI)(I − c̄W)⁻¹"),
            ))
        }
        (false, false) => {
            let z1 = GammaPoint::of_matrix(&inst.w1);
            let z2 = GammaPoint::of_matrix(&inst.w2);
            let cv = if z1 == z2 { 0.0 } else { caratheodory_distance(&z1, &z2, cfg)?.value };
            let margin = d - cv;
            let slack = snp_pick_slack(inst, cfg)?;
            let disagree = (margin > band && slack < -1e-13) || (margin < -band && slack > 1e-13);
            if disagree {
                return Err(Error::InternalInconsistency { criterion_margin: margin, cross_check: slack });
            }
            Ok(Verdict::new(
                status_with_band(margin, band, true),
                margin,
                cv,
                d,
                format!(
                    "both targets nonscalar: Carathéodory distance of (tr, det) against node distance; Pick matrix slack {slack:e}"
                ),
            ))
        }
    }
}

/// Result of the α-sampled positivity test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NecessaryReport {
    pub pass: bool,
    /// Smallest pivot of the pivoted Cholesky elimination over all samples.
    pub min_eigenvalue: f64,
    pub worst_alpha: Complex64,
}

/// Necessary condition for n-point spectral Nevanlinna-Pick: the Pick-type
/// matrix must be PSD for every sampled `α`. A failure certifies that the
/// data are not solvable; a pass certifies nothing.
pub fn necessary_condition_snp(
    nodes: &[Complex64],
    targets: &[Mat2],
    alpha_grid: usize,
    cfg: &Config,
) -> Result<NecessaryReport> {
    let n = nodes.len();
    if n == 0 || targets.len() != n {
        return Err(Error::Domain("need the same positive number of nodes and targets"));
    }
    for (i, l) in nodes.iter().enumerate() {
        if !(l.norm() < 1.0) {
            return Err(Error::Domain("interpolation nodes must lie in the open unit disc"));
        }
        if nodes[..i].contains(l) {
            return Err(Error::Domain("interpolation nodes must be distinct"));
        }
    }
    let pts: Vec<GammaPoint> = targets.iter().map(GammaPoint::of_matrix).collect();
    let on_circle = targets.iter().all(|w| w.spectral_radius() < 1.0);
    let radii: Vec<f64> =
        if on_circle { alloc::vec![1.0] } else { (0..=ALPHA_RINGS).map(|k| k as f64 / ALPHA_RINGS as f64).collect() };
    let m = alpha_grid.max(8);
    let h = core::f64::consts::TAU / m as f64;

    let mut report =
        NecessaryReport { pass: true, min_eigenvalue: f64::INFINITY, worst_alpha: Complex64::new(1.0, 0.0) };
    let sample = |alpha: Complex64, report: &mut NecessaryReport| {
        let mat = pick_matrix(alpha, nodes, &pts);
        if !mat.is_psd(cfg.decision_tol) {
            report.pass = false;
        }
        let piv = mat.min_pivot();
        if piv < report.min_eigenvalue {
            report.min_eigenvalue = piv;
            report.worst_alpha = alpha;
        }
        piv
    };
    let mut worst = (1.0, 0.0);
    let mut worst_piv = f64::INFINITY;
    for &rho in &radii {
        let count = if rho == 0.0 { 1 } else { m };
        for k in 0..count {
            let theta = k as f64 * h;
            let piv = sample(cis(theta) * rho, &mut report);
            if piv < worst_piv {
                worst_piv = piv;
                worst = (rho, theta);
            }
        }
    }
    if worst.0 > 0.0 {
        let (rho, theta) = worst;
        let refined = golden_section_max(
            |t| -pick_matrix(cis(t) * rho, nodes, &pts).min_pivot(),
            theta - h,
            theta + h,
            cfg.refine_tol,
        );
        if let Ok((t, _)) = refined {
            sample(cis(t) * rho, &mut report);
        }
    }
    Ok(report)
}

/// `d/dλ det(V₀ + λV₁)` at `λ = 0`.
fn mixed_det(v0: &Mat2, v1: &Mat2) -> Complex64 {
    v0.a11 * v1.a22 + v1.a11 * v0.a22 - v0.a12 * v1.a21 - v1.a12 * v0.a21
}

/// The tangent `(s₀, p₀; s₁, p₁)` of `λ ↦ (tr F, det F)` at the origin.
pub fn scf_tangent(inst: &ScfInstance) -> GammaTangent {
    GammaTangent { base: GammaPoint::of_matrix(&inst.v0), ds: inst.v1.trace(), dp: mixed_det(&inst.v0, &inst.v1) }
}

/// Spectral Carathéodory-Fejér problem for a nonscalar `V₀`.
pub fn decide_scf_2x2(inst: &ScfInstance, cfg: &Config) -> Result<Verdict> {
    if !inst.v0.is_finite() || !inst.v1.is_finite() {
        return Err(Error::Domain("matrices must be finite"));
    }
    if inst.v0.is_scalar() {
        return Err(Error::NonscalarRequired);
    }
    let t = scf_tangent(inst);
    if !in_open_g(&t.base, cfg.decision_tol) {
        return Err(Error::Domain("V₀ must have spectral radius below 1"));
    }
    let cv = caratheodory_metric(&t, cfg)?;
    let margin = 1.0 - cv;
    Ok(Verdict::new(
        status_with_band(margin, cfg.boundary_band, false),
        margin,
        cv,
        1.0,
        String::from(
            "infinitesimal Carathéodory metric of (tr, det) at V₀; characterizes interpolants with r(F(λ)) < 1",
        ),
    ))
}

/// Schwarz lemma for the tetrablock.
pub fn decide_tetra_schwarz(inst: &TetraSchwarzInstance) -> Result<Verdict> {
    let l = inst.lambda0.norm();
    if !(l > 0.0 && l < 1.0) {
        return Err(Error::Domain("need 0 < |λ₀| < 1"));
    }
    let pn = inst.p.norm();
    if !(pn < 1.0) {
        return Ok(Verdict::new(Status::Unsolvable, 1.0 - pn, pn, 1.0, String::from("|det W₂| ≥ 1")));
    }
    let mut detail = String::new();
    let (a, b) = if inst.b.norm() > inst.a.norm() {
        detail.push_str("swapped a and b (|b| > |a|); ");
        (inst.b, inst.a)
    } else {
        (inst.a, inst.b)
    };
    let p = inst.p;
    if inst.zeta != Complex64::new(0.0, 0.0) {
        let cv = ((a - b.conj() * p).norm() + (a * b - p).norm()) / (1.0 - pn * pn);
        let margin = l - cv;
        detail.push_str("ζ ≠ 0 branch: (|a − b̄p| + |ab − p|)/(1 − |p|²) against |λ₀|");
        let status = if margin >= 0.0 { Status::Solvable } else { Status::Unsolvable };
        Ok(Verdict::new(status, margin, cv, l, detail))
    } else {
        let l2 = l * l;
        let quartic = l2 * l2 - (a.norm_sqr() + b.norm_sqr() + 2.0 * (a * b - p).norm()) * l2 + pn * pn;
        let side = l2 - pn;
        let margin = quartic.min(side);
        detail.push_str("ζ = 0 branch: |λ₀|⁴ − (|a|² + |b|² + 2|ab − p|)|λ₀|² + |p|² ≥ 0 with |p| ≤ |λ₀|²");
        let status = if margin >= 0.0 { Status::Solvable } else { Status::Unsolvable };
        Ok(Verdict::new(status, margin, quartic, 0.0, detail))
    }
}

/// μ-analogue of the Carathéodory-Fejér problem for a nondiagonal `V₁`.
pub fn decide_mu_cf(inst: &MuCfInstance) -> Result<Verdict> {
    let v = &inst.v1;
    if !v.is_finite() || !(inst.zeta.re.is_finite() && inst.zeta.im.is_finite()) {
        return Err(Error::Domain("inputs must be finite"));
    }
    if v.is_diagonal() {
        return Err(Error::NondiagonalRequired);
    }
    let cv = v.a11.norm().max(v.a22.norm()) + (inst.zeta * v.a21).norm();
    let margin = 1.0 - cv;
    let status = if cv <= 1.0 { Status::Solvable } else { Status::Unsolvable };
    Ok(Verdict::new(status, margin, cv, 1.0, String::from("max(|v₁₁|, |v₂₂|) + |ζv₂₁| against 1")))
}

//! Default tolerances and grid sizes.
//!
//! Every numerical threshold used by the deciders, the constructor and the
//! verifier is collected here so that callers can override them in one place.

/// Membership / decision tolerance.
pub const DECISION_TOL: f64 = 1e-10;
/// Half-width of the band around a decision threshold treated as equality.
pub const BOUNDARY_BAND: f64 = 1e-9;
/// Angular tolerance for golden-section refinement on the circle.
pub const CIRCLE_REFINE_TOL: f64 = 1e-12;
/// Uniform grid size for circle maximization.
pub const CIRCLE_GRID: usize = 4096;
/// Interpolation residual accepted by the verifier.
pub const VERIFY_RESIDUAL_TOL: f64 = 1e-8;
/// Slack on the spectral-radius bound accepted by the verifier.
pub const VERIFY_RADIUS_TOL: f64 = 1e-6;
/// Default polar verification grid (radial, angular).
pub const VERIFY_GRID: (usize, usize) = (101, 101);
/// Circle points for the necessary-condition sweep.
pub const ALPHA_GRID: usize = 512;
/// Concentric circles used when some target has spectral radius at least one.
pub const ALPHA_RINGS: usize = 16;
/// Distance to a degenerate (scalar / diagonal) set below which a conditioning
/// warning is raised.
pub const CONDITIONING_WARN: f64 = 1e-6;

/// Tunable numerical settings threaded through the deciders and constructor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Config {
    pub decision_tol: f64,
    pub boundary_band: f64,
    pub circle_grid: usize,
    pub refine_tol: f64,
    pub alpha_grid: usize,
    pub verify_grid: (usize, usize),
    pub residual_tol: f64,
    pub radius_tol: f64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            decision_tol: DECISION_TOL,
            boundary_band: BOUNDARY_BAND,
            circle_grid: CIRCLE_GRID,
            refine_tol: CIRCLE_REFINE_TOL,
            alpha_grid: ALPHA_GRID,
            verify_grid: VERIFY_GRID,
            residual_tol: VERIFY_RESIDUAL_TOL,
            radius_tol: VERIFY_RADIUS_TOL,
        }
    }
}

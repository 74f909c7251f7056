//! Dispatch of a validated problem to the core library and encoding of the
//! result.

use musynth_core::construct::{construct_snp_interpolant, MatrixInterpolant};
use musynth_core::decide::{
    decide_mu_cf, decide_scf_2x2, decide_snp_2x2, decide_tetra_schwarz, necessary_condition_snp,
};
use musynth_core::gamma::{caratheodory_distance, in_closed_gamma, in_open_g};
use musynth_core::numerics::RationalFunction;
use musynth_core::tetra::{in_tetrablock, mu_diag2, tetra_max_g};
use musynth_core::tol::CONDITIONING_WARN;
use musynth_core::verify::{verify_gamma_map, verify_spectral_interpolant, witness_illconditioned, witness_threepoint};
use musynth_core::{
    Complex64, Config, Error, GammaPoint, Mat2, MuCfInstance, MuMethod, ScfInstance, SnpInstance, Status,
    TetraSchwarzInstance, Verdict, VerificationReport,
};
use serde_json::{json, Value};

use crate::codec::{self, enc_complex, enc_gamma, enc_matrix, enc_rational, Fields};
use crate::{CliError, Settings};

pub fn execute(kind: &str, f: &Fields, s: &Settings) -> Result<(i32, Value), CliError> {
    match kind {
        "snp2" => snp2(f, s),
        "scf" => scf(f, s),
        "tetra" => tetra(f, s),
        "mucf" => mucf(f, s),
        "snp_necessary" => necessary(f, s),
        "construct" => construct(f, s),
        "verify" => verify(f, s),
        "mu" => mu(f, s),
        "dist" => dist(f, s),
        "member" => member(f, s),
        _ => unreachable!("kind validated on load"),
    }
}

fn tolerances(cfg: &Config) -> Value {
    json!({
        "decision_tol": cfg.decision_tol,
        "boundary_band": cfg.boundary_band,
        "circle_grid": cfg.circle_grid,
        "refine_tol": cfg.refine_tol,
        "alpha_grid": cfg.alpha_grid,
        "verify_grid": [cfg.verify_grid.0, cfg.verify_grid.1],
        "residual_tol": cfg.residual_tol,
        "radius_tol": cfg.radius_tol,
    })
}

fn status_code(status: Status) -> i32 {
    match status {
        Status::Solvable | Status::SolvableUniquely => 0,
        Status::Unsolvable => 1,
        Status::OutOfTheoremScope => 2,
    }
}

fn verdict_json(kind: &str, v: &Verdict, cfg: &Config, warnings: Vec<String>) -> (i32, Value) {
    let out = json!({
        "kind": kind,
        "status": v.status.as_str(),
        "margin": v.margin,
        "criterion_value": v.criterion_value,
        "threshold": v.threshold,
        "detail": v.detail,
        "boundary": v.margin.abs() <= cfg.boundary_band,
        "tolerances": tolerances(cfg),
        "warnings": warnings,
    });
    (status_code(v.status), out)
}

fn near_scalar(name: &str, m: &Mat2, out: &mut Vec<String>) {
    let d = m.distance_to_scalars();
    if d > 0.0 && d < CONDITIONING_WARN {
        out.push(format!("{name} is {d:e} from the scalar matrices; the decision is ill-conditioned"));
    }
}

fn snp_instance(f: &Fields) -> Result<SnpInstance, CliError> {
    f.allow_only(&["lambda1", "lambda2", "w1", "w2"])?;
    Ok(SnpInstance {
        lambda1: f.complex("lambda1")?,
        lambda2: f.complex("lambda2")?,
        w1: f.matrix("w1")?,
        w2: f.matrix("w2")?,
    })
}

fn snp2(f: &Fields, s: &Settings) -> Result<(i32, Value), CliError> {
    let inst = snp_instance(f)?;
    let v = decide_snp_2x2(&inst, &s.cfg)?;
    let mut warnings = vec![];
    near_scalar("w1", &inst.w1, &mut warnings);
    near_scalar("w2", &inst.w2, &mut warnings);
    Ok(verdict_json("snp2", &v, &s.cfg, warnings))
}

fn scf(f: &Fields, s: &Settings) -> Result<(i32, Value), CliError> {
    f.allow_only(&["v0", "v1"])?;
    let inst = ScfInstance { v0: f.matrix("v0")?, v1: f.matrix("v1")? };
    let v = decide_scf_2x2(&inst, &s.cfg)?;
    let mut warnings = vec![];
    near_scalar("v0", &inst.v0, &mut warnings);
    Ok(verdict_json("scf", &v, &s.cfg, warnings))
}

fn tetra(f: &Fields, s: &Settings) -> Result<(i32, Value), CliError> {
    f.allow_only(&["lambda0", "zeta", "a", "b", "p"])?;
    let inst = TetraSchwarzInstance {
        lambda0: f.complex("lambda0")?,
        zeta: f.complex("zeta")?,
        a: f.complex("a")?,
        b: f.complex("b")?,
        p: f.complex("p")?,
    };
    let v = decide_tetra_schwarz(&inst)?;
    let mut warnings = vec![];
    let z = inst.zeta.norm();
    if z > 0.0 && z < CONDITIONING_WARN {
        warnings.push(format!("|zeta| = {z:e} is near 0, where the criterion changes form"));
    }
    Ok(verdict_json("tetra", &v, &s.cfg, warnings))
}

fn mucf(f: &Fields, s: &Settings) -> Result<(i32, Value), CliError> {
    f.allow_only(&["zeta", "v1"])?;
    let inst = MuCfInstance { zeta: f.complex("zeta")?, v1: f.matrix("v1")? };
    let v = decide_mu_cf(&inst)?;
    let mut warnings = vec![];
    let d = inst.v1.distance_to_diagonal();
    if d > 0.0 && d < CONDITIONING_WARN {
        warnings.push(format!("v1 is {d:e} from the diagonal matrices; the decision is ill-conditioned"));
    }
    Ok(verdict_json("mucf", &v, &s.cfg, warnings))
}

fn necessary(f: &Fields, s: &Settings) -> Result<(i32, Value), CliError> {
    f.allow_only(&["nodes", "targets"])?;
    let nodes = f
        .array("nodes")?
        .iter()
        .enumerate()
        .map(|(i, v)| codec::complex(v, &format!("{}[{i}]", f.name("nodes"))))
        .collect::<Result<Vec<_>, _>>()?;
    let targets = f
        .array("targets")?
        .iter()
        .enumerate()
        .map(|(i, v)| codec::matrix(v, &format!("{}[{i}]", f.name("targets"))))
        .collect::<Result<Vec<_>, _>>()?;
    if nodes.len() != targets.len() {
        return Err(CliError::Input { field: f.name("targets"), message: "needs one target per node".into() });
    }
    let rep = necessary_condition_snp(&nodes, &targets, s.cfg.alpha_grid, &s.cfg)?;
    let out = json!({
        "kind": "snp_necessary",
        "pass": rep.pass,
        "min_eigenvalue": rep.min_eigenvalue,
        "worst_alpha": enc_complex(rep.worst_alpha),
        "detail": if rep.pass {
            "no sampled alpha violates positivity; this does not certify solvability"
        } else {
            "positivity fails at worst_alpha; the data are not solvable"
        },
        "tolerances": tolerances(&s.cfg),
    });
    Ok((if rep.pass { 0 } else { 1 }, out))
}

fn report_json(r: &VerificationReport) -> Value {
    json!({
        "pass": r.pass(),
        "max_spectral_radius_on_grid": r.max_spectral_radius_on_grid,
        "interpolation_residuals": r.interpolation_residuals,
        "grid": [r.grid.0, r.grid.1],
        "radius_tol": r.radius_tol,
        "residual_tol": r.residual_tol,
    })
}

fn interpolant_json(m: &MatrixInterpolant) -> Value {
    let e = &m.entries;
    json!({
        "provenance": m.provenance.as_str(),
        "entries": [
            [enc_rational(&e[0][0]), enc_rational(&e[0][1])],
            [enc_rational(&e[1][0]), enc_rational(&e[1][1])],
        ],
    })
}

fn construct(f: &Fields, s: &Settings) -> Result<(i32, Value), CliError> {
    let inst = snp_instance(f)?;
    let c = construct_snp_interpolant(&inst, &s.cfg)?;
    let z1 = GammaPoint::of_matrix(&inst.w1);
    let z2 = GammaPoint::of_matrix(&inst.w2);
    let gamma_rep = verify_gamma_map(&c.h, &[(inst.lambda1, z1), (inst.lambda2, z2)], s.cfg.verify_grid, &s.cfg)?;
    let targets = match c.interpolant.provenance {
        musynth_core::Provenance::SimilarityLifted => (inst.w1, inst.w2),
        musynth_core::Provenance::CompanionForm => (Mat2::companion(z1.s, z1.p), Mat2::companion(z2.s, z2.p)),
    };
    let matrix_rep = verify_spectral_interpolant(
        &c.interpolant,
        &[(inst.lambda1, targets.0), (inst.lambda2, targets.1)],
        s.cfg.verify_grid,
        &s.cfg,
    )?;
    let pass = gamma_rep.pass() && matrix_rep.pass();
    let g = &c.geodesic;
    let nu = &c.reparam;
    let out = json!({
        "kind": "construct",
        "extremal": c.extremal,
        "detail": c.detail,
        "geodesic": {
            "omega0": enc_complex(g.omega0),
            "blaschke_zeros": g.p.zeros.iter().map(|&z| enc_complex(z)).collect::<Vec<_>>(),
            "blaschke_constant": enc_complex(g.p.constant),
            "s": enc_rational(&g.s),
        },
        "reparam": {
            "a": enc_complex(nu.a),
            "b": enc_complex(nu.b),
            "c": enc_complex(nu.c),
            "d": enc_complex(nu.d),
        },
        "h": { "s": enc_rational(&c.h.0), "p": enc_rational(&c.h.1) },
        "interpolant": interpolant_json(&c.interpolant),
        "verification": {
            "pass": pass,
            "gamma_map": report_json(&gamma_rep),
            "matrix": report_json(&matrix_rep),
            "matrix_targets": [enc_matrix(&targets.0), enc_matrix(&targets.1)],
        },
        "tolerances": tolerances(&s.cfg),
    });
    Ok((if pass { 0 } else { 1 }, out))
}

fn constraints<T>(
    f: &Fields,
    parse: impl Fn(&Value, &str) -> Result<T, CliError>,
) -> Result<Vec<(Complex64, T)>, CliError> {
    let Some(v) = f.opt("constraints") else { return Ok(vec![]) };
    let items = v
        .as_array()
        .ok_or_else(|| CliError::Input { field: f.name("constraints"), message: "expected an array".into() })?;
    items
        .iter()
        .enumerate()
        .map(|(i, item)| {
            let field = format!("{}[{i}]", f.name("constraints"));
            let node = item
                .get("node")
                .ok_or_else(|| CliError::Input { field: format!("{field}.node"), message: "missing field".into() })?;
            let value = item
                .get("value")
                .ok_or_else(|| CliError::Input { field: format!("{field}.value"), message: "missing field".into() })?;
            Ok((codec::complex(node, &format!("{field}.node"))?, parse(value, &format!("{field}.value"))?))
        })
        .collect()
}

fn verify(f: &Fields, s: &Settings) -> Result<(i32, Value), CliError> {
    let map = f.str("map")?;
    let grid = s.cfg.verify_grid;
    let (rep, described) = match map {
        "gamma" => {
            f.allow_only(&["map", "s", "p", "constraints"])?;
            let h = (codec::rational(f.get("s")?, &f.name("s"))?, codec::rational(f.get("p")?, &f.name("p"))?);
            let cons = constraints(f, codec::gamma_point)?;
            (verify_gamma_map(&h, &cons, grid, &s.cfg), "gamma map (s, p)".to_string())
        }
        "matrix" => {
            f.allow_only(&["map", "entries", "constraints"])?;
            let field = f.name("entries");
            let rows = f.get("entries")?.as_array().filter(|r| r.len() == 2).ok_or_else(|| CliError::Input {
                field: field.clone(),
                message: "expected a 2x2 array of rational functions".into(),
            })?;
            let mut entries: Vec<RationalFunction> = vec![];
            for (i, row) in rows.iter().enumerate() {
                let row = row.as_array().filter(|r| r.len() == 2).ok_or_else(|| CliError::Input {
                    field: format!("{field}[{i}]"),
                    message: "expected two rational functions".into(),
                })?;
                for (j, e) in row.iter().enumerate() {
                    entries.push(codec::rational(e, &format!("{field}[{i}][{j}]"))?);
                }
            }
            let mut it = entries.into_iter();
            let mut next = || it.next().expect("four entries");
            let m = MatrixInterpolant {
                entries: [[next(), next()], [next(), next()]],
                provenance: musynth_core::Provenance::CompanionForm,
            };
            let cons = constraints(f, codec::matrix)?;
            (verify_spectral_interpolant(&m, &cons, grid, &s.cfg), "matrix function".to_string())
        }
        "witness_illconditioned" => {
            f.allow_only(&["map", "beta", "constraints"])?;
            let beta = f.complex("beta")?;
            let h = witness_illconditioned(beta)?;
            let mut cons = constraints(f, codec::gamma_point)?;
            if f.opt("constraints").is_none() {
                let one = Complex64::new(1.0, 0.0);
                cons = vec![
                    (Complex64::new(0.0, 0.0), GammaPoint::from_real(0.0, 0.0)),
                    (beta, GammaPoint::new(beta * 2.0 / (one + beta), Complex64::new(0.0, 0.0))),
                ];
            }
            (verify_gamma_map(&h, &cons, grid, &s.cfg), "ill-conditioned witness".to_string())
        }
        "witness_threepoint" => {
            f.allow_only(&["map", "r", "constraints"])?;
            let r = f.real("r")?;
            let h = witness_threepoint(r)?;
            let cons = constraints(f, codec::gamma_point)?;
            (verify_gamma_map(&h, &cons, grid, &s.cfg), "three-point witness".to_string())
        }
        other => {
            return Err(CliError::Input {
                field: f.name("map"),
                message: format!(
                    "unknown map {other:?}; expected gamma, matrix, witness_illconditioned or witness_threepoint"
                ),
            })
        }
    };
    match rep {
        Ok(rep) => {
            let mut out = report_json(&rep);
            out["kind"] = json!("verify");
            out["map"] = json!(described);
            Ok((if rep.pass() { 0 } else { 1 }, out))
        }
        Err(Error::Evaluation) => Ok((
            1,
            json!({
                "kind": "verify",
                "map": described,
                "pass": false,
                "detail": "pole at a grid point or node; the candidate is not analytic on the disc",
            }),
        )),
        Err(e) => Err(e.into()),
    }
}

fn mu(f: &Fields, s: &Settings) -> Result<(i32, Value), CliError> {
    f.allow_only(&["matrix"])?;
    let a = f.matrix("matrix")?;
    let r = mu_diag2(&a, s.mu_tol)?;
    let out = json!({
        "kind": "mu",
        "value": r.value,
        "lo": r.lo,
        "hi": r.hi,
        "method": match r.method {
            MuMethod::ZeroCase => "ZeroCase",
            MuMethod::Bisection => "Bisection",
        },
        "spectral_radius": a.spectral_radius(),
        "operator_norm": a.operator_norm(),
        "mu_tol": s.mu_tol,
    });
    Ok((0, out))
}

fn dist(f: &Fields, s: &Settings) -> Result<(i32, Value), CliError> {
    f.allow_only(&["z1", "z2"])?;
    let (z1, z2) = (f.gamma("z1")?, f.gamma("z2")?);
    let c = caratheodory_distance(&z1, &z2, &s.cfg)?;
    let out = json!({
        "kind": "dist",
        "value": c.value,
        "omega": enc_complex(c.omega),
        "z1": enc_gamma(&z1),
        "z2": enc_gamma(&z2),
        "tolerances": tolerances(&s.cfg),
    });
    Ok((0, out))
}

fn member(f: &Fields, s: &Settings) -> Result<(i32, Value), CliError> {
    f.allow_only(&["domain", "point"])?;
    let band = s.cfg.boundary_band;
    let (quantity, threshold, inside, closed, point) = match f.str("domain")? {
        "gamma" => {
            let z = f.gamma("point")?;
            (z.root_radius(), 1.0, in_open_g(&z, 0.0), in_closed_gamma(&z, band), enc_gamma(&z))
        }
        "tetra" => {
            let x = codec::tetra_point(f.get("point")?, &f.name("point"))?;
            let enc = json!([enc_complex(x.x1), enc_complex(x.x2), enc_complex(x.x3)]);
            (tetra_max_g(&x), 0.0, in_tetrablock(&x, false, 0.0), in_tetrablock(&x, true, band), enc)
        }
        other => {
            return Err(CliError::Input {
                field: f.name("domain"),
                message: format!("unknown domain {other:?}; expected gamma or tetra"),
            })
        }
    };
    let membership = if !closed {
        "Outside"
    } else if (quantity - threshold).abs() <= band {
        "Boundary"
    } else {
        "Inside"
    };
    let out = json!({
        "kind": "member",
        "domain": f.str("domain")?,
        "point": point,
        "membership": membership,
        "in_open": inside,
        "in_closed_within_band": closed,
        "quantity": quantity,
        "threshold": threshold,
        "boundary_band": band,
    });
    Ok((if membership == "Outside" { 1 } else { 0 }, out))
}

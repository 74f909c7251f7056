//! Command-line front end for `musynth-core`.
//!
//! Every subcommand reads one problem, either from a JSON file
//! (`--input FILE`, `{"kind": ..., "payload": {...}, "config": {...}}`) or
//! from inline flags, and writes one result object to standard output.
//!
//! Exit codes: 0 solvable / pass / value computed, 1 unsolvable / fail,
//! 2 out of theorem scope or invalid input, 3 internal inconsistency.

mod codec;
mod commands;

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use musynth_core::Config;
use serde::Deserialize;
use serde_json::{json, Map, Value};

pub use codec::Fields;

#[derive(Debug)]
pub enum CliError {
    /// Malformed or missing input, naming the offending field.
    Input {
        field: String,
        message: String,
    },
    Core(musynth_core::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input { field, message } => write!(f, "{field}: {message}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<musynth_core::Error> for CliError {
    fn from(e: musynth_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(musynth_core::Error::InternalInconsistency { .. }) => 3,
            CliError::Core(musynth_core::Error::NotSolvable) => 1,
            _ => 2,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            CliError::Input { field, message } => json!({
                "error": { "type": "InvalidInput", "field": field, "message": message }
            }),
            CliError::Core(e) => json!({
                "error": { "type": core_error_name(e), "message": e.to_string() }
            }),
        }
    }
}

fn core_error_name(e: &musynth_core::Error) -> &'static str {
    use musynth_core::Error::*;
    match e {
        Domain(_) => "Domain",
        Pole => "Pole",
        ObjectiveSingular => "ObjectiveSingular",
        Bracket => "Bracket",
        NonscalarRequired => "NonscalarRequired",
        NondiagonalRequired => "NondiagonalRequired",
        NoSolution => "NoSolution",
        DegenerateData => "DegenerateData",
        NotSolvable => "NotSolvable",
        Evaluation => "Evaluation",
        InternalInconsistency { .. } => "InternalInconsistency",
    }
}

#[derive(Parser, Debug)]
#[command(name = "musynth", version, about = "Decide, construct and verify analysable mu-synthesis problems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Problem file: {"kind", "payload", "config"}.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Grid size: circle grid (decide, dist), alpha grid (check-necessary)
    /// or N×N verification grid (construct, verify).
    #[arg(long, global = true)]
    grid: Option<usize>,
    /// Tolerance: decision tolerance (decide, check-necessary, dist),
    /// bisection tolerance (mu), residual tolerance (construct, verify) or
    /// boundary band (member).
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide solvability of a problem instance.
    Decide {
        #[command(subcommand)]
        problem: Option<DecideKind>,
    },
    /// Sampled necessary condition for n-point spectral Nevanlinna-Pick.
    CheckNecessary(NecessaryArgs),
    /// Build an interpolant for two-point spectral Nevanlinna-Pick data.
    Construct(SnpArgs),
    /// Check a candidate interpolant on a polar grid.
    Verify(VerifyArgs),
    /// Structured singular value for diagonal uncertainty.
    Mu(MuArgs),
    /// Carathéodory distance between two points of the open symmetrized bidisc.
    Dist(DistArgs),
    /// Membership in the symmetrized bidisc or the tetrablock.
    Member {
        #[command(subcommand)]
        domain: Option<MemberKind>,
    },
}

#[derive(Subcommand, Debug)]
enum DecideKind {
    /// Two-point 2×2 spectral Nevanlinna-Pick.
    Snp2(SnpArgs),
    /// 2×2 spectral Carathéodory-Fejér.
    Scf(ScfArgs),
    /// Tetrablock Schwarz lemma.
    Tetra(TetraArgs),
    /// μ-Carathéodory-Fejér.
    Mucf(MucfArgs),
}

#[derive(Subcommand, Debug)]
enum MemberKind {
    Gamma(PointArgs),
    Tetra(PointArgs),
}

#[derive(Args, Debug, Default)]
struct SnpArgs {
    #[arg(long, allow_hyphen_values = true)]
    lambda1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lambda2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    w1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    w2: Option<String>,
}

#[derive(Args, Debug, Default)]
struct ScfArgs {
    #[arg(long, allow_hyphen_values = true)]
    v0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    v1: Option<String>,
}

#[derive(Args, Debug, Default)]
struct TetraArgs {
    #[arg(long, allow_hyphen_values = true)]
    lambda0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    zeta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
}

#[derive(Args, Debug, Default)]
struct MucfArgs {
    #[arg(long, allow_hyphen_values = true)]
    zeta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    v1: Option<String>,
}

#[derive(Args, Debug, Default)]
struct NecessaryArgs {
    /// JSON array of nodes.
    #[arg(long, allow_hyphen_values = true)]
    nodes: Option<String>,
    /// JSON array of 2×2 target matrices.
    #[arg(long, allow_hyphen_values = true)]
    targets: Option<String>,
}

#[derive(Args, Debug, Default)]
struct VerifyArgs {
    /// Built-in witness map: illconditioned or threepoint.
    #[arg(long)]
    witness: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    r: Option<String>,
}

#[derive(Args, Debug, Default)]
struct MuArgs {
    #[arg(long, allow_hyphen_values = true)]
    matrix: Option<String>,
}

#[derive(Args, Debug, Default)]
struct DistArgs {
    #[arg(long, allow_hyphen_values = true)]
    z1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    z2: Option<String>,
}

#[derive(Args, Debug, Default)]
struct PointArgs {
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct ProblemFile {
    kind: String,
    #[serde(default)]
    payload: Map<String, Value>,
    #[serde(default)]
    config: ConfigOverrides,
}

#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct ConfigOverrides {
    decision_tol: Option<f64>,
    boundary_band: Option<f64>,
    circle_grid: Option<usize>,
    refine_tol: Option<f64>,
    alpha_grid: Option<usize>,
    verify_grid: Option<(usize, usize)>,
    residual_tol: Option<f64>,
    radius_tol: Option<f64>,
    mu_tol: Option<f64>,
}

/// Settings after merging defaults, file overrides and flags.
#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub cfg: Config,
    pub mu_tol: f64,
}

pub const DEFAULT_MU_TOL: f64 = 1e-12;

/// Problem kinds accepted in files, by subcommand.
const KINDS: &[&str] =
    &["snp2", "snp_necessary", "scf", "tetra", "mucf", "mu", "dist", "member", "construct", "verify"];

fn load_file(path: &PathBuf) -> Result<ProblemFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input {
        field: "--input".into(),
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    let file: ProblemFile =
        serde_json::from_str(&text).map_err(|e| CliError::Input { field: "input".into(), message: e.to_string() })?;
    if !KINDS.contains(&file.kind.as_str()) {
        return Err(CliError::Input {
            field: "kind".into(),
            message: format!("unknown kind {:?}; expected one of {}", file.kind, KINDS.join(", ")),
        });
    }
    Ok(file)
}

fn positive(x: f64, field: &str) -> Result<f64, CliError> {
    if x > 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(CliError::Input { field: field.into(), message: "must be positive and finite".into() })
    }
}

fn count(n: usize, field: &str) -> Result<usize, CliError> {
    if n > 0 {
        Ok(n)
    } else {
        Err(CliError::Input { field: field.into(), message: "must be positive".into() })
    }
}

fn apply_overrides(o: &ConfigOverrides) -> Result<Settings, CliError> {
    let mut s = Settings { cfg: Config::default(), mu_tol: DEFAULT_MU_TOL };
    let c = &mut s.cfg;
    if let Some(x) = o.decision_tol {
        c.decision_tol = positive(x, "config.decision_tol")?;
    }
    if let Some(x) = o.boundary_band {
        c.boundary_band = positive(x, "config.boundary_band")?;
    }
    if let Some(n) = o.circle_grid {
        c.circle_grid = count(n, "config.circle_grid")?;
    }
    if let Some(x) = o.refine_tol {
        c.refine_tol = positive(x, "config.refine_tol")?;
    }
    if let Some(n) = o.alpha_grid {
        c.alpha_grid = count(n, "config.alpha_grid")?;
    }
    if let Some((a, b)) = o.verify_grid {
        c.verify_grid = (count(a, "config.verify_grid")?, count(b, "config.verify_grid")?);
    }
    if let Some(x) = o.residual_tol {
        c.residual_tol = positive(x, "config.residual_tol")?;
    }
    if let Some(x) = o.radius_tol {
        c.radius_tol = positive(x, "config.radius_tol")?;
    }
    if let Some(x) = o.mu_tol {
        s.mu_tol = positive(x, "config.mu_tol")?;
    }
    Ok(s)
}

fn inline_fields(pairs: &[(&str, &Option<String>)], strings: &[&str]) -> Result<Fields, CliError> {
    let mut map = Map::new();
    for (name, v) in pairs {
        if let Some(text) = v {
            let value =
                if strings.contains(name) { Value::String(text.clone()) } else { codec::inline_value(text, name)? };
            map.insert((*name).to_string(), value);
        }
    }
    Ok(Fields { map, prefix: "--" })
}

/// Which problem to run and where its fields come from.
struct Job {
    kind: String,
    fields: Fields,
    settings: Settings,
}

fn job(
    expected: &[&str],
    file: Option<ProblemFile>,
    inline: Fields,
    default_kind: Option<&str>,
) -> Result<Job, CliError> {
    match file {
        Some(f) => {
            if !expected.contains(&f.kind.as_str()) {
                return Err(CliError::Input {
                    field: "kind".into(),
                    message: format!(
                        "kind {:?} does not match this subcommand (expected {})",
                        f.kind,
                        expected.join(" or ")
                    ),
                });
            }
            if let Some(k) = default_kind {
                if k != f.kind && expected.len() > 1 {
                    return Err(CliError::Input {
                        field: "kind".into(),
                        message: format!("kind {:?} does not match subcommand {k:?}", f.kind),
                    });
                }
            }
            if let Some(extra) = inline.map.keys().next() {
                return Err(CliError::Input {
                    field: format!("--{extra}"),
                    message: "inline flags cannot be combined with --input".into(),
                });
            }
            let settings = apply_overrides(&f.config)?;
            Ok(Job { kind: f.kind, fields: Fields { map: f.payload, prefix: "payload." }, settings })
        }
        None => {
            let kind = default_kind.ok_or_else(|| CliError::Input {
                field: "--input".into(),
                message: "give a problem subcommand with inline flags, or --input FILE".into(),
            })?;
            let settings = apply_overrides(&ConfigOverrides::default())?;
            Ok(Job { kind: kind.into(), fields: inline, settings })
        }
    }
}

/// Grid and tolerance flags, interpreted per subcommand.
#[derive(Clone, Copy)]
enum Knobs {
    Decide,
    Necessary,
    Construct,
    Mu,
    Member,
}

fn apply_flags(s: &mut Settings, knobs: Knobs, grid: Option<usize>, tol: Option<f64>) -> Result<(), CliError> {
    if let Some(n) = grid {
        let n = count(n, "--grid")?;
        match knobs {
            Knobs::Decide => s.cfg.circle_grid = n,
            Knobs::Necessary => s.cfg.alpha_grid = n,
            Knobs::Construct => s.cfg.verify_grid = (n, n),
            Knobs::Mu | Knobs::Member => {
                return Err(CliError::Input { field: "--grid".into(), message: "not used by this subcommand".into() })
            }
        }
    }
    if let Some(x) = tol {
        let x = positive(x, "--tol")?;
        match knobs {
            Knobs::Decide | Knobs::Necessary => s.cfg.decision_tol = x,
            Knobs::Construct => s.cfg.residual_tol = x,
            Knobs::Mu => s.mu_tol = x,
            Knobs::Member => s.cfg.boundary_band = x,
        }
    }
    Ok(())
}

/// Result of one command: exit code and the serialized output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome { code, output: e.render().to_string() };
        }
    };
    let format = cli.format;
    let (code, value) = match dispatch(cli) {
        Ok((code, value)) => (code, value),
        Err(e) => (e.exit_code(), e.to_json()),
    };
    Outcome { code, output: render(&value, format) }
}

fn dispatch(cli: Cli) -> Result<(i32, Value), CliError> {
    let file = cli.input.as_ref().map(load_file).transpose()?;
    let (mut job, knobs) = match &cli.command {
        Command::Decide { problem } => {
            let (kind, inline) = match problem {
                Some(DecideKind::Snp2(a)) => (Some("snp2"), snp_fields(a)?),
                Some(DecideKind::Scf(a)) => (Some("scf"), inline_fields(&[("v0", &a.v0), ("v1", &a.v1)], &[])?),
                Some(DecideKind::Tetra(a)) => (
                    Some("tetra"),
                    inline_fields(
                        &[("lambda0", &a.lambda0), ("zeta", &a.zeta), ("a", &a.a), ("b", &a.b), ("p", &a.p)],
                        &[],
                    )?,
                ),
                Some(DecideKind::Mucf(a)) => (Some("mucf"), inline_fields(&[("zeta", &a.zeta), ("v1", &a.v1)], &[])?),
                None => (None, Fields { map: Map::new(), prefix: "--" }),
            };
            (job(&["snp2", "scf", "tetra", "mucf"], file, inline, kind)?, Knobs::Decide)
        }
        Command::CheckNecessary(a) => {
            let inline = inline_fields(&[("nodes", &a.nodes), ("targets", &a.targets)], &[])?;
            (job(&["snp_necessary"], file, inline, Some("snp_necessary"))?, Knobs::Necessary)
        }
        Command::Construct(a) => (job(&["construct"], file, snp_fields(a)?, Some("construct"))?, Knobs::Construct),
        Command::Verify(a) => {
            let mut inline = inline_fields(&[("beta", &a.beta), ("r", &a.r)], &[])?;
            if let Some(w) = &a.witness {
                inline.map.insert("map".into(), Value::String(format!("witness_{w}")));
            }
            (job(&["verify"], file, inline, Some("verify"))?, Knobs::Construct)
        }
        Command::Mu(a) => (job(&["mu"], file, inline_fields(&[("matrix", &a.matrix)], &[])?, Some("mu"))?, Knobs::Mu),
        Command::Dist(a) => {
            let inline = inline_fields(&[("z1", &a.z1), ("z2", &a.z2)], &[])?;
            (job(&["dist"], file, inline, Some("dist"))?, Knobs::Decide)
        }
        Command::Member { domain } => {
            let inline = match domain {
                Some(MemberKind::Gamma(a)) | Some(MemberKind::Tetra(a)) => {
                    let mut f = inline_fields(&[("point", &a.point)], &[])?;
                    let d = if matches!(domain, Some(MemberKind::Gamma(_))) { "gamma" } else { "tetra" };
                    f.map.insert("domain".into(), Value::String(d.into()));
                    f
                }
                None => Fields { map: Map::new(), prefix: "--" },
            };
            let kind = domain.as_ref().map(|_| "member");
            if file.is_some() && domain.is_some() {
                return Err(CliError::Input {
                    field: "--input".into(),
                    message: "give either a domain with --point or --input FILE".into(),
                });
            }
            (job(&["member"], file, inline, kind)?, Knobs::Member)
        }
    };
    apply_flags(&mut job.settings, knobs, cli.grid, cli.tol)?;
    commands::execute(&job.kind, &job.fields, &job.settings)
}

fn snp_fields(a: &SnpArgs) -> Result<Fields, CliError> {
    inline_fields(&[("lambda1", &a.lambda1), ("lambda2", &a.lambda2), ("w1", &a.w1), ("w2", &a.w2)], &[])
}

/// Pretty JSON, or one `dotted.key: value` line per leaf in text mode.
fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            text_lines(value, "", &mut out);
            out
        }
    }
}

fn text_lines(value: &Value, prefix: &str, out: &mut String) {
    match value {
        Value::Object(map) if !map.is_empty() => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                text_lines(v, &key, out);
            }
        }
        Value::String(s) => out.push_str(&format!("{prefix}: {s}\n")),
        other => out.push_str(&format!("{prefix}: {other}\n")),
    }
}

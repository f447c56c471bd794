use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use normhull::m0::{m0_body, m0_objective_at, m0_search, M0Params, ARC_RESOLUTION};
use normhull::{Point, VolumeKind};
use normhull_cli::io::{emit, read_body};
use normhull_cli::render::{render, Scene};
use normhull_cli::report::{compute, ComputeOptions};
use normhull_cli::search::{self, Objective, SearchConfig};
use normhull_cli::verify::{self, Level};
use normhull_cli::CliError;
use serde_json::json;

#[derive(Parser)]
#[command(name = "normhull", version, about = "Normed areas and translation constants of planar convex bodies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Areas, extremal figures and c_tr constants of one body.
    Compute(ComputeArgs),
    /// Run the verification table; exits 1 if any gating row fails.
    Verify(VerifyArgs),
    /// Hill-climb for bodies extremal for one c_tr^τ.
    Search(SearchArgs),
    /// Draw a construction as SVG.
    Render(RenderArgs),
    /// Evaluate or maximize the M₀ objective.
    M0(M0Args),
}

#[derive(Args)]
struct Common {
    /// Vertex count for smooth shapes that do not give one.
    #[arg(long, default_value_t = 4096)]
    resolution: usize,
    #[arg(long)]
    seed: Option<u64>,
    /// Write the output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long)]
    body: PathBuf,
    /// Volume definitions to report; all four when omitted.
    #[arg(long, value_parser = parse_kind)]
    kind: Vec<VolumeKind>,
    #[arg(long)]
    json: bool,
    /// Leave `meta.ms` null so repeated runs produce identical reports.
    #[arg(long)]
    no_timing: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = LevelArg::Quick)]
    level: LevelArg,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Min,
    Max,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, value_parser = parse_kind)]
    kind: VolumeKind,
    #[arg(long, value_enum, default_value_t = ObjectiveArg::Max)]
    objective: ObjectiveArg,
    /// Search among o-symmetric bodies.
    #[arg(long)]
    symmetric: bool,
    #[arg(long, default_value_t = 12)]
    vertices: usize,
    #[arg(long, default_value_t = 1000)]
    iterations: usize,
    #[arg(long, default_value_t = 8)]
    restarts: usize,
    #[arg(long, default_value_t = 0.5)]
    step: f64,
    #[arg(long, default_value_t = 0.995)]
    decay: f64,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Reuleaux,
    Radon,
    Translate,
    M0,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(value_enum)]
    construction: Construction,
    /// Unit disk of the norm (reuleaux, radon).
    #[arg(long)]
    norm: Option<PathBuf>,
    /// Body to translate (translate).
    #[arg(long)]
    body: Option<PathBuf>,
    /// Corner direction of the Reuleaux triangle, in radians.
    #[arg(long)]
    angle: Option<f64>,
    /// Translation vector `x,y`; the maximizing one when omitted.
    #[arg(long, value_parser = parse_vector, allow_hyphen_values = true)]
    v: Option<Point>,
    /// Semi-major axis of M₀.
    #[arg(long, default_value_t = 1.61803)]
    a: f64,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct M0Args {
    /// Golden-section search for the maximizing semi-axis.
    #[arg(long, conflicts_with = "eval")]
    search: bool,
    #[arg(long, default_value_t = 1.1)]
    lo: f64,
    #[arg(long, default_value_t = 2.5)]
    hi: f64,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    /// Evaluate the objective at this semi-axis.
    #[arg(long)]
    eval: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_kind(s: &str) -> Result<VolumeKind, String> {
    s.parse::<VolumeKind>().map_err(|e| e.to_string())
}

fn parse_vector(s: &str) -> Result<Point, String> {
    let (x, y) = s.split_once(',').ok_or("expected x,y")?;
    let f = |t: &str| t.trim().parse::<f64>().map_err(|e| e.to_string());
    Ok(Point::new(f(x)?, f(y)?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Compute(args) => {
            let spec = read_body(&args.body)?;
            let opts = ComputeOptions {
                kinds: if args.kind.is_empty() {
                    VolumeKind::ALL.to_vec()
                } else {
                    args.kind
                },
                resolution: args.common.resolution,
                seed: args.common.seed,
                timing: !args.no_timing,
            };
            let report = compute(&spec, &opts)?;
            let text = if args.json { report.to_json() } else { report.to_text() };
            emit(args.common.out.as_deref(), text.trim_end())?;
            Ok(0)
        }
        Command::Verify(args) => {
            let level = match args.level {
                LevelArg::Quick => Level::Quick,
                LevelArg::Full => Level::Full,
            };
            let checks = verify::run(level);
            if args.json {
                println!("{}", serde_json::to_string_pretty(&checks).expect("checks serialize"));
            } else {
                for c in &checks {
                    println!("{}", c.line());
                }
            }
            Ok(verify::exit_status(&checks))
        }
        Command::Search(args) => {
            let cfg = SearchConfig {
                kind: args.kind,
                objective: match args.objective {
                    ObjectiveArg::Min => Objective::Minimize,
                    ObjectiveArg::Max => Objective::Maximize,
                },
                symmetric: args.symmetric,
                vertices: args.vertices,
                iterations: args.iterations,
                restarts: args.restarts,
                seed: args.common.seed.unwrap_or(0),
                step: args.step,
                decay: args.decay,
            };
            let outcome = search::run(&cfg)?;
            let text = serde_json::to_string_pretty(&outcome).expect("outcomes serialize");
            emit(args.common.out.as_deref(), &text)?;
            if outcome.bracket_ok {
                Ok(0)
            } else {
                eprintln!("search left the bracket {:?}: kernel bug", outcome.bracket);
                Ok(1)
            }
        }
        Command::Render(args) => {
            let need = |p: &Option<PathBuf>, flag: &str| -> Result<normhull::Body, CliError> {
                let path = p.as_deref().ok_or_else(|| CliError::Usage(format!("{flag} is required")))?;
                read_body(path)?.build(args.common.resolution)
            };
            let scene = match args.construction {
                Construction::Reuleaux => Scene::Reuleaux {
                    norm: need(&args.norm, "--norm")?,
                    x: args.angle,
                },
                Construction::Radon => Scene::Radon {
                    norm: need(&args.norm, "--norm")?,
                },
                Construction::Translate => Scene::Translate {
                    body: need(&args.body, "--body")?,
                    v: args.v,
                },
                Construction::M0 => Scene::M0 {
                    a: args.a,
                    resolution: args.common.resolution.min(ARC_RESOLUTION),
                },
            };
            let svg = render(&scene)?;
            emit(args.common.out.as_deref(), svg.trim_end())?;
            Ok(0)
        }
        Command::M0(args) => m0(args),
    }
}

fn m0(args: M0Args) -> Result<i32, CliError> {
    let a = match (args.search, args.eval) {
        (true, _) => m0_search(args.lo, args.hi, args.tol)?.0,
        (false, Some(a)) => a,
        (false, None) => return Err(CliError::Usage("pass --search or --eval <a>".into())),
    };
    let params = M0Params::new(a, ARC_RESOLUTION)?;
    let body = m0_body(&params)?;
    let value = json!({
        "a": a,
        "b": params.b(),
        "objective": m0_objective_at(a, ARC_RESOLUTION)?,
        "area": body.area(),
        "polar_area": body.polar()?.area(),
    });
    emit(args.out.as_deref().map(Path::new), &serde_json::to_string_pretty(&value).expect("json"))?;
    Ok(0)
}

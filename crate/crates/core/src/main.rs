//! Command-line front end: evaluate helicoid fields, invert them, run
//! convergence reports, lift paths through the exponential covering, export
//! meshes and emit machine-readable JSON.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use helicover::covering::{lift_path, winding_number, SampledPath};
use helicover::error::Error;
use helicover::limits::StripSpec;
use helicover::logmap::sheet_index;
use helicover::pathio;
use helicover::report::{run_report, ReportConfig};
use helicover::{
    exp_field, log_general, mesh, strip_convergence, GridSpec, HelicoidParams, HelicoidPoint,
    Tolerance,
};

#[derive(Parser)]
#[command(name = "helicover", version, about = "Helicoid embeddings of C and the sheeted logarithm")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the pitch-a helicoid field at a complex point
    Eval(EvalArgs),
    /// Invert a helicoid point back to the complex plane
    Invert(InvertArgs),
    /// Strip convergence report for the pitch-1/n field
    Converge(ConvergeArgs),
    /// Lift a sampled path through the exponential covering
    Lift(LiftArgs),
    /// Export a sampled helicoid surface as Wavefront OBJ
    Mesh(MeshArgs),
    /// Seeded reproducibility report over the full property suite
    Report(ReportArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Pitch parameter a > 0
    #[arg(long)]
    a: f64,
    /// Complex point, written a+bi with no spaces
    #[arg(long, allow_hyphen_values = true)]
    z: String,
}

#[derive(Args)]
struct InvertArgs {
    #[arg(long)]
    a: f64,
    /// Planar x coordinate
    #[arg(long, allow_hyphen_values = true)]
    x: f64,
    /// Planar y coordinate
    #[arg(long, allow_hyphen_values = true)]
    y: f64,
    /// Height coordinate
    #[arg(long = "height", allow_hyphen_values = true)]
    h: f64,
}

#[derive(Args)]
struct ConvergeArgs {
    #[arg(long)]
    n: u32,
    /// Imaginary-part bound M of the strip |Im z| < M
    #[arg(long = "m-bound")]
    m_bound: f64,
    #[arg(long, default_value_t = -2.0, allow_hyphen_values = true)]
    u_min: f64,
    #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
    u_max: f64,
    #[arg(long, default_value_t = 101)]
    nu: usize,
    #[arg(long, default_value_t = 101)]
    nv: usize,
}

#[derive(Args)]
struct LiftArgs {
    /// CSV file with re,im columns (header optional), or JSON with --json
    #[arg(long)]
    input: PathBuf,
    /// Treat the input as a JSON array of [re, im] pairs
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = 0)]
    start_sheet: i64,
    /// The path is a closed loop; adds monodromy and winding cross-checks
    #[arg(long)]
    closed: bool,
}

#[derive(Args)]
struct MeshArgs {
    #[arg(long)]
    a: f64,
    #[arg(long, allow_hyphen_values = true)]
    u_min: f64,
    #[arg(long, allow_hyphen_values = true)]
    u_max: f64,
    #[arg(long, allow_hyphen_values = true)]
    v_min: f64,
    #[arg(long, allow_hyphen_values = true)]
    v_max: f64,
    #[arg(long)]
    nu: usize,
    #[arg(long)]
    nv: usize,
    /// Output OBJ file
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Additional closed CSV paths to monodromy-check
    #[arg(long = "path")]
    paths: Vec<PathBuf>,
}

// Exit codes: 0 ok, 1 usage/input, 2 numeric domain, 3 i/o.
fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::BadInput(_) | Error::InvalidParameter(_) | Error::DimensionMismatch { .. } => 1,
        Error::Io(_) => 3,
        _ => 2,
    }
}

#[derive(Serialize)]
struct EvalOut {
    h: f64,
    x: f64,
    y: f64,
}

#[derive(Serialize)]
struct InvertOut {
    im: f64,
    re: f64,
    sheet: i64,
}

#[derive(Serialize)]
struct ConvergeOut {
    #[serde(rename = "M")]
    m_bound: f64,
    n: u32,
    pass: bool,
    samples: usize,
    sup_observed: f64,
    sup_predicted: f64,
}

#[derive(Serialize)]
struct LiftOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
    end_sheet: i64,
    lifted: Vec<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    monodromy: Option<i64>,
    start_sheet: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    winding: Option<i64>,
}

fn emit<T: Serialize>(value: &T) -> Result<(), Error> {
    let line = serde_json::to_string(value).map_err(|e| Error::Io(e.to_string()))?;
    println!("{line}");
    Ok(())
}

fn run(cli: Cli) -> Result<(), Error> {
    let tol = Tolerance::from_env()?;
    match cli.command {
        Command::Eval(args) => {
            let p = HelicoidParams::new(args.a)?;
            let z = pathio::parse_complex_literal(&args.z)?;
            let q = exp_field(p, z)?;
            emit(&EvalOut { h: q.h, x: q.x, y: q.y })
        }
        Command::Invert(args) => {
            let p = HelicoidParams::new(args.a)?;
            let z = log_general(p, HelicoidPoint::new(args.x, args.y, args.h))?;
            emit(&InvertOut {
                im: z.im,
                re: z.re,
                sheet: sheet_index(z)?,
            })
        }
        Command::Converge(args) => {
            let strip = StripSpec::new(args.m_bound, args.u_min, args.u_max)?;
            let report = strip_convergence(args.n, &strip, args.nu, args.nv)?;
            emit(&ConvergeOut {
                m_bound: report.m_bound,
                n: report.n,
                pass: report.passes(tol.abs_eps),
                samples: report.samples,
                sup_observed: report.sup_observed,
                sup_predicted: report.sup_predicted,
            })
        }
        Command::Lift(args) => {
            let text = fs::read_to_string(&args.input)?;
            let points = if args.json {
                pathio::parse_json(&text)?
            } else {
                pathio::parse_csv(&text)?
            };
            let path = SampledPath::new(points, args.closed)?;
            let lifted = lift_path(&path, args.start_sheet)?;
            let (winding, monodromy, agree) = if args.closed {
                let w = winding_number(&path)?;
                let m = lifted.end_sheet - lifted.start_sheet;
                (Some(w), Some(m), Some(w == m))
            } else {
                (None, None, None)
            };
            emit(&LiftOut {
                agree,
                end_sheet: lifted.end_sheet,
                lifted: pathio::to_pairs(&lifted.points),
                monodromy,
                start_sheet: lifted.start_sheet,
                winding,
            })
        }
        Command::Mesh(args) => {
            let p = HelicoidParams::new(args.a)?;
            let spec = GridSpec::new(args.u_min, args.u_max, args.v_min, args.v_max, args.nu, args.nv)?;
            let file = fs::File::create(&args.out)?;
            let mut writer = std::io::BufWriter::new(file);
            mesh::write_obj(&mut writer, p, &spec)?;
            writer.flush()?;
            Ok(())
        }
        Command::Report(args) => {
            let mut cfg = ReportConfig::with_seed(args.seed)?;
            for path in &args.paths {
                let text = fs::read_to_string(path)?;
                let points = pathio::parse_csv(&text)?;
                cfg.extra_paths.push(SampledPath::new(points, true)?);
            }
            let out = run_report(&cfg)?;
            emit(&out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

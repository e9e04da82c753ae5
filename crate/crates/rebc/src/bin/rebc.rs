//! Thin command-line front end; all computation lives in the library.
//!
//! Exit codes: 0 on success, 2 on invalid input, 3 on an oracle
//! verification mismatch (never expected; it would indicate a bug).

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rebc::bundlealgebra::FormalBundle;
use rebc::cli::{self, Report, Request, DEFAULT_GRID};
use rebc::picard::PicClass;
use rebc::{CurveSpec, TorusPoint};

#[derive(Parser)]
#[command(
    name = "rebc",
    about = "Classification of vector bundles over real elliptic curves",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct CurveArg {
    /// Curve as inline JSON, a path to a JSON file, or `-` for stdin.
    #[arg(long)]
    curve: String,
}

#[derive(Args)]
struct VerifyArg {
    /// Cross-check the analytic report with the grid oracle at resolution N
    /// (even). Without a value, N comes from REBC_DEFAULT_GRID, default 12.
    #[arg(long, value_name = "N", num_args = 0..=1, default_missing_value = "env")]
    verify: Option<String>,
}

impl VerifyArg {
    fn resolve(&self) -> Result<Option<u32>, String> {
        match self.verify.as_deref() {
            None => Ok(None),
            Some("env") => match std::env::var("REBC_DEFAULT_GRID") {
                Ok(s) => s
                    .parse::<u32>()
                    .map(Some)
                    .map_err(|e| format!("bad REBC_DEFAULT_GRID {s:?}: {e}")),
                Err(_) => Ok(Some(DEFAULT_GRID)),
            },
            Some(raw) => raw
                .parse::<u32>()
                .map(Some)
                .map_err(|e| format!("bad --verify value {raw:?}: {e}")),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify the moduli space M_X(r,d) and the indecomposable locus.
    Classify {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        rank: u32,
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
        #[command(flatten)]
        verify: VerifyArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Real locus of the Picard variety Pic^d.
    Picard {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
        #[command(flatten)]
        verify: VerifyArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Topological types of real/quaternionic bundles; with --genus >= 2,
    /// the coprime component-count table.
    Topo {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        rank: u32,
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
        #[arg(long)]
        genus: Option<u32>,
        /// Number of real circles of the (abstract) higher-genus curve.
        #[arg(long)]
        n_components: Option<u32>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Krull-Schmidt algebra on a formal bundle.
    Algebra {
        #[command(flatten)]
        curve: CurveArg,
        /// Bundle as inline JSON, a file path, or `-` for stdin.
        #[arg(long)]
        bundle: String,
        /// One of: normal-form, slope, semistable, polystable, gr, s-equiv,
        /// dual, twist.
        #[arg(long)]
        op: String,
        /// Second bundle for op s-equiv.
        #[arg(long)]
        other: Option<String>,
        /// Degree-0 line bundle class for op twist.
        #[arg(long)]
        line: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Indecomposable classes of rank r and degree d.
    Indec {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        rank: u32,
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
        /// Stable-determinant coordinate of one class to classify.
        #[arg(long)]
        point: Option<String>,
        #[command(flatten)]
        verify: VerifyArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run a full request envelope read from a file or stdin.
    Request {
        /// Path to the request JSON, or `-` for stdin (default).
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Inline JSON, a file path, or `-` for stdin.
fn read_source(raw: &str) -> Result<String, String> {
    let trimmed = raw.trim();
    if trimmed == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(buf)
    } else if trimmed.starts_with('{') || trimmed.starts_with('[') {
        Ok(trimmed.to_string())
    } else {
        std::fs::read_to_string(trimmed).map_err(|e| format!("reading {trimmed:?}: {e}"))
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(raw: &str, what: &str) -> Result<T, String> {
    let text = read_source(raw)?;
    serde_json::from_str(&text).map_err(|e| format!("bad {what} JSON: {e}"))
}

fn emit(report: &Report, format: Format) -> Result<(), String> {
    let rendered = match format {
        Format::Json => cli::report_to_json(report),
        Format::Text => cli::report_to_text(report),
    }
    .map_err(|e| e.to_string())?;
    print!("{rendered}");
    Ok(())
}

fn run() -> Result<Report, String> {
    let args = Cli::parse();
    let (report, format) = match args.command {
        Command::Classify {
            curve,
            rank,
            degree,
            verify,
            format,
        } => {
            let c: CurveSpec = parse_json(&curve.curve, "curve")?;
            let report = cli::cmd_classify(&c, rank, degree, verify.resolve()?)
                .map_err(|e| e.to_string())?;
            (report, format)
        }
        Command::Picard {
            curve,
            degree,
            verify,
            format,
        } => {
            let c: CurveSpec = parse_json(&curve.curve, "curve")?;
            let report =
                cli::cmd_picard(&c, degree, verify.resolve()?).map_err(|e| e.to_string())?;
            (report, format)
        }
        Command::Topo {
            curve,
            rank,
            degree,
            genus,
            n_components,
            format,
        } => {
            let c: CurveSpec = parse_json(&curve.curve, "curve")?;
            let report = cli::cmd_topo(&c, rank, degree, genus, n_components)
                .map_err(|e| e.to_string())?;
            (report, format)
        }
        Command::Algebra {
            curve,
            bundle,
            op,
            other,
            line,
            format,
        } => {
            let c: CurveSpec = parse_json(&curve.curve, "curve")?;
            let bundle: FormalBundle = parse_json(&bundle, "bundle")?;
            let other: Option<FormalBundle> = match other {
                Some(raw) => Some(parse_json(&raw, "other bundle")?),
                None => None,
            };
            let line: Option<PicClass> = match line {
                Some(raw) => Some(parse_json(&raw, "line")?),
                None => None,
            };
            let report = cli::cmd_algebra(&c, &op, &bundle, other.as_ref(), line.as_ref())
                .map_err(|e| e.to_string())?;
            (report, format)
        }
        Command::Indec {
            curve,
            rank,
            degree,
            point,
            verify,
            format,
        } => {
            let c: CurveSpec = parse_json(&curve.curve, "curve")?;
            let point: Option<TorusPoint> = match point {
                Some(raw) => Some(parse_json(&raw, "point")?),
                None => None,
            };
            let report = cli::cmd_indec(&c, rank, degree, point.as_ref(), verify.resolve()?)
                .map_err(|e| e.to_string())?;
            (report, format)
        }
        Command::Request { input, format } => {
            let req: Request = parse_json(&input, "request")?;
            let report = cli::run_request(&req).map_err(|e| e.to_string())?;
            (report, format)
        }
    };
    emit(&report, format)?;
    Ok(report)
}

fn main() -> ExitCode {
    match run() {
        Ok(report) if report.verification_ok() => ExitCode::SUCCESS,
        Ok(_) => {
            eprintln!("error: oracle verification mismatch (this indicates a bug)");
            ExitCode::from(3)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

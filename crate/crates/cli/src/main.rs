//! `defcoh`: deformation cohomology of Lie algebras, representations,
//! LA-vector spaces and 2-vector spaces from instance files.
//!
//! Exit codes: 0 success, 1 validation or assertion failure, 2 parse error.

mod commands;
mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use defcoh::instance::{parse_instance, Instance, InstanceFile, DEFAULT_MAX_DIM};

use commands::{CmdResult, Failure};
use report::Report;

#[derive(Parser)]
#[command(name = "defcoh", version, about = "Exact deformation cohomology at desk scale")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    format: Format,

    /// Also write each report to this directory, one file per instance.
    #[arg(long, global = true)]
    report_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Cohomology dimensions of one of the complexes attached to an instance.
    Cohomology {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_enum)]
        complex: ComplexKind,
        /// Inclusive range `a..b`; negative degrees are allowed.
        #[arg(long, value_parser = parse_degrees, allow_hyphen_values = true)]
        degrees: Option<(i64, i64)>,
    },
    /// Runs one verification suite.
    Check {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_enum)]
        suite: Suite,
        /// Seed for the randomized suites (mc, weights).
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Same as `check --suite les`.
    Les {
        #[command(flatten)]
        inputs: Inputs,
        /// Last degree of the sequence.
        #[arg(long, default_value_t = 1)]
        max_degree: i64,
    },
    /// Same as `check --suite vanest`.
    Vanest {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Integrates the gauge flow generated by `ad_ξ` and compares the endpoint
    /// with the conjugation oracle.
    Gauge {
        path: PathBuf,
        /// Basis index, basis name, or comma-separated coordinates.
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
        #[arg(long, default_value_t = 1.0)]
        eps: f64,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
    },
    /// Writes a seeded random instance.
    Random {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// `n` for catalog-lie, `n,m` for vb, `m,p` for la and twovect. One
        /// value applies to every slot.
        #[arg(long, value_delimiter = ',')]
        dim_caps: Vec<usize>,
        /// Destination file; standard output when absent.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Inputs {
    /// One or more instance files, processed concurrently.
    #[arg(required = true)]
    paths: Vec<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComplexKind {
    Ce,
    Def,
    Linear,
    Cone,
    ThreeTerm,
    GroupoidFull,
    GroupoidNormalized,
}

impl ComplexKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::Ce => "ce",
            Self::Def => "def",
            Self::Linear => "linear",
            Self::Cone => "cone",
            Self::ThreeTerm => "three-term",
            Self::GroupoidFull => "groupoid-full",
            Self::GroupoidNormalized => "groupoid-normalized",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Mc,
    Les,
    Split,
    QuasiIso,
    Vanest,
    Weights,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Self::Mc => "mc",
            Self::Les => "les",
            Self::Split => "split",
            Self::QuasiIso => "quasi-iso",
            Self::Vanest => "vanest",
            Self::Weights => "weights",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    CatalogLie,
    Vb,
    La,
    Twovect,
}

fn parse_degrees(s: &str) -> Result<(i64, i64), String> {
    let bad = || format!("expected `a..b` or a single degree, got {s:?}");
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let k = s.trim().parse().map_err(|_| bad())?;
            (k, k)
        }
    };
    if a > b {
        return Err(format!("empty degree range {a}..{b}"));
    }
    Ok((a, b))
}

/// The ambient-dimension cap, overridable through `DEFCOH_MAX_DIM`.
fn max_dim() -> CmdResult<usize> {
    match std::env::var("DEFCOH_MAX_DIM") {
        Ok(v) => v.trim().parse().map_err(|_| Failure {
            code: 2,
            message: format!("DEFCOH_MAX_DIM must be a nonnegative integer, got {v:?}"),
        }),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

fn load(path: &Path, cap: usize) -> CmdResult<(InstanceFile, Instance)> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    parse_instance(&text, cap).map_err(|e| {
        let f = Failure::from(e);
        Failure {
            code: f.code,
            message: format!("{}: {}", path.display(), f.message),
        }
    })
}

/// Write-then-rename, so a report file is either absent or complete.
fn write_atomically(dest: &Path, contents: &str) -> CmdResult<()> {
    let io = |e: std::io::Error| Failure {
        code: 1,
        message: format!("cannot write {}: {e}", dest.display()),
    };
    let tmp = dest.with_extension("partial");
    fs::write(&tmp, contents).map_err(io)?;
    fs::rename(&tmp, dest).map_err(io)
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Table => report.to_text(),
        Format::Structured => report.to_json(),
    }
}

type Body<'a> = dyn Fn(&mut Report, &Instance) -> CmdResult<()> + Sync + 'a;

/// Loads each file, runs `body` on it, and returns one outcome per path in
/// input order. Each instance runs on its own thread.
fn run_batch(echo: &[String], paths: &[PathBuf], cap: usize, body: &Body) -> Vec<CmdResult<Report>> {
    std::thread::scope(|s| {
        let handles: Vec<_> = paths
            .iter()
            .map(|path| {
                s.spawn(move || {
                    let start = Instant::now();
                    let (file, inst) = load(path, cap)?;
                    let mut report = Report::new(echo.to_vec());
                    report.instance = Some(commands::instance_info(&file, &inst, &path.display().to_string()));
                    body(&mut report, &inst)?;
                    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
                    Ok(report)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| {
                h.join().unwrap_or_else(|_| {
                    Err(Failure {
                        code: 1,
                        message: "internal error while processing an instance".into(),
                    })
                })
            })
            .collect()
    })
}

fn emit(cli: &Cli, paths: &[PathBuf], outcomes: Vec<CmdResult<Report>>) -> u8 {
    let mut code = 0;
    let stdout = std::io::stdout();
    for (path, outcome) in paths.iter().zip(outcomes) {
        match outcome {
            Ok(report) => {
                let text = render(&report, cli.format);
                let _ = stdout.lock().write_all(text.as_bytes());
                if let Some(dir) = &cli.report_dir {
                    let ext = if cli.format == Format::Structured { "json" } else { "txt" };
                    let stem = path.file_stem().map_or("report".into(), |s| s.to_string_lossy().into_owned());
                    if let Err(f) = write_atomically(&dir.join(format!("{stem}.{ext}")), &text) {
                        eprintln!("error: {}", f.message);
                        code = code.max(f.code);
                    }
                }
                if !report.passed() {
                    code = code.max(1);
                }
            }
            Err(f) => {
                eprintln!("error: {}", f.message);
                code = code.max(f.code);
            }
        }
    }
    code as u8
}

fn run(cli: &Cli, echo: &[String]) -> CmdResult<u8> {
    let cap = max_dim()?;
    let batch = |paths: &[PathBuf], body: &Body| Ok(emit(cli, paths, run_batch(echo, paths, cap, body)));
    match &cli.command {
        Command::Cohomology {
            inputs,
            complex,
            degrees,
        } => batch(&inputs.paths, &|r, i| commands::cohomology(r, i, *complex, *degrees)),
        Command::Check { inputs, suite, seed } => {
            batch(&inputs.paths, &|r, i| commands::check(r, i, *suite, *seed))
        }
        Command::Les { inputs, max_degree } => batch(&inputs.paths, &|r, i| {
            r.fact("suite", "les");
            commands::les(r, i, *max_degree)
        }),
        Command::Vanest { inputs } => batch(&inputs.paths, &|r, i| {
            r.fact("suite", "vanest");
            commands::vanest(r, i)
        }),
        Command::Gauge { path, xi, eps, steps } => {
            batch(std::slice::from_ref(path), &|r, i| commands::gauge(r, i, xi, *eps, *steps))
        }
        Command::Random {
            family,
            seed,
            dim_caps,
            output,
        } => {
            let json = commands::random_instance(*family, *seed, dim_caps, cap)?.to_json();
            match output {
                Some(p) => write_atomically(p, &json)?,
                None => print!("{json}"),
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli, &echo) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code as u8)
        }
    }
}

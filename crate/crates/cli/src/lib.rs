//! Command-line front end for `tropical-kummer`.
//!
//! Every command reads a surface configuration file and writes JSON with
//! exact rational strings to standard output. Errors are JSON objects on
//! standard error. Exit codes: 0 success, 1 failed verification, 2 bad input.

pub mod commands;
pub mod config;
pub mod error;
pub mod json;
pub mod verify;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use tropical_kummer::kummer::build_quartic;

use crate::config::SurfaceConfig;
use crate::error::CliError;
use crate::json::render;
use crate::verify::{run_verification, VerifyOptions};

#[derive(Debug, Parser)]
#[command(
    name = "tkummer",
    version,
    about = "Exact tropical theta functions and Kummer quartics"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Json,
    Off,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Irreducible or product type, with the reduced basis.
    Classify { file: PathBuf },
    /// Voronoi cell and, for hexagons, its 18-cell subdivision.
    Voronoi { file: PathBuf },
    /// Evaluate one second-order theta function.
    Theta {
        file: PathBuf,
        #[arg(long = "char", value_name = "J1J2")]
        characteristic: String,
        #[arg(long, value_name = "X1,X2", allow_hyphen_values = true)]
        point: String,
    },
    /// Evaluate the embedding into the affine chart of TP^3.
    Embed {
        file: PathBuf,
        #[arg(long, value_name = "X1,X2", allow_hyphen_values = true)]
        point: String,
    },
    /// Vertices and faces of the Kummer quartic.
    Surface {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        out: OutFormat,
        /// Decimal digits for OFF output.
        #[arg(long, default_value_t = 12)]
        precision: u32,
    },
    /// Tropicalize a truncated theta series.
    Series {
        file: PathBuf,
        #[arg(long = "char", value_name = "J1J2")]
        characteristic: String,
        #[arg(long, value_name = "X1,X2", allow_hyphen_values = true)]
        point: String,
        /// Box radius; a certified one is chosen when omitted.
        #[arg(long)]
        cutoff: Option<u64>,
    },
    /// Run every invariant check on seeded samples.
    Verify {
        file: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        samples: Option<u64>,
        /// Add per-check wall-clock times (makes output non-reproducible).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &CliError) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: render(&e.to_json()),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome::ok(e.to_string());
            }
            return Outcome::error(&CliError::Usage(e.to_string().trim_end().to_string()));
        }
    };
    match execute(cli.command) {
        Ok(o) => o,
        Err(e) => Outcome::error(&e),
    }
}

fn execute(command: Command) -> Result<Outcome, CliError> {
    let load = |file: &PathBuf| SurfaceConfig::load(file);
    let out = match command {
        Command::Classify { file } => render(&commands::classify(&load(&file)?.surface()?)),
        Command::Voronoi { file } => render(&commands::voronoi(&load(&file)?.surface()?)?),
        Command::Theta {
            file,
            characteristic,
            point,
        } => {
            let s = load(&file)?.surface()?;
            let chi = commands::parse_characteristic(&characteristic)?;
            let x = commands::parse_point(&point)?;
            render(&commands::theta(&s, chi, &x))
        }
        Command::Embed { file, point } => {
            let s = load(&file)?.surface()?;
            render(&commands::embed(&s, &commands::parse_point(&point)?)?)
        }
        Command::Surface {
            file,
            out,
            precision,
        } => {
            let k = build_quartic(&load(&file)?.surface()?)?;
            match out {
                OutFormat::Json => render(&commands::surface_json(&k)),
                OutFormat::Off => commands::surface_off(&k, precision),
            }
        }
        Command::Series {
            file,
            characteristic,
            point,
            cutoff,
        } => {
            let s = load(&file)?.surface()?;
            let chi = commands::parse_characteristic(&characteristic)?;
            let x = commands::parse_point(&point)?;
            render(&commands::series(&s, chi, &x, cutoff)?)
        }
        Command::Verify {
            file,
            seed,
            samples,
            timings,
        } => {
            let cfg = load(&file)?;
            let s = cfg.surface()?;
            let defaults = VerifyOptions::default();
            let opts = VerifyOptions {
                seed: seed.or(cfg.seed).unwrap_or(defaults.seed),
                samples: samples.or(cfg.samples).unwrap_or(defaults.samples),
            };
            let report = run_verification(&s, opts);
            let code = if report.all_passed() { 0 } else { 1 };
            return Ok(Outcome {
                code,
                stdout: render(&report.to_json(timings)),
                stderr: String::new(),
            });
        }
    };
    Ok(Outcome::ok(out))
}

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

mod commands;

#[derive(Parser, Debug)]
#[command(name = "ghcodes", version, about = "Generalized Hermitian codes over GF(2^r)")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Extension degree r of the constant field GF(2^r).
    #[arg(long, global = true)]
    pub r: Option<u32>,
    /// Irreducible modulus as an integer bitmask (decimal or 0x-prefixed hex).
    #[arg(long, global = true, value_parser = parse_int)]
    pub modulus: Option<u32>,
    /// TOML file with `r` and `modulus` keys; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Print field elements in hex.
    #[arg(long, global = true)]
    pub hex: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Curve summary and rational points.
    Curve {
        /// Also list every affine point as `alpha,beta`.
        #[arg(long)]
        points: bool,
    },
    /// Weierstrass semigroup, gaps, telescopic stages and designed distances.
    Semigroup {
        /// Explicit generators instead of the curve's semigroup.
        #[arg(long, value_delimiter = ',')]
        generators: Option<Vec<usize>>,
        /// Last index of the designed-distance table.
        #[arg(long, default_value_t = 24)]
        max_s: usize,
    },
    /// Monomial basis of L(sQ).
    Basis {
        #[arg(long)]
        s: usize,
    },
    /// Generator matrix and parameter report of GH_s.
    Code {
        #[arg(long, required_unless_present = "dual_sweep")]
        s: Option<usize>,
        /// Check the duality theorem for every l instead.
        #[arg(long)]
        dual_sweep: bool,
    },
    /// Minimum distance of GH_s.
    Distance {
        #[arg(long)]
        s: usize,
        #[arg(long, conflicts_with = "bounds_only")]
        exact: bool,
        #[arg(long)]
        bounds_only: bool,
        /// Lift the work budget.
        #[arg(long)]
        force: bool,
        /// Work budget in symbol operations (q^k * n).
        #[arg(long)]
        budget: Option<u128>,
        #[command(flatten)]
        threads: ThreadOpts,
    },
    /// Reproduce a parameter table as CSV.
    Tables {
        #[arg(long, value_enum)]
        which: Table,
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        threads: ThreadOpts,
    },
    /// Run the invariant checks and report each one.
    Verify {
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = 0x6768_636f_6465)]
        seed: u64,
        #[command(flatten)]
        threads: ThreadOpts,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct ThreadOpts {
    /// Worker threads for the distance search.
    #[arg(long, env = "GH_THREADS")]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Table {
    Distances,
    Designed,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    r: Option<u32>,
    modulus: Option<u32>,
}

fn parse_int(s: &str) -> Result<u32, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u32::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("`{s}`: {e}"))
}

/// Resolved field choice.
#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub r: u32,
    pub modulus: Option<u32>,
}

impl GlobalOpts {
    fn resolve(&self) -> Result<RunConfig> {
        let file = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                toml::from_str::<FileConfig>(&text).with_context(|| format!("parsing {}", path.display()))?
            }
            None => FileConfig::default(),
        };
        let r = self.r.or(file.r).unwrap_or(3);
        if r < 2 {
            bail!("r must be at least 2");
        }
        Ok(RunConfig { r, modulus: self.modulus.or(file.modulus) })
    }
}

/// Failure of a `verify` check, as opposed to bad input.
#[derive(Debug)]
pub struct VerificationFailed(pub usize);

impl std::fmt::Display for VerificationFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} check(s) failed", self.0)
    }
}

impl std::error::Error for VerificationFailed {}

fn run(cli: Cli) -> Result<()> {
    let cfg = cli.global.resolve()?;
    let mut buf = Vec::new();
    let outcome = commands::dispatch(&cli.command, &cfg, &cli.global, &mut buf);
    match &cli.global.out {
        Some(path) => fs::write(path, &buf).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().write_all(&buf)?,
    }
    outcome
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<VerificationFailed>() => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

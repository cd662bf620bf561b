//! `constaring` command-line front end.
//!
//! Every command prints one JSON document tagged with `"schema": "constaring/1"`.
//! Exit codes: 0 success, 1 verification failure, 2 usage or precondition error.

mod commands;
mod examples;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "constaring",
    version,
    about = "Constacyclic and quadratic residue codes over F_p[u]/(u^4 - u)"
)]
pub struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Factor x^n - 1 or x^n + 1 over F_p.
    Factor {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_sign)]
        sign: i8,
    },
    /// (1 - 2u^3)-constacyclic codes.
    #[command(subcommand)]
    Consta(ConstaCommand),
    /// Quadratic residue codes and their extensions.
    #[command(subcommand)]
    Qr(QrCommand),
    /// Reproduce the worked examples and diff them against fixtures.
    Examples {
        /// Fixture file; defaults to the copy built into the binary.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Override the Gaussian sum used for the length-19 system.
        #[arg(long)]
        theta: Option<u64>,
    },
    /// Arithmetic in the ring.
    #[command(subcommand)]
    Ring(RingCommand),
}

#[derive(Args, Debug, Clone)]
pub struct LengthArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub n: usize,
}

#[derive(Args, Debug, Clone)]
pub struct GeneratorArgs {
    #[command(flatten)]
    pub len: LengthArgs,
    /// Cyclic component generator, comma-separated coefficients, constant term first.
    #[arg(long, allow_hyphen_values = true)]
    pub g1: String,
    /// Negacyclic component generators.
    #[arg(long, allow_hyphen_values = true)]
    pub g2: String,
    #[arg(long, allow_hyphen_values = true)]
    pub g3: String,
    #[arg(long, allow_hyphen_values = true)]
    pub g4: String,
}

#[derive(Subcommand, Debug)]
pub enum ConstaCommand {
    /// Build a code from its four component generators.
    Build(GeneratorArgs),
    /// Count all constacyclic codes of length n.
    Count(LengthArgs),
    /// Dual code and its generator data.
    Dual(GeneratorArgs),
    /// Image under the length-doubling Gray map.
    Gray {
        #[command(flatten)]
        gens: GeneratorArgs,
        /// Largest image size for which the minimum distance is computed.
        #[arg(long, default_value_t = 1 << 20)]
        cap: u64,
    },
    /// Decide equivalence to a cyclic code and give the witness.
    Equiv(LengthArgs),
}

#[derive(Args, Debug, Clone)]
pub struct QrArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub q: u64,
    /// Square root of q* in F_p; defaults to the computed Gaussian sum.
    #[arg(long)]
    pub theta: Option<u64>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct CodeSelector {
    /// Code label such as Q1 or S14.
    #[arg(long, conflicts_with_all = ["mask", "family"])]
    pub label: Option<String>,
    /// Components using the non-residue idempotent, e.g. 1,3.
    #[arg(long)]
    pub mask: Option<String>,
    #[arg(long, requires = "mask")]
    pub family: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Lattice,
    Duality,
    Extended,
    All,
}

#[derive(Subcommand, Debug)]
pub enum QrCommand {
    /// Idempotents, residue sets and (optionally) one code.
    Build {
        #[command(flatten)]
        sys: QrArgs,
        #[command(flatten)]
        select: CodeSelector,
    },
    /// Run verification suites.
    Verify {
        #[command(flatten)]
        sys: QrArgs,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Extended code of length q + 1.
    Extend {
        #[command(flatten)]
        sys: QrArgs,
        #[command(flatten)]
        select: CodeSelector,
    },
    /// Image of the extended code under the length-quadrupling Gray map.
    Gray {
        #[command(flatten)]
        sys: QrArgs,
        #[command(flatten)]
        select: CodeSelector,
        /// Include the image basis in the report.
        #[arg(long)]
        basis: bool,
    },
}

#[derive(Args, Debug, Clone)]
pub struct RingArgs {
    #[arg(long)]
    pub p: u64,
    /// Element written as a+b*u+c*u^2+d*u^3.
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
}

#[derive(Subcommand, Debug)]
pub enum RingCommand {
    /// Coordinates on the four primitive idempotents.
    Decompose(RingArgs),
    Mul {
        #[command(flatten)]
        a: RingArgs,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    Inverse(RingArgs),
}

fn parse_sign(s: &str) -> Result<i8, String> {
    match s {
        "+1" | "1" | "+" => Ok(1),
        "-1" | "-" => Ok(-1),
        _ => Err(format!("sign must be +1 or -1, got {s:?}")),
    }
}

/// Failure modes mapped onto exit codes.
#[derive(Debug)]
pub enum Failure {
    /// Bad input or unmet precondition.
    Usage(String),
    /// A verification ran and did not pass; the report is still emitted.
    Verification(serde_json::Value),
}

impl From<constaring::Error> for Failure {
    fn from(e: constaring::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(out: &Option<PathBuf>, value: &serde_json::Value) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())? + "\n";
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = commands::run(&cli.command);
    let (value, code) = match result {
        Ok(v) => (v, 0),
        Err(Failure::Verification(v)) => (v, 1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            let v = render::tagged("error", serde_json::json!({ "message": msg }));
            (v, 2)
        }
    };
    if let Err(e) = emit(&cli.out, &value) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}

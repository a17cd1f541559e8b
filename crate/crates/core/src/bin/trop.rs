use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tropical_scheme::cli::{self, BoxSpec, Command, JobConfig, OutputFormat};
use tropical_scheme::scalar::{Rational, Valuation};

#[derive(Parser)]
#[command(name = "trop", version, about = "Exact scheme-theoretic tropicalization over the tropical hyperfield")]
struct Args {
    #[command(subcommand)]
    command: Cmd,

    /// Generators, as polynomial strings (repeat the flag or separate with ';').
    #[arg(long, global = true, value_delimiter = ';')]
    gens: Vec<String>,

    /// trivial | padic:<p>
    #[arg(long, global = true, default_value = "trivial")]
    valuation: Valuation,

    /// Number of variables (inferred from the generators if omitted).
    #[arg(long, global = true)]
    vars: Option<usize>,

    /// Allow negative exponents.
    #[arg(long, global = true)]
    laurent: bool,

    /// Sampling box, `lo:hi` for every axis or `lo1:hi1,lo2:hi2,...`.
    #[arg(long = "box", global = true, default_value = "0:4")]
    bounds: BoxSpec,

    /// Grid step, an exact rational.
    #[arg(long, global = true, default_value = "1/4")]
    step: Rational,

    /// Proof search depth.
    #[arg(long, global = true, default_value_t = 6)]
    depth: usize,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// json | csv | plot
    #[arg(long, global = true, default_value = "json")]
    format: OutputFormat,

    /// Decimal digits in plot output.
    #[arg(long, global = true, default_value_t = 6)]
    precision: usize,

    /// Plot log10 coordinates instead of raw values.
    #[arg(long, global = true)]
    log_coords: bool,

    /// Output file (stdout if omitted).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Clone, Copy)]
enum Cmd {
    /// Tropicalized presentation of the generators, as JSON.
    Tropicalize,
    /// 𝕋-points of the tropicalization on a rational grid.
    Sample,
    /// Bend relations of the generators with checked derivations.
    Bend,
    /// Seminorm catalog of the affine line and its restriction to T1 + T2 + 1 = 0.
    #[command(name = "analytify-a1")]
    AnalytifyA1,
    /// Seeded property suites.
    Verify,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("TROP_LOG")).init();
    let args = Args::parse();
    let command = match args.command {
        Cmd::Tropicalize => Command::Tropicalize,
        Cmd::Sample => Command::Sample,
        Cmd::Bend => Command::Bend,
        Cmd::AnalytifyA1 => Command::AnalytifyA1,
        Cmd::Verify => Command::Verify,
    };
    let config = JobConfig {
        command,
        generators: args.gens,
        valuation: args.valuation,
        num_vars: args.vars,
        laurent: args.laurent,
        bounds: args.bounds,
        step: args.step,
        format: args.format,
        depth: args.depth,
        seed: args.seed,
        precision: args.precision,
        log_coords: args.log_coords,
    };
    let output = match cli::run(&config) {
        Ok(output) => output,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &args.out {
        Some(path) => std::fs::write(path, &output.content),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(output.content.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    eprintln!("{}", output.summary);
    if output.success {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qdim_cli::{execute, parse_exponents, CliError, Command, Format, GroupConfig, Request};
use qdim_core::Scalar;

/// Rho spectra, d_t power sums and tensor-power growth for compact quantum groups.
#[derive(Parser)]
#[command(name = "qdim", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Group configuration (JSON, schema "qdim/1").
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Representation expression; defaults to `fund`.
    #[arg(long, global = true, value_name = "STRING")]
    expr: Option<String>,

    /// Working precision in decimal digits (overrides QDIM_PRECISION and the config).
    #[arg(long, global = true, value_name = "INT")]
    precision: Option<usize>,

    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,

    #[arg(long, global = true)]
    csv: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Eigenvalues of the rho operator.
    Spectrum,
    /// d_t and d_-t for each exponent.
    Dt {
        #[arg(long, value_name = "CSV", allow_hyphen_values = true, default_value = "1,2,3")]
        t: String,
    },
    /// Whether the spectrum is invariant under inversion.
    Symmetry,
    /// Irreducible decomposition of a tensor power.
    Decompose {
        #[arg(long, value_name = "INT", default_value_t = 1)]
        power: u32,
    },
    /// P_U(n), b(U,n) and a finite-sample growth classification.
    Growth {
        #[arg(long = "max-n", value_name = "INT")]
        max_n: Option<usize>,
    },
    /// Checks the inequalities d_t^n <= P_U(n)^(t-1) d_-t^n and their twins.
    Audit {
        #[arg(long = "max-n", value_name = "INT")]
        max_n: Option<usize>,
        #[arg(long, value_name = "CSV", allow_hyphen_values = true)]
        t: Option<String>,
    },
    /// F = diag(y, x, x) with Tr(F*F) = Tr((F*F)^-1).
    Counterexample {
        #[arg(long, value_name = "DECIMAL", default_value = "2")]
        y: String,
    },
}

fn command(cmd: Cmd) -> Result<Command, CliError> {
    Ok(match cmd {
        Cmd::Spectrum => Command::Spectrum,
        Cmd::Dt { t } => Command::Dt { t: parse_exponents(&t)? },
        Cmd::Symmetry => Command::Symmetry,
        Cmd::Decompose { power } => Command::Decompose { power },
        Cmd::Growth { max_n } => Command::Growth { max_n },
        Cmd::Audit { max_n, t } => Command::Audit { max_n, t: t.as_deref().map(parse_exponents).transpose()? },
        Cmd::Counterexample { y } => Command::Counterexample {
            y: Scalar::parse(&y).map_err(|_| CliError::Usage(format!("bad value for --y: {y:?}")))?,
        },
    })
}

fn run(cli: Cli) -> Result<String, CliError> {
    let format = match (cli.common.json, cli.common.csv) {
        (true, _) => Format::Json,
        (_, true) => Format::Csv,
        _ => Format::Text,
    };
    let request = Request {
        command: command(cli.command)?,
        config: cli.common.config.as_deref().map(GroupConfig::load).transpose()?,
        expr: cli.common.expr,
        precision: cli.common.precision,
        env_precision: std::env::var("QDIM_PRECISION").ok(),
    };
    Ok(execute(&request)?.render(format))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("qdim: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;

#[derive(Parser, Debug)]
#[command(
    name = "wonderful",
    version,
    about = "Check surjectivity of multiplication maps on rank-one wonderful varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Selects a variety: a built-in family or a JSON description.
#[derive(Args, Debug, Clone, Default)]
pub struct VarietyArgs {
    /// Built-in family: 9B, 9C, 15 or P1xP1.
    #[arg(long)]
    pub family: Option<String>,
    /// Family parameter for 9B and 9C.
    #[arg(long)]
    pub n: Option<usize>,
    /// Variety description as JSON, or `@path` to read it from a file.
    #[arg(long, conflicts_with = "family")]
    pub variety: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the built-in families, or show one entry.
    Catalog {
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Split the sections of L_λ into irreducible summands.
    Decompose {
        #[command(flatten)]
        variety: VarietyArgs,
        /// Comma-separated fundamental coordinates.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        json: bool,
    },
    /// Check surjectivity for one pair or sweep all pairs in a box.
    Verify {
        /// Sweep configuration file (JSON).
        #[arg(long, conflicts_with_all = ["family", "variety"])]
        config: Option<PathBuf>,
        /// Built-in family to sweep.
        #[arg(long)]
        family: Option<String>,
        /// Parameter, list or range: `3`, `2,4` or `2..6` (inclusive).
        #[arg(long)]
        n: Option<String>,
        /// Variety description as JSON, or `@path`.
        #[arg(long, conflicts_with = "family")]
        variety: Option<String>,
        /// With --mu, check a single pair instead of sweeping.
        #[arg(long, requires = "mu", allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, requires = "lambda", allow_hyphen_values = true)]
        mu: Option<String>,
        /// Cap on the coordinates of swept weights.
        #[arg(long)]
        max_coeff: Option<i64>,
        /// Cross-check explicit models by exact rank.
        #[arg(long)]
        with_oracle: bool,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        /// Report path; the report goes to stdout otherwise.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact-rank check of multiplication in an explicit graded ring.
    Oracle {
        /// P<n>, Q<n> or P1xP1; omit for the default grid.
        #[arg(long)]
        model: Option<String>,
        /// Overrides the index in --model (`--model P --n 3`).
        #[arg(long)]
        n: Option<usize>,
        /// Degree `d` or bidegree `d1,d2`.
        #[arg(long, requires = "d2")]
        d: Option<String>,
        #[arg(long, requires = "d")]
        d2: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Catalog { family, n, json } => commands::catalog(family.as_deref(), n, json),
        Command::Decompose {
            variety,
            lambda,
            json,
        } => commands::decompose(&variety, &lambda, json),
        Command::Verify {
            config,
            family,
            n,
            variety,
            lambda,
            mu,
            max_coeff,
            with_oracle,
            jobs,
            out,
        } => commands::verify(commands::VerifyOptions {
            config,
            family,
            n,
            variety,
            pair: lambda.zip(mu),
            max_coeff,
            with_oracle,
            jobs,
            out,
        }),
        Command::Oracle {
            model,
            n,
            d,
            d2,
            json,
        } => commands::oracle(model.as_deref(), n, d.zip(d2), json),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

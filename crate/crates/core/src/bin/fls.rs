use std::path::PathBuf;

use anyhow::Result;
use clap::{Parser, Subcommand};

use fls_core::cli;

#[derive(Parser)]
#[command(
    name = "fls",
    version,
    about = "Solve fuzzy linear systems with a crisp matrix"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the solution parallelepiped and write a solution file
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Also store these alpha-cuts, e.g. 0.4,0.7
        #[arg(long, value_name = "CSV")]
        alpha_levels: Option<String>,
    },
    /// Decide whether a point solves the system and with what possibility
    Check {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated coordinates, e.g. 0.5,4.5,0.9
        #[arg(long, allow_hyphen_values = true, value_name = "CSV")]
        point: String,
        /// Print the support-vector decomposition before the verdict
        #[arg(long, short)]
        verbose: bool,
    },
    /// List the vertices of one alpha-cut of the solution
    AlphaCut {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Report whether the matrix factors as diagonal times permutation
    Classify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Draw a 2-D system and its solution set as SVG
    Plot {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_name = "CSV")]
        alpha_levels: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn levels(csv: Option<&str>) -> Result<Vec<f64>> {
    Ok(match csv {
        Some(s) if !s.trim().is_empty() => cli::parse_csv(s)?,
        _ => Vec::new(),
    })
}

fn main() -> Result<()> {
    let args = Args::parse();
    let out = match &args.command {
        Command::Solve {
            input,
            output,
            alpha_levels,
        } => cli::cmd_solve(input, output.as_deref(), &levels(alpha_levels.as_deref())?)?,
        Command::Check {
            input,
            point,
            verbose,
        } => cli::cmd_check(input, point, cli::tolerance_from_env()?, *verbose)?,
        Command::AlphaCut {
            input,
            alpha,
            output,
        } => cli::cmd_alpha_cut(input, *alpha, output.as_deref())?,
        Command::Classify { input } => cli::cmd_classify(input)?,
        Command::Plot {
            input,
            alpha_levels,
            output,
        } => cli::cmd_plot(input, &levels(alpha_levels.as_deref())?, output.as_deref())?,
    };
    print!("{out}");
    Ok(())
}

//! `hecke-covers`: table generation for dual data, lengths, formal degrees and
//! Whittaker dimensions of central covers.
//!
//! Exit codes: 0 success, 2 validation failure, 3 non-convergence or cap exceeded.

mod commands;
mod job;
mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hecke_covers::root_datum::DEFAULT_WEYL_CAP;
use hecke_covers::Error;

use job::{CoverSpec, DegreeJob};
use output::{Format, Outcome, Report};

#[derive(Parser, Debug)]
#[command(name = "hecke-covers", version, about = "Exact tables for affine Hecke algebras of central covers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dual root datum: Y_{Q,n}, n_alpha, centers, oasitic flag.
    Datum(CommonArgs),
    /// Whittaker dimensions for every discrete-series character.
    Whittaker {
        #[command(flatten)]
        common: CommonArgs,
        /// Largest Weyl group order enumerated for the brute-force sum.
        #[arg(long, default_value_t = DEFAULT_WEYL_CAP)]
        cap: u64,
    },
    /// Truncated formal-degree series with a convergence certificate.
    FormalDegree {
        #[command(flatten)]
        common: CommonArgs,
        /// Residue field size, a rational > 1 such as 4 or 7/2.
        #[arg(long)]
        q: Option<String>,
        /// Truncation length.
        #[arg(long = "L")]
        truncation: Option<usize>,
        /// Relative tolerance for the last contribution.
        #[arg(long)]
        tol: Option<String>,
        /// steinberg, trivial, or braid-class signs such as -1,1,-1.
        #[arg(long, default_value = "steinberg", allow_hyphen_values = true)]
        sigma: String,
    },
    /// Elements of the ball of radius L with both lengths.
    Lengths {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long = "L")]
        radius: u64,
    },
    /// Numbers of elements of each length under both length functions.
    Poincare {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long = "L")]
        radius: u64,
    },
}

#[derive(Args, Debug)]
struct CommonArgs {
    /// Cartan type letter A-G.
    #[arg(long = "type")]
    letter: char,
    #[arg(long)]
    rank: usize,
    /// Degree of the cover.
    #[arg(long, default_value_t = 1)]
    n: u64,
    /// Value of the quadratic form on short coroots.
    #[arg(long, default_value_t = 1)]
    q_short: u64,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Pretty,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Pretty => Format::Pretty,
        }
    }
}

const EXIT_VALIDATION: u8 = 2;
const EXIT_INCOMPLETE: u8 = 3;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotConverged { .. } | Error::Divergent(_) | Error::CapExceeded { .. } => EXIT_INCOMPLETE,
        _ => EXIT_VALIDATION,
    }
}

fn run(command: &Command) -> hecke_covers::Result<(Report, &CommonArgs)> {
    let cover = |c: &CommonArgs| CoverSpec::new(c.letter, c.rank, c.n, c.q_short);
    Ok(match command {
        Command::Datum(c) => (commands::datum(&cover(c)?)?, c),
        Command::Whittaker { common, cap } => (commands::whittaker(&cover(common)?, *cap)?, common),
        Command::FormalDegree {
            common,
            q,
            truncation,
            tol,
            sigma,
        } => {
            let job = DegreeJob::new(q.as_deref(), *truncation, tol.as_deref(), sigma)?;
            (commands::formal_degree(&cover(common)?, &job)?, common)
        }
        Command::Lengths { common, radius } => (commands::lengths(&cover(common)?, *radius)?, common),
        Command::Poincare { common, radius } => (commands::poincare(&cover(common)?, *radius)?, common),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, common) = match run(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let text = report.render(common.format.into());
    match &common.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_VALIDATION);
            }
        }
        None => print!("{text}"),
    }
    match report.outcome {
        Outcome::Complete => ExitCode::SUCCESS,
        Outcome::Incomplete => ExitCode::from(EXIT_INCOMPLETE),
    }
}

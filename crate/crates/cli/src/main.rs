//! `cesaro`: command-line experiments for summability methods.

mod commands;
mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "cesaro", version, about = "Cesàro and Wiener summability experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Comma-separated summability orders.
    #[arg(long, global = true, value_delimiter = ',', allow_negative_numbers = true)]
    pub alpha: Vec<f64>,

    /// Largest n (or j) in the schedule; each command has its own default.
    #[arg(long, global = true)]
    pub n_max: Option<usize>,

    /// log2 of the circle grid size.
    #[arg(long, global = true, default_value_t = 14, value_parser = clap::value_parser!(u32).range(8..=20))]
    pub grid_log2: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Output file, written atomically; stdout when omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Seed for random test functions and probes.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lebesgue constants of the Dirichlet kernel next to Fejér norms and errors.
    Lebesgue,
    /// Convergence of Cesàro means for a builtin test function.
    Cesaro {
        /// sup, l1, lp:P, hardy:P, bergman:P or bloch.
        #[arg(long, default_value = "sup")]
        target: String,
        /// abs_theta, dirac or random.
        #[arg(long, default_value = "abs_theta")]
        function: String,
        /// Degree of the random polynomial.
        #[arg(long, default_value_t = 64)]
        degree: usize,
    },
    /// Wiener matrix, its left inverse, residuals and row sums.
    Wiener {
        /// Coefficients of the generator f, one `re im` pair per line;
        /// defaults to (1−z)^{α+1}.
        #[arg(long)]
        f_file: Option<PathBuf>,
    },
    /// Ratios ‖P_j‖/B_j for Cesàro inverses.
    Limitation {
        /// continuous, hardy1, bergman1, hb-geom or hb-expsqrt.
        #[arg(long, default_value = "continuous")]
        space: String,
    },
    /// Monomial norms in H(b) and their growth profile.
    Hb {
        /// geom (z/(1−z)) or expsqrt (exp √((1+z)/(1−z))).
        #[arg(long, default_value = "geom")]
        phi: String,
        /// Taylor coefficients of φ, one `re im` pair per line; overrides --phi.
        #[arg(long)]
        phi_file: Option<PathBuf>,
    },
    /// Sequence-space counterexamples.
    Counterexample {
        /// shift_l2, rankone_l2, proj_l1 or mixed_l1.
        which: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    let report = commands::dispatch(cli)?;
    let text = match cli.format {
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json(),
    };
    output::emit(cli.out.as_deref(), &text)
}

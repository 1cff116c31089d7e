//! Command-line interface for the Severi-degree calculator.
//!
//! Exit codes: 0 success, 2 degenerate weights, 3 internal consistency
//! failure, 4 bad arguments.

use std::process::exit;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use severi::app::{self, Mode, OutputFormat, RunConfig};
use severi::{Cogenus, WeightTriple};

#[derive(Parser)]
#[command(
    name = "severi",
    version,
    about = "Exact degrees of the loci of 1-, 2-, and 3-nodal plane curves, by torus localization"
)]
struct Cli {
    /// Number of nodes (1, 2, or 3)
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    n: Option<u8>,

    /// Curve degree at which to evaluate the polynomial (symbolic mode)
    #[arg(long)]
    d: Option<i64>,

    /// Torus weights "a,b,c"; defaults to 0,1,2 for n=1,2 and 0,1,3 for n=3
    #[arg(long, allow_hyphen_values = true)]
    weights: Option<String>,

    #[arg(long, value_enum, default_value_t = ModeArg::Symbolic)]
    mode: ModeArg,

    #[arg(long, value_enum, default_value_t = FormatArg::Text, global = true)]
    format: FormatArg,

    /// Seed for the sampled weight triples in verify mode
    #[arg(long, default_value_t = 42)]
    seed: u64,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the known cogenus formulas f_1 .. f_6 (f_4 .. f_6 are external
    /// reference values, not computed here)
    Reference,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Compute f_n(d) symbolically (and evaluate it if --d is given)
    Symbolic,
    /// Evaluate numerically at 2n+1 degrees, interpolate, compare
    Interpolate,
    /// Check every fixed point against the embedded reference tables
    Verify,
    /// Emit the fixed-point census with all weight data
    Dump,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

impl From<ModeArg> for Mode {
    fn from(value: ModeArg) -> Mode {
        match value {
            ModeArg::Symbolic => Mode::Symbolic,
            ModeArg::Interpolate => Mode::Interpolate,
            ModeArg::Verify => Mode::Verify,
            ModeArg::Dump => Mode::Dump,
        }
    }
}

impl From<FormatArg> for OutputFormat {
    fn from(value: FormatArg) -> OutputFormat {
        match value {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Structured => OutputFormat::Structured,
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = err.print();
            exit(0);
        }
        Err(err) => {
            let _ = err.print();
            exit(4);
        }
    };

    if let Some(Command::Reference) = cli.command {
        println!("{}", app::reference_report(cli.format.into()));
        exit(0);
    }

    let Some(n_value) = cli.n else {
        eprintln!("error: --n <1|2|3> is required (or use the `reference` subcommand)");
        exit(4);
    };
    let n = Cogenus::from_u8(n_value).expect("clap range-checks --n");

    let weights = match cli.weights.as_deref().map(str::parse::<WeightTriple>).transpose() {
        Ok(weights) => weights,
        Err(err) => {
            eprintln!("error: {}", err);
            exit(4);
        }
    };

    let config = RunConfig {
        n,
        d: cli.d,
        weights,
        mode: cli.mode.into(),
        format: cli.format.into(),
        seed: cli.seed,
    };

    match app::run(&config) {
        Ok(report) => println!("{}", report),
        Err(err) => {
            eprintln!("error: {}", err);
            exit(err.exit_code());
        }
    }
}

//! `decompgen`: command-line front end for the decomposition engine.
//!
//! Exit codes: 0 success, 1 mathematical negative (for example a
//! non-trivial decomposition map), 2 invalid input, 3 outside the supported
//! scope, 4 internal consistency failure.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use decompgen::options::DEFAULT_SEED;
use decompgen::{ErrorClass, Options};

#[derive(Parser, Debug)]
#[command(name = "decompgen", version, about = "Decomposition matrices, radicals and strata of finite free algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Structured,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Prime of the base ring: `p=<int>`, `gen=[<poly>,...]` or `generic`.
    #[arg(long, default_value = "generic")]
    pub prime: String,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Cross-check results by a second method where one exists.
    #[arg(long)]
    pub verify: bool,
    /// Degree budget for polynomial factorization over Q.
    #[arg(long, default_value_t = decompgen::arith::factor::DEFAULT_MAX_DEGREE)]
    pub max_degree: usize,
}

impl Common {
    pub fn options(&self) -> Options {
        Options {
            seed: self.seed,
            max_degree: self.max_degree,
            verify: self.verify,
            ..Options::default()
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Load and validate an algebra definition.
    Validate(Input),
    /// Structure constants of the fiber at a prime.
    Fiber(Input),
    /// Jacobson radical of the fiber at a prime.
    Radical(Input),
    /// Simple modules of the fiber at a prime.
    Simples(Input),
    /// Whether the fiber at a prime is split.
    SplitCheck(Input),
    /// Characteristic-polynomial fingerprints of the simples at a prime.
    Fingerprint(Input),
    /// Decomposition matrix at a prime.
    Decmat(Input),
    /// Whether the decomposition map at a prime is trivial.
    Trivial(Input),
    /// Schur elements and their agreement with the discriminant.
    Schur(Input),
    /// Candidate discriminant with verified minimal primes.
    Discriminant(Input),
    /// Stratification of the spectrum of the base ring.
    Stratify(Input),
    /// Write the built-in example algebras as definition files.
    CorpusBuild {
        /// Output directory.
        dir: PathBuf,
    },
    /// Check the built-in examples end to end, in parallel.
    VerifyAll {
        #[command(flatten)]
        common: Common,
        /// Sampled trivial primes per algebra.
        #[arg(long, default_value_t = 10)]
        samples: usize,
    },
}

#[derive(Args, Debug)]
pub struct Input {
    /// Algebra definition file, or `corpus:<id>` for a built-in example.
    pub input: String,
    #[command(flatten)]
    pub common: Common,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate(i) => commands::validate(i),
        Command::Fiber(i) => commands::fiber(i),
        Command::Radical(i) => commands::radical(i),
        Command::Simples(i) => commands::simples(i),
        Command::SplitCheck(i) => commands::split_check(i),
        Command::Fingerprint(i) => commands::fingerprint(i),
        Command::Decmat(i) => commands::decmat(i),
        Command::Trivial(i) => commands::trivial(i),
        Command::Schur(i) => commands::schur(i),
        Command::Discriminant(i) => commands::discriminant(i),
        Command::Stratify(i) => commands::stratify(i),
        Command::CorpusBuild { dir } => commands::corpus_build(dir),
        Command::VerifyAll { common, samples } => commands::verify_all(common, *samples),
    };
    let format = match &cli.command {
        Command::CorpusBuild { .. } => Format::Table,
        Command::VerifyAll { common, .. } => common.format,
        Command::Validate(i)
        | Command::Fiber(i)
        | Command::Radical(i)
        | Command::Simples(i)
        | Command::SplitCheck(i)
        | Command::Fingerprint(i)
        | Command::Decmat(i)
        | Command::Trivial(i)
        | Command::Schur(i)
        | Command::Discriminant(i)
        | Command::Stratify(i) => i.common.format,
    };
    match result {
        Ok(outcome) => {
            print!("{}", outcome.report.render(format));
            ExitCode::from(if outcome.negative { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e.class() {
                ErrorClass::Validation => 2,
                ErrorClass::Unsupported => 3,
                ErrorClass::Internal => 4,
            })
        }
    }
}

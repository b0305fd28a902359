//! Command-line flags. Each flag sets exactly one [`Settings`] field or
//! the output format.

use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use finrel::eqrel::Mode;

use crate::run::Settings;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Scheme,
    Set,
}

/// Runs a finrel script and prints a report.
#[derive(Debug, Parser)]
#[command(name = "finrel", version)]
pub struct Args {
    /// Script file; standard input when absent or `-`.
    pub script: Option<PathBuf>,

    /// Degree bound for commands without `degree=`.
    #[arg(long, default_value_t = 10)]
    pub max_degree: u32,

    /// Primes for `effectivity` over QQ when the command gives no `primes=`.
    #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
    pub primes: Vec<u64>,

    /// Membership notion for `verify-relation` without `mode=`.
    #[arg(long, value_enum, default_value_t = ModeArg::Scheme)]
    pub mode: ModeArg,

    /// S-pair cap for each Groebner computation in rings without `budget=`.
    #[arg(long)]
    pub budget: Option<usize>,

    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

impl Args {
    pub fn settings(&self) -> Settings {
        Settings {
            max_degree: self.max_degree,
            primes: self.primes.clone(),
            mode: match self.mode {
                ModeArg::Scheme => Mode::Scheme,
                ModeArg::Set => Mode::Set,
            },
            budget: self.budget,
            ..Settings::default()
        }
    }
}

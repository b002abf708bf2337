use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use polylog_core::{Builtin, ConstructionId};

use crate::config::{Format, RunConfig, Suite};
use crate::digits::ConstantArg;
use crate::output::to_json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructionArg {
    LogDilog,
    Trilog,
    WellPoised,
}

impl From<ConstructionArg> for ConstructionId {
    fn from(c: ConstructionArg) -> Self {
        match c {
            ConstructionArg::LogDilog => ConstructionId::LogDilog,
            ConstructionArg::Trilog => ConstructionId::Trilog,
            ConstructionArg::WellPoised => ConstructionId::WellPoised,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RecurrenceArg {
    Thm1,
    Thm2,
    Thm3,
    #[value(name = "apery-z2")]
    AperyZ2,
}

impl From<RecurrenceArg> for Builtin {
    fn from(r: RecurrenceArg) -> Self {
        match r {
            RecurrenceArg::Thm1 => Builtin::Thm1,
            RecurrenceArg::Thm2 => Builtin::Thm2,
            RecurrenceArg::Thm3 => Builtin::Thm3,
            RecurrenceArg::AperyZ2 => Builtin::AperyZ2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "polylog-apery", version, about = "Rational approximations to polylogarithm values")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate a, b, b̃, b̃̃ and the remainders for n = 0..N.
    Compute {
        #[arg(long, value_enum)]
        construction: ConstructionArg,
        /// Evaluation point P/Q.
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        #[arg(long)]
        n: usize,
        /// Significant digits of the remainder columns.
        #[arg(long, default_value_t = 20)]
        digits: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite; exits nonzero on any failure.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute a constant from the approximations and compare with an
    /// independent evaluation.
    Digits {
        #[arg(long, value_enum)]
        constant: ConstantArg,
        #[arg(long)]
        digits: u32,
    },
    /// Characteristic roots of a recurrence.
    Roots {
        #[arg(long, value_enum)]
        recurrence: RecurrenceArg,
        #[arg(long, default_value_t = 20)]
        digits: u32,
    },
    /// Dump a built-in recurrence as JSON.
    DumpRecurrence {
        #[arg(long, value_enum)]
        recurrence: RecurrenceArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Output of a command and whether it succeeded.
pub struct Outcome {
    pub text: String,
    pub out: Option<PathBuf>,
    pub success: bool,
}

pub fn execute(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Compute {
            construction,
            z,
            n,
            digits,
            format,
            out,
        } => {
            let cfg = RunConfig::new(construction.into(), n, z.as_deref(), digits, format, out)?;
            Ok(Outcome {
                text: crate::compute::run(&cfg)?,
                out: cfg.out,
                success: true,
            })
        }
        Command::Verify { suite, max_n, out } => {
            let report = crate::verify::run(suite, max_n)?;
            Ok(Outcome {
                text: to_json(&report.to_json(suite, max_n))?,
                out,
                success: report.pass(),
            })
        }
        Command::Digits { constant, digits } => {
            anyhow::ensure!(digits >= 1, "--digits must be positive");
            let report = crate::digits::run(constant, digits)?;
            Ok(Outcome {
                text: to_json(&report.to_json())?,
                out: None,
                success: report.pass(),
            })
        }
        Command::Roots { recurrence, digits } => Ok(Outcome {
            text: to_json(&crate::roots::run(recurrence.into(), digits)?)?,
            out: None,
            success: true,
        }),
        Command::DumpRecurrence { recurrence, out } => {
            let rec = polylog_core::recur::builtin(recurrence.into());
            Ok(Outcome {
                text: to_json(&crate::recio::recurrence_to_json(&rec))?,
                out,
                success: true,
            })
        }
    }
}

pub fn emit(outcome: &Outcome) -> Result<()> {
    match &outcome.out {
        Some(path) => std::fs::write(path, &outcome.text)
            .with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{}", outcome.text);
            Ok(())
        }
    }
}

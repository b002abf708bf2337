use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use polylog_core::arith::{parse_rational, BigRat};
use polylog_core::ConstructionId;
use num_traits::{One, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Recurrences,
    Integrality,
    Identities,
    Asymptotics,
    Oracles,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Recurrences => "recurrences",
            Suite::Integrality => "integrality",
            Suite::Identities => "identities",
            Suite::Asymptotics => "asymptotics",
            Suite::Oracles => "oracles",
            Suite::All => "all",
        }
    }
}

/// Validated settings for `compute`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub construction: ConstructionId,
    pub n_max: usize,
    /// `None` only for the well-poised family and trilog theorem mode.
    pub z: Option<BigRat>,
    pub digits: u32,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(
        construction: ConstructionId,
        n_max: usize,
        z: Option<&str>,
        digits: u32,
        format: Format,
        out: Option<PathBuf>,
    ) -> Result<Self> {
        let z = z
            .map(|s| parse_rational(s).with_context(|| format!("invalid --z `{s}`")))
            .transpose()?;
        match (construction, &z) {
            (ConstructionId::LogDilog, None) => bail!("--z is required for log-dilog"),
            (ConstructionId::WellPoised, Some(_)) => {
                bail!("--z is not accepted for well-poised (fixed at -1)")
            }
            (ConstructionId::Trilog, Some(z)) if z.is_one() => {
                bail!("omit --z for the trilog theorem mode at z = 1")
            }
            _ => {}
        }
        if let Some(z) = &z {
            if z.is_zero() || z.is_one() || num_traits::Signed::abs(z) > BigRat::one() {
                bail!("--z must satisfy 0 < |z| <= 1 and z != 1, got {z}");
            }
        }
        if digits == 0 {
            bail!("--digits must be positive");
        }
        Ok(RunConfig {
            construction,
            n_max,
            z,
            digits,
            format,
            out,
        })
    }
}

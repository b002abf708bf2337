use anyhow::Result;
use polylog_core::linforms::{coeffs_log_dilog, coeffs_trilog, coeffs_well_poised, trilog_theorem_rows};
use polylog_core::numerics::remainder_significant;
use polylog_core::{ConstructionId, LinearFormCoeffs};
use serde_json::Value;

use crate::config::{Format, RunConfig};
use crate::output::{float_value, rat_value, records_to_csv, to_json, Record};

/// Rows `n = 0..=n_max` for the configured construction.
pub fn rows(cfg: &RunConfig) -> Result<Vec<LinearFormCoeffs>> {
    let out = match (cfg.construction, &cfg.z) {
        (ConstructionId::Trilog, None) => trilog_theorem_rows(cfg.n_max)?,
        (ConstructionId::Trilog, Some(z)) => (0..=cfg.n_max)
            .map(|n| coeffs_trilog(n, z))
            .collect::<Result<_, _>>()?,
        (ConstructionId::LogDilog, Some(z)) => (0..=cfg.n_max)
            .map(|n| coeffs_log_dilog(n, z))
            .collect::<Result<_, _>>()?,
        (ConstructionId::WellPoised, _) => (0..=cfg.n_max)
            .map(coeffs_well_poised)
            .collect::<Result<_, _>>()?,
        (ConstructionId::LogDilog, None) => unreachable!("validated by RunConfig"),
    };
    Ok(out)
}

pub fn record(row: &LinearFormCoeffs, digits: u32) -> Result<Record> {
    let rem = remainder_significant(row, digits)?;
    let mut r = Record::new();
    r.insert("construction".into(), Value::String(row.construction.name().into()));
    r.insert("n".into(), Value::from(row.n));
    r.insert("z".into(), Value::String(row.z.to_string()));
    r.insert("a".into(), rat_value(Some(&row.a)));
    r.insert("b".into(), rat_value(row.b.as_ref()));
    r.insert("b_tilde".into(), rat_value(row.b_tilde.as_ref()));
    r.insert("b_tilde2".into(), rat_value(row.b_tilde2.as_ref()));
    r.insert("r".into(), float_value(rem.r.as_ref(), digits));
    r.insert("r_tilde".into(), float_value(rem.r_tilde.as_ref(), digits));
    r.insert("r_tilde2".into(), float_value(rem.r_tilde2.as_ref(), digits));
    Ok(r)
}

/// The rendered table.
pub fn run(cfg: &RunConfig) -> Result<String> {
    let records = rows(cfg)?
        .iter()
        .map(|row| record(row, cfg.digits))
        .collect::<Result<Vec<_>>>()?;
    match cfg.format {
        Format::Json => to_json(&Value::Array(records.into_iter().map(|r| Value::Object(r.into_iter().collect())).collect())),
        Format::Csv => records_to_csv(&records),
    }
}

//! Growth and decay statistics of the built-in families.

use anyhow::Result;
use polylog_core::linforms::recurrence_rows;
use polylog_core::numerics::{remainder, BigFloat};
use polylog_core::recur::{
    builtin, char_roots, decay_rate, growth_exponent, ratio_growth, remainder_digits, DecayRate,
};
use polylog_core::Builtin;

/// Window used to smooth oscillating sequences.
pub const WINDOW: usize = 10;

#[derive(Debug, Clone)]
pub struct FamilyAsymptotics {
    pub family: Builtin,
    pub n: usize,
    pub lambda3: f64,
    pub lambda12: f64,
    /// `|a_N|^{1/N}`.
    pub nth_root: f64,
    /// `(|a_N| / |a_{N-w}|)^{1/w}`.
    pub ratio: f64,
    /// Per remainder field (`r`, `r_tilde`, `r_tilde2`) that the family has.
    pub decays: Vec<(&'static str, DecayRate)>,
}

impl FamilyAsymptotics {
    pub fn growth_errors(&self) -> (f64, f64) {
        let rel = |x: f64| (x - self.lambda3).abs() / self.lambda3;
        (rel(self.nth_root), rel(self.ratio))
    }

    /// Relative errors `(mean, slope)` against `ln |λ12|`, per field.
    pub fn decay_errors(&self) -> Vec<(&'static str, f64, f64)> {
        let l = self.lambda12.ln();
        self.decays
            .iter()
            .map(|(k, d)| (*k, ((d.mean - l) / l).abs(), ((d.slope - l) / l).abs()))
            .collect()
    }
}

pub fn family_asymptotics(family: Builtin, n: usize) -> Result<FamilyAsymptotics> {
    let rec = builtin(family);
    let roots = char_roots(&rec, 30)?;
    let lambda3 = roots[0].modulus().to_f64();
    let lambda12 = roots[1].modulus().to_f64();
    let rows = recurrence_rows(family, n)?;
    let digits = remainder_digits(n, lambda3, lambda12);
    let a: Vec<BigFloat> = rows.iter().map(|r| BigFloat::from_rat(&r.a, 64)).collect();
    let mut fields: [Vec<BigFloat>; 3] = Default::default();
    for row in &rows {
        let rem = remainder(row, digits)?;
        for (acc, v) in fields.iter_mut().zip(rem.fields()) {
            if let Some(v) = v {
                acc.push(v.clone());
            }
        }
    }
    let mut decays = Vec::new();
    for (name, seq) in ["r", "r_tilde", "r_tilde2"].into_iter().zip(&fields) {
        if seq.len() == n + 1 {
            decays.push((name, decay_rate(seq, WINDOW)?));
        }
    }
    Ok(FamilyAsymptotics {
        family,
        n,
        lambda3,
        lambda12,
        nth_root: growth_exponent(&a, 1)?,
        ratio: ratio_growth(&a, WINDOW)?,
        decays,
    })
}

use anyhow::Result;
use clap::ValueEnum;
use polylog_core::arith::{ratio, BigRat};
use polylog_core::linforms::recurrence_rows;
use polylog_core::numerics::{bits_for_digits, constant, BigFloat, Constant};
use polylog_core::recur::{builtin, char_roots};
use polylog_core::Builtin;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstantArg {
    Zeta2,
    Zeta3,
    Log2,
    #[value(name = "pi2_12")]
    Pi2Over12,
}

impl ConstantArg {
    pub fn name(self) -> &'static str {
        match self {
            ConstantArg::Zeta2 => "zeta2",
            ConstantArg::Zeta3 => "zeta3",
            ConstantArg::Log2 => "log2",
            ConstantArg::Pi2Over12 => "pi2_12",
        }
    }

    pub fn family(self) -> Builtin {
        match self {
            ConstantArg::Log2 | ConstantArg::Pi2Over12 => Builtin::Thm1,
            ConstantArg::Zeta2 => Builtin::Thm2,
            ConstantArg::Zeta3 => Builtin::Thm3,
        }
    }

    fn oracle(self, digits: u32) -> BigFloat {
        match self {
            ConstantArg::Zeta2 => constant(Constant::Zeta2, digits),
            ConstantArg::Zeta3 => constant(Constant::Zeta3, digits),
            ConstantArg::Log2 => constant(Constant::Log2, digits),
            ConstantArg::Pi2Over12 => constant(Constant::Zeta2, digits).mul_rat(&ratio(1, 2)),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DigitsReport {
    pub constant: ConstantArg,
    pub digits: u32,
    pub n: usize,
    pub approximation: BigFloat,
    pub error: BigFloat,
}

impl DigitsReport {
    pub fn pass(&self) -> bool {
        self.error.is_zero() || self.error.log10_abs() < -(self.digits as f64)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "constant": self.constant.name(),
            "digits": self.digits,
            "n": self.n,
            "recurrence": self.constant.family().name(),
            "approximation": self.approximation.to_sci_string(self.digits + 1),
            "oracle_digits": (self.approximation.prec() as f64 / std::f64::consts::LOG2_10) as u32,
            "error": self.error.to_sci_string(3),
            "pass": self.pass(),
        })
    }
}

/// `log 2 = -b/a`, `π²/12 = -b̃/a` (THM1), `ζ(2) = b̃/a` (THM2) and
/// `ζ(3) = (2/3) b̃/a` (THM3).
fn approximant(c: ConstantArg, row: &polylog_core::LinearFormCoeffs) -> BigRat {
    let q = |b: &Option<BigRat>| b.clone().expect("family data") / &row.a;
    match c {
        ConstantArg::Log2 => -q(&row.b),
        ConstantArg::Pi2Over12 => -q(&row.b_tilde),
        ConstantArg::Zeta2 => q(&row.b_tilde),
        ConstantArg::Zeta3 => q(&row.b_tilde) * ratio(2, 3),
    }
}

pub fn run(c: ConstantArg, digits: u32) -> Result<DigitsReport> {
    let family = c.family();
    let roots = char_roots(&builtin(family), 20)?;
    let decay = roots[1].modulus().log10_abs().abs();
    let growth = roots[0].modulus().log10_abs();
    let mut n = (digits as f64 / (decay + growth)).ceil() as usize + 1;
    // The error of b/a is about |r_n| / |a_n|; resolve it fully.
    let work = |n: usize| (n as f64 * (decay + growth)).ceil() as u32 + digits + 20;
    let mut oracle = c.oracle(work(n));
    loop {
        let rows = recurrence_rows(family, n)?;
        if oracle.prec() < bits_for_digits(work(n)) {
            oracle = c.oracle(work(n));
        }
        let approximation = BigFloat::from_rat(&approximant(c, &rows[n]), oracle.prec());
        let error = (&approximation - &oracle).abs();
        let report = DigitsReport {
            constant: c,
            digits,
            n,
            approximation,
            error,
        };
        if report.pass() || n > 20 * (digits as usize + 10) {
            return Ok(report);
        }
        n += n / 4 + 1;
    }
}

use anyhow::Result;
use polylog_core::recur::{builtin, char_roots};
use polylog_core::Builtin;
use serde_json::{json, Value};

pub fn run(family: Builtin, digits: u32) -> Result<Value> {
    let rec = builtin(family);
    let roots = char_roots(&rec, digits)?;
    Ok(json!({
        "recurrence": family.name(),
        "char_poly": rec.char_poly.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "roots": roots.iter().map(|r| json!({
            "re": r.re.to_sci_string(digits),
            "im": r.im.to_sci_string(digits),
            "modulus": r.modulus().to_sci_string(digits),
        })).collect::<Vec<_>>(),
    }))
}

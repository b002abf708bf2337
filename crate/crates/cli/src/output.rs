//! Row records and their JSON/CSV encodings.

use std::collections::BTreeMap;

use anyhow::Result;
use polylog_core::{BigFloat, BigRat};
use serde_json::Value;

pub type Record = BTreeMap<String, Value>;

pub fn rat_value(q: Option<&BigRat>) -> Value {
    q.map_or(Value::Null, |q| Value::String(q.to_string()))
}

pub fn float_value(x: Option<&BigFloat>, digits: u32) -> Value {
    x.map_or(Value::Null, |x| Value::String(x.to_sci_string(digits)))
}

pub fn to_json(value: &Value) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// CSV with the union of record keys as header, in sorted order; null
/// becomes an empty cell.
pub fn records_to_csv(records: &[Record]) -> Result<String> {
    let mut header: Vec<&String> = records.iter().flat_map(|r| r.keys()).collect();
    header.sort();
    header.dedup();
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header)?;
    for r in records {
        w.write_record(header.iter().map(|k| match r.get(*k) {
            None | Some(Value::Null) => String::new(),
            Some(Value::String(s)) => s.clone(),
            Some(v) => v.to_string(),
        }))?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use polylog_core::arith::ratio;

    #[test]
    fn rationals_are_canonical_strings() {
        assert_eq!(rat_value(Some(&ratio(-610, 16))), Value::String("-305/8".into()));
        assert_eq!(rat_value(Some(&ratio(6, 3))), Value::String("2".into()));
        assert_eq!(rat_value(None), Value::Null);
    }

    #[test]
    fn csv_mirrors_sorted_keys() {
        let mut r = Record::new();
        r.insert("n".into(), Value::from(3));
        r.insert("b".into(), Value::Null);
        r.insert("a".into(), Value::String("5".into()));
        let csv = records_to_csv(&[r]).unwrap();
        assert_eq!(csv, "a,b,n\n5,,3\n");
    }
}

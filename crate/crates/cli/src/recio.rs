//! JSON form of a recurrence: coefficient polynomials in ascending powers
//! of `n`, rationals as strings.

use anyhow::{anyhow, bail, Context, Result};
use polylog_core::arith::{parse_rational, RatPoly};
use polylog_core::{BigRat, Recurrence};
use serde_json::{json, Value};

fn rats(xs: &[BigRat]) -> Value {
    Value::Array(xs.iter().map(|q| Value::String(q.to_string())).collect())
}

pub fn recurrence_to_json(rec: &Recurrence) -> Value {
    json!({
        "name": rec.name,
        "order": rec.order,
        "valid_from": rec.valid_from,
        "coeff_polys": rec.coeff_polys.iter().map(|p| rats(p.coeffs())).collect::<Vec<_>>(),
        "char_poly": rats(&rec.char_poly),
    })
}

fn parse_rats(v: &Value, what: &str) -> Result<Vec<BigRat>> {
    v.as_array()
        .ok_or_else(|| anyhow!("`{what}` must be an array"))?
        .iter()
        .map(|x| {
            let s = x.as_str().ok_or_else(|| anyhow!("`{what}` entries must be strings"))?;
            parse_rational(s).with_context(|| format!("bad rational `{s}` in `{what}`"))
        })
        .collect()
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| anyhow!("missing `{key}`"))
}

fn as_usize(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| anyhow!("`{key}` must be a non-negative integer"))
}

pub fn recurrence_from_json(v: &Value) -> Result<Recurrence> {
    let order = as_usize(v, "order")?;
    let polys = field(v, "coeff_polys")?
        .as_array()
        .ok_or_else(|| anyhow!("`coeff_polys` must be an array"))?
        .iter()
        .map(|p| parse_rats(p, "coeff_polys").map(RatPoly::new))
        .collect::<Result<Vec<_>>>()?;
    let char_poly = parse_rats(field(v, "char_poly")?, "char_poly")?;
    if polys.len() != order + 1 {
        bail!("order {order} needs {} coefficient polynomials", order + 1);
    }
    if char_poly.len() != order + 1 {
        bail!("order {order} needs a characteristic polynomial of degree {order}");
    }
    Ok(Recurrence {
        name: field(v, "name")?
            .as_str()
            .ok_or_else(|| anyhow!("`name` must be a string"))?
            .to_string(),
        order,
        coeff_polys: polys,
        valid_from: as_usize(v, "valid_from")?,
        char_poly,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use polylog_core::recur::builtin;
    use polylog_core::Builtin;

    #[test]
    fn builtins_round_trip() {
        for b in [Builtin::Thm1, Builtin::Thm2, Builtin::Thm3, Builtin::AperyZ2] {
            let rec = builtin(b);
            let text = serde_json::to_string(&recurrence_to_json(&rec)).unwrap();
            let back = recurrence_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
            assert_eq!(back, rec);
        }
    }

    #[test]
    fn malformed_tables_are_rejected() {
        let mut v = recurrence_to_json(&builtin(Builtin::Thm1));
        v["order"] = json!(2);
        assert!(recurrence_from_json(&v).is_err());
        let mut v = recurrence_to_json(&builtin(Builtin::Thm1));
        v["char_poly"] = json!(["1", "x"]);
        assert!(recurrence_from_json(&v).is_err());
    }
}

//! Weight tables stored as JSON:
//!
//! ```json
//! { "values": ["1", "1 + q", "1 + 2*q + 2*q^2 + q^3"],
//!   "ratios": { "2,1": "1 + q + q^2" } }
//! ```
//!
//! `values[l]` is `w(l)`; `ratios` optionally supplies `w(l)/w(l')` for
//! `l >= l'` where the exact quotient of the listed values is not wanted.

use std::collections::BTreeMap;
use std::path::Path;

use serde_json::Value;
use suq2_core::weights::{WeightFunction, WeightTable};
use suq2_core::{expr, Scalar};

fn scalar_field(v: &Value, what: &str) -> Result<Scalar, String> {
    let text = v.as_str().ok_or_else(|| format!("{} must be a string", what))?;
    expr::scalar(text).map_err(|e| format!("{} `{}`: {}", what, text, e))
}

pub fn parse(name: &str, text: &str) -> Result<WeightFunction, String> {
    let doc: Value = serde_json::from_str(text).map_err(|e| format!("weights file {}: {}", name, e))?;
    let values = doc
        .get("values")
        .and_then(Value::as_array)
        .ok_or_else(|| format!("weights file {}: missing array `values`", name))?
        .iter()
        .enumerate()
        .map(|(l, v)| scalar_field(v, &format!("values[{}]", l)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut ratios = BTreeMap::new();
    if let Some(map) = doc.get("ratios") {
        let map = map.as_object().ok_or_else(|| format!("weights file {}: `ratios` must be an object", name))?;
        for (key, v) in map {
            let (l, lp) = key
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse::<u32>().ok()?, b.trim().parse::<u32>().ok()?)))
                .ok_or_else(|| format!("weights file {}: ratio key `{}` is not `l,l'`", name, key))?;
            ratios.insert((l, lp), scalar_field(v, &format!("ratios[{}]", key))?);
        }
    }
    let table = WeightTable::new(name, values, ratios).map_err(|e| e.to_string())?;
    Ok(WeightFunction::Table(table))
}

pub fn load(path: &Path) -> Result<WeightFunction, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))?;
    parse(&path.display().to_string(), &text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_values_and_ratios() {
        let w = parse("t", r#"{"values": ["1", "1 + q", "1 + 2*q + 2*q^2 + q^3"], "ratios": {"2,1": "1 + q + q^2"}}"#)
            .unwrap();
        assert_eq!(w.ratio(2, 1).unwrap(), expr::scalar("1 + q + q^2").unwrap());
        assert_eq!(w.ratio(1, 0).unwrap(), expr::scalar("1 + q").unwrap());
    }

    #[test]
    fn rejects_bad_files() {
        assert!(parse("t", "[]").is_err());
        assert!(parse("t", r#"{"values": ["1", "0"]}"#).is_err());
        assert!(parse("t", r#"{"values": ["1", "2"], "ratios": {"1,0": "3"}}"#).is_err());
        assert!(parse("t", r#"{"values": ["1"], "ratios": {"x": "3"}}"#).is_err());
        assert!(parse("t", r#"{"values": [1]}"#).is_err());
    }
}

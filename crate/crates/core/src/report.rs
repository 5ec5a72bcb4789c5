//! Stable text rendering shared by the reports: floats always carry nine
//! decimals (ties round half to even on the exact binary value), and JSON
//! numbers are emitted verbatim in that form.

use serde::Serializer;
use serde_json::value::RawValue;

pub const DECIMALS: usize = 9;

pub fn fixed(x: f64) -> String {
    format!("{x:.prec$}", prec = DECIMALS)
}

/// `serialize_with` helper emitting a JSON number with exactly nine decimals.
pub fn serialize_fixed<S: Serializer>(x: &f64, serializer: S) -> Result<S::Ok, S::Error> {
    if !x.is_finite() {
        return serializer.serialize_none();
    }
    let raw = RawValue::from_string(fixed(*x)).map_err(serde::ser::Error::custom)?;
    serde::Serialize::serialize(&raw, serializer)
}

pub fn serialize_fixed_pair<S: Serializer>(pair: &(f64, f64), serializer: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeTuple;
    let mut tuple = serializer.serialize_tuple(2)?;
    tuple.serialize_element(&RawValue::from_string(fixed(pair.0)).map_err(serde::ser::Error::custom)?)?;
    tuple.serialize_element(&RawValue::from_string(fixed(pair.1)).map_err(serde::ser::Error::custom)?)?;
    tuple.end()
}

/// Quotes a CSV field when it contains a delimiter, quote or newline.
pub fn csv_field(text: &str) -> String {
    if text.contains([',', '"', '\n']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

pub fn csv_line<I, S>(fields: I) -> String
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    fields.into_iter().map(|f| csv_field(f.as_ref())).collect::<Vec<_>>().join(",")
}

/// A GitHub-flavoured markdown table.
pub fn markdown_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&format!("| {} |\n", header.join(" | ")));
    out.push_str(&format!("|{}\n", header.iter().map(|_| "---|").collect::<String>()));
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| c.replace('|', "\\|")).collect();
        out.push_str(&format!("| {} |\n", cells.join(" | ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(serde::Serialize)]
    struct Sample {
        #[serde(serialize_with = "serialize_fixed")]
        rate: f64,
        #[serde(serialize_with = "serialize_fixed_pair")]
        interval: (f64, f64),
    }

    #[test]
    fn nine_decimals_half_even() {
        assert_eq!(fixed(0.5), "0.500000000");
        assert_eq!(fixed(1.0 / 3.0), "0.333333333");
        assert_eq!(fixed(0.25), "0.250000000");
        // exact binary ties
        assert_eq!(format!("{:.1}", 0.25), "0.2");
        assert_eq!(format!("{:.1}", 0.75), "0.8");
    }

    #[test]
    fn json_numbers_are_verbatim() {
        let text = serde_json::to_string(&Sample { rate: 0.5, interval: (0.25, 1.0 / 3.0) }).unwrap();
        assert_eq!(text, r#"{"rate":0.500000000,"interval":[0.250000000,0.333333333]}"#);
        let back: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back["rate"], 0.5);
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_line(["a", "b,c", "d\"e"]), "a,\"b,c\",\"d\"\"e\"");
    }
}

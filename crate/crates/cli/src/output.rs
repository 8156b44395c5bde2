//! JSON and CSV emission with 17 significant digits per float.

use std::io::{self, Write};

use serde::Serialize;
use serde_json::ser::Formatter;
use serde_json::Value;

/// A finite float with 17 significant digits; positional for exponents in
/// `-5..=15`, scientific otherwise. Non-finite values print as `NaN`,
/// `inf` and `-inf`.
pub fn number(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0.0" } else { "0.0" }.into();
    }
    let sci = format!("{x:.16e}");
    let (mant, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..=15).contains(&exp) {
        return sci;
    }
    let (sign, mant) = match mant.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mant),
    };
    let digits: String = mant.chars().filter(|c| *c != '.').collect();
    if exp >= 0 {
        let split = exp as usize + 1;
        format!("{sign}{}.{}", &digits[..split], &digits[split..])
    } else {
        let zeros = "0".repeat((-exp - 1) as usize);
        format!("{sign}0.{zeros}{digits}")
    }
}

struct Digits17;

impl Formatter for Digits17 {
    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        w.write_all(number(value).as_bytes())
    }

    fn write_f32<W: ?Sized + Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(w, value.into())
    }
}

/// One JSON object on one line.
pub fn json<T: Serialize, W: Write + ?Sized>(value: &T, out: &mut W) -> io::Result<()> {
    let mut ser = serde_json::Serializer::with_formatter(&mut *out, Digits17);
    value.serialize(&mut ser).map_err(io::Error::from)?;
    out.write_all(b"\n")
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => match (n.as_u64(), n.as_i64()) {
            (Some(u), _) => u.to_string(),
            (_, Some(i)) => i.to_string(),
            _ => number(n.as_f64().expect("json number")),
        },
        Value::String(s) => s.clone(),
        _ => unreachable!("nested values are flattened"),
    }
}

/// Flatten nested objects and arrays into dotted column names.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, v)| flatten(&key(k), v, out)),
        Value::Array(a) => a
            .iter()
            .enumerate()
            .for_each(|(i, v)| flatten(&key(&i.to_string()), v, out)),
        _ => out.push((prefix.to_string(), cell(v))),
    }
}

fn writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

/// A header row and one data row holding every leaf of `value`.
pub fn csv_record<T: Serialize, W: Write>(value: &T, out: W) -> io::Result<()> {
    let v = serde_json::to_value(value).map_err(io::Error::from)?;
    let mut cols = Vec::new();
    flatten("", &v, &mut cols);
    let mut w = writer(out);
    w.write_record(cols.iter().map(|c| &c.0))?;
    w.write_record(cols.iter().map(|c| &c.1))?;
    w.flush()
}

/// A header row and one data row per item; items must flatten to the same
/// columns.
pub fn csv_rows<T: Serialize, W: Write>(rows: &[T], out: W) -> io::Result<()> {
    let mut w = writer(out);
    for (i, row) in rows.iter().enumerate() {
        let v = serde_json::to_value(row).map_err(io::Error::from)?;
        let mut cols = Vec::new();
        flatten("", &v, &mut cols);
        if i == 0 {
            w.write_record(cols.iter().map(|c| &c.0))?;
        }
        w.write_record(cols.iter().map(|c| &c.1))?;
    }
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(number(std::f64::consts::FRAC_PI_2), "1.5707963267948966");
        assert_eq!(number(2.0), "2.0000000000000000");
        assert_eq!(number(-0.001), "-0.0010000000000000000");
        assert_eq!(number(1e-7), "9.9999999999999995e-8");
        assert_eq!(number(2f64.powi(-30)), "9.3132257461547852e-10");
        assert_eq!(number(2f64.powi(60)), "1.1529215046068470e18");
        assert_eq!(number(0.0), "0.0");
        for x in [0.1, 1.0 / 3.0, 123456.789, -9.87e-4, 6.02e23, f64::MIN_POSITIVE] {
            assert_eq!(number(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn json_is_valid_and_exact() {
        let mut buf = Vec::new();
        json(&serde_json::json!({"a": 0.1, "b": [1, 2.5], "c": f64::NAN}), &mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert_eq!(s, "{\"a\":0.10000000000000001,\"b\":[1,2.5000000000000000],\"c\":null}\n");
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["a"].as_f64(), Some(0.1));
    }

    #[test]
    fn csv_flattens() {
        let mut buf = Vec::new();
        csv_record(&serde_json::json!({"p": {"x": 1.0, "y": [true, "s,t"]}}), &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "p.x,p.y.0,p.y.1\n1.0000000000000000,true,\"s,t\"\n"
        );
    }
}

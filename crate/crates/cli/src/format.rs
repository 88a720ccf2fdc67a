//! Output formatting. Floats are printed with 12 significant digits.

use std::io::Write;

use anyhow::Result;
use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

/// `x` with 12 significant digits: fixed notation for moderate exponents,
/// scientific otherwise.
pub fn sig12(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{x:.11e}");
    let exp: i32 = sci.split_once('e').and_then(|(_, e)| e.parse().ok()).unwrap_or(0);
    if (-5..=11).contains(&exp) {
        format!("{:.*}", (11 - exp).max(0) as usize, x)
    } else {
        sci
    }
}

/// `x` rounded to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    sig12(x).parse().unwrap_or(x)
}

/// Writes a table: CSV with a header, a JSON array, or tab-separated text.
pub fn write_rows<T: Serialize>(out: &mut dyn Write, format: Format, rows: &[T]) -> Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, rows)?;
            writeln!(out)?;
        }
        Format::Csv | Format::Text => {
            let delim = if format == Format::Csv { b',' } else { b'\t' };
            let mut w = csv::WriterBuilder::new().delimiter(delim).from_writer(&mut *out);
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// Writes one record: a one-row CSV, a JSON object, or `key: value` lines.
pub fn write_record<T: Serialize>(out: &mut dyn Write, format: Format, record: &T) -> Result<()> {
    match format {
        Format::Csv => write_rows(out, format, std::slice::from_ref(record)),
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, record)?;
            writeln!(out)?;
            Ok(())
        }
        Format::Text => {
            if let Value::Object(map) = serde_json::to_value(record)? {
                for (k, v) in map {
                    match v {
                        Value::String(s) => writeln!(out, "{k}: {s}")?,
                        Value::Number(n) => match n.as_f64() {
                            Some(f) if n.is_f64() => writeln!(out, "{k}: {}", sig12(f))?,
                            _ => writeln!(out, "{k}: {n}")?,
                        },
                        Value::Null => writeln!(out, "{k}: -")?,
                        other => writeln!(out, "{k}: {other}")?,
                    }
                }
            }
            Ok(())
        }
    }
}

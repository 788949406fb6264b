//! Report serialization: JSON with sorted keys and 17-significant-digit
//! floats, one CSV row per bound result, and a plain-text summary.

use std::fmt::Write as _;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::sweep::Report;

/// Floats as `d.dddddddddddddddde±x`. Non-finite values become `null`.
pub fn format_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    }
}

fn write_json(v: &Value, depth: usize, out: &mut String) {
    let pad = |out: &mut String, d: usize| {
        for _ in 0..d {
            out.push_str("  ");
        }
    };
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if let Some(u) = n.as_u64() {
                write!(out, "{u}").unwrap();
            } else if let Some(i) = n.as_i64() {
                write!(out, "{i}").unwrap();
            } else {
                out.push_str(&format_f64(n.as_f64().unwrap_or(f64::NAN)));
            }
        }
        Value::String(s) => out.push_str(&Value::String(s.clone()).to_string()),
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str("[]");
                return;
            }
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                pad(out, depth + 1);
                write_json(item, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push(']');
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (i, k) in keys.iter().enumerate() {
                pad(out, depth + 1);
                out.push_str(&Value::String((*k).clone()).to_string());
                out.push_str(": ");
                write_json(&map[k.as_str()], depth + 1, out);
                out.push_str(if i + 1 < keys.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push('}');
        }
    }
}

/// Serializes any value as canonical JSON (sorted keys, fixed float
/// format, two-space indent, trailing newline).
pub fn canonical_json<T: serde::Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value).map_err(|e| Error::Io(e.to_string()))?;
    let mut out = String::new();
    write_json(&v, 0, &mut out);
    out.push('\n');
    Ok(out)
}

pub fn to_json(report: &Report) -> Result<String> {
    canonical_json(report)
}

pub const CSV_HEADER: [&str; 15] = [
    "graph_id",
    "n",
    "alpha",
    "bound_id",
    "side",
    "bound_value",
    "actual_value",
    "slack",
    "holds",
    "applicable",
    "equality_structural",
    "strict",
    "overflow",
    "vertex",
    "note",
];

fn opt_bool(b: Option<bool>) -> String {
    b.map(|b| b.to_string()).unwrap_or_default()
}

fn csv_f64(x: f64) -> String {
    if x.is_nan() {
        String::new()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        format!("{x:.16e}")
    }
}

/// One row per bound result, α empty for α-independent bounds.
pub fn to_csv(report: &Report) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(CSV_HEADER).map_err(io)?;
    for (rec, alpha, b) in report.results() {
        let vertex = b
            .details
            .get("vertex")
            .map(|v| format!("{}", *v as usize))
            .unwrap_or_default();
        w.write_record([
            rec.id.clone(),
            rec.n.to_string(),
            alpha.map(csv_f64).unwrap_or_default(),
            b.bound_id.to_string(),
            serde_json::to_value(b.side)
                .ok()
                .and_then(|v| v.as_str().map(str::to_string))
                .unwrap_or_default(),
            csv_f64(b.bound_value),
            csv_f64(b.actual_value),
            csv_f64(b.slack),
            opt_bool(b.holds),
            b.applicable.to_string(),
            opt_bool(b.equality_structural),
            b.strict.to_string(),
            b.overflow.to_string(),
            vertex,
            b.note.clone().unwrap_or_default(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

/// Human-readable summary followed by the list of violations.
pub fn to_text(report: &Report) -> String {
    let s = &report.summary;
    let mut out = String::new();
    let grid: Vec<String> = report.alpha_grid.iter().map(|a| a.to_string()).collect();
    writeln!(out, "graphs:        {}", s.graphs).unwrap();
    writeln!(out, "alpha grid:    {}", grid.join(", ")).unwrap();
    writeln!(out, "tolerance:     {:e}", report.tolerance).unwrap();
    writeln!(out, "evaluations:   {}", s.evaluations).unwrap();
    writeln!(out, "holds:         {}", s.holds).unwrap();
    writeln!(out, "violations:    {}", s.violations).unwrap();
    writeln!(out, "inapplicable:  {}", s.inapplicable).unwrap();
    writeln!(out, "tight:         {}", s.tight).unwrap();
    if let Some(x) = s.max_negative_slack {
        writeln!(out, "worst slack:   {x:e}").unwrap();
    }
    if let Some(x) = s.max_closed_form_deviation {
        writeln!(out, "closed-form deviation: {x:e}").unwrap();
    }
    if let Some(x) = s.max_moment_residual {
        writeln!(out, "moment residual:       {x:e}").unwrap();
    }
    for (id, count) in &s.formula_discrepancies {
        writeln!(out, "alternative form differs: {id} ({count})").unwrap();
    }
    for v in &s.violation_list {
        let alpha = v.alpha.map(|a| a.to_string()).unwrap_or_else(|| "-".into());
        writeln!(
            out,
            "VIOLATION {} alpha={} {} {:?} slack={:e}",
            v.graph_id, alpha, v.bound_id, v.side, v.slack
        )
        .unwrap();
    }
    out
}

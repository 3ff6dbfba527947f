//! Text file formats.
//!
//! * Array fixture: first line `n=<int>`, then one value token (`<int>` or
//!   `inf`) per line.
//! * Operation sequence: one op per line, `Q <l> <r>` or `M <l> <r> <modfn>`.
//! * Trace export: one line per operation,
//!   `op=<k> topdown=<id|-> lazy=<comma-list>`.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use qrmq_core::{CreationTrace, OpSequence, OracleArray, Value};

use crate::error::{Error, Result};

pub fn parse_array(text: &str) -> Result<OracleArray> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(Error::Format {
        line: 1,
        msg: "missing `n=<int>` header".into(),
    })?;
    let n: usize = header
        .strip_prefix("n=")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| Error::Format {
            line: hline,
            msg: format!("expected `n=<int>`, found {header:?}"),
        })?;
    let mut values = Vec::with_capacity(n);
    for (line, tok) in lines {
        let v = tok.parse::<Value>().map_err(|e| Error::Format {
            line,
            msg: e.to_string(),
        })?;
        values.push(v);
    }
    if values.len() != n {
        return Err(Error::Format {
            line: hline,
            msg: format!("header declares {n} values, found {}", values.len()),
        });
    }
    Ok(OracleArray::new(values)?)
}

pub fn format_array(arr: &OracleArray) -> String {
    let mut out = format!("n={}\n", arr.len());
    for v in arr.values() {
        let _ = writeln!(out, "{v}");
    }
    out
}

pub fn parse_ops(text: &str) -> Result<OpSequence> {
    let mut ops = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        ops.push(line.parse().map_err(|e: qrmq_core::Error| Error::Format {
            line: i + 1,
            msg: e.to_string(),
        })?);
    }
    Ok(OpSequence(ops))
}

pub fn format_traces(traces: &[CreationTrace]) -> String {
    traces.iter().map(|t| format!("{t}\n")).collect()
}

pub fn read_array(path: &Path) -> Result<OracleArray> {
    parse_array(&fs::read_to_string(path)?)
}

pub fn read_ops(path: &Path) -> Result<OpSequence> {
    parse_ops(&fs::read_to_string(path)?)
}

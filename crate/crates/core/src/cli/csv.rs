//! CSV output for sweeps and grids, with a `#` comment header.
//!
//! Numbers are written with 17 significant digits so that parsing recovers
//! them bit for bit. Missing negativities (annihilation gaps) and
//! unphysical surface points are written as `NaN`.

use std::fmt::Write as _;

use crate::analysis::{classify_with, DetectorConfig, Sample, SweepResult};

pub const SWEEP_HEADER: &str = "gamma,negativity";
pub const SWEEP_HEADER_COMPARE: &str = "gamma,negativity,discrepancy";
pub const GRID_HEADER: &str = "p,gamma,negativity";
pub const SURFACE_HEADER: &str = "c2,c3,negativity";

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn opt(x: Option<f64>) -> String {
    x.map_or_else(|| "NaN".to_string(), num)
}

fn comment_block(out: &mut String, title: &str, echo: &str) {
    writeln!(out, "# {title}").unwrap();
    for line in echo.lines().filter(|l| !l.trim().is_empty()) {
        writeln!(out, "# {line}").unwrap();
    }
}

/// One block per sweep, separated by two blank lines (gnuplot `index`).
/// Each block opens with the phenomenon report as comments.
pub fn write_sweep_csv(results: &[SweepResult], config_echo: &str, detector: &DetectorConfig, compare: bool) -> String {
    let mut out = String::new();
    comment_block(&mut out, "gadent sweep", config_echo);
    writeln!(out, "{}", if compare { SWEEP_HEADER_COMPARE } else { SWEEP_HEADER }).unwrap();
    for (i, r) in results.iter().enumerate() {
        if i > 0 {
            out.push_str("\n\n");
        }
        writeln!(out, "# curve p = {}", num(r.spec.p)).unwrap();
        for line in classify_with(r, detector).to_string().lines() {
            writeln!(out, "# {line}").unwrap();
        }
        for s in &r.samples {
            if compare {
                writeln!(out, "{},{},{}", num(s.gamma), opt(s.negativity), num(s.discrepancy)).unwrap();
            } else {
                writeln!(out, "{},{}", num(s.gamma), opt(s.negativity)).unwrap();
            }
        }
    }
    if compare {
        let max = results.iter().map(SweepResult::max_discrepancy).fold(f64::NAN, f64::max);
        writeln!(out, "# max_discrepancy = {}", num(max)).unwrap();
    }
    out
}

/// Long-format `p,gamma,negativity` rows, one blank line between p rows.
pub fn write_grid_csv(results: &[SweepResult], config_echo: &str) -> String {
    let mut out = String::new();
    comment_block(&mut out, "gadent grid", config_echo);
    writeln!(out, "{GRID_HEADER}").unwrap();
    for (i, r) in results.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        for s in &r.samples {
            writeln!(out, "{},{},{}", num(r.spec.p), num(s.gamma), opt(s.negativity)).unwrap();
        }
    }
    out
}

/// Rows of (c2, c3, negativity); `rows[i]` shares one c2 value.
pub fn write_surface_csv(rows: &[Vec<(f64, f64, Option<f64>)>], config_echo: &str) -> String {
    let mut out = String::new();
    comment_block(&mut out, "gadent initial-state surface", config_echo);
    let unphysical = rows.iter().flatten().filter(|r| r.2.is_none()).count();
    writeln!(out, "# unphysical points (NaN): {unphysical}").unwrap();
    writeln!(out, "{SURFACE_HEADER}").unwrap();
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        for &(c2, c3, n) in row {
            writeln!(out, "{},{},{}", num(c2), num(c3), opt(n)).unwrap();
        }
    }
    out
}

/// Kind of CSV, read from its column header line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CsvKind {
    Sweep { compare: bool },
    Grid,
    Surface,
}

pub fn detect_kind(text: &str) -> Option<CsvKind> {
    text.lines().find(|l| !l.starts_with('#') && !l.trim().is_empty()).and_then(|h| match h.trim() {
        SWEEP_HEADER => Some(CsvKind::Sweep { compare: false }),
        SWEEP_HEADER_COMPARE => Some(CsvKind::Sweep { compare: true }),
        GRID_HEADER => Some(CsvKind::Grid),
        SURFACE_HEADER => Some(CsvKind::Surface),
        _ => None,
    })
}

/// A curve block recovered from a sweep CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedBlock {
    pub p: f64,
    pub samples: Vec<Sample>,
}

fn parse_num(field: &str) -> Result<f64, String> {
    field.trim().parse::<f64>().map_err(|_| format!("bad number '{field}'"))
}

/// Parses a sweep CSV back into its blocks. Without a discrepancy column the
/// discrepancies come back as NaN.
pub fn parse_sweep_csv(text: &str) -> Result<Vec<ParsedBlock>, String> {
    let compare = match detect_kind(text) {
        Some(CsvKind::Sweep { compare }) => compare,
        _ => return Err("not a sweep CSV".into()),
    };
    let mut blocks: Vec<ParsedBlock> = Vec::new();
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix("# curve p = ") {
            blocks.push(ParsedBlock { p: parse_num(rest)?, samples: Vec::new() });
            continue;
        }
        if line.starts_with('#') || line.trim().is_empty() || line.starts_with("gamma") {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        let expected = if compare { 3 } else { 2 };
        if fields.len() != expected {
            return Err(format!("expected {expected} fields in '{line}'"));
        }
        let n = parse_num(fields[1])?;
        let sample = Sample {
            gamma: parse_num(fields[0])?,
            negativity: (!n.is_nan()).then_some(n),
            discrepancy: if compare { parse_num(fields[2])? } else { f64::NAN },
        };
        blocks
            .last_mut()
            .ok_or_else(|| "data row before any curve block".to_string())?
            .samples
            .push(sample);
    }
    Ok(blocks)
}

/// Parses grid rows as (p, gamma, negativity) triples.
pub fn parse_grid_csv(text: &str) -> Result<Vec<(f64, f64, Option<f64>)>, String> {
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty() && *l != GRID_HEADER)
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            if f.len() != 3 {
                return Err(format!("expected 3 fields in '{l}'"));
            }
            let n = parse_num(f[2])?;
            Ok((parse_num(f[0])?, parse_num(f[1])?, (!n.is_nan()).then_some(n)))
        })
        .collect()
}

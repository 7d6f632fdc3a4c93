use std::fmt::Write;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde::Serialize;

use singlet_core::invariant::DimensionTable;
use singlet_core::verify::VerificationReport;
use singlet_core::{su3_dimension_from_components, DimensionRecord, SU3Components};

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
    Bfile,
}

pub fn dims(out: &mut String, format: Format, group: i64, rep: &str, rows: &[(usize, &BigInt)]) {
    match format {
        Format::Text if rows.len() == 1 => writeln!(out, "{}", rows[0].1).unwrap(),
        Format::Text => {
            for (n, d) in rows {
                writeln!(out, "{n} {d}").unwrap();
            }
        }
        Format::Json => {
            for (n, d) in rows {
                writeln!(out, "{}", DimensionRecord::new(group, rep, *n as u64, d).to_json()).unwrap();
            }
        }
        Format::Csv => {
            writeln!(out, "group,rep,n,dimension").unwrap();
            for (n, d) in rows {
                writeln!(out, "SU({group}),{},{n},{d}", csv_field(rep)).unwrap();
            }
        }
        Format::Bfile => unreachable!("rejected before rendering"),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Rows are powers, columns are groups, and a last `SU(inf)` column holds
/// the subfactorials.
pub fn table(out: &mut String, format: Format, t: &DimensionTable, derangements: &[BigInt]) {
    let mut header: Vec<String> = vec!["n".into()];
    header.extend(t.groups.iter().map(|g| format!("SU({g})")));
    header.push("SU(inf)".into());
    let rows: Vec<Vec<String>> = t
        .powers
        .iter()
        .zip(&t.cells)
        .map(|(n, cells)| {
            let mut r = vec![n.to_string()];
            r.extend(cells.iter().map(|c| c.to_string()));
            r.push(derangements[*n].to_string());
            r
        })
        .collect();
    match format {
        Format::Csv => {
            writeln!(out, "{}", header.join(",")).unwrap();
            for r in rows {
                writeln!(out, "{}", r.join(",")).unwrap();
            }
        }
        Format::Text => {
            let widths: Vec<usize> = (0..header.len())
                .map(|j| rows.iter().map(|r| r[j].len()).chain([header[j].len()]).max().unwrap_or(0))
                .collect();
            let line = |cells: &[String]| {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            writeln!(out, "{}", line(&header)).unwrap();
            for r in &rows {
                writeln!(out, "{}", line(r)).unwrap();
            }
        }
        Format::Json => {
            for (n, cells) in t.powers.iter().zip(&t.cells) {
                for (g, c) in t.groups.iter().zip(cells) {
                    writeln!(out, "{}", DimensionRecord::new(*g, "adjoint", *n as u64, c).to_json()).unwrap();
                }
            }
        }
        Format::Bfile => unreachable!("rejected before rendering"),
    }
}

#[derive(Serialize)]
struct ComponentRecord {
    n: usize,
    a1: String,
    a2: String,
    a3: String,
    a4: String,
    dimension: String,
}

#[derive(Serialize)]
struct SequenceRecord {
    n: usize,
    value: String,
}

pub fn components(out: &mut String, format: Format, rows: &[SU3Components]) {
    match format {
        Format::Text | Format::Csv => {
            let sep = if format == Format::Csv { "," } else { " " };
            writeln!(out, "{}", ["n", "a1", "a2", "a3", "a4", "dimension"].join(sep)).unwrap();
            for c in rows {
                let d = su3_dimension_from_components(c);
                writeln!(out, "{}", [c.n.to_string(), c.a1.to_string(), c.a2.to_string(), c.a3.to_string(), c.a4.to_string(), d.to_string()].join(sep)).unwrap();
            }
        }
        Format::Json => {
            for c in rows {
                let rec = ComponentRecord {
                    n: c.n,
                    a1: c.a1.to_string(),
                    a2: c.a2.to_string(),
                    a3: c.a3.to_string(),
                    a4: c.a4.to_string(),
                    dimension: su3_dimension_from_components(c).to_string(),
                };
                writeln!(out, "{}", serde_json::to_string(&rec).unwrap()).unwrap();
            }
        }
        Format::Bfile => unreachable!("rejected before rendering"),
    }
}

/// `n a(n)` per line from `n = 0` in b-file and text form.
pub fn sequence(out: &mut String, format: Format, seq: &[BigInt]) {
    match format {
        Format::Bfile | Format::Text => {
            for (n, a) in seq.iter().enumerate() {
                writeln!(out, "{n} {a}").unwrap();
            }
        }
        Format::Csv => {
            writeln!(out, "n,value").unwrap();
            for (n, a) in seq.iter().enumerate() {
                writeln!(out, "{n},{a}").unwrap();
            }
        }
        Format::Json => {
            for (n, a) in seq.iter().enumerate() {
                let rec = SequenceRecord { n, value: a.to_string() };
                writeln!(out, "{}", serde_json::to_string(&rec).unwrap()).unwrap();
            }
        }
    }
}

pub fn report(out: &mut String, format: Format, r: &VerificationReport) {
    match format {
        Format::Json => writeln!(out, "{}", r.to_json()).unwrap(),
        _ => {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            write!(out, "{status} {} [{}..{}]", r.check, r.range[0], r.range[1]).unwrap();
            if let Some(v) = r.first_violation {
                write!(out, " first violation at {v}").unwrap();
            }
            writeln!(out).unwrap();
        }
    }
}

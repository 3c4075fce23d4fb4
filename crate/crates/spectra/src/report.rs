//! Text and JSON renderings of results.
//!
//! Every command produces one document. JSON output is a single object
//! followed by a newline; text output is line oriented and, for checks,
//! ends with a `PASS` or `FAIL` summary line.

use std::fmt::Write as _;

use serde::Serialize;
use spectra_core::search::TableCellReport;
use spectra_core::verify::CheckReport;
use spectra_core::{ClassReport, Spectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn summary_line(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ChecksDoc<'a> {
    pub command: &'a str,
    pub checks: &'a [CheckReport],
    pub pass: bool,
}

pub fn checks(format: Format, command: &str, reports: &[CheckReport]) -> String {
    let pass = reports.iter().all(|r| r.pass);
    match format {
        Format::Json => to_json(&ChecksDoc {
            command,
            checks: reports,
            pass,
        }),
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                writeln!(s, "{r}").unwrap();
            }
            writeln!(s, "{}", summary_line(pass)).unwrap();
            s
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumRow {
    pub graph6: String,
    pub spectrum: Spectrum,
    pub t: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Rows<T> {
    pub results: Vec<T>,
}

/// With `labelled`, each text entry is preceded by its graph6 line.
pub fn spectra(format: Format, rows: Vec<SpectrumRow>, labelled: bool) -> String {
    match format {
        Format::Json => to_json(&Rows { results: rows }),
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                if labelled {
                    writeln!(s, "{}", r.graph6).unwrap();
                }
                writeln!(s, "{}", r.spectrum).unwrap();
                writeln!(s, "t={}", r.t).unwrap();
            }
            s
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassRow {
    pub graph6: String,
    pub report: ClassReport,
}

pub fn classes(format: Format, rows: Vec<ClassRow>) -> String {
    match format {
        Format::Json => to_json(&Rows { results: rows }),
        Format::Text => {
            let mut s = String::new();
            for (i, r) in rows.iter().enumerate() {
                if i > 0 {
                    s.push('\n');
                }
                let c = &r.report;
                writeln!(s, "graph6={}", r.graph6).unwrap();
                writeln!(s, "order={}", c.order).unwrap();
                writeln!(s, "spectrum={}", c.spectrum).unwrap();
                writeln!(s, "t={}", c.class_size).unwrap();
                writeln!(s, "girth={}", c.girth).unwrap();
                match c.min_degree {
                    Some(d) => writeln!(s, "min_degree={d}").unwrap(),
                    None => writeln!(s, "min_degree=none").unwrap(),
                }
                writeln!(s, "leafless={}", c.leafless).unwrap();
                writeln!(s, "mis_count={}", c.mis_count).unwrap();
            }
            s
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstructDoc {
    pub graph6: String,
    pub order: usize,
    pub size: usize,
}

pub fn construct(format: Format, doc: &ConstructDoc) -> String {
    match format {
        Format::Json => to_json(doc),
        Format::Text => format!("{}\n", doc.graph6),
    }
}

pub fn table_cell(format: Format, cell: &TableCellReport) -> String {
    match format {
        Format::Json => to_json(cell),
        Format::Text => {
            let mut s = String::new();
            writeln!(
                s,
                "t={} girth={} n_max={} expected={} examined={} found={}",
                cell.t,
                cell.girth,
                cell.n_max,
                cell.expected,
                cell.examined,
                cell.found.len()
            )
            .unwrap();
            for g in &cell.found {
                writeln!(s, "found {g}").unwrap();
            }
            writeln!(s, "{}", summary_line(cell.consistent)).unwrap();
            s
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HuntDoc {
    pub t: usize,
    pub girth: usize,
    pub n_max: usize,
    pub found: Vec<String>,
}

pub fn hunt(format: Format, doc: &HuntDoc) -> String {
    match format {
        Format::Json => to_json(doc),
        Format::Text => {
            let mut s = String::new();
            writeln!(
                s,
                "t={} girth={} n_max={} found={}",
                doc.t,
                doc.girth,
                doc.n_max,
                doc.found.len()
            )
            .unwrap();
            for g in &doc.found {
                writeln!(s, "{g}").unwrap();
            }
            s
        }
    }
}

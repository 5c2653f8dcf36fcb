//! Performance tables from CSV or JSON.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Criterion, PerformanceTable};
use crate::rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    /// Guesses from the file extension, defaulting to CSV.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Csv,
        }
    }
}

pub fn load_dataset(path: &Path, format: Format) -> Result<PerformanceTable> {
    let text = std::fs::read_to_string(path)?;
    parse_dataset(&text, format)
}

pub fn parse_dataset(text: &str, format: Format) -> Result<PerformanceTable> {
    match format {
        Format::Csv => parse_csv(text),
        Format::Json => parse_json(text),
    }
}

/// Header row holds criterion ids; the first column holds alternative ids.
pub fn parse_csv(text: &str) -> Result<PerformanceTable> {
    if text.trim().is_empty() {
        return Err(Error::Parse("line 1, column 1: empty file".into()));
    }
    let mut reader =
        csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).flexible(true).from_reader(text.as_bytes());
    let headers = reader.headers().map_err(csv_error)?.clone();
    if headers.len() < 2 {
        return Err(Error::Parse("line 1: header needs an id column and at least one criterion".into()));
    }
    let criteria: Vec<Criterion> = headers.iter().skip(1).map(Criterion::new).collect();
    let mut alternatives = Vec::new();
    let mut grades = Vec::new();
    for record in reader.records() {
        let record = record.map_err(csv_error)?;
        let line = record.position().map_or(0, |p| p.line());
        if record.iter().all(str::is_empty) {
            continue;
        }
        let id = record.get(0).unwrap_or_default().to_string();
        let mut row = Vec::with_capacity(criteria.len());
        for (col, cell) in record.iter().enumerate().skip(1) {
            let value = rational::parse(cell).map_err(|_| {
                let criterion = criteria.get(col - 1).map_or("?", |c| c.id.as_str());
                Error::Parse(format!("line {line}, column {} ({id}/{criterion}): not a number: {cell:?}", col + 1))
            })?;
            row.push(value);
        }
        alternatives.push(id);
        grades.push(row);
    }
    if alternatives.is_empty() {
        return Err(Error::Parse("line 2: no alternatives".into()));
    }
    PerformanceTable::new(criteria, alternatives, grades)
}

fn csv_error(e: csv::Error) -> Error {
    match e.position() {
        Some(p) => Error::Parse(format!("line {}: {e}", p.line())),
        None => Error::Parse(e.to_string()),
    }
}

/// The `PerformanceTable` JSON document (as embedded in sessions).
pub fn parse_json(text: &str) -> Result<PerformanceTable> {
    if text.trim().is_empty() {
        return Err(Error::Parse("line 1, column 1: empty file".into()));
    }
    let table: PerformanceTable = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    table.validated()
}

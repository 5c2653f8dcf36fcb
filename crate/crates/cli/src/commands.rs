//! The batch subcommands.

use std::fs;
use std::path::Path;

use prefseven_core::service::dataset::{load_dataset, Format};
use prefseven_core::service::store::SessionDir;
use prefseven_core::service::{verify_report, SCHEMA};
use prefseven_core::{
    explain_pair, render_narrative, run_pipeline, Error, Rational, Result, SessionConfig, SessionReport,
};

#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub threshold: Option<Rational>,
}

/// Reads a configuration document; a `schema` tag, when present, must match.
pub fn parse_config(text: &str) -> Result<SessionConfig> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    if let Some(schema) = value.get("schema") {
        if schema != SCHEMA {
            return Err(Error::Parse(format!("unsupported schema {schema}")));
        }
    }
    serde_json::from_value(value).map_err(|e| Error::Parse(format!("configuration: {e}")))
}

pub fn load_config(path: &Path) -> Result<SessionConfig> {
    parse_config(&fs::read_to_string(path)?)
}

pub struct RunArgs<'a> {
    pub data: &'a Path,
    pub config: &'a Path,
    pub out: Option<&'a Path>,
    pub session: Option<&'a Path>,
    pub overrides: Overrides,
    pub verify: bool,
}

/// Runs the pipeline, writes the report and optionally records it in a session directory.
pub fn run(args: &RunArgs<'_>) -> Result<SessionReport> {
    let table = load_dataset(args.data, Format::from_path(args.data))?;
    let mut config = load_config(args.config)?;
    let o = &args.overrides;
    config.override_smaa(o.seed, o.samples, o.threshold.clone());
    let report = run_pipeline(&table, &config)?;
    if args.verify {
        let problems = verify_report(&report);
        if !problems.is_empty() {
            return Err(Error::Inconsistent(problems.join("; ")));
        }
    }
    if let Some(out) = args.out {
        fs::write(out, report.to_json()?)?;
    }
    if let Some(dir) = args.session {
        let session = SessionDir::open_or_init(dir)?;
        session.put_dataset(&table)?;
        session.put_config(&config)?;
        session.append_report(&report)?;
    }
    Ok(report)
}

/// Splits `"S2,S3"` into its two alternatives.
pub fn parse_pair(text: &str) -> Result<(String, String)> {
    match text.split(',').map(str::trim).collect::<Vec<_>>()[..] {
        [a, b] if !a.is_empty() && !b.is_empty() => Ok((a.to_string(), b.to_string())),
        _ => Err(Error::Parse(format!("pair must look like S2,S3, got {text:?}"))),
    }
}

/// Narrative (or JSON) explanation of a pair; `session` is a session directory or a report file.
pub fn explain(session: &Path, pair: &str, json: bool) -> Result<String> {
    let (a, b) = parse_pair(pair)?;
    let report = if session.is_file() {
        SessionReport::from_json(&fs::read_to_string(session)?)?
    } else {
        SessionDir::open(session)?.latest_report()?.1
    };
    let e = explain_pair(&report, &a, &b)?;
    if json {
        Ok(serde_json::to_string_pretty(&e)?)
    } else {
        Ok(render_narrative(&e))
    }
}

/// Problems found in a stored report.
pub fn verify(path: &Path) -> Result<Vec<String>> {
    let report = SessionReport::from_json(&fs::read_to_string(path)?)?;
    Ok(verify_report(&report))
}

/// Matrix, scores and ranking as aligned text.
pub fn summary(report: &SessionReport) -> String {
    let ids = report.alternatives();
    let view = report.view();
    let width = ids.iter().map(String::len).max().unwrap_or(1).max(2);
    let mut out = format!("{:width$}", "");
    for id in ids {
        out.push_str(&format!(" {id:>width$}"));
    }
    out.push('\n');
    for (id, row) in ids.iter().zip(&view) {
        out.push_str(&format!("{id:width$}"));
        for cell in row {
            out.push_str(&format!(" {cell:>width$}"));
        }
        out.push('\n');
    }
    for (id, s) in ids.iter().zip(&report.scores.scores) {
        out.push_str(&format!("V({id}) = {}\n", prefseven_core::rational::to_text(s)));
    }
    out.push_str(&report.ranking_text);
    out.push('\n');
    out
}

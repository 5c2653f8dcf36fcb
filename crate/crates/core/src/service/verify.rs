//! Self-consistency checks on an emitted report.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::scoring::{global_score, rank};
use crate::service::report::{SessionReport, SCHEMA};
use crate::sevenlogic::combine;
use crate::verdict::{tri_from_optima, tri_from_pwi, Evidence, Tri};

/// Problems found; empty when the report recombines and rescoring agrees.
pub fn verify_report(report: &SessionReport) -> Vec<String> {
    let mut problems = Vec::new();
    if report.schema != SCHEMA {
        problems.push(format!("schema is {:?}, expected {SCHEMA:?}", report.schema));
    }
    let table = &report.table;
    let n = table.n_alternatives();
    let ids = table.alternatives();
    let mode = match report.config.mode() {
        Ok(m) => Some(m),
        Err(e) => {
            problems.push(e.to_string());
            None
        }
    };
    if report.perspectives.len() != report.config.perspectives.len() {
        problems.push("perspective count differs from the configuration".into());
    }
    for p in &report.perspectives {
        if p.verdicts.len() != n || p.verdicts.iter().any(|r| r.len() != n) {
            problems.push(format!("perspective {}: verdict matrix is not {n}x{n}", p.name));
            return problems;
        }
        for a in 0..n {
            for b in 0..n {
                let claimed = p.verdicts[a][b];
                let at = || format!("perspective {}, ({}, {})", p.name, ids[a], ids[b]);
                let from_evidence = match &p.evidence[a][b] {
                    Evidence::Lp { min, max } => {
                        if let Some(mode) = &mode {
                            for e in [min, max] {
                                if mode.margin(table, a, b, &e.weights) != e.value {
                                    problems.push(format!("{}: optimum does not match its weights", at()));
                                }
                                if !p.polytope.constraints.iter().all(|c| c.is_satisfied(&e.weights)) {
                                    problems.push(format!("{}: optimum weights are infeasible", at()));
                                }
                            }
                        }
                        tri_from_optima(&min.value, &max.value)
                    }
                    Evidence::Vertices { rows } => {
                        if rows.iter().any(|r| r.holds == r.margin.is_negative()) {
                            problems.push(format!("{}: vertex row sign disagrees with its flag", at()));
                        }
                        if rows.iter().all(|r| r.holds) {
                            Tri::True
                        } else if rows.iter().all(|r| !r.holds) {
                            Tri::False
                        } else {
                            Tri::Unknown
                        }
                    }
                    Evidence::Smaa(s) => {
                        if s.pwi != crate::rational::Rational::new(s.wins.into(), s.samples.into()) {
                            problems.push(format!("{}: pwi differs from wins/samples", at()));
                        }
                        match tri_from_pwi(&s.pwi, &s.threshold) {
                            Ok(t) => t,
                            Err(e) => {
                                problems.push(format!("{}: {e}", at()));
                                claimed
                            }
                        }
                    }
                };
                if from_evidence != claimed {
                    problems.push(format!("{}: verdict {claimed} but evidence gives {from_evidence}", at()));
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let votes: Vec<Tri> = report.perspectives.iter().map(|p| p.verdicts[a][b]).collect();
            match combine(&votes) {
                Ok(v) if v == report.seven.cells[a][b] => {}
                Ok(v) => problems.push(format!(
                    "({}, {}): seven-valued cell {} but perspectives combine to {v}",
                    ids[a], ids[b], report.seven.cells[a][b]
                )),
                Err(e) => problems.push(e.to_string()),
            }
        }
    }
    if report.four != report.seven.four() || report.three != report.seven.three() {
        problems.push("coarsened views do not follow from the seven-valued matrix".into());
    }
    if report.scheme != report.config.scheme.resolve() {
        problems.push("gain/loss values differ from the configured scheme".into());
    }
    match global_score(&report.seven, &report.scheme) {
        Ok(board) => {
            if board != report.scores {
                problems.push("scores do not recompute from matrix and scheme".into());
            }
            let ranking = rank(&board);
            if ranking != report.ranking || ranking.to_string() != report.ranking_text {
                problems.push("ranking does not follow from the scores".into());
            }
        }
        Err(e) => problems.push(e.to_string()),
    }
    problems
}

pub fn check_report(report: &SessionReport) -> Result<()> {
    let problems = verify_report(report);
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Error::Inconsistent(problems.join("; ")))
    }
}

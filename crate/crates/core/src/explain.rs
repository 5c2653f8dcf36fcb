//! Why a pair holds its seven-valued label, down to witness weight vectors.

use std::fmt::Write;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{PerspectiveSpec, WeightVector};
use crate::polytope::DEFAULT_ENUMERATION_LIMIT;
use crate::rational::{self, Num};
use crate::service::config::Aggregation;
use crate::service::pipeline::perspective_polytope;
use crate::service::report::SessionReport;
use crate::sevenlogic::{combine, SevenValue};
use crate::verdict::{Evidence, Mode, Tri};

/// One weight vector on which the statement holds or fails.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub source: String,
    pub weights: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact_weights: Option<Vec<Num>>,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlipWitnesses {
    pub holds: Witness,
    pub fails: Witness,
}

/// Margin of the statement at the central weights or a vertex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightRow {
    pub label: String,
    pub weights: Vec<Num>,
    pub margin: Num,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PerspectiveExplanation {
    pub name: String,
    pub engine: String,
    pub verdict: Tri,
    pub evidence: Evidence,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight_table: Option<Vec<WeightRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flip: Option<FlipWitnesses>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Explanation {
    pub a: String,
    pub b: String,
    pub mode: Aggregation,
    pub value: SevenValue,
    pub perspectives: Vec<PerspectiveExplanation>,
}

fn exact_witness(source: String, weights: &[rational::Rational], margin: &rational::Rational) -> Witness {
    Witness {
        source,
        weights: weights.iter().map(rational::to_f64).collect(),
        exact_weights: Some(weights.iter().map(Num::from).collect()),
        margin: rational::to_f64(margin),
    }
}

fn flip_witnesses(evidence: &Evidence) -> Option<FlipWitnesses> {
    match evidence {
        Evidence::Lp { min, max } => Some(FlipWitnesses {
            holds: exact_witness("maximizer".into(), &max.weights, &max.value),
            fails: exact_witness("minimizer".into(), &min.weights, &min.value),
        }),
        Evidence::Vertices { rows } => {
            let pick = |want: bool| {
                rows.iter()
                    .enumerate()
                    .find(|(_, r)| r.holds == want)
                    .map(|(i, r)| exact_witness(format!("vertex {}", i + 1), &r.weights, &r.margin))
            };
            Some(FlipWitnesses { holds: pick(true)?, fails: pick(false)? })
        }
        Evidence::Smaa(s) => {
            let convert = |w: &crate::verdict::SampleWitness| Witness {
                source: format!("sample {}", w.index),
                weights: w.weights.clone(),
                exact_weights: None,
                margin: w.margin,
            };
            Some(FlipWitnesses { holds: convert(s.first_win.as_ref()?), fails: convert(s.first_loss.as_ref()?) })
        }
    }
}

/// Traces the seven-valued label of `a ≿ b` back to every perspective.
pub fn explain_pair(report: &SessionReport, a: &str, b: &str) -> Result<Explanation> {
    let table = &report.table;
    let ia = table.index_of(a)?;
    let ib = table.index_of(b)?;
    let mode = report.config.mode()?;
    let mut perspectives = Vec::with_capacity(report.perspectives.len());
    for (spec, p) in report.config.perspectives.iter().zip(&report.perspectives) {
        let verdict = p.verdicts[ia][ib];
        let evidence = p.evidence[ia][ib].clone();
        let flip = if verdict == Tri::Unknown { flip_witnesses(&evidence) } else { None };
        perspectives.push(PerspectiveExplanation {
            name: p.name.clone(),
            engine: p.engine.clone(),
            verdict,
            weight_table: weight_table(report, spec, &mode, ia, ib)?,
            evidence,
            flip,
        });
    }
    let votes: Vec<Tri> = perspectives.iter().map(|p| p.verdict).collect();
    let value = combine(&votes)?;
    if value != report.seven.cells[ia][ib] {
        return Err(Error::Inconsistent(format!(
            "({a}, {b}) is {} in the report but perspectives combine to {value}",
            report.seven.cells[ia][ib]
        )));
    }
    Ok(Explanation { a: a.to_string(), b: b.to_string(), mode: report.config.mode, value, perspectives })
}

/// Central weights (for perturbations) followed by every vertex, when enumeration is affordable.
fn weight_table(
    report: &SessionReport,
    perspective: &crate::model::Perspective,
    mode: &Mode,
    a: usize,
    b: usize,
) -> Result<Option<Vec<WeightRow>>> {
    let table = &report.table;
    if table.n_criteria() > DEFAULT_ENUMERATION_LIMIT {
        return Ok(None);
    }
    let poly = perspective_polytope(table, perspective)?;
    let mut labelled: Vec<(String, WeightVector)> = Vec::new();
    if let PerspectiveSpec::CentralPerturbation { central, .. } = &perspective.spec {
        labelled.push(("central".into(), central.clone()));
    }
    for (i, v) in poly.enumerate_vertices()?.iter().enumerate() {
        labelled.push((format!("vertex {}", i + 1), v.clone()));
    }
    Ok(Some(
        labelled
            .into_iter()
            .map(|(label, w)| {
                let margin = mode.margin(table, a, b, w.as_slice());
                WeightRow {
                    label,
                    weights: w.as_slice().iter().map(Num::from).collect(),
                    holds: !margin.is_negative(),
                    margin: Num::from(margin),
                }
            })
            .collect(),
    ))
}

fn names(e: &Explanation, v: Tri) -> String {
    let list: Vec<&str> = e.perspectives.iter().filter(|p| p.verdict == v).map(|p| p.name.as_str()).collect();
    match list.as_slice() {
        [] => String::new(),
        [one] => (*one).to_string(),
        [init @ .., last] => format!("{} and {last}", init.join(", ")),
    }
}

fn evidence_line(e: &Explanation, p: &PerspectiveExplanation) -> String {
    let margin = match e.mode {
        Aggregation::Value => format!("U({}) - U({})", e.a, e.b),
        Aggregation::Outranking => format!("C({} ≿ {}) - k", e.a, e.b),
    };
    let mut line = match &p.evidence {
        Evidence::Lp { min, max } => format!(
            "{margin} ranges over [{}, {}] on the polytope",
            rational::to_text(&min.value),
            rational::to_text(&max.value)
        ),
        Evidence::Vertices { rows } => {
            let holds = rows.iter().filter(|r| r.holds).count();
            format!("{margin} >= 0 at {holds} of {} vertices", rows.len())
        }
        Evidence::Smaa(s) => format!(
            "{margin} >= 0 on {} of {} samples (pwi {:.2}, threshold {})",
            s.wins,
            s.samples,
            rational::to_f64(&s.pwi),
            rational::to_text(&s.threshold)
        ),
    };
    if let Some(rows) = &p.weight_table {
        let holds = rows.iter().filter(|r| r.holds).count();
        let _ = write!(
            line,
            "; it holds for {holds} weight vectors and fails for {} others among those listed",
            rows.len() - holds
        );
    }
    line
}

/// Deterministic text: one line per perspective, then the combination rule.
pub fn render_narrative(e: &Explanation) -> String {
    let statement = match e.mode {
        Aggregation::Value => format!("{} is at least as good as {}", e.a, e.b),
        Aggregation::Outranking => format!("{} outranks {}", e.a, e.b),
    };
    let mut out = format!("\"{statement}\" is {} ({}).\n", e.value.describe(), e.value);
    for p in &e.perspectives {
        let _ = writeln!(out, "- {} ({}): {}; {}.", p.name, p.engine, p.verdict.describe(), evidence_line(e, p));
        if let Some(f) = &p.flip {
            let _ = writeln!(
                out,
                "  holds at {} {:?}, fails at {} {:?}.",
                f.holds.source, f.holds.weights, f.fails.source, f.fails.weights
            );
        }
    }
    let (t, f, u) = (names(e, Tri::True), names(e, Tri::False), names(e, Tri::Unknown));
    let rule = match e.value {
        SevenValue::T => "It is true in every perspective, so it is true.".to_string(),
        SevenValue::F => "It is false in every perspective, so it is false.".to_string(),
        SevenValue::U => "No perspective settles it, so it is unknown.".to_string(),
        SevenValue::ST => {
            format!("It is true in {t} and unknown in {u}, and no perspective is against it, so it is sometimes true.")
        }
        SevenValue::SF => {
            format!("It is false in {f} and unknown in {u}, and no perspective is for it, so it is sometimes false.")
        }
        SevenValue::K => format!("It is true in {t} and false in {f}, so it is contradictory."),
        SevenValue::FK => {
            format!("It is true in {t}, false in {f} and unknown in {u}, so it is fully contradictory.")
        }
    };
    out.push_str(&rule);
    out.push('\n');
    out
}

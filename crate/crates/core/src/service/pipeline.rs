//! Polytopes, per-perspective verdicts, combination, scores and ranking.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{PerformanceTable, Perspective, PerspectiveSpec};
use crate::polytope::{
    build_ordinal_regression, build_perturbation, conflicting_comparisons, sample_uniform_stream, WeightPolytope,
    DEFAULT_ENUMERATION_LIMIT,
};
use crate::scoring::{global_score, rank, validate_scheme};
use crate::service::config::{default_threshold, ConfigDelta, EngineConfig, SessionConfig, DEFAULT_SAMPLES};
use crate::service::report::{PerspectiveReport, SessionReport, SCHEMA};
use crate::sevenlogic::{combine, SevenMatrix};
use crate::verdict::{evaluate, smaa_verdict, winning_tally, Evidence, Mode, Prepared, PwiMatrix, Tally, Tri};

/// The perspective's polytope; an empty elicitation polytope is reported with its conflict.
pub fn perspective_polytope(table: &PerformanceTable, p: &Perspective) -> Result<WeightPolytope> {
    match &p.spec {
        PerspectiveSpec::CentralPerturbation { central, r } => build_perturbation(central, r),
        PerspectiveSpec::Elicited { comparisons } => {
            let poly = build_ordinal_regression(table, comparisons)?;
            if poly.is_empty() {
                let conflict = conflicting_comparisons(table, comparisons)?;
                return Err(Error::InfeasibleElicitation {
                    perspective: p.name.clone(),
                    conflict: conflict.iter().map(ToString::to_string).collect(),
                });
            }
            Ok(poly)
        }
    }
}

/// The engine actually used, after the optional sampling fallback.
fn effective_engine(config: &SessionConfig, dimension: usize) -> Result<EngineConfig> {
    match &config.engine {
        EngineConfig::Vertices if dimension > DEFAULT_ENUMERATION_LIMIT => {
            if config.smaa_fallback {
                Ok(EngineConfig::smaa(DEFAULT_SAMPLES, 0, default_threshold()))
            } else {
                Err(Error::EnumerationLimit { dimension, limit: DEFAULT_ENUMERATION_LIMIT })
            }
        }
        e => Ok(e.clone()),
    }
}

fn square<T>(flat: Vec<T>, n: usize) -> Vec<Vec<T>> {
    let mut it = flat.into_iter();
    (0..n).map(|_| it.by_ref().take(n).collect()).collect()
}

fn evaluate_perspective(
    table: &PerformanceTable,
    perspective: &Perspective,
    stream: u64,
    engine: &EngineConfig,
    mode: &Mode,
) -> Result<PerspectiveReport> {
    let n = table.n_alternatives();
    let poly = perspective_polytope(table, perspective)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let (verdicts, pwi) = match engine {
        EngineConfig::Lp => {
            let prepared = Prepared::Lp(&poly);
            let v =
                pairs.par_iter().map(|&(a, b)| evaluate(table, a, b, &prepared, mode)).collect::<Result<Vec<_>>>()?;
            (v, None)
        }
        EngineConfig::Vertices => {
            let vertices = poly.enumerate_vertices()?;
            let prepared = Prepared::Vertices(vertices);
            let v =
                pairs.par_iter().map(|&(a, b)| evaluate(table, a, b, &prepared, mode)).collect::<Result<Vec<_>>>()?;
            (v, None)
        }
        EngineConfig::Smaa { samples, seed, t } => {
            let points = sample_uniform_stream(&poly, *samples, *seed, stream)?;
            let tallies: Vec<Tally> = pairs
                .par_iter()
                .map(|&(a, b)| winning_tally(table, a, b, &points, mode))
                .collect::<Result<Vec<_>>>()?;
            let v = tallies.iter().map(|tally| smaa_verdict(tally, t)).collect::<Result<Vec<_>>>()?;
            let wins = square(tallies.iter().map(|t| t.wins).collect(), n);
            let matrix = PwiMatrix::new(table.alternatives().to_vec(), *samples as u64, *seed, stream, wins);
            (v, Some(matrix))
        }
    };
    let (values, evidence): (Vec<Tri>, Vec<Evidence>) = verdicts.into_iter().map(|v| (v.value, v.evidence)).unzip();
    Ok(PerspectiveReport {
        name: perspective.name.clone(),
        engine: engine.name().to_string(),
        polytope: poly.document(),
        verdicts: square(values, n),
        evidence: square(evidence, n),
        pwi,
    })
}

/// Combination, scoring and ranking from per-perspective verdicts.
fn assemble(
    table: &PerformanceTable,
    config: &SessionConfig,
    engine: &EngineConfig,
    perspectives: Vec<PerspectiveReport>,
) -> Result<SessionReport> {
    let n = table.n_alternatives();
    let mut cells = vec![Vec::with_capacity(n); n];
    for (a, row) in cells.iter_mut().enumerate() {
        for b in 0..n {
            let votes: Vec<Tri> = perspectives.iter().map(|p| p.verdicts[a][b]).collect();
            row.push(combine(&votes)?);
        }
    }
    let seven = SevenMatrix { alternatives: table.alternatives().to_vec(), cells };
    let scheme = config.scheme.resolve();
    let violations = validate_scheme(&scheme);
    if !violations.is_empty() {
        let text: Vec<String> = violations.iter().map(ToString::to_string).collect();
        return Err(Error::InvalidParameter(format!("gain/loss scheme: {}", text.join("; "))));
    }
    let scores = global_score(&seven, &scheme)?;
    let ranking = rank(&scores);
    Ok(SessionReport {
        schema: SCHEMA.to_string(),
        config: config.clone(),
        table: table.clone(),
        engine: engine.name().to_string(),
        seed: match engine {
            EngineConfig::Smaa { seed, .. } => Some(*seed),
            _ => None,
        },
        perspectives,
        four: seven.four(),
        three: seven.three(),
        seven,
        scheme,
        ranking_text: ranking.to_string(),
        scores,
        ranking,
        progress: 100,
    })
}

/// Builds polytopes, evaluates every ordered pair per perspective, combines, scores and ranks.
pub fn run_pipeline(table: &PerformanceTable, config: &SessionConfig) -> Result<SessionReport> {
    config.validate(table)?;
    let mode = config.mode()?;
    let engine = effective_engine(config, table.n_criteria())?;
    let perspectives = config
        .perspectives
        .par_iter()
        .enumerate()
        .map(|(i, p)| evaluate_perspective(table, p, i as u64, &engine, &mode))
        .collect::<Result<Vec<_>>>()?;
    assemble(table, config, &engine, perspectives)
}

/// Which stages a what-if re-ran.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Recomputed {
    Nothing,
    Scores,
    Thresholds,
    Everything,
}

/// Applies `delta` to the report's configuration, reusing unaffected stages.
pub fn whatif(previous: &SessionReport, delta: &ConfigDelta) -> Result<(SessionReport, Recomputed)> {
    let table = &previous.table;
    let merged = delta.apply(&previous.config);
    merged.validate(table)?;
    if merged == previous.config {
        return Ok((previous.clone(), Recomputed::Nothing));
    }
    let engine = effective_engine(&merged, table.n_criteria())?;
    let mut same_verdicts = merged.clone();
    same_verdicts.scheme = previous.config.scheme.clone();
    same_verdicts.coarsening = previous.config.coarsening;
    if same_verdicts == previous.config {
        let report = assemble(table, &merged, &engine, previous.perspectives.clone())?;
        return Ok((report, Recomputed::Scores));
    }
    if let (
        EngineConfig::Smaa { samples, seed, t },
        EngineConfig::Smaa { samples: previous_samples, seed: previous_seed, .. },
    ) = (&merged.engine, &previous.config.engine)
    {
        let mut same_samples = same_verdicts.clone();
        same_samples.engine = previous.config.engine.clone();
        let same_samples = same_samples == previous.config && samples == previous_samples && seed == previous_seed;
        if same_samples && previous.engine == "smaa" {
            let perspectives = previous.perspectives.iter().map(|p| rethreshold(p, t)).collect::<Result<Vec<_>>>()?;
            let report = assemble(table, &merged, &engine, perspectives)?;
            return Ok((report, Recomputed::Thresholds));
        }
    }
    Ok((run_pipeline(table, &merged)?, Recomputed::Everything))
}

fn rethreshold(p: &PerspectiveReport, t: &crate::rational::Rational) -> Result<PerspectiveReport> {
    let mut out = p.clone();
    for (row_v, row_e) in out.verdicts.iter_mut().zip(out.evidence.iter_mut()) {
        for (v, e) in row_v.iter_mut().zip(row_e.iter_mut()) {
            let Evidence::Smaa(s) = e else {
                return Err(Error::Inconsistent(format!("perspective {} has no sampling evidence", p.name)));
            };
            let tally = Tally {
                wins: s.wins,
                samples: s.samples,
                first_win: s.first_win.clone(),
                first_loss: s.first_loss.clone(),
            };
            let fresh = smaa_verdict(&tally, t)?;
            *v = fresh.value;
            *e = fresh.evidence;
        }
    }
    Ok(out)
}

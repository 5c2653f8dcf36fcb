//! Per-perspective truth of "S is at least as good as S'": exact LP,
//! vertex enumeration and SMAA thresholding, for value and outranking models.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{dot, PerformanceTable, WeightVector};
use crate::polytope::{Optimum, Sense, WeightPolytope};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Tri {
    #[serde(rename = "T")]
    True,
    #[serde(rename = "F")]
    False,
    #[serde(rename = "U")]
    Unknown,
}

impl Tri {
    pub fn as_str(self) -> &'static str {
        match self {
            Tri::True => "T",
            Tri::False => "F",
            Tri::Unknown => "U",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Tri::True => "true",
            Tri::False => "false",
            Tri::Unknown => "unknown",
        }
    }

    /// Exchanges True and False.
    pub fn swap(self) -> Tri {
        match self {
            Tri::True => Tri::False,
            Tri::False => Tri::True,
            Tri::Unknown => Tri::Unknown,
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Indifference threshold `q` and concordance level `k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutrankingParams {
    #[serde(with = "rational::num")]
    pub q: Rational,
    #[serde(with = "rational::num")]
    pub k: Rational,
}

impl OutrankingParams {
    pub fn new(q: Rational, k: Rational) -> Result<Self> {
        let p = OutrankingParams { q, k };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.q.is_negative() {
            return Err(Error::InvalidParameter(format!(
                "indifference threshold q = {} is negative",
                rational::to_text(&self.q)
            )));
        }
        if self.k <= rational::ratio(1, 2) || self.k > Rational::one() {
            return Err(Error::InvalidParameter(format!(
                "concordance level k = {} outside (0.5, 1]",
                rational::to_text(&self.k)
            )));
        }
        Ok(())
    }
}

/// Which statement a verdict is about.
#[derive(Debug, Clone, PartialEq)]
pub enum Mode {
    /// `U(S,w) >= U(S',w)`.
    Value,
    /// `C(S ≿(w) S') >= k`.
    Outranking(OutrankingParams),
}

impl Mode {
    /// Linear objective `c` such that the margin is `c·w - offset`.
    pub fn objective(&self, table: &PerformanceTable, a: usize, b: usize) -> Vec<Rational> {
        match self {
            Mode::Value => table.difference(a, b),
            Mode::Outranking(p) => concordant_criteria(table, a, b, &p.q)
                .into_iter()
                .map(|c| if c { Rational::one() } else { Rational::zero() })
                .collect(),
        }
    }

    pub fn offset(&self) -> Rational {
        match self {
            Mode::Value => Rational::zero(),
            Mode::Outranking(p) => p.k.clone(),
        }
    }

    /// `U(S,w) - U(S',w)` or `C - k`.
    pub fn margin(&self, table: &PerformanceTable, a: usize, b: usize, w: &[Rational]) -> Rational {
        dot(&self.objective(table, a, b), w) - self.offset()
    }

    pub fn params(&self) -> Option<&OutrankingParams> {
        match self {
            Mode::Value => None,
            Mode::Outranking(p) => Some(p),
        }
    }
}

/// An optimum of the margin with the weights attaining it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Extreme {
    #[serde(with = "rational::num")]
    pub value: Rational,
    #[serde(with = "rational::num_vec")]
    pub weights: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexRow {
    #[serde(with = "rational::num_vec")]
    pub weights: Vec<Rational>,
    #[serde(with = "rational::num")]
    pub margin: Rational,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleWitness {
    pub index: usize,
    pub weights: Vec<f64>,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SmaaEvidence {
    pub wins: u64,
    pub samples: u64,
    #[serde(with = "rational::num")]
    pub pwi: Rational,
    #[serde(with = "rational::num")]
    pub threshold: Rational,
    pub first_win: Option<SampleWitness>,
    pub first_loss: Option<SampleWitness>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "engine", rename_all = "snake_case")]
pub enum Evidence {
    Lp { min: Extreme, max: Extreme },
    Vertices { rows: Vec<VertexRow> },
    Smaa(SmaaEvidence),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TriVerdict {
    pub value: Tri,
    pub evidence: Evidence,
}

/// True iff `min >= 0`, False iff `max < 0`.
pub fn tri_from_optima(min: &Rational, max: &Rational) -> Tri {
    if !min.is_negative() {
        Tri::True
    } else if max.is_negative() {
        Tri::False
    } else {
        Tri::Unknown
    }
}

fn pair_indices(table: &PerformanceTable, pair: (&str, &str)) -> Result<(usize, usize)> {
    Ok((table.index_of(pair.0)?, table.index_of(pair.1)?))
}

fn extreme(o: Optimum, offset: &Rational) -> Extreme {
    Extreme { value: o.value - offset, weights: o.argument.into_inner() }
}

/// LP engine on dense indices.
pub fn lp_verdict(
    table: &PerformanceTable,
    a: usize,
    b: usize,
    poly: &WeightPolytope,
    mode: &Mode,
) -> Result<TriVerdict> {
    if poly.dimension() != table.n_criteria() {
        return Err(Error::DimensionMismatch { expected: table.n_criteria(), found: poly.dimension() });
    }
    let objective = mode.objective(table, a, b);
    let offset = mode.offset();
    let min = extreme(poly.optimize(&objective, Sense::Min)?, &offset);
    let max = extreme(poly.optimize(&objective, Sense::Max)?, &offset);
    Ok(TriVerdict { value: tri_from_optima(&min.value, &max.value), evidence: Evidence::Lp { min, max } })
}

/// Vertex engine on dense indices.
pub fn vertex_verdict(
    table: &PerformanceTable,
    a: usize,
    b: usize,
    vertices: &[WeightVector],
    mode: &Mode,
) -> Result<TriVerdict> {
    if vertices.is_empty() {
        return Err(Error::EmptyInput("vertices"));
    }
    let objective = mode.objective(table, a, b);
    let offset = mode.offset();
    let mut rows = Vec::with_capacity(vertices.len());
    for v in vertices {
        if v.len() != table.n_criteria() {
            return Err(Error::DimensionMismatch { expected: table.n_criteria(), found: v.len() });
        }
        let margin = dot(&objective, v.as_slice()) - &offset;
        rows.push(VertexRow { weights: v.as_slice().to_vec(), holds: !margin.is_negative(), margin });
    }
    let value = if rows.iter().all(|r| r.holds) {
        Tri::True
    } else if rows.iter().all(|r| !r.holds) {
        Tri::False
    } else {
        Tri::Unknown
    };
    Ok(TriVerdict { value, evidence: Evidence::Vertices { rows } })
}

pub fn tri_value_lp(table: &PerformanceTable, pair: (&str, &str), poly: &WeightPolytope) -> Result<TriVerdict> {
    let (a, b) = pair_indices(table, pair)?;
    lp_verdict(table, a, b, poly, &Mode::Value)
}

pub fn tri_value_vertices(
    table: &PerformanceTable,
    pair: (&str, &str),
    vertices: &[WeightVector],
) -> Result<TriVerdict> {
    let (a, b) = pair_indices(table, pair)?;
    vertex_verdict(table, a, b, vertices, &Mode::Value)
}

pub fn tri_outranking_lp(
    table: &PerformanceTable,
    pair: (&str, &str),
    poly: &WeightPolytope,
    params: &OutrankingParams,
) -> Result<TriVerdict> {
    let (a, b) = pair_indices(table, pair)?;
    lp_verdict(table, a, b, poly, &Mode::Outranking(params.clone()))
}

pub fn tri_outranking_vertices(
    table: &PerformanceTable,
    pair: (&str, &str),
    vertices: &[WeightVector],
    params: &OutrankingParams,
) -> Result<TriVerdict> {
    let (a, b) = pair_indices(table, pair)?;
    vertex_verdict(table, a, b, vertices, &Mode::Outranking(params.clone()))
}

/// Criteria on which `g_j(a) >= g_j(b) - q`.
pub fn concordant_criteria(table: &PerformanceTable, a: usize, b: usize, q: &Rational) -> Vec<bool> {
    table.row(a).iter().zip(table.row(b)).map(|(x, y)| *x >= y - q).collect()
}

/// Weight of the criteria not opposing `S ≿ S'` by more than `q`.
pub fn concordance(table: &PerformanceTable, pair: (&str, &str), w: &WeightVector, q: &Rational) -> Result<Rational> {
    let (a, b) = pair_indices(table, pair)?;
    if w.len() != table.n_criteria() {
        return Err(Error::DimensionMismatch { expected: table.n_criteria(), found: w.len() });
    }
    Ok(concordant_criteria(table, a, b, q)
        .into_iter()
        .zip(w.as_slice())
        .filter(|(c, _)| *c)
        .map(|(_, x)| x.clone())
        .sum())
}

/// Counts of samples on which the statement holds.
#[derive(Debug, Clone, PartialEq)]
pub struct Tally {
    pub wins: u64,
    pub samples: u64,
    pub first_win: Option<SampleWitness>,
    pub first_loss: Option<SampleWitness>,
}

impl Tally {
    pub fn pwi(&self) -> Rational {
        Rational::new(self.wins.into(), self.samples.into())
    }
}

/// Float test evaluated per sample; ties count as wins.
pub(crate) struct SampleTest {
    coefficients: Vec<f64>,
    outranking_slack: Option<f64>,
}

impl SampleTest {
    pub fn new(table: &PerformanceTable, a: usize, b: usize, mode: &Mode) -> Self {
        match mode {
            Mode::Value => SampleTest {
                coefficients: table.difference(a, b).iter().map(rational::to_f64).collect(),
                outranking_slack: None,
            },
            // C >= k  ⇔  (weight of discordant criteria) <= 1 - k
            Mode::Outranking(p) => SampleTest {
                coefficients: concordant_criteria(table, a, b, &p.q)
                    .into_iter()
                    .map(|c| if c { 0.0 } else { 1.0 })
                    .collect(),
                outranking_slack: Some(rational::to_f64(&(Rational::one() - &p.k))),
            },
        }
    }

    /// Margin whose sign decides the test (`>= 0` holds).
    pub fn margin(&self, w: &[f64]) -> f64 {
        let s: f64 = self.coefficients.iter().zip(w).map(|(c, x)| c * x).sum();
        match self.outranking_slack {
            None => s,
            Some(slack) => slack - s,
        }
    }
}

pub fn winning_tally(table: &PerformanceTable, a: usize, b: usize, samples: &[Vec<f64>], mode: &Mode) -> Result<Tally> {
    if samples.is_empty() {
        return Err(Error::EmptyInput("samples"));
    }
    let test = SampleTest::new(table, a, b, mode);
    let mut tally = Tally { wins: 0, samples: samples.len() as u64, first_win: None, first_loss: None };
    for (index, w) in samples.iter().enumerate() {
        let margin = test.margin(w);
        let slot = if margin >= 0.0 {
            tally.wins += 1;
            &mut tally.first_win
        } else {
            &mut tally.first_loss
        };
        if slot.is_none() {
            *slot = Some(SampleWitness { index, weights: w.clone(), margin });
        }
    }
    Ok(tally)
}

/// Fraction of samples on which the statement holds.
pub fn pairwise_winning_index(
    table: &PerformanceTable,
    pair: (&str, &str),
    samples: &[Vec<f64>],
    mode: &Mode,
) -> Result<f64> {
    let (a, b) = pair_indices(table, pair)?;
    let tally = winning_tally(table, a, b, samples, mode)?;
    Ok(tally.wins as f64 / tally.samples as f64)
}

pub fn validate_threshold(t: &Rational) -> Result<()> {
    if *t <= rational::ratio(1, 2) || *t > Rational::one() {
        return Err(Error::InvalidParameter(format!("threshold t = {} outside (0.5, 1]", rational::to_text(t))));
    }
    Ok(())
}

/// True iff `pwi >= t`, False iff `pwi <= 1 - t`.
pub fn tri_from_pwi(pwi: &Rational, t: &Rational) -> Result<Tri> {
    validate_threshold(t)?;
    Ok(if pwi >= t {
        Tri::True
    } else if *pwi <= Rational::one() - t {
        Tri::False
    } else {
        Tri::Unknown
    })
}

pub fn smaa_verdict(tally: &Tally, t: &Rational) -> Result<TriVerdict> {
    let pwi = tally.pwi();
    let value = tri_from_pwi(&pwi, t)?;
    Ok(TriVerdict {
        value,
        evidence: Evidence::Smaa(SmaaEvidence {
            wins: tally.wins,
            samples: tally.samples,
            pwi,
            threshold: t.clone(),
            first_win: tally.first_win.clone(),
            first_loss: tally.first_loss.clone(),
        }),
    })
}

/// Pairwise winning indices for one perspective.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PwiMatrix {
    pub alternatives: Vec<String>,
    pub samples: u64,
    pub seed: u64,
    pub stream: u64,
    pub wins: Vec<Vec<u64>>,
    pub indices: Vec<Vec<f64>>,
}

impl PwiMatrix {
    pub fn new(alternatives: Vec<String>, samples: u64, seed: u64, stream: u64, wins: Vec<Vec<u64>>) -> Self {
        let indices = wins.iter().map(|row| row.iter().map(|w| *w as f64 / samples.max(1) as f64).collect()).collect();
        PwiMatrix { alternatives, samples, seed, stream, wins, indices }
    }

    pub fn exact(&self, a: usize, b: usize) -> Rational {
        Rational::new(self.wins[a][b].into(), self.samples.into())
    }

    pub fn get(&self, a: usize, b: usize) -> f64 {
        self.indices[a][b]
    }

    /// Rounds to two decimals, as the indices are usually displayed.
    pub fn rounded(&self, a: usize, b: usize) -> f64 {
        rational::rounded(&self.exact(a, b), 2)
    }
}

/// Engine inputs prepared once per perspective.
pub enum Prepared<'a> {
    Lp(&'a WeightPolytope),
    Vertices(&'a [WeightVector]),
    Smaa { samples: &'a [Vec<f64>], t: &'a Rational },
}

/// Verdict for the ordered pair `(a, b)` under any engine.
pub fn evaluate(
    table: &PerformanceTable,
    a: usize,
    b: usize,
    prepared: &Prepared<'_>,
    mode: &Mode,
) -> Result<TriVerdict> {
    match prepared {
        Prepared::Lp(poly) => lp_verdict(table, a, b, poly, mode),
        Prepared::Vertices(vs) => vertex_verdict(table, a, b, vs, mode),
        Prepared::Smaa { samples, t } => smaa_verdict(&winning_tally(table, a, b, samples, mode)?, t),
    }
}

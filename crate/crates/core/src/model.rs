//! Alternatives, criteria, grade tables, weight vectors and perspectives.

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Gain,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Criterion {
    pub id: String,
    pub name: String,
    pub direction: Direction,
    #[serde(with = "rational::text")]
    pub scale_min: Rational,
    #[serde(with = "rational::text")]
    pub scale_max: Rational,
}

impl Criterion {
    /// Gain criterion on the default 0..100 scale.
    pub fn new(id: impl Into<String>) -> Self {
        let id = id.into();
        Criterion {
            name: id.clone(),
            id,
            direction: Direction::Gain,
            scale_min: Rational::zero(),
            scale_max: rational::int(100),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    DuplicateCriterion { id: String },
    DuplicateAlternative { id: String },
    EmptyScale { criterion: String },
    DimensionMismatch { alternative: String, expected: usize, found: usize },
    RowCount { expected: usize, found: usize },
    OutOfRange { alternative: String, criterion: String, value: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateCriterion { id } => write!(f, "duplicate id: criterion {id}"),
            Violation::DuplicateAlternative { id } => write!(f, "duplicate id: alternative {id}"),
            Violation::EmptyScale { criterion } => {
                write!(f, "criterion {criterion}: scale_min must be below scale_max")
            }
            Violation::DimensionMismatch { alternative, expected, found } => {
                write!(f, "dimension mismatch: alternative {alternative} has {found} grades, expected {expected}")
            }
            Violation::RowCount { expected, found } => {
                write!(f, "dimension mismatch: {found} grade rows for {expected} alternatives")
            }
            Violation::OutOfRange { alternative, criterion, value } => {
                write!(f, "out of range: {alternative}/{criterion} = {value}")
            }
        }
    }
}

/// Grades `g_j(a)` of every alternative on every criterion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PerformanceTable {
    criteria: Vec<Criterion>,
    alternatives: Vec<String>,
    #[serde(with = "grades_text")]
    grades: Vec<Vec<Rational>>,
}

mod grades_text {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(rows: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        rows.iter().map(|r| r.iter().map(rational::to_text).collect::<Vec<_>>()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        #[derive(Deserialize)]
        struct Row(#[serde(with = "rational::text_vec")] Vec<Rational>);
        let rows = Vec::<Row>::deserialize(d)?;
        Ok(rows.into_iter().map(|r| r.0).collect())
    }
}

impl PerformanceTable {
    pub fn new(criteria: Vec<Criterion>, alternatives: Vec<String>, grades: Vec<Vec<Rational>>) -> Result<Self> {
        let table = Self::unchecked(criteria, alternatives, grades);
        let violations = validate_table(&table);
        if violations.is_empty() {
            Ok(table)
        } else {
            Err(Error::InvalidTable(violations))
        }
    }

    /// Builds a table without validation; pair with [`validate_table`].
    pub fn unchecked(criteria: Vec<Criterion>, alternatives: Vec<String>, grades: Vec<Vec<Rational>>) -> Self {
        PerformanceTable { criteria, alternatives, grades }
    }

    /// Checks a deserialized table; serde does not run validation.
    pub fn validated(self) -> Result<Self> {
        let violations = validate_table(&self);
        if violations.is_empty() {
            Ok(self)
        } else {
            Err(Error::InvalidTable(violations))
        }
    }

    pub fn criteria(&self) -> &[Criterion] {
        &self.criteria
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn n_criteria(&self) -> usize {
        self.criteria.len()
    }

    pub fn n_alternatives(&self) -> usize {
        self.alternatives.len()
    }

    pub fn row(&self, alternative: usize) -> &[Rational] {
        &self.grades[alternative]
    }

    pub fn grades(&self) -> &[Vec<Rational>] {
        &self.grades
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.alternatives.iter().position(|a| a == id).ok_or_else(|| Error::UnknownAlternative(id.to_string()))
    }

    /// `g(a) - g(b)` per criterion.
    pub fn difference(&self, a: usize, b: usize) -> Vec<Rational> {
        self.grades[a].iter().zip(&self.grades[b]).map(|(x, y)| x - y).collect()
    }

    /// Weighted sum of the grade row at `alternative`.
    pub fn utility_at(&self, alternative: usize, weights: &WeightVector) -> Rational {
        dot(&self.grades[alternative], weights.as_slice())
    }
}

pub fn validate_table(table: &PerformanceTable) -> Vec<Violation> {
    let mut violations = Vec::new();
    let mut seen = HashSet::new();
    for c in &table.criteria {
        if !seen.insert(c.id.as_str()) {
            violations.push(Violation::DuplicateCriterion { id: c.id.clone() });
        }
        if c.scale_min >= c.scale_max {
            violations.push(Violation::EmptyScale { criterion: c.id.clone() });
        }
    }
    let mut seen = HashSet::new();
    for a in &table.alternatives {
        if !seen.insert(a.as_str()) {
            violations.push(Violation::DuplicateAlternative { id: a.clone() });
        }
    }
    if table.grades.len() != table.alternatives.len() {
        violations.push(Violation::RowCount { expected: table.alternatives.len(), found: table.grades.len() });
    }
    for (alt, row) in table.alternatives.iter().zip(&table.grades) {
        if row.len() != table.criteria.len() {
            violations.push(Violation::DimensionMismatch {
                alternative: alt.clone(),
                expected: table.criteria.len(),
                found: row.len(),
            });
            continue;
        }
        for (c, g) in table.criteria.iter().zip(row) {
            if *g < c.scale_min || *g > c.scale_max {
                violations.push(Violation::OutOfRange {
                    alternative: alt.clone(),
                    criterion: c.id.clone(),
                    value: rational::to_text(g),
                });
            }
        }
    }
    violations
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Nonnegative weights summing to exactly one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WeightsRepr", into = "WeightsRepr")]
pub struct WeightVector(Vec<Rational>);

#[derive(Serialize, Deserialize)]
struct WeightsRepr(#[serde(with = "rational::text_vec")] Vec<Rational>);

impl TryFrom<WeightsRepr> for WeightVector {
    type Error = Error;
    fn try_from(r: WeightsRepr) -> Result<Self> {
        WeightVector::new(r.0)
    }
}

impl From<WeightVector> for WeightsRepr {
    fn from(w: WeightVector) -> Self {
        WeightsRepr(w.0)
    }
}

impl WeightVector {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("no weights".into()));
        }
        if let Some(w) = weights.iter().find(|w| w.is_negative()) {
            return Err(Error::InvalidWeights(format!("negative weight {}", rational::to_text(w))));
        }
        let total: Rational = weights.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidWeights(format!("weights sum to {}, not 1", rational::to_text(&total))));
        }
        Ok(WeightVector(weights))
    }

    /// Parses decimal or fraction strings.
    pub fn parse(texts: &[&str]) -> Result<Self> {
        Self::new(texts.iter().map(|t| rational::parse(t)).collect::<Result<_>>()?)
    }

    pub(crate) fn from_raw(weights: Vec<Rational>) -> Self {
        debug_assert!(weights.iter().sum::<Rational>().is_one());
        WeightVector(weights)
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(rational::to_f64).collect()
    }

    pub fn into_inner(self) -> Vec<Rational> {
        self.0
    }
}

/// `S ≿ S'` as supplied by the decision maker.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub better: String,
    pub worse: String,
}

impl Comparison {
    pub fn new(better: impl Into<String>, worse: impl Into<String>) -> Self {
        Comparison { better: better.into(), worse: worse.into() }
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} >= {}", self.better, self.worse)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum PerspectiveSpec {
    CentralPerturbation {
        central: WeightVector,
        #[serde(with = "rational::text")]
        r: Rational,
    },
    Elicited {
        comparisons: Vec<Comparison>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Perspective {
    pub name: String,
    #[serde(flatten)]
    pub spec: PerspectiveSpec,
}

impl Perspective {
    pub fn perturbation(name: impl Into<String>, central: WeightVector, r: Rational) -> Self {
        Perspective { name: name.into(), spec: PerspectiveSpec::CentralPerturbation { central, r } }
    }

    pub fn elicited(name: impl Into<String>, comparisons: Vec<Comparison>) -> Self {
        Perspective { name: name.into(), spec: PerspectiveSpec::Elicited { comparisons } }
    }

    /// Checks the perspective against a table.
    pub fn validate(&self, table: &PerformanceTable) -> Result<()> {
        match &self.spec {
            PerspectiveSpec::CentralPerturbation { central, r } => {
                if central.len() != table.n_criteria() {
                    return Err(Error::DimensionMismatch { expected: table.n_criteria(), found: central.len() });
                }
                if r.is_negative() || *r >= Rational::one() {
                    return Err(Error::InvalidParameter(format!(
                        "perturbation range r = {} outside [0, 1)",
                        rational::to_text(r)
                    )));
                }
            }
            PerspectiveSpec::Elicited { comparisons } => {
                for c in comparisons {
                    table.index_of(&c.better)?;
                    table.index_of(&c.worse)?;
                    if c.better == c.worse {
                        return Err(Error::InvalidParameter(format!("comparison of {} with itself", c.better)));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `U(a, w) = Σ_j w_j g_j(a)`.
pub fn utility(table: &PerformanceTable, alternative: &str, w: &WeightVector) -> Result<Rational> {
    let a = table.index_of(alternative)?;
    if w.len() != table.n_criteria() {
        return Err(Error::DimensionMismatch { expected: table.n_criteria(), found: w.len() });
    }
    Ok(table.utility_at(a, w))
}

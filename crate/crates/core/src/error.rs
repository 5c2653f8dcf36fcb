use thiserror::Error;

use crate::model::Violation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid table: {}", format_violations(.0))]
    InvalidTable(Vec<Violation>),
    #[error("unknown alternative {0:?}")]
    UnknownAlternative(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("polytope is empty")]
    EmptyPolytope,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("vertex enumeration infeasible for {dimension} criteria (limit {limit}); use sampling")]
    EnumerationLimit { dimension: usize, limit: usize },
    #[error("polytope is not full-dimensional on the weight simplex")]
    Degenerate,
    #[error("point is not in the polytope")]
    InfeasiblePoint,
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("elicited comparisons of perspective {perspective:?} are infeasible: {}", .conflict.join(", "))]
    InfeasibleElicitation { perspective: String, conflict: Vec<String> },
    #[error("pipeline has not been run")]
    NotRun,
    #[error("not found: {0}")]
    NotFound(String),
    #[error("inconsistent report: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn format_violations(violations: &[Violation]) -> String {
    violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

impl Error {
    /// Machine-readable code used in problem-detail responses.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse_error",
            Error::InvalidTable(_) => "invalid_table",
            Error::UnknownAlternative(_) => "unknown_alternative",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::InvalidWeights(_) => "invalid_weights",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::EmptyPolytope => "empty_polytope",
            Error::Unbounded => "unbounded",
            Error::EnumerationLimit { .. } => "enumeration_limit",
            Error::Degenerate => "degenerate_polytope",
            Error::InfeasiblePoint => "infeasible_point",
            Error::EmptyInput(_) => "empty_input",
            Error::InfeasibleElicitation { .. } => "infeasible_elicitation",
            Error::NotRun => "not_run",
            Error::NotFound(_) => "not_found",
            Error::Inconsistent(_) => "inconsistent_report",
            Error::Io(_) => "io_error",
            Error::Json(_) => "json_error",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

//! Problem-detail error bodies and process exit codes.

use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use prefseven_core::Error;
use serde::Serialize;

pub const PROBLEM_JSON: &str = "application/problem+json";

#[derive(Debug, Clone, Serialize)]
pub struct Conflict {
    pub perspective: String,
    pub comparisons: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Problem {
    #[serde(rename = "type")]
    pub kind: String,
    pub title: String,
    pub status: u16,
    pub code: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conflict: Option<Box<Conflict>>,
}

impl Problem {
    pub fn new(status: StatusCode, code: &str, detail: impl Into<String>) -> Problem {
        Problem {
            kind: format!("urn:prefseven:problem:{code}"),
            title: status.canonical_reason().unwrap_or("Error").to_string(),
            status: status.as_u16(),
            code: code.to_string(),
            detail: detail.into(),
            conflict: None,
        }
    }

    pub fn not_found(detail: impl Into<String>) -> Problem {
        Problem::new(StatusCode::NOT_FOUND, "not_found", detail)
    }
}

pub fn status_of(e: &Error) -> StatusCode {
    match e {
        Error::NotRun => StatusCode::CONFLICT,
        Error::NotFound(_) | Error::UnknownAlternative(_) => StatusCode::NOT_FOUND,
        Error::Parse(_) | Error::Json(_) => StatusCode::BAD_REQUEST,
        Error::Io(_) | Error::Inconsistent(_) => StatusCode::INTERNAL_SERVER_ERROR,
        _ => StatusCode::UNPROCESSABLE_ENTITY,
    }
}

/// 2 for invalid input, 3 for infeasible elicitation, 1 otherwise.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InfeasibleElicitation { .. } => 3,
        Error::Io(_) => 1,
        _ => 2,
    }
}

impl From<Error> for Problem {
    fn from(e: Error) -> Problem {
        let mut p = Problem::new(status_of(&e), e.code(), e.to_string());
        if let Error::InfeasibleElicitation { perspective, conflict } = e {
            p.conflict = Some(Box::new(Conflict { perspective, comparisons: conflict }));
        }
        p
    }
}

impl IntoResponse for Problem {
    fn into_response(self) -> Response {
        let status = StatusCode::from_u16(self.status).unwrap_or(StatusCode::INTERNAL_SERVER_ERROR);
        let body = serde_json::to_string(&self).unwrap_or_default();
        (status, [(header::CONTENT_TYPE, PROBLEM_JSON)], body).into_response()
    }
}

//! JSON HTTP API over the session store.
//!
//! | method | path                              |
//! |--------|-----------------------------------|
//! | POST   | `/sessions`                       |
//! | PUT    | `/sessions/{id}/dataset`          |
//! | PUT    | `/sessions/{id}/config`           |
//! | POST   | `/sessions/{id}/run`              |
//! | GET    | `/sessions/{id}/report`           |
//! | GET    | `/sessions/{id}/pairs/{a}/{b}`    |
//! | POST   | `/sessions/{id}/whatif`           |
//! | GET    | `/sessions/{id}/history`          |
//!
//! Errors are `application/problem+json` bodies with a `code` field.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use axum::extract::{Path, Query, State};
use axum::http::{header, HeaderMap, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post, put};
use axum::{Json, Router};
use prefseven_core::service::dataset::{parse_csv, parse_json};
use prefseven_core::service::store::SessionDir;
use prefseven_core::service::{ConfigDelta, Recomputed, Store, SCHEMA};
use prefseven_core::{explain_pair, render_narrative, run_pipeline, whatif, Error, SessionReport};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::commands::parse_config;
use crate::problem::Problem;

type ApiResult<T = Response> = Result<T, Problem>;

#[derive(Clone)]
pub struct AppState {
    store: Store,
    writers: Arc<Mutex<HashMap<String, Arc<tokio::sync::Mutex<()>>>>>,
}

impl AppState {
    pub fn new(store: Store) -> AppState {
        AppState { store, writers: Arc::default() }
    }

    fn session(&self, id: &str) -> ApiResult<SessionDir> {
        self.store.session(id).map_err(|_| Problem::not_found(format!("unknown session {id}")))
    }

    /// One writer per session; readers never wait.
    fn writer(&self, id: &str) -> Arc<tokio::sync::Mutex<()>> {
        let mut map = self.writers.lock().unwrap_or_else(|e| e.into_inner());
        map.entry(id.to_string()).or_default().clone()
    }
}

pub fn router(store: Store) -> Router {
    Router::new()
        .route("/sessions", post(create_session))
        .route("/sessions/{id}/dataset", put(put_dataset))
        .route("/sessions/{id}/config", put(put_config))
        .route("/sessions/{id}/run", post(run))
        .route("/sessions/{id}/report", get(report))
        .route("/sessions/{id}/pairs/{a}/{b}", get(pair))
        .route("/sessions/{id}/whatif", post(what_if))
        .route("/sessions/{id}/history", get(history))
        .fallback(|| async { Problem::not_found("no such endpoint") })
        .with_state(AppState::new(store))
}

async fn blocking<T: Send + 'static>(f: impl FnOnce() -> prefseven_core::Result<T> + Send + 'static) -> ApiResult<T> {
    match tokio::task::spawn_blocking(f).await {
        Ok(result) => result.map_err(Problem::from),
        Err(e) => Err(Problem::new(StatusCode::INTERNAL_SERVER_ERROR, "internal", e.to_string())),
    }
}

fn json_response(status: StatusCode, body: String) -> Response {
    (status, [(header::CONTENT_TYPE, "application/json")], body).into_response()
}

async fn create_session(State(state): State<AppState>) -> ApiResult<(StatusCode, Json<Value>)> {
    let store = state.store.clone();
    let dir = blocking(move || store.create_session()).await?;
    Ok((StatusCode::CREATED, Json(json!({ "schema": SCHEMA, "id": dir.id() }))))
}

async fn put_dataset(
    State(state): State<AppState>,
    Path(id): Path<String>,
    headers: HeaderMap,
    body: String,
) -> ApiResult<Json<Value>> {
    let session = state.session(&id)?;
    let csv =
        headers.get(header::CONTENT_TYPE).and_then(|v| v.to_str().ok()).is_some_and(|v| v.starts_with("text/csv"));
    let table = if csv { parse_csv(&body)? } else { parse_json(&dataset_body(&body)?)? };
    let writer = state.writer(&id);
    let _guard = writer.lock().await;
    session.put_dataset(&table)?;
    Ok(Json(json!({
        "schema": SCHEMA,
        "id": id,
        "alternatives": table.alternatives(),
        "criteria": table.criteria().iter().map(|c| &c.id).collect::<Vec<_>>(),
    })))
}

/// Accepts the bare table document or one wrapped as `{"schema", "table"}`.
fn dataset_body(body: &str) -> prefseven_core::Result<String> {
    let value: Value = serde_json::from_str(body)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    match value.get("table") {
        Some(table) => Ok(table.to_string()),
        None => Ok(body.to_string()),
    }
}

async fn put_config(State(state): State<AppState>, Path(id): Path<String>, body: String) -> ApiResult<Json<Value>> {
    let session = state.session(&id)?;
    let config = parse_config(&body)?;
    if let Ok(table) = session.dataset() {
        config.validate(&table)?;
    }
    let writer = state.writer(&id);
    let _guard = writer.lock().await;
    session.put_config(&config)?;
    Ok(Json(json!({ "schema": SCHEMA, "id": id, "config": config })))
}

fn missing(session: &SessionDir, what: &str, e: Error) -> Problem {
    match e {
        Error::NotFound(_) => Problem::new(
            StatusCode::CONFLICT,
            &format!("missing_{what}"),
            format!("session {} has no {what}; PUT /sessions/{}/{what} first", session.id(), session.id()),
        ),
        other => other.into(),
    }
}

fn outcome(id: &str, version: u32, recomputed: Recomputed, report: &SessionReport) -> ApiResult<Response> {
    let body = format!(
        "{{\"schema\":{},\"id\":{},\"version\":{version},\"recomputed\":{},\"report\":{}}}",
        json!(SCHEMA),
        json!(id),
        json!(recomputed),
        report.to_json()?
    );
    Ok(json_response(StatusCode::CREATED, body))
}

async fn run(State(state): State<AppState>, Path(id): Path<String>) -> ApiResult {
    let session = state.session(&id)?;
    let writer = state.writer(&id);
    let _guard = writer.lock().await;
    let table = session.dataset().map_err(|e| missing(&session, "dataset", e))?;
    let config = session.config().map_err(|e| missing(&session, "config", e))?;
    config.validate(&table)?;
    let dir = session.clone();
    let (version, report) = blocking(move || {
        let report = run_pipeline(&table, &config)?;
        Ok((dir.append_report(&report)?, report))
    })
    .await?;
    outcome(&id, version, Recomputed::Everything, &report)
}

#[derive(Deserialize)]
struct VersionQuery {
    version: Option<u32>,
}

async fn report(State(state): State<AppState>, Path(id): Path<String>, Query(q): Query<VersionQuery>) -> ApiResult {
    let session = state.session(&id)?;
    let (version, report) = blocking(move || match q.version {
        Some(v) => Ok((v, session.report(v)?)),
        None => session.latest_report(),
    })
    .await?;
    let mut response = json_response(StatusCode::OK, report.to_json()?);
    response.headers_mut().insert("x-report-version", version.into());
    Ok(response)
}

async fn pair(
    State(state): State<AppState>,
    Path((id, a, b)): Path<(String, String, String)>,
) -> ApiResult<Json<Value>> {
    let session = state.session(&id)?;
    let (version, report) = blocking(move || session.latest_report()).await?;
    let explanation = explain_pair(&report, &a, &b)?;
    let narrative = render_narrative(&explanation);
    Ok(Json(json!({
        "schema": SCHEMA,
        "id": id,
        "version": version,
        "explanation": explanation,
        "narrative": narrative,
    })))
}

async fn what_if(State(state): State<AppState>, Path(id): Path<String>, body: String) -> ApiResult {
    let session = state.session(&id)?;
    let delta: ConfigDelta = if body.trim().is_empty() {
        ConfigDelta::default()
    } else {
        serde_json::from_str(&body)
            .map_err(|e| Problem::from(Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))))?
    };
    let writer = state.writer(&id);
    let _guard = writer.lock().await;
    let dir = session.clone();
    let (version, report, recomputed) = blocking(move || {
        let (version, previous) = dir.latest_report()?;
        let (report, recomputed) = whatif(&previous, &delta)?;
        if recomputed == Recomputed::Nothing {
            return Ok((version, report, recomputed));
        }
        dir.put_config(&report.config)?;
        Ok((dir.append_report(&report)?, report, recomputed))
    })
    .await?;
    outcome(&id, version, recomputed, &report)
}

async fn history(State(state): State<AppState>, Path(id): Path<String>) -> ApiResult<Json<Value>> {
    let session = state.session(&id)?;
    let entries = blocking(move || session.history()).await?;
    Ok(Json(json!({ "schema": SCHEMA, "id": id, "versions": entries })))
}

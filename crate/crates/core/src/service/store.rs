//! Directory-per-session persistence with append-only report versions.
//!
//! ```text
//! <root>/<id>/session.json
//! <root>/<id>/dataset.json
//! <root>/<id>/config.json
//! <root>/<id>/reports/000001.json, 000002.json, ...
//! ```

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::PerformanceTable;
use crate::service::config::SessionConfig;
use crate::service::report::{SessionReport, SCHEMA};

pub const DATA_DIR_ENV: &str = "PREFSEVEN_DATA_DIR";
const DEFAULT_DATA_DIR: &str = "prefseven-data";

#[derive(Debug, Clone)]
pub struct Store {
    root: PathBuf,
}

#[derive(Debug, Clone)]
pub struct SessionDir {
    id: String,
    path: PathBuf,
}

#[derive(Serialize, Deserialize)]
struct Envelope<T> {
    schema: String,
    #[serde(flatten)]
    body: T,
}

#[derive(Serialize, Deserialize)]
struct SessionMeta {
    id: String,
}

#[derive(Serialize, Deserialize)]
struct DatasetDoc {
    table: PerformanceTable,
}

#[derive(Serialize, Deserialize)]
struct ConfigDoc {
    config: SessionConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HistoryEntry {
    pub version: u32,
    pub mode: String,
    pub engine: String,
    pub ranking: String,
}

impl Store {
    pub fn new(root: impl Into<PathBuf>) -> Result<Store> {
        let root = root.into();
        fs::create_dir_all(&root)?;
        Ok(Store { root })
    }

    /// Root from `PREFSEVEN_DATA_DIR`, else `./prefseven-data`.
    pub fn from_env() -> Result<Store> {
        Store::new(std::env::var_os(DATA_DIR_ENV).map_or_else(|| PathBuf::from(DEFAULT_DATA_DIR), PathBuf::from))
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn create_session(&self) -> Result<SessionDir> {
        loop {
            let id = format!("{:016x}", rand::random::<u64>());
            let path = self.root.join(&id);
            match fs::create_dir(&path) {
                Ok(()) => {
                    fs::create_dir(path.join("reports"))?;
                    let dir = SessionDir { id: id.clone(), path };
                    dir.write_doc("session.json", &SessionMeta { id })?;
                    return Ok(dir);
                }
                Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => continue,
                Err(e) => return Err(e.into()),
            }
        }
    }

    pub fn session(&self, id: &str) -> Result<SessionDir> {
        let valid = !id.is_empty() && id.chars().all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_');
        if !valid {
            return Err(Error::NotFound(format!("session {id}")));
        }
        SessionDir::open(self.root.join(id)).map_err(|_| Error::NotFound(format!("session {id}")))
    }
}

impl SessionDir {
    /// Opens an existing session directory, or initializes an empty one.
    pub fn open_or_init(path: impl Into<PathBuf>) -> Result<SessionDir> {
        let path = path.into();
        if path.join("session.json").is_file() {
            return SessionDir::open(path);
        }
        fs::create_dir_all(path.join("reports"))?;
        let id = path.file_name().map_or_else(|| "session".into(), |n| n.to_string_lossy().into_owned());
        let dir = SessionDir { id: id.clone(), path };
        dir.write_doc("session.json", &SessionMeta { id })?;
        Ok(dir)
    }

    pub fn open(path: impl Into<PathBuf>) -> Result<SessionDir> {
        let path = path.into();
        let meta: SessionMeta = read_doc(&path.join("session.json"))
            .map_err(|_| Error::NotFound(format!("session directory {}", path.display())))?;
        Ok(SessionDir { id: meta.id, path })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    fn write_doc<T: Serialize>(&self, name: &str, body: &T) -> Result<()> {
        let text = serde_json::to_string_pretty(&Envelope { schema: SCHEMA.to_string(), body })?;
        let tmp = self.path.join(format!(".{name}.tmp"));
        fs::write(&tmp, text)?;
        fs::rename(tmp, self.path.join(name))?;
        Ok(())
    }

    pub fn put_dataset(&self, table: &PerformanceTable) -> Result<()> {
        self.write_doc("dataset.json", &DatasetDoc { table: table.clone() })
    }

    pub fn dataset(&self) -> Result<PerformanceTable> {
        let path = self.path.join("dataset.json");
        if !path.is_file() {
            return Err(Error::NotFound(format!("dataset of session {}", self.id)));
        }
        read_doc::<DatasetDoc>(&path)?.table.validated()
    }

    pub fn put_config(&self, config: &SessionConfig) -> Result<()> {
        self.write_doc("config.json", &ConfigDoc { config: config.clone() })
    }

    pub fn config(&self) -> Result<SessionConfig> {
        let path = self.path.join("config.json");
        if !path.is_file() {
            return Err(Error::NotFound(format!("configuration of session {}", self.id)));
        }
        Ok(read_doc::<ConfigDoc>(&path)?.config)
    }

    fn report_path(&self, version: u32) -> PathBuf {
        self.path.join("reports").join(format!("{version:06}.json"))
    }

    pub fn versions(&self) -> Result<Vec<u32>> {
        let mut out = Vec::new();
        let dir = self.path.join("reports");
        if !dir.is_dir() {
            return Ok(out);
        }
        for entry in fs::read_dir(dir)? {
            let name = entry?.file_name();
            let name = name.to_string_lossy();
            if let Some(v) = name.strip_suffix(".json").and_then(|s| s.parse().ok()) {
                out.push(v);
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Stores a new immutable version and returns its number.
    pub fn append_report(&self, report: &SessionReport) -> Result<u32> {
        let text = report.to_json()?;
        fs::create_dir_all(self.path.join("reports"))?;
        loop {
            let version = self.versions()?.last().map_or(1, |v| v + 1);
            let tmp = self.path.join(format!(".report-{version}.tmp"));
            let mut file = fs::File::create(&tmp)?;
            file.write_all(text.as_bytes())?;
            file.sync_all()?;
            // hard_link fails if the version exists, so stored versions are never replaced.
            let linked = fs::hard_link(&tmp, self.report_path(version));
            fs::remove_file(&tmp)?;
            match linked {
                Ok(()) => return Ok(version),
                Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => continue,
                Err(e) => return Err(e.into()),
            }
        }
    }

    pub fn report(&self, version: u32) -> Result<SessionReport> {
        let path = self.report_path(version);
        if !path.is_file() {
            return Err(Error::NotFound(format!("report version {version} of session {}", self.id)));
        }
        SessionReport::from_json(&fs::read_to_string(path)?)
    }

    pub fn latest_report(&self) -> Result<(u32, SessionReport)> {
        let version = *self.versions()?.last().ok_or(Error::NotRun)?;
        Ok((version, self.report(version)?))
    }

    pub fn history(&self) -> Result<Vec<HistoryEntry>> {
        self.versions()?
            .into_iter()
            .map(|version| {
                let r = self.report(version)?;
                Ok(HistoryEntry {
                    version,
                    mode: serde_json::to_value(r.config.mode)?.as_str().unwrap_or_default().to_string(),
                    engine: r.engine.clone(),
                    ranking: r.ranking_text.clone(),
                })
            })
            .collect()
    }
}

fn read_doc<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)?;
    let env: Envelope<T> = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("{}: line {}, column {}: {e}", path.display(), e.line(), e.column())))?;
    if env.schema != SCHEMA {
        return Err(Error::Parse(format!("{}: unsupported schema {:?}", path.display(), env.schema)));
    }
    Ok(env.body)
}

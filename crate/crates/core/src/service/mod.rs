//! Dataset ingestion, configuration, the end-to-end pipeline, reports and persistence.

pub mod config;
pub mod dataset;
pub mod pipeline;
pub mod report;
pub mod store;
pub mod verify;

pub use config::{Aggregation, Coarsening, ConfigDelta, EngineConfig, SchemeConfig, SessionConfig};
pub use dataset::{load_dataset, parse_csv, parse_json, Format};
pub use pipeline::{run_pipeline, whatif, Recomputed};
pub use report::{PerspectiveReport, SessionReport, SCHEMA};
pub use store::Store;
pub use verify::{check_report, verify_report};

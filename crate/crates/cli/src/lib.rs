//! Batch commands and the HTTP service around `prefseven-core`.

pub mod commands;
pub mod http;
pub mod problem;

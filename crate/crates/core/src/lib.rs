//! Seven-valued preference relations between alternatives evaluated under
//! several weight perspectives.
//!
//! Per-perspective verdicts come from exact linear programming over weight
//! polytopes, vertex enumeration, or hit-and-run sampling (SMAA); they are
//! combined into a seven-valued relation, scored and ranked.

pub mod error;
pub mod explain;
pub mod fixtures;
pub mod model;
pub mod polytope;
pub mod rational;
pub mod scoring;
pub mod service;
pub mod sevenlogic;
pub mod verdict;

pub use error::{Error, Result};
pub use explain::{explain_pair, render_narrative, Explanation};
pub use model::{
    utility, validate_table, Comparison, Criterion, PerformanceTable, Perspective, PerspectiveSpec, Violation,
    WeightVector,
};
pub use polytope::{
    build_ordinal_regression, build_perturbation, sample_uniform, ConvexWitness, LinearConstraint, Optimum, Relation,
    Sense, WeightPolytope,
};
pub use rational::Rational;
pub use scoring::{basic_scheme, deck_scheme, global_score, rank, CardCounts, GainLossScheme, ScoreBoard};
pub use service::config::{Aggregation, EngineConfig, SchemeConfig, SessionConfig};
pub use service::pipeline::{run_pipeline, whatif};
pub use service::report::SessionReport;
pub use sevenlogic::{combine, FourValue, SevenValue, ThreeValue};
pub use verdict::{OutrankingParams, PwiMatrix, Tri, TriVerdict};

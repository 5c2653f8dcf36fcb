//! The session report document.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::PerformanceTable;
use crate::polytope::PolytopeDocument;
use crate::scoring::{GainLossScheme, Ranking, ScoreBoard};
use crate::service::config::{Coarsening, SessionConfig};
use crate::sevenlogic::{FourValue, SevenMatrix, ThreeValue};
use crate::verdict::{Evidence, PwiMatrix, Tri};

pub const SCHEMA: &str = "prefseven/1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PerspectiveReport {
    pub name: String,
    pub engine: String,
    pub polytope: PolytopeDocument,
    pub verdicts: Vec<Vec<Tri>>,
    pub evidence: Vec<Vec<Evidence>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pwi: Option<PwiMatrix>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SessionReport {
    pub schema: String,
    pub config: SessionConfig,
    pub table: PerformanceTable,
    pub engine: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub perspectives: Vec<PerspectiveReport>,
    pub seven: SevenMatrix,
    pub four: Vec<Vec<FourValue>>,
    pub three: Vec<Vec<ThreeValue>>,
    pub scheme: GainLossScheme,
    pub scores: ScoreBoard,
    pub ranking: Ranking,
    pub ranking_text: String,
    pub progress: u8,
}

impl SessionReport {
    pub fn alternatives(&self) -> &[String] {
        self.table.alternatives()
    }

    pub fn perspective(&self, name: &str) -> Option<&PerspectiveReport> {
        self.perspectives.iter().find(|p| p.name == name)
    }

    /// Matrix labels at the configured coarsening level.
    pub fn view(&self) -> Vec<Vec<String>> {
        let label = |s: &str| s.to_string();
        match self.config.coarsening {
            Coarsening::Seven => {
                self.seven.cells.iter().map(|r| r.iter().map(|v| label(v.as_str())).collect()).collect()
            }
            Coarsening::Four => self.four.iter().map(|r| r.iter().map(|v| four_label(*v)).collect()).collect(),
            Coarsening::Three => self.three.iter().map(|r| r.iter().map(|v| three_label(*v)).collect()).collect(),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<SessionReport> {
        let report: SessionReport = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
        if report.schema != SCHEMA {
            return Err(Error::Parse(format!("unsupported schema {:?}", report.schema)));
        }
        Ok(report)
    }
}

fn four_label(v: FourValue) -> String {
    match v {
        FourValue::T4 => "T",
        FourValue::U4 => "U",
        FourValue::K4 => "K",
        FourValue::F4 => "F",
    }
    .into()
}

fn three_label(v: ThreeValue) -> String {
    match v {
        ThreeValue::T3 => "T",
        ThreeValue::Other3 => "other",
        ThreeValue::F3 => "F",
    }
    .into()
}

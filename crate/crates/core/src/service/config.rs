//! Session configuration and what-if deltas.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{PerformanceTable, Perspective};
use crate::rational::{self, Rational};
use crate::scoring::{basic_scheme, deck_scheme, CardCounts, GainLossScheme};
use crate::verdict::{validate_threshold, Mode, OutrankingParams};

pub const DEFAULT_SAMPLES: usize = 100_000;

pub fn default_threshold() -> Rational {
    rational::ratio(17, 20)
}

fn default_samples() -> usize {
    DEFAULT_SAMPLES
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Aggregation {
    Value,
    Outranking,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum EngineConfig {
    Lp,
    Vertices,
    Smaa {
        #[serde(default = "default_samples")]
        samples: usize,
        #[serde(default)]
        seed: u64,
        #[serde(default = "default_threshold", with = "rational::num")]
        t: Rational,
    },
}

impl EngineConfig {
    pub fn smaa(samples: usize, seed: u64, t: Rational) -> Self {
        EngineConfig::Smaa { samples, seed, t }
    }

    pub fn name(&self) -> &'static str {
        match self {
            EngineConfig::Lp => "lp",
            EngineConfig::Vertices => "vertices",
            EngineConfig::Smaa { .. } => "smaa",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum SchemeConfig {
    #[default]
    Basic,
    Deck {
        cards: CardCounts,
    },
}

impl SchemeConfig {
    pub fn resolve(&self) -> GainLossScheme {
        match self {
            SchemeConfig::Basic => basic_scheme(),
            SchemeConfig::Deck { cards } => deck_scheme(*cards),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coarsening {
    #[default]
    Seven,
    Four,
    Three,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SessionConfig {
    pub mode: Aggregation,
    pub engine: EngineConfig,
    pub perspectives: Vec<Perspective>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outranking: Option<OutrankingParams>,
    #[serde(default)]
    pub scheme: SchemeConfig,
    #[serde(default)]
    pub coarsening: Coarsening,
    /// Switch the vertex engine to sampling when there are too many criteria.
    #[serde(default)]
    pub smaa_fallback: bool,
}

impl SessionConfig {
    pub fn new(mode: Aggregation, engine: EngineConfig, perspectives: Vec<Perspective>) -> Self {
        SessionConfig {
            mode,
            engine,
            perspectives,
            outranking: None,
            scheme: SchemeConfig::Basic,
            coarsening: Coarsening::Seven,
            smaa_fallback: false,
        }
    }

    pub fn with_outranking(mut self, params: OutrankingParams) -> Self {
        self.mode = Aggregation::Outranking;
        self.outranking = Some(params);
        self
    }

    pub fn with_scheme(mut self, scheme: SchemeConfig) -> Self {
        self.scheme = scheme;
        self
    }

    pub fn mode(&self) -> Result<Mode> {
        match self.mode {
            Aggregation::Value => Ok(Mode::Value),
            Aggregation::Outranking => self
                .outranking
                .clone()
                .map(Mode::Outranking)
                .ok_or_else(|| Error::InvalidParameter("outranking mode requires q and k".into())),
        }
    }

    pub fn validate(&self, table: &PerformanceTable) -> Result<()> {
        if self.perspectives.is_empty() {
            return Err(Error::InvalidParameter("at least one perspective is required".into()));
        }
        for (i, p) in self.perspectives.iter().enumerate() {
            if self.perspectives[..i].iter().any(|q| q.name == p.name) {
                return Err(Error::InvalidParameter(format!("duplicate perspective name {:?}", p.name)));
            }
            p.validate(table)?;
        }
        if let Some(params) = &self.outranking {
            params.validate()?;
        }
        self.mode()?;
        if let EngineConfig::Smaa { samples, t, .. } = &self.engine {
            validate_threshold(t)?;
            if *samples == 0 {
                return Err(Error::InvalidParameter("smaa needs at least one sample".into()));
            }
        }
        Ok(())
    }

    /// Command-line style overrides; they only touch an smaa engine.
    pub fn override_smaa(&mut self, seed: Option<u64>, samples: Option<usize>, t: Option<Rational>) {
        if let EngineConfig::Smaa { samples: s, seed: sd, t: th } = &mut self.engine {
            if let Some(v) = seed {
                *sd = v;
            }
            if let Some(v) = samples {
                *s = v;
            }
            if let Some(v) = t {
                *th = v;
            }
        }
    }
}

/// Partial configuration applied on top of an existing one.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigDelta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Aggregation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub engine: Option<EngineConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perspectives: Option<Vec<Perspective>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outranking: Option<OutrankingParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scheme: Option<SchemeConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coarsening: Option<Coarsening>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smaa_fallback: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_num")]
    pub t: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
}

mod opt_num {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::rational::{num, Num, Rational};

    pub fn serialize<S: Serializer>(value: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        value.as_ref().map(Num::from).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<num::Repr>::deserialize(d)?.map(|r| r.into_rational().map_err(serde::de::Error::custom)).transpose()
    }
}

impl ConfigDelta {
    pub fn apply(&self, base: &SessionConfig) -> SessionConfig {
        let mut c = base.clone();
        if let Some(v) = self.mode {
            c.mode = v;
        }
        if let Some(v) = &self.engine {
            c.engine = v.clone();
        }
        if let Some(v) = &self.perspectives {
            c.perspectives = v.clone();
        }
        if let Some(v) = &self.outranking {
            c.outranking = Some(v.clone());
        }
        if let Some(v) = &self.scheme {
            c.scheme = v.clone();
        }
        if let Some(v) = self.coarsening {
            c.coarsening = v;
        }
        if let Some(v) = self.smaa_fallback {
            c.smaa_fallback = v;
        }
        c.override_smaa(self.seed, self.samples, self.t.clone());
        c
    }
}

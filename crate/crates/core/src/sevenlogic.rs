//! Seven-valued truth of "S is at least as good as S'" and its coarsenings.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::verdict::Tri;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SevenValue {
    T,
    #[serde(rename = "sT")]
    ST,
    U,
    K,
    #[serde(rename = "fK")]
    FK,
    #[serde(rename = "sF")]
    SF,
    F,
}

impl SevenValue {
    pub const ALL: [SevenValue; 7] =
        [SevenValue::T, SevenValue::ST, SevenValue::U, SevenValue::K, SevenValue::FK, SevenValue::SF, SevenValue::F];

    pub fn as_str(self) -> &'static str {
        match self {
            SevenValue::T => "T",
            SevenValue::ST => "sT",
            SevenValue::U => "U",
            SevenValue::K => "K",
            SevenValue::FK => "fK",
            SevenValue::SF => "sF",
            SevenValue::F => "F",
        }
    }

    pub fn parse(text: &str) -> Option<SevenValue> {
        SevenValue::ALL.into_iter().find(|v| v.as_str() == text)
    }

    pub fn describe(self) -> &'static str {
        match self {
            SevenValue::T => "true",
            SevenValue::ST => "sometimes true",
            SevenValue::U => "unknown",
            SevenValue::K => "contradictory",
            SevenValue::FK => "fully contradictory",
            SevenValue::SF => "sometimes false",
            SevenValue::F => "false",
        }
    }

    /// Swaps T with F and sT with sF.
    pub fn dual(self) -> SevenValue {
        match self {
            SevenValue::T => SevenValue::F,
            SevenValue::ST => SevenValue::SF,
            SevenValue::SF => SevenValue::ST,
            SevenValue::F => SevenValue::T,
            other => other,
        }
    }

    /// Layer in the truth lattice, 0 at the top.
    pub fn layer(self) -> u8 {
        match self {
            SevenValue::T => 0,
            SevenValue::ST => 1,
            SevenValue::U | SevenValue::K | SevenValue::FK => 2,
            SevenValue::SF => 3,
            SevenValue::F => 4,
        }
    }
}

impl fmt::Display for SevenValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Display order of the lattice: `a ≤ b` when `a` lies strictly below `b` or equals it.
/// The three middle values are mutually incomparable.
pub fn lattice_leq(a: SevenValue, b: SevenValue) -> bool {
    a == b || a.layer() > b.layer()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FourValue {
    #[serde(rename = "T")]
    T4,
    #[serde(rename = "U")]
    U4,
    #[serde(rename = "K")]
    K4,
    #[serde(rename = "F")]
    F4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ThreeValue {
    #[serde(rename = "T")]
    T3,
    #[serde(rename = "other")]
    Other3,
    #[serde(rename = "F")]
    F3,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counts {
    pub t: usize,
    pub f: usize,
    pub u: usize,
}

impl Counts {
    pub fn of(verdicts: &[Tri]) -> Counts {
        let mut c = Counts::default();
        for v in verdicts {
            match v {
                Tri::True => c.t += 1,
                Tri::False => c.f += 1,
                Tri::Unknown => c.u += 1,
            }
        }
        c
    }
}

/// Count rule over any number of perspectives.
pub fn combine(verdicts: &[Tri]) -> Result<SevenValue> {
    if verdicts.is_empty() {
        return Err(Error::EmptyInput("perspective verdicts"));
    }
    let Counts { t, f, u } = Counts::of(verdicts);
    Ok(match (t > 0, f > 0, u > 0) {
        (true, false, false) => SevenValue::T,
        (false, true, false) => SevenValue::F,
        (false, false, true) => SevenValue::U,
        (true, false, true) => SevenValue::ST,
        (false, true, true) => SevenValue::SF,
        (true, true, false) => SevenValue::K,
        (true, true, true) => SevenValue::FK,
        (false, false, false) => unreachable!("nonempty list"),
    })
}

pub fn coarsen_to_four(v: SevenValue) -> FourValue {
    match v {
        SevenValue::T | SevenValue::ST => FourValue::T4,
        SevenValue::U => FourValue::U4,
        SevenValue::K | SevenValue::FK => FourValue::K4,
        SevenValue::SF | SevenValue::F => FourValue::F4,
    }
}

pub fn coarsen_to_three(v: FourValue) -> ThreeValue {
    match v {
        FourValue::T4 => ThreeValue::T3,
        FourValue::F4 => ThreeValue::F3,
        FourValue::U4 | FourValue::K4 => ThreeValue::Other3,
    }
}

/// Arguments for and against, read directly from the verdicts.
pub fn belnap_classify(verdicts: &[Tri]) -> Result<FourValue> {
    if verdicts.is_empty() {
        return Err(Error::EmptyInput("perspective verdicts"));
    }
    let c = Counts::of(verdicts);
    Ok(match (c.t > 0, c.f > 0) {
        (true, false) => FourValue::T4,
        (false, false) => FourValue::U4,
        (true, true) => FourValue::K4,
        (false, true) => FourValue::F4,
    })
}

/// Seven-valued relation over an ordered list of alternatives; `cells[a][b]` is the truth of `a ≿ b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SevenMatrix {
    pub alternatives: Vec<String>,
    pub cells: Vec<Vec<SevenValue>>,
}

impl SevenMatrix {
    /// Parses whitespace-separated rows such as `"T fK T F fK"`.
    pub fn parse(alternatives: &[&str], rows: &[&str]) -> Result<SevenMatrix> {
        let cells = rows
            .iter()
            .map(|row| {
                row.split_whitespace()
                    .map(|c| {
                        SevenValue::parse(c).ok_or_else(|| Error::Parse(format!("not a seven-valued label: {c:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SevenMatrix { alternatives: alternatives.iter().map(|a| a.to_string()).collect(), cells })
    }

    pub fn len(&self) -> usize {
        self.alternatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alternatives.is_empty()
    }

    pub fn get(&self, a: usize, b: usize) -> SevenValue {
        self.cells[a][b]
    }

    pub fn four(&self) -> Vec<Vec<FourValue>> {
        self.cells.iter().map(|r| r.iter().map(|v| coarsen_to_four(*v)).collect()).collect()
    }

    pub fn three(&self) -> Vec<Vec<ThreeValue>> {
        self.four().iter().map(|r| r.iter().map(|v| coarsen_to_three(*v)).collect()).collect()
    }

    /// Ordered pairs whose cell differs from `other`.
    pub fn differences(&self, other: &SevenMatrix) -> Vec<(String, String, SevenValue, SevenValue)> {
        let mut out = Vec::new();
        for (i, (row, other_row)) in self.cells.iter().zip(&other.cells).enumerate() {
            for (j, (x, y)) in row.iter().zip(other_row).enumerate() {
                if x != y {
                    out.push((self.alternatives[i].clone(), self.alternatives[j].clone(), *x, *y));
                }
            }
        }
        out
    }
}

impl fmt::Display for SevenMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:>6}", "")?;
        for a in &self.alternatives {
            write!(f, "{a:>4}")?;
        }
        writeln!(f)?;
        for (a, row) in self.alternatives.iter().zip(&self.cells) {
            write!(f, "{a:>6}")?;
            for v in row {
                write!(f, "{:>4}", v.as_str())?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

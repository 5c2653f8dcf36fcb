//! Gain/loss schemes, the global score `V^G` and the resulting ranking.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, Num, Rational};
use crate::sevenlogic::{SevenMatrix, SevenValue};

/// Values `v(·)` for the four scored classes; U, K and fK score zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GainLossScheme {
    #[serde(with = "rational::num")]
    pub v_t: Rational,
    #[serde(with = "rational::num")]
    pub v_st: Rational,
    #[serde(with = "rational::num")]
    pub v_sf: Rational,
    #[serde(with = "rational::num")]
    pub v_f: Rational,
}

impl GainLossScheme {
    pub fn new(v_t: Rational, v_st: Rational, v_sf: Rational, v_f: Rational) -> Self {
        GainLossScheme { v_t, v_st, v_sf, v_f }
    }

    /// Gain collected by `S` from `S ≿^H S'`.
    pub fn gain(&self, h: SevenValue) -> Rational {
        match h {
            SevenValue::T => self.v_t.clone(),
            SevenValue::ST => self.v_st.clone(),
            _ => Rational::zero(),
        }
    }

    /// Loss suffered by `S` from `S ≿^H S'`.
    pub fn loss(&self, h: SevenValue) -> Rational {
        match h {
            SevenValue::F => self.v_f.clone(),
            SevenValue::SF => self.v_sf.clone(),
            _ => Rational::zero(),
        }
    }

    pub fn scaled(&self, factor: &Rational) -> GainLossScheme {
        GainLossScheme {
            v_t: &self.v_t * factor,
            v_st: &self.v_st * factor,
            v_sf: &self.v_sf * factor,
            v_f: &self.v_f * factor,
        }
    }
}

/// Blank cards between adjacent classes, from the bottom `F | sF | {U,K,fK} | sT | T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(from = "[u32; 4]", into = "[u32; 4]")]
pub struct CardCounts {
    pub e_f_sf: u32,
    pub e_sf_mid: u32,
    pub e_mid_st: u32,
    pub e_st_t: u32,
}

impl From<[u32; 4]> for CardCounts {
    fn from(c: [u32; 4]) -> Self {
        CardCounts { e_f_sf: c[0], e_sf_mid: c[1], e_mid_st: c[2], e_st_t: c[3] }
    }
}

impl From<CardCounts> for [u32; 4] {
    fn from(c: CardCounts) -> Self {
        [c.e_f_sf, c.e_sf_mid, c.e_mid_st, c.e_st_t]
    }
}

pub fn basic_scheme() -> GainLossScheme {
    GainLossScheme::new(Rational::one(), rational::ratio(1, 2), rational::ratio(1, 2), Rational::one())
}

/// Unnormalized values `ν` in the order (T, sT, sF, F).
pub fn deck_raw(cards: CardCounts) -> [u64; 4] {
    let nu_st = u64::from(cards.e_mid_st) + 1;
    let nu_t = nu_st + u64::from(cards.e_st_t) + 1;
    let nu_sf = u64::from(cards.e_sf_mid) + 1;
    let nu_f = nu_sf + u64::from(cards.e_f_sf) + 1;
    [nu_t, nu_st, nu_sf, nu_f]
}

pub fn deck_scheme(cards: CardCounts) -> GainLossScheme {
    let [t, st, sf, f] = deck_raw(cards);
    let top = t.max(f);
    let v = |n: u64| Rational::new(n.into(), top.into());
    GainLossScheme::new(v(t), v(st), v(sf), v(f))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SchemeViolation {
    Negative { role: String },
    AboveOne { role: String },
    NotMonotone { stronger: String, weaker: String },
}

impl fmt::Display for SchemeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemeViolation::Negative { role } => write!(f, "{role} is negative"),
            SchemeViolation::AboveOne { role } => write!(f, "{role} exceeds 1"),
            SchemeViolation::NotMonotone { stronger, weaker } => {
                write!(f, "{stronger} is smaller than {weaker}")
            }
        }
    }
}

pub fn validate_scheme(s: &GainLossScheme) -> Vec<SchemeViolation> {
    let mut out = Vec::new();
    let classes = [("T", &s.v_t), ("sT", &s.v_st), ("sF", &s.v_sf), ("F", &s.v_f)];
    // Forward and inverse roles share one stored value, so each is checked once per role.
    for (name, v) in classes {
        for role in ["forward", "inverse"] {
            if v.is_negative() {
                out.push(SchemeViolation::Negative { role: format!("v({name}, {role})") });
            }
        }
        if *v > Rational::one() {
            out.push(SchemeViolation::AboveOne { role: format!("v({name})") });
        }
    }
    if s.v_t < s.v_st {
        out.push(SchemeViolation::NotMonotone { stronger: "v(T)".into(), weaker: "v(sT)".into() });
    }
    if s.v_f < s.v_sf {
        out.push(SchemeViolation::NotMonotone { stronger: "v(F)".into(), weaker: "v(sF)".into() });
    }
    out
}

/// Global scores per alternative, in matrix order.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreBoard {
    pub alternatives: Vec<String>,
    pub scores: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct ScoreEntry {
    #[serde(with = "rational::text")]
    exact: Rational,
    approx: f64,
    rounded: f64,
}

impl Serialize for ScoreBoard {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.scores.len()))?;
        for (a, v) in self.alternatives.iter().zip(&self.scores) {
            let entry = ScoreEntry { exact: v.clone(), approx: rational::to_f64(v), rounded: rational::rounded(v, 2) };
            map.serialize_entry(a, &entry)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for ScoreBoard {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct BoardVisitor;
        impl<'de> Visitor<'de> for BoardVisitor {
            type Value = ScoreBoard;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from alternative id to score")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<ScoreBoard, A::Error> {
                let mut board = ScoreBoard { alternatives: Vec::new(), scores: Vec::new() };
                while let Some((id, entry)) = map.next_entry::<String, ScoreEntry>()? {
                    board.alternatives.push(id);
                    board.scores.push(entry.exact);
                }
                Ok(board)
            }
        }
        d.deserialize_map(BoardVisitor)
    }
}

impl ScoreBoard {
    pub fn score_of(&self, id: &str) -> Option<&Rational> {
        self.alternatives.iter().position(|a| a == id).map(|i| &self.scores[i])
    }

    pub fn nums(&self) -> Vec<Num> {
        self.scores.iter().map(Num::from).collect()
    }
}

/// `V^G(S) = Σ_{S'≠S} [gain(S,S') - loss(S,S') - gain(S',S) + loss(S',S)]`.
pub fn global_score(matrix: &SevenMatrix, scheme: &GainLossScheme) -> Result<ScoreBoard> {
    let n = matrix.len();
    if matrix.cells.len() != n || matrix.cells.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidParameter("relation matrix is not square".into()));
    }
    if let Some(i) = (0..n).find(|&i| matrix.cells[i][i] != SevenValue::T) {
        return Err(Error::InvalidParameter(format!(
            "diagonal cell of {} is {}, expected T",
            matrix.alternatives[i], matrix.cells[i][i]
        )));
    }
    let scores = (0..n)
        .map(|s| {
            (0..n)
                .filter(|&o| o != s)
                .map(|o| {
                    let forward = matrix.cells[s][o];
                    let backward = matrix.cells[o][s];
                    scheme.gain(forward) - scheme.loss(forward) - scheme.gain(backward) + scheme.loss(backward)
                })
                .sum()
        })
        .collect();
    Ok(ScoreBoard { alternatives: matrix.alternatives.clone(), scores })
}

/// Weak order by descending score; each group holds tied alternatives in input order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ranking(pub Vec<Vec<String>>);

impl fmt::Display for Ranking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let groups: Vec<String> = self.0.iter().map(|g| g.join(" ∼ ")).collect();
        f.write_str(&groups.join(" → "))
    }
}

pub fn rank(board: &ScoreBoard) -> Ranking {
    let mut order: Vec<usize> = (0..board.scores.len()).collect();
    order.sort_by(|&a, &b| board.scores[b].cmp(&board.scores[a]).then(a.cmp(&b)));
    let mut groups: Vec<Vec<String>> = Vec::new();
    let mut last: Option<&Rational> = None;
    for i in order {
        let score = &board.scores[i];
        match (last, groups.last_mut()) {
            (Some(prev), Some(group)) if prev == score => group.push(board.alternatives[i].clone()),
            _ => groups.push(vec![board.alternatives[i].clone()]),
        }
        last = Some(score);
    }
    Ranking(groups)
}

#![allow(clippy::needless_range_loop)]

//! Brute-force reference computations, written without the library's algorithms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Q = BigRational;

pub fn q(text: &str) -> Q {
    prefseven_core::rational::parse(text).unwrap()
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `a·w >= b`.
#[derive(Clone, Debug)]
pub struct Half {
    pub a: Vec<Q>,
    pub b: Q,
}

fn unit(d: usize, j: usize, scale: Q) -> Vec<Q> {
    (0..d).map(|i| if i == j { scale.clone() } else { Q::zero() }).collect()
}

fn nonnegative(d: usize) -> Vec<Half> {
    (0..d).map(|j| Half { a: unit(d, j, Q::one()), b: Q::zero() }).collect()
}

pub fn perturbation_rows(central: &[Q], r: &Q) -> Vec<Half> {
    let d = central.len();
    let mut rows = nonnegative(d);
    for (j, c) in central.iter().enumerate() {
        rows.push(Half { a: unit(d, j, Q::one()), b: c * (Q::one() - r) });
        rows.push(Half { a: unit(d, j, -Q::one()), b: -(c * (Q::one() + r)) });
    }
    rows
}

pub fn ordinal_rows(grades: &[Vec<Q>], comparisons: &[(usize, usize)]) -> Vec<Half> {
    let d = grades[0].len();
    let mut rows = nonnegative(d);
    for &(a, b) in comparisons {
        rows.push(Half { a: (0..d).map(|j| &grades[a][j] - &grades[b][j]).collect(), b: Q::zero() });
    }
    rows
}

pub fn satisfies(rows: &[Half], w: &[Q]) -> bool {
    rows.iter().all(|h| dot(&h.a, w) >= h.b)
}

pub fn dot(a: &[Q], w: &[Q]) -> Q {
    a.iter().zip(w).map(|(x, y)| x * y).sum()
}

/// Solves a square system by Gauss-Jordan elimination; `None` when singular.
fn solve(mut m: Vec<Vec<Q>>, mut rhs: Vec<Q>) -> Option<Vec<Q>> {
    let n = rhs.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = &m[r][col] / &m[col][col];
                for c in col..n {
                    let v = &f * &m[col][c];
                    m[r][c] -= v;
                }
                let v = &f * &rhs[col];
                rhs[r] -= v;
            }
        }
    }
    Some((0..n).map(|i| &rhs[i] / &m[i][i]).collect())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Every basic feasible point of `{w : rows, Σw = 1}`, sorted.
pub fn vertices(d: usize, rows: &[Half]) -> Vec<Vec<Q>> {
    let mut found: Vec<Vec<Q>> = Vec::new();
    for pick in subsets(rows.len(), d - 1) {
        let mut m: Vec<Vec<Q>> = pick.iter().map(|&i| rows[i].a.clone()).collect();
        let mut rhs: Vec<Q> = pick.iter().map(|&i| rows[i].b.clone()).collect();
        m.push(vec![Q::one(); d]);
        rhs.push(Q::one());
        if let Some(w) = solve(m, rhs) {
            if satisfies(rows, &w) && !found.contains(&w) {
                found.push(w);
            }
        }
    }
    found.sort();
    found
}

pub fn extremes(vertices: &[Vec<Q>], coefficients: &[Q]) -> (Q, Q) {
    let values: Vec<Q> = vertices.iter().map(|v| dot(coefficients, v)).collect();
    (values.iter().min().unwrap().clone(), values.iter().max().unwrap().clone())
}

pub fn label_from_range(min: &Q, max: &Q) -> &'static str {
    if !min.is_negative() {
        "T"
    } else if max.is_negative() {
        "F"
    } else {
        "U"
    }
}

pub fn label_from_pwi(p: f64, t: f64) -> &'static str {
    if p >= t {
        "T"
    } else if p <= 1.0 - t {
        "F"
    } else {
        "U"
    }
}

/// Seven-valued label of a list of per-perspective T/F/U labels.
pub fn combine(labels: &[&str]) -> &'static str {
    let has = |x: &str| labels.contains(&x);
    match (has("T"), has("F"), has("U")) {
        (true, true, true) => "fK",
        (true, true, false) => "K",
        (true, false, true) => "sT",
        (false, true, true) => "sF",
        (true, false, false) => "T",
        (false, true, false) => "F",
        (false, false, true) => "U",
        _ => panic!("no labels"),
    }
}

/// Values `(T, sT, sF, F)`.
pub fn basic() -> [Q; 4] {
    [qi(1), q("0.5"), q("0.5"), qi(1)]
}

pub fn deck(cards: [u32; 4]) -> [Q; 4] {
    let [f_sf, sf_mid, mid_st, st_t] = cards.map(i64::from);
    let st = mid_st + 1;
    let t = st + st_t + 1;
    let sf = sf_mid + 1;
    let f = sf + f_sf + 1;
    let top = Q::from_integer(BigInt::from(t.max(f)));
    [t, st, sf, f].map(|x| qi(x) / &top)
}

pub fn scores(cells: &[Vec<String>], v: &[Q; 4]) -> Vec<Q> {
    let signed = |label: &str| match label {
        "T" => v[0].clone(),
        "sT" => v[1].clone(),
        "sF" => -v[2].clone(),
        "F" => -v[3].clone(),
        _ => Q::zero(),
    };
    let n = cells.len();
    (0..n).map(|s| (0..n).filter(|&o| o != s).map(|o| signed(&cells[s][o]) - signed(&cells[o][s])).sum()).collect()
}

pub fn ranking(names: &[&str], scores: &[Q]) -> String {
    let mut distinct: Vec<&Q> = scores.iter().collect();
    distinct.sort_by(|a, b| b.cmp(a));
    distinct.dedup();
    distinct
        .iter()
        .map(|level| {
            names.iter().zip(scores).filter(|(_, s)| s == level).map(|(n, _)| *n).collect::<Vec<_>>().join(" ∼ ")
        })
        .collect::<Vec<_>>()
        .join(" → ")
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap()
}

/// Exactly uniform points by rejection: the first `d-1` coordinates are drawn
/// uniformly in their bounding box and the last closes the sum.
pub fn rejection_sample(d: usize, rows: &[Half], n: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut lo = vec![0.0f64; d];
    let mut hi = vec![1.0f64; d];
    for h in rows {
        let nz: Vec<usize> = (0..d).filter(|&j| !h.a[j].is_zero()).collect();
        if let [j] = nz[..] {
            let bound = to_f64(&(&h.b / &h.a[j]));
            if h.a[j].is_positive() {
                lo[j] = lo[j].max(bound);
            } else {
                hi[j] = hi[j].min(bound);
            }
        }
    }
    let rows_f: Vec<(Vec<f64>, f64)> = rows.iter().map(|h| (h.a.iter().map(to_f64).collect(), to_f64(&h.b))).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let mut w: Vec<f64> = (0..d - 1).map(|j| rng.random_range(lo[j]..=hi[j])).collect();
        w.push(1.0 - w.iter().sum::<f64>());
        if rows_f.iter().all(|(a, b)| a.iter().zip(&w).map(|(x, y)| x * y).sum::<f64>() >= b - 1e-12) {
            out.push(w);
        }
    }
    out
}

/// Fraction of points where `a` is at least as good as `b`.
pub fn value_pwi(grades: &[Vec<Q>], a: usize, b: usize, points: &[Vec<f64>]) -> f64 {
    let diff: Vec<f64> = grades[a].iter().zip(&grades[b]).map(|(x, y)| to_f64(&(x - y))).collect();
    let wins = points.iter().filter(|w| diff.iter().zip(w.iter()).map(|(c, x)| c * x).sum::<f64>() >= -1e-12).count();
    wins as f64 / points.len() as f64
}

/// Fraction of points where the concordance of `a` over `b` reaches `k`.
pub fn outranking_pwi(grades: &[Vec<Q>], a: usize, b: usize, q: &Q, k: f64, points: &[Vec<f64>]) -> f64 {
    let concordant: Vec<bool> = grades[a].iter().zip(&grades[b]).map(|(x, y)| x >= &(y - q)).collect();
    let wins = points
        .iter()
        .filter(|w| concordant.iter().zip(w.iter()).filter(|(c, _)| **c).map(|(_, x)| x).sum::<f64>() >= k - 1e-12)
        .count();
    wins as f64 / points.len() as f64
}

pub fn grades_q(raw: &[[i64; 4]]) -> Vec<Vec<Q>> {
    raw.iter().map(|r| r.iter().map(|&g| qi(g)).collect()).collect()
}

//! Hit-and-run sampling in the sum-to-one hyperplane.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::lp::{LinearProgram, RowKind};
use super::{Relation, Sense, WeightPolytope};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

pub const BURN_IN: usize = 1000;

/// `n` approximately uniform points; deterministic in `seed`.
pub fn sample_uniform(poly: &WeightPolytope, n: usize, seed: u64) -> Result<Vec<Vec<f64>>> {
    sample_uniform_stream(poly, n, seed, 0)
}

/// As [`sample_uniform`], drawing from an independent RNG stream of the same seed.
pub fn sample_uniform_stream(poly: &WeightPolytope, n: usize, seed: u64, stream: u64) -> Result<Vec<Vec<f64>>> {
    let mut chain = Chain::new(poly)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    for _ in 0..BURN_IN {
        chain.step(&mut rng);
    }
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        chain.step(&mut rng);
        out.push(chain.point());
    }
    Ok(out)
}

struct Chain {
    origin: Vec<f64>,
    /// Orthonormal basis of the sum-zero subspace, one column per entry.
    basis: Vec<Vec<f64>>,
    /// Inequalities `a·y >= c` in local coordinates.
    rows: Vec<(Vec<f64>, f64)>,
    y: Vec<f64>,
    direction: Vec<f64>,
}

impl Chain {
    fn new(poly: &WeightPolytope) -> Result<Self> {
        if poly.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        let d = poly.dimension();
        let inequalities = ge_form(poly)?;
        let origin: Vec<f64> = deepest_point(d, &inequalities)?.iter().map(rational::to_f64).collect();
        let basis = helmert(d);
        let rows = inequalities
            .iter()
            .map(|(a, b)| {
                let a: Vec<f64> = a.iter().map(rational::to_f64).collect();
                let local: Vec<f64> = basis.iter().map(|col| a.iter().zip(col).map(|(x, y)| x * y).sum()).collect();
                let offset = rational::to_f64(b) - a.iter().zip(&origin).map(|(x, y)| x * y).sum::<f64>();
                (local, offset)
            })
            .collect();
        Ok(Chain { origin, basis, rows, y: vec![0.0; d - 1], direction: vec![0.0; d - 1] })
    }

    fn step(&mut self, rng: &mut ChaCha8Rng) {
        if self.y.is_empty() {
            return;
        }
        let mut norm = 0.0;
        for u in self.direction.iter_mut() {
            *u = rng.sample(StandardNormal);
            norm += *u * *u;
        }
        let norm = norm.sqrt();
        for u in self.direction.iter_mut() {
            *u /= norm;
        }
        let mut lo = f64::NEG_INFINITY;
        let mut hi = f64::INFINITY;
        for (a, c) in &self.rows {
            let slack = (dot(a, &self.y) - c).max(0.0);
            let rate = dot(a, &self.direction);
            if rate > 0.0 {
                lo = lo.max(-slack / rate);
            } else if rate < 0.0 {
                hi = hi.min(slack / -rate);
            }
        }
        let u: f64 = rng.random();
        let lambda = if hi > lo { lo + (hi - lo) * u } else { 0.0 };
        for (y, dir) in self.y.iter_mut().zip(&self.direction) {
            *y += lambda * dir;
        }
    }

    fn point(&self) -> Vec<f64> {
        let mut w = self.origin.clone();
        for (col, y) in self.basis.iter().zip(&self.y) {
            for (wi, ci) in w.iter_mut().zip(col) {
                *wi += ci * y;
            }
        }
        w
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// All inequalities as `a·w >= b`; equalities beyond the simplex make the polytope degenerate.
fn ge_form(poly: &WeightPolytope) -> Result<Vec<(Vec<Rational>, Rational)>> {
    let mut out = Vec::new();
    let mut seen_simplex = false;
    for c in poly.constraints() {
        match c.relation {
            Relation::Ge => out.push((c.coefficients.clone(), c.rhs.clone())),
            Relation::Le | Relation::Lt => out.push((c.coefficients.iter().map(|a| -a).collect(), -&c.rhs)),
            Relation::Eq => {
                let is_simplex = c.coefficients.iter().all(One::is_one) && c.rhs.is_one() && !seen_simplex;
                if !is_simplex {
                    return Err(Error::Degenerate);
                }
                seen_simplex = true;
            }
        }
    }
    Ok(out)
}

/// Feasible point maximizing the smallest slack; zero slack means no interior.
fn deepest_point(d: usize, inequalities: &[(Vec<Rational>, Rational)]) -> Result<Vec<Rational>> {
    let mut lp = LinearProgram::new(d + 1);
    lp.tighten_lower(d, Rational::zero());
    lp.tighten_upper(d, Rational::one());
    let mut total = vec![Rational::one(); d];
    total.push(Rational::zero());
    lp.push_row(total, RowKind::Eq, Rational::one());
    for (a, b) in inequalities {
        let mut row = a.clone();
        row.push(-Rational::one());
        lp.push_row(row, RowKind::Ge, b.clone());
    }
    let mut objective = vec![Rational::zero(); d + 1];
    objective[d] = Rational::one();
    let solution = lp.solve(&objective, Sense::Max).map_err(|_| Error::EmptyPolytope)?;
    if solution.value.is_zero() {
        return Err(Error::Degenerate);
    }
    let mut w = solution.x;
    w.truncate(d);
    Ok(w)
}

/// Helmert columns: orthonormal, each summing to zero.
fn helmert(d: usize) -> Vec<Vec<f64>> {
    (1..d)
        .map(|k| {
            let scale = ((k * (k + 1)) as f64).sqrt();
            let mut col = vec![0.0; d];
            for v in col.iter_mut().take(k) {
                *v = 1.0 / scale;
            }
            col[k] = -(k as f64) / scale;
            col
        })
        .collect()
}

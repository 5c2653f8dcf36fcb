//! Exhaustive active-set vertex enumeration.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::{Relation, WeightPolytope};
use crate::model::WeightVector;
use crate::rational::Rational;

pub const DEFAULT_ENUMERATION_LIMIT: usize = 10;

struct Hyperplane {
    coefficients: Vec<Rational>,
    rhs: Rational,
}

/// Inequalities as `a·w >= b`, with redundant single-variable bounds removed.
fn reduced_system(poly: &WeightPolytope) -> (Vec<Hyperplane>, Vec<Hyperplane>) {
    let d = poly.dimension();
    let mut equalities = Vec::new();
    let mut general = Vec::new();
    let mut lower: Vec<Option<Rational>> = vec![None; d];
    let mut upper: Vec<Option<Rational>> = vec![None; d];
    for c in poly.constraints() {
        let (coefficients, rhs) = match c.relation {
            Relation::Eq => {
                equalities.push(Hyperplane { coefficients: c.coefficients.clone(), rhs: c.rhs.clone() });
                continue;
            }
            Relation::Ge => (c.coefficients.clone(), c.rhs.clone()),
            Relation::Le | Relation::Lt => (c.coefficients.iter().map(|a| -a).collect(), -&c.rhs),
        };
        if let Some((j, _)) = c.single_variable() {
            let a = &coefficients[j];
            let bound = &rhs / a;
            if a.is_positive() {
                if lower[j].as_ref().is_none_or(|l| bound > *l) {
                    lower[j] = Some(bound);
                }
            } else if upper[j].as_ref().is_none_or(|u| bound < *u) {
                upper[j] = Some(bound);
            }
            continue;
        }
        general.push(Hyperplane { coefficients, rhs });
    }
    let unit = |j: usize, sign: i64| {
        let mut e = vec![Rational::zero(); d];
        e[j] = Rational::from_integer(sign.into());
        e
    };
    let mut inequalities = Vec::new();
    for j in 0..d {
        if let Some(l) = lower[j].take() {
            inequalities.push(Hyperplane { coefficients: unit(j, 1), rhs: l });
        }
        if let Some(u) = upper[j].take() {
            inequalities.push(Hyperplane { coefficients: unit(j, -1), rhs: -u });
        }
    }
    inequalities.extend(general);
    (equalities, inequalities)
}

pub(super) fn enumerate(poly: &WeightPolytope) -> Vec<WeightVector> {
    let d = poly.dimension();
    let (equalities, inequalities) = reduced_system(poly);
    let mut found = BTreeSet::new();
    let free = d.saturating_sub(equalities.len());
    let mut chosen = Vec::with_capacity(free);
    combinations(inequalities.len(), free, 0, &mut chosen, &mut |active| {
        let rows: Vec<&Hyperplane> = equalities.iter().chain(active.iter().map(|&i| &inequalities[i])).collect();
        if let Some(point) = solve_square(&rows, d) {
            if poly.contains(&point) {
                found.insert(point);
            }
        }
    });
    found.into_iter().map(WeightVector::from_raw).collect()
}

fn combinations(n: usize, k: usize, start: usize, chosen: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if chosen.len() == k {
        visit(chosen);
        return;
    }
    let remaining = k - chosen.len();
    for i in start..=n.saturating_sub(remaining) {
        if i >= n {
            break;
        }
        chosen.push(i);
        combinations(n, k, i + 1, chosen, visit);
        chosen.pop();
    }
}

/// Unique solution of the first `d` independent rows, if the system is nonsingular.
fn solve_square(rows: &[&Hyperplane], d: usize) -> Option<Vec<Rational>> {
    if rows.len() < d {
        return None;
    }
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|h| {
            let mut r = h.coefficients.clone();
            r.push(h.rhs.clone());
            r
        })
        .collect();
    let mut rank = 0;
    for col in 0..d {
        let pivot = (rank..m.len()).find(|&i| !m[i][col].is_zero())?;
        m.swap(rank, pivot);
        let p = m[rank][col].clone();
        for v in m[rank].iter_mut() {
            *v /= &p;
        }
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
        }
        rank += 1;
    }
    // Leftover rows must be consistent (0 = 0).
    if m[rank..].iter().any(|r| !r[d].is_zero()) {
        return None;
    }
    Some(m[..d].iter().map(|r| r[d].clone()).collect())
}

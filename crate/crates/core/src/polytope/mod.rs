//! Weight polytopes on the simplex: construction, exact optimization,
//! vertex enumeration, convex witnesses and uniform sampling.

use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{dot, PerformanceTable, WeightVector};
use crate::rational::{self, Num, Rational};

pub(crate) mod lp;
mod sampling;
mod vertices;

pub use lp::Sense;
pub use sampling::{sample_uniform, sample_uniform_stream, BURN_IN};
pub use vertices::DEFAULT_ENUMERATION_LIMIT;

use lp::{LinearProgram, LpError, RowKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "<")]
    Lt,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
            Relation::Lt => "<",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConstraintTag {
    Simplex,
    Bound,
    Elicitation { comparison: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearConstraint {
    #[serde(with = "rational::text_vec")]
    pub coefficients: Vec<Rational>,
    pub relation: Relation,
    #[serde(with = "rational::text")]
    pub rhs: Rational,
    pub tag: ConstraintTag,
}

impl LinearConstraint {
    pub fn new(coefficients: Vec<Rational>, relation: Relation, rhs: Rational, tag: ConstraintTag) -> Self {
        LinearConstraint { coefficients, relation, rhs, tag }
    }

    pub fn is_satisfied(&self, w: &[Rational]) -> bool {
        let lhs = dot(&self.coefficients, w);
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Eq => lhs == self.rhs,
            Relation::Ge => lhs >= self.rhs,
            Relation::Lt => lhs < self.rhs,
        }
    }

    pub fn is_tight(&self, w: &[Rational]) -> bool {
        dot(&self.coefficients, w) == self.rhs
    }

    /// Index and coefficient when only one coefficient is nonzero.
    fn single_variable(&self) -> Option<(usize, &Rational)> {
        let mut nonzero = self.coefficients.iter().enumerate().filter(|(_, a)| !a.is_zero());
        let first = nonzero.next()?;
        nonzero.next().is_none().then_some(first)
    }
}

/// A closed polytope `{w : w >= 0, Σw = 1, extra constraints}`.
#[derive(Debug, Clone)]
pub struct WeightPolytope {
    dimension: usize,
    constraints: Vec<LinearConstraint>,
    nonempty: bool,
    vertex_cache: OnceLock<Vec<WeightVector>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Optimum {
    pub value: Rational,
    pub argument: WeightVector,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvexWitness {
    pub vertices: Vec<WeightVector>,
    pub coefficients: Vec<Rational>,
}

impl ConvexWitness {
    /// `Σ α_v v`.
    pub fn reconstruct(&self) -> Vec<Rational> {
        let d = self.vertices.first().map_or(0, WeightVector::len);
        let mut point = vec![Rational::zero(); d];
        for (v, a) in self.vertices.iter().zip(&self.coefficients) {
            for (p, x) in point.iter_mut().zip(v.as_slice()) {
                *p += a * x;
            }
        }
        point
    }
}

impl WeightPolytope {
    /// The simplex intersected with `extra`; emptiness is detected, not rejected.
    pub fn new(dimension: usize, extra: Vec<LinearConstraint>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::EmptyInput("criteria"));
        }
        let mut constraints = Vec::with_capacity(dimension + 1 + extra.len());
        for j in 0..dimension {
            let mut e = vec![Rational::zero(); dimension];
            e[j] = Rational::one();
            constraints.push(LinearConstraint::new(e, Relation::Ge, Rational::zero(), ConstraintTag::Simplex));
        }
        constraints.push(LinearConstraint::new(
            vec![Rational::one(); dimension],
            Relation::Eq,
            Rational::one(),
            ConstraintTag::Simplex,
        ));
        for c in extra {
            if c.coefficients.len() != dimension {
                return Err(Error::DimensionMismatch { expected: dimension, found: c.coefficients.len() });
            }
            if c.relation == Relation::Lt {
                return Err(Error::InvalidParameter("strict inequalities cannot define a closed polytope".into()));
            }
            constraints.push(c);
        }
        let mut poly = WeightPolytope { dimension, constraints, nonempty: false, vertex_cache: OnceLock::new() };
        poly.nonempty = poly.linear_program().feasible_point().is_ok();
        Ok(poly)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn constraints(&self) -> &[LinearConstraint] {
        &self.constraints
    }

    pub fn is_empty(&self) -> bool {
        !self.nonempty
    }

    pub fn contains(&self, w: &[Rational]) -> bool {
        w.len() == self.dimension && self.constraints.iter().all(|c| c.is_satisfied(w))
    }

    pub fn cached_vertices(&self) -> Option<&[WeightVector]> {
        self.vertex_cache.get().map(Vec::as_slice)
    }

    fn ensure_nonempty(&self) -> Result<()> {
        if self.nonempty {
            Ok(())
        } else {
            Err(Error::EmptyPolytope)
        }
    }

    pub(crate) fn linear_program(&self) -> LinearProgram {
        let mut lp = LinearProgram::new(self.dimension);
        for c in &self.constraints {
            if let Some((j, a)) = c.single_variable() {
                let bound = &c.rhs / a;
                let flips = a.is_negative();
                match (c.relation, flips) {
                    (Relation::Le, false) | (Relation::Ge, true) => lp.tighten_upper(j, bound),
                    (Relation::Ge, false) | (Relation::Le, true) => lp.tighten_lower(j, bound),
                    (Relation::Eq, _) => {
                        lp.tighten_lower(j, bound.clone());
                        lp.tighten_upper(j, bound);
                    }
                    (Relation::Lt, _) => unreachable!("rejected at construction"),
                }
                continue;
            }
            let kind = match c.relation {
                Relation::Le => RowKind::Le,
                Relation::Eq => RowKind::Eq,
                Relation::Ge => RowKind::Ge,
                Relation::Lt => unreachable!("rejected at construction"),
            };
            lp.push_row(c.coefficients.clone(), kind, c.rhs.clone());
        }
        lp
    }

    /// Exact optimum of `objective · w` over the polytope.
    pub fn optimize(&self, objective: &[Rational], sense: Sense) -> Result<Optimum> {
        if objective.len() != self.dimension {
            return Err(Error::DimensionMismatch { expected: self.dimension, found: objective.len() });
        }
        self.ensure_nonempty()?;
        match self.linear_program().solve(objective, sense) {
            Ok(s) => Ok(Optimum { value: s.value, argument: WeightVector::from_raw(s.x) }),
            Err(LpError::Infeasible) => Err(Error::EmptyPolytope),
            Err(LpError::Unbounded) => Err(Error::Unbounded),
        }
    }

    /// Vertices with the default limit on the number of criteria.
    pub fn enumerate_vertices(&self) -> Result<&[WeightVector]> {
        self.enumerate_vertices_with_limit(DEFAULT_ENUMERATION_LIMIT)
    }

    pub fn enumerate_vertices_with_limit(&self, limit: usize) -> Result<&[WeightVector]> {
        self.ensure_nonempty()?;
        if let Some(v) = self.vertex_cache.get() {
            return Ok(v);
        }
        if self.dimension > limit {
            return Err(Error::EnumerationLimit { dimension: self.dimension, limit });
        }
        let found = vertices::enumerate(self);
        Ok(self.vertex_cache.get_or_init(|| found))
    }

    /// Convex combination of the vertices reproducing `point`, maximizing the smallest coefficient.
    pub fn convex_witness(&self, point: &WeightVector) -> Result<ConvexWitness> {
        if point.len() != self.dimension {
            return Err(Error::DimensionMismatch { expected: self.dimension, found: point.len() });
        }
        if !self.contains(point.as_slice()) {
            return Err(Error::InfeasiblePoint);
        }
        let verts = self.enumerate_vertices()?.to_vec();
        let nv = verts.len();
        // variables: α_0..α_{nv-1}, τ
        let mut lp = LinearProgram::new(nv + 1);
        for i in 0..nv {
            lp.tighten_lower(i, Rational::zero());
        }
        lp.tighten_lower(nv, Rational::zero());
        lp.tighten_upper(nv, Rational::one());
        for j in 0..self.dimension {
            let mut row: Vec<Rational> = verts.iter().map(|v| v.as_slice()[j].clone()).collect();
            row.push(Rational::zero());
            lp.push_row(row, RowKind::Eq, point.as_slice()[j].clone());
        }
        let mut total = vec![Rational::one(); nv];
        total.push(Rational::zero());
        lp.push_row(total, RowKind::Eq, Rational::one());
        for i in 0..nv {
            let mut row = vec![Rational::zero(); nv + 1];
            row[i] = Rational::one();
            row[nv] = -Rational::one();
            lp.push_row(row, RowKind::Ge, Rational::zero());
        }
        let mut objective = vec![Rational::zero(); nv + 1];
        objective[nv] = Rational::one();
        let solution = lp.solve(&objective, Sense::Max).map_err(|_| Error::InfeasiblePoint)?;
        let mut coefficients = solution.x;
        coefficients.truncate(nv);
        Ok(ConvexWitness { vertices: verts, coefficients })
    }

    /// Serializable view: constraint list plus vertices when cached.
    pub fn document(&self) -> PolytopeDocument {
        PolytopeDocument {
            dimension: self.dimension,
            nonempty: self.nonempty,
            constraints: self.constraints.clone(),
            vertices: self
                .cached_vertices()
                .map(|vs| vs.iter().map(|v| v.as_slice().iter().map(Num::from).collect()).collect()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolytopeDocument {
    pub dimension: usize,
    pub nonempty: bool,
    pub constraints: Vec<LinearConstraint>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertices: Option<Vec<Vec<Num>>>,
}

/// Simplex ∩ box `[w_j(1-r), w_j(1+r)]`.
pub fn build_perturbation(central: &WeightVector, r: &Rational) -> Result<WeightPolytope> {
    if r.is_negative() || *r >= Rational::one() {
        return Err(Error::InvalidParameter(format!("perturbation range r = {} outside [0, 1)", rational::to_text(r))));
    }
    let d = central.len();
    let mut extra = Vec::with_capacity(2 * d);
    for (j, w) in central.as_slice().iter().enumerate() {
        let mut e = vec![Rational::zero(); d];
        e[j] = Rational::one();
        extra.push(LinearConstraint::new(e.clone(), Relation::Ge, w * (Rational::one() - r), ConstraintTag::Bound));
        extra.push(LinearConstraint::new(e, Relation::Le, w * (Rational::one() + r), ConstraintTag::Bound));
    }
    WeightPolytope::new(d, extra)
}

/// Simplex ∩ `{w : U(S,w) >= U(S',w)}` for every elicited `S ≿ S'`.
pub fn build_ordinal_regression(
    table: &PerformanceTable,
    comparisons: &[crate::model::Comparison],
) -> Result<WeightPolytope> {
    let mut extra = Vec::with_capacity(comparisons.len());
    for c in comparisons {
        let a = table.index_of(&c.better)?;
        let b = table.index_of(&c.worse)?;
        extra.push(LinearConstraint::new(
            table.difference(a, b),
            Relation::Ge,
            Rational::zero(),
            ConstraintTag::Elicitation { comparison: c.to_string() },
        ));
    }
    WeightPolytope::new(table.n_criteria(), extra)
}

/// A minimal subset of comparisons that is already infeasible on the simplex.
pub fn conflicting_comparisons(
    table: &PerformanceTable,
    comparisons: &[crate::model::Comparison],
) -> Result<Vec<crate::model::Comparison>> {
    if !build_ordinal_regression(table, comparisons)?.is_empty() {
        return Ok(Vec::new());
    }
    let mut kept: Vec<crate::model::Comparison> = comparisons.to_vec();
    let mut i = 0;
    while i < kept.len() {
        let mut trial = kept.clone();
        trial.remove(i);
        if build_ordinal_regression(table, &trial)?.is_empty() {
            kept = trial;
        } else {
            i += 1;
        }
    }
    Ok(kept)
}

#[cfg(test)]
mod tests;

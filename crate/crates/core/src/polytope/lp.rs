//! Bounded-variable primal simplex over exact rationals.
//!
//! Every variable carries optional lower/upper bounds; general rows are
//! turned into equalities with a bounded slack. Phase one drives artificial
//! variables to zero, phase two optimizes the objective. Entering and
//! leaving variables follow Bland's smallest-index rule.

use num_traits::{Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum RowKind {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone)]
pub(crate) struct Row {
    pub coefficients: Vec<Rational>,
    pub kind: RowKind,
    pub rhs: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum LpError {
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone)]
pub(crate) struct LinearProgram {
    pub lower: Vec<Option<Rational>>,
    pub upper: Vec<Option<Rational>>,
    pub rows: Vec<Row>,
}

#[derive(Debug, Clone)]
pub(crate) struct LpSolution {
    pub value: Rational,
    pub x: Vec<Rational>,
}

impl LinearProgram {
    pub fn new(n: usize) -> Self {
        LinearProgram { lower: vec![None; n], upper: vec![None; n], rows: Vec::new() }
    }

    pub fn n_vars(&self) -> usize {
        self.lower.len()
    }

    pub fn tighten_lower(&mut self, j: usize, value: Rational) {
        match &self.lower[j] {
            Some(l) if *l >= value => {}
            _ => self.lower[j] = Some(value),
        }
    }

    pub fn tighten_upper(&mut self, j: usize, value: Rational) {
        match &self.upper[j] {
            Some(u) if *u <= value => {}
            _ => self.upper[j] = Some(value),
        }
    }

    pub fn push_row(&mut self, coefficients: Vec<Rational>, kind: RowKind, rhs: Rational) {
        debug_assert_eq!(coefficients.len(), self.n_vars());
        self.rows.push(Row { coefficients, kind, rhs });
    }

    pub fn solve(&self, objective: &[Rational], sense: Sense) -> Result<LpSolution, LpError> {
        let mut tableau = Tableau::build(self)?;
        tableau.phase_one()?;
        let n = self.n_vars();
        let mut cost = vec![Rational::zero(); tableau.n_total];
        for (j, c) in objective.iter().enumerate() {
            cost[j] = match sense {
                Sense::Min => c.clone(),
                Sense::Max => -c,
            };
        }
        tableau.run(&cost)?;
        let x: Vec<Rational> = tableau.x[..n].to_vec();
        let value = objective.iter().zip(&x).fold(Rational::zero(), |acc, (c, v)| acc + c * v);
        Ok(LpSolution { value, x })
    }

    pub fn feasible_point(&self) -> Result<Vec<Rational>, LpError> {
        let mut tableau = Tableau::build(self)?;
        tableau.phase_one()?;
        Ok(tableau.x[..self.n_vars()].to_vec())
    }
}

struct Tableau {
    n_total: usize,
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    basic_row: Vec<Option<usize>>,
    x: Vec<Rational>,
    lower: Vec<Option<Rational>>,
    upper: Vec<Option<Rational>>,
    first_artificial: usize,
}

const MAX_ITERATIONS: usize = 100_000;

impl Tableau {
    fn build(lp: &LinearProgram) -> Result<Self, LpError> {
        let n = lp.n_vars();
        let m = lp.rows.len();
        let n_total = n + 2 * m;
        let first_artificial = n + m;

        let mut lower = lp.lower.clone();
        let mut upper = lp.upper.clone();
        for j in 0..n {
            if let (Some(l), Some(u)) = (&lower[j], &upper[j]) {
                if l > u {
                    return Err(LpError::Infeasible);
                }
            }
        }
        for row in &lp.rows {
            let (lo, hi) = match row.kind {
                RowKind::Le => (Some(Rational::zero()), None),
                RowKind::Ge => (None, Some(Rational::zero())),
                RowKind::Eq => (Some(Rational::zero()), Some(Rational::zero())),
            };
            lower.push(lo);
            upper.push(hi);
        }
        lower.extend(std::iter::repeat_n(Some(Rational::zero()), m));
        upper.extend(std::iter::repeat_n(None, m));

        let mut x = vec![Rational::zero(); n_total];
        for j in 0..n {
            x[j] = match (&lower[j], &upper[j]) {
                (Some(l), _) => l.clone(),
                (None, Some(u)) => u.clone(),
                (None, None) => Rational::zero(),
            };
        }

        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut basic_row = vec![None; n_total];
        for (i, row) in lp.rows.iter().enumerate() {
            let activity = row.coefficients.iter().zip(&x[..n]).fold(Rational::zero(), |acc, (a, v)| acc + a * v);
            let residual = &row.rhs - activity;
            let negate = residual.is_negative();
            let mut t = vec![Rational::zero(); n_total];
            for (j, a) in row.coefficients.iter().enumerate() {
                t[j] = if negate { -a } else { a.clone() };
            }
            t[n + i] = if negate { -Rational::from_integer(1.into()) } else { Rational::from_integer(1.into()) };
            t[first_artificial + i] = Rational::from_integer(1.into());
            x[first_artificial + i] = residual.abs();
            rows.push(t);
            basis.push(first_artificial + i);
            basic_row[first_artificial + i] = Some(i);
        }

        Ok(Tableau { n_total, rows, basis, basic_row, x, lower, upper, first_artificial })
    }

    fn phase_one(&mut self) -> Result<(), LpError> {
        let mut cost = vec![Rational::zero(); self.n_total];
        for c in cost.iter_mut().skip(self.first_artificial) {
            *c = Rational::from_integer(1.into());
        }
        self.run(&cost).map_err(|_| LpError::Infeasible)?;
        if self.x[self.first_artificial..].iter().any(|v| !v.is_zero()) {
            return Err(LpError::Infeasible);
        }
        for j in self.first_artificial..self.n_total {
            self.upper[j] = Some(Rational::zero());
        }
        Ok(())
    }

    fn can_increase(&self, j: usize) -> bool {
        match &self.upper[j] {
            Some(u) => self.x[j] < *u,
            None => true,
        }
    }

    fn can_decrease(&self, j: usize) -> bool {
        match &self.lower[j] {
            Some(l) => self.x[j] > *l,
            None => true,
        }
    }

    /// Minimizes `cost · x` from the current basic feasible solution.
    fn run(&mut self, cost: &[Rational]) -> Result<(), LpError> {
        for _ in 0..MAX_ITERATIONS {
            let Some((entering, increase)) = self.choose_entering(cost) else {
                return Ok(());
            };
            self.step(entering, increase)?;
        }
        // Bland's rule terminates; reaching this means a bug, not a hard instance.
        panic!("simplex exceeded {MAX_ITERATIONS} iterations");
    }

    fn choose_entering(&self, cost: &[Rational]) -> Option<(usize, bool)> {
        for j in 0..self.n_total {
            if self.basic_row[j].is_some() {
                continue;
            }
            let mut reduced = cost[j].clone();
            for (i, row) in self.rows.iter().enumerate() {
                if !row[j].is_zero() {
                    reduced -= &cost[self.basis[i]] * &row[j];
                }
            }
            if reduced.is_negative() && self.can_increase(j) {
                return Some((j, true));
            }
            if reduced.is_positive() && self.can_decrease(j) {
                return Some((j, false));
            }
        }
        None
    }

    fn step(&mut self, entering: usize, increase: bool) -> Result<(), LpError> {
        // (step length, variable index that blocks, row if basic)
        let mut best: Option<(Rational, usize, Option<usize>)> = None;
        let mut consider = |limit: Rational, var: usize, row: Option<usize>| {
            let better = match &best {
                None => true,
                Some((l, v, _)) => limit < *l || (limit == *l && var < *v),
            };
            if better {
                best = Some((limit, var, row));
            }
        };

        if let (Some(l), Some(u)) = (&self.lower[entering], &self.upper[entering]) {
            consider(u - l, entering, None);
        }
        for (i, row) in self.rows.iter().enumerate() {
            let a = &row[entering];
            if a.is_zero() {
                continue;
            }
            // d x_B / d step
            let rate = if increase { -a } else { a.clone() };
            let b = self.basis[i];
            if rate.is_negative() {
                if let Some(l) = &self.lower[b] {
                    consider((&self.x[b] - l) / -&rate, b, Some(i));
                }
            } else if let Some(u) = &self.upper[b] {
                consider((u - &self.x[b]) / &rate, b, Some(i));
            }
        }

        let Some((theta, _, leaving_row)) = best else {
            return Err(LpError::Unbounded);
        };

        if !theta.is_zero() {
            if increase {
                self.x[entering] += &theta;
            } else {
                self.x[entering] -= &theta;
            }
            for i in 0..self.rows.len() {
                let a = &self.rows[i][entering];
                if a.is_zero() {
                    continue;
                }
                let delta = a * &theta;
                let b = self.basis[i];
                if increase {
                    self.x[b] -= delta;
                } else {
                    self.x[b] += delta;
                }
            }
        }

        if let Some(r) = leaving_row {
            let leaving = self.basis[r];
            self.snap_to_bound(leaving);
            self.pivot(r, entering);
            self.basic_row[leaving] = None;
            self.basic_row[entering] = Some(r);
            self.basis[r] = entering;
        }
        Ok(())
    }

    fn snap_to_bound(&mut self, var: usize) {
        if let Some(l) = &self.lower[var] {
            if self.x[var] <= *l {
                self.x[var] = l.clone();
                return;
            }
        }
        if let Some(u) = &self.upper[var] {
            if self.x[var] >= *u {
                self.x[var] = u.clone();
            }
        }
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col].clone();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v /= &p;
            }
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn simplex_lp(n: usize) -> LinearProgram {
        let mut lp = LinearProgram::new(n);
        for j in 0..n {
            lp.tighten_lower(j, int(0));
        }
        lp.push_row(vec![int(1); n], RowKind::Eq, int(1));
        lp
    }

    #[test]
    fn extremes_of_simplex_are_unit_vectors() {
        let lp = simplex_lp(3);
        let c = vec![int(3), int(-1), int(2)];
        let max = lp.solve(&c, Sense::Max).unwrap();
        assert_eq!(max.value, int(3));
        assert_eq!(max.x, vec![int(1), int(0), int(0)]);
        let min = lp.solve(&c, Sense::Min).unwrap();
        assert_eq!(min.value, int(-1));
    }

    #[test]
    fn box_and_cuts() {
        // max x + y, x + 2y <= 4, 3x + y <= 6, 0 <= x, y
        let mut lp = LinearProgram::new(2);
        lp.tighten_lower(0, int(0));
        lp.tighten_lower(1, int(0));
        lp.push_row(vec![int(1), int(2)], RowKind::Le, int(4));
        lp.push_row(vec![int(3), int(1)], RowKind::Le, int(6));
        let s = lp.solve(&[int(1), int(1)], Sense::Max).unwrap();
        assert_eq!(s.value, ratio(14, 5));
        assert_eq!(s.x, vec![ratio(8, 5), ratio(6, 5)]);
    }

    #[test]
    fn detects_infeasible() {
        let mut lp = simplex_lp(2);
        lp.push_row(vec![int(1), int(1)], RowKind::Ge, int(2));
        assert_eq!(lp.feasible_point().unwrap_err(), LpError::Infeasible);
        let mut lp = LinearProgram::new(1);
        lp.tighten_lower(0, int(2));
        lp.tighten_upper(0, int(1));
        assert_eq!(lp.feasible_point().unwrap_err(), LpError::Infeasible);
    }

    #[test]
    fn detects_unbounded() {
        let mut lp = LinearProgram::new(2);
        lp.tighten_lower(0, int(0));
        lp.tighten_lower(1, int(0));
        lp.push_row(vec![int(1), int(-1)], RowKind::Le, int(1));
        assert_eq!(lp.solve(&[int(1), int(1)], Sense::Max).unwrap_err(), LpError::Unbounded);
    }

    #[test]
    fn free_variable() {
        // min t subject to t >= x - 3, t >= 3 - x, 0 <= x <= 10, t free
        let mut lp = LinearProgram::new(2);
        lp.tighten_lower(0, int(0));
        lp.tighten_upper(0, int(10));
        lp.push_row(vec![int(-1), int(1)], RowKind::Ge, int(-3));
        lp.push_row(vec![int(1), int(1)], RowKind::Ge, int(3));
        let s = lp.solve(&[int(0), int(1)], Sense::Min).unwrap();
        assert_eq!(s.value, int(0));
        assert_eq!(s.x[0], int(3));
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's classic cycling instance (as a maximization); Bland's rule terminates.
        let mut lp = LinearProgram::new(4);
        for j in 0..4 {
            lp.tighten_lower(j, int(0));
        }
        lp.push_row(vec![ratio(1, 4), int(-60), ratio(-1, 25), int(9)], RowKind::Le, int(0));
        lp.push_row(vec![ratio(1, 2), int(-90), ratio(-1, 50), int(3)], RowKind::Le, int(0));
        lp.push_row(vec![int(0), int(0), int(1), int(0)], RowKind::Le, int(1));
        let c = vec![ratio(3, 4), int(-150), ratio(1, 50), int(-6)];
        let s = lp.solve(&c, Sense::Max).unwrap();
        assert_eq!(s.value, ratio(1, 20));
    }
}

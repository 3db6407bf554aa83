//! Exact linear programming over the rationals.
//!
//! A dense two-phase tableau simplex with Bland's rule. The systems solved
//! here have at most a few dozen variables and constraints, so the dense
//! tableau and the `O(mn)` reduced-cost recomputation per pivot are fine.

use num_traits::{One, Signed, Zero};

use crate::exactla::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Le,
    Eq,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// Minimize `objective · x` subject to `constraints`; variables flagged in
/// `free` are unrestricted, all others are `≥ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub free: Vec<bool>,
    pub constraints: Vec<Constraint>,
    pub objective: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Optimal(Vec<Rational>),
    /// Feasible but unbounded below; carries a feasible point.
    Unbounded(Vec<Rational>),
}

impl LpOutcome {
    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            LpOutcome::Infeasible => None,
            LpOutcome::Optimal(p) | LpOutcome::Unbounded(p) => Some(p),
        }
    }
}

impl LinearProgram {
    /// A pure feasibility problem (zero objective).
    pub fn feasibility(num_vars: usize, free: bool) -> Self {
        Self {
            num_vars,
            free: vec![free; num_vars],
            constraints: Vec::new(),
            objective: vec![Rational::zero(); num_vars],
        }
    }

    pub fn add(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        debug_assert_eq!(coeffs.len(), self.num_vars);
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    pub fn solve(&self) -> LpOutcome {
        Tableau::build(self).run(self)
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Column of the positive (and, for free variables, negative) part of
    /// each original variable.
    var_cols: Vec<(usize, Option<usize>)>,
    num_cols: usize,
    first_artificial: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let mut var_cols = Vec::with_capacity(lp.num_vars);
        let mut col = 0;
        for &free in &lp.free {
            if free {
                var_cols.push((col, Some(col + 1)));
                col += 2;
            } else {
                var_cols.push((col, None));
                col += 1;
            }
        }
        let slack_start = col;
        let slacks = lp
            .constraints
            .iter()
            .filter(|c| c.relation != Relation::Eq)
            .count();
        let first_artificial = slack_start + slacks;
        let m = lp.constraints.len();
        let num_cols = first_artificial + m;

        let mut rows = Vec::with_capacity(m);
        let mut slack = slack_start;
        for (i, c) in lp.constraints.iter().enumerate() {
            let mut row = vec![Rational::zero(); num_cols + 1];
            for (v, coeff) in c.coeffs.iter().enumerate() {
                let (pos, neg) = var_cols[v];
                row[pos] = coeff.clone();
                if let Some(neg) = neg {
                    row[neg] = -coeff.clone();
                }
            }
            match c.relation {
                Relation::Ge => {
                    row[slack] = -Rational::one();
                    slack += 1;
                }
                Relation::Le => {
                    row[slack] = Rational::one();
                    slack += 1;
                }
                Relation::Eq => {}
            }
            row[num_cols] = c.rhs.clone();
            if row[num_cols].is_negative() {
                for v in row.iter_mut() {
                    *v = -v.clone();
                }
            }
            row[first_artificial + i] = Rational::one();
            rows.push(row);
        }
        Self {
            rows,
            basis: (first_artificial..first_artificial + m).collect(),
            var_cols,
            num_cols,
            first_artificial,
        }
    }

    fn run(mut self, lp: &LinearProgram) -> LpOutcome {
        let mut phase_one = vec![Rational::zero(); self.num_cols];
        for c in phase_one.iter_mut().skip(self.first_artificial) {
            *c = Rational::one();
        }
        self.optimize(&phase_one, self.num_cols);
        let infeasibility: Rational = self
            .basis
            .iter()
            .zip(&self.rows)
            .filter(|(&b, _)| b >= self.first_artificial)
            .map(|(_, row)| row[self.num_cols].clone())
            .sum();
        if infeasibility.is_positive() {
            return LpOutcome::Infeasible;
        }
        self.expel_artificials();

        let mut cost = vec![Rational::zero(); self.num_cols];
        for (v, c) in lp.objective.iter().enumerate() {
            let (pos, neg) = self.var_cols[v];
            cost[pos] = c.clone();
            if let Some(neg) = neg {
                cost[neg] = -c.clone();
            }
        }
        let bounded = self.optimize(&cost, self.first_artificial);
        let point = self.point();
        if bounded {
            LpOutcome::Optimal(point)
        } else {
            LpOutcome::Unbounded(point)
        }
    }

    /// Runs simplex iterations for `cost` with entering columns restricted to
    /// `0..allowed`. Returns false when the objective is unbounded.
    fn optimize(&mut self, cost: &[Rational], allowed: usize) -> bool {
        loop {
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut reduced = cost[j].clone();
                for (row, &b) in self.rows.iter().zip(&self.basis) {
                    if !row[j].is_zero() && !cost[b].is_zero() {
                        reduced -= &cost[b] * &row[j];
                    }
                }
                reduced.is_negative()
            });
            let Some(j) = entering else {
                return true;
            };
            let rhs = self.num_cols;
            let mut leaving: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[j].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[j];
                let better = match &leaving {
                    None => true,
                    Some((best_i, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*best_i])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            let Some((i, _)) = leaving else {
                return false;
            };
            self.pivot(i, j);
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// After a successful phase one, every artificial still in the basis sits
    /// at zero; pivot it out or drop its (redundant) row.
    fn expel_artificials(&mut self) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] < self.first_artificial {
                i += 1;
                continue;
            }
            match (0..self.first_artificial).find(|&j| !self.rows[i][j].is_zero()) {
                Some(j) => {
                    self.pivot(i, j);
                    i += 1;
                }
                None => {
                    self.rows.remove(i);
                    self.basis.remove(i);
                }
            }
        }
    }

    fn point(&self) -> Vec<Rational> {
        let mut values = vec![Rational::zero(); self.num_cols];
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            values[b] = row[self.num_cols].clone();
        }
        self.var_cols
            .iter()
            .map(|&(pos, neg)| match neg {
                Some(neg) => &values[pos] - &values[neg],
                None => values[pos].clone(),
            })
            .collect()
    }
}

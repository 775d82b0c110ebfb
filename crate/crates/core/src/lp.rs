//! Exact-rational linear programming: two-phase dense tableau simplex with
//! Bland's rule, plus an independent optimality certificate.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::solve;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub sense: Sense,
    pub rhs: Rational,
}

/// `minimize c·x` subject to the constraints and `x >= 0`.
#[derive(Debug, Clone)]
pub struct LpProblem {
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone)]
pub struct LpSolution {
    pub value: Rational,
    pub point: Vec<Rational>,
    /// One multiplier per constraint, in the sign convention of the dual of a
    /// minimization problem: `>=` rows nonnegative, `<=` rows nonpositive.
    pub duals: Vec<Rational>,
    /// Column indices of the final basis (structural columns first, then one
    /// slack or surplus column per inequality row).
    pub basis: Vec<usize>,
}

impl LpProblem {
    pub fn new(objective: Vec<Rational>) -> Self {
        Self {
            objective,
            constraints: Vec::new(),
        }
    }

    pub fn vars(&self) -> usize {
        self.objective.len()
    }

    pub fn push(&mut self, coeffs: Vec<Rational>, sense: Sense, rhs: Rational) {
        assert_eq!(coeffs.len(), self.vars(), "constraint width");
        self.constraints.push(Constraint { coeffs, sense, rhs });
    }

    pub fn solve(&self) -> Result<LpSolution> {
        Tableau::new(self).run(self)
    }

    fn dot(a: &[Rational], b: &[Rational]) -> Rational {
        a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
    }

    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        x.len() == self.vars()
            && x.iter().all(|v| !v.is_negative())
            && self.constraints.iter().all(|c| {
                let lhs = Self::dot(&c.coeffs, x);
                match c.sense {
                    Sense::Le => lhs <= c.rhs,
                    Sense::Ge => lhs >= c.rhs,
                    Sense::Eq => lhs == c.rhs,
                }
            })
    }

    /// Checks primal feasibility, dual feasibility and equal objective values.
    pub fn certify(&self, sol: &LpSolution) -> bool {
        if !self.is_feasible(&sol.point) || sol.duals.len() != self.constraints.len() {
            return false;
        }
        if Self::dot(&self.objective, &sol.point) != sol.value {
            return false;
        }
        let signs_ok = self.constraints.iter().zip(&sol.duals).all(|(c, y)| match c.sense {
            Sense::Ge => !y.is_negative(),
            Sense::Le => !y.is_positive(),
            Sense::Eq => true,
        });
        let reduced_ok = (0..self.vars()).all(|j| {
            let aty = self
                .constraints
                .iter()
                .zip(&sol.duals)
                .fold(Rational::zero(), |acc, (c, y)| acc + &c.coeffs[j] * y);
            aty <= self.objective[j]
        });
        let dual_value = self
            .constraints
            .iter()
            .zip(&sol.duals)
            .fold(Rational::zero(), |acc, (c, y)| acc + &c.rhs * y);
        signs_ok && reduced_ok && dual_value == sol.value
    }
}

struct Tableau {
    /// rows × (columns + 1), last entry the right-hand side
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// original constraint index of each tableau row
    origin: Vec<usize>,
    /// whether the original row was multiplied by -1
    flipped: Vec<bool>,
    structural: usize,
    /// structural + slack columns; artificials come after
    real_cols: usize,
    total_cols: usize,
}

impl Tableau {
    fn new(p: &LpProblem) -> Self {
        let m = p.constraints.len();
        let nv = p.vars();
        let mut flipped = vec![false; m];
        let mut senses = Vec::with_capacity(m);
        for (idx, c) in p.constraints.iter().enumerate() {
            let flip = c.rhs.is_negative();
            flipped[idx] = flip;
            senses.push(match (c.sense, flip) {
                (Sense::Le, true) => Sense::Ge,
                (Sense::Ge, true) => Sense::Le,
                (s, _) => s,
            });
        }
        let slack_count = senses.iter().filter(|s| **s != Sense::Eq).count();
        let art_count = senses.iter().filter(|s| **s != Sense::Le).count();
        let real_cols = nv + slack_count;
        let total_cols = real_cols + art_count;
        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let (mut slack, mut art) = (nv, real_cols);
        for (idx, c) in p.constraints.iter().enumerate() {
            let sign = if flipped[idx] { -Rational::one() } else { Rational::one() };
            let mut row = vec![Rational::zero(); total_cols + 1];
            for (j, a) in c.coeffs.iter().enumerate() {
                row[j] = a * &sign;
            }
            row[total_cols] = &c.rhs * &sign;
            match senses[idx] {
                Sense::Le => {
                    row[slack] = Rational::one();
                    basis.push(slack);
                    slack += 1;
                }
                Sense::Ge => {
                    row[slack] = -Rational::one();
                    slack += 1;
                    row[art] = Rational::one();
                    basis.push(art);
                    art += 1;
                }
                Sense::Eq => {
                    row[art] = Rational::one();
                    basis.push(art);
                    art += 1;
                }
            }
            rows.push(row);
        }
        Self {
            rows,
            basis,
            origin: (0..m).collect(),
            flipped,
            structural: nv,
            real_cols,
            total_cols,
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let lead = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x /= &lead;
        }
        let pivot_row = self.rows[r].clone();
        for (idx, row) in self.rows.iter_mut().enumerate() {
            if idx == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Minimizes `cost` over columns `< allowed`, Bland's rule throughout.
    fn optimize(&mut self, cost: &[Rational], allowed: usize) -> Result<()> {
        let rhs = self.total_cols;
        loop {
            // reduced cost d_j = c_j - c_B B^-1 A_j
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut d = cost[j].clone();
                for (row, &b) in self.rows.iter().zip(&self.basis) {
                    if !row[j].is_zero() && !cost[b].is_zero() {
                        d -= &cost[b] * &row[j];
                    }
                }
                d.is_negative()
            });
            let Some(c) = entering else {
                return Ok(());
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[c];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && self.basis[r] < self.basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return Err(Error::Unbounded);
            };
            self.pivot(r, c);
        }
    }

    fn run(mut self, p: &LpProblem) -> Result<LpSolution> {
        let rhs = self.total_cols;
        if self.total_cols > self.real_cols {
            let mut phase1 = vec![Rational::zero(); self.total_cols];
            for c in phase1.iter_mut().skip(self.real_cols) {
                *c = Rational::one();
            }
            self.optimize(&phase1, self.total_cols)?;
            let infeasibility = self
                .rows
                .iter()
                .zip(&self.basis)
                .filter(|(_, &b)| b >= self.real_cols)
                .fold(Rational::zero(), |acc, (row, _)| acc + &row[rhs]);
            if !infeasibility.is_zero() {
                return Err(Error::Infeasible);
            }
            // Drive zero-level artificials out of the basis or drop their rows.
            let mut r = 0;
            while r < self.rows.len() {
                if self.basis[r] >= self.real_cols {
                    match (0..self.real_cols).find(|&j| !self.rows[r][j].is_zero()) {
                        Some(j) => self.pivot(r, j),
                        None => {
                            self.rows.remove(r);
                            self.basis.remove(r);
                            self.origin.remove(r);
                            continue;
                        }
                    }
                }
                r += 1;
            }
        }
        let mut cost = vec![Rational::zero(); self.total_cols];
        cost[..self.structural].clone_from_slice(&p.objective);
        self.optimize(&cost, self.real_cols)?;

        let mut point = vec![Rational::zero(); self.structural];
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            if b < self.structural {
                point[b] = row[rhs].clone();
            }
        }
        let value = LpProblem::dot(&p.objective, &point);
        let duals = self.duals(p, &cost);
        Ok(LpSolution {
            value,
            point,
            duals,
            basis: self.basis.clone(),
        })
    }

    /// Solves `Bᵀ y = c_B` on the original (sign-adjusted) columns.
    fn duals(&self, p: &LpProblem, cost: &[Rational]) -> Vec<Rational> {
        let m = p.constraints.len();
        let mut y = vec![Rational::zero(); m];
        if self.rows.is_empty() {
            return y;
        }
        // column j of the sign-adjusted original system, restricted to kept rows
        let mut slack_of_row = vec![None; m];
        let mut next = self.structural;
        for (idx, c) in p.constraints.iter().enumerate() {
            if c.sense != Sense::Eq {
                slack_of_row[idx] = Some(next);
                next += 1;
            }
        }
        let column = |j: usize, orig: usize| -> Rational {
            let c = &p.constraints[orig];
            let sign = if self.flipped[orig] { -Rational::one() } else { Rational::one() };
            if j < self.structural {
                &c.coeffs[j] * sign
            } else if slack_of_row[orig] == Some(j) {
                // slack +1 for <= rows, surplus -1 for >= rows, after flipping
                let effective_le = matches!((c.sense, self.flipped[orig]), (Sense::Le, false) | (Sense::Ge, true));
                if effective_le {
                    Rational::one()
                } else {
                    -Rational::one()
                }
            } else {
                Rational::zero()
            }
        };
        let size = self.rows.len();
        let bt: Vec<Vec<Rational>> = self
            .basis
            .iter()
            .map(|&b| self.origin.iter().map(|&o| column(b, o)).collect())
            .collect();
        let cb: Vec<Rational> = self.basis.iter().map(|&b| cost[b].clone()).collect();
        debug_assert_eq!(bt.len(), size);
        if let Some(sol) = solve(&bt, &cb) {
            for (val, &o) in sol.into_iter().zip(&self.origin) {
                y[o] = if self.flipped[o] { -val } else { val };
            }
        }
        y
    }
}

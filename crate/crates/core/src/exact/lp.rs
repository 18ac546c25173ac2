//! Exact two-phase tableau simplex with Bland's anti-cycling rule.

use num_traits::{One, Signed, Zero};

use super::{Rat, RatMat};
use crate::error::{Error, Result};

/// `A x = b`, `x >= 0`, optionally maximizing `c . x`.
#[derive(Clone, Debug)]
pub struct LpProblem {
    pub a: RatMat,
    pub b: Vec<Rat>,
    pub objective: Option<Vec<Rat>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    /// A basic feasible solution; `value` is the optimum (zero when no
    /// objective was given).
    Optimal { x: Vec<Rat>, value: Rat },
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }

    pub fn witness(&self) -> Option<&[Rat]> {
        match self {
            LpOutcome::Optimal { x, .. } => Some(x),
            _ => None,
        }
    }
}

struct Tableau {
    rows: Vec<Vec<Rat>>, // each row: coefficients then rhs
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rat {
        &self.rows[i][self.ncols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
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

    /// Maximizes `cost . x` over columns `< allowed`. Returns false when
    /// unbounded.
    fn optimize(&mut self, cost: &[Rat], allowed: usize) -> bool {
        loop {
            // Bland: lowest-index column with positive reduced cost enters.
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut r = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.rows[i][j].is_zero() {
                        r -= &cost[b] * &self.rows[i][j];
                    }
                }
                r.is_positive()
            });
            let Some(c) = entering else {
                return true;
            };
            let mut best: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }
}

impl LpProblem {
    pub fn feasibility(a: RatMat, b: Vec<Rat>) -> Self {
        LpProblem {
            a,
            b,
            objective: None,
        }
    }

    pub fn maximize(a: RatMat, b: Vec<Rat>, objective: Vec<Rat>) -> Self {
        LpProblem {
            a,
            b,
            objective: Some(objective),
        }
    }

    pub fn solve(&self) -> Result<LpOutcome> {
        let (m, n) = (self.a.rows(), self.a.cols());
        if self.b.len() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: self.b.len(),
            });
        }
        if let Some(c) = &self.objective {
            if c.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: c.len(),
                });
            }
        }
        let ncols = n + m;
        let mut rows = Vec::with_capacity(m);
        for i in 0..m {
            let flip = self.b[i].is_negative();
            let mut row = Vec::with_capacity(ncols + 1);
            for j in 0..n {
                let v = self.a.get(i, j).clone();
                row.push(if flip { -v } else { v });
            }
            for k in 0..m {
                row.push(if k == i { Rat::one() } else { Rat::zero() });
            }
            row.push(if flip { -self.b[i].clone() } else { self.b[i].clone() });
            rows.push(row);
        }
        let mut t = Tableau {
            rows,
            basis: (n..n + m).collect(),
            ncols,
        };

        let phase1: Vec<Rat> = (0..ncols)
            .map(|j| if j >= n { -Rat::one() } else { Rat::zero() })
            .collect();
        t.optimize(&phase1, ncols);
        let infeas: Rat = (0..m)
            .filter(|&i| t.basis[i] >= n)
            .map(|i| t.rhs(i).clone())
            .sum();
        if infeas.is_positive() {
            return Ok(LpOutcome::Infeasible);
        }

        // Drive artificial variables out of the basis; drop redundant rows.
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= n {
                match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => t.pivot(i, j),
                    None => {
                        t.rows.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }

        let cost: Vec<Rat> = match &self.objective {
            Some(c) => c
                .iter()
                .cloned()
                .chain(std::iter::repeat(Rat::zero()).take(m))
                .collect(),
            None => vec![Rat::zero(); ncols],
        };
        if !t.optimize(&cost, n) {
            return Ok(LpOutcome::Unbounded);
        }
        let mut x = vec![Rat::zero(); n];
        for (i, &b) in t.basis.iter().enumerate() {
            x[b] = t.rhs(i).clone();
        }
        let value = x.iter().zip(&cost).map(|(a, b)| a * b).sum();
        Ok(LpOutcome::Optimal { x, value })
    }
}

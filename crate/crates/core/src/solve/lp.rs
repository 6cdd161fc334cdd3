//! Exact two-phase simplex over rationals with Bland's rule, for the small
//! witness-finding programs that arise on rank-deficient support systems.
//! Problem form: maximize c·z subject to A·z = b, z ≥ 0.

use num::{Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { solution: Vec<Rational>, value: Rational },
}

struct Tableau {
    /// m rows of length ncols + 1; the last column is the rhs.
    rows: Vec<Vec<Rational>>,
    /// Reduced objective row of length ncols + 1; last entry is the negated
    /// current objective value.
    obj: Vec<Rational>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            *v = &*v / &inv;
        }
        for r in 0..self.rows.len() {
            if r != row && !self.rows[r][col].is_zero() {
                let f = self.rows[r][col].clone();
                for c in 0..=self.ncols {
                    let sub = &f * &self.rows[row][c];
                    self.rows[r][c] = &self.rows[r][c] - sub;
                }
            }
        }
        if !self.obj[col].is_zero() {
            let f = self.obj[col].clone();
            for c in 0..=self.ncols {
                let sub = &f * &self.rows[row][c];
                self.obj[c] = &self.obj[c] - sub;
            }
        }
        self.basis[row] = col;
    }

    /// Bland's rule: entering = lowest-index column with positive reduced
    /// cost, leaving = min ratio with lowest basis index on ties. Returns
    /// false when optimal, errors with None... `Some(true)` step taken,
    /// `Some(false)` optimal, `None` unbounded.
    fn step(&mut self, eligible: usize) -> Option<bool> {
        let Some(col) = (0..eligible).find(|&c| self.obj[c].is_positive()) else {
            return Some(false);
        };
        let mut leave: Option<usize> = None;
        for r in 0..self.rows.len() {
            if self.rows[r][col].is_positive() {
                let better = match leave {
                    None => true,
                    Some(lr) => {
                        let ratio_r = &self.rows[r][self.ncols] / &self.rows[r][col];
                        let ratio_l = &self.rows[lr][self.ncols] / &self.rows[lr][col];
                        ratio_r < ratio_l || (ratio_r == ratio_l && self.basis[r] < self.basis[lr])
                    }
                };
                if better {
                    leave = Some(r);
                }
            }
        }
        match leave {
            None => None,
            Some(r) => {
                self.pivot(r, col);
                Some(true)
            }
        }
    }

    fn run(&mut self, eligible: usize) -> bool {
        loop {
            match self.step(eligible) {
                Some(true) => {}
                Some(false) => return true,
                None => return false,
            }
        }
    }
}

pub fn maximize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpOutcome {
    let m = a.len();
    let k = c.len();
    let ncols = k + m; // decision variables + artificials

    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (i, (arow, rhs)) in a.iter().zip(b).enumerate() {
        assert_eq!(arow.len(), k);
        let flip = rhs.is_negative();
        let mut row: Vec<Rational> = arow
            .iter()
            .map(|v| if flip { -v.clone() } else { v.clone() })
            .collect();
        row.extend((0..m).map(|j| {
            if j == i {
                Rational::from_integer(1.into())
            } else {
                Rational::zero()
            }
        }));
        row.push(if flip { -rhs.clone() } else { rhs.clone() });
        rows.push(row);
    }

    // Phase 1: maximize −Σ artificials, i.e. reduced objective starts as the
    // sum of the constraint rows over the decision columns.
    let mut obj = vec![Rational::zero(); ncols + 1];
    for row in &rows {
        for cidx in 0..k {
            obj[cidx] += &row[cidx];
        }
        obj[ncols] += &row[ncols];
    }
    let mut t = Tableau {
        rows,
        obj,
        basis: (k..k + m).collect(),
        ncols,
    };
    if !t.run(ncols) {
        unreachable!("phase-1 objective is bounded");
    }
    // obj[ncols] holds Σ b − Σ artificial values; feasible iff it reached 0.
    if !t.obj[t.ncols].is_zero() {
        return LpOutcome::Infeasible;
    }
    // Drive remaining artificials out of the basis; rows that cannot pivot
    // on a decision column are redundant and dropped.
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= k {
            if let Some(col) = (0..k).find(|&c| !t.rows[r][c].is_zero()) {
                t.pivot(r, col);
                r += 1;
            } else {
                t.rows.remove(r);
                t.basis.remove(r);
            }
        } else {
            r += 1;
        }
    }

    // Phase 2 with the real objective, reduced against the current basis.
    let mut obj = vec![Rational::zero(); t.ncols + 1];
    obj[..k].clone_from_slice(c);
    t.obj = obj;
    for r in 0..t.rows.len() {
        let bvar = t.basis[r];
        if !t.obj[bvar].is_zero() {
            let f = t.obj[bvar].clone();
            for cidx in 0..=t.ncols {
                let sub = &f * &t.rows[r][cidx];
                t.obj[cidx] = &t.obj[cidx] - sub;
            }
        }
    }
    if !t.run(k) {
        return LpOutcome::Unbounded;
    }

    let mut solution = vec![Rational::zero(); k];
    for (r, &bvar) in t.basis.iter().enumerate() {
        if bvar < k {
            solution[bvar] = t.rows[r][t.ncols].clone();
        }
    }
    let value = -t.obj[t.ncols].clone();
    LpOutcome::Optimal { solution, value }
}

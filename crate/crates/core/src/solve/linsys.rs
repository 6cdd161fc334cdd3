//! Exact dense Gauss–Jordan elimination over rationals.

use num::Zero;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
pub enum LinSolution {
    Inconsistent,
    Unique(Vec<Rational>),
    /// Rank-deficient system; `particular` sets every free variable to zero.
    Underdetermined { particular: Vec<Rational>, nullity: usize },
}

/// Solves A·z = b for z. `a` is row-major, all rows the same width.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> LinSolution {
    let m = a.len();
    assert_eq!(m, b.len());
    let k = if m == 0 { 0 } else { a[0].len() };
    let mut t: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row = 0usize;
    for col in 0..k {
        let Some(p) = (row..m).find(|&r| !t[r][col].is_zero()) else {
            continue;
        };
        t.swap(row, p);
        let inv = t[row][col].clone();
        for v in t[row][col..].iter_mut() {
            *v = &*v / &inv;
        }
        for r in 0..m {
            if r != row && !t[r][col].is_zero() {
                let factor = t[r][col].clone();
                for c in col..=k {
                    let sub = &factor * &t[row][c];
                    t[r][c] = &t[r][c] - sub;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == m {
            break;
        }
    }

    for r in row..m {
        if !t[r][k].is_zero() {
            return LinSolution::Inconsistent;
        }
    }

    let mut z = vec![Rational::zero(); k];
    for (r, &col) in pivot_cols.iter().enumerate() {
        z[col] = t[r][k].clone();
    }
    if pivot_cols.len() == k {
        LinSolution::Unique(z)
    } else {
        LinSolution::Underdetermined {
            particular: z,
            nullity: k - pivot_cols.len(),
        }
    }
}

//! Exact dual simplex for covering LPs with unit costs.
//!
//! Solves `min 1·x  s.t.  M x ≥ b,  x_j ≤ u_j (optional),  x ≥ 0` for a 0/1
//! matrix `M` given by its column supports. With unit costs the slack basis is
//! dual feasible from the start, so no phase one is needed. Pivot selection
//! follows Bland's rule in its dual form: the leaving row is the infeasible row
//! whose basic variable has the smallest index, the entering column is the
//! minimum ratio column with ties to the smallest index. This cannot cycle.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::Rational;

pub(crate) struct CoverLp<'a> {
    pub rows: usize,
    /// Row indices covered by each column.
    pub columns: &'a [Vec<usize>],
    pub rhs: &'a [BigInt],
    /// `(column, bound)` pairs for columns with an explicit upper bound.
    pub upper: &'a [(usize, BigInt)],
}

#[derive(Clone, Debug)]
pub(crate) struct CoverLpSolution {
    pub value: Rational,
    pub x: Vec<Rational>,
    /// Duals of the covering rows.
    pub y: Vec<Rational>,
    /// Duals of the upper-bound rows, in the order given.
    #[allow(dead_code)]
    pub bound_duals: Vec<Rational>,
    pub basis: Vec<usize>,
    pub pivots: usize,
}

/// The LP has no feasible point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Infeasible;

struct Tableau {
    // Variable layout: columns x_0..x_{k-1}, then one surplus per covering row,
    // then one slack per bound row.
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    reduced: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, q: usize) {
        let inv = self.rows[r][q].recip();
        for a in self.rows[r].iter_mut() {
            if !a.is_zero() {
                *a *= &inv;
            }
        }
        self.rhs[r] *= &inv;
        let support: Vec<usize> = (0..self.rows[r].len())
            .filter(|&j| !self.rows[r][j].is_zero())
            .collect();
        let pivot_row = core::mem::take(&mut self.rows[r]);
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][q].is_zero() {
                continue;
            }
            let factor = self.rows[i][q].clone();
            for &j in &support {
                let delta = &factor * &pivot_row[j];
                self.rows[i][j] -= delta;
            }
            self.rhs[i] -= &factor * &pivot_rhs;
        }
        if !self.reduced[q].is_zero() {
            let factor = self.reduced[q].clone();
            for &j in &support {
                let delta = &factor * &pivot_row[j];
                self.reduced[j] -= delta;
            }
        }
        self.rows[r] = pivot_row;
        self.basis[r] = q;
    }
}

/// Solves with columns renumbered by decreasing support size, so the
/// smallest-index rule tries large columns first. Results are reported in the
/// caller's column order.
pub(crate) fn solve(lp: &CoverLp<'_>) -> Result<CoverLpSolution, Infeasible> {
    let k = lp.columns.len();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&j| (core::cmp::Reverse(lp.columns[j].len()), j));
    let mut position = vec![0; k];
    for (p, &j) in order.iter().enumerate() {
        position[j] = p;
    }
    let columns: Vec<Vec<usize>> = order.iter().map(|&j| lp.columns[j].clone()).collect();
    let upper: Vec<(usize, BigInt)> = lp
        .upper
        .iter()
        .map(|(j, u)| (position[*j], u.clone()))
        .collect();
    let mut sol = solve_ordered(&CoverLp {
        rows: lp.rows,
        columns: &columns,
        rhs: lp.rhs,
        upper: &upper,
    })?;
    let mut x = vec![Rational::zero(); k];
    for (p, v) in sol.x.into_iter().enumerate() {
        x[order[p]] = v;
    }
    sol.x = x;
    for var in sol.basis.iter_mut() {
        if *var < k {
            *var = order[*var];
        }
    }
    Ok(sol)
}

fn solve_ordered(lp: &CoverLp<'_>) -> Result<CoverLpSolution, Infeasible> {
    let k = lp.columns.len();
    let m = lp.rows;
    let nb = lp.upper.len();
    let width = k + m + nb;
    let mut rows = vec![vec![Rational::zero(); width]; m + nb];
    let mut rhs = Vec::with_capacity(m + nb);
    // Covering row i:  -M_i x + s_i = -b_i
    for (j, col) in lp.columns.iter().enumerate() {
        for &i in col {
            rows[i][j] = -Rational::one();
        }
    }
    for i in 0..m {
        rows[i][k + i] = Rational::one();
        rhs.push(Rational::from_integer(-lp.rhs[i].clone()));
    }
    // Bound row t:  x_j + t_t = u_j
    for (t, (j, u)) in lp.upper.iter().enumerate() {
        rows[m + t][*j] = Rational::one();
        rows[m + t][k + m + t] = Rational::one();
        rhs.push(Rational::from_integer(u.clone()));
    }
    let mut reduced = vec![Rational::zero(); width];
    for d in reduced.iter_mut().take(k) {
        *d = Rational::one();
    }
    let mut tab = Tableau {
        rows,
        rhs,
        reduced,
        basis: (k..width).collect(),
    };

    let mut pivots = 0;
    loop {
        let leaving = (0..tab.rows.len())
            .filter(|&r| tab.rhs[r].is_negative())
            .min_by_key(|&r| tab.basis[r]);
        let Some(r) = leaving else { break };
        let mut entering: Option<(usize, Rational)> = None;
        for q in 0..width {
            let a = &tab.rows[r][q];
            if !a.is_negative() {
                continue;
            }
            let ratio = &tab.reduced[q] / -a;
            if entering.as_ref().is_none_or(|(_, best)| ratio < *best) {
                entering = Some((q, ratio));
            }
        }
        let Some((q, _)) = entering else {
            return Err(Infeasible);
        };
        tab.pivot(r, q);
        pivots += 1;
    }

    let mut x = vec![Rational::zero(); k];
    for (r, &var) in tab.basis.iter().enumerate() {
        if var < k {
            x[var] = tab.rhs[r].clone();
        }
    }
    let value = x.iter().fold(Rational::zero(), |acc, v| acc + v);
    let y = tab.reduced[k..k + m].to_vec();
    let bound_duals = tab.reduced[k + m..].to_vec();
    Ok(CoverLpSolution {
        value,
        x,
        y,
        bound_duals,
        basis: tab.basis,
        pivots,
    })
}

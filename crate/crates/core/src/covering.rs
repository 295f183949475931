//! The covering system `M x ≥ s·1` over the hyperedges of `H_G`.
//!
//! Rows are the edges of `Ḡ` in canonical order, columns are hyperedges, and
//! `m_ij = 1` iff edge `i` lies in hyperedge `j`. The integer program is solved
//! by depth-first branch and bound over exact LP bounds.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::completions::Hypergraph;
use crate::graph::{EdgeIndex, EdgeSet};
use crate::lp::{self, CoverLp};
use crate::{Error, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringSystem {
    index: EdgeIndex,
    columns: Vec<EdgeSet>,
    supports: Vec<Vec<usize>>,
}

/// Optimal LP solution with its dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rational,
    /// One entry per column.
    pub x: Vec<Rational>,
    /// One entry per row.
    pub y: Vec<Rational>,
    /// Final basis as tableau variable indices (columns, then row surpluses).
    pub basis: Vec<usize>,
    pub pivots: usize,
}

/// Optimal integer cover, possibly with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IlpSolution {
    pub value: u64,
    /// Multiplicity of each column, at most `s`.
    pub x: Vec<u32>,
    pub s: u32,
    /// Branch-and-bound nodes whose LP was solved.
    pub nodes: usize,
    pub root_bound: Rational,
}

impl CoveringSystem {
    pub fn from_hypergraph(h: &Hypergraph) -> CoveringSystem {
        CoveringSystem::new(h.index().clone(), h.hyperedges().to_vec())
    }

    /// Columns are kept in the given order.
    pub fn new(index: EdgeIndex, columns: Vec<EdgeSet>) -> CoveringSystem {
        let supports = columns
            .iter()
            .map(|c| c.iter().map(|id| id.index()).collect())
            .collect();
        CoveringSystem {
            index,
            columns,
            supports,
        }
    }

    pub fn row_count(&self) -> usize {
        self.index.len()
    }

    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    /// Row `i` is the edge `rows()[i]` of `Ḡ`.
    pub fn rows(&self) -> Vec<(usize, usize)> {
        self.index.ids().map(|id| self.index.pair(id)).collect()
    }

    pub fn index(&self) -> &EdgeIndex {
        &self.index
    }

    pub fn columns(&self) -> &[EdgeSet] {
        &self.columns
    }

    /// Dense 0/1 incidence matrix, row-major.
    pub fn matrix(&self) -> Vec<Vec<u8>> {
        self.index
            .ids()
            .map(|id| self.columns.iter().map(|c| c.contains(id) as u8).collect())
            .collect()
    }

    /// Largest column support, `e` in the uniform dual bound.
    pub fn max_column_size(&self) -> usize {
        self.columns.iter().map(|c| c.len()).max().unwrap_or(0)
    }

    fn check_rows(&self) -> Result<()> {
        let covered = self.columns.iter().fold(EdgeSet::EMPTY, |a, &c| a.union(c));
        match self.index.ids().find(|&id| !covered.contains(id)) {
            Some(id) => Err(Error::InfeasibleRow { row: id.index() }),
            None => Ok(()),
        }
    }

    /// Exact optimum of `min 1·x  s.t.  M x ≥ s·1, x ≥ 0` together with an
    /// optimal dual `y` (`ᵗM y ≤ 1, y ≥ 0, s·1·y = 1·x`).
    pub fn solve_lp(&self, s: u32) -> Result<LpSolution> {
        check_multiplicity(s)?;
        self.check_rows()?;
        let rhs = vec![BigInt::from(s); self.row_count()];
        let sol = lp::solve(&CoverLp {
            rows: self.row_count(),
            columns: &self.supports,
            rhs: &rhs,
            upper: &[],
        })
        .map_err(|_| Error::InvariantViolated("covering LP with covered rows is feasible"))?;
        Ok(LpSolution {
            value: sol.value,
            x: sol.x,
            y: sol.y,
            basis: sol.basis,
            pivots: sol.pivots,
        })
    }

    /// Exact optimum of the `s`-fold covering integer program.
    pub fn solve_ilp(&self, s: u32) -> Result<IlpSolution> {
        check_multiplicity(s)?;
        self.check_rows()?;
        let k = self.column_count();
        let greedy = self.greedy_cover(s);
        let mut best_x = greedy;
        let mut best: u64 = best_x.iter().map(|&v| v as u64).sum();
        let mut nodes = 0;
        let mut root_bound = None;

        let mut stack = vec![Node {
            lower: vec![0; k],
            upper: vec![s; k],
        }];
        while let Some(node) = stack.pop() {
            nodes += 1;
            let Some((value, x)) = self.node_lp(&node, s) else {
                continue;
            };
            if root_bound.is_none() {
                root_bound = Some(value.clone());
            }
            let bound = ceil_u64(&value);
            if bound >= best {
                continue;
            }
            match most_fractional(&x) {
                None => {
                    best = value.to_integer().to_u64().expect("integral value");
                    best_x = x
                        .iter()
                        .map(|v| v.to_integer().to_u32().expect("bounded by s"))
                        .collect();
                }
                Some(j) => {
                    let floor = x[j].floor().to_integer().to_u32().expect("bounded by s");
                    let mut down = node.clone();
                    down.upper[j] = floor;
                    let mut up = node;
                    up.lower[j] = floor + 1;
                    // Depth first, rounding up explored first.
                    stack.push(down);
                    stack.push(up);
                }
            }
        }
        Ok(IlpSolution {
            value: best,
            x: best_x,
            s,
            nodes,
            root_bound: root_bound.unwrap_or_else(Rational::zero),
        })
    }

    /// LP relaxation at a branch node; returns the objective including fixed
    /// lower bounds and the full column vector.
    fn node_lp(&self, node: &Node, s: u32) -> Option<(Rational, Vec<Rational>)> {
        let fixed: u64 = node.lower.iter().map(|&v| v as u64).sum();
        let mut rhs = vec![BigInt::from(s); self.row_count()];
        for (j, &l) in node.lower.iter().enumerate() {
            if l > 0 {
                for &i in &self.supports[j] {
                    rhs[i] -= l;
                }
            }
        }
        let upper: Vec<(usize, BigInt)> = (0..self.column_count())
            .filter(|&j| node.upper[j] < s)
            .map(|j| {
                (
                    j,
                    BigInt::from(node.upper[j] - node.lower[j].min(node.upper[j])),
                )
            })
            .collect();
        if (0..self.column_count()).any(|j| node.lower[j] > node.upper[j]) {
            return None;
        }
        let sol = lp::solve(&CoverLp {
            rows: self.row_count(),
            columns: &self.supports,
            rhs: &rhs,
            upper: &upper,
        })
        .ok()?;
        let x: Vec<Rational> = sol
            .x
            .into_iter()
            .zip(&node.lower)
            .map(|(v, &l)| v + Rational::from_integer(l.into()))
            .collect();
        Some((sol.value + Rational::from_integer(fixed.into()), x))
    }

    /// Repeatedly takes the column covering the most rows with unmet demand,
    /// ties to the lowest index.
    pub fn greedy_cover(&self, s: u32) -> Vec<u32> {
        let mut demand = vec![s; self.row_count()];
        let mut x = vec![0; self.column_count()];
        loop {
            let gain = |j: usize| self.supports[j].iter().filter(|&&i| demand[i] > 0).count();
            let best = (0..self.column_count())
                .map(|j| (gain(j), j))
                .filter(|&(g, _)| g > 0)
                .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
            let Some((_, j)) = best else { break };
            x[j] += 1;
            for &i in &self.supports[j] {
                demand[i] = demand[i].saturating_sub(1);
            }
        }
        x
    }

    /// The uniform dual point `y* = (1/e, …, 1/e)` and its objective `|rows|/e`.
    pub fn dual_uniform_point(&self) -> Result<(Vec<Rational>, Rational)> {
        let e = self.max_column_size();
        if e == 0 {
            return Err(Error::NoColumns);
        }
        let entry = Rational::new(BigInt::one(), BigInt::from(e));
        let y = vec![entry.clone(); self.row_count()];
        if !self.is_dual_feasible(&y) {
            return Err(Error::InvariantViolated("uniform dual point is feasible"));
        }
        let objective = entry * BigInt::from(self.row_count());
        Ok((y, objective))
    }

    /// `ᵗM y ≤ 1` and `y ≥ 0`.
    pub fn is_dual_feasible(&self, y: &[Rational]) -> bool {
        y.len() == self.row_count()
            && y.iter().all(|v| !v.is_negative())
            && self.supports.iter().all(|col| {
                col.iter().fold(Rational::zero(), |acc, &i| acc + &y[i]) <= Rational::one()
            })
    }

    /// `M x ≥ s·1` and `x ≥ 0`.
    pub fn is_primal_feasible(&self, x: &[Rational], s: u32) -> bool {
        let need = Rational::from_integer(s.into());
        x.len() == self.column_count()
            && x.iter().all(|v| !v.is_negative())
            && self.row_coverage(x).iter().all(|c| *c >= need)
    }

    fn row_coverage(&self, x: &[Rational]) -> Vec<Rational> {
        let mut cov = vec![Rational::zero(); self.row_count()];
        for (col, v) in self.supports.iter().zip(x) {
            for &i in col {
                cov[i] += v;
            }
        }
        cov
    }

    /// Integer cover check: every row is covered at least `s` times.
    pub fn covers(&self, x: &[u32], s: u32) -> bool {
        let mut cov = vec![0u64; self.row_count()];
        for (col, &v) in self.supports.iter().zip(x) {
            for &i in col {
                cov[i] += v as u64;
            }
        }
        x.len() == self.column_count() && cov.iter().all(|&c| c >= s as u64)
    }
}

#[derive(Clone, Debug)]
struct Node {
    lower: Vec<u32>,
    upper: Vec<u32>,
}

fn check_multiplicity(s: u32) -> Result<()> {
    if s == 0 {
        return Err(Error::InvalidParameter {
            name: "s",
            value: 0,
        });
    }
    Ok(())
}

/// Column with the largest fractional part, ties to the lowest index.
fn most_fractional(x: &[Rational]) -> Option<usize> {
    let mut best: Option<(usize, Rational)> = None;
    for (j, v) in x.iter().enumerate() {
        if v.is_integer() {
            continue;
        }
        let frac = v - v.floor();
        if best.as_ref().is_none_or(|(_, f)| frac > *f) {
            best = Some((j, frac));
        }
    }
    best.map(|(j, _)| j)
}

/// Integer ceiling of a nonnegative rational, as used for node bounds.
pub fn ceil_u64(r: &Rational) -> u64 {
    let (q, rem) = r.numer().div_rem(r.denom());
    let q = if rem.is_positive() { q + 1 } else { q };
    q.to_u64().unwrap_or(u64::MAX)
}

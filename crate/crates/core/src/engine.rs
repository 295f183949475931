//! End-to-end quantities: `box`, `box_f`, `box_s`, the ratio bound
//! `|E(Ḡ)| / max |E_i|`, and the checks that tie them together.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::completions::{self, Hypergraph};
use crate::covering::{CoveringSystem, LpSolution};
use crate::graph::{self, EdgeIndex, EdgeSet, Graph};
use crate::interval;
use crate::{Error, Limits, Rational, Result};

/// Largest `s` accepted by [`Instance::fekete_table`].
pub const MAX_FEKETE_S: u32 = 6;

/// Default `s_max` for reports.
pub const DEFAULT_S_MAX: u32 = 4;

/// A graph together with its maximal covering system.
#[derive(Clone, Debug)]
pub struct Instance {
    graph: Graph,
    limits: Limits,
    hypergraph: Hypergraph,
    system: CoveringSystem,
}

/// Integer cover: `value` hyperedges (with repetition) covering every edge of
/// `Ḡ` at least `s` times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub s: u32,
    pub value: u64,
    pub hyperedges: Vec<EdgeSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalCover {
    pub value: Rational,
    pub lp: LpSolution,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeketeRow {
    pub s: u32,
    pub box_s: u64,
    /// `box_s / s`
    pub ratio: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeketeTable {
    pub rows: Vec<FeketeRow>,
    pub box_f: Rational,
    /// `box_{s+t} ≤ box_s + box_t` for every tabulated `s + t`.
    pub subadditive: bool,
    /// `box_s / s ≥ box_f` for every tabulated `s`.
    pub bounded_by_box_f: bool,
    /// Smallest tabulated `s` with `box_s / s = box_f`.
    pub attained_at: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub n: usize,
    pub edges: usize,
    pub complement_edges: usize,
    /// Edge index of `Ḡ`; every `EdgeSet` in the report is read through it.
    pub index: EdgeIndex,
    /// Maximal hyperedges, in column order.
    pub hyperedges: Vec<EdgeSet>,
    pub boxicity: u64,
    pub cover: Vec<EdgeSet>,
    pub fractional_boxicity: Rational,
    pub lp: LpSolution,
    pub s_fold: FeketeTable,
    pub e_max: usize,
    pub ratio_bound: Rational,
    /// `None` when `n` exceeds the automorphism limit.
    pub edge_transitive_complement: Option<bool>,
    /// Induced edge maps of `Aut(Ḡ)` act transitively on `V(H_G)`.
    pub hypergraph_vertex_transitive: Option<bool>,
    /// `box_f` equals the ratio bound.
    pub bound_is_tight: bool,
}

impl Instance {
    pub fn new(g: &Graph, limits: &Limits) -> Result<Instance> {
        let hypergraph = completions::maximal_hyperedges(g, limits)?;
        Ok(Instance::with_hypergraph(g, limits, hypergraph))
    }

    /// Uses a caller-supplied hyperedge family, e.g. all cointerval sets.
    pub fn with_hypergraph(g: &Graph, limits: &Limits, hypergraph: Hypergraph) -> Instance {
        let system = CoveringSystem::from_hypergraph(&hypergraph);
        Instance {
            graph: *g,
            limits: *limits,
            hypergraph,
            system,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn complement(&self) -> &Graph {
        self.hypergraph.host()
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn system(&self) -> &CoveringSystem {
        &self.system
    }

    /// Boxicity with an optimal cover of `Ḡ` by cointerval edge sets.
    pub fn boxicity(&self) -> Result<Cover> {
        self.s_fold_boxicity(1)
    }

    pub fn s_fold_boxicity(&self, s: u32) -> Result<Cover> {
        let sol = self.system.solve_ilp(s)?;
        if !self.system.covers(&sol.x, s) {
            return Err(Error::InvariantViolated("integer cover meets every demand"));
        }
        let mut hyperedges = Vec::new();
        for (&col, &mult) in self.system.columns().iter().zip(&sol.x) {
            let ok = interval::is_cointerval_edge_set(self.complement(), self.system.index(), col)?;
            if !ok {
                return Err(Error::InvariantViolated("cover uses cointerval edge sets"));
            }
            hyperedges.extend(core::iter::repeat_n(col, mult as usize));
        }
        Ok(Cover {
            s,
            value: sol.value,
            hyperedges,
        })
    }

    /// Exact LP optimum with primal and dual certificates re-checked.
    pub fn fractional_boxicity(&self) -> Result<FractionalCover> {
        let lp = self.system.solve_lp(1)?;
        let dual: Rational = lp.y.iter().sum();
        if !self.system.is_primal_feasible(&lp.x, 1)
            || !self.system.is_dual_feasible(&lp.y)
            || dual != lp.value
        {
            return Err(Error::InvariantViolated("LP certificates are optimal"));
        }
        Ok(FractionalCover {
            value: lp.value.clone(),
            lp,
        })
    }

    /// Largest hyperedge size, zero when `Ḡ` is edgeless.
    pub fn e_max(&self) -> usize {
        self.hypergraph.max_size()
    }

    /// `|E(Ḡ)| / e_max`, or zero when `Ḡ` has no edges.
    pub fn ratio_bound(&self) -> Result<Rational> {
        if self.system.row_count() == 0 {
            return Ok(Rational::zero());
        }
        Ok(self.system.dual_uniform_point()?.1)
    }

    pub fn fekete_table(&self, s_max: u32) -> Result<FeketeTable> {
        if s_max == 0 || s_max > MAX_FEKETE_S {
            return Err(Error::InvalidParameter {
                name: "s_max",
                value: s_max as usize,
            });
        }
        let box_f = self.fractional_boxicity()?.value;
        let mut rows = Vec::with_capacity(s_max as usize);
        for s in 1..=s_max {
            let box_s = self.s_fold_boxicity(s)?.value;
            rows.push(FeketeRow {
                s,
                box_s,
                ratio: Rational::new(BigInt::from(box_s), BigInt::from(s)),
            });
        }
        let at = |s: u32| rows[s as usize - 1].box_s;
        let subadditive = (1..=s_max).all(|s| (1..=s_max - s).all(|t| at(s + t) <= at(s) + at(t)));
        let bounded_by_box_f = rows.iter().all(|r| r.ratio >= box_f);
        let attained_at = rows.iter().find(|r| r.ratio == box_f).map(|r| r.s);
        Ok(FeketeTable {
            rows,
            box_f,
            subadditive,
            bounded_by_box_f,
            attained_at,
        })
    }

    /// Whether `Ḡ` is edge-transitive, and whether the induced edge maps of its
    /// automorphisms preserve the hyperedge family. `None` above the size limit.
    pub fn symmetry(&self) -> Result<Option<Symmetry>> {
        let host = self.complement();
        if host.n() > self.limits.max_automorphism_n {
            return Ok(None);
        }
        let aut = graph::automorphisms(host, self.limits.max_automorphism_n)?;
        let index = self.hypergraph.index();
        let family = self.hypergraph.hyperedges();
        let mut orbit = EdgeSet::EMPTY;
        let mut preserved = true;
        for p in &aut {
            let map = p
                .edge_map(index)
                .ok_or(Error::InvariantViolated("automorphisms map edges to edges"))?;
            if let Some(&first) = index.ids().next().as_ref() {
                orbit.insert(map[first.index()]);
            }
            let mut image: Vec<EdgeSet> = family
                .iter()
                .map(|&e| graph::map_edge_set(&map, e))
                .collect();
            image.sort_unstable();
            preserved &= image == family;
        }
        Ok(Some(Symmetry {
            edge_transitive: aut.is_edge_transitive(host),
            family_preserved: preserved,
            hypergraph_vertex_transitive: preserved && orbit == index.full(),
        }))
    }

    pub fn analyze(&self, s_max: u32) -> Result<AnalysisReport> {
        let cover = self.boxicity()?;
        let frac = self.fractional_boxicity()?;
        let table = self.fekete_table(s_max)?;
        let ratio_bound = self.ratio_bound()?;
        let symmetry = self.symmetry()?;

        let box_q = Rational::from_integer(cover.value.into());
        if box_q < frac.value || frac.value < ratio_bound {
            return Err(Error::InvariantViolated("box >= box_f >= ratio bound"));
        }
        let tight = frac.value == ratio_bound;
        if let Some(sym) = &symmetry {
            if !sym.family_preserved {
                return Err(Error::InvariantViolated(
                    "automorphisms permute maximal hyperedges",
                ));
            }
            if sym.edge_transitive && !(tight && sym.hypergraph_vertex_transitive) {
                return Err(Error::InvariantViolated(
                    "edge-transitive complement attains the bound",
                ));
            }
        }
        for row in &table.rows {
            if row.box_s > row.s as u64 * cover.value {
                return Err(Error::InvariantViolated("box_s <= s * box"));
            }
        }
        if !table.subadditive || !table.bounded_by_box_f || table.rows[0].box_s != cover.value {
            return Err(Error::InvariantViolated(
                "s-fold table is subadditive and above box_f",
            ));
        }

        Ok(AnalysisReport {
            n: self.graph.n(),
            edges: self.graph.edge_count(),
            complement_edges: self.system.row_count(),
            index: self.system.index().clone(),
            hyperedges: self.system.columns().to_vec(),
            boxicity: cover.value,
            cover: cover.hyperedges,
            fractional_boxicity: frac.value,
            lp: frac.lp,
            s_fold: table,
            e_max: self.e_max(),
            ratio_bound,
            edge_transitive_complement: symmetry.as_ref().map(|s| s.edge_transitive),
            hypergraph_vertex_transitive: symmetry.as_ref().map(|s| s.hypergraph_vertex_transitive),
            bound_is_tight: tight,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Symmetry {
    pub edge_transitive: bool,
    pub family_preserved: bool,
    pub hypergraph_vertex_transitive: bool,
}

pub fn boxicity(g: &Graph, limits: &Limits) -> Result<Cover> {
    Instance::new(g, limits)?.boxicity()
}

pub fn fractional_boxicity(g: &Graph, limits: &Limits) -> Result<FractionalCover> {
    Instance::new(g, limits)?.fractional_boxicity()
}

pub fn s_fold_boxicity(g: &Graph, s: u32, limits: &Limits) -> Result<u64> {
    Ok(Instance::new(g, limits)?.s_fold_boxicity(s)?.value)
}

/// `|E(Ḡ)| / max |E_i|`, zero for complete graphs.
pub fn ratio_bound(g: &Graph, limits: &Limits) -> Result<Rational> {
    Instance::new(g, limits)?.ratio_bound()
}

pub fn fekete_table(g: &Graph, s_max: u32, limits: &Limits) -> Result<FeketeTable> {
    Instance::new(g, limits)?.fekete_table(s_max)
}

pub fn analyze(g: &Graph, s_max: u32, limits: &Limits) -> Result<AnalysisReport> {
    Instance::new(g, limits)?.analyze(s_max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, r: i64) -> Rational {
        Rational::new(p.into(), r.into())
    }

    fn inst(g: Graph) -> Instance {
        Instance::new(&g, &Limits::DEFAULT).unwrap()
    }

    #[test]
    fn interval_graph_has_boxicity_one() {
        let i = inst(Graph::path(4).unwrap());
        assert_eq!(i.boxicity().unwrap().value, 1);
        assert_eq!(i.fractional_boxicity().unwrap().value, q(1, 1));
        for s in 1..=4 {
            assert_eq!(i.s_fold_boxicity(s).unwrap().value, s as u64);
        }
    }

    #[test]
    fn complete_multipartite_examples() {
        let k32 = inst(Graph::complete_multipartite(&[3, 2]).unwrap());
        assert_eq!(k32.boxicity().unwrap().value, 2);
        assert_eq!(k32.ratio_bound().unwrap(), q(4, 3));
        let octahedron = inst(Graph::complete_multipartite(&[2, 2, 2]).unwrap());
        assert_eq!(octahedron.boxicity().unwrap().value, 3);
    }

    #[test]
    fn complete_graph_conventions() {
        let k = inst(Graph::complete(4).unwrap());
        assert_eq!(k.boxicity().unwrap().value, 0);
        assert_eq!(k.s_fold_boxicity(5).unwrap().value, 0);
        assert_eq!(k.ratio_bound().unwrap(), q(0, 1));
        let table = k.fekete_table(4).unwrap();
        assert!(table.rows.iter().all(|r| r.box_s == 0));
    }

    #[test]
    fn cover_certificate_covers_complement() {
        let i = inst(Graph::complete_multipartite(&[2, 2, 2]).unwrap());
        let cover = i.s_fold_boxicity(2).unwrap();
        assert_eq!(cover.hyperedges.len() as u64, cover.value);
        for id in i.system().index().ids() {
            let hits = cover.hyperedges.iter().filter(|e| e.contains(id)).count();
            assert!(hits >= 2);
        }
    }

    #[test]
    fn c4_analysis() {
        let r = inst(Graph::cycle(4).unwrap())
            .analyze(DEFAULT_S_MAX)
            .unwrap();
        assert_eq!(r.boxicity, 2);
        assert_eq!(r.fractional_boxicity, q(2, 1));
        assert_eq!(r.ratio_bound, q(2, 1));
        assert_eq!(r.edge_transitive_complement, Some(true));
        assert!(r.bound_is_tight);
    }

    #[test]
    fn fekete_parameter_guard() {
        let i = inst(Graph::path(3).unwrap());
        assert!(i.fekete_table(0).is_err());
        assert!(i.fekete_table(7).is_err());
    }
}

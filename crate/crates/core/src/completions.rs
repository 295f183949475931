//! Minimal interval completions of `G` and the maximal hyperedges of `H_G`.
//!
//! A fill set `F ⊆ E(Ḡ)` turns `G` into the interval supergraph `G + F`. Its
//! complement `E(Ḡ) \ F` is a cointerval edge set of `Ḡ`, so inclusion-minimal
//! fill sets are exactly the maximal hyperedges of `H_G`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::{EdgeId, EdgeIndex, EdgeSet, Graph};
use crate::interval::{self, Obstruction};
use crate::{Error, Limits, Result};

/// Edges of `Ḡ` added to `G`, over the canonical edge index of `Ḡ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FillSet(pub EdgeSet);

impl FillSet {
    pub fn edges(self) -> EdgeSet {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }
}

fn check_size(index: &EdgeIndex, limit: usize) -> Result<()> {
    if index.len() > limit {
        return Err(Error::InstanceTooLarge {
            complement_edges: index.len(),
            limit,
        });
    }
    Ok(())
}

/// Inclusion-minimal fill sets, found by branching on obstructions.
///
/// While `G + F` is not interval, take its deterministic obstruction. Every
/// interval supergraph must add a chord to a chordless cycle, and must attach
/// some vertex of an asteroidal triple to the path that avoids it. Branching
/// on those edges reaches every minimal completion as a leaf.
pub fn enumerate_minimal_completions(g: &Graph, limit: usize) -> Result<Vec<FillSet>> {
    let gbar = g.complement();
    let index = EdgeIndex::new(&gbar);
    check_size(&index, limit)?;
    let mut search = Search {
        g,
        index: &index,
        seen: BTreeSet::new(),
        leaves: Vec::new(),
    };
    search.explore(EdgeSet::EMPTY);
    Ok(minimalize(search.leaves))
}

struct Search<'a> {
    g: &'a Graph,
    index: &'a EdgeIndex,
    seen: BTreeSet<EdgeSet>,
    leaves: Vec<EdgeSet>,
}

impl Search<'_> {
    fn explore(&mut self, fill: EdgeSet) {
        if !self.seen.insert(fill) || self.leaves.iter().any(|l| l.is_subset(fill)) {
            return;
        }
        let h = self.g.with_edges(self.index, fill);
        let branches = match interval::find_obstruction(&h) {
            None => {
                self.leaves.push(fill);
                return;
            }
            Some(obs) => self.breaking_edges(&h, &obs),
        };
        for id in branches {
            self.explore(fill.with(id));
        }
    }

    /// Non-edges of `h` one of which every interval supergraph of `h` contains.
    fn breaking_edges(&self, h: &Graph, obs: &Obstruction) -> Vec<EdgeId> {
        let mut out = EdgeSet::EMPTY;
        let mut consider = |u: usize, v: usize| {
            if u != v && !h.has_edge(u, v) {
                let id = self.index.id(u, v).expect("non-edge of G + F lies in Ḡ");
                out.insert(id);
            }
        };
        match obs {
            Obstruction::ChordlessCycle(cycle) => {
                for (i, &u) in cycle.iter().enumerate() {
                    for &v in &cycle[i + 1..] {
                        consider(u, v);
                    }
                }
            }
            Obstruction::AsteroidalTriple { triple, paths } => {
                for (&avoid, path) in triple.iter().zip(paths) {
                    for &p in path {
                        consider(avoid, p);
                    }
                }
            }
        }
        out.iter().collect()
    }
}

/// Keeps the sets not containing another member, sorted and deduplicated.
fn minimalize(mut sets: Vec<EdgeSet>) -> Vec<FillSet> {
    sets.sort_unstable_by_key(|s| (s.len(), *s));
    sets.dedup();
    let mut kept: Vec<EdgeSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept.into_iter().map(FillSet).collect()
}

/// Oracle: scans all fill sets by increasing size and keeps each interval
/// completion that contains no smaller kept one.
pub fn brute_force_completions(g: &Graph, limit: usize) -> Result<Vec<FillSet>> {
    let gbar = g.complement();
    let index = EdgeIndex::new(&gbar);
    check_size(&index, limit)?;
    let m = index.len();
    let mut kept: Vec<EdgeSet> = Vec::new();
    for size in 0..=m {
        for fill in subsets_of_size(m, size) {
            if kept.iter().any(|k| k.is_subset(fill)) {
                continue;
            }
            if interval::is_interval(&g.with_edges(&index, fill)) {
                kept.push(fill);
            }
        }
    }
    kept.sort_unstable();
    Ok(kept.into_iter().map(FillSet).collect())
}

/// All `size`-subsets of `0..m` in increasing bitset order.
fn subsets_of_size(m: usize, size: usize) -> impl Iterator<Item = EdgeSet> {
    let top = 1u128 << m;
    let mut cur = if size > m { top } else { (1u128 << size) - 1 };
    let mut done = size > m;
    core::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur;
        if cur == 0 {
            done = true;
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            cur = (((r ^ cur) >> 2) / c) | r;
            if cur >= top {
                done = true;
            }
        }
        Some(EdgeSet(out))
    })
}

/// `H_G` restricted to a family of cointerval edge sets of `Ḡ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    host: Graph,
    index: EdgeIndex,
    hyperedges: Vec<EdgeSet>,
    maximal_only: bool,
}

impl Hypergraph {
    /// The complement `Ḡ`.
    pub fn host(&self) -> &Graph {
        &self.host
    }

    /// Edge index of `Ḡ`; its ids are the vertices of the hypergraph.
    pub fn index(&self) -> &EdgeIndex {
        &self.index
    }

    pub fn hyperedges(&self) -> &[EdgeSet] {
        &self.hyperedges
    }

    pub fn maximal_only(&self) -> bool {
        self.maximal_only
    }

    /// Largest hyperedge size, `e` in the uniform dual bound. Zero when empty.
    pub fn max_size(&self) -> usize {
        self.hyperedges.iter().map(|e| e.len()).max().unwrap_or(0)
    }

    pub fn covers_all_vertices(&self) -> bool {
        self.hyperedges
            .iter()
            .fold(EdgeSet::EMPTY, |acc, &e| acc.union(e))
            == self.index.full()
    }
}

/// Maximal hyperedges `E(Ḡ) \ F` over the minimal completions `F` of `g`.
pub fn maximal_hyperedges(g: &Graph, limits: &Limits) -> Result<Hypergraph> {
    check_vertices(g, limits)?;
    let fills = enumerate_minimal_completions(g, limits.max_complement_edges)?;
    Ok(hypergraph_from_fills(g, &fills))
}

/// Builds the maximal hypergraph from an already computed list of minimal fill sets.
pub fn hypergraph_from_fills(g: &Graph, fills: &[FillSet]) -> Hypergraph {
    let host = g.complement();
    let index = EdgeIndex::new(&host);
    let full = index.full();
    let mut hyperedges: Vec<EdgeSet> = fills
        .iter()
        .map(|f| full.difference(f.0))
        .filter(|e| !e.is_empty())
        .collect();
    hyperedges.sort_unstable();
    hyperedges.dedup();
    Hypergraph {
        host,
        index,
        hyperedges,
        maximal_only: true,
    }
}

/// Every nonempty cointerval edge set of `Ḡ`, maximal or not.
pub fn all_cointerval_hyperedges(g: &Graph, limit: usize) -> Result<Hypergraph> {
    let host = g.complement();
    let index = EdgeIndex::new(&host);
    check_size(&index, limit)?;
    let full = index.full();
    let hyperedges = (1..=full.0)
        .map(EdgeSet)
        .filter(|&e| interval::is_interval(&g.with_edges(&index, full.difference(e))))
        .collect();
    Ok(Hypergraph {
        host,
        index,
        hyperedges,
        maximal_only: false,
    })
}

pub(crate) fn check_vertices(g: &Graph, limits: &Limits) -> Result<()> {
    if g.n() > limits.max_n {
        return Err(Error::TooManyVertices {
            n: g.n(),
            limit: limits.max_n,
        });
    }
    Ok(())
}

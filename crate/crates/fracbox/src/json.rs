//! Machine-readable output.
//!
//! Rationals are written as canonical `"p/q"` strings (`q > 0`, `gcd = 1`, so
//! two is `"2/1"`), solver integers as decimal strings, and edge sets as arrays
//! of `[u, v]` pairs over the vertices of the input graph.

use fracbox_core::completions::{FillSet, Hypergraph};
use fracbox_core::engine::{Cover, FeketeTable, FractionalCover};
use fracbox_core::{AnalysisReport, CoveringSystem, EdgeIndex, EdgeSet, Rational};
use serde::Serialize;

pub type Pair = [usize; 2];

/// Canonical `p/q` form, always with a denominator.
pub fn rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Human form: integers without `/1`.
pub fn rational_text(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        rational(r)
    }
}

pub fn edge_set(index: &EdgeIndex, set: EdgeSet) -> Vec<Pair> {
    index
        .pairs_of(set)
        .into_iter()
        .map(|(u, v)| [u, v])
        .collect()
}

fn edge_sets(index: &EdgeIndex, sets: &[EdgeSet]) -> Vec<Vec<Pair>> {
    sets.iter().map(|&s| edge_set(index, s)).collect()
}

fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(rational).collect()
}

#[derive(Debug, Serialize)]
pub struct BoxJson {
    #[serde(rename = "box")]
    pub value: String,
    pub cover: Vec<Vec<Pair>>,
}

impl BoxJson {
    pub fn new(index: &EdgeIndex, cover: &Cover) -> BoxJson {
        BoxJson {
            value: cover.value.to_string(),
            cover: edge_sets(index, &cover.hyperedges),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BoxFJson {
    pub box_f: String,
    pub hyperedges: Vec<Vec<Pair>>,
    pub x: Vec<String>,
    pub y: Vec<String>,
}

impl BoxFJson {
    pub fn new(system: &CoveringSystem, frac: &FractionalCover) -> BoxFJson {
        BoxFJson {
            box_f: rational(&frac.value),
            hyperedges: edge_sets(system.index(), system.columns()),
            x: rationals(&frac.lp.x),
            y: rationals(&frac.lp.y),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BoxSJson {
    pub s: u32,
    pub box_s: String,
    pub cover: Vec<Vec<Pair>>,
}

impl BoxSJson {
    pub fn new(index: &EdgeIndex, cover: &Cover) -> BoxSJson {
        BoxSJson {
            s: cover.s,
            box_s: cover.value.to_string(),
            cover: edge_sets(index, &cover.hyperedges),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BoundsJson {
    pub complement_edges: usize,
    pub e_max: usize,
    #[serde(rename = "lemma1_bound")]
    pub ratio_bound: String,
    pub box_f: String,
    #[serde(rename = "box")]
    pub boxicity: String,
}

#[derive(Debug, Serialize)]
pub struct CompletionsJson {
    pub fill_sets: Vec<Vec<Pair>>,
    pub hyperedges: Vec<Vec<Pair>>,
}

impl CompletionsJson {
    pub fn new(h: &Hypergraph, fills: &[FillSet]) -> CompletionsJson {
        CompletionsJson {
            fill_sets: fills
                .iter()
                .map(|f| edge_set(h.index(), f.edges()))
                .collect(),
            hyperedges: edge_sets(h.index(), h.hyperedges()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct HypergraphJson {
    pub rows: Vec<Pair>,
    pub columns: Vec<Vec<Pair>>,
    pub matrix: Vec<Vec<u8>>,
}

impl HypergraphJson {
    pub fn new(system: &CoveringSystem) -> HypergraphJson {
        HypergraphJson {
            rows: system.rows().into_iter().map(|(u, v)| [u, v]).collect(),
            columns: edge_sets(system.index(), system.columns()),
            matrix: system.matrix(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FoldRowJson {
    pub s: u32,
    pub box_s: String,
    pub ratio: String,
}

#[derive(Debug, Serialize)]
pub struct FeketeJson {
    pub subadditive: bool,
    pub bounded_by_box_f: bool,
    pub attained_at: Option<u32>,
}

impl FeketeJson {
    fn new(t: &FeketeTable) -> FeketeJson {
        FeketeJson {
            subadditive: t.subadditive,
            bounded_by_box_f: t.bounded_by_box_f,
            attained_at: t.attained_at,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LpJson {
    pub x: Vec<String>,
    pub y: Vec<String>,
}

/// The full analysis report. Field names are part of the output contract.
#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub complement_edges: usize,
    #[serde(rename = "box")]
    pub boxicity: String,
    pub box_f: String,
    pub box_s: Vec<FoldRowJson>,
    pub e_max: usize,
    #[serde(rename = "lemma1_bound")]
    pub ratio_bound: String,
    pub edge_transitive_complement: Option<bool>,
    pub hypergraph_vertex_transitive: Option<bool>,
    #[serde(rename = "theorem3_equality_holds")]
    pub bound_is_tight: bool,
    pub fekete: FeketeJson,
    pub hyperedges: Vec<Vec<Pair>>,
    pub cover: Vec<Vec<Pair>>,
    pub lp: LpJson,
}

impl ReportJson {
    pub fn new(graph6: String, r: &AnalysisReport) -> ReportJson {
        ReportJson {
            graph6,
            n: r.n,
            edges: r.edges,
            complement_edges: r.complement_edges,
            boxicity: r.boxicity.to_string(),
            box_f: rational(&r.fractional_boxicity),
            box_s: r
                .s_fold
                .rows
                .iter()
                .map(|row| FoldRowJson {
                    s: row.s,
                    box_s: row.box_s.to_string(),
                    ratio: rational(&row.ratio),
                })
                .collect(),
            e_max: r.e_max,
            ratio_bound: rational(&r.ratio_bound),
            edge_transitive_complement: r.edge_transitive_complement,
            hypergraph_vertex_transitive: r.hypergraph_vertex_transitive,
            bound_is_tight: r.bound_is_tight,
            fekete: FeketeJson::new(&r.s_fold),
            hyperedges: edge_sets(&r.index, &r.hyperedges),
            cover: edge_sets(&r.index, &r.cover),
            lp: LpJson {
                x: rationals(&r.lp.x),
                y: rationals(&r.lp.y),
            },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LineErrorJson {
    pub line: usize,
    pub error: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rationals() {
        let q = |p: i64, d: i64| Rational::new(p.into(), d.into());
        assert_eq!(rational(&q(4, 3)), "4/3");
        assert_eq!(rational(&q(2, 1)), "2/1");
        assert_eq!(rational(&q(6, -4)), "-3/2");
        assert_eq!(rational(&q(0, 5)), "0/1");
        assert_eq!(rational_text(&q(2, 1)), "2");
        assert_eq!(rational_text(&q(4, 3)), "4/3");
    }
}

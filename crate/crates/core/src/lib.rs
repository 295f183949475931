//! Exact boxicity, fractional boxicity and s-fold boxicity for small graphs.
//!
//! The boxicity of `G` equals the minimum number of cointerval subgraphs of the
//! complement `Ḡ` whose edge sets cover `E(Ḡ)`. This crate builds that covering
//! system explicitly:
//!
//! 1. [`completions`] enumerates the minimal interval completions of `G`; their
//!    complements inside `E(Ḡ)` are the maximal cointerval edge sets of `Ḡ`.
//! 2. [`covering`] turns those sets into a 0/1 incidence matrix and solves the
//!    covering integer program, its LP relaxation and the LP dual over exact
//!    rationals.
//! 3. [`engine`] ties the pieces together and checks the bound chain
//!    `box ≥ box_f ≥ |E(Ḡ)| / max |E_i|` on every instance.
//!
//! The crate is `no_std` and only needs `alloc`. Parsing, serialization and the
//! command line front end live in the `fracbox` crate.

#![no_std]

extern crate alloc;

pub mod completions;
pub mod covering;
pub mod engine;
mod error;
pub mod generate;
pub mod graph;
pub mod interval;
mod lp;

pub use crate::completions::{
    brute_force_completions, enumerate_minimal_completions, maximal_hyperedges, FillSet, Hypergraph,
};
pub use crate::covering::{CoveringSystem, IlpSolution, LpSolution};
pub use crate::engine::{AnalysisReport, FeketeTable, Instance};
pub use crate::error::Error;
pub use crate::graph::{
    automorphisms, AutomorphismGroup, EdgeId, EdgeIndex, EdgeSet, Graph, Permutation,
};
pub use crate::interval::{Interval, IntervalWitness, Obstruction};

/// Exact rational number used for every LP quantity.
pub type Rational = num_rational::BigRational;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Size guards for the exponential parts of the pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest accepted vertex count.
    pub max_n: usize,
    /// Largest vertex count for the automorphism search.
    pub max_automorphism_n: usize,
    /// Largest `|E(Ḡ)|` accepted by the completion enumerator.
    pub max_complement_edges: usize,
    /// Largest `|E(Ḡ)|` accepted by the subset-enumerating oracle.
    pub max_brute_force_edges: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        max_n: 12,
        max_automorphism_n: 10,
        max_complement_edges: 24,
        max_brute_force_edges: 20,
    };
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}

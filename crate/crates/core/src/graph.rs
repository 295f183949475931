//! Simple undirected graphs on at most 16 vertices, stored as adjacency bitsets.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Structural capacity of [`Graph`]. The configurable limit in
/// [`Limits`](crate::Limits) is usually lower.
pub const CAPACITY: usize = 16;

/// Labeled simple graph on vertices `0..n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: u8,
    adj: [u16; CAPACITY],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > CAPACITY {
            return Err(Error::TooManyVertices { n, limit: CAPACITY });
        }
        Ok(Graph {
            n: n as u8,
            adj: [0; CAPACITY],
        })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Ok(Graph::empty(n)?.complement())
    }

    /// Builds a graph from an edge list. Repeated edges collapse; loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        let mut g = Graph::path(n)?;
        if n >= 3 {
            g.add_edge(n - 1, 0)?;
        }
        Ok(g)
    }

    /// Complete multipartite graph with the given class sizes; classes occupy
    /// consecutive vertex ranges.
    pub fn complete_multipartite(classes: &[usize]) -> Result<Graph> {
        let n = classes.iter().sum();
        let mut g = Graph::complete(n)?;
        let mut start = 0;
        for &size in classes {
            for u in start..start + size {
                for v in u + 1..start + size {
                    g.remove_edge(u, v);
                }
            }
            start += size;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n() && v < self.n() {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Open neighborhood of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u16 {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> u16 {
        self.adj[v] | 1 << v
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Bitmask with one bit per vertex.
    pub fn vertex_mask(&self) -> u16 {
        ((1u32 << self.n) - 1) as u16
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n()]
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            (u + 1..self.n())
                .filter(move |&v| self.has_edge(u, v))
                .map(move |v| (u, v))
        })
    }

    /// Same as [`Graph::edges`], collected. Fixes the row order of covering matrices.
    pub fn edge_universe(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn complement(&self) -> Graph {
        let mask = self.vertex_mask();
        let mut adj = [0; CAPACITY];
        for (v, row) in adj.iter_mut().enumerate().take(self.n()) {
            *row = !self.adj[v] & mask & !(1 << v);
        }
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by the vertices in `keep`, relabeled in increasing order.
    pub fn induced(&self, keep: u16) -> Graph {
        let keep = keep & self.vertex_mask();
        let verts: Vec<usize> = bits(keep).collect();
        let mut g = Graph {
            n: verts.len() as u8,
            adj: [0; CAPACITY],
        };
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                }
            }
        }
        g
    }

    /// Applies a vertex relabeling: `u ~ v` in `self` becomes `p(u) ~ p(v)`.
    pub fn relabel(&self, p: &Permutation) -> Graph {
        let mut g = Graph {
            n: self.n,
            adj: [0; CAPACITY],
        };
        for (u, v) in self.edges() {
            let (a, b) = (p.image(u), p.image(v));
            g.adj[a] |= 1 << b;
            g.adj[b] |= 1 << a;
        }
        g
    }

    /// Adds every edge of `fill`, interpreted over `index`, to a copy of `self`.
    pub fn with_edges(&self, index: &EdgeIndex, fill: EdgeSet) -> Graph {
        let mut g = *self;
        for id in fill.iter() {
            let (u, v) = index.pair(id);
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        g
    }

    /// Graph on `n` vertices whose edges are the members of `set` over `index`.
    pub fn from_edge_set(n: usize, index: &EdgeIndex, set: EdgeSet) -> Result<Graph> {
        Ok(Graph::empty(n)?.with_edges(index, set))
    }

    /// Adjacency rows for `0..n`.
    pub fn adjacency(&self) -> &[u16] {
        &self.adj[..self.n()]
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, ", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

/// Iterates the set bit positions of a vertex mask in increasing order.
pub fn bits(mut mask: u16) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Index into the canonical edge list of a host graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub u8);

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Subset of a host graph's edge list. Always read through the [`EdgeIndex`] of
/// that host. Ordered by the underlying bitset value.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet(pub u128);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    /// The first `len` edge ids.
    pub fn full(len: usize) -> EdgeSet {
        if len >= 128 {
            EdgeSet(u128::MAX)
        } else {
            EdgeSet((1u128 << len) - 1)
        }
    }

    pub fn singleton(id: EdgeId) -> EdgeSet {
        EdgeSet(1 << id.0)
    }

    pub fn contains(self, id: EdgeId) -> bool {
        self.0 >> id.0 & 1 == 1
    }

    pub fn insert(&mut self, id: EdgeId) {
        self.0 |= 1 << id.0;
    }

    pub fn with(self, id: EdgeId) -> EdgeSet {
        EdgeSet(self.0 | 1 << id.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | other.0)
    }

    pub fn difference(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = EdgeId> {
        let mut rest = self.0;
        core::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as u8;
                rest &= rest - 1;
                Some(EdgeId(i))
            }
        })
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|e| e.0)).finish()
    }
}

/// Bijection between edge ids and vertex pairs for one host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeIndex {
    pairs: Vec<(u8, u8)>,
    lookup: [[u8; CAPACITY]; CAPACITY],
}

const NO_EDGE: u8 = u8::MAX;

impl EdgeIndex {
    pub fn new(host: &Graph) -> EdgeIndex {
        let mut lookup = [[NO_EDGE; CAPACITY]; CAPACITY];
        let mut pairs = Vec::with_capacity(host.edge_count());
        for (u, v) in host.edges() {
            let id = pairs.len() as u8;
            lookup[u][v] = id;
            lookup[v][u] = id;
            pairs.push((u as u8, v as u8));
        }
        EdgeIndex { pairs, lookup }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pair(&self, id: EdgeId) -> (usize, usize) {
        let (u, v) = self.pairs[id.index()];
        (u as usize, v as usize)
    }

    pub fn id(&self, u: usize, v: usize) -> Option<EdgeId> {
        if u >= CAPACITY || v >= CAPACITY {
            return None;
        }
        match self.lookup[u][v] {
            NO_EDGE => None,
            id => Some(EdgeId(id)),
        }
    }

    pub fn full(&self) -> EdgeSet {
        EdgeSet::full(self.len())
    }

    /// Rejects sets that mention ids beyond the host's edge list.
    pub fn check(&self, set: EdgeSet) -> Result<()> {
        match set.iter().find(|id| id.index() >= self.len()) {
            Some(id) => Err(Error::EdgeOutOfRange {
                id: id.index(),
                len: self.len(),
            }),
            None => Ok(()),
        }
    }

    pub fn pairs_of(&self, set: EdgeSet) -> Vec<(usize, usize)> {
        set.iter().map(|id| self.pair(id)).collect()
    }

    pub fn ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.len() as u8).map(EdgeId)
    }
}

/// Bijection on `0..n`, stored as the image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n as u8).collect())
    }

    /// Returns `None` unless `images` is a bijection on `0..images.len()`.
    pub fn from_images(images: Vec<u8>) -> Option<Permutation> {
        let mut seen = 0u32;
        for &i in &images {
            if i as usize >= images.len() || seen >> i & 1 == 1 {
                return None;
            }
            seen |= 1 << i;
        }
        Some(Permutation(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn image(&self, v: usize) -> usize {
        self.0[v] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&v| self.0[v as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0u8; self.0.len()];
        for (v, &w) in self.0.iter().enumerate() {
            inv[w as usize] = v as u8;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(v, &w)| v == w as usize)
    }

    /// Induced map on edge ids, `uv ↦ π(u)π(v)`. `None` if some edge is not
    /// mapped onto an edge of the host.
    pub fn edge_map(&self, index: &EdgeIndex) -> Option<Vec<EdgeId>> {
        index
            .ids()
            .map(|id| {
                let (u, v) = index.pair(id);
                index.id(self.image(u), self.image(v))
            })
            .collect()
    }
}

/// Applies an induced edge map to an edge set.
pub fn map_edge_set(map: &[EdgeId], set: EdgeSet) -> EdgeSet {
    set.iter()
        .fold(EdgeSet::EMPTY, |acc, id| acc.with(map[id.index()]))
}

/// Every automorphism of a graph, in lexicographic order of image arrays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismGroup {
    n: usize,
    perms: Vec<Permutation>,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Permutation> {
        self.perms.iter()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.perms.binary_search(p).is_ok()
    }

    /// Orbits of the induced action on `E(g)`, each sorted, listed by smallest id.
    pub fn edge_orbits(&self, g: &Graph) -> Vec<Vec<EdgeId>> {
        let index = EdgeIndex::new(g);
        let maps: Vec<Vec<EdgeId>> = self
            .perms
            .iter()
            .map(|p| p.edge_map(&index).expect("automorphisms preserve edges"))
            .collect();
        let mut assigned = EdgeSet::EMPTY;
        let mut orbits = Vec::new();
        for id in index.ids() {
            if assigned.contains(id) {
                continue;
            }
            let mut orbit = EdgeSet::EMPTY;
            for map in &maps {
                orbit.insert(map[id.index()]);
            }
            assigned = assigned.union(orbit);
            orbits.push(orbit.iter().collect());
        }
        orbits
    }

    /// Single edge orbit. Vacuously true for edgeless graphs.
    pub fn is_edge_transitive(&self, g: &Graph) -> bool {
        self.edge_orbits(g).len() <= 1
    }
}

impl<'a> IntoIterator for &'a AutomorphismGroup {
    type Item = &'a Permutation;
    type IntoIter = core::slice::Iter<'a, Permutation>;

    fn into_iter(self) -> Self::IntoIter {
        self.perms.iter()
    }
}

/// All automorphisms of `g` by backtracking over vertex images.
///
/// Vertex `v` may only map to a vertex of equal degree whose adjacency to the
/// already placed vertices matches; this pruning keeps the search tiny for
/// `n ≤ 10`.
pub fn automorphisms(g: &Graph, max_n: usize) -> Result<AutomorphismGroup> {
    let n = g.n();
    if n > max_n {
        return Err(Error::TooManyVertices { n, limit: max_n });
    }
    let mut perms = Vec::new();
    let mut images = alloc::vec![0u8; n];
    extend_automorphism(g, 0, 0, &mut images, &mut perms);
    Ok(AutomorphismGroup { n, perms })
}

fn extend_automorphism(
    g: &Graph,
    v: usize,
    used: u16,
    images: &mut Vec<u8>,
    out: &mut Vec<Permutation>,
) {
    let n = g.n();
    if v == n {
        out.push(Permutation(images.clone()));
        return;
    }
    for w in 0..n {
        if used >> w & 1 == 1 || g.degree(w) != g.degree(v) {
            continue;
        }
        let consistent = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(images[u] as usize, w));
        if consistent {
            images[v] = w as u8;
            extend_automorphism(g, v + 1, used | 1 << w, images, out);
        }
    }
}

/// Convenience wrapper: edge transitivity of `g` under its full automorphism group.
pub fn is_edge_transitive(g: &Graph, max_n: usize) -> Result<bool> {
    Ok(automorphisms(g, max_n)?.is_edge_transitive(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_universe_is_lexicographic() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.edge_universe(), [(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert!(Graph::empty(5).unwrap().edge_universe().is_empty());
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.edge_universe(), [(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn complement_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.complement(), Graph::empty(4).unwrap());

        let c5 = Graph::cycle(5).unwrap();
        let pentagram = Graph::from_edges(5, [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]).unwrap();
        assert_eq!(c5.complement(), pentagram);

        let k32 = Graph::complete_multipartite(&[3, 2]).unwrap();
        let k3_k2 = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (3, 4)]).unwrap();
        assert_eq!(k32.complement(), k3_k2);
    }

    #[test]
    fn loops_and_range_are_rejected() {
        let mut g = Graph::empty(2).unwrap();
        assert_eq!(g.add_edge(0, 0), Err(Error::SelfLoop { vertex: 0 }));
        assert_eq!(
            g.add_edge(0, 2),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert!(Graph::empty(17).is_err());
    }

    #[test]
    fn automorphism_counts() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(automorphisms(&k3, 10).unwrap().order(), 6);
        let p4 = Graph::path(4).unwrap();
        let aut = automorphisms(&p4, 10).unwrap();
        assert_eq!(aut.order(), 2);
        assert!(aut.contains(&Permutation::from_images(alloc::vec![3, 2, 1, 0]).unwrap()));
        assert_eq!(
            automorphisms(&Graph::cycle(5).unwrap(), 10)
                .unwrap()
                .order(),
            10
        );
        assert!(automorphisms(&Graph::empty(11).unwrap(), 10).is_err());
    }

    #[test]
    fn edge_transitivity_examples() {
        assert!(is_edge_transitive(&Graph::cycle(5).unwrap(), 10).unwrap());
        assert!(!is_edge_transitive(&Graph::path(4).unwrap(), 10).unwrap());
        assert!(is_edge_transitive(&Graph::empty(3).unwrap(), 10).unwrap());

        // 2K2: the eight automorphisms swap endpoints within and across the two
        // edges; the orbit of edge (0,1) is both edges.
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let aut = automorphisms(&two_k2, 10).unwrap();
        assert_eq!(aut.order(), 8);
        assert_eq!(aut.edge_orbits(&two_k2), [[EdgeId(0), EdgeId(1)]]);
    }

    #[test]
    fn edge_set_basics() {
        let mut s = EdgeSet::EMPTY;
        s.insert(EdgeId(3));
        s.insert(EdgeId(0));
        assert_eq!(s.len(), 2);
        assert!(s.is_subset(EdgeSet::full(4)));
        assert!(!EdgeSet::full(4).is_subset(s));
        assert_eq!(s.iter().collect::<Vec<_>>(), [EdgeId(0), EdgeId(3)]);
        let idx = EdgeIndex::new(&Graph::cycle(4).unwrap());
        assert!(idx.check(EdgeSet::singleton(EdgeId(4))).is_err());
        assert_eq!(idx.id(3, 0), Some(EdgeId(1)));
        assert_eq!(idx.id(0, 2), None);
    }
}

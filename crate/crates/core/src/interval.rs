//! Interval graph recognition with certificates.
//!
//! A graph is interval iff it is chordal and asteroidal-triple-free
//! (Lekkerkerker–Boland). Chordality is decided with Lex-BFS and a perfect
//! elimination check; the AT test looks at the components of `G − N[v]` for
//! every vertex. Interval graphs come back with an integer model built from a
//! consecutive ordering of their maximal cliques. Everything else comes back
//! with an obstruction that [`verify_obstruction`] can check independently.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{bits, EdgeIndex, EdgeSet, Graph};
use crate::Result;

/// Closed interval `[left, right]` with integer endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub left: i32,
    pub right: i32,
}

impl Interval {
    pub fn new(left: i32, right: i32) -> Interval {
        Interval { left, right }
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.left <= other.right && other.left <= self.right
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Obstruction {
    /// Chordless cycle of length at least four, listed in cycle order.
    ChordlessCycle(Vec<usize>),
    /// Vertices `triple = [a, b, c]` with `paths[i]` joining the other two
    /// vertices while avoiding the closed neighborhood of `triple[i]`.
    AsteroidalTriple {
        triple: [usize; 3],
        paths: [Vec<usize>; 3],
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IntervalWitness {
    Model(Vec<Interval>),
    Obstruction(Obstruction),
}

impl IntervalWitness {
    pub fn is_interval(&self) -> bool {
        matches!(self, IntervalWitness::Model(_))
    }
}

/// Decides whether `g` is an interval graph and returns a witness either way.
pub fn recognize(g: &Graph) -> IntervalWitness {
    match find_obstruction(g) {
        Some(obs) => IntervalWitness::Obstruction(obs),
        None => IntervalWitness::Model(interval_model(g)),
    }
}

/// Fast yes/no interval test without building witnesses.
pub fn is_interval(g: &Graph) -> bool {
    is_chordal(g) && at_components(g).find_triple().is_none()
}

/// The deterministic obstruction: the lexicographically smallest shortest
/// chordless cycle if `g` is not chordal, else the lexicographically smallest
/// asteroidal triple. `None` iff `g` is interval.
pub fn find_obstruction(g: &Graph) -> Option<Obstruction> {
    if !is_chordal(g) {
        let cycle = shortest_chordless_cycle(g).expect("non-chordal graph has a chordless cycle");
        return Some(Obstruction::ChordlessCycle(cycle));
    }
    let comps = at_components(g);
    let [a, b, c] = comps.find_triple()?;
    let paths = [
        avoiding_path(g, b, c, g.closed_neighbors(a)),
        avoiding_path(g, a, c, g.closed_neighbors(b)),
        avoiding_path(g, a, b, g.closed_neighbors(c)),
    ];
    Some(Obstruction::AsteroidalTriple {
        triple: [a, b, c],
        paths,
    })
}

/// True iff the complement of the spanning subgraph `(V, e)` of `gbar` is interval.
pub fn is_cointerval_edge_set(gbar: &Graph, index: &EdgeIndex, e: EdgeSet) -> Result<bool> {
    index.check(e)?;
    let sub = Graph::from_edge_set(gbar.n(), index, e)?;
    Ok(is_interval(&sub.complement()))
}

/// Lex-BFS visit order. Ties go to the smallest vertex.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = 0u16;
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| visited >> v & 1 == 0)
            .fold(None::<usize>, |best, v| match best {
                Some(b) if labels[b] >= labels[v] => Some(b),
                _ => Some(v),
            })
            .expect("unvisited vertex remains");
        visited |= 1 << v;
        order.push(v);
        for w in bits(g.neighbors(v) & !visited) {
            labels[w].push(n - step);
        }
    }
    order
}

/// Checks that `order` (earliest eliminated first) is a perfect elimination ordering.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = bits(g.neighbors(v)).filter(|&w| pos[w] > pos[v]).collect();
        if let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) {
            let need = later.iter().fold(0u16, |m, &w| m | 1 << w) & !(1 << parent);
            if need & !g.neighbors(parent) != 0 {
                return false;
            }
        }
    }
    true
}

/// Reverse Lex-BFS order, which is a perfect elimination ordering iff `g` is chordal.
pub fn elimination_order(g: &Graph) -> Vec<usize> {
    let mut order = lex_bfs(g);
    order.reverse();
    order
}

pub fn is_chordal(g: &Graph) -> bool {
    is_perfect_elimination_ordering(g, &elimination_order(g))
}

/// Shortest chordless cycle of length ≥ 4; among those, the lexicographically
/// smallest when written from its minimum vertex towards the smaller neighbor.
pub fn shortest_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for len in 4..=n {
        for start in 0..n {
            let mut path = vec![start];
            if extend_cycle(g, len, start, &mut path) {
                return Some(path);
            }
        }
    }
    None
}

fn extend_cycle(g: &Graph, len: usize, start: usize, path: &mut Vec<usize>) -> bool {
    let last = *path.last().unwrap();
    let depth = path.len();
    let on_path = path.iter().fold(0u16, |m, &v| m | 1 << v);
    for w in bits(g.neighbors(last)) {
        if w <= start || on_path >> w & 1 == 1 {
            continue;
        }
        // w may touch only `last` among the path, plus `start` when it closes the cycle.
        let closing = depth + 1 == len;
        let mut allowed = 1u16 << last;
        if closing {
            allowed |= 1 << start;
            if !g.has_edge(w, start) || w < path[1] {
                continue;
            }
        }
        if g.neighbors(w) & on_path & !allowed != 0 {
            continue;
        }
        path.push(w);
        if closing || extend_cycle(g, len, start, path) {
            return true;
        }
        path.pop();
    }
    false
}

/// Component labels of `G − N[v]` for every `v`.
struct AtComponents {
    n: usize,
    // comp[v][x]: component id of x in G - N[v], or NONE.
    comp: Vec<[u8; crate::graph::CAPACITY]>,
}

const NONE: u8 = u8::MAX;

fn at_components(g: &Graph) -> AtComponents {
    let n = g.n();
    let mut comp = vec![[NONE; crate::graph::CAPACITY]; n];
    for (v, labels) in comp.iter_mut().enumerate() {
        let alive = g.vertex_mask() & !g.closed_neighbors(v);
        let mut next = 0u8;
        for x in bits(alive) {
            if labels[x] != NONE {
                continue;
            }
            let mut frontier = 1u16 << x;
            let mut seen = frontier;
            while frontier != 0 {
                let mut grow = 0;
                for y in bits(frontier) {
                    grow |= g.neighbors(y);
                }
                frontier = grow & alive & !seen;
                seen |= frontier;
            }
            for y in bits(seen) {
                labels[y] = next;
            }
            next += 1;
        }
    }
    AtComponents { n, comp }
}

impl AtComponents {
    fn joined(&self, avoid: usize, x: usize, y: usize) -> bool {
        let c = self.comp[avoid][x];
        c != NONE && c == self.comp[avoid][y]
    }

    fn find_triple(&self) -> Option<[usize; 3]> {
        let n = self.n;
        for a in 0..n {
            for b in a + 1..n {
                if !self.joined(a, b, b) {
                    continue;
                }
                for c in b + 1..n {
                    if self.joined(c, a, b) && self.joined(b, a, c) && self.joined(a, b, c) {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }
}

/// Shortest `from`–`to` path inside `G − forbidden`, smallest-index parents first.
fn avoiding_path(g: &Graph, from: usize, to: usize, forbidden: u16) -> Vec<usize> {
    let n = g.n();
    let alive = g.vertex_mask() & !forbidden;
    let mut parent = vec![usize::MAX; n];
    let mut queue = alloc::collections::VecDeque::new();
    parent[from] = from;
    queue.push_back(from);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for w in bits(g.neighbors(v) & alive) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    let mut v = to;
    while v != from {
        v = parent[v];
        path.push(v);
    }
    path.reverse();
    path
}

/// Maximal cliques of a chordal graph as vertex masks, sorted.
pub fn maximal_cliques_chordal(g: &Graph) -> Vec<u16> {
    let order = elimination_order(g);
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let candidates: Vec<u16> = order
        .iter()
        .map(|&v| {
            bits(g.neighbors(v))
                .filter(|&w| pos[w] > pos[v])
                .fold(1u16 << v, |m, w| m | 1 << w)
        })
        .collect();
    let mut cliques: Vec<u16> = candidates
        .iter()
        .copied()
        .filter(|&c| !candidates.iter().any(|&d| d != c && c & !d == 0))
        .collect();
    cliques.sort_unstable();
    cliques.dedup();
    cliques
}

/// Integer interval model from a consecutive clique ordering. `g` must be interval.
fn interval_model(g: &Graph) -> Vec<Interval> {
    let cliques = maximal_cliques_chordal(g);
    let mut order = Vec::with_capacity(cliques.len());
    let found = order_cliques(&cliques, 0, 0, 0, &mut order);
    assert!(found, "interval graph admits a consecutive clique ordering");
    let mut model = vec![Interval::new(i32::MAX, i32::MIN); g.n()];
    for (pos, &ci) in order.iter().enumerate() {
        for v in bits(cliques[ci]) {
            let iv = &mut model[v];
            iv.left = iv.left.min(pos as i32);
            iv.right = iv.right.max(pos as i32);
        }
    }
    model
}

/// Backtracking over clique orders where each vertex's cliques stay consecutive.
/// `open` holds the vertices of the last placed clique, `closed` those already
/// finished.
fn order_cliques(
    cliques: &[u16],
    placed: u32,
    open: u16,
    closed: u16,
    order: &mut Vec<usize>,
) -> bool {
    if order.len() == cliques.len() {
        return true;
    }
    for (i, &c) in cliques.iter().enumerate() {
        if placed >> i & 1 == 1 || c & closed != 0 {
            continue;
        }
        order.push(i);
        if order_cliques(cliques, placed | 1 << i, c, closed | (open & !c), order) {
            return true;
        }
        order.pop();
    }
    false
}

/// True iff `model` has one interval per vertex and reproduces the adjacency of `g`.
pub fn verify_model(g: &Graph, model: &[Interval]) -> bool {
    let n = g.n();
    model.len() == n
        && model.iter().all(|iv| iv.left <= iv.right)
        && (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == model[u].intersects(&model[v])))
}

/// Checks an obstruction against `g` without trusting how it was found.
pub fn verify_obstruction(g: &Graph, obs: &Obstruction) -> bool {
    let n = g.n();
    match obs {
        Obstruction::ChordlessCycle(cycle) => {
            let k = cycle.len();
            if k < 4 || cycle.iter().any(|&v| v >= n) {
                return false;
            }
            let distinct = cycle.iter().fold(0u16, |m, &v| m | 1 << v).count_ones() as usize;
            if distinct != k {
                return false;
            }
            (0..k).all(|i| {
                (i + 1..k).all(|j| {
                    let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                    g.has_edge(cycle[i], cycle[j]) == consecutive
                })
            })
        }
        Obstruction::AsteroidalTriple { triple, paths } => {
            let [a, b, c] = *triple;
            if triple.iter().any(|&v| v >= n) || a == b || b == c || a == c {
                return false;
            }
            let ends = [(b, c, a), (a, c, b), (a, b, c)];
            ends.iter().zip(paths.iter()).all(|(&(x, y, avoid), path)| {
                path.first() == Some(&x)
                    && path.last() == Some(&y)
                    && path
                        .iter()
                        .all(|&v| v < n && !(g.closed_neighbors(avoid) >> v & 1 == 1))
                    && path.windows(2).all(|w| g.has_edge(w[0], w[1]))
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(witness: IntervalWitness) -> Vec<Interval> {
        match witness {
            IntervalWitness::Model(m) => m,
            IntervalWitness::Obstruction(o) => panic!("unexpected obstruction {o:?}"),
        }
    }

    #[test]
    fn complete_graph_model_is_a_single_point() {
        for n in 0..6 {
            let m = model(recognize(&Graph::complete(n).unwrap()));
            assert!(m.iter().all(|iv| *iv == Interval::new(0, 0)));
        }
    }

    #[test]
    fn path_model_reproduces_adjacency() {
        let p4 = Graph::path(4).unwrap();
        let m = model(recognize(&p4));
        assert!(verify_model(&p4, &m));
        let explicit = [(0, 1), (1, 2), (2, 3), (3, 4)].map(|(l, r)| Interval::new(l, r));
        assert!(verify_model(&p4, &explicit));
    }

    #[test]
    fn c4_obstruction_is_the_cycle() {
        let c4 = Graph::cycle(4).unwrap();
        let w = recognize(&c4);
        assert_eq!(
            w,
            IntervalWitness::Obstruction(Obstruction::ChordlessCycle(vec![0, 1, 2, 3]))
        );
    }

    #[test]
    fn k23_is_not_interval() {
        let g = Graph::complete_multipartite(&[2, 3]).unwrap();
        let w = recognize(&g);
        match &w {
            IntervalWitness::Obstruction(o @ Obstruction::ChordlessCycle(c)) => {
                assert_eq!(c.len(), 4);
                assert!(verify_obstruction(&g, o));
            }
            other => panic!("expected a 4-cycle, got {other:?}"),
        }
    }

    #[test]
    fn asteroidal_triple_in_chordal_graph() {
        // Subdivided claw: center 0, legs 0-1-2, 0-3-4, 0-5-6. Chordal, not interval.
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert!(is_chordal(&g));
        let obs = find_obstruction(&g).unwrap();
        assert!(matches!(
            obs,
            Obstruction::AsteroidalTriple {
                triple: [2, 4, 6],
                ..
            }
        ));
        assert!(verify_obstruction(&g, &obs));
    }

    #[test]
    fn cointerval_edge_sets_of_two_k2() {
        let gbar = Graph::from_edges(4, [(0, 2), (1, 3)]).unwrap();
        let idx = EdgeIndex::new(&gbar);
        assert!(is_cointerval_edge_set(&gbar, &idx, EdgeSet::EMPTY).unwrap());
        assert!(is_cointerval_edge_set(&gbar, &idx, EdgeSet(0b01)).unwrap());
        assert!(!is_cointerval_edge_set(&gbar, &idx, EdgeSet(0b11)).unwrap());
        assert!(is_cointerval_edge_set(&gbar, &idx, EdgeSet(0b100)).is_err());
    }

    #[test]
    fn bad_obstructions_are_rejected() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(verify_obstruction(
            &c5,
            &Obstruction::ChordlessCycle(vec![0, 1, 2, 3, 4])
        ));
        assert!(!verify_obstruction(
            &c5,
            &Obstruction::ChordlessCycle(vec![0, 1, 2, 3])
        ));
        assert!(!verify_obstruction(
            &c5,
            &Obstruction::ChordlessCycle(vec![0, 1, 2])
        ));
    }
}

//! Exhaustive generation of small graphs up to isomorphism.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Isomorphism-invariant code: the smallest upper-triangle adjacency word over
/// all vertex orders that list vertices by nonincreasing degree.
pub fn canonical_code(g: &Graph) -> u128 {
    let n = g.n();
    let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let mut order = Vec::with_capacity(n);
    let mut best = u128::MAX;
    search_orders(g, &degrees, 0, &mut order, &mut best);
    best
}

fn search_orders(g: &Graph, degrees: &[usize], used: u16, order: &mut Vec<usize>, best: &mut u128) {
    let n = g.n();
    if order.len() == n {
        *best = (*best).min(encode(g, order));
        return;
    }
    let want = degrees[order.len()];
    for v in 0..n {
        if used >> v & 1 == 0 && g.degree(v) == want {
            order.push(v);
            search_orders(g, degrees, used | 1 << v, order, best);
            order.pop();
        }
    }
}

fn encode(g: &Graph, order: &[usize]) -> u128 {
    let mut code = 0u128;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            code = code << 1 | g.has_edge(order[i], order[j]) as u128;
        }
    }
    code
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// obtained by extending every class on `n - 1` vertices with a new vertex.
/// Representatives are sorted by (edge count, canonical code).
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 9, "exhaustive generation is limited to 9 vertices");
    let mut classes = vec![Graph::empty(0).expect("empty graph")];
    for k in 1..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for base in &classes {
            for nbrs in 0u16..1 << (k - 1) {
                let mut g = Graph::from_edges(k, base.edges()).expect("fits");
                for u in crate::graph::bits(nbrs) {
                    g.add_edge(u, k - 1).expect("in range");
                }
                let code = canonical_code(&g);
                if seen.insert(code) {
                    next.push((g.edge_count(), code, g));
                }
            }
        }
        next.sort_unstable_by_key(|&(m, code, _)| (m, code));
        classes = next.into_iter().map(|(_, _, g)| g).collect();
    }
    classes
}

/// All isomorphism classes with at most `max_n` vertices, smallest first.
pub fn nonisomorphic_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (0..=max_n).flat_map(nonisomorphic_graphs).collect()
}

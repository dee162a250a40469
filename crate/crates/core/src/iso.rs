//! Isomorphism testing for small graphs by invariant-pruned backtracking.

use crate::counting::triangles_per_vertex;
use crate::graph::{Bits, Graph};

/// Isomorphism-invariant summary: vertex count, edge count and the sorted
/// multiset of (degree, triangles through the vertex).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub n: usize,
    pub edges: usize,
    pub vertex_classes: Vec<(u32, u32)>,
}

impl Fingerprint {
    pub fn of(g: &Graph) -> Self {
        let mut vertex_classes = vertex_invariants(g);
        vertex_classes.sort_unstable();
        Fingerprint {
            n: g.n(),
            edges: g.edge_count(),
            vertex_classes,
        }
    }
}

fn vertex_invariants(g: &Graph) -> Vec<(u32, u32)> {
    let tri = triangles_per_vertex(g);
    (0..g.n()).map(|v| (g.degree(v) as u32, tri[v])).collect()
}

/// True iff an edge-preserving bijection between `g` and `h` exists.
/// Meant for `n <= 10`, though any size is accepted.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Returns `map` with `g.has_edge(u, v) == h.has_edge(map[u], map[v])`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let inv_g = vertex_invariants(g);
    let inv_h = vertex_invariants(h);
    let mut sorted_g = inv_g.clone();
    let mut sorted_h = inv_h.clone();
    sorted_g.sort_unstable();
    sorted_h.sort_unstable();
    if sorted_g != sorted_h {
        return None;
    }

    // candidate images per vertex of g
    let candidates: Vec<u64> = inv_g
        .iter()
        .map(|ig| {
            inv_h
                .iter()
                .enumerate()
                .filter(|(_, ih)| *ih == ig)
                .fold(0u64, |acc, (w, _)| acc | 1 << w)
        })
        .collect();

    // connected-first order, rarest class first among ties
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                (
                    (g.row(v) & placed).count_ones(),
                    std::cmp::Reverse(candidates[v].count_ones()),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex exists");
        order.push(next);
        placed |= 1 << next;
    }

    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    if extend(g, h, &order, &candidates, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    candidates: &[u64],
    depth: usize,
    map: &mut [usize],
    used: &mut u64,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let earlier = &order[..depth];
    for w in Bits(candidates[v] & !*used) {
        let consistent = earlier
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        *used |= 1 << w;
        if extend(g, h, order, candidates, depth + 1, map, used) {
            return true;
        }
        *used &= !(1 << w);
        map[v] = usize::MAX;
    }
    false
}

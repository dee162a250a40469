//! Triangle and k-clique counting on bit-row graphs.

use std::collections::BTreeMap;

use crate::graph::{above, Bits, Graph, VertexSet};

/// A triangle `{i, j, k}` with `i < j < k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl Triangle {
    /// Sorts the three vertices.
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        let mut v = [a, b, c];
        v.sort_unstable();
        Triangle {
            i: v[0],
            j: v[1],
            k: v[2],
        }
    }

    pub fn vertices(&self) -> [usize; 3] {
        [self.i, self.j, self.k]
    }

    pub fn mask(&self) -> u64 {
        1 << self.i | 1 << self.j | 1 << self.k
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_bits(self.mask())
    }

    pub fn is_in(&self, g: &Graph) -> bool {
        self.i != self.j
            && self.j != self.k
            && g.has_edge(self.i, self.j)
            && g.has_edge(self.i, self.k)
            && g.has_edge(self.j, self.k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleProfile {
    pub total: u64,
    /// Triangles through each vertex.
    pub per_vertex: Vec<u64>,
    /// `|N(u) ∩ N(v)|` for each edge `(u, v)`, `u < v`.
    pub per_edge: BTreeMap<(usize, usize), u64>,
}

/// `T(G)`: every triangle is counted once at its two lowest vertices.
pub fn count_triangles(g: &Graph) -> u64 {
    let mut total = 0u64;
    for u in 0..g.n() {
        let ru = g.row(u);
        for v in Bits(ru & above(u)) {
            total += (ru & g.row(v) & above(v)).count_ones() as u64;
        }
    }
    total
}

/// True iff `G` contains at least one triangle.
pub fn has_triangle(g: &Graph) -> bool {
    (0..g.n()).any(|u| {
        let ru = g.row(u);
        Bits(ru & above(u)).any(|v| ru & g.row(v) & above(v) != 0)
    })
}

/// Plain triple loop over `i < j < k`, kept independent of the bit-row path.
pub fn count_triangles_oracle(g: &Graph) -> u64 {
    let n = g.n();
    let mut total = 0;
    for i in 0..n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                continue;
            }
            for k in j + 1..n {
                if g.has_edge(i, k) && g.has_edge(j, k) {
                    total += 1;
                }
            }
        }
    }
    total
}

/// All triangles in lexicographic order.
pub fn list_triangles(g: &Graph) -> Vec<Triangle> {
    let mut out = Vec::new();
    for_each_triangle(g, |t| out.push(t));
    out
}

pub(crate) fn for_each_triangle<F: FnMut(Triangle)>(g: &Graph, mut f: F) {
    for i in 0..g.n() {
        let ri = g.row(i);
        for j in Bits(ri & above(i)) {
            for k in Bits(ri & g.row(j) & above(j)) {
                f(Triangle { i, j, k });
            }
        }
    }
}

/// Vertices lying in every triangle, or `None` when there are no triangles.
pub fn common_triangle_vertices(g: &Graph) -> Option<VertexSet> {
    let mut common = u64::MAX;
    let mut any = false;
    for_each_triangle(g, |t| {
        common &= t.mask();
        any = true;
    });
    any.then_some(VertexSet::from_bits(common))
}

pub fn triangle_profile(g: &Graph) -> TriangleProfile {
    let n = g.n();
    let mut per_vertex = vec![0u64; n];
    let mut per_edge = BTreeMap::new();
    let mut total = 0;
    for (u, v) in g.edges() {
        per_edge.insert((u, v), (g.row(u) & g.row(v)).count_ones() as u64);
    }
    for_each_triangle(g, |t| {
        total += 1;
        for v in t.vertices() {
            per_vertex[v] += 1;
        }
    });
    TriangleProfile {
        total,
        per_vertex,
        per_edge,
    }
}

/// Triangles through each vertex, computed directly from the rows.
pub(crate) fn triangles_per_vertex(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| {
            let nv = g.row(v);
            let twice: u32 = Bits(nv).map(|u| (g.row(u) & nv).count_ones()).sum();
            twice / 2
        })
        .collect()
}

/// Number of `k`-vertex cliques. `k = 0` counts the empty set.
pub fn count_cliques(g: &Graph, k: usize) -> u64 {
    match k {
        0 => 1,
        1 => g.n() as u64,
        2 => g.edge_count() as u64,
        3 => count_triangles(g),
        _ => {
            let mut total = 0;
            for v in 0..g.n() {
                total += count_extensions(g, g.row(v) & above(v), k - 1);
            }
            total
        }
    }
}

/// Counts `need`-cliques inside `cand`, extending in ascending order.
fn count_extensions(g: &Graph, cand: u64, need: usize) -> u64 {
    match need {
        0 => 1,
        1 => cand.count_ones() as u64,
        2 => Bits(cand)
            .map(|v| (g.row(v) & cand & above(v)).count_ones() as u64)
            .sum(),
        _ => {
            if (cand.count_ones() as usize) < need || color_bound(g, cand) < need {
                return 0;
            }
            Bits(cand)
                .map(|v| count_extensions(g, g.row(v) & cand & above(v), need - 1))
                .sum()
        }
    }
}

/// Greedy colouring of `cand`; the number of colour classes bounds the
/// largest clique inside it.
fn color_bound(g: &Graph, cand: u64) -> usize {
    let mut rest = cand;
    let mut colors = 0;
    while rest != 0 {
        colors += 1;
        let mut avail = rest;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            rest &= !(1 << v);
            avail &= !(1 << v) & !g.row(v);
        }
    }
    colors
}

/// Every `k`-clique in ascending lexicographic order of its sorted vertices.
pub fn list_cliques(g: &Graph, k: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for_each_clique(g, k, |c| out.push(VertexSet::from_bits(c)));
    out
}

pub(crate) fn for_each_clique<F: FnMut(u64)>(g: &Graph, k: usize, mut f: F) {
    if k == 0 {
        f(0);
        return;
    }
    extend(g, 0, VertexSet::full(g.n()).bits(), k, &mut f);
}

fn extend<F: FnMut(u64)>(g: &Graph, chosen: u64, cand: u64, need: usize, f: &mut F) {
    if need == 1 {
        for v in Bits(cand) {
            f(chosen | 1 << v);
        }
        return;
    }
    if (cand.count_ones() as usize) < need || (need > 2 && color_bound(g, cand) < need) {
        return;
    }
    for v in Bits(cand) {
        extend(g, chosen | 1 << v, g.row(v) & cand & above(v), need - 1, f);
    }
}

/// True iff `G` contains a `k`-clique.
pub fn has_clique(g: &Graph, k: usize) -> bool {
    fn search(g: &Graph, cand: u64, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if (cand.count_ones() as usize) < need {
            return false;
        }
        if need == 1 {
            return true;
        }
        if need > 2 && color_bound(g, cand) < need {
            return false;
        }
        Bits(cand).any(|v| search(g, g.row(v) & cand & above(v), need - 1))
    }
    search(g, VertexSet::full(g.n()).bits(), k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn binom(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn small_counts() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(count_triangles(&k5), 10);
        assert_eq!(count_triangles_oracle(&Graph::empty(6).unwrap()), 0);
        assert_eq!(count_triangles_oracle(&Graph::complete(4).unwrap()), 4);
        assert_eq!(count_cliques(&Graph::complete(6).unwrap(), 4), 15);
        assert!(!has_triangle(&cycle(5)));
        assert!(has_triangle(&k5));
    }

    #[test]
    fn complete_graph_clique_counts() {
        for n in 1..=12 {
            let g = Graph::complete(n).unwrap();
            for k in 1..=n {
                assert_eq!(
                    count_cliques(&g, k),
                    binom(n as u64, k as u64),
                    "K_{n}, k={k}"
                );
                assert_eq!(list_cliques(&g, k).len() as u64, binom(n as u64, k as u64));
            }
            assert_eq!(count_cliques(&g, n + 1), 0);
            assert!(has_clique(&g, n) && !has_clique(&g, n + 1));
        }
    }

    #[test]
    fn listing_order() {
        let k4 = Graph::complete(4).unwrap();
        let tri: Vec<String> = list_cliques(&k4, 3).iter().map(|s| s.to_string()).collect();
        assert_eq!(tri, ["0,1,2", "0,1,3", "0,2,3", "1,2,3"]);
        assert!(list_cliques(&cycle(5), 3).is_empty());
        let t: Vec<_> = list_triangles(&k4).iter().map(|t| t.vertices()).collect();
        assert_eq!(t, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]);
    }

    #[test]
    fn cycle_profile_is_zero() {
        let p = triangle_profile(&cycle(5));
        assert_eq!(p.total, 0);
        assert!(p.per_edge.values().all(|&c| c == 0));
        assert_eq!(p.per_edge.len(), 5);
    }

    #[test]
    fn common_vertices() {
        assert_eq!(common_triangle_vertices(&cycle(5)), None);
        let bowtie =
            Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(
            common_triangle_vertices(&bowtie),
            Some(VertexSet::from_bits(1 << 2))
        );
        assert_eq!(
            common_triangle_vertices(&Graph::complete(4).unwrap()),
            Some(VertexSet::EMPTY)
        );
    }

    #[test]
    fn triangle_membership() {
        let k4 = Graph::complete(4).unwrap();
        assert!(Triangle::new(3, 0, 1).is_in(&k4));
        assert_eq!(Triangle::new(3, 0, 1).vertices(), [0, 1, 3]);
        assert!(!Triangle::new(0, 1, 2).is_in(&cycle(5)));
        assert_eq!(triangles_per_vertex(&k4), vec![3, 3, 3, 3]);
    }
}

//! Exact triangle covering number with certificates.

use crate::counting::{count_triangles_oracle, list_triangles, Triangle};
use crate::error::Result;
use crate::graph::{above, Bits, Graph, VertexSet};

/// A minimum triangle cover together with a vertex-disjoint triangle packing.
///
/// `packing.len() <= tau == cover.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverCertificate {
    pub tau: usize,
    pub cover: VertexSet,
    pub packing: Vec<Triangle>,
}

impl CoverCertificate {
    /// Re-checks the certificate against `g` without trusting the solver.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.cover.len() != self.tau || self.packing.len() > self.tau {
            return false;
        }
        if !matches!(is_triangle_cover(g, self.cover), Ok(true)) {
            return false;
        }
        let mut used = 0u64;
        for t in &self.packing {
            if !t.is_in(g) || used & t.mask() != 0 {
                return false;
            }
            used |= t.mask();
        }
        true
    }
}

/// True iff `G \ S` has no triangle.
pub fn is_triangle_cover(g: &Graph, s: VertexSet) -> Result<bool> {
    s.check_within(g.n())?;
    Ok(is_cover_mask(g, g.vertices().difference(s).bits()))
}

fn is_cover_mask(g: &Graph, rest: u64) -> bool {
    for u in Bits(rest) {
        let ru = g.row(u) & rest;
        for v in Bits(ru & above(u)) {
            if ru & g.row(v) & above(v) != 0 {
                return false;
            }
        }
    }
    true
}

/// Size of a greedy vertex-disjoint packing of the triangles not hit by
/// `chosen`, scanning in the given order.
fn greedy_packing_size(tris: &[u64], chosen: u64) -> usize {
    let mut used = chosen;
    let mut count = 0;
    for &t in tris {
        if t & used == 0 {
            used |= t;
            count += 1;
        }
    }
    count
}

struct Search<'a> {
    tris: &'a [u64],
    best: usize,
    best_cover: u64,
    /// Stop as soon as a cover of this size or smaller is found.
    target: usize,
}

impl Search<'_> {
    fn run(&mut self, chosen: u64, depth: usize) {
        if self.best <= self.target {
            return;
        }
        let Some(&first) = self.tris.iter().find(|&&t| t & chosen == 0) else {
            if depth < self.best {
                self.best = depth;
                self.best_cover = chosen;
            }
            return;
        };
        // vertex-disjoint uncovered triangles each need their own cover vertex
        let lower = greedy_packing_size(self.tris, chosen);
        if depth + lower >= self.best {
            return;
        }
        for v in Bits(first) {
            self.run(chosen | 1 << v, depth + 1);
        }
    }
}

/// Exact `τ_△(G)`.
///
/// Branches on the three vertices of the lexicographically least uncovered
/// triangle, pruning with a greedy disjoint-packing bound.
pub fn tau_triangle(g: &Graph) -> CoverCertificate {
    let triangles = list_triangles(g);
    let tris: Vec<u64> = triangles.iter().map(Triangle::mask).collect();

    let mut packing = Vec::new();
    let mut used = 0u64;
    for t in &triangles {
        if t.mask() & used == 0 {
            used |= t.mask();
            packing.push(*t);
        }
    }

    // a maximal packing's vertex set covers every triangle
    let mut search = Search {
        tris: &tris,
        best: used.count_ones() as usize,
        best_cover: used,
        target: packing.len(),
    };
    search.run(0, 0);
    CoverCertificate {
        tau: search.best,
        cover: VertexSet::from_bits(search.best_cover),
        packing,
    }
}

/// True iff some triangle cover has at most `k` vertices.
pub fn has_cover_at_most(g: &Graph, k: usize) -> bool {
    fn search(tris: &[u64], chosen: u64, budget: usize) -> bool {
        let Some(&first) = tris.iter().find(|&&t| t & chosen == 0) else {
            return true;
        };
        if budget == 0 {
            return false;
        }
        Bits(first).any(|v| search(tris, chosen | 1 << v, budget - 1))
    }
    let tris: Vec<u64> = list_triangles(g).iter().map(Triangle::mask).collect();
    search(&tris, 0, k)
}

/// Smallest `|S|` with `G \ S` triangle-free, by scanning subsets in order of
/// increasing size. Exponential; meant for `n <= 16`.
pub fn tau_triangle_oracle(g: &Graph) -> usize {
    let n = g.n();
    for size in 0..=n {
        if subsets_of_size(n, size).any(|s| {
            let rest = g
                .delete_vertices(VertexSet::from_bits(s))
                .expect("subset within range");
            count_triangles_oracle(&rest) == 0
        }) {
            return size;
        }
    }
    unreachable!("removing every vertex leaves no triangle")
}

/// All `size`-subsets of `0..n` as masks, in increasing numeric order.
fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let limit = if n >= 64 { u64::MAX } else { 1u64 << n };
    let first = if size == 0 { 0 } else { (1u64 << size) - 1 };
    let mut next = Some(first);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let succ = (((r ^ cur) >> 2) / c) | r;
            (succ < limit && succ > cur).then_some(succ)
        };
        (size <= n).then_some(cur)
    })
}

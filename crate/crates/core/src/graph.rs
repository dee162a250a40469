//! Simple undirected graphs on at most 64 vertices.
//!
//! Every vertex owns one `u64` row of the adjacency matrix, so neighbourhood
//! intersections and degree queries are a single AND / popcount.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Bits strictly above position `v`.
#[inline]
pub(crate) const fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !0u64 << (v + 1)
    }
}

/// A set of vertices stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// The set `{0, 1, ..., n-1}`.
    pub const fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < MAX_VERTICES, "vertex {v} out of range");
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < 64 {
            self.0 &= !(1 << v);
        }
    }

    pub const fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Checks that no bit at position `>= n` is set.
    pub fn check_within(self, n: usize) -> Result<()> {
        let stray = self.0 & !low_mask(n);
        if stray != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: stray.trailing_zeros() as usize,
                n,
            });
        }
        Ok(())
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone)]
pub struct Bits(pub(crate) u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// Simple undirected graph with adjacency bit rows.
///
/// Rows past `n` are always zero, so the derived equality and hashing only
/// depend on the actual graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.adj[v] = low_mask(n) & !(1 << v);
        }
        Ok(g)
    }

    /// Builds a graph from an edge list, rejecting loops and repeated edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw rows. The rows must already be symmetric and
    /// loop-free.
    pub fn from_rows(rows: &[u64]) -> Result<Self> {
        let mut g = Graph::empty(rows.len())?;
        g.adj[..rows.len()].copy_from_slice(rows);
        g.validate()?;
        Ok(g)
    }

    /// Unchecked constructor for the enumeration hot loop.
    #[inline]
    pub(crate) fn from_raw(n: usize, adj: [u64; MAX_VERTICES]) -> Self {
        let g = Graph { n, adj };
        debug_assert!(g.validate().is_ok());
        g
    }

    fn validate(&self) -> Result<()> {
        let mask = low_mask(self.n);
        for v in 0..MAX_VERTICES {
            let row = self.adj[v];
            if v >= self.n {
                if row != 0 {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        n: self.n,
                    });
                }
                continue;
            }
            if row & !mask != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: (row & !mask).trailing_zeros() as usize,
                    n: self.n,
                });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in Bits(row) {
                if self.adj[u] >> v & 1 == 0 {
                    return Err(Error::MissingEdge(u, v));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        let twice: usize = self.rows().iter().map(|r| r.count_ones() as usize).sum();
        twice / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & above(u)).map(move |v| (u, v)))
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        debug_assert!(self.validate().is_ok());
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u.min(v), u.max(v)));
        }
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        debug_assert!(self.validate().is_ok());
        Ok(())
    }

    /// `G[S]`, relabelled `0..|S|` in ascending order of `S`.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        s.check_within(self.n)?;
        let keep: Vec<usize> = s.iter().collect();
        let mut out = Graph::empty(keep.len())?;
        for (i, &u) in keep.iter().enumerate() {
            let mut row = 0u64;
            for (j, &v) in keep.iter().enumerate() {
                if self.adj[u] >> v & 1 == 1 {
                    row |= 1 << j;
                }
            }
            out.adj[i] = row;
        }
        Ok(out)
    }

    /// `G \ S`.
    pub fn delete_vertices(&self, s: VertexSet) -> Result<Graph> {
        s.check_within(self.n)?;
        self.induced_subgraph(self.vertices().difference(s))
    }

    /// `e(A, B)` for disjoint `A`, `B`.
    pub fn edges_between(&self, a: VertexSet, b: VertexSet) -> Result<usize> {
        a.check_within(self.n)?;
        b.check_within(self.n)?;
        if !a.intersection(b).is_empty() {
            return Err(Error::OverlappingSets);
        }
        Ok(a.iter()
            .map(|u| (self.adj[u] & b.0).count_ones() as usize)
            .sum())
    }

    /// Applies the relabelling `v -> perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidTask(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let image: VertexSet = perm.iter().copied().collect();
        if image != self.vertices() {
            return Err(Error::InvalidTask("not a permutation".into()));
        }
        let mut out = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            out.adj[perm[u]] |= 1 << perm[v];
            out.adj[perm[v]] |= 1 << perm[u];
        }
        Ok(out)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

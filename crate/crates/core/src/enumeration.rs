//! Exhaustive enumeration of labelled graphs with a fixed number of edges.
//!
//! The `C(n,2)` vertex pairs are numbered in graph6 order (`(i, j)` with
//! `i < j` gets slot `j(j-1)/2 + i`), so a graph with `m` edges is an
//! `m`-subset of slots. Subsets are visited in colexicographic order, which
//! is plain increasing order of the slot bit mask. A shard is a contiguous
//! range of colex ranks.

use std::collections::HashMap;
use std::ops::AddAssign;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::counting::count_triangles;
use crate::covering::has_cover_at_most;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::iso::{are_isomorphic, Fingerprint};

/// Largest `n` whose `C(n,2)` slots fit in one machine word.
pub const MAX_ENUMERATION_VERTICES: usize = 11;

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

/// Optional predicates, applied in order: triangle bounds, then τ bounds.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Filters {
    pub min_triangles: Option<u64>,
    pub max_triangles: Option<u64>,
    pub min_tau: Option<usize>,
    pub max_tau: Option<usize>,
}

impl Filters {
    pub fn is_empty(&self) -> bool {
        *self == Filters::default()
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        if self.min_triangles.is_some() || self.max_triangles.is_some() {
            let t = count_triangles(g);
            if self.min_triangles.is_some_and(|x| t < x)
                || self.max_triangles.is_some_and(|x| t > x)
            {
                return false;
            }
        }
        if let Some(x) = self.min_tau {
            if x > 0 && has_cover_at_most(g, x - 1) {
                return false;
            }
        }
        if let Some(x) = self.max_tau {
            if !has_cover_at_most(g, x) {
                return false;
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationTask {
    pub n: usize,
    pub m: usize,
    pub shard_count: usize,
    pub shard_id: usize,
    #[serde(default)]
    pub filters: Filters,
}

impl EnumerationTask {
    /// The whole `(n, m)` space as a single shard.
    pub fn new(n: usize, m: usize) -> Result<Self> {
        let task = EnumerationTask {
            n,
            m,
            shard_count: 1,
            shard_id: 0,
            filters: Filters::default(),
        };
        task.validate()?;
        Ok(task)
    }

    pub fn with_shard(mut self, shard_count: usize, shard_id: usize) -> Result<Self> {
        self.shard_count = shard_count;
        self.shard_id = shard_id;
        self.validate()?;
        Ok(self)
    }

    pub fn with_filters(mut self, filters: Filters) -> Self {
        self.filters = filters;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n > MAX_ENUMERATION_VERTICES {
            return Err(Error::InvalidTask(format!(
                "n = {} exceeds the enumeration limit {MAX_ENUMERATION_VERTICES}",
                self.n
            )));
        }
        let slots = self.slot_count();
        if self.m > slots {
            return Err(Error::InvalidTask(format!(
                "m = {} exceeds C({}, 2) = {slots}",
                self.m, self.n
            )));
        }
        if self.shard_count == 0 || self.shard_id >= self.shard_count {
            return Err(Error::InvalidTask(format!(
                "shard {} of {} is out of range",
                self.shard_id, self.shard_count
            )));
        }
        Ok(())
    }

    pub fn slot_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    /// `C(C(n,2), m)`.
    pub fn space_size(&self) -> u64 {
        binomial(self.slot_count() as u64, self.m as u64)
    }

    /// Colex ranks `[start, end)` handled by this shard.
    pub fn rank_range(&self) -> (u64, u64) {
        let total = self.space_size() as u128;
        let s = self.shard_count as u128;
        let id = self.shard_id as u128;
        ((total * id / s) as u64, (total * (id + 1) / s) as u64)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationStats {
    pub shard_id: usize,
    pub visited: u64,
    pub passed: u64,
}

impl AddAssign for EnumerationStats {
    fn add_assign(&mut self, rhs: Self) {
        self.visited += rhs.visited;
        self.passed += rhs.passed;
    }
}

/// `(i, j)` for every slot, in slot order.
fn slot_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Colex rank of an `m`-subset mask: `Σ C(c_t, t)` over its elements
/// `c_1 < c_2 < ...`.
pub fn colex_rank(mask: u64) -> u64 {
    let mut bits = mask;
    let mut rank = 0;
    let mut t = 1;
    while bits != 0 {
        let c = bits.trailing_zeros() as u64;
        rank += binomial(c, t);
        t += 1;
        bits &= bits - 1;
    }
    rank
}

/// Inverse of [`colex_rank`] for `m`-subsets.
pub fn colex_unrank(mut rank: u64, m: usize) -> u64 {
    let mut mask = 0u64;
    for t in (1..=m as u64).rev() {
        // largest c with C(c, t) <= rank
        let mut c = t - 1;
        while binomial(c + 1, t) <= rank {
            c += 1;
        }
        rank -= binomial(c, t);
        mask |= 1 << c;
    }
    mask
}

/// Next larger integer with the same popcount.
#[inline]
fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Walks the shard's rank range, calling `f` on each graph in colex order.
fn walk<F: FnMut(&Graph)>(task: &EnumerationTask, mut f: F) -> u64 {
    let slots = slot_pairs(task.n);
    let (start, end) = task.rank_range();
    let mut mask = colex_unrank(start, task.m);
    for rank in start..end {
        let mut adj = [0u64; MAX_VERTICES];
        let mut bits = mask;
        while bits != 0 {
            let (i, j) = slots[bits.trailing_zeros() as usize];
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
            bits &= bits - 1;
        }
        f(&Graph::from_raw(task.n, adj));
        if rank + 1 < end {
            mask = next_combination(mask);
        }
    }
    end - start
}

/// Visits every graph of the task's shard that passes its filters.
pub fn enumerate_labeled<F: FnMut(&Graph)>(
    task: &EnumerationTask,
    mut visitor: F,
) -> Result<EnumerationStats> {
    task.validate()?;
    let mut passed = 0;
    let visited = walk(task, |g| {
        if task.filters.accepts(g) {
            passed += 1;
            visitor(g);
        }
    });
    Ok(EnumerationStats {
        shard_id: task.shard_id,
        visited,
        passed,
    })
}

/// Runs all `shard_count` shards of `(n, m)` on up to `threads` worker
/// threads. Each shard gets its own state from `init`; results come back in
/// shard order regardless of scheduling.
pub fn run_shards<S, I, V>(
    n: usize,
    m: usize,
    shard_count: usize,
    threads: usize,
    init: I,
    visit: V,
) -> Result<Vec<(EnumerationStats, S)>>
where
    S: Send,
    I: Fn(usize) -> S + Sync,
    V: Fn(&mut S, &Graph) + Sync,
{
    let tasks: Vec<EnumerationTask> = (0..shard_count)
        .map(|id| EnumerationTask::new(n, m)?.with_shard(shard_count, id))
        .collect::<Result<_>>()?;
    let slots: Vec<Mutex<Option<(EnumerationStats, S)>>> =
        (0..shard_count).map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let worker = || loop {
        let id = next.fetch_add(1, Ordering::Relaxed);
        let Some(task) = tasks.get(id) else { break };
        let mut state = init(id);
        let visited = walk(task, |g| visit(&mut state, g));
        let stats = EnumerationStats {
            shard_id: id,
            visited,
            passed: visited,
        };
        *slots[id].lock().expect("shard slot poisoned") = Some((stats, state));
    };
    let threads = threads.clamp(1, shard_count.max(1));
    if threads == 1 {
        worker();
    } else {
        std::thread::scope(|scope| {
            for _ in 0..threads {
                scope.spawn(worker);
            }
        });
    }
    Ok(slots
        .into_iter()
        .map(|s| {
            s.into_inner()
                .expect("shard slot poisoned")
                .expect("every shard ran")
        })
        .collect())
}

/// Isomorphism classes seen so far, each represented by its graph6-least
/// member. With a limit, classes beyond it are counted but not stored.
#[derive(Clone, Debug, Default)]
pub struct ClassCollector {
    buckets: HashMap<Fingerprint, Vec<(String, Graph)>>,
    stored: usize,
    limit: Option<usize>,
    /// Labelled graphs offered.
    pub labeled: u64,
    /// Set once a new class was dropped because of the limit.
    pub truncated: bool,
}

impl ClassCollector {
    pub fn new() -> Self {
        ClassCollector::default()
    }

    pub fn with_limit(limit: usize) -> Self {
        ClassCollector {
            limit: Some(limit),
            ..ClassCollector::default()
        }
    }

    pub fn len(&self) -> usize {
        self.stored
    }

    pub fn is_empty(&self) -> bool {
        self.stored == 0
    }

    pub fn clear(&mut self) {
        self.buckets.clear();
        self.stored = 0;
        self.labeled = 0;
        self.truncated = false;
    }

    pub fn insert(&mut self, g: &Graph) {
        self.labeled += 1;
        self.insert_class(g.clone(), None, 0);
    }

    fn insert_class(&mut self, g: Graph, code: Option<String>, extra_labeled: u64) {
        self.labeled += extra_labeled;
        let code = code.unwrap_or_else(|| g.to_graph6().expect("enumerated graphs fit graph6"));
        let bucket = self.buckets.entry(Fingerprint::of(&g)).or_default();
        if let Some(slot) = bucket.iter_mut().find(|(_, rep)| are_isomorphic(rep, &g)) {
            if code < slot.0 {
                *slot = (code, g);
            }
            return;
        }
        if self.limit.is_some_and(|l| self.stored >= l) {
            self.truncated = true;
            return;
        }
        bucket.push((code, g));
        self.stored += 1;
    }

    pub fn merge(&mut self, other: ClassCollector) {
        self.truncated |= other.truncated;
        self.labeled += other.labeled;
        for (code, g) in other.buckets.into_values().flatten() {
            self.insert_class(g, Some(code), 0);
        }
    }

    /// Representatives sorted by graph6 string.
    pub fn representatives(&self) -> Vec<(String, Graph)> {
        let mut reps: Vec<(String, Graph)> = self.buckets.values().flatten().cloned().collect();
        reps.sort_by(|a, b| a.0.cmp(&b.0));
        reps
    }
}

/// One representative per isomorphism class (the graph6-least member),
/// sorted by graph6 string.
pub fn reduce_to_isomorphism_classes(graphs: &[Graph]) -> Result<Vec<Graph>> {
    let mut classes = ClassCollector::new();
    for g in graphs {
        g.to_graph6()?;
        classes.insert(g);
    }
    Ok(classes
        .representatives()
        .into_iter()
        .map(|(_, g)| g)
        .collect())
}

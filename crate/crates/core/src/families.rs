//! Named extremal constructions and their closed-form invariants.
//!
//! Every generator places vertices canonically (classes and parts occupy
//! consecutive index ranges, special vertices are the first ones of their
//! class) so that graph6 output is reproducible.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `K_{i,m}` with classes `X = 0..i`, `Y = i..i+m`.
    CompleteBipartite { i: usize, m: usize },
    /// `K_{i,m}` plus the edge `{0, 1}` inside `X`.
    KMinus { i: usize, m: usize },
    /// `K_{i,m}` plus the path `0 - 1 - 2` inside `X`, minus the edge `{1, i}`.
    KT { i: usize, m: usize },
    /// Balanced complete `r`-partite graph `T_r(n)`.
    Turan { n: usize, r: usize },
    /// `T_{k-1}(n)` plus one edge inside the first part.
    TuranMinus { n: usize, k: usize },
    /// `T_{k-1}(n)` plus `{x, y}` in the first part and `{u, v}` in the
    /// second, minus `{u, x}`.
    TuranSqsubset { n: usize, k: usize },
    /// `K_{⌈n/2⌉,⌊n/2⌋}` with `s - 1` disjoint edges in the larger class, one
    /// edge `{u1, u2}` in the smaller, and `s - t` of the `x_i u1` edges removed.
    KSt { n: usize, s: usize, t: usize },
}

/// Claimed triangle covering number and whether the vertex count meets the
/// condition under which the claim is known to hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauClaim {
    pub tau: usize,
    pub valid: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub vertices: usize,
    pub edges: u64,
    pub triangles: Option<u64>,
    /// `(k, number of K_k)` for the Turán-type families.
    pub kcliques: Option<(usize, u64)>,
    pub tau_expected: Option<TauClaim>,
}

fn binom2(x: usize) -> u64 {
    (x * x.saturating_sub(1) / 2) as u64
}

/// `⌊n²/4⌋`.
pub fn mantel_bound(n: usize) -> u64 {
    (n * n / 4) as u64
}

/// Part sizes of `T_r(n)`: `⌈n/r⌉` repeated `n mod r` times, then `⌊n/r⌋`.
pub fn turan_part_sizes(n: usize, r: usize) -> Result<Vec<usize>> {
    if r == 0 || r > n {
        return Err(Error::InvalidFamily(format!(
            "Turán graph needs 1 <= r <= n, got n={n}, r={r}"
        )));
    }
    let (q, rem) = (n / r, n % r);
    Ok((0..r).map(|j| if j < rem { q + 1 } else { q }).collect())
}

/// `t_r(n)`, the number of edges of `T_r(n)`.
pub fn turan_edge_count(n: usize, r: usize) -> Result<u64> {
    let parts = turan_part_sizes(n, r)?;
    Ok(binom2(n) - parts.iter().map(|&p| binom2(p)).sum::<u64>())
}

/// Sum over all triples of parts of the product of their sizes.
fn triple_products(parts: &[usize]) -> u64 {
    // e1, e2, e3 of the part sizes
    let (mut e1, mut e2, mut e3) = (0u64, 0u64, 0u64);
    for &p in parts {
        let p = p as u64;
        e3 += e2 * p;
        e2 += e1 * p;
        e1 += p;
    }
    e3
}

impl FamilySpec {
    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilySpec::CompleteBipartite { i, m }
            | FamilySpec::KMinus { i, m }
            | FamilySpec::KT { i, m } => i + m,
            FamilySpec::Turan { n, .. }
            | FamilySpec::TuranMinus { n, .. }
            | FamilySpec::TuranSqsubset { n, .. }
            | FamilySpec::KSt { n, .. } => n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamily(format!("{self}: {msg}")));
        if self.vertex_count() > MAX_VERTICES {
            return bad(format!("more than {MAX_VERTICES} vertices"));
        }
        match *self {
            FamilySpec::CompleteBipartite { .. } => Ok(()),
            FamilySpec::KMinus { i, .. } if i < 2 => bad("needs i >= 2".into()),
            FamilySpec::KMinus { .. } => Ok(()),
            FamilySpec::KT { i, m } if i < 3 || m < 1 => bad("needs i >= 3 and m >= 1".into()),
            FamilySpec::KT { .. } => Ok(()),
            FamilySpec::Turan { n, r } => turan_part_sizes(n, r).map(|_| ()),
            FamilySpec::TuranMinus { n, k } => {
                if k < 3 {
                    return bad("needs k >= 3".into());
                }
                let parts = turan_part_sizes(n, k - 1)?;
                if parts[0] < 2 {
                    return bad("first part needs two vertices".into());
                }
                Ok(())
            }
            FamilySpec::TuranSqsubset { n, k } => {
                if k < 3 {
                    return bad("needs k >= 3".into());
                }
                let parts = turan_part_sizes(n, k - 1)?;
                if parts[0] < 2 || parts[1] < 2 {
                    return bad("first two parts need two vertices each".into());
                }
                Ok(())
            }
            FamilySpec::KSt { n, s, t } => {
                if !(0 < t && t < s) {
                    return bad("needs 0 < t < s".into());
                }
                if n.div_ceil(2) < 2 * (s - 1) || n / 2 < 2 {
                    return bad("needs ⌈n/2⌉ >= 2(s-1) and ⌊n/2⌋ >= 2".into());
                }
                Ok(())
            }
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        match *self {
            FamilySpec::CompleteBipartite { i, m } => complete_bipartite(i, m),
            FamilySpec::KMinus { i, m } => k_minus(i, m),
            FamilySpec::KT { i, m } => k_t(i, m),
            FamilySpec::Turan { n, r } => turan(n, r),
            FamilySpec::TuranMinus { n, k } => turan_minus(n, k),
            FamilySpec::TuranSqsubset { n, k } => turan_sqsubset(n, k),
            FamilySpec::KSt { n, s, t } => k_st(n, s, t),
        }
    }

    /// Closed-form invariants; no graph is built.
    pub fn predict(&self) -> Result<Prediction> {
        self.validate()?;
        let vertices = self.vertex_count();
        let p = match *self {
            FamilySpec::CompleteBipartite { i, m } => Prediction {
                vertices,
                edges: (i * m) as u64,
                triangles: Some(0),
                kcliques: None,
                tau_expected: Some(TauClaim {
                    tau: 0,
                    valid: true,
                }),
            },
            FamilySpec::KMinus { i, m } => Prediction {
                vertices,
                edges: (i * m) as u64 + 1,
                // the extra edge sees all of Y
                triangles: Some(m as u64),
                kcliques: None,
                tau_expected: Some(TauClaim {
                    tau: usize::from(m >= 1),
                    valid: true,
                }),
            },
            FamilySpec::KT { i, m } => Prediction {
                vertices,
                edges: (i * m) as u64 + 1,
                // both path edges see Y minus w
                triangles: Some(2 * (m as u64 - 1)),
                kcliques: None,
                tau_expected: Some(TauClaim {
                    tau: usize::from(m >= 2),
                    valid: true,
                }),
            },
            FamilySpec::Turan { n, r } => {
                let parts = turan_part_sizes(n, r)?;
                Prediction {
                    vertices,
                    edges: turan_edge_count(n, r)?,
                    triangles: Some(triple_products(&parts)),
                    kcliques: Some((r + 1, 0)),
                    tau_expected: None,
                }
            }
            FamilySpec::TuranMinus { n, k } => {
                let parts = turan_part_sizes(n, k - 1)?;
                Prediction {
                    vertices,
                    edges: turan_edge_count(n, k - 1)? + 1,
                    triangles: Some(triple_products(&parts) + (n - parts[0]) as u64),
                    kcliques: Some((k, parts[1..].iter().map(|&p| p as u64).product())),
                    tau_expected: None,
                }
            }
            FamilySpec::TuranSqsubset { n, k } => {
                let parts = turan_part_sizes(n, k - 1)?;
                let rest: u64 = parts[2..].iter().map(|&p| p as u64).product();
                Prediction {
                    vertices,
                    edges: turan_edge_count(n, k - 1)? + 1,
                    // gains n - |V1| and n - |V2|, loses the n - |V1| - |V2|
                    // triangles on {u, x} plus {x, y, u} and {u, v, x}
                    triangles: Some(triple_products(&parts) + n as u64 - 2),
                    kcliques: Some((k, (parts[0] + parts[1] - 2) as u64 * rest)),
                    tau_expected: None,
                }
            }
            FamilySpec::KSt { n, s, t } => {
                let (hi, lo) = (n.div_ceil(2) as u64, (n / 2) as u64);
                let (s64, t64) = (s as u64, t as u64);
                Prediction {
                    vertices,
                    edges: mantel_bound(n) + t64,
                    triangles: Some((s64 - 1) * lo + hi - 2 * (s64 - t64)),
                    kcliques: None,
                    tau_expected: Some(TauClaim {
                        tau: s,
                        valid: hi > 2 * (s64 - 1) && lo > s64,
                    }),
                }
            }
        };
        Ok(p)
    }

    /// Every valid spec on at most `max_n` vertices.
    pub fn all_up_to(max_n: usize) -> Vec<FamilySpec> {
        let mut out = Vec::new();
        for n in 0..=max_n.min(MAX_VERTICES) {
            for i in 0..=n {
                let m = n - i;
                out.push(FamilySpec::CompleteBipartite { i, m });
                out.push(FamilySpec::KMinus { i, m });
                out.push(FamilySpec::KT { i, m });
            }
            for r in 1..=n {
                out.push(FamilySpec::Turan { n, r });
            }
            for k in 3..=n + 1 {
                out.push(FamilySpec::TuranMinus { n, k });
                out.push(FamilySpec::TuranSqsubset { n, k });
            }
            for s in 2..=n {
                for t in 1..s {
                    out.push(FamilySpec::KSt { n, s, t });
                }
            }
        }
        out.retain(|s| s.validate().is_ok());
        out
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::CompleteBipartite { i, m } => write!(f, "bip:{i},{m}"),
            FamilySpec::KMinus { i, m } => write!(f, "kminus:{i},{m}"),
            FamilySpec::KT { i, m } => write!(f, "kt:{i},{m}"),
            FamilySpec::Turan { n, r } => write!(f, "turan:{n},{r}"),
            FamilySpec::TuranMinus { n, k } => write!(f, "turanminus:{n},{k}"),
            FamilySpec::TuranSqsubset { n, k } => write!(f, "turansq:{n},{k}"),
            FamilySpec::KSt { n, s, t } => write!(f, "kst:{n},{s},{t}"),
        }
    }
}

/// Parses `kind:a,b[,c]`, e.g. `kminus:3,4`, `turan:9,3`, `kst:10,2,1`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFamily(format!("cannot parse family spec {s:?}"));
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        let args: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let spec = match (kind.trim().to_ascii_lowercase().as_str(), args.as_slice()) {
            ("bip" | "kbip" | "complete_bipartite", &[i, m]) => {
                FamilySpec::CompleteBipartite { i, m }
            }
            ("kminus" | "k_minus", &[i, m]) => FamilySpec::KMinus { i, m },
            ("kt" | "k_t", &[i, m]) => FamilySpec::KT { i, m },
            ("turan", &[n, r]) => FamilySpec::Turan { n, r },
            ("turanminus" | "turan_minus", &[n, k]) => FamilySpec::TuranMinus { n, k },
            ("turansq" | "turan_sqsubset", &[n, k]) => FamilySpec::TuranSqsubset { n, k },
            ("kst" | "k_st", &[n, s, t]) => FamilySpec::KSt { n, s, t },
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn bipartite_base(i: usize, m: usize) -> Result<Graph> {
    let mut g = Graph::empty(i + m)?;
    for x in 0..i {
        for y in i..i + m {
            g.add_edge(x, y)?;
        }
    }
    Ok(g)
}

pub fn complete_bipartite(i: usize, m: usize) -> Result<Graph> {
    FamilySpec::CompleteBipartite { i, m }.validate()?;
    bipartite_base(i, m)
}

pub fn k_minus(i: usize, m: usize) -> Result<Graph> {
    FamilySpec::KMinus { i, m }.validate()?;
    let mut g = bipartite_base(i, m)?;
    g.add_edge(0, 1)?;
    Ok(g)
}

pub fn k_t(i: usize, m: usize) -> Result<Graph> {
    FamilySpec::KT { i, m }.validate()?;
    let (j, z, k, w) = (0, 1, 2, i);
    let mut g = bipartite_base(i, m)?;
    g.add_edge(j, z)?;
    g.add_edge(z, k)?;
    g.remove_edge(z, w)?;
    Ok(g)
}

/// Vertex ranges of the parts of `T_r(n)`.
fn part_ranges(n: usize, r: usize) -> Result<Vec<std::ops::Range<usize>>> {
    let mut start = 0;
    Ok(turan_part_sizes(n, r)?
        .into_iter()
        .map(|p| {
            let range = start..start + p;
            start += p;
            range
        })
        .collect())
}

pub fn turan(n: usize, r: usize) -> Result<Graph> {
    FamilySpec::Turan { n, r }.validate()?;
    let ranges = part_ranges(n, r)?;
    let mut g = Graph::empty(n)?;
    for (a, pa) in ranges.iter().enumerate() {
        for pb in &ranges[a + 1..] {
            for u in pa.clone() {
                for v in pb.clone() {
                    g.add_edge(u, v)?;
                }
            }
        }
    }
    Ok(g)
}

pub fn turan_minus(n: usize, k: usize) -> Result<Graph> {
    FamilySpec::TuranMinus { n, k }.validate()?;
    let v1 = part_ranges(n, k - 1)?[0].start;
    let mut g = turan(n, k - 1)?;
    g.add_edge(v1, v1 + 1)?;
    Ok(g)
}

pub fn turan_sqsubset(n: usize, k: usize) -> Result<Graph> {
    FamilySpec::TuranSqsubset { n, k }.validate()?;
    let ranges = part_ranges(n, k - 1)?;
    let (x, y) = (ranges[0].start, ranges[0].start + 1);
    let (u, v) = (ranges[1].start, ranges[1].start + 1);
    let mut g = turan(n, k - 1)?;
    g.add_edge(x, y)?;
    g.add_edge(u, v)?;
    g.remove_edge(u, x)?;
    Ok(g)
}

pub fn k_st(n: usize, s: usize, t: usize) -> Result<Graph> {
    FamilySpec::KSt { n, s, t }.validate()?;
    let big = n.div_ceil(2);
    let (u1, u2) = (big, big + 1);
    let mut g = bipartite_base(big, n / 2)?;
    for idx in 0..s - 1 {
        g.add_edge(2 * idx, 2 * idx + 1)?;
    }
    g.add_edge(u1, u2)?;
    for idx in 0..s - t {
        g.remove_edge(2 * idx, u1)?;
    }
    Ok(g)
}

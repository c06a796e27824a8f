//! Simple graphs, complete multipartite graphs, cut sets and the König path.
//!
//! Vertices are 1-based throughout. Internally a vertex set is a `u64`
//! bitmask with vertex `v` at bit `v - 1`, so graphs are limited to 64
//! vertices.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Default cap on the vertex count for [`cut_sets`] (enumeration is `2^n`).
pub const CUT_SET_MAX_VERTICES: usize = 16;

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << (v - 1)
}

fn mask_to_vertices(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        let b = mask.trailing_zeros() as usize;
        out.push(b + 1);
        mask &= mask - 1;
    }
    out
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<u64>,
}

#[derive(Deserialize)]
struct GraphFile {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    /// Builds a graph on `[n]`. Rejects loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph(
                "graph needs at least one vertex".into(),
            ));
        }
        if n > MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "vertex count",
                size: n,
                limit: MAX_VERTICES,
            });
        }
        let mut g = SimpleGraph {
            n,
            edges: BTreeSet::new(),
            adj: vec![0; n + 1],
        };
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{u},{v}}} outside [1,{n}]"
                )));
            }
            let e = (u.min(v), u.max(v));
            if !g.edges.insert(e) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {{{},{}}}",
                    e.0, e.1
                )));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::new(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))))
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|u| (u, u + 1)))
    }

    /// Parses `{"n": int, "edges": [[u, v], ...]}` with 1-based vertices.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| Error::InvalidGraph(e.to_string()))?;
        Self::new(file.n, file.edges.into_iter().map(|[u, v]| (u, v)))
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        u != v && u >= 1 && u <= self.n && v >= 1 && v <= self.n && self.adj[u] & bit(v) != 0
    }

    /// Number of connected components of the induced subgraph on `mask`.
    fn component_count(&self, mask: u64) -> usize {
        let mut left = mask;
        let mut count = 0;
        while left != 0 {
            count += 1;
            let mut frontier = left & left.wrapping_neg();
            let mut seen = frontier;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize + 1;
                frontier &= frontier - 1;
                let new = self.adj[v] & mask & !seen;
                seen |= new;
                frontier |= new;
            }
            left &= !seen;
        }
        count
    }

    fn components_of(&self, mask: u64) -> Vec<Vec<usize>> {
        let mut left = mask;
        let mut out = Vec::new();
        while left != 0 {
            let mut frontier = left & left.wrapping_neg();
            let mut seen = frontier;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize + 1;
                frontier &= frontier - 1;
                let new = self.adj[v] & mask & !seen;
                seen |= new;
                frontier |= new;
            }
            out.push(mask_to_vertices(seen));
            left &= !seen;
        }
        out
    }

    /// Connected components of `G \ removed`, each sorted, ordered by least
    /// vertex.
    pub fn components_without(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let mut mask = full_mask(self.n);
        for &v in removed {
            if v >= 1 && v <= self.n {
                mask &= !bit(v);
            }
        }
        self.components_of(mask)
    }
}

/// Partition of the vertex set into maximal connected sets, ordered by least
/// vertex. `c(G)` is the length of the result.
pub fn connected_components(g: &SimpleGraph) -> Vec<Vec<usize>> {
    g.components_of(full_mask(g.n))
}

/// A member `T` of `C(G)` together with `c(T)`, the number of components of
/// `G \ T`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutSet {
    pub vertices: Vec<usize>,
    pub components: usize,
}

/// All vertex sets with the cut point property, `∅` included.
///
/// `T` qualifies when every `v ∈ T` is a cut point of `G \ (T \ {v})`, i.e.
/// putting `v` back strictly lowers the component count. Brute force over all
/// `2^n` subsets with a memoized component count per subset; `cap` bounds `n`.
pub fn cut_sets(g: &SimpleGraph, cap: usize) -> Result<Vec<CutSet>> {
    if g.n > cap {
        return Err(Error::SizeLimit {
            what: "cut-set enumeration vertex count",
            size: g.n,
            limit: cap,
        });
    }
    let full = full_mask(g.n);
    let total = 1usize << g.n;
    // counts[t] = c(G \ T) for the subset T encoded by t.
    let counts: Vec<usize> = (0..total as u64)
        .map(|t| g.component_count(full & !t))
        .collect();
    let mut out: Vec<CutSet> = (0..total as u64)
        .filter(|&t| {
            let c = counts[t as usize];
            let mut rest = t;
            while rest != 0 {
                let b = rest & rest.wrapping_neg();
                rest &= rest - 1;
                if counts[(t & !b) as usize] >= c {
                    return false;
                }
            }
            true
        })
        .map(|t| CutSet {
            vertices: mask_to_vertices(t),
            components: counts[t as usize],
        })
        .collect();
    out.sort_by(|a, b| {
        a.vertices
            .len()
            .cmp(&b.vertices.len())
            .then_with(|| a.vertices.cmp(&b.vertices))
    });
    Ok(out)
}

/// The instance `(m; n_1 ≤ … ≤ n_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartiteSpec {
    m: usize,
    parts: Vec<usize>,
}

impl PartiteSpec {
    /// Requires `m ≥ 2`, at least two parts, every part positive and the
    /// parts sorted ascending.
    pub fn new(m: usize, parts: Vec<usize>) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidSpec(format!("m = {m}, need m >= 2")));
        }
        if parts.len() < 2 {
            return Err(Error::InvalidSpec(format!(
                "{} part(s), need at least 2",
                parts.len()
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidSpec("part sizes must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidSpec(format!(
                "parts {parts:?} are not ascending"
            )));
        }
        let n: usize = parts.iter().sum();
        if n > MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "vertex count",
                size: n,
                limit: MAX_VERTICES,
            });
        }
        Ok(PartiteSpec { m, parts })
    }

    /// Like [`PartiteSpec::new`] but sorts the parts first. The flag reports
    /// whether the input order changed.
    pub fn sorted(m: usize, mut parts: Vec<usize>) -> Result<(Self, bool)> {
        let reordered = parts.windows(2).any(|w| w[0] > w[1]);
        parts.sort_unstable();
        Ok((Self::new(m, parts)?, reordered))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn r(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Largest part `n_r`.
    pub fn largest(&self) -> usize {
        *self.parts.last().unwrap()
    }

    /// 1-based index of the first part of size at least two.
    pub fn s(&self) -> Option<usize> {
        self.parts.iter().position(|&p| p >= 2).map(|i| i + 1)
    }

    /// `n_s`, the smallest part size that is at least two.
    pub fn n_s(&self) -> Option<usize> {
        self.s().map(|s| self.parts[s - 1])
    }

    pub fn all_ones(&self) -> bool {
        self.s().is_none()
    }

    /// `V_k` for 1-based `k`.
    pub fn block(&self, k: usize) -> RangeInclusive<usize> {
        let start: usize = self.parts[..k - 1].iter().sum::<usize>() + 1;
        start..=start + self.parts[k - 1] - 1
    }

    /// `T_k`, the union of all blocks other than `V_k`.
    pub fn complement(&self, k: usize) -> Vec<usize> {
        let b = self.block(k);
        (1..=self.n()).filter(|v| !b.contains(v)).collect()
    }

    /// Index of the block containing vertex `v`.
    pub fn part_of(&self, v: usize) -> usize {
        let mut end = 0;
        for (i, &p) in self.parts.iter().enumerate() {
            end += p;
            if v <= end {
                return i + 1;
            }
        }
        panic!("vertex {v} outside [1, {}]", self.n());
    }
}

impl std::fmt::Display for PartiteSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "m={} K_{{{}}}", self.m, parts.join(","))
    }
}

/// The graph on `[n]` whose edges are exactly the pairs lying in different
/// blocks.
pub fn complete_multipartite(spec: &PartiteSpec) -> SimpleGraph {
    let n = spec.n();
    let edges = (1..=n).flat_map(|u| {
        (u + 1..=n)
            .filter(move |&v| spec.part_of(u) != spec.part_of(v))
            .map(move |v| (u, v))
    });
    SimpleGraph::new(n, edges).expect("multipartite edges are valid")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PathConstruction {
    /// Alternate the largest block with the others, `n'+1, 1, n'+2, 2, …`.
    Interleaved,
    /// Always continue in a largest remaining block not holding the endpoint.
    GreedyLargestPart,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PathWitness {
    pub vertices: Vec<usize>,
    pub target_length: usize,
    pub construction: PathConstruction,
}

impl PathWitness {
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    /// Distinct vertices, consecutive ones adjacent in `g`, and length equal
    /// to the target.
    pub fn is_valid_in(&self, g: &SimpleGraph) -> bool {
        let distinct: BTreeSet<_> = self.vertices.iter().collect();
        distinct.len() == self.vertices.len()
            && self.length() == self.target_length
            && self.vertices.windows(2).all(|w| g.is_edge(w[0], w[1]))
    }
}

/// Height of the classical binomial edge ideal `J_G`, `2n - max{n+1, 2n_r}`.
pub fn konig_height(spec: &PartiteSpec) -> usize {
    let n = spec.n();
    2 * n - (n + 1).max(2 * spec.largest())
}

/// A path of length `2n - max{n+1, 2n_r}` in the multipartite graph.
///
/// When the largest block outnumbers all the others together the path
/// alternates between it and the rest. Otherwise the graph is traceable and
/// the path is built greedily: start in the last block and keep stepping into
/// a block with the most unused vertices (ties: larger original block, then
/// lower index) other than the current one. The result is validated before it
/// is returned.
pub fn konig_path(spec: &PartiteSpec) -> Result<PathWitness> {
    let n = spec.n();
    let nr = spec.largest();
    let n_prime = n - nr;
    let target = konig_height(spec);
    let witness = if nr > n_prime {
        let mut vertices = Vec::with_capacity(2 * n_prime + 1);
        for i in 1..=n_prime {
            vertices.push(n_prime + i);
            vertices.push(i);
        }
        vertices.push(2 * n_prime + 1);
        PathWitness {
            vertices,
            target_length: target,
            construction: PathConstruction::Interleaved,
        }
    } else {
        let r = spec.r();
        let mut next: Vec<usize> = (1..=r).map(|k| *spec.block(k).start()).collect();
        let mut remaining: Vec<usize> = spec.parts().to_vec();
        let mut vertices = Vec::with_capacity(n);
        let mut current = r;
        vertices.push(next[r - 1]);
        next[r - 1] += 1;
        remaining[r - 1] -= 1;
        while vertices.len() < n {
            let pick = (1..=r)
                .filter(|&k| k != current && remaining[k - 1] > 0)
                .max_by(|&a, &b| {
                    remaining[a - 1]
                        .cmp(&remaining[b - 1])
                        .then(spec.parts()[a - 1].cmp(&spec.parts()[b - 1]))
                        .then(b.cmp(&a))
                })
                .ok_or_else(|| {
                    Error::Construction(format!("stuck after {} vertices", vertices.len()))
                })?;
            vertices.push(next[pick - 1]);
            next[pick - 1] += 1;
            remaining[pick - 1] -= 1;
            current = pick;
        }
        PathWitness {
            vertices,
            target_length: target,
            construction: PathConstruction::GreedyLargestPart,
        }
    };
    if !witness.is_valid_in(&complete_multipartite(spec)) {
        return Err(Error::Construction(format!(
            "path {:?} is not a valid path of length {target}",
            witness.vertices
        )));
    }
    Ok(witness)
}

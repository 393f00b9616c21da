//! Immutable undirected simple graphs and their degree sequences.
//!
//! A [`Graph`] stores its edges as a flat sorted list of `(min, max)` pairs
//! plus a CSR-style offset array, so degree lookup is O(1) and edge iteration
//! is cache-friendly. Construction canonicalizes arbitrary pair lists:
//! self-loops are dropped, duplicate edges (in either orientation) collapse,
//! and out-of-range endpoints are rejected.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({i}, {j}) has an endpoint outside [0, {n})")]
    EndpointOutOfRange { i: usize, j: usize, n: usize },
}

/// What construction had to clean up; surfaced in network summaries.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BuildDiagnostics {
    pub self_loops_dropped: usize,
    pub duplicates_collapsed: usize,
}

/// Undirected simple graph on nodes `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Canonical edge list: each edge as `(min, max)`, lexicographically sorted.
    edges: Vec<(u32, u32)>,
    /// `offsets[i + 1] - offsets[i]` is the degree of node `i`.
    offsets: Vec<usize>,
}

impl Graph {
    /// Canonicalize `pairs` into a graph on `0..n`. Duplicates and self-loops
    /// are tolerated and counted; endpoints outside `[0, n)` are an error.
    pub fn build(n: usize, pairs: &[(usize, usize)]) -> Result<(Self, BuildDiagnostics), GraphError> {
        let mut diag = BuildDiagnostics::default();
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(GraphError::EndpointOutOfRange { i: a, j: b, n });
            }
            if a == b {
                diag.self_loops_dropped += 1;
                continue;
            }
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            edges.push((lo as u32, hi as u32));
        }
        edges.sort_unstable();
        let before = edges.len();
        edges.dedup();
        diag.duplicates_collapsed = before - edges.len();
        Ok((Self::from_canonical_edges(n, edges), diag))
    }

    /// Like [`Graph::build`] but discards the cleanup counts.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        Ok(Self::build(n, pairs)?.0)
    }

    /// `edges` must already be sorted, deduplicated `(min, max)` pairs with
    /// endpoints below `n`. Used by the sampler, whose row-major pair loop
    /// produces canonical order for free.
    pub(crate) fn from_canonical_edges(n: usize, edges: Vec<(u32, u32)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(i, j)| i < j && (j as usize) < n));
        let mut offsets = vec![0usize; n + 1];
        for &(i, j) in &edges {
            offsets[i as usize + 1] += 1;
            offsets[j as usize + 1] += 1;
        }
        for k in 0..n {
            offsets[k + 1] += offsets[k];
        }
        Self { n, edges, offsets }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical `(min, max)` edge list, lexicographically sorted.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    #[inline]
    pub fn degree(&self, i: usize) -> usize {
        self.offsets[i + 1] - self.offsets[i]
    }

    pub fn degrees(&self) -> DegreeSequence {
        let degrees = (0..self.n).map(|i| self.degree(i) as u32).collect();
        DegreeSequence { degrees }
    }

    /// Highest number of edges a simple graph on `n` nodes can have.
    pub fn max_edges(n: usize) -> usize {
        n * n.saturating_sub(1) / 2
    }
}

/// Per-node degrees of a [`Graph`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSequence {
    degrees: Vec<u32>,
}

impl DegreeSequence {
    pub fn as_slice(&self) -> &[u32] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Sum of all degrees; equals twice the edge count.
    pub fn total(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).sum()
    }

    pub fn max(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn min(&self) -> u32 {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    /// Middle element for an odd count, mean of the two middle elements for an
    /// even count; 0 for an empty sequence.
    pub fn median(&self) -> f64 {
        if self.degrees.is_empty() {
            return 0.0;
        }
        let mut sorted = self.degrees.clone();
        sorted.sort_unstable();
        let mid = sorted.len() / 2;
        if sorted.len() % 2 == 1 {
            sorted[mid] as f64
        } else {
            (sorted[mid - 1] as f64 + sorted[mid] as f64) / 2.0
        }
    }
}

//! Seeded sampling from the inhomogeneous random-graph model
//! `P(edge {i,j}) = p * f_ij`.
//!
//! Each unordered pair gets one counter-based draw keyed by `(seed, i, j)`,
//! so the sampled edge set is a pure function of the configuration: identical
//! seeds give bit-identical graphs regardless of thread count, and row ranges
//! of the pair loop parallelize freely.

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::Graph;
use crate::kernel::{exp_node_factors, Kernel, KernelError};
use crate::rng::{philox4x64, stream, unit_f64};

#[derive(Debug, Error, PartialEq)]
pub enum GeneratorError {
    #[error("edge-scale probability must be in [0, 1] (got {0})")]
    InvalidProbability(f64),
    #[error("sparsity bound needs n >= 2 (got {0})")]
    TooFewNodes(usize),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// Everything that determines one sampled graph.
#[derive(Clone, Debug)]
pub struct SampleConfig {
    pub n: usize,
    pub p: f64,
    pub kernel: Kernel,
    pub seed: u64,
}

/// Draw one graph. See [`sample_with`] for the borrowing form used in
/// replicate loops.
pub fn sample_graph(cfg: &SampleConfig) -> Result<Graph, GeneratorError> {
    sample_with(cfg.n, cfg.p, &cfg.kernel, cfg.seed)
}

/// Draw one graph from `G(n, p, f)` without taking ownership of the kernel.
pub fn sample_with(n: usize, p: f64, kernel: &Kernel, seed: u64) -> Result<Graph, GeneratorError> {
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(GeneratorError::InvalidProbability(p));
    }
    if let Kernel::Matrix(m) = kernel {
        if m.n() != n {
            return Err(KernelError::SizeMismatch { expected: m.n(), got: n }.into());
        }
    }
    // Per-pair inclusion thresholds p * f_ij, expressed per row.
    let exp_factors = match kernel {
        Kernel::Exponential { kappa } => Some(exp_node_factors(*kappa, n)),
        _ => None,
    };
    let threshold = |i: usize, j: usize| -> f64 {
        match kernel {
            Kernel::Constant => p,
            Kernel::Exponential { .. } => {
                let a = exp_factors.as_ref().unwrap();
                p * a[i] * a[j]
            }
            Kernel::Matrix(m) => p * m.get(i, j),
        }
    };

    let key = [seed, stream::EDGE];
    let rows: Vec<Vec<(u32, u32)>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut row = Vec::new();
            if i + 1 >= n {
                return row;
            }
            // One Philox block covers four consecutive columns; the draw for
            // pair (i, j) depends only on (seed, i, j), never on the schedule.
            let first_block = (i + 1) / 4;
            let last_block = (n - 1) / 4;
            for block_idx in first_block..=last_block {
                let block = philox4x64([i as u64, block_idx as u64, 0, 0], key);
                for (lane, &word) in block.iter().enumerate() {
                    let j = 4 * block_idx + lane;
                    if j > i && j < n && unit_f64(word) < threshold(i, j) {
                        row.push((i as u32, j as u32));
                    }
                }
            }
            row
        })
        .collect();

    let mut edges = Vec::with_capacity(rows.iter().map(Vec::len).sum());
    for row in rows {
        edges.extend(row);
    }
    Ok(Graph::from_canonical_edges(n, edges))
}

/// The density floor `log n / (n log 2)` below which the limit theory is not
/// guaranteed to apply.
pub fn sparsity_bound(n: usize) -> Result<f64, GeneratorError> {
    if n < 2 {
        return Err(GeneratorError::TooFewNodes(n));
    }
    Ok((n as f64).ln() / (n as f64 * std::f64::consts::LN_2))
}

/// Density hypothesis `n p log 2 >= log n`.
pub fn dense_enough(n: usize, p: f64) -> bool {
    n as f64 * p * std::f64::consts::LN_2 >= (n as f64).ln()
}

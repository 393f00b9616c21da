//! Edge-probability kernels for the inhomogeneous random-graph model.
//!
//! A kernel gives the symmetric pairwise factor `f_ij` in
//! `P(edge {i,j}) = p * f_ij`. Every off-diagonal value must sit in
//! `(epsilon, 1]` for a kernel-specific bound `epsilon`; the diagonal is
//! undefined and excluded from all sums.

use serde::Serialize;
use thiserror::Error;

use crate::numeric::NeumaierSum;

#[derive(Debug, Error, PartialEq)]
pub enum KernelError {
    #[error("kappa must be positive and finite (got {0})")]
    InvalidKappa(f64),
    #[error("kernel value f({0}, {0}) is undefined on the diagonal")]
    DiagonalQuery(usize),
    #[error("node index {index} outside [0, {n})")]
    NodeOutOfRange { index: usize, n: usize },
    #[error("matrix kernel is {expected}x{expected} but was used with n = {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("matrix kernel needs at least 2 nodes (got {0})")]
    MatrixTooSmall(usize),
    #[error("matrix kernel has {got} values, expected {expected} for an {n}x{n} matrix")]
    BadValueCount { n: usize, expected: usize, got: usize },
    #[error("matrix kernel entry ({i}, {j}) = {value} outside (0, 1]")]
    EntryOutOfBounds { i: usize, j: usize, value: f64 },
    #[error("matrix kernel is asymmetric at ({i}, {j}): {upper} vs {lower}")]
    Asymmetric { i: usize, j: usize, upper: f64, lower: f64 },
    #[error("aggregates need n >= 2 (got {0})")]
    TooFewNodes(usize),
}

/// Off-diagonal lower bounds below the validated matrix infimum get this much
/// slack so the strict `f_ij > epsilon` inequality holds.
const MATRIX_EPSILON_SLACK: f64 = 1e-12;

/// Symmetric `n x n` kernel values, validated on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelMatrix {
    n: usize,
    values: Vec<f64>,
    min_off_diagonal: f64,
}

impl KernelMatrix {
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.n + j]
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Edge-probability structure `f`.
#[derive(Clone, Debug, PartialEq)]
pub enum Kernel {
    /// `f_ij = 1`: the classical Erdős–Rényi case.
    Constant,
    /// `f_ij = exp(-kappa i/n) * exp(-kappa j/n)` with 0-based node ids.
    Exponential { kappa: f64 },
    /// Explicit symmetric matrix of values in `(0, 1]`.
    Matrix(KernelMatrix),
}

/// Serializable shape tag for reports and CLI output.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum KernelDescriptor {
    Constant,
    Exponential { kappa: f64 },
    Matrix { n: usize },
}

/// Per-node row sums `f_i = sum_{j != i} f_ij`, the exact finite-n aggregates
/// behind every limit formula.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelAggregates {
    row_sums: Vec<f64>,
}

impl KernelAggregates {
    pub fn as_slice(&self) -> &[f64] {
        &self.row_sums
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.row_sums
    }
}

/// `exp(-kappa i/n)` for `i` in `0..n`; the exponential kernel factorizes as
/// `f_ij = a_i a_j` over these.
pub(crate) fn exp_node_factors(kappa: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| (-kappa * i as f64 / n as f64).exp()).collect()
}

impl Kernel {
    pub fn constant() -> Self {
        Kernel::Constant
    }

    pub fn exponential(kappa: f64) -> Result<Self, KernelError> {
        if !(kappa > 0.0 && kappa.is_finite()) {
            return Err(KernelError::InvalidKappa(kappa));
        }
        Ok(Kernel::Exponential { kappa })
    }

    /// Build a matrix kernel from row-major `values`. Symmetry and the
    /// `(0, 1]` bound are enforced entrywise; diagonal entries are ignored.
    pub fn matrix(n: usize, values: Vec<f64>) -> Result<Self, KernelError> {
        if n < 2 {
            return Err(KernelError::MatrixTooSmall(n));
        }
        if values.len() != n * n {
            return Err(KernelError::BadValueCount { n, expected: n * n, got: values.len() });
        }
        let mut min_off = f64::INFINITY;
        for i in 0..n {
            for j in i + 1..n {
                let upper = values[i * n + j];
                let lower = values[j * n + i];
                if upper != lower {
                    return Err(KernelError::Asymmetric { i, j, upper, lower });
                }
                if !(upper > 0.0 && upper <= 1.0) {
                    return Err(KernelError::EntryOutOfBounds { i, j, value: upper });
                }
                min_off = min_off.min(upper);
            }
        }
        Ok(Kernel::Matrix(KernelMatrix { n, values, min_off_diagonal: min_off }))
    }

    pub fn descriptor(&self) -> KernelDescriptor {
        match self {
            Kernel::Constant => KernelDescriptor::Constant,
            Kernel::Exponential { kappa } => KernelDescriptor::Exponential { kappa: *kappa },
            Kernel::Matrix(m) => KernelDescriptor::Matrix { n: m.n },
        }
    }

    /// The lower bound `epsilon` with `f_ij > epsilon` for all off-diagonal
    /// pairs. Constant kernels use 0.5 by convention (every value is 1);
    /// exponential kernels have the tight bound `exp(-2 kappa)`; matrix
    /// kernels use the validated infimum minus a small slack.
    pub fn epsilon(&self) -> f64 {
        match self {
            Kernel::Constant => 0.5,
            Kernel::Exponential { kappa } => (-2.0 * kappa).exp(),
            Kernel::Matrix(m) => m.min_off_diagonal - MATRIX_EPSILON_SLACK,
        }
    }

    /// `f_ij` for a distinct pair of nodes in `[0, n)`.
    pub fn value(&self, i: usize, j: usize, n: usize) -> Result<f64, KernelError> {
        if i == j {
            return Err(KernelError::DiagonalQuery(i));
        }
        for index in [i, j] {
            if index >= n {
                return Err(KernelError::NodeOutOfRange { index, n });
            }
        }
        if let Kernel::Matrix(m) = self {
            if m.n != n {
                return Err(KernelError::SizeMismatch { expected: m.n, got: n });
            }
        }
        Ok(self.value_unchecked(i, j, n))
    }

    #[inline]
    pub(crate) fn value_unchecked(&self, i: usize, j: usize, n: usize) -> f64 {
        debug_assert!(i != j && i < n && j < n);
        match self {
            Kernel::Constant => 1.0,
            Kernel::Exponential { kappa } => {
                let scale = -kappa / n as f64;
                (scale * i as f64).exp() * (scale * j as f64).exp()
            }
            Kernel::Matrix(m) => m.get(i, j),
        }
    }

    /// Exact row sums `f_i`. O(n) for constant and exponential kernels,
    /// O(n^2) for matrix kernels.
    pub fn aggregates(&self, n: usize) -> Result<KernelAggregates, KernelError> {
        if n < 2 {
            return Err(KernelError::TooFewNodes(n));
        }
        let row_sums = match self {
            Kernel::Constant => vec![(n - 1) as f64; n],
            Kernel::Exponential { kappa } => {
                let factors = exp_node_factors(*kappa, n);
                let mut total = NeumaierSum::new();
                for &a in &factors {
                    total.add(a);
                }
                let total = total.total();
                // f_i = a_i * (sum_j a_j - a_i)
                factors.iter().map(|&a| a * (total - a)).collect()
            }
            Kernel::Matrix(m) => {
                if m.n != n {
                    return Err(KernelError::SizeMismatch { expected: m.n, got: n });
                }
                (0..n)
                    .map(|i| {
                        let mut acc = NeumaierSum::new();
                        for j in 0..n {
                            if j != i {
                                acc.add(m.get(i, j));
                            }
                        }
                        acc.total()
                    })
                    .collect()
            }
        };
        Ok(KernelAggregates { row_sums })
    }
}

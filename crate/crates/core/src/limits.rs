//! Theoretical limits of the indices under `G(n, p, f)`.
//!
//! Two evaluation modes are exposed:
//!
//! * **exact sums** — the leading terms
//!   `R_alpha ~ p^{2a+1} sum_{i<j} f_i^a f_j^a f_ij` and
//!   `chi_alpha ~ p^{a+1} sum_{i<j} (f_i + f_j)^a f_ij`
//!   evaluated with exact finite-n aggregates `f_i`. These are the right
//!   comparison targets for Monte Carlo ratios because they carry no
//!   continuum-approximation slack.
//! * **closed forms** — the large-n formulas for the constant kernel
//!   (`n^{2(1+a)} p^{2a+1} / 2` and `2^{a-1} n^{a+2} p^{a+1}`) and for the
//!   exponential kernel, whose sum-connectivity form needs the double
//!   integral `I(kappa, alpha)` evaluated by [`quadrature_double`].

use serde::Serialize;
use thiserror::Error;

use crate::index::{IndexFamily, IndexSpec};
use crate::kernel::{exp_node_factors, Kernel, KernelDescriptor, KernelError};
use crate::numeric::{one_minus_exp_over, pow_alpha, scaled_product, sum_terms, sum_upper_triangle};
use crate::quad::legendre_rule;

#[derive(Debug, Error, PartialEq)]
pub enum LimitError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("limit evaluation needs n >= 2 (got {0})")]
    TooFewNodes(usize),
    #[error("edge-scale probability must be in (0, 1] (got {0})")]
    InvalidProbability(f64),
    #[error("kappa must be positive and finite (got {0})")]
    InvalidKappa(f64),
    #[error("quadrature tolerance must be positive (got {0})")]
    InvalidTolerance(f64),
    #[error(
        "quadrature did not converge by order {max_order}: last refinement moved the estimate by {achieved:e} (tolerance {tolerance:e})"
    )]
    QuadratureDidNotConverge { max_order: usize, achieved: f64, tolerance: f64 },
    #[error("matrix kernels have no closed-form limit; use the exact-sum mode")]
    NoClosedForm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitMode {
    ExactSum,
    ClosedForm,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LimitResult {
    pub value: f64,
    pub mode: LimitMode,
    pub spec: IndexSpec,
    pub n: usize,
    pub p: f64,
    pub kernel: KernelDescriptor,
}

/// Default absolute tolerance for the exponential-kernel double integral.
pub const QUADRATURE_TOL: f64 = 1e-10;

const QUAD_MIN_ORDER: usize = 8;
const QUAD_MAX_ORDER: usize = 1024;

fn validate(n: usize, p: f64) -> Result<(), LimitError> {
    if n < 2 {
        return Err(LimitError::TooFewNodes(n));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(LimitError::InvalidProbability(p));
    }
    Ok(())
}

fn pair_count(n: usize) -> f64 {
    (n as f64) * ((n - 1) as f64) / 2.0
}

/// `sum_{i<j} f_i^a f_j^a f_ij`, rescaled by the largest aggregate so that
/// extreme exponents stay inside f64 range. Returns `(scale, exponent, sum)`
/// with the total equal to `scale^exponent * sum`.
fn randic_pair_sum(n: usize, kernel: &Kernel, alpha: f64) -> Result<(f64, f64, f64), LimitError> {
    if let Kernel::Constant = kernel {
        // f_i = n - 1 and f_ij = 1: the sum collapses to C(n,2) (n-1)^{2a}.
        let f = (n - 1) as f64;
        return Ok((1.0, 0.0, pair_count(n) * pow_alpha(f * f, alpha)));
    }
    let aggregates = kernel.aggregates(n)?.into_vec();
    let scale = aggregates.iter().cloned().fold(f64::MIN, f64::max);
    let powered: Vec<f64> = aggregates.iter().map(|&f| pow_alpha(f / scale, alpha)).collect();
    let sum = match kernel {
        Kernel::Exponential { kappa } => {
            let factors = exp_node_factors(*kappa, n);
            sum_upper_triangle(n, |i, j| powered[i] * powered[j] * factors[i] * factors[j])
        }
        Kernel::Matrix(m) => sum_upper_triangle(n, |i, j| powered[i] * powered[j] * m.get(i, j)),
        Kernel::Constant => unreachable!(),
    };
    Ok((scale, 2.0 * alpha, sum))
}

/// `sum_{i<j} (f_i + f_j)^a f_ij`, rescaled like [`randic_pair_sum`].
fn chi_pair_sum(n: usize, kernel: &Kernel, alpha: f64) -> Result<(f64, f64, f64), LimitError> {
    if let Kernel::Constant = kernel {
        let f = (n - 1) as f64;
        return Ok((1.0, 0.0, pair_count(n) * pow_alpha(2.0 * f, alpha)));
    }
    let aggregates = kernel.aggregates(n)?.into_vec();
    let scale = 2.0 * aggregates.iter().cloned().fold(f64::MIN, f64::max);
    let sum = match kernel {
        Kernel::Exponential { kappa } => {
            let factors = exp_node_factors(*kappa, n);
            sum_upper_triangle(n, |i, j| {
                pow_alpha((aggregates[i] + aggregates[j]) / scale, alpha)
                    * factors[i]
                    * factors[j]
            })
        }
        Kernel::Matrix(m) => sum_upper_triangle(n, |i, j| {
            pow_alpha((aggregates[i] + aggregates[j]) / scale, alpha) * m.get(i, j)
        }),
        Kernel::Constant => unreachable!(),
    };
    Ok((scale, alpha, sum))
}

/// Exact-sum limit of `R_alpha`.
pub fn limit_randic_exact(
    n: usize,
    p: f64,
    kernel: &Kernel,
    alpha: f64,
) -> Result<LimitResult, LimitError> {
    validate(n, p)?;
    let (scale, exponent, sum) = randic_pair_sum(n, kernel, alpha)?;
    let value = scaled_product(&[(p, 2.0 * alpha + 1.0), (scale, exponent)], sum);
    Ok(LimitResult {
        value,
        mode: LimitMode::ExactSum,
        spec: IndexSpec::randic(alpha),
        n,
        p,
        kernel: kernel.descriptor(),
    })
}

/// Exact-sum limit of `chi_alpha`.
pub fn limit_chi_exact(
    n: usize,
    p: f64,
    kernel: &Kernel,
    alpha: f64,
) -> Result<LimitResult, LimitError> {
    validate(n, p)?;
    let (scale, exponent, sum) = chi_pair_sum(n, kernel, alpha)?;
    let value = scaled_product(&[(p, alpha + 1.0), (scale, exponent)], sum);
    Ok(LimitResult {
        value,
        mode: LimitMode::ExactSum,
        spec: IndexSpec::chi(alpha),
        n,
        p,
        kernel: kernel.descriptor(),
    })
}

/// Closed-form Erdős–Rényi limit `n^{2(1+a)} p^{2a+1} / 2` of `R_alpha`.
/// Special cases: `alpha = -1/2` gives `n/2`, `alpha = -1` gives `1/(2p)`.
pub fn limit_er_randic(n: usize, p: f64, alpha: f64) -> LimitResult {
    let value = scaled_product(&[(n as f64, 2.0 * (1.0 + alpha)), (p, 2.0 * alpha + 1.0)], 0.5);
    LimitResult {
        value,
        mode: LimitMode::ClosedForm,
        spec: IndexSpec::randic(alpha),
        n,
        p,
        kernel: KernelDescriptor::Constant,
    }
}

/// Closed-form Erdős–Rényi limit `2^{a-1} n^{a+2} p^{a+1}` of `chi_alpha`.
/// At `alpha = -1` this is `n/4`, so the harmonic limit `2 chi_{-1}` is `n/2`.
pub fn limit_er_chi(n: usize, p: f64, alpha: f64) -> LimitResult {
    let value =
        scaled_product(&[(2.0, alpha - 1.0), (n as f64, alpha + 2.0), (p, alpha + 1.0)], 1.0);
    LimitResult {
        value,
        mode: LimitMode::ClosedForm,
        spec: IndexSpec::chi(alpha),
        n,
        p,
        kernel: KernelDescriptor::Constant,
    }
}

/// Closed-form exponential-kernel limit of `R_alpha`.
///
/// The general expression
/// `n^{2(a+1)} p^{2a+1}/2 * (1-e^{-k})^{2a} (1-e^{-(1+a)k})^2 / ((1+a)^2 k^{2(a+1)})`
/// is evaluated through `phi(s) = (1 - e^{-s})/s` at `s = (1+a)k`, which is
/// finite and continuous at `alpha = -1` where the formula degenerates to
/// `(1/2p) k^2 / (1-e^{-k})^2`.
pub fn limit_exp_randic(n: usize, p: f64, kappa: f64, alpha: f64) -> Result<LimitResult, LimitError> {
    if !(kappa > 0.0 && kappa.is_finite()) {
        return Err(LimitError::InvalidKappa(kappa));
    }
    let phi = one_minus_exp_over((1.0 + alpha) * kappa);
    let one_minus_exp = -(-kappa).exp_m1();
    let value = scaled_product(
        &[
            (n as f64, 2.0 * (alpha + 1.0)),
            (p, 2.0 * alpha + 1.0),
            (one_minus_exp, 2.0 * alpha),
            (kappa, -2.0 * alpha),
        ],
        0.5 * phi * phi,
    );
    Ok(LimitResult {
        value,
        mode: LimitMode::ClosedForm,
        spec: IndexSpec::randic(alpha),
        n,
        p,
        kernel: KernelDescriptor::Exponential { kappa },
    })
}

/// Closed-form exponential-kernel limit of `chi_alpha`:
/// `n^{a+2} p^{a+1}/2 * ((1-e^{-k})/k)^a * I(k, a)` with the double integral
/// evaluated by [`quadrature_double`] at [`QUADRATURE_TOL`].
pub fn limit_exp_chi(n: usize, p: f64, kappa: f64, alpha: f64) -> Result<LimitResult, LimitError> {
    let integral = quadrature_double(kappa, alpha, QUADRATURE_TOL)?;
    let value = scaled_product(
        &[(n as f64, alpha + 2.0), (p, alpha + 1.0), (one_minus_exp_over(kappa), alpha)],
        0.5 * integral,
    );
    Ok(LimitResult {
        value,
        mode: LimitMode::ClosedForm,
        spec: IndexSpec::chi(alpha),
        n,
        p,
        kernel: KernelDescriptor::Exponential { kappa },
    })
}

/// Exact-sum limit for either family.
pub fn limit_exact(
    n: usize,
    p: f64,
    kernel: &Kernel,
    spec: IndexSpec,
) -> Result<LimitResult, LimitError> {
    match spec.family {
        IndexFamily::Randic => limit_randic_exact(n, p, kernel, spec.alpha),
        IndexFamily::Chi => limit_chi_exact(n, p, kernel, spec.alpha),
    }
}

/// Closed-form limit for either family; matrix kernels have none.
pub fn limit_closed(
    n: usize,
    p: f64,
    kernel: &Kernel,
    spec: IndexSpec,
) -> Result<LimitResult, LimitError> {
    match (kernel, spec.family) {
        (Kernel::Constant, IndexFamily::Randic) => Ok(limit_er_randic(n, p, spec.alpha)),
        (Kernel::Constant, IndexFamily::Chi) => Ok(limit_er_chi(n, p, spec.alpha)),
        (Kernel::Exponential { kappa }, IndexFamily::Randic) => {
            limit_exp_randic(n, p, *kappa, spec.alpha)
        }
        (Kernel::Exponential { kappa }, IndexFamily::Chi) => {
            limit_exp_chi(n, p, *kappa, spec.alpha)
        }
        (Kernel::Matrix(_), _) => Err(LimitError::NoClosedForm),
    }
}

/// `I(kappa, alpha) = int_0^1 int_0^1 (e^{-kx} + e^{-ky})^alpha e^{-k(x+y)} dx dy`
/// by tensor-product Gauss–Legendre, doubling the order from 8 until two
/// successive estimates differ by less than `tol`.
///
/// The integrand is smooth and bounded on the closed square for every alpha
/// (the base stays in `[2 e^{-kappa}, 2]`), so convergence is fast.
pub fn quadrature_double(kappa: f64, alpha: f64, tol: f64) -> Result<f64, LimitError> {
    if !(kappa > 0.0 && kappa.is_finite()) {
        return Err(LimitError::InvalidKappa(kappa));
    }
    if tol <= 0.0 || tol.is_nan() {
        return Err(LimitError::InvalidTolerance(tol));
    }
    let mut order = QUAD_MIN_ORDER;
    let mut prev = tensor_estimate(kappa, alpha, order);
    let mut achieved = f64::INFINITY;
    while order < QUAD_MAX_ORDER {
        order *= 2;
        let cur = tensor_estimate(kappa, alpha, order);
        achieved = (cur - prev).abs();
        if achieved < tol {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(LimitError::QuadratureDidNotConverge { max_order: QUAD_MAX_ORDER, achieved, tolerance: tol })
}

fn tensor_estimate(kappa: f64, alpha: f64, order: usize) -> f64 {
    let (nodes, weights) = legendre_rule(order);
    // map [-1, 1] to [0, 1] and precompute e^{-kappa x} per axis
    let exps: Vec<f64> = nodes.iter().map(|&t| (-kappa * 0.5 * (t + 1.0)).exp()).collect();
    let w: Vec<f64> = weights.iter().map(|&w| 0.5 * w).collect();
    sum_terms(order * order, |k| {
        let (a, b) = (k / order, k % order);
        w[a] * w[b] * pow_alpha(exps[a] + exps[b], alpha) * exps[a] * exps[b]
    })
}

//! Floating-point accumulation and power evaluation shared by the index and
//! limit engines.
//!
//! All sums over edges or node pairs go through the helpers here so that the
//! result is independent of how many worker threads are active: work is split
//! into fixed-size chunks, each chunk is summed sequentially, and the chunk
//! partials are folded in chunk order.

use rayon::prelude::*;

/// Neumaier compensated accumulator.
#[derive(Clone, Copy, Debug, Default)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    /// Fold another accumulator into this one. Merging partials in a fixed
    /// order keeps chunked reductions deterministic.
    #[inline]
    pub fn merge(&mut self, other: NeumaierSum) {
        self.add(other.sum);
        self.add(other.comp);
    }

    #[inline]
    pub fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Flat index ranges are split into chunks of this many terms.
const CHUNK: usize = 1 << 15;

/// Pair sums are split into blocks of this many rows.
const ROW_CHUNK: usize = 64;

/// Compensated sum of `term(0) + term(1) + ... + term(len - 1)`.
///
/// Chunks run in parallel; partials are merged in chunk order, so the result
/// does not depend on the thread count or schedule.
pub fn sum_terms<F>(len: usize, term: F) -> f64
where
    F: Fn(usize) -> f64 + Sync,
{
    if len <= CHUNK {
        let mut acc = NeumaierSum::new();
        for k in 0..len {
            acc.add(term(k));
        }
        return acc.total();
    }
    let chunks = len.div_ceil(CHUNK);
    let partials: Vec<NeumaierSum> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * CHUNK;
            let hi = ((c + 1) * CHUNK).min(len);
            let mut acc = NeumaierSum::new();
            for k in lo..hi {
                acc.add(term(k));
            }
            acc
        })
        .collect();
    let mut acc = NeumaierSum::new();
    for p in partials {
        acc.merge(p);
    }
    acc.total()
}

/// Compensated sum of `term(i, j)` over the strict upper triangle
/// `0 <= i < j < n`, parallel over fixed row blocks.
pub fn sum_upper_triangle<F>(n: usize, term: F) -> f64
where
    F: Fn(usize, usize) -> f64 + Sync,
{
    let row_sum = |acc: &mut NeumaierSum, i: usize| {
        for j in i + 1..n {
            acc.add(term(i, j));
        }
    };
    if n <= 2 * ROW_CHUNK {
        let mut acc = NeumaierSum::new();
        for i in 0..n {
            row_sum(&mut acc, i);
        }
        return acc.total();
    }
    let chunks = n.div_ceil(ROW_CHUNK);
    let partials: Vec<NeumaierSum> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * ROW_CHUNK;
            let hi = ((c + 1) * ROW_CHUNK).min(n);
            let mut acc = NeumaierSum::new();
            for i in lo..hi {
                row_sum(&mut acc, i);
            }
            acc
        })
        .collect();
    let mut acc = NeumaierSum::new();
    for p in partials {
        acc.merge(p);
    }
    acc.total()
}

/// `base^alpha` for positive `base`, with exact fast paths for the exponents
/// that dominate index computation.
#[inline]
pub fn pow_alpha(base: f64, alpha: f64) -> f64 {
    if alpha == 0.0 {
        1.0
    } else if alpha == 1.0 {
        base
    } else if alpha == -1.0 {
        base.recip()
    } else if alpha == 0.5 {
        base.sqrt()
    } else if alpha == -0.5 {
        base.sqrt().recip()
    } else if alpha == 2.0 {
        base * base
    } else {
        base.powf(alpha)
    }
}

/// `tail * prod_k base_k^exp_k` for positive bases, retried in log space when
/// the direct product over- or underflows. Exponent/base pairs with extreme
/// magnitudes (large `|alpha|`, large `n`) are the usual trigger.
pub fn scaled_product(powers: &[(f64, f64)], tail: f64) -> f64 {
    let mut v = tail;
    for &(base, exp) in powers {
        v *= pow_alpha(base, exp);
    }
    if v.is_finite() && (v != 0.0 || tail == 0.0) {
        return v;
    }
    let mut ln = tail.ln();
    for &(base, exp) in powers {
        ln += exp * base.ln();
    }
    ln.exp()
}

/// `(1 - e^{-s}) / s`, continuous through `s = 0` where the value is 1.
#[inline]
pub fn one_minus_exp_over(s: f64) -> f64 {
    if s == 0.0 {
        1.0
    } else {
        -(-s).exp_m1() / s
    }
}

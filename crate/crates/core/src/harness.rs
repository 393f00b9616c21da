//! Monte Carlo convergence studies, degree-moment checks, and network
//! summary tables.
//!
//! A convergence study samples graphs at each grid point, divides the
//! empirical index by its exact-sum limit, and fits how fast the mean ratio
//! approaches 1. Ratios always target the exact finite-n sums rather than the
//! asymptotic closed forms, so the measured deviation is sampling error alone
//! and not continuum slack.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::generator::{dense_enough, sample_with, sparsity_bound, GeneratorError};
use crate::graph::{BuildDiagnostics, Graph};
use crate::index::{general_randic, general_sum_connectivity, index_suite, IndexFamily, IndexSpec, SUMMARY_SPECS};
use crate::kernel::{Kernel, KernelDescriptor, KernelError};
use crate::limits::{limit_exact, LimitError};
use crate::numeric::NeumaierSum;
use crate::rng::{philox4x64, stream};

#[derive(Debug, Error, PartialEq)]
pub enum HarnessError {
    #[error(
        "density hypothesis violated at (n = {n}, p = {p}): n*p*log(2) = {np_log2:.4} < log(n) = {log_n:.4}; requires p >= log(n)/(n log 2) = {required_p:.6}"
    )]
    DensityHypothesisViolated { n: usize, p: f64, np_log2: f64, log_n: f64, required_p: f64 },
    #[error("convergence studies need at least 2 replicates (got {0})")]
    TooFewReplicates(usize),
    #[error(transparent)]
    Limit(#[from] LimitError),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// Grid points whose |mean ratio - 1| falls below this are excluded from the
/// rate fit; their logs are pure rounding noise.
const RATE_FIT_FLOOR: f64 = 1e-12;

/// One grid point of a convergence study. Replicate `r` of this point was
/// sampled with `replicate_seed(master_seed, grid_index, r)`, so the stored
/// indices make every ratio reproducible.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergencePoint {
    pub grid_index: usize,
    pub n: usize,
    pub p: f64,
    pub replicates: usize,
    /// Exact-sum limit used as the ratio denominator.
    pub limit: f64,
    /// index / limit, one entry per replicate, in replicate order.
    pub ratios: Vec<f64>,
    pub mean_ratio: f64,
    pub std_dev: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub spec: IndexSpec,
    pub kernel: KernelDescriptor,
    pub master_seed: u64,
    pub replicates: usize,
    pub points: Vec<ConvergencePoint>,
    /// Least-squares slope of log|mean ratio - 1| against log(n p);
    /// `None` when fewer than two points carry usable deviations.
    pub rate_estimate: Option<f64>,
}

impl ConvergenceReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Summary rows only (the JSON form carries full replicate data).
    pub fn to_csv(&self) -> String {
        let mut out = String::from("grid_index,n,p,replicates,limit,mean_ratio,std_dev\n");
        for pt in &self.points {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                pt.grid_index, pt.n, pt.p, pt.replicates, pt.limit, pt.mean_ratio, pt.std_dev
            ));
        }
        out
    }
}

fn eval_index(g: &Graph, spec: IndexSpec) -> f64 {
    match spec.family {
        IndexFamily::Randic => general_randic(g, spec.alpha).value,
        IndexFamily::Chi => general_sum_connectivity(g, spec.alpha).value,
    }
}

/// Seed for replicate `r` of grid point `gi`, derived from the master seed by
/// one Philox block.
pub fn replicate_seed(master_seed: u64, grid_index: usize, replicate: usize) -> u64 {
    philox4x64(
        [grid_index as u64, replicate as u64, 0, 0],
        [master_seed, stream::REPLICATE],
    )[0]
}

/// Run a convergence study over `grid` points `(n, p)`.
///
/// Every point must satisfy the density hypothesis `n p log 2 >= log n`.
/// Replicates are sampled with seeds derived deterministically from
/// `master_seed`, so identical arguments give identical reports.
pub fn converge_study(
    spec: IndexSpec,
    kernel: &Kernel,
    grid: &[(usize, f64)],
    replicates: usize,
    master_seed: u64,
) -> Result<ConvergenceReport, HarnessError> {
    if replicates < 2 {
        return Err(HarnessError::TooFewReplicates(replicates));
    }
    for &(n, p) in grid {
        if !dense_enough(n, p) {
            let nf = n as f64;
            return Err(HarnessError::DensityHypothesisViolated {
                n,
                p,
                np_log2: nf * p * std::f64::consts::LN_2,
                log_n: nf.ln(),
                required_p: sparsity_bound(n)?,
            });
        }
    }

    let mut points = Vec::with_capacity(grid.len());
    for (gi, &(n, p)) in grid.iter().enumerate() {
        let limit = limit_exact(n, p, kernel, spec)?.value;
        let ratios: Vec<f64> = (0..replicates)
            .into_par_iter()
            .map(|r| {
                let g = sample_with(n, p, kernel, replicate_seed(master_seed, gi, r))?;
                Ok(eval_index(&g, spec) / limit)
            })
            .collect::<Result<_, GeneratorError>>()?;
        let (mean_ratio, std_dev) = mean_and_std(&ratios);
        points.push(ConvergencePoint {
            grid_index: gi,
            n,
            p,
            replicates,
            limit,
            ratios,
            mean_ratio,
            std_dev,
        });
    }

    let fit_points: Vec<(f64, f64)> = points
        .iter()
        .filter(|pt| (pt.mean_ratio - 1.0).abs() >= RATE_FIT_FLOOR)
        .map(|pt| ((pt.n as f64 * pt.p).ln(), (pt.mean_ratio - 1.0).abs().ln()))
        .collect();
    let rate_estimate = least_squares_slope(&fit_points);

    Ok(ConvergenceReport {
        spec,
        kernel: kernel.descriptor(),
        master_seed,
        replicates,
        points,
        rate_estimate,
    })
}

fn mean_and_std(values: &[f64]) -> (f64, f64) {
    let mut acc = NeumaierSum::new();
    for &v in values {
        acc.add(v);
    }
    let mean = acc.total() / values.len() as f64;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let mut sq = NeumaierSum::new();
    for &v in values {
        sq.add((v - mean) * (v - mean));
    }
    (mean, (sq.total() / (values.len() - 1) as f64).sqrt())
}

fn least_squares_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// One row of a network summary table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NetworkSummary {
    pub name: String,
    pub n: usize,
    pub edge_count: usize,
    /// `log n / (n log 2)`; absent for n < 2.
    pub sparsity_bound: Option<f64>,
    pub density: f64,
    pub d_max: u32,
    pub d_median: f64,
    pub d_min: u32,
    /// `R_{-1/2}`
    pub randic_half: f64,
    /// `R_{-1}`
    pub randic_one: f64,
    /// `chi_{-1/2}`
    pub chi_half: f64,
    /// `chi_{-1}`
    pub chi_one: f64,
    pub self_loops_dropped: usize,
    pub duplicates_collapsed: usize,
    /// Set when the graph has no edges; degree statistics are then zeros.
    pub empty: bool,
}

/// Compute the summary row for a graph. `ingest` carries the counts of edges
/// collapsed while the graph was read; pass the default for graphs built
/// programmatically.
pub fn summarize_network(name: &str, g: &Graph, ingest: BuildDiagnostics) -> NetworkSummary {
    let n = g.node_count();
    let degrees = g.degrees();
    let values = index_suite(g, &SUMMARY_SPECS);
    let max_edges = Graph::max_edges(n);
    NetworkSummary {
        name: name.to_string(),
        n,
        edge_count: g.edge_count(),
        sparsity_bound: sparsity_bound(n).ok(),
        density: if max_edges == 0 { 0.0 } else { g.edge_count() as f64 / max_edges as f64 },
        d_max: degrees.max(),
        d_median: degrees.median(),
        d_min: degrees.min(),
        randic_half: values[0].value,
        randic_one: values[1].value,
        chi_half: values[2].value,
        chi_one: values[3].value,
        self_loops_dropped: ingest.self_loops_dropped,
        duplicates_collapsed: ingest.duplicates_collapsed,
        empty: g.edge_count() == 0,
    }
}

const TABLE_COLUMNS: [&str; 11] = [
    "network",
    "n",
    "sparsity_bound",
    "density",
    "d_max",
    "d_median",
    "d_min",
    "randic_-0.5",
    "randic_-1",
    "chi_-0.5",
    "chi_-1",
];

fn table_cells(s: &NetworkSummary) -> [String; 11] {
    let bound = s
        .sparsity_bound
        .map(|b| format!("{b:.6}"))
        .unwrap_or_else(|| "-".to_string());
    [
        s.name.clone(),
        s.n.to_string(),
        bound,
        format!("{:.6}", s.density),
        s.d_max.to_string(),
        format!("{:.1}", s.d_median),
        s.d_min.to_string(),
        format!("{:.6}", s.randic_half),
        format!("{:.6}", s.randic_one),
        format!("{:.6}", s.chi_half),
        format!("{:.6}", s.chi_one),
    ]
}

/// Aligned text rendering; row order follows the input.
pub fn table_text(rows: &[NetworkSummary]) -> String {
    let mut widths: Vec<usize> = TABLE_COLUMNS.iter().map(|c| c.len()).collect();
    let cells: Vec<[String; 11]> = rows.iter().map(table_cells).collect();
    for row in &cells {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let render = |out: &mut String, fields: &[String]| {
        let line: Vec<String> = fields
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:>w$}", w = w))
            .collect();
        out.push_str(&line.join("  "));
        out.push('\n');
    };
    let header: Vec<String> = TABLE_COLUMNS.iter().map(|c| c.to_string()).collect();
    render(&mut out, &header);
    for row in &cells {
        render(&mut out, row);
    }
    out
}

/// CSV rendering with the same column order as the text table.
pub fn table_csv(rows: &[NetworkSummary]) -> String {
    let mut out = TABLE_COLUMNS.join(",");
    out.push('\n');
    for s in rows {
        let bound = s.sparsity_bound.map(|b| b.to_string()).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            s.name,
            s.n,
            bound,
            s.density,
            s.d_max,
            s.d_median,
            s.d_min,
            s.randic_half,
            s.randic_one,
            s.chi_half,
            s.chi_one
        ));
    }
    out
}

/// Per-node comparison of empirical degree moments against the exact values
/// `E[d_i] = p f_i` and `Var(d_i) = sum_{j != i} p f_ij (1 - p f_ij)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MomentCheckReport {
    pub n: usize,
    pub p: f64,
    pub replicates: usize,
    pub seed: u64,
    pub pass: bool,
    pub max_abs_mean_z: f64,
    pub max_abs_var_z: f64,
    pub mean_beyond_5se: usize,
    pub var_beyond_5se: usize,
    pub mean_beyond_3se: usize,
    pub var_beyond_3se: usize,
}

/// Sample `replicates` graphs and check every node's empirical degree mean
/// and variance. A node beyond 5 standard errors fails outright; up to 1% of
/// nodes may exceed 3 standard errors before the multiple-testing allowance
/// is used up.
pub fn degree_moment_check(
    kernel: &Kernel,
    n: usize,
    p: f64,
    replicates: usize,
    seed: u64,
) -> Result<MomentCheckReport, HarnessError> {
    if replicates < 2 {
        return Err(HarnessError::TooFewReplicates(replicates));
    }
    let aggregates = kernel.aggregates(n)?.into_vec();

    let per_rep: Vec<Vec<u32>> = (0..replicates)
        .into_par_iter()
        .map(|r| {
            let g = sample_with(n, p, kernel, replicate_seed(seed, 0, r))?;
            Ok((0..n).map(|i| g.degree(i) as u32).collect())
        })
        .collect::<Result<_, GeneratorError>>()?;

    let rf = replicates as f64;
    let mut max_mean_z: f64 = 0.0;
    let mut max_var_z: f64 = 0.0;
    let mut mean5 = 0usize;
    let mut var5 = 0usize;
    let mut mean3 = 0usize;
    let mut var3 = 0usize;

    for i in 0..n {
        let mut sum = 0u64;
        let mut sumsq = 0u64;
        for rep in &per_rep {
            let d = rep[i] as u64;
            sum += d;
            sumsq += d * d;
        }
        let mean = sum as f64 / rf;
        let var = (sumsq as f64 - rf * mean * mean) / (rf - 1.0);

        let exact_mean = p * aggregates[i];
        let mut exact_var = NeumaierSum::new();
        for j in 0..n {
            if j != i {
                let q = p * kernel.value_unchecked(i, j, n);
                exact_var.add(q * (1.0 - q));
            }
        }
        let exact_var = exact_var.total();

        let se_mean = (exact_var / rf).sqrt();
        let z_mean = if se_mean > 0.0 { (mean - exact_mean) / se_mean } else { mean - exact_mean };
        let se_var = exact_var * (2.0 / (rf - 1.0)).sqrt();
        let z_var = if se_var > 0.0 { (var - exact_var) / se_var } else { var - exact_var };

        max_mean_z = max_mean_z.max(z_mean.abs());
        max_var_z = max_var_z.max(z_var.abs());
        if z_mean.abs() > 5.0 {
            mean5 += 1;
        }
        if z_var.abs() > 5.0 {
            var5 += 1;
        }
        if z_mean.abs() > 3.0 {
            mean3 += 1;
        }
        if z_var.abs() > 3.0 {
            var3 += 1;
        }
    }

    let allowance = n / 100;
    let pass = mean5 == 0 && var5 == 0 && mean3 <= allowance && var3 <= allowance;
    Ok(MomentCheckReport {
        n,
        p,
        replicates,
        seed,
        pass,
        max_abs_mean_z: max_mean_z,
        max_abs_var_z: max_var_z,
        mean_beyond_5se: mean5,
        var_beyond_5se: var5,
        mean_beyond_3se: mean3,
        var_beyond_3se: var3,
    })
}

//! Independent oracles shared by the integration suites. Everything here
//! deliberately avoids the library's computation paths: dense adjacency
//! matrices, naive summation, `powf` everywhere, midpoint quadrature.
#![allow(dead_code)]

use randic_core::{Graph, IndexFamily};

pub fn rel_err(actual: f64, expected: f64) -> f64 {
    if expected == 0.0 {
        actual.abs()
    } else {
        (actual - expected).abs() / expected.abs()
    }
}

/// Index value via a dense adjacency matrix and a naive double loop.
pub fn brute_force_index(g: &Graph, family: IndexFamily, alpha: f64) -> f64 {
    let n = g.node_count();
    let mut adj = vec![false; n * n];
    for &(i, j) in g.edges() {
        adj[i as usize * n + j as usize] = true;
        adj[j as usize * n + i as usize] = true;
    }
    let deg: Vec<f64> =
        (0..n).map(|i| adj[i * n..(i + 1) * n].iter().filter(|&&a| a).count() as f64).collect();
    let mut total = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            if adj[i * n + j] {
                total += match family {
                    IndexFamily::Randic => (deg[i] * deg[j]).powf(alpha),
                    IndexFamily::Chi => (deg[i] + deg[j]).powf(alpha),
                };
            }
        }
    }
    total
}

/// Midpoint rule on a `cells x cells` grid for
/// `I(kappa, alpha) = int_0^1 int_0^1 (e^{-kx}+e^{-ky})^alpha e^{-k(x+y)} dx dy`.
pub fn midpoint_grid_integral(kappa: f64, alpha: f64, cells: usize) -> f64 {
    let h = 1.0 / cells as f64;
    let axis: Vec<f64> =
        (0..cells).map(|k| (-(kappa) * (k as f64 + 0.5) * h).exp()).collect();
    let mut total = 0.0;
    for &ex in &axis {
        let mut row = 0.0;
        for &ey in &axis {
            row += (ex + ey).powf(alpha) * ex * ey;
        }
        total += row;
    }
    total * h * h
}

/// Deterministic, varied pool of small test graphs (n <= 50) built through
/// the seeded sampler.
pub fn small_graph_pool(count: usize) -> Vec<Graph> {
    (0..count)
        .map(|k| {
            let n = 2 + (k * 7 + 3) % 49;
            let p = 0.05 + 0.9 * ((k % 11) as f64 / 10.0);
            randic_core::sample_with(n, p, &randic_core::Kernel::constant(), k as u64)
                .expect("sampling a test graph cannot fail")
        })
        .collect()
}

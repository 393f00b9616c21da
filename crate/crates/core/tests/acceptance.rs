//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured quantities (run with `--nocapture` to see them).
//!
//! Tolerances are pinned here, not computed: convergence windows on the mean
//! ratios, a slope window for the rate fit, 5% agreement between exact sums
//! and closed forms, 1e-12 relative agreement with the dense oracle, 1e-15
//! ("a couple of ulps") for algebraic identities, and absolute quadrature
//! windows of 1e-8/1e-10/1e-6 per comparison.

mod common;

use std::time::Instant;

use common::{brute_force_index, midpoint_grid_integral, rel_err, small_graph_pool};
use randic_core::{
    converge_study, general_randic, general_sum_connectivity, limit_chi_exact, limit_exp_chi,
    limit_exp_randic, limit_randic_exact, parse_edge_list, quadrature_double, summarize_network,
    ConvergenceReport, IndexFamily, IndexSpec, Kernel,
};

const MASTER_SEED: u64 = 0x5EED_0001;

fn study_c1() -> ConvergenceReport {
    converge_study(IndexSpec::randic(-0.5), &Kernel::constant(), &[(2000, 0.05)], 20, MASTER_SEED)
        .unwrap()
}

fn study_c2() -> ConvergenceReport {
    converge_study(IndexSpec::chi(-1.0), &Kernel::constant(), &[(2000, 0.05)], 20, MASTER_SEED)
        .unwrap()
}

fn study_c3() -> ConvergenceReport {
    converge_study(IndexSpec::randic(-1.0), &Kernel::constant(), &[(2000, 0.05)], 20, MASTER_SEED)
        .unwrap()
}

fn study_c4() -> ConvergenceReport {
    let grid = [(250, 0.2), (500, 0.2), (1000, 0.2), (2000, 0.2), (4000, 0.2)];
    converge_study(IndexSpec::randic(-0.5), &Kernel::constant(), &grid, 50, MASTER_SEED).unwrap()
}

fn limits_c5() -> Vec<(IndexFamily, f64, f64)> {
    let (n, p, kappa) = (5000usize, 0.1, 1.0);
    let kernel = Kernel::exponential(kappa).unwrap();
    let mut out = Vec::new();
    for alpha in [-1.0, -0.5, 1.0] {
        let exact = limit_randic_exact(n, p, &kernel, alpha).unwrap().value;
        let closed = limit_exp_randic(n, p, kappa, alpha).unwrap().value;
        out.push((IndexFamily::Randic, alpha, exact / closed));
        let exact = limit_chi_exact(n, p, &kernel, alpha).unwrap().value;
        let closed = limit_exp_chi(n, p, kappa, alpha).unwrap().value;
        out.push((IndexFamily::Chi, alpha, exact / closed));
    }
    out
}

#[test]
fn c01_er_randic_convergence() {
    let start = Instant::now();
    let report = study_c1();
    let mean = report.points[0].mean_ratio; // ratio = R / (n/2) = 2R/n
    let elapsed = start.elapsed();
    assert!(
        (0.995..=1.005).contains(&mean),
        "criterion 1 FAIL: mean 2R/n = {mean}"
    );
    assert!(elapsed.as_secs() < 60, "criterion 1 FAIL: took {elapsed:?}");
    println!("[criterion 01] PASS  mean 2R_(-1/2)/n = {mean:.6} in [0.995, 1.005]  ({elapsed:?})");
}

#[test]
fn c02_er_harmonic_convergence() {
    // exact chi_{-1} limit for the constant kernel is n/4, so the study ratio
    // chi/(n/4) equals 2H/n with H = 2 chi_{-1}
    let report = study_c2();
    let mean = report.points[0].mean_ratio;
    assert!(
        (0.995..=1.005).contains(&mean),
        "criterion 2 FAIL: mean 2H/n = {mean}"
    );
    println!("[criterion 02] PASS  mean 2H/n = {mean:.6} in [0.995, 1.005]");
}

#[test]
fn c03_er_modified_zagreb_convergence() {
    let report = study_c3();
    let point = &report.points[0];
    let p = point.p;
    // mean over replicates of 2 p R_{-1}; the study stores R/limit
    let mean_2pr = point.mean_ratio * point.limit * 2.0 * p;
    assert!(
        (0.99..=1.01).contains(&mean_2pr),
        "criterion 3 FAIL: mean 2p R_(-1) = {mean_2pr}"
    );
    println!("[criterion 03] PASS  mean 2p R_(-1) = {mean_2pr:.6} in [0.99, 1.01]");
}

#[test]
fn c04_rate_check_slope() {
    let report = study_c4();
    let slope = report.rate_estimate.expect("five usable grid points");
    for pt in &report.points {
        println!(
            "[criterion 04]   n={:4}  np={:4.0}  |mean ratio - 1| = {:.3e}",
            pt.n,
            pt.n as f64 * pt.p,
            (pt.mean_ratio - 1.0).abs()
        );
    }
    println!("[criterion 04] fitted slope of log|mean ratio - 1| vs log(np): {slope:.4}");
    assert!(
        (-0.75..=-0.25).contains(&slope),
        "criterion 4 FAIL: slope {slope:.4} outside [-0.75, -0.25]"
    );
    println!("[criterion 04] PASS  slope {slope:.4} in [-0.75, -0.25]");
}

#[test]
fn c05_exponential_kernel_limit_agreement() {
    for (family, alpha, ratio) in limits_c5() {
        assert!(
            (0.95..=1.05).contains(&ratio),
            "criterion 5 FAIL: {family:?} alpha={alpha}: exact/closed = {ratio}"
        );
        println!(
            "[criterion 05] PASS  {family:?} alpha={alpha:+.1}: exact/closed = {ratio:.6} in [0.95, 1.05]"
        );
    }
}

#[test]
fn c06_heterogeneity_monotonicity() {
    let (n, p) = (2000usize, 0.1);
    let values = |alpha: f64| -> Vec<f64> {
        [0.5, 1.0, 2.0, 4.0]
            .iter()
            .map(|&k| {
                limit_randic_exact(n, p, &Kernel::exponential(k).unwrap(), alpha).unwrap().value
            })
            .collect()
    };
    let dec = values(-0.5);
    assert!(
        dec.windows(2).all(|w| w[0] > w[1]),
        "criterion 6 FAIL: R_(-1/2) limit not strictly decreasing in kappa: {dec:?}"
    );
    let inc = values(-1.0);
    assert!(
        inc.windows(2).all(|w| w[0] < w[1]),
        "criterion 6 FAIL: R_(-1) limit not strictly increasing in kappa: {inc:?}"
    );
    println!("[criterion 06] PASS  randic(-1/2) decreasing {dec:?}");
    println!("[criterion 06] PASS  randic(-1) increasing {inc:?}");
}

#[test]
fn c07_small_graph_oracle_suite() {
    let graphs = small_graph_pool(200);
    let alphas = [-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0];
    let mut worst: f64 = 0.0;
    for g in &graphs {
        for &alpha in &alphas {
            let r = general_randic(g, alpha).value;
            let r_oracle = brute_force_index(g, IndexFamily::Randic, alpha);
            let c = general_sum_connectivity(g, alpha).value;
            let c_oracle = brute_force_index(g, IndexFamily::Chi, alpha);
            worst = worst.max(rel_err(r, r_oracle)).max(rel_err(c, c_oracle));
            assert!(
                rel_err(r, r_oracle) < 1e-12 && rel_err(c, c_oracle) < 1e-12,
                "criterion 7 FAIL: n={} alpha={alpha}: randic {r} vs {r_oracle}, chi {c} vs {c_oracle}",
                g.node_count()
            );
        }
    }
    println!(
        "[criterion 07] PASS  200 graphs x 7 alphas x 2 families vs dense oracle, worst rel err {worst:.2e} < 1e-12"
    );
}

#[test]
fn c08_algebraic_identities() {
    for n in [10usize, 100, 1000] {
        for p in [0.05, 0.4, 1.0] {
            let k = Kernel::constant();
            let half = limit_randic_exact(n, p, &k, -0.5).unwrap().value;
            assert!(
                rel_err(half, n as f64 / 2.0) < 1e-15,
                "criterion 8 FAIL: randic exact n={n} p={p}: {half}"
            );
            let quarter = limit_chi_exact(n, p, &k, -1.0).unwrap().value;
            assert!(
                rel_err(quarter, n as f64 / 4.0) < 1e-15,
                "criterion 8 FAIL: chi exact n={n} p={p}: {quarter}"
            );
        }
    }
    // R_0 = chi_0 = |E| and R_{-1/2} <= n/2 on every test graph
    for g in small_graph_pool(120) {
        let m = g.edge_count() as f64;
        assert_eq!(general_randic(&g, 0.0).value, m);
        assert_eq!(general_sum_connectivity(&g, 0.0).value, m);
        let r = general_randic(&g, -0.5).value;
        assert!(
            r <= g.node_count() as f64 / 2.0 * (1.0 + 1e-12),
            "criterion 8 FAIL: R_(-1/2) = {r} exceeds n/2 at n = {}",
            g.node_count()
        );
    }
    println!("[criterion 08] PASS  exact-sum identities n/2 and n/4 at 1e-15; R_0 = chi_0 = |E|; R_(-1/2) <= n/2");
}

#[test]
fn c09_quadrature() {
    // near kappa = 0 the integrand is the constant 2^alpha
    for alpha in [-1.0, -0.5, 0.0, 1.0, 2.0] {
        let v = quadrature_double(1e-10, alpha, 1e-12).unwrap();
        let expect = 2f64.powf(alpha);
        assert!(
            (v - expect).abs() < 1e-8,
            "criterion 9 FAIL: I(1e-10, {alpha}) = {v} vs 2^alpha = {expect}"
        );
    }
    println!("[criterion 09] PASS  I(kappa -> 0, alpha) = 2^alpha within 1e-8 for alpha in {{-1, -1/2, 0, 1, 2}}");

    // separable case
    let v = quadrature_double(1.0, 0.0, 1e-12).unwrap();
    let expect = (1.0 - (-1.0f64).exp()).powi(2);
    assert!(
        (v - expect).abs() < 1e-10,
        "criterion 9 FAIL: I(1, 0) = {v} vs (1 - e^-1)^2 = {expect}"
    );
    println!("[criterion 09] PASS  I(1, 0) = (1 - e^-1)^2 within 1e-10");

    // independent midpoint oracle on a 4096^2 grid
    for kappa in [1.0, 2.0] {
        for alpha in [-1.0, -0.5] {
            let v = quadrature_double(kappa, alpha, 1e-12).unwrap();
            let oracle = midpoint_grid_integral(kappa, alpha, 4096);
            assert!(
                (v - oracle).abs() < 1e-6,
                "criterion 9 FAIL: I({kappa}, {alpha}) = {v} vs midpoint {oracle}"
            );
            println!(
                "[criterion 09] PASS  I({kappa}, {alpha}) vs 4096^2 midpoint oracle: |diff| = {:.2e} < 1e-6",
                (v - oracle).abs()
            );
        }
    }
}

#[test]
fn c10_fixture_reproduction() {
    let fixture = |name: &str| {
        let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
        std::fs::read_to_string(&path).unwrap()
    };
    let mut checked = 0;
    for name in ["karate.edges", "k5.edges", "path3.edges"] {
        let (g, doc) = parse_edge_list(&fixture(name)).unwrap();
        let s = summarize_network(name, &g, doc.diagnostics());
        for (value, family, alpha) in [
            (s.randic_half, IndexFamily::Randic, -0.5),
            (s.randic_one, IndexFamily::Randic, -1.0),
            (s.chi_half, IndexFamily::Chi, -0.5),
            (s.chi_one, IndexFamily::Chi, -1.0),
        ] {
            let oracle = brute_force_index(&g, family, alpha);
            assert!(
                rel_err(value, oracle) < 1e-12,
                "criterion 10 FAIL: {name} {family:?} alpha={alpha}: {value} vs oracle {oracle}"
            );
            checked += 1;
        }
    }
    // frozen full-precision references for the karate fixture (computed
    // offline with networkx + numpy); they round to 13.970, 2.866, 21.001,
    // 5.927 at three decimals
    let (g, doc) = parse_edge_list(&fixture("karate.edges")).unwrap();
    let s = summarize_network("karate", &g, doc.diagnostics());
    assert!(rel_err(s.randic_half, 13.970824815010783) < 1e-12);
    assert!(rel_err(s.randic_one, 2.8663684640522864) < 1e-12);
    assert!(rel_err(s.chi_half, 21.001286625648355) < 1e-12);
    assert!(rel_err(s.chi_one, 5.92754841781604) < 1e-12);
    println!("[criterion 10] PASS  {checked} fixture indices match the dense oracle; karate matches frozen references");
}

#[test]
fn c11_determinism() {
    // exact repetition: every study and limit set from criteria 1-5, twice
    let pairs = [
        (study_c1().to_json(), study_c1().to_json(), "criterion 1 study"),
        (study_c2().to_json(), study_c2().to_json(), "criterion 2 study"),
        (study_c3().to_json(), study_c3().to_json(), "criterion 3 study"),
        (study_c4().to_json(), study_c4().to_json(), "criterion 4 study"),
        (
            format!("{:?}", limits_c5()),
            format!("{:?}", limits_c5()),
            "criterion 5 limits",
        ),
    ];
    for (a, b, what) in &pairs {
        assert_eq!(a, b, "criterion 11 FAIL: {what} not bit-identical between runs");
    }
    // and the report must not depend on worker count: single-threaded pool
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| study_c1().to_json());
    assert_eq!(
        single,
        pairs[0].0,
        "criterion 11 FAIL: report differs between 1-thread and default pools"
    );
    println!("[criterion 11] PASS  criteria 1-5 reports bit-identical across reruns and thread counts");
}

//! Cross-route consistency of the limit calculator: exact finite-n sums
//! against asymptotic closed forms, invariance in p where the theory predicts
//! it, and the heterogeneity response in kappa.

mod common;

use randic_core::{
    limit_chi_exact, limit_er_chi, limit_er_randic, limit_exact, limit_randic_exact, IndexSpec,
    Kernel,
};

#[test]
fn constant_kernel_exact_sums_approach_closed_forms() {
    let p = 0.3;
    for n in [100usize, 1000, 10_000] {
        let window = 10.0 / n as f64;
        for alpha in [-1.0, -0.5, 0.0, 0.5, 1.0, 2.0] {
            let k = Kernel::constant();
            let ratio = limit_randic_exact(n, p, &k, alpha).unwrap().value
                / limit_er_randic(n, p, alpha).value;
            assert!(
                (ratio - 1.0).abs() <= window,
                "randic n={n} alpha={alpha}: ratio {ratio}"
            );
            let ratio =
                limit_chi_exact(n, p, &k, alpha).unwrap().value / limit_er_chi(n, p, alpha).value;
            assert!(
                (ratio - 1.0).abs() <= window,
                "chi n={n} alpha={alpha}: ratio {ratio}"
            );
        }
    }
}

#[test]
fn scale_free_limits_are_invariant_in_p() {
    // p enters R_{-1/2} as p^0 and chi_{-1} as p^0, so the exact sums must be
    // bitwise equal across p for any kernel.
    let n = 400;
    for kernel in [Kernel::constant(), Kernel::exponential(1.0).unwrap()] {
        let r_ref = limit_randic_exact(n, 0.05, &kernel, -0.5).unwrap().value;
        let c_ref = limit_chi_exact(n, 0.05, &kernel, -1.0).unwrap().value;
        for p in [0.1, 0.5] {
            assert_eq!(
                limit_randic_exact(n, p, &kernel, -0.5).unwrap().value.to_bits(),
                r_ref.to_bits()
            );
            assert_eq!(
                limit_chi_exact(n, p, &kernel, -1.0).unwrap().value.to_bits(),
                c_ref.to_bits()
            );
        }
    }
}

#[test]
fn heterogeneity_response_in_kappa() {
    let n = 2000;
    let p = 0.1;
    let kappas = [0.5, 1.0, 2.0, 4.0];
    let limits = |spec: IndexSpec| -> Vec<f64> {
        kappas
            .iter()
            .map(|&k| {
                limit_exact(n, p, &Kernel::exponential(k).unwrap(), spec).unwrap().value
            })
            .collect()
    };

    // both families decrease with heterogeneity for alpha > -1
    for alpha in [-0.5, 0.0, 1.0] {
        for spec in [IndexSpec::randic(alpha), IndexSpec::chi(alpha)] {
            let vals = limits(spec);
            assert!(
                vals.windows(2).all(|w| w[0] > w[1]),
                "{spec:?} not decreasing: {vals:?}"
            );
        }
    }
    // the Randic family at alpha = -1 increases instead
    let vals = limits(IndexSpec::randic(-1.0));
    assert!(vals.windows(2).all(|w| w[0] < w[1]), "randic(-1) not increasing: {vals:?}");
}

#[test]
fn matrix_kernel_limits_match_constant_when_flat() {
    // an all-0.9 matrix is the constant kernel scaled by 0.9, i.e. the model
    // with p' = 0.9 p; check the randic exact sums agree
    let n = 60;
    let p = 0.5;
    let flat = Kernel::matrix(n, vec![0.9; n * n]).unwrap();
    for alpha in [-1.0, -0.5, 1.0] {
        let via_matrix = limit_randic_exact(n, p, &flat, alpha).unwrap().value;
        let via_constant =
            limit_randic_exact(n, 0.9 * p, &Kernel::constant(), alpha).unwrap().value;
        let rel = (via_matrix - via_constant).abs() / via_constant.abs();
        assert!(rel < 1e-12, "alpha={alpha}: {via_matrix} vs {via_constant}");
    }
}

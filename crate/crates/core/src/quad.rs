//! Gauss–Legendre rules, computed by Newton iteration on the Legendre
//! recurrence. Used by the limit calculator for the exponential-kernel double
//! integral.

/// `P_n(x)` and `P_n'(x)` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut prev = 1.0;
    let mut cur = x;
    for k in 2..=n {
        let kf = k as f64;
        let next = ((2.0 * kf - 1.0) * x * cur - (kf - 1.0) * prev) / kf;
        prev = cur;
        cur = next;
    }
    let deriv = n as f64 * (x * cur - prev) / (x * x - 1.0);
    (cur, deriv)
}

/// Nodes and weights of the `order`-point rule on `[-1, 1]`, nodes ascending.
pub(crate) fn legendre_rule(order: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(order >= 2);
    let mut nodes = vec![0.0; order];
    let mut weights = vec![0.0; order];
    let half = order.div_ceil(2);
    for k in 0..half {
        // Chebyshev-angle initial guess for the k-th root from the top.
        let mut x =
            (std::f64::consts::PI * (k as f64 + 0.75) / (order as f64 + 0.5)).cos();
        for _ in 0..60 {
            let (p, d) = legendre(order, x);
            let step = p / d;
            x -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        let (_, deriv) = legendre(order, x);
        let w = 2.0 / ((1.0 - x * x) * deriv * deriv);
        nodes[order - 1 - k] = x;
        weights[order - 1 - k] = w;
        nodes[k] = -x;
        weights[k] = w;
    }
    (nodes, weights)
}

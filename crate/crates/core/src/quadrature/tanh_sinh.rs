//! Double-exponential (tanh-sinh) nodes.
//!
//! t = tanh(π/2 · sinh s) with step h = 2^(1 − level). The distance of each
//! node to its nearer endpoint is kept separately, since in double precision
//! t itself rounds to ±1 long before the weights become negligible.

use std::f64::consts::FRAC_PI_2;

/// Nodes closer to an endpoint than this are dropped.
const MIN_COMPLEMENT: f64 = 1e-280;

/// `(nodes, weights, complements)` with complements `1 − |t|`, ordered by increasing t.
pub(super) fn tanh_sinh_nodes(level: u32) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let h = 2f64.powi(1 - level as i32);
    let mut half: Vec<(f64, f64, f64)> = Vec::new();
    let mut k = 1usize;
    loop {
        let s = k as f64 * h;
        let u = FRAC_PI_2 * s.sinh();
        let cu = u.cosh();
        let comp = 1.0 / (u.exp() * cu);
        if comp < MIN_COMPLEMENT {
            break;
        }
        let w = h * FRAC_PI_2 * s.cosh() / (cu * cu);
        half.push((1.0 - comp, w, comp));
        k += 1;
    }
    let len = 2 * half.len() + 1;
    let mut nodes = Vec::with_capacity(len);
    let mut weights = Vec::with_capacity(len);
    let mut comps = Vec::with_capacity(len);
    for &(t, w, c) in half.iter().rev() {
        nodes.push(-t);
        weights.push(w);
        comps.push(c);
    }
    nodes.push(0.0);
    weights.push(h * FRAC_PI_2);
    comps.push(1.0);
    for &(t, w, c) in &half {
        nodes.push(t);
        weights.push(w);
        comps.push(c);
    }
    (nodes, weights, comps)
}

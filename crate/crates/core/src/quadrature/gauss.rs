//! Gauss rules from the Jacobi matrix of the weight (1 − t)^α (1 + t)^β
//! (Golub–Welsch).

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{domain, Error, Result};
use crate::specfun::ln_gamma_pos;

const EIGEN_EPS: f64 = 1e-15;
const EIGEN_MAX_ITER: usize = 10_000;

/// Nodes (increasing) and weights of the n-point rule for (1 − t)^α (1 + t)^β on (−1, 1).
pub(super) fn jacobi_nodes_weights(
    n: usize,
    alpha: f64,
    beta: f64,
) -> Result<(Vec<f64>, Vec<f64>)> {
    if !(alpha > -1.0 && beta > -1.0) || !alpha.is_finite() || !beta.is_finite() {
        return Err(domain(format!(
            "gauss_jacobi requires alpha, beta > -1, got alpha={alpha}, beta={beta}"
        )));
    }
    let s = alpha + beta;
    let diag = |j: usize| -> f64 {
        if j == 0 {
            (beta - alpha) / (s + 2.0)
        } else {
            let m = 2.0 * j as f64 + s;
            (beta * beta - alpha * alpha) / (m * (m + 2.0))
        }
    };
    // squared off-diagonal between rows j-1 and j
    let off_sq = |j: usize| -> f64 {
        let jf = j as f64;
        if j == 1 {
            4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + s).powi(2) * (3.0 + s))
        } else {
            let m = 2.0 * jf + s;
            4.0 * jf * (jf + alpha) * (jf + beta) * (jf + s) / (m * m * (m + 1.0) * (m - 1.0))
        }
    };

    let mu0 = jacobi_weight_integral(alpha, beta);

    if n == 1 {
        return Ok((vec![diag(0)], vec![mu0]));
    }

    let mut jm = DMatrix::<f64>::zeros(n, n);
    for j in 0..n {
        jm[(j, j)] = diag(j);
        if j > 0 {
            let b = off_sq(j).sqrt();
            jm[(j, j - 1)] = b;
            jm[(j - 1, j)] = b;
        }
    }
    let eig =
        SymmetricEigen::try_new(jm, EIGEN_EPS, EIGEN_MAX_ITER).ok_or(Error::NonConvergence {
            what: "Jacobi-matrix eigensolver",
            partial: num_complex::Complex64::new(0.0, 0.0),
            est_error: f64::INFINITY,
        })?;

    let mut pairs: Vec<(f64, f64)> = eig
        .eigenvalues
        .iter()
        .zip(eig.eigenvectors.row(0).iter())
        .map(|(&x, &v)| (x, mu0 * v * v))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(pairs.into_iter().unzip())
}

/// ∫₋₁¹ (1 − t)^α (1 + t)^β dt.
pub fn jacobi_weight_integral(alpha: f64, beta: f64) -> f64 {
    let s = alpha + beta;
    ((s + 1.0) * std::f64::consts::LN_2 + ln_gamma_pos(alpha + 1.0) + ln_gamma_pos(beta + 1.0)
        - ln_gamma_pos(s + 2.0))
    .exp()
}

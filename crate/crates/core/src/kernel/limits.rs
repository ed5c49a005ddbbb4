//! Closed forms of the kernel when one multiplicity vanishes.

use std::f64::consts::PI;

use super::KernelPoint;
use crate::error::{domain, Result};
use crate::specfun::ln_gamma_pos;

fn check_positive(name: &str, k: f64) -> Result<()> {
    if !(k.is_finite() && k > 0.0) {
        return Err(domain(format!("{name} must be real and > 0, got {k}")));
    }
    Ok(())
}

// Γ(k + ½) / (√π Γ(k))
fn gamma_ratio(k: f64) -> f64 {
    (ln_gamma_pos(k + 0.5) - ln_gamma_pos(k) - 0.5 * PI.ln()).exp()
}

/// 𝒦(x, y) at k₁ = 0:
/// `2^{k₂−1} Γ(k₂+½)/(√π Γ(k₂)) |sinh x|^{−2k₂} (cosh x − cosh y)^{k₂−1} sign(x) (eˣ − e^{−y})`.
pub fn limit_kernel_k1_zero(k2: f64, p: KernelPoint) -> Result<f64> {
    check_positive("k2", k2)?;
    let (x, y) = (p.x(), p.y());
    let dc = 2.0 * (0.5 * (x.abs() + y.abs())).sinh() * (0.5 * p.gap()).sinh();
    Ok(2f64.powf(k2 - 1.0)
        * gamma_ratio(k2)
        * x.sinh().abs().powf(-2.0 * k2)
        * dc.powf(k2 - 1.0)
        * x.signum()
        * (x.exp() - (-y).exp()))
}

/// 𝒦(x, y) at k₂ = 0:
/// `2^{k₁−2} Γ(k₁+½)/(√π Γ(k₁)) |sinh x/2|^{−2k₁} (cosh x/2 − cosh y/2)^{k₁−1} sign(x) (e^{x/2} − e^{−y/2})`.
pub fn limit_kernel_k2_zero(k1: f64, p: KernelPoint) -> Result<f64> {
    check_positive("k1", k1)?;
    let (x, y) = (p.x(), p.y());
    let dc = 2.0 * (0.25 * (x.abs() + y.abs())).sinh() * (0.25 * p.gap()).sinh();
    Ok(2f64.powf(k1 - 2.0)
        * gamma_ratio(k1)
        * (0.5 * x).sinh().abs().powf(-2.0 * k1)
        * dc.powf(k1 - 1.0)
        * x.signum()
        * ((0.5 * x).exp() - (-0.5 * y).exp()))
}

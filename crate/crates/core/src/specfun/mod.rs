//! Special functions: Gamma, Gauss ₂F₁, the Jacobi function φ and the Opdam
//! hypergeometric function G_{iλ}.

mod gamma;
mod hyp2f1;

pub(crate) use gamma::ln_gamma_pos;
pub use gamma::{gamma_real, ln_gamma_complex, ln_gamma_real};
pub use hyp2f1::{hyp2f1, hyp2f1_with_cap, Hyp2F1Args, DEFAULT_TERM_CAP};

use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::multiplicity::Multiplicity;

/// Spectral parameter λ; the eigenvalue of the Cherednik operator on G_{iλ} is iλ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralParam(Complex64);

impl SpectralParam {
    pub fn new(lambda: Complex64) -> Result<Self> {
        if !lambda.is_finite() {
            return Err(domain(format!(
                "spectral parameter must be finite, got {lambda}"
            )));
        }
        Ok(Self(lambda))
    }

    pub fn real(lambda: f64) -> Result<Self> {
        Self::new(Complex64::new(lambda, 0.0))
    }

    pub fn value(&self) -> Complex64 {
        self.0
    }
}

/// Jacobi function φ_λ^{α,β}(t) for real α, β.
///
/// Normalised as
/// `φ_λ^{α,β}(t) = ₂F₁((ρ + iλ)/2, (ρ − iλ)/2; α + 1; −sinh² t)` with
/// `ρ = α + β + 1`, so that φ_λ^{(−1/2,−1/2)}(t) = cos(λt).
pub fn jacobi_phi(alpha: f64, beta: f64, lambda: SpectralParam, t: f64) -> Result<Complex64> {
    jacobi_phi_complex(
        Complex64::new(alpha, 0.0),
        Complex64::new(beta, 0.0),
        lambda,
        t,
    )
}

/// [`jacobi_phi`] with complex α, β (needed for complex multiplicities).
pub fn jacobi_phi_complex(
    alpha: Complex64,
    beta: Complex64,
    lambda: SpectralParam,
    t: f64,
) -> Result<Complex64> {
    if !t.is_finite() {
        return Err(domain(format!("jacobi_phi requires finite t, got {t}")));
    }
    let rho = alpha + beta + 1.0;
    let il = Complex64::i() * lambda.value();
    let args = Hyp2F1Args::new(
        (rho + il) * 0.5,
        (rho - il) * 0.5,
        alpha + 1.0,
        -t.sinh().powi(2),
    );
    hyp2f1(&args)
}

/// Opdam hypergeometric function G_{iλ}(x):
///
/// ```text
/// G_{iλ}(x) = φ_{2λ}^{k₁+k₂−½, k₂−½}(x/2)
///           + (ρ + iλ)/(2k₁ + 2k₂ + 1) · sinh x · φ_{2λ}^{k₁+k₂+½, k₂+½}(x/2)
/// ```
///
/// with ρ = k₁/2 + k₂. It is the image of e^{iλx} under the intertwining operator.
pub fn opdam_g(k: &Multiplicity, lambda: SpectralParam, x: f64) -> Result<Complex64> {
    if !x.is_finite() {
        return Err(domain(format!("opdam_g requires finite x, got {x}")));
    }
    let (k1, k2) = (k.k1(), k.k2());
    let two_lambda = SpectralParam::new(lambda.value() * 2.0)?;
    let even = jacobi_phi_complex(k1 + k2 - 0.5, k2 - 0.5, two_lambda, x / 2.0)?;
    if x == 0.0 {
        return Ok(even);
    }
    let odd = jacobi_phi_complex(k1 + k2 + 0.5, k2 + 0.5, two_lambda, x / 2.0)?;
    let coef = (k.rho() + Complex64::i() * lambda.value()) / ((k1 + k2) * 2.0 + 1.0);
    Ok(even + coef * x.sinh() * odd)
}

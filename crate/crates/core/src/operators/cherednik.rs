//! The Cherednik operator
//!
//! ```text
//! D f(x) = f′(x) + {k₁/(1 − e^{−x}) + 2k₂/(1 − e^{−2x})} {f(x) − f(−x)} − ρ f(x)
//!        = f′(x) + {(k₁+k₂)/2 coth(x/2) + k₂/2 tanh(x/2)} {f(x) − f(−x)} − ρ f(−x)
//! ```
//!
//! with ρ = k₁/2 + k₂.

use num_complex::Complex64;

use super::TestFunction;
use crate::error::{domain, Error, Result};
use crate::multiplicity::Multiplicity;

/// Which of the two equivalent expressions of D to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CherednikForm {
    /// Coefficients k₁/(1 − e^{−x}) and 2k₂/(1 − e^{−2x}); undefined at x = 0.
    Regularized,
    /// Coefficients in coth(x/2) and tanh(x/2). At x = 0 this form returns the
    /// limit (1 + 2k₁ + 2k₂) f′(0) − ρ f(0), since f(x) − f(−x) cancels the pole.
    CothTanh,
}

/// D applied to a function known through f(x), f(−x) and f′(x).
pub fn cherednik_from_values(
    k: &Multiplicity,
    x: f64,
    f_x: Complex64,
    f_minus_x: Complex64,
    df_x: Complex64,
    form: CherednikForm,
) -> Result<Complex64> {
    let (k1, k2, rho) = (k.k1(), k.k2(), k.rho());
    match form {
        CherednikForm::Regularized => {
            if x == 0.0 {
                return Err(domain("regularized form of D is undefined at x = 0"));
            }
            let coef = k1 / (-(-x).exp_m1()) + k2 * 2.0 / (-(-2.0 * x).exp_m1());
            Ok(df_x + coef * (f_x - f_minus_x) - rho * f_x)
        }
        CherednikForm::CothTanh => {
            if x == 0.0 {
                return Ok(df_x * ((k1 + k2) * 2.0 + 1.0) - rho * f_x);
            }
            let coef = (k1 + k2) * 0.5 / (0.5 * x).tanh() + k2 * 0.5 * (0.5 * x).tanh();
            Ok(df_x + coef * (f_x - f_minus_x) - rho * f_minus_x)
        }
    }
}

/// D f(x) for a test function carrying its derivative.
pub fn cherednik_d(
    k: &Multiplicity,
    f: &TestFunction,
    x: f64,
    form: CherednikForm,
) -> Result<Complex64> {
    if !x.is_finite() {
        return Err(domain(format!("x must be finite, got {x}")));
    }
    let df = f
        .deriv(x)
        .ok_or_else(|| Error::Contract(format!("test function '{}' has no derivative", f.id())))?;
    cherednik_from_values(k, x, f.eval(x), f.eval(-x), df, form)
}

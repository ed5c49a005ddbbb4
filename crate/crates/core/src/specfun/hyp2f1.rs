//! Gauss hypergeometric function ₂F₁(a, b; c; Z) with complex parameters and
//! real argument Z < 1.
//!
//! For Z ≤ −1/2 the Pfaff transformation
//!
//! ```text
//! ₂F₁(a, b; c; Z) = (1 − Z)^(−a) ₂F₁(a, c − b; c; Z / (Z − 1))
//! ```
//!
//! maps the argument into [1/3, 1), so the power series always converges.
//! With Z = −sinh²(x/2) the transformed argument is tanh²(x/2).

use num_complex::Complex64;

use crate::error::{domain, Error, Result};

/// Default term cap of the power series.
pub const DEFAULT_TERM_CAP: usize = 20_000;

const STOP_RATIO: f64 = 1e-17;
const STOP_RUN: usize = 3;
const PFAFF_THRESHOLD: f64 = -0.5;

/// Arguments of ₂F₁(a, b; c; Z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyp2F1Args {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub z: f64,
}

impl Hyp2F1Args {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Self {
        Self { a, b, c, z }
    }

    fn validate(&self) -> Result<()> {
        if !(self.a.is_finite() && self.b.is_finite() && self.c.is_finite()) {
            return Err(domain("hyp2f1 parameters must be finite"));
        }
        if !self.z.is_finite() || self.z >= 1.0 {
            return Err(domain(format!("hyp2f1 requires Z < 1, got {}", self.z)));
        }
        let c = self.c;
        if c.im == 0.0 && c.re <= 0.0 && (c.re - c.re.round()).abs() < 1e-14 {
            return Err(domain(format!(
                "hyp2f1 requires c not a non-positive integer, got {c}"
            )));
        }
        Ok(())
    }
}

/// ₂F₁(a, b; c; Z) with the default term cap.
pub fn hyp2f1(args: &Hyp2F1Args) -> Result<Complex64> {
    hyp2f1_with_cap(args, DEFAULT_TERM_CAP)
}

/// ₂F₁(a, b; c; Z) stopping after at most `cap` series terms.
pub fn hyp2f1_with_cap(args: &Hyp2F1Args, cap: usize) -> Result<Complex64> {
    args.validate()?;
    let Hyp2F1Args { a, b, c, z } = *args;
    if z <= PFAFF_THRESHOLD {
        let w = z / (z - 1.0);
        let prefactor = (-a * (1.0 - z).ln()).exp();
        let series = power_series(a, c - b, c, w, cap).map_err(|e| scale_partial(e, prefactor))?;
        Ok(prefactor * series)
    } else {
        power_series(a, b, c, z, cap)
    }
}

fn scale_partial(err: Error, factor: Complex64) -> Error {
    match err {
        Error::NonConvergence {
            what,
            partial,
            est_error,
        } => Error::NonConvergence {
            what,
            partial: partial * factor,
            est_error: est_error * factor.norm(),
        },
        other => other,
    }
}

/// Σ (a)_n (b)_n / ((c)_n n!) w^n for |w| < 1.
fn power_series(a: Complex64, b: Complex64, c: Complex64, w: f64, cap: usize) -> Result<Complex64> {
    let mut sum = Complex64::new(1.0, 0.0);
    if w == 0.0 {
        return Ok(sum);
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut run = 0;
    for n in 0..cap {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * w;
        sum += term;
        if term.norm() <= STOP_RATIO * sum.norm() {
            run += 1;
            if run >= STOP_RUN {
                return Ok(sum);
            }
        } else {
            run = 0;
        }
    }
    // remaining tail of a geometric-like series
    let est_error = term.norm() / (1.0 - w.abs()).max(f64::EPSILON);
    Err(Error::NonConvergence {
        what: "hypergeometric series",
        partial: sum,
        est_error,
    })
}

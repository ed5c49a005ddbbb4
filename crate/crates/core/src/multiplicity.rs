use std::fmt;

use num_complex::Complex64;

use crate::error::{domain, Result};

/// The multiplicity pair k = (k₁, k₂).
///
/// Both parts must have positive real part. Purely real pairs take the
/// real-arithmetic fast path everywhere; the limit kernels with k₁ = 0 or
/// k₂ = 0 are separate functions that take plain `f64`s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Multiplicity {
    k1: Complex64,
    k2: Complex64,
}

impl Multiplicity {
    /// Real multiplicities, both strictly positive.
    pub fn new(k1: f64, k2: f64) -> Result<Self> {
        Self::complex(Complex64::new(k1, 0.0), Complex64::new(k2, 0.0))
    }

    /// Complex multiplicities with `Re k₁ > 0` and `Re k₂ > 0`.
    pub fn complex(k1: Complex64, k2: Complex64) -> Result<Self> {
        if !(k1.is_finite() && k2.is_finite()) {
            return Err(domain("multiplicities must be finite"));
        }
        if k1.re <= 0.0 || k2.re <= 0.0 {
            return Err(domain(format!(
                "multiplicities need positive real parts, got k1={k1}, k2={k2}"
            )));
        }
        Ok(Self { k1, k2 })
    }

    pub fn k1(&self) -> Complex64 {
        self.k1
    }

    pub fn k2(&self) -> Complex64 {
        self.k2
    }

    /// ρ = k₁/2 + k₂.
    pub fn rho(&self) -> Complex64 {
        self.k1 * 0.5 + self.k2
    }

    pub fn is_real_positive(&self) -> bool {
        self.k1.im == 0.0 && self.k2.im == 0.0
    }

    /// `(k₁, k₂)` when both are real.
    pub fn real_parts(&self) -> Option<(f64, f64)> {
        self.is_real_positive().then_some((self.k1.re, self.k2.re))
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.real_parts() {
            Some((k1, k2)) => write!(f, "k1={k1},k2={k2}"),
            None => write!(f, "k1={},k2={}", self.k1, self.k2),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Multiplicity::new(0.5, 0.5).is_ok());
        assert!(Multiplicity::new(0.0, 0.5).is_err());
        assert!(Multiplicity::new(0.5, -1.0).is_err());
        assert!(Multiplicity::new(f64::NAN, 1.0).is_err());
        assert!(Multiplicity::complex(Complex64::new(0.1, -3.0), Complex64::new(2.0, 1.0)).is_ok());
        assert!(Multiplicity::complex(Complex64::new(0.0, 1.0), Complex64::new(2.0, 1.0)).is_err());
    }

    #[test]
    fn rho_and_flags() {
        let k = Multiplicity::new(0.6, 0.25).unwrap();
        assert_eq!(k.rho(), Complex64::new(0.55, 0.0));
        assert_eq!(k.real_parts(), Some((0.6, 0.25)));
        let kc = Multiplicity::complex(Complex64::new(0.6, 1.0), Complex64::new(0.2, 0.0)).unwrap();
        assert!(!kc.is_real_positive());
        assert_eq!(kc.real_parts(), None);
    }
}

//! Field abstraction shared by the real fast path and the complex-parameter path.

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_complex::Complex64;

/// Scalars the kernel and quadrature code are generic over: `f64` for real
/// multiplicities, `Complex64` when either multiplicity has an imaginary part.
pub trait Scalar:
    Copy
    + Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Mul<f64, Output = Self>
    + AddAssign
{
    fn from_f64(x: f64) -> Self;

    fn zero() -> Self {
        Self::from_f64(0.0)
    }

    fn one() -> Self {
        Self::from_f64(1.0)
    }

    /// `base^e` on the principal branch; `base` must be real and `>= 0`.
    fn powr(base: f64, e: Self) -> Self;

    fn modulus(self) -> f64;

    fn is_finite(self) -> bool;

    fn to_complex(self) -> Complex64;
}

impl Scalar for f64 {
    #[inline]
    fn from_f64(x: f64) -> Self {
        x
    }

    #[inline]
    fn powr(base: f64, e: Self) -> Self {
        base.powf(e)
    }

    #[inline]
    fn modulus(self) -> f64 {
        self.abs()
    }

    #[inline]
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }

    #[inline]
    fn to_complex(self) -> Complex64 {
        Complex64::new(self, 0.0)
    }
}

impl Scalar for Complex64 {
    #[inline]
    fn from_f64(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }

    #[inline]
    fn powr(base: f64, e: Self) -> Self {
        if base == 0.0 {
            if e.re > 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            return Complex64::new(f64::INFINITY, 0.0);
        }
        (e * base.ln()).exp()
    }

    #[inline]
    fn modulus(self) -> f64 {
        self.norm()
    }

    #[inline]
    fn is_finite(self) -> bool {
        Complex64::is_finite(self)
    }

    #[inline]
    fn to_complex(self) -> Complex64 {
        self
    }
}

//! Gamma function for positive real arguments (Lanczos, g = 7, nine terms)
//! and a Stirling-series log-Gamma for complex arguments with positive real part.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{domain, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

// 0.5 * ln(2π)
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

fn lanczos_sum(xm1: f64) -> f64 {
    LANCZOS_COEF[1..]
        .iter()
        .enumerate()
        .fold(LANCZOS_COEF[0], |acc, (i, &p)| {
            acc + p / (xm1 + (i + 1) as f64)
        })
}

/// Γ(x) for real `x > 0`.
pub fn gamma_real(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(domain(format!(
            "gamma_real requires a finite x > 0, got {x}"
        )));
    }
    Ok(gamma_pos(x))
}

pub(crate) fn gamma_pos(x: f64) -> f64 {
    if x < 0.5 {
        // reflection; sin(πx) > 0 on (0, 1/2)
        return PI / ((PI * x).sin() * gamma_pos(1.0 - x));
    }
    if x > 171.5 {
        return f64::INFINITY;
    }
    let xm1 = x - 1.0;
    let t = xm1 + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(xm1 + 0.5) * (-t).exp() * lanczos_sum(xm1)
}

/// ln Γ(x) for real `x > 0`.
pub fn ln_gamma_real(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(domain(format!(
            "ln_gamma_real requires a finite x > 0, got {x}"
        )));
    }
    Ok(ln_gamma_pos(x))
}

pub(crate) fn ln_gamma_pos(x: f64) -> f64 {
    if x < 0.5 {
        return (PI / (PI * x).sin()).ln() - ln_gamma_pos(1.0 - x);
    }
    let xm1 = x - 1.0;
    let t = xm1 + LANCZOS_G + 0.5;
    HALF_LN_2PI + (xm1 + 0.5) * t.ln() - t + lanczos_sum(xm1).ln()
}

// B_{2m} / (2m (2m - 1)), m = 1..8
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// A branch of ln Γ(z) for `Re z > 0`, continuous along the real direction.
/// Only `exp` of the result is meaningful to callers; the imaginary part is
/// not reduced to the principal interval.
pub fn ln_gamma_complex(z: Complex64) -> Result<Complex64> {
    if !z.is_finite() || z.re <= 0.0 {
        return Err(domain(format!(
            "ln_gamma_complex requires Re z > 0, got {z}"
        )));
    }
    // shift up until the asymptotic series is accurate to double precision
    let mut shift = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.norm() < 16.0 {
        shift += w.ln();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut corr = Complex64::new(0.0, 0.0);
    let mut pow = inv;
    for &s in &STIRLING {
        corr += pow * s;
        pow *= inv2;
    }
    Ok((w - 0.5) * w.ln() - w + HALF_LN_2PI + corr - shift)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn known_values() {
        assert!(rel(gamma_real(0.5).unwrap(), PI.sqrt()) < 1e-14);
        assert!(rel(gamma_real(1.0).unwrap(), 1.0) < 1e-14);
        assert!(rel(gamma_real(5.0).unwrap(), 24.0) < 1e-14);
        assert!(rel(gamma_real(2.5).unwrap(), 0.75 * PI.sqrt()) < 1e-14);
        // Γ(1e-4) = 1/x - γ + O(x)
        let x = 1e-4;
        let expect = 1.0 / x - 0.577_215_664_901_532_9 + 0.989_055_995_327_972_6 * x;
        assert!(rel(gamma_real(x).unwrap(), expect) < 1e-12);
    }

    #[test]
    fn rejects_non_positive() {
        assert!(gamma_real(0.0).is_err());
        assert!(gamma_real(-1.5).is_err());
        assert!(gamma_real(f64::NAN).is_err());
        assert!(ln_gamma_real(0.0).is_err());
        assert!(ln_gamma_complex(Complex64::new(-0.1, 2.0)).is_err());
    }

    #[test]
    fn ln_gamma_matches_gamma() {
        for &x in &[1e-3, 0.3, 0.5, 1.7, 4.25, 12.0, 60.5] {
            let a = ln_gamma_real(x).unwrap();
            let b = gamma_real(x).unwrap().ln();
            assert!(
                (a - b).abs() < 1e-13 * b.abs().max(1.0),
                "x={x}: {a} vs {b}"
            );
        }
    }

    #[test]
    fn complex_log_gamma_on_real_axis() {
        for &x in &[0.1, 0.5, 1.0, 2.3, 7.9, 30.0] {
            let c = ln_gamma_complex(Complex64::new(x, 0.0)).unwrap();
            let r = ln_gamma_real(x).unwrap();
            assert!((c.re - r).abs() < 1e-13 * r.abs().max(1.0), "x={x}");
            assert!(c.im.abs() < 1e-15);
        }
    }

    #[test]
    fn complex_log_gamma_recurrence() {
        // Γ(z + 1) = z Γ(z)
        for &(re, im) in &[(0.3, 0.7), (1.2, -2.5), (0.05, 4.0), (3.0, 10.0)] {
            let z = Complex64::new(re, im);
            let lhs = ln_gamma_complex(z + 1.0).unwrap().exp();
            let rhs = z * ln_gamma_complex(z).unwrap().exp();
            assert!((lhs - rhs).norm() < 1e-12 * rhs.norm(), "z={z}");
        }
    }

    #[test]
    fn complex_log_gamma_reference() {
        // |Γ(1/2 + i t)|² = π / cosh(π t)
        for &t in &[0.5, 1.0, 3.0] {
            let g = ln_gamma_complex(Complex64::new(0.5, t)).unwrap().exp();
            let expect = PI / (PI * t).cosh();
            assert!(rel(g.norm_sqr(), expect) < 1e-12);
        }
    }
}

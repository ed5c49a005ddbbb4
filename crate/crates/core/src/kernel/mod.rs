//! The intertwining kernel 𝒦(x, y), its closed-form limits, and the
//! Jacobi-setting building blocks K, K̃, ∂ᵧK̃ from which it can be
//! assembled independently.
//!
//! For k₁, k₂ with positive real parts and |y| < |x|,
//!
//! ```text
//! 𝒦(x, y) = c/4 · A(x)⁻¹ ∫_{|y|}^{|x|} σ(x, y, z) (cosh z/2 − cosh y/2)^{k₁−1}
//!                                    (cosh x − cosh z)^{k₂−1} sinh z/2 dz
//! c = 2^{3k₁+3k₂} Γ(k₁ + k₂ + ½) / (√π Γ(k₁) Γ(k₂))
//! σ(x, y, z) = sign(x) { e^{x/2} 2cosh(x/2) − e^{−y/2} 2cosh(z/2) }
//! ```

pub(crate) mod core;
mod limits;

use num_complex::Complex64;

pub use self::core::{DerivativeConvention, KtildeForm};
pub use limits::{limit_kernel_k1_zero, limit_kernel_k2_zero};

use self::core::{constant_c_complex_raw, Core, Level};
use crate::config::QuadSettings;
use crate::error::{domain, Result};
use crate::multiplicity::Multiplicity;
use crate::quadrature::{integrate_mapped, tanh_sinh, EvalResult};
use crate::scalar::Scalar;

/// A point (x, y) with x ≠ 0 and |y| < |x|.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelPoint {
    x: f64,
    y: f64,
}

impl KernelPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite()) {
            return Err(domain(format!(
                "kernel point must be finite, got x={x}, y={y}"
            )));
        }
        if x == 0.0 {
            return Err(domain("require x != 0"));
        }
        if y.abs() >= x.abs() {
            return Err(domain(format!("require |y| < |x|, got x={x}, y={y}")));
        }
        Ok(Self { x, y })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    /// |x| − |y| > 0
    pub fn gap(&self) -> f64 {
        self.x.abs() - self.y.abs()
    }
}

/// A(x) = |2 sinh(x/2)|^{2k₁} |2 sinh x|^{2k₂}. Real when k is real.
pub fn weight_a(k: &Multiplicity, x: f64) -> Complex64 {
    let p = |b: f64, e: Complex64| <Complex64 as Scalar>::powr(b, e);
    p((2.0 * (0.5 * x).sinh()).abs(), k.k1() * 2.0) * p((2.0 * x.sinh()).abs(), k.k2() * 2.0)
}

/// c = 2^{3k₁+3k₂} Γ(k₁ + k₂ + ½) / (√π Γ(k₁) Γ(k₂)) for real k₁, k₂ > 0.
pub fn constant_c(k: &Multiplicity) -> Result<f64> {
    let (k1, k2) = k
        .real_parts()
        .ok_or_else(|| domain("constant_c needs real multiplicities; use constant_c_complex"))?;
    Ok(self::core::constant_c_real(k1, k2))
}

/// The same constant for complex multiplicities, through a complex log-Gamma.
pub fn constant_c_complex(k: &Multiplicity) -> Complex64 {
    constant_c_complex_raw(k.k1(), k.k2()).expect("multiplicities have positive real parts")
}

/// σ(x, y, z) = sign(x) { e^{x/2} 2cosh(x/2) − e^{−y/2} 2cosh(z/2) }.
pub fn sigma(x: f64, y: f64, z: f64) -> f64 {
    let sign = if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    };
    sign * ((0.5 * x).exp() * 2.0 * (0.5 * x).cosh() - (-0.5 * y).exp() * 2.0 * (0.5 * z).cosh())
}

#[derive(Debug, Clone)]
pub(crate) enum Backend {
    Real(Core<f64>),
    Complex(Core<Complex64>),
}

macro_rules! dispatch {
    ($backend:expr, $core:ident => $body:expr) => {
        match $backend {
            Backend::Real($core) => $body,
            Backend::Complex($core) => $body,
        }
    };
}
pub(crate) use dispatch;

/// Kernel evaluator for one multiplicity, with its quadrature rules precomputed.
///
/// Real multiplicities use Gauss–Jacobi rules for the weight
/// (1 + t)^{k₁−1}(1 − t)^{k₂−1}; complex ones use tanh-sinh with the same
/// powers folded into the weights.
#[derive(Debug, Clone)]
pub struct IntertwiningKernel {
    k: Multiplicity,
    pub(crate) backend: Backend,
}

impl IntertwiningKernel {
    pub fn new(k: Multiplicity) -> Result<Self> {
        Self::with_settings(k, QuadSettings::default())
    }

    pub fn with_settings(k: Multiplicity, settings: QuadSettings) -> Result<Self> {
        let backend = match k.real_parts() {
            Some((k1, k2)) => Backend::Real(Core::real(k1, k2, settings)?),
            None => Backend::Complex(Core::complex(k.k1(), k.k2(), settings)?),
        };
        Ok(Self { k, backend })
    }

    pub fn multiplicity(&self) -> &Multiplicity {
        &self.k
    }

    pub fn settings(&self) -> QuadSettings {
        dispatch!(&self.backend, c => c.settings)
    }

    /// 𝒦(x, y) with an error estimate from the refined inner rule.
    pub fn eval(&self, p: KernelPoint) -> Result<EvalResult> {
        dispatch!(&self.backend, c => {
            let base = c.kernel(p.x, p.y, p.gap(), Level::Base);
            let fine = c.kernel(p.x, p.y, p.gap(), Level::Fine);
            let (value, est_error) = c.checked(base, fine, "intertwining kernel")?;
            Ok(EvalResult { value: value.to_complex(), est_error, method: c.kind(Level::Base) })
        })
    }

    /// 𝒦(x, y) assembled from K(x/2, y/2), K̃(x/2, y/2) and ∂ᵧK̃, using the
    /// chain-rule convention for the derivative.
    pub fn eval_assembled(&self, p: KernelPoint) -> Result<EvalResult> {
        self.eval_assembled_with(p, DerivativeConvention::ChainRule)
    }

    pub fn eval_assembled_with(
        &self,
        p: KernelPoint,
        conv: DerivativeConvention,
    ) -> Result<EvalResult> {
        dispatch!(&self.backend, c => {
            let base = c.assembled_kernel(p.x, p.y, p.gap(), conv, Level::Base);
            let fine = c.assembled_kernel(p.x, p.y, p.gap(), conv, Level::Fine);
            let (value, est_error) = c.checked(base, fine, "assembled kernel")?;
            Ok(EvalResult { value: value.to_complex(), est_error, method: c.kind(Level::Base) })
        })
    }

    /// K(x, y), the intertwining kernel of the Jacobi setting.
    pub fn jacobi_kernel(&self, x: f64, y: f64) -> Result<EvalResult> {
        let gap = check_jacobi_point(x, y)?;
        dispatch!(&self.backend, c => {
            let base = c.jacobi_kernel(x, y, gap, Level::Base);
            let fine = c.jacobi_kernel(x, y, gap, Level::Fine);
            let (value, est_error) = c.checked(base, fine, "Jacobi kernel")?;
            Ok(EvalResult { value: value.to_complex(), est_error, method: c.kind(Level::Base) })
        })
    }

    /// K̃(x, y) = ∫_{|y|}^{|x|} K(w, y) A(2w) dw in the requested form.
    pub fn ktilde(&self, x: f64, y: f64, form: KtildeForm) -> Result<EvalResult> {
        let gap = check_jacobi_point(x, y)?;
        dispatch!(&self.backend, c => {
            if form == KtildeForm::Defining {
                let rule = tanh_sinh(c.settings.outer_level)?;
                let r = integrate_mapped(
                    &rule,
                    |m| c.weighted_jacobi_kernel(m.z, y, m.from_lo, Level::Base),
                    (y.abs(), x.abs()),
                )?;
                return Ok(r.to_complex());
            }
            let base = c.ktilde(x, y, gap, form, Level::Base);
            let fine = c.ktilde(x, y, gap, form, Level::Fine);
            let (value, est_error) = c.checked(base, fine, "K-tilde integral")?;
            Ok(EvalResult { value: value.to_complex(), est_error, method: c.kind(Level::Base) })
        })
    }

    /// ∂K̃/∂y at (x, y).
    pub fn dktilde_dy(&self, x: f64, y: f64) -> Result<EvalResult> {
        let gap = check_jacobi_point(x, y)?;
        dispatch!(&self.backend, c => {
            let base = c.dktilde_dy(x, y, gap, Level::Base);
            let fine = c.dktilde_dy(x, y, gap, Level::Fine);
            let (value, est_error) = c.checked(base, fine, "K-tilde derivative")?;
            Ok(EvalResult { value: value.to_complex(), est_error, method: c.kind(Level::Base) })
        })
    }
}

fn check_jacobi_point(x: f64, y: f64) -> Result<f64> {
    if !(x.is_finite() && y.is_finite()) || y.abs() >= x.abs() {
        return Err(domain(format!("require |y| < |x|, got x={x}, y={y}")));
    }
    Ok(x.abs() - y.abs())
}

/// 𝒦(x, y) for the multiplicity `k` with default quadrature settings.
pub fn intertwining_kernel(k: &Multiplicity, p: KernelPoint) -> Result<EvalResult> {
    IntertwiningKernel::new(*k)?.eval(p)
}

/// 𝒦(x, y) assembled from the Jacobi-setting kernels; an independent route
/// to the same value as [`intertwining_kernel`].
pub fn intertwining_kernel_assembled(k: &Multiplicity, p: KernelPoint) -> Result<EvalResult> {
    IntertwiningKernel::new(*k)?.eval_assembled(p)
}

/// K(x, y) in the Jacobi setting.
pub fn jacobi_kernel(k: &Multiplicity, x: f64, y: f64) -> Result<EvalResult> {
    IntertwiningKernel::new(*k)?.jacobi_kernel(x, y)
}

/// K̃(x, y) in the requested form.
pub fn ktilde(k: &Multiplicity, x: f64, y: f64, form: KtildeForm) -> Result<EvalResult> {
    IntertwiningKernel::new(*k)?.ktilde(x, y, form)
}

/// ∂K̃/∂y.
pub fn dktilde_dy(k: &Multiplicity, x: f64, y: f64) -> Result<EvalResult> {
    IntertwiningKernel::new(*k)?.dktilde_dy(x, y)
}

//! The intertwining operator V and its dual ᵗV as integral operators with
//! kernel 𝒦:
//!
//! ```text
//! V f(x)  = ∫_{|y|<|x|} 𝒦(x, y) f(y) dy,          V f(0) = f(0)
//! ᵗV g(y) = ∫_{|x|>|y|} 𝒦(x, y) g(x) A(x) dx
//! ```
//!
//! The outer integrals are split at the origin and use tanh-sinh, which
//! absorbs the (|x| − |y|)^{k₁+k₂−1} behaviour at the ends of the range.

use num_complex::Complex64;

use super::cherednik::{cherednik_from_values, CherednikForm};
use super::TestFunction;
use crate::config::QuadSettings;
use crate::error::{domain, Error, Result};
use crate::kernel::core::{Core, Level};
use crate::kernel::{dispatch, Backend, IntertwiningKernel};
use crate::multiplicity::Multiplicity;
use crate::quadrature::{tanh_sinh, EvalResult, QuadratureRule, RuleKind};
use crate::scalar::Scalar;

/// Both sides of an identity and their gap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapReport {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub gap: f64,
}

/// V and ᵗV for one multiplicity.
#[derive(Debug, Clone)]
pub struct Intertwiner {
    kernel: IntertwiningKernel,
    outer: QuadratureRule,
    outer_fine: QuadratureRule,
    nested: QuadratureRule,
}

// A(x)·V f(x), without dividing by A
fn weighted_v<T: Scalar>(
    core: &Core<T>,
    f: &TestFunction,
    x: f64,
    rule: &QuadratureRule,
) -> Result<Complex64> {
    let ax = x.abs();
    let pos: Complex64 = rule.sum_mapped(0.0, ax, |m| {
        core.weighted_kernel(x, m.z, m.to_hi, Level::Base)
            .to_complex()
            * f.eval(m.z)
    })?;
    let neg: Complex64 = rule.sum_mapped(-ax, 0.0, |m| {
        core.weighted_kernel(x, m.z, m.from_lo, Level::Base)
            .to_complex()
            * f.eval(m.z)
    })?;
    Ok(pos + neg)
}

fn v_value<T: Scalar>(
    core: &Core<T>,
    f: &TestFunction,
    x: f64,
    rule: &QuadratureRule,
) -> Result<Complex64> {
    if x == 0.0 {
        return Ok(f.eval(0.0));
    }
    let w = weighted_v(core, f, x, rule)?;
    Ok(w / core.weight(x).to_complex())
}

fn vt_value<T: Scalar>(
    core: &Core<T>,
    g: &TestFunction,
    a: f64,
    y: f64,
    rule: &QuadratureRule,
) -> Result<Complex64> {
    let ay = y.abs();
    if ay >= a {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let pos: Complex64 = rule.sum_mapped(ay, a, |m| {
        core.weighted_kernel(m.z, y, m.from_lo, Level::Base)
            .to_complex()
            * g.eval(m.z)
    })?;
    let neg: Complex64 = rule.sum_mapped(-a, -ay, |m| {
        core.weighted_kernel(m.z, y, m.to_hi, Level::Base)
            .to_complex()
            * g.eval(m.z)
    })?;
    Ok(pos + neg)
}

fn support_of(g: &TestFunction) -> Result<f64> {
    g.support().ok_or_else(|| {
        Error::Contract(format!(
            "test function '{}' declares no compact support",
            g.id()
        ))
    })
}

fn finite_x(x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("x must be finite, got {x}")))
    }
}

impl Intertwiner {
    pub fn new(k: Multiplicity) -> Result<Self> {
        Self::with_settings(k, QuadSettings::default())
    }

    pub fn with_settings(k: Multiplicity, settings: QuadSettings) -> Result<Self> {
        let outer = tanh_sinh(settings.outer_level)?;
        let outer_fine = outer.refined()?;
        Ok(Self {
            kernel: IntertwiningKernel::with_settings(k, settings)?,
            outer,
            outer_fine,
            nested: tanh_sinh(settings.nested_level)?,
        })
    }

    pub fn kernel(&self) -> &IntertwiningKernel {
        &self.kernel
    }

    pub fn multiplicity(&self) -> &Multiplicity {
        self.kernel.multiplicity()
    }

    fn method(&self) -> RuleKind {
        self.outer.kind()
    }

    fn v_at(&self, f: &TestFunction, x: f64) -> Result<Complex64> {
        dispatch!(&self.kernel.backend, c => v_value(c, f, x, &self.outer))
    }

    /// V f(x). At x = 0 this is f(0).
    pub fn apply_v(&self, f: &TestFunction, x: f64) -> Result<EvalResult> {
        finite_x(x)?;
        if x == 0.0 {
            return Ok(EvalResult {
                value: f.eval(0.0),
                est_error: 0.0,
                method: self.method(),
            });
        }
        let (value, fine) = dispatch!(&self.kernel.backend, c => (
            v_value(c, f, x, &self.outer)?,
            v_value(c, f, x, &self.outer_fine)?,
        ));
        Ok(EvalResult {
            value,
            est_error: (value - fine).norm(),
            method: self.method(),
        })
    }

    /// ᵗV g(y) for g with declared support [−a, a]; zero for |y| ≥ a.
    pub fn apply_vt(&self, g: &TestFunction, y: f64) -> Result<EvalResult> {
        finite_x(y)?;
        let a = support_of(g)?;
        let (value, fine) = dispatch!(&self.kernel.backend, c => (
            vt_value(c, g, a, y, &self.outer)?,
            vt_value(c, g, a, y, &self.outer_fine)?,
        ));
        Ok(EvalResult {
            value,
            est_error: (value - fine).norm(),
            method: self.method(),
        })
    }

    /// ∫ V f · g · A dx against ∫ f · ᵗV g dy, both over the support of g.
    /// The gap is |LHS − RHS| / max(|LHS|, |RHS|, 1).
    pub fn duality(&self, f: &TestFunction, g: &TestFunction) -> Result<GapReport> {
        let a = support_of(g)?;
        let rule = &self.nested;
        let (lhs, rhs) = dispatch!(&self.kernel.backend, c => {
            let outer = |lo: f64, hi: f64, side: &dyn Fn(f64) -> Result<Complex64>| -> Result<Complex64> {
                let mut err = None;
                let v: Complex64 = rule.sum(lo, hi, |z| match side(z) {
                    Ok(v) => v,
                    Err(e) => {
                        err.get_or_insert(e);
                        Complex64::new(0.0, 0.0)
                    }
                })?;
                err.map_or(Ok(v), Err)
            };
            let lhs_side = |x: f64| -> Result<Complex64> {
                let gx = g.eval(x);
                if gx == Complex64::new(0.0, 0.0) {
                    return Ok(gx);
                }
                Ok(weighted_v(c, f, x, rule)? * gx)
            };
            let rhs_side = |y: f64| -> Result<Complex64> { Ok(f.eval(y) * vt_value(c, g, a, y, rule)?) };
            let lhs = outer(-a, 0.0, &lhs_side)? + outer(0.0, a, &lhs_side)?;
            let rhs = outer(-a, 0.0, &rhs_side)? + outer(0.0, a, &rhs_side)?;
            (lhs, rhs)
        });
        let gap = (lhs - rhs).norm() / lhs.norm().max(rhs.norm()).max(1.0);
        Ok(GapReport { lhs, rhs, gap })
    }

    /// D(V f)(x) against V(f′)(x), with the derivative of V f taken by a
    /// centered difference of step 1e−4·max(1, |x|).
    pub fn intertwining(&self, f: &TestFunction, x: f64) -> Result<GapReport> {
        finite_x(x)?;
        let step = 1e-4 * x.abs().max(1.0);
        if x.abs() <= step {
            return Err(domain(format!(
                "intertwining check needs |x| > {step}, got {x}"
            )));
        }
        let df = f.derivative().ok_or_else(|| {
            Error::Contract(format!("test function '{}' has no derivative", f.id()))
        })?;
        let vf = |t: f64| self.v_at(f, t);
        let deriv = (vf(x + step)? - vf(x - step)?) / (2.0 * step);
        let lhs = cherednik_from_values(
            self.multiplicity(),
            x,
            vf(x)?,
            vf(-x)?,
            deriv,
            CherednikForm::Regularized,
        )?;
        let rhs = self.v_at(&df, x)?;
        Ok(GapReport {
            lhs,
            rhs,
            gap: (lhs - rhs).norm(),
        })
    }
}

/// V f(x) with default settings.
pub fn apply_v(k: &Multiplicity, f: &TestFunction, x: f64) -> Result<EvalResult> {
    Intertwiner::new(*k)?.apply_v(f, x)
}

/// ᵗV g(y) with default settings.
pub fn apply_vt(k: &Multiplicity, g: &TestFunction, y: f64) -> Result<EvalResult> {
    Intertwiner::new(*k)?.apply_vt(g, y)
}

/// Relative gap of the duality pairing between V and ᵗV.
pub fn duality_gap(k: &Multiplicity, f: &TestFunction, g: &TestFunction) -> Result<f64> {
    Ok(Intertwiner::new(*k)?.duality(f, g)?.gap)
}

/// |D(V f)(x) − V(f′)(x)|.
pub fn intertwine_gap(k: &Multiplicity, f: &TestFunction, x: f64) -> Result<f64> {
    Ok(Intertwiner::new(*k)?.intertwining(f, x)?.gap)
}

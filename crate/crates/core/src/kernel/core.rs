//! Generic evaluation of every kernel formula for one fixed multiplicity.
//!
//! All inner integrals are over z ∈ [|y|, |x|] and are rewritten in
//! u = cosh(z/2) (main kernel) or u = cosh z (Jacobi setting). In that
//! variable the factors (cosh − cosh)^{k−1} become (u − u₀)^{k₁−1}(U − u)^{k₂−1}
//! times a smooth positive factor, so after mapping [u₀, U] onto (−1, 1) the
//! weight is exactly (1 + t)^{k₁−1}(1 − t)^{k₂−1}.

use num_complex::Complex64;

use crate::config::QuadSettings;
use crate::error::{Error, Result};
use crate::quadrature::{gauss_jacobi, tanh_sinh, QuadratureRule, RuleKind};
use crate::scalar::Scalar;
use crate::specfun::{ln_gamma_complex, ln_gamma_pos};

/// Relative rounding floor added to every kernel error estimate.
const ROUNDOFF: f64 = 64.0 * f64::EPSILON;

#[derive(Debug, Clone, Copy)]
pub(crate) struct InnerNode<T> {
    one_plus: f64,
    one_minus: f64,
    weight: T,
}

#[derive(Debug, Clone)]
pub(crate) struct InnerRule<T> {
    nodes: Vec<InnerNode<T>>,
    kind: RuleKind,
}

impl<T: Scalar> InnerRule<T> {
    fn from_jacobi(rule: &QuadratureRule) -> Self {
        let nodes = rule
            .points()
            .map(|p| InnerNode {
                one_plus: p.one_plus,
                one_minus: p.one_minus,
                weight: T::from_f64(p.weight),
            })
            .collect();
        Self {
            nodes,
            kind: rule.kind(),
        }
    }

    // singular endpoint powers folded into the weights
    fn from_plain(rule: &QuadratureRule, k1: T, k2: T) -> Self {
        let nodes = rule
            .points()
            .map(|p| InnerNode {
                one_plus: p.one_plus,
                one_minus: p.one_minus,
                weight: T::powr(p.one_plus, k1 - T::one())
                    * T::powr(p.one_minus, k2 - T::one())
                    * p.weight,
            })
            .collect();
        Self {
            nodes,
            kind: rule.kind(),
        }
    }

    /// Σ wᵢ g(u(tᵢ), 1 + tᵢ, 1 − tᵢ) with u running linearly from `lo` to `hi = lo + 2h`.
    #[inline]
    fn sum<F: Fn(f64, f64, f64) -> T>(&self, lo: f64, hi: f64, h: f64, g: F) -> T {
        let mut acc = T::zero();
        for n in &self.nodes {
            let u = if n.one_plus <= 1.0 {
                lo + h * n.one_plus
            } else {
                hi - h * n.one_minus
            };
            acc += n.weight * g(u, n.one_plus, n.one_minus);
        }
        acc
    }
}

/// Which of the two rules to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Level {
    Base,
    Fine,
}

/// Convention for the y-derivative in the assembly of the kernel from the
/// Jacobi-setting building blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DerivativeConvention {
    /// d/dy of the map y ↦ K̃(x/2, y/2), i.e. ½ (∂₂K̃)(x/2, y/2).
    /// This is the convention under which the assembly reproduces the kernel.
    #[default]
    ChainRule,
    /// (∂₂K̃)(x/2, y/2) without the chain-rule factor. Kept for comparison only.
    PartialAtHalf,
}

/// Which closed integral is used for K̃.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KtildeForm {
    /// (c/k₂) ∫ (cosh z − cosh y)^{k₁−1} (cosh 2x − cosh 2z)^{k₂} sinh z dz
    Direct,
    /// (4c/k₁) ∫ (cosh z − cosh y)^{k₁} (cosh 2x − cosh 2z)^{k₂−1} cosh z sinh z dz
    ByParts,
    /// ∫_{|y|}^{|x|} K(w, y) A(2w) dw, evaluated as a nested integral
    Defining,
}

#[derive(Debug, Clone)]
pub(crate) struct Core<T> {
    pub(crate) k1: T,
    pub(crate) k2: T,
    pub(crate) c: T,
    base: InnerRule<T>,
    fine: InnerRule<T>,
    pub(crate) settings: QuadSettings,
}

impl Core<f64> {
    pub(crate) fn real(k1: f64, k2: f64, settings: QuadSettings) -> Result<Self> {
        let base = gauss_jacobi(settings.jacobi_nodes, k2 - 1.0, k1 - 1.0)?;
        let fine = base.refined()?;
        Ok(Self {
            k1,
            k2,
            c: constant_c_real(k1, k2),
            base: InnerRule::from_jacobi(&base),
            fine: InnerRule::from_jacobi(&fine),
            settings,
        })
    }
}

impl Core<Complex64> {
    pub(crate) fn complex(k1: Complex64, k2: Complex64, settings: QuadSettings) -> Result<Self> {
        let base = tanh_sinh(settings.inner_level)?;
        let fine = base.refined()?;
        Ok(Self {
            k1,
            k2,
            c: constant_c_complex_raw(k1, k2)?,
            base: InnerRule::from_plain(&base, k1, k2),
            fine: InnerRule::from_plain(&fine, k1, k2),
            settings,
        })
    }
}

pub(crate) fn constant_c_real(k1: f64, k2: f64) -> f64 {
    let ln = 3.0 * (k1 + k2) * std::f64::consts::LN_2 + ln_gamma_pos(k1 + k2 + 0.5)
        - 0.5 * std::f64::consts::PI.ln()
        - ln_gamma_pos(k1)
        - ln_gamma_pos(k2);
    ln.exp()
}

pub(crate) fn constant_c_complex_raw(k1: Complex64, k2: Complex64) -> Result<Complex64> {
    let ln = (k1 + k2) * (3.0 * std::f64::consts::LN_2) + ln_gamma_complex(k1 + k2 + 0.5)?
        - 0.5 * std::f64::consts::PI.ln()
        - ln_gamma_complex(k1)?
        - ln_gamma_complex(k2)?;
    Ok(ln.exp())
}

/// 2 sinh((a + b)/2) sinh(gap/2) = cosh a − cosh b for a ≥ b ≥ 0, gap = a − b.
#[inline]
fn cosh_difference(a: f64, b: f64, gap: f64) -> f64 {
    2.0 * (0.5 * (a + b)).sinh() * (0.5 * gap).sinh()
}

impl<T: Scalar> Core<T> {
    fn rule(&self, level: Level) -> &InnerRule<T> {
        match level {
            Level::Base => &self.base,
            Level::Fine => &self.fine,
        }
    }

    pub(crate) fn kind(&self, level: Level) -> RuleKind {
        self.rule(level).kind
    }

    /// A(x) = |2 sinh(x/2)|^{2k₁} |2 sinh x|^{2k₂}
    pub(crate) fn weight(&self, x: f64) -> T {
        T::powr((2.0 * (0.5 * x).sinh()).abs(), self.k1 * 2.0)
            * T::powr((2.0 * x.sinh()).abs(), self.k2 * 2.0)
    }

    fn inv_weight(&self, x: f64) -> T {
        T::powr((2.0 * (0.5 * x).sinh()).abs(), -(self.k1 * 2.0))
            * T::powr((2.0 * x.sinh()).abs(), -(self.k2 * 2.0))
    }

    /// A(x)·𝒦(x, y) for |y| < |x| with `gap = |x| − |y|`.
    pub(crate) fn weighted_kernel(&self, x: f64, y: f64, gap: f64, level: Level) -> T {
        let (ax, ay) = (x.abs(), y.abs());
        let big_u = (0.5 * x).cosh();
        let u0 = (0.5 * y).cosh();
        let h = 0.5 * cosh_difference(0.5 * ax, 0.5 * ay, 0.5 * gap);
        if h <= 0.0 {
            return T::zero();
        }
        let sign = x.signum();
        let lead = (0.5 * x).exp() * 2.0 * big_u;
        let slope = (-0.5 * y).exp() * 2.0;
        let k2m1 = self.k2 - T::one();
        let integral = self.rule(level).sum(u0, big_u, h, |u, _, _| {
            T::powr(big_u + u, k2m1) * (sign * (lead - slope * u))
        });
        self.c * 0.25 * T::powr(2.0, self.k2) * T::powr(h, self.k1 + self.k2 - T::one()) * integral
    }

    /// 𝒦(x, y).
    pub(crate) fn kernel(&self, x: f64, y: f64, gap: f64, level: Level) -> T {
        self.inv_weight(x) * self.weighted_kernel(x, y, gap, level)
    }

    // Jacobi setting: u = cosh z on [cosh y, cosh x].

    fn jacobi_frame(x: f64, y: f64, gap: f64) -> (f64, f64, f64) {
        let big_x = x.cosh();
        let u0 = y.cosh();
        let h = 0.5 * cosh_difference(x.abs(), y.abs(), gap);
        (big_x, u0, h)
    }

    /// A(2x)·K(x, y).
    pub(crate) fn weighted_jacobi_kernel(&self, x: f64, y: f64, gap: f64, level: Level) -> T {
        let (big_x, u0, h) = Self::jacobi_frame(x, y, gap);
        if h <= 0.0 {
            return T::zero();
        }
        let k2m1 = self.k2 - T::one();
        let integral = self
            .rule(level)
            .sum(u0, big_x, h, |u, _, _| T::powr(big_x + u, k2m1));
        self.c
            * 2.0
            * (2.0 * x).sinh().abs()
            * T::powr(2.0, k2m1)
            * T::powr(h, self.k1 + self.k2 - T::one())
            * integral
    }

    /// K(x, y), the kernel of the intertwiner in the Jacobi setting.
    pub(crate) fn jacobi_kernel(&self, x: f64, y: f64, gap: f64, level: Level) -> T {
        self.inv_weight(2.0 * x) * self.weighted_jacobi_kernel(x, y, gap, level)
    }

    /// K̃(x, y) by one of the two closed integrals.
    pub(crate) fn ktilde(&self, x: f64, y: f64, gap: f64, form: KtildeForm, level: Level) -> T {
        let (big_x, u0, h) = Self::jacobi_frame(x, y, gap);
        if h <= 0.0 {
            return T::zero();
        }
        let scale = T::powr(h, self.k1 + self.k2);
        match form {
            KtildeForm::Direct | KtildeForm::Defining => {
                let k2 = self.k2;
                let integral = self.rule(level).sum(u0, big_x, h, |u, _, one_minus| {
                    T::powr(big_x + u, k2) * one_minus
                });
                self.c / self.k2 * T::powr(2.0, self.k2) * scale * integral
            }
            KtildeForm::ByParts => {
                let k2m1 = self.k2 - T::one();
                let integral = self.rule(level).sum(u0, big_x, h, |u, one_plus, _| {
                    T::powr(big_x + u, k2m1) * (u * one_plus)
                });
                self.c * 4.0 / self.k1 * T::powr(2.0, k2m1) * scale * integral
            }
        }
    }

    /// ∂K̃/∂y at (x, y).
    pub(crate) fn dktilde_dy(&self, x: f64, y: f64, gap: f64, level: Level) -> T {
        if y == 0.0 {
            return T::zero();
        }
        let (big_x, u0, h) = Self::jacobi_frame(x, y, gap);
        if h <= 0.0 {
            return T::zero();
        }
        let k2m1 = self.k2 - T::one();
        let integral = self
            .rule(level)
            .sum(u0, big_x, h, |u, _, _| T::powr(big_x + u, k2m1) * u);
        -(self.c
            * 4.0
            * y.sinh()
            * T::powr(2.0, k2m1)
            * T::powr(h, self.k1 + self.k2 - T::one())
            * integral)
    }

    /// 𝒦(x, y) assembled from K, K̃ and ∂ᵧK̃ at (x/2, y/2).
    pub(crate) fn assembled_kernel(
        &self,
        x: f64,
        y: f64,
        gap: f64,
        conv: DerivativeConvention,
        level: Level,
    ) -> T {
        let (hx, hy, hgap) = (0.5 * x, 0.5 * y, 0.5 * gap);
        let sign = x.signum();
        let inv_a = self.inv_weight(x);
        let chain = match conv {
            DerivativeConvention::ChainRule => 0.5,
            DerivativeConvention::PartialAtHalf => 1.0,
        };
        let jk = self.jacobi_kernel(hx, hy, hgap, level);
        let kt = self.ktilde(hx, hy, hgap, KtildeForm::Direct, level);
        let dkt = self.dktilde_dy(hx, hy, hgap, level);
        jk * 0.25 + (self.k1 * 0.25 + self.k2 * 0.5) * inv_a * kt * sign
            - inv_a * dkt * (0.5 * chain * sign)
    }

    /// Turns a base/fine pair into a checked result. The estimate never
    /// drops below a rounding floor, since two rules agreeing bit for bit
    /// say nothing about the error of the arithmetic they share.
    pub(crate) fn checked(&self, base: T, fine: T, what: &'static str) -> Result<(T, f64)> {
        let est = (base - fine).modulus() + ROUNDOFF * base.modulus();
        if !base.is_finite() || !fine.is_finite() {
            return Err(Error::NonConvergence {
                what,
                partial: base.to_complex(),
                est_error: f64::INFINITY,
            });
        }
        if est > self.settings.max_rel_error * base.modulus() && est > f64::MIN_POSITIVE {
            return Err(Error::NonConvergence {
                what,
                partial: base.to_complex(),
                est_error: est,
            });
        }
        Ok((base, est))
    }
}

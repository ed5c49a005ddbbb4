//! Quadrature rules on the reference interval (−1, 1) and the integration
//! driver that maps them onto finite intervals.
//!
//! Every rule can be refined (n → 2n, level → level + 1); [`integrate`]
//! reports the difference between the two as its error estimate.

mod gauss;
mod tanh_sinh;

use std::fmt;

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::scalar::Scalar;

pub use gauss::jacobi_weight_integral;

/// Largest `n` accepted by the public constructors.
pub const MAX_GAUSS_NODES: usize = 512;
/// Largest tanh-sinh level accepted by the public constructor.
pub const MAX_TANH_SINH_LEVEL: u32 = 12;

// refinements may go one step past the public limits
const MAX_GAUSS_NODES_INTERNAL: usize = 2 * MAX_GAUSS_NODES;
const MAX_TANH_SINH_LEVEL_INTERNAL: u32 = MAX_TANH_SINH_LEVEL + 1;

/// Which family a rule belongs to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RuleKind {
    Legendre {
        n: usize,
    },
    /// Weight (1 − t)^α (1 + t)^β.
    Jacobi {
        n: usize,
        alpha: f64,
        beta: f64,
    },
    TanhSinh {
        level: u32,
    },
}

impl fmt::Display for RuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RuleKind::Legendre { n } => write!(f, "gauss-legendre(n={n})"),
            RuleKind::Jacobi { n, alpha, beta } => {
                write!(f, "gauss-jacobi(n={n},alpha={alpha},beta={beta})")
            }
            RuleKind::TanhSinh { level } => write!(f, "tanh-sinh(level={level})"),
        }
    }
}

/// One abscissa of a rule, with both endpoint distances stored exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RuleNode {
    pub t: f64,
    /// 1 + t
    pub one_plus: f64,
    /// 1 − t
    pub one_minus: f64,
    pub weight: f64,
}

/// An abscissa mapped onto `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MappedNode {
    pub z: f64,
    /// z − lo, without cancellation
    pub from_lo: f64,
    /// hi − z, without cancellation
    pub to_hi: f64,
}

/// Nodes and weights of a concrete rule on (−1, 1).
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    kind: RuleKind,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    // 1 − |t|
    complements: Vec<f64>,
}

/// A value with its estimated absolute error and the rule that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult<V = Complex64> {
    pub value: V,
    pub est_error: f64,
    pub method: RuleKind,
}

impl<V: Scalar> EvalResult<V> {
    pub fn to_complex(self) -> EvalResult<Complex64> {
        EvalResult {
            value: self.value.to_complex(),
            est_error: self.est_error,
            method: self.method,
        }
    }
}

/// Classical Gauss–Legendre rule, `1 <= n <= 512`.
pub fn gauss_legendre(n: usize) -> Result<QuadratureRule> {
    check_n(n, MAX_GAUSS_NODES)?;
    QuadratureRule::gauss(RuleKind::Legendre { n }, n, 0.0, 0.0)
}

/// Gauss–Jacobi rule for the weight (1 − t)^α (1 + t)^β, `α, β > −1`.
pub fn gauss_jacobi(n: usize, alpha: f64, beta: f64) -> Result<QuadratureRule> {
    check_n(n, MAX_GAUSS_NODES)?;
    QuadratureRule::gauss(RuleKind::Jacobi { n, alpha, beta }, n, alpha, beta)
}

/// Tanh-sinh rule with step 2^(1 − level), `1 <= level <= 12`.
pub fn tanh_sinh(level: u32) -> Result<QuadratureRule> {
    if !(1..=MAX_TANH_SINH_LEVEL).contains(&level) {
        return Err(domain(format!(
            "tanh-sinh level must be in 1..={MAX_TANH_SINH_LEVEL}, got {level}"
        )));
    }
    Ok(QuadratureRule::tanh_sinh_unchecked(level))
}

fn check_n(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(domain(format!(
            "number of Gauss nodes must be in 1..={max}, got {n}"
        )));
    }
    Ok(())
}

impl QuadratureRule {
    fn gauss(kind: RuleKind, n: usize, alpha: f64, beta: f64) -> Result<Self> {
        let (nodes, weights) = gauss::jacobi_nodes_weights(n, alpha, beta)?;
        let complements = nodes.iter().map(|t| 1.0 - t.abs()).collect();
        Ok(Self {
            kind,
            nodes,
            weights,
            complements,
        })
    }

    fn tanh_sinh_unchecked(level: u32) -> Self {
        let (nodes, weights, complements) = tanh_sinh::tanh_sinh_nodes(level);
        Self {
            kind: RuleKind::TanhSinh { level },
            nodes,
            weights,
            complements,
        }
    }

    pub fn kind(&self) -> RuleKind {
        self.kind
    }

    /// Abscissae in increasing order. Tanh-sinh nodes closer to ±1 than the
    /// double-precision spacing round to ±1 here; [`QuadratureRule::points`]
    /// keeps them distinct.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = RuleNode> + '_ {
        self.nodes
            .iter()
            .zip(&self.weights)
            .zip(&self.complements)
            .map(|((&t, &weight), &comp)| {
                let (one_plus, one_minus) = if t < 0.0 {
                    (comp, 1.0 - t)
                } else {
                    (1.0 + t, comp)
                };
                RuleNode {
                    t,
                    one_plus,
                    one_minus,
                    weight,
                }
            })
    }

    /// The next rule in the same family (n → 2n, level → level + 1).
    pub fn refined(&self) -> Result<Self> {
        match self.kind {
            RuleKind::Legendre { n } => {
                check_n(2 * n, MAX_GAUSS_NODES_INTERNAL)?;
                Self::gauss(RuleKind::Legendre { n: 2 * n }, 2 * n, 0.0, 0.0)
            }
            RuleKind::Jacobi { n, alpha, beta } => {
                check_n(2 * n, MAX_GAUSS_NODES_INTERNAL)?;
                Self::gauss(
                    RuleKind::Jacobi {
                        n: 2 * n,
                        alpha,
                        beta,
                    },
                    2 * n,
                    alpha,
                    beta,
                )
            }
            RuleKind::TanhSinh { level } => {
                if level >= MAX_TANH_SINH_LEVEL_INTERNAL {
                    return Err(domain("tanh-sinh rule cannot be refined further"));
                }
                Ok(Self::tanh_sinh_unchecked(level + 1))
            }
        }
    }

    /// Σ wᵢ f(zᵢ) · (hi − lo)/2 over the nodes mapped onto `[lo, hi]`.
    ///
    /// For a Jacobi rule this approximates
    /// ∫ (1 − t(z))^α (1 + t(z))^β f(z) dz with t the reference coordinate.
    pub fn sum_mapped<V, F>(&self, lo: f64, hi: f64, mut f: F) -> Result<V>
    where
        V: Scalar,
        F: FnMut(MappedNode) -> V,
    {
        check_interval(lo, hi)?;
        let half = 0.5 * (hi - lo);
        let mut acc = V::zero();
        for p in self.points() {
            let from_lo = half * p.one_plus;
            let to_hi = half * p.one_minus;
            let z = if p.t <= 0.0 { lo + from_lo } else { hi - to_hi };
            let v = f(MappedNode { z, from_lo, to_hi });
            if !v.is_finite() {
                return Err(Error::Evaluation { node: z });
            }
            acc += v * p.weight;
        }
        Ok(acc * half)
    }

    /// [`QuadratureRule::sum_mapped`] for an integrand of z alone.
    pub fn sum<V, F>(&self, lo: f64, hi: f64, mut f: F) -> Result<V>
    where
        V: Scalar,
        F: FnMut(f64) -> V,
    {
        self.sum_mapped(lo, hi, |m| f(m.z))
    }
}

fn check_interval(lo: f64, hi: f64) -> Result<()> {
    if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
        return Err(domain(format!(
            "integration interval must be finite with lo < hi, got ({lo}, {hi})"
        )));
    }
    Ok(())
}

/// Integrates `f` over `[lo, hi]` with `rule`, estimating the error by
/// comparison with the refined rule.
pub fn integrate<V, F>(rule: &QuadratureRule, f: F, interval: (f64, f64)) -> Result<EvalResult<V>>
where
    V: Scalar,
    F: FnMut(f64) -> V,
{
    let mut f = f;
    integrate_mapped(rule, |m: MappedNode| f(m.z), interval)
}

/// [`integrate`] for integrands that need exact endpoint distances.
pub fn integrate_mapped<V, F>(
    rule: &QuadratureRule,
    mut f: F,
    interval: (f64, f64),
) -> Result<EvalResult<V>>
where
    V: Scalar,
    F: FnMut(MappedNode) -> V,
{
    let (lo, hi) = interval;
    let value = rule.sum_mapped(lo, hi, &mut f)?;
    let fine = rule.refined()?.sum_mapped(lo, hi, &mut f)?;
    Ok(EvalResult {
        value,
        est_error: (value - fine).modulus(),
        method: rule.kind(),
    })
}

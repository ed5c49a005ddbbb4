//! Registered test functions: plane waves, monomials, Gaussians and a
//! compactly supported bump.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{domain, Result};

type Eval = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;

/// A smooth function ℝ → ℂ with an optional derivative and an optional
/// compact support [−a, a].
#[derive(Clone)]
pub struct TestFunction {
    id: String,
    eval: Eval,
    deriv: Option<Eval>,
    support: Option<f64>,
}

impl fmt::Debug for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TestFunction")
            .field("id", &self.id)
            .field("has_derivative", &self.deriv.is_some())
            .field("support", &self.support)
            .finish()
    }
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

impl TestFunction {
    /// Wraps an arbitrary closure. No derivative, no declared support.
    pub fn from_fn(
        id: impl Into<String>,
        f: impl Fn(f64) -> Complex64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            id: id.into(),
            eval: Arc::new(f),
            deriv: None,
            support: None,
        }
    }

    pub fn with_derivative(
        mut self,
        df: impl Fn(f64) -> Complex64 + Send + Sync + 'static,
    ) -> Self {
        self.deriv = Some(Arc::new(df));
        self
    }

    /// Declares that the function vanishes outside [−a, a].
    pub fn with_support(mut self, a: f64) -> Self {
        self.support = Some(a);
        self
    }

    /// The constant function `value`.
    pub fn constant(value: Complex64) -> Self {
        Self::from_fn(format!("const:{}", value.re), move |_| value).with_derivative(|_| re(0.0))
    }

    /// y ↦ e^{iλy}
    pub fn plane_wave(lambda: Complex64) -> Self {
        let il = Complex64::i() * lambda;
        Self::from_fn(format!("plane:{}", lambda.re), move |y| (il * y).exp())
            .with_derivative(move |y| il * (il * y).exp())
    }

    /// y ↦ yⁿ
    pub fn monomial(n: u32) -> Self {
        let d = n as f64;
        Self::from_fn(format!("mono:{n}"), move |y| re(y.powi(n as i32))).with_derivative(
            move |y| {
                if n == 0 {
                    re(0.0)
                } else {
                    re(d * y.powi(n as i32 - 1))
                }
            },
        )
    }

    /// y ↦ exp(−((y − center)/width)²)
    pub fn gaussian(center: f64, width: f64) -> Self {
        Self::from_fn(format!("gauss:{center}:{width}"), move |y| {
            let s = (y - center) / width;
            re((-s * s).exp())
        })
        .with_derivative(move |y| {
            let s = (y - center) / width;
            re(-2.0 * s / width * (-s * s).exp())
        })
    }

    /// y ↦ exp(−1/(1 − (y/a)²)) on (−a, a), zero elsewhere.
    pub fn bump(a: f64) -> Self {
        Self::from_fn(format!("bump:{a}"), move |y| {
            let r = y / a;
            if r.abs() >= 1.0 {
                re(0.0)
            } else {
                re((-1.0 / (1.0 - r * r)).exp())
            }
        })
        .with_derivative(move |y| {
            let r = y / a;
            if r.abs() >= 1.0 {
                re(0.0)
            } else {
                let q = 1.0 - r * r;
                re((-1.0 / q).exp() * (-2.0 * r / a) / (q * q))
            }
        })
        .with_support(a)
    }

    /// Looks a function up by registry id:
    /// `one`, `plane:<λ>`, `mono:<n>`, `gauss:<center>:<width>`, `bump:<a>`.
    pub fn from_id(id: &str) -> Result<Self> {
        let parts: Vec<&str> = id.split(':').collect();
        let num = |s: &str| -> Result<f64> {
            s.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| domain(format!("bad number '{s}' in test function id '{id}'")))
        };
        match parts.as_slice() {
            ["one"] => Ok(Self::constant(re(1.0)).renamed("one")),
            ["plane", l] => Ok(Self::plane_wave(re(num(l)?))),
            ["mono", n] => n
                .trim()
                .parse::<u32>()
                .map(Self::monomial)
                .map_err(|_| domain(format!("bad degree in '{id}'"))),
            ["gauss", c, w] => {
                let w = num(w)?;
                if w <= 0.0 {
                    return Err(domain(format!("gaussian width must be > 0 in '{id}'")));
                }
                Ok(Self::gaussian(num(c)?, w))
            }
            ["bump", a] => {
                let a = num(a)?;
                if a <= 0.0 {
                    return Err(domain(format!("bump radius must be > 0 in '{id}'")));
                }
                Ok(Self::bump(a))
            }
            _ => Err(domain(format!(
                "unknown test function '{id}' (expected one, plane:<l>, mono:<n>, gauss:<c>:<w>, bump:<a>)"
            ))),
        }
    }

    fn renamed(mut self, id: &str) -> Self {
        self.id = id.to_owned();
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        (self.eval)(x)
    }

    pub fn deriv(&self, x: f64) -> Option<Complex64> {
        self.deriv.as_ref().map(|d| d(x))
    }

    pub fn has_derivative(&self) -> bool {
        self.deriv.is_some()
    }

    pub fn support(&self) -> Option<f64> {
        self.support
    }

    /// f′ as a test function of its own (without a second derivative).
    pub fn derivative(&self) -> Option<TestFunction> {
        self.deriv.clone().map(|d| TestFunction {
            id: format!("d({})", self.id),
            eval: d,
            deriv: None,
            support: self.support,
        })
    }

    /// s·f
    pub fn scaled(&self, s: Complex64) -> TestFunction {
        let (f, d) = (self.eval.clone(), self.deriv.clone());
        TestFunction {
            id: format!("{}*({})", s.re, self.id),
            eval: Arc::new(move |x| s * f(x)),
            deriv: d.map(|d| -> Eval { Arc::new(move |x| s * d(x)) }),
            support: self.support,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_derivative(f: &TestFunction, xs: &[f64]) {
        let h = 1e-5;
        for &x in xs {
            let fd = (f.eval(x + h) - f.eval(x - h)) / (2.0 * h);
            let d = f.deriv(x).unwrap();
            assert!((fd - d).norm() < 1e-6, "{}: x={x} {fd} vs {d}", f.id());
        }
    }

    #[test]
    fn registry_derivatives_match_differences() {
        let xs = [-1.7, -0.4, 0.0, 0.3, 1.2, 1.9];
        for id in [
            "one",
            "plane:1.5",
            "plane:-2.5",
            "mono:0",
            "mono:1",
            "mono:3",
            "gauss:0.25:1",
            "bump:2",
        ] {
            check_derivative(&TestFunction::from_id(id).unwrap(), &xs);
        }
    }

    #[test]
    fn bump_support() {
        let b = TestFunction::from_id("bump:2").unwrap();
        assert_eq!(b.support(), Some(2.0));
        for &x in &[2.0, -2.0, 2.5, -7.0] {
            assert_eq!(b.eval(x), re(0.0));
        }
        assert!(b.eval(1.99).re > 0.0);
        assert!((b.eval(0.0).re - (-1f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn bad_ids() {
        for id in [
            "",
            "plane",
            "plane:x",
            "mono:-1",
            "gauss:0:0",
            "bump:-1",
            "sin:1",
        ] {
            assert!(TestFunction::from_id(id).is_err(), "{id}");
        }
    }

    #[test]
    fn derived_functions() {
        let f = TestFunction::monomial(2);
        let df = f.derivative().unwrap();
        assert_eq!(df.eval(3.0), re(6.0));
        assert!(!df.has_derivative());
        let g = f.scaled(re(2.0));
        assert_eq!(g.eval(3.0), re(18.0));
        assert_eq!(g.deriv(3.0), Some(re(12.0)));
    }
}

//! Verification suites over the built-in grids.
//!
//! Each suite returns one [`CheckRow`] per comparison. A row passes when
//! `gap <= tol`; suites whose pass condition is not a plain tolerance
//! (positivity, δ₀) say so on their variant.

use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::config::{self, tol, QuadSettings};
use crate::error::{domain, Error, Result};
use crate::kernel::{
    limit_kernel_k1_zero, limit_kernel_k2_zero, IntertwiningKernel, KernelPoint, KtildeForm,
};
use crate::multiplicity::Multiplicity;
use crate::operators::{
    cherednik_from_values, positivity_scan_with, CherednikForm, Intertwiner, TestFunction,
};
use crate::quadrature::{
    gauss_jacobi, gauss_legendre, integrate, integrate_mapped, jacobi_weight_integral, tanh_sinh,
};
use crate::specfun::{opdam_g, SpectralParam};
use crate::Complex64;

/// A named group of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Every suite below, in declaration order.
    All,
    /// V(e^{iλ·}) = G_{iλ} on the operator grid.
    Eigen,
    /// ∫ Vf·g·A = ∫ f·ᵗVg for the registered pair at every grid k.
    Duality,
    /// D∘V = V∘d/dx for plane waves and monomials.
    Intertwine,
    /// Direct kernel against the assembled one, both K̃ integrals against
    /// each other, and ∂ᵧK̃ against a centered difference.
    KernelConsistency,
    /// Kernel sign over the scan grid plus the y ↘ −x corner.
    /// Passes iff the value is > 0; tolerance overrides do not apply.
    Positivity,
    /// Small-multiplicity kernels against the closed-form limits.
    Limits,
    /// The two forms of D on random inputs, and D G_{iλ} = iλ G_{iλ}.
    Cherednik,
    /// |V f(x) − f(0)| ≤ C·x, decreasing, with C fixed by the coarsest x.
    /// Tolerance overrides do not apply.
    Delta,
    /// Exactness and singular-integrand benchmarks of the rules.
    Quadrature,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Eigen,
        Suite::Duality,
        Suite::Intertwine,
        Suite::KernelConsistency,
        Suite::Positivity,
        Suite::Limits,
        Suite::Cherednik,
        Suite::Delta,
        Suite::Quadrature,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Eigen => "eigen",
            Suite::Duality => "duality",
            Suite::Intertwine => "intertwine",
            Suite::KernelConsistency => "kernel-consistency",
            Suite::Positivity => "positivity",
            Suite::Limits => "limits",
            Suite::Cherednik => "cherednik",
            Suite::Delta => "delta",
            Suite::Quadrature => "quadrature",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::EACH)
            .find(|v| v.name() == s)
            .ok_or_else(|| domain(format!("unknown suite '{s}'")))
    }
}

/// One comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckRow {
    pub check: String,
    pub point: String,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub gap: f64,
    pub tol: f64,
    pub pass: bool,
}

impl CheckRow {
    fn new(check: &str, point: String, lhs: Complex64, rhs: Complex64, gap: f64, tol: f64) -> Self {
        Self {
            check: check.to_owned(),
            point,
            lhs,
            rhs,
            gap,
            tol,
            pass: gap <= tol,
        }
    }
}

/// Options shared by all suites.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct VerifyOptions {
    pub settings: QuadSettings,
    /// Replaces every default tolerance (except where a suite says otherwise).
    pub tol: Option<f64>,
}

impl VerifyOptions {
    fn tol(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }
}

/// Runs `suite`; rows come back in grid order.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Vec<CheckRow>> {
    if let Some(t) = opts.tol {
        if t.is_nan() || t <= 0.0 {
            return Err(domain(format!("tolerance override must be > 0, got {t}")));
        }
    }
    match suite {
        Suite::All => {
            let mut rows = Vec::new();
            for s in Suite::EACH {
                rows.extend(run_suite(s, opts)?);
            }
            Ok(rows)
        }
        Suite::Eigen => eigen(opts),
        Suite::Duality => duality(opts),
        Suite::Intertwine => intertwine(opts),
        Suite::KernelConsistency => kernel_consistency(opts),
        Suite::Positivity => positivity(opts),
        Suite::Limits => limits(opts),
        Suite::Cherednik => cherednik(opts),
        Suite::Delta => delta(opts),
        Suite::Quadrature => quadrature(opts),
    }
}

/// All (k₁, k₂) pairs of the default multiplicity grid.
pub fn grid_k() -> Vec<(f64, f64)> {
    config::GRID_K
        .iter()
        .flat_map(|&a| config::GRID_K.iter().map(move |&b| (a, b)))
        .collect()
}

fn kpt(k: (f64, f64)) -> String {
    format!("k=({},{})", k.0, k.1)
}

fn real(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

fn rel_gap(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

fn intertwiners(opts: &VerifyOptions) -> Result<Vec<((f64, f64), Intertwiner)>> {
    grid_k()
        .into_iter()
        .map(|k| {
            Ok((
                k,
                Intertwiner::with_settings(Multiplicity::new(k.0, k.1)?, opts.settings)?,
            ))
        })
        .collect()
}

fn kernels(opts: &VerifyOptions) -> Result<Vec<((f64, f64), IntertwiningKernel)>> {
    grid_k()
        .into_iter()
        .map(|k| {
            Ok((
                k,
                IntertwiningKernel::with_settings(Multiplicity::new(k.0, k.1)?, opts.settings)?,
            ))
        })
        .collect()
}

fn eigen(opts: &VerifyOptions) -> Result<Vec<CheckRow>> {
    let ops = intertwiners(opts)?;
    let jobs: Vec<_> = ops
        .iter()
        .flat_map(|(k, op)| {
            config::GRID_LAMBDA
                .iter()
                .flat_map(move |&l| config::GRID_OPERATOR_X.iter().map(move |&x| (*k, op, l, x)))
        })
        .collect();
    jobs.par_iter()
        .map(|&(k, op, l, x)| {
            let point = format!("{} lambda={l} x={x}", kpt(k));
            let run = || -> Result<CheckRow> {
                let f = TestFunction::plane_wave(real(l));
                let lhs = op.apply_v(&f, x)?.value;
                let rhs = opdam_g(op.multiplicity(), SpectralParam::real(l)?, x)?;
                let gap = (lhs - rhs).norm() / (1.0 + rhs.norm());
                Ok(CheckRow::new(
                    "eigen",
                    point.clone(),
                    lhs,
                    rhs,
                    gap,
                    opts.tol(tol::EIGEN),
                ))
            };
            run().map_err(|e| e.at(point.clone()))
        })
        .collect()
}

/// The pair used by the duality suite: f = `gauss:0.25:1`, g = `bump:2`.
pub fn duality_pair() -> (TestFunction, TestFunction) {
    (
        TestFunction::gaussian(0.25, 1.0),
        TestFunction::bump(config::DUALITY_SUPPORT),
    )
}

fn duality(opts: &VerifyOptions) -> Result<Vec<CheckRow>> {
    let (f, g) = duality_pair();
    let ops = intertwiners(opts)?;
    ops.par_iter()
        .map(|(k, op)| {
            let point = format!("{} f={} g={}", kpt(*k), f.id(), g.id());
            let r = op.duality(&f, &g).map_err(|e| e.at(point.clone()))?;
            Ok(CheckRow::new(
                "duality",
                point,
                r.lhs,
                r.rhs,
                r.gap,
                opts.tol(tol::DUALITY),
            ))
        })
        .collect()
}

/// Test functions of the intertwining suite.
pub fn intertwine_functions() -> Vec<TestFunction> {
    vec![
        TestFunction::plane_wave(real(1.0)),
        TestFunction::plane_wave(real(2.5)),
        TestFunction::monomial(2),
        TestFunction::monomial(3),
    ]
}

fn intertwine(opts: &VerifyOptions) -> Result<Vec<CheckRow>> {
    let ops = intertwiners(opts)?;
    let fs = intertwine_functions();
    let jobs: Vec<_> = ops
        .iter()
        .flat_map(|(k, op)| {
            let fs = &fs;
            config::GRID_OPERATOR_X
                .iter()
                .flat_map(move |&x| fs.iter().map(move |f| (*k, op, f, x)))
        })
        .collect();
    jobs.par_iter()
        .map(|&(k, op, f, x)| {
            let point = format!("{} f={} x={x}", kpt(k), f.id());
            let r = op.intertwining(f, x).map_err(|e| e.at(point.clone()))?;
            Ok(CheckRow::new(
                "intertwine",
                point,
                r.lhs,
                r.rhs,
                r.gap,
                opts.tol(tol::INTERTWINE),
            ))
        })
        .collect()
}

/// (k, x, y) points of the kernel-consistency grid: both signs of x and
/// y = fraction·|x|.
pub fn kernel_grid() -> Vec<((f64, f64), f64, f64)> {
    let mut out = Vec::new();
    for k in grid_k() {
        for &ax in &config::GRID_KERNEL_X {
            for x in [ax, -ax] {
                for &fr in &config::GRID_KERNEL_Y_FRACTIONS {
                    out.push((k, x, fr * ax));
                }
            }
        }
    }
    out
}

fn kernel_consistency(opts: &VerifyOptions) -> Result<Vec<CheckRow>> {
    let mut rows = kernel_oracle_rows(opts)?;
    rows.extend(ktilde_by_parts_rows(opts)?);
    rows.extend(dktilde_rows(opts)?);
    Ok(rows)
}

/// Runs `check` at every kernel-grid point, reusing one kernel per k.
fn over_kernel_grid<F>(opts: &VerifyOptions, skip_y0: bool, check: F) -> Result<Vec<CheckRow>>
where
    F: Fn(&IntertwiningKernel, f64, f64, String) -> Result<CheckRow> + Sync,
{
    let ks = kernels(opts)?;
    kernel_grid()
        .par_iter()
        .filter(|&&(_, _, y)| !(skip_y0 && y == 0.0))
        .map(|&(k, x, y)| {
            let point = format!("{} x={x} y={y}", kpt(k));
            let kern = &ks.iter().find(|(kk, _)| *kk == k).expect("grid k").1;
            check(kern, x, y, point.clone()).map_err(|e| e.at(point))
        })
        .collect()
}

/// Direct kernel against the assembled one on the kernel grid.
pub fn kernel_oracle_rows(opts: &VerifyOptions) -> Result<Vec<CheckRow>> {
    over_kernel_grid(opts, false, |kern, x, y, point| {
        let p = KernelPoint::new(x, y)?;
        let lhs = kern.eval(p)?.value;
        let rhs = kern.eval_assembled(p)?.value;
        Ok(CheckRow::new(
            "kernel-oracle",
            point,
            lhs,
            rhs,
            rel_gap(lhs, rhs),
            opts.tol(tol::KERNEL_ORACLE),
        ))
    })
}

/// The direct and integrated-by-parts forms of K̃ on the kernel grid.
pub fn ktilde_by_parts_rows(opts: &VerifyOptions) -> Result<Vec<CheckRow>> {
    over_kernel_grid(opts, false, |kern, x, y, point| {
        let lhs = kern.ktilde(x, y, KtildeForm::Direct)?.value;
        let rhs = kern.ktilde(x, y, KtildeForm::ByParts)?.value;
        Ok(CheckRow::new(
            "ktilde-by-parts",
            point,
            lhs,
            rhs,
            rel_gap(lhs, rhs),
            opts.tol(tol::BY_PARTS),
        ))
    })
}

/// ∂ᵧK̃ against a centered difference of K̃, away from y = 0.
pub fn dktilde_rows(opts: &VerifyOptions) -> Result<Vec<CheckRow>> {
    let h = tol::DERIVATIVE_STEP;
    over_kernel_grid(opts, true, |kern, x, y, point| {
        let lhs = kern.dktilde_dy(x, y)?.value;
        let up = kern.ktilde(x, y + h, KtildeForm::ByParts)?.value;
        let down = kern.ktilde(x, y - h, KtildeForm::ByParts)?.value;
        let rhs = (up - down) / (2.0 * h);
        Ok(CheckRow::new(
            "dktilde-dy",
            point,
            lhs,
            rhs,
            rel_gap(lhs, rhs),
            opts.tol(tol::DERIVATIVE),
        ))
    })
}

/// Distances ε of the extra corner cells y = −x(1 − ε), x > 0.
pub const CORNER_EPSILON: [f64; 3] = [1e-2, 1e-4, 1e-6];

fn positivity(opts: &VerifyOptions) -> Result<Vec<CheckRow>> {
    let xs: Vec<f64> = config::GRID_KERNEL_X
        .iter()
        .flat_map(|&x| [x, -x])
        .collect();
    let corner: Vec<f64> = CORNER_EPSILON.iter().map(|e| -(1.0 - e)).collect();
    let ks = grid_k();
    let main = positivity_scan_with(opts.settings, &ks, &xs, &config::GRID_SCAN_FRACTIONS)?;
    let extra = positivity_scan_with(opts.settings, &ks, &config::GRID_KERNEL_X, &corner)?;

    let mut rows: Vec<CheckRow> = main
        .cells
        .iter()
        .chain(&extra.cells)
        .map(|c| {
            let point = format!("{} x={} y={}", kpt((c.k1, c.k2)), c.x, c.y);
            CheckRow {
                pass: c.value > 0.0,
                ..CheckRow::new("positive", point, real(c.value), real(0.0), -c.value, 0.0)
            }
        })
        .collect();
    let (min, arg) = if extra.min_value < main.min_value {
        (extra.min_value, extra.argmin)
    } else {
        (main.min_value, main.argmin)
    };
    let point = format!("{} x={} y={}", kpt((arg.0, arg.1)), arg.2, arg.3);
    rows.push(CheckRow {
        pass: min > 0.0,
        ..CheckRow::new("positive-min", point, real(min), real(0.0), -min, 0.0)
    });
    Ok(rows)
}

fn limits(opts: &VerifyOptions) -> Result<Vec<CheckRow>> {
    let eps = config::LIMIT_EPSILON;
    let mut jobs = Vec::new();
    for &kv in &config::GRID_K {
        for &(x, y) in &config::GRID_LIMIT_POINTS {
            jobs.push((true, kv, x, y));
        }
    }
    for &kv in &config::GRID_K {
        for &(x, y) in &config::GRID_LIMIT_POINTS {
            jobs.push((false, kv, x, y));
        }
    }
    jobs.par_iter()
        .map(|&(k1_small, kv, x, y)| {
            let k = if k1_small { (eps, kv) } else { (kv, eps) };
            let point = format!("{} x={x} y={y}", kpt(k));
            let run = || -> Result<CheckRow> {
                let p = KernelPoint::new(x, y)?;
                let kern =
                    IntertwiningKernel::with_settings(Multiplicity::new(k.0, k.1)?, opts.settings)?;
                let lhs = kern.eval(p)?.value;
                let rhs = if k1_small {
                    limit_kernel_k1_zero(kv, p)?
                } else {
                    limit_kernel_k2_zero(kv, p)?
                };
                let check = if k1_small { "limit-k1" } else { "limit-k2" };
                Ok(CheckRow::new(
                    check,
                    point.clone(),
                    lhs,
                    real(rhs),
                    rel_gap(lhs, real(rhs)),
                    opts.tol(tol::LIMIT),
                ))
            };
            run().map_err(|e| e.at(point.clone()))
        })
        .collect()
}

/// Number of random samples in the Cherednik form comparison.
pub const CHEREDNIK_SAMPLES: usize = 100;
/// Seed of those samples.
pub const CHEREDNIK_SEED: u64 = 0x5eed_d0e1;
/// Step of the centered difference used for G′.
const G_STEP: f64 = 1e-4;

fn random_function(rng: &mut StdRng) -> TestFunction {
    match rng.random_range(0..3) {
        0 => TestFunction::plane_wave(real(rng.random_range(-3.0..3.0))),
        1 => TestFunction::gaussian(rng.random_range(-1.0..1.0), rng.random_range(0.3..2.0)),
        _ => TestFunction::monomial(rng.random_range(0..6)),
    }
}

fn cherednik(opts: &VerifyOptions) -> Result<Vec<CheckRow>> {
    let mut rng = StdRng::seed_from_u64(CHEREDNIK_SEED);
    let mut rows = Vec::new();
    for _ in 0..CHEREDNIK_SAMPLES {
        let (k1, k2) = (rng.random_range(0.05..3.0), rng.random_range(0.05..3.0));
        let sign = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
        let x = sign * rng.random_range(0.05..3.0);
        let f = random_function(&mut rng);
        let point = format!("{} f={} x={x}", kpt((k1, k2)), f.id());
        let k = Multiplicity::new(k1, k2)?;
        let (fx, fmx) = (f.eval(x), f.eval(-x));
        let df = f.deriv(x).expect("registry functions carry derivatives");
        let a = cherednik_from_values(&k, x, fx, fmx, df, CherednikForm::Regularized)
            .map_err(|e| e.at(point.clone()))?;
        let b = cherednik_from_values(&k, x, fx, fmx, df, CherednikForm::CothTanh)
            .map_err(|e| e.at(point.clone()))?;
        let gap = (a - b).norm() / a.norm().max(b.norm());
        rows.push(CheckRow::new(
            "cherednik-forms",
            point,
            a,
            b,
            gap,
            opts.tol(tol::CHEREDNIK_FORMS),
        ));
    }

    let mut jobs = Vec::new();
    for k in grid_k() {
        for &l in &config::GRID_LAMBDA {
            for &x in &config::GRID_OPERATOR_X {
                jobs.push((k, l, x));
            }
        }
    }
    let eig: Vec<CheckRow> = jobs
        .par_iter()
        .map(|&(k, l, x)| {
            let point = format!("{} lambda={l} x={x}", kpt(k));
            let run = || -> Result<CheckRow> {
                let kk = Multiplicity::new(k.0, k.1)?;
                let lam = SpectralParam::real(l)?;
                let g = |t: f64| opdam_g(&kk, lam, t);
                let dg = (g(x + G_STEP)? - g(x - G_STEP)?) / (2.0 * G_STEP);
                let gx = g(x)?;
                let lhs = cherednik_from_values(&kk, x, gx, g(-x)?, dg, CherednikForm::CothTanh)?;
                let rhs = Complex64::new(0.0, l) * gx;
                Ok(CheckRow::new(
                    "cherednik-eigen",
                    point.clone(),
                    lhs,
                    rhs,
                    (lhs - rhs).norm(),
                    opts.tol(tol::CHEREDNIK_EIGEN),
                ))
            };
            run().map_err(|e| e.at(point.clone()))
        })
        .collect::<Result<_>>()?;
    rows.extend(eig);
    Ok(rows)
}

/// Smooth test functions of the δ₀ suite.
pub fn delta_functions() -> Vec<TestFunction> {
    vec![
        TestFunction::constant(real(1.0)),
        TestFunction::gaussian(0.25, 1.0),
        TestFunction::plane_wave(real(1.0)),
    ]
}

fn delta(opts: &VerifyOptions) -> Result<Vec<CheckRow>> {
    let fs = delta_functions();
    let ops = intertwiners(opts)?;
    let jobs: Vec<_> = ops
        .iter()
        .flat_map(|(k, op)| fs.iter().map(move |f| (*k, op, f)))
        .collect();
    let groups: Vec<Vec<CheckRow>> = jobs
        .par_iter()
        .map(|&(k, op, f)| {
            let f0 = f.eval(0.0);
            let mut rows: Vec<CheckRow> = Vec::new();
            let mut slope = f64::NAN;
            let mut prev = f64::INFINITY;
            for (i, &x) in config::DELTA_X.iter().enumerate() {
                let point = format!("{} f={} x={x}", kpt(k), f.id());
                let v = op.apply_v(f, x).map_err(|e| e.at(point.clone()))?.value;
                let err = (v - f0).norm();
                if i == 0 {
                    slope = err / x;
                }
                // the coarsest row fixes C and passes by construction
                let bound = if i == 0 { err } else { slope * x };
                let pass = err.is_finite() && err <= bound && (i == 0 || err < prev);
                prev = err;
                rows.push(CheckRow {
                    pass,
                    ..CheckRow::new("delta", point, v, f0, err, bound)
                });
            }
            Ok(rows)
        })
        .collect::<Result<_>>()?;
    Ok(groups.into_iter().flatten().collect())
}

/// Parameters of the Gauss–Jacobi moment grid (used for both α and β).
pub const JACOBI_PARAMS: [f64; 5] = [-0.7, -0.3, 0.0, 0.5, 2.0];
/// Exponents p of the tanh-sinh benchmarks ∫₀¹ t^{p−1} dt = 1/p.
pub const TANH_SINH_POWERS: [f64; 4] = [0.1, 0.3, 0.5, 1.0];

const GAUSS_EXACT_TOL: f64 = 1e-13;
const JACOBI_MOMENT_TOL: f64 = 1e-12;
const TANH_SINH_TOL: f64 = 1e-9;
const TANH_SINH_LEVEL: u32 = 8;

fn quadrature(opts: &VerifyOptions) -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    let to_c = |v: f64| real(v);
    for n in [1usize, 2, 3, 8, 20, 64] {
        let rule = gauss_legendre(n)?;
        for d in [2 * n - 2, 2 * n - 1] {
            let exact = if d % 2 == 1 {
                0.0
            } else {
                2.0 / (d as f64 + 1.0)
            };
            let v: f64 = integrate(&rule, |t: f64| t.powi(d as i32), (-1.0, 1.0))?.value;
            let gap = (v - exact).abs() / exact.abs().max(1.0);
            rows.push(CheckRow::new(
                "gauss-legendre-exact",
                format!("n={n} degree={d}"),
                to_c(v),
                to_c(exact),
                gap,
                opts.tol(GAUSS_EXACT_TOL),
            ));
        }
    }
    for &a in &JACOBI_PARAMS {
        for &b in &JACOBI_PARAMS {
            let rule = gauss_jacobi(16, a, b)?;
            let sum: f64 = rule.weights().iter().sum();
            let exact = jacobi_weight_integral(a, b);
            // first moment: ∫ t w = (β − α)/(α + β + 2) · ∫ w
            let m1: f64 = rule
                .nodes()
                .iter()
                .zip(rule.weights())
                .map(|(t, w)| t * w)
                .sum();
            let m1_exact = (b - a) / (a + b + 2.0) * exact;
            let point = format!("n=16 alpha={a} beta={b}");
            rows.push(CheckRow::new(
                "gauss-jacobi-mass",
                point.clone(),
                to_c(sum),
                to_c(exact),
                (sum - exact).abs() / exact,
                opts.tol(JACOBI_MOMENT_TOL),
            ));
            rows.push(CheckRow::new(
                "gauss-jacobi-moment",
                point,
                to_c(m1),
                to_c(m1_exact),
                (m1 - m1_exact).abs() / exact,
                opts.tol(JACOBI_MOMENT_TOL),
            ));
        }
    }
    let ts = tanh_sinh(TANH_SINH_LEVEL)?;
    for &p in &TANH_SINH_POWERS {
        let v: f64 = integrate_mapped(&ts, |m| m.from_lo.powf(p - 1.0), (0.0, 1.0))?.value;
        let exact = 1.0 / p;
        rows.push(CheckRow::new(
            "tanh-sinh-power",
            format!("level={TANH_SINH_LEVEL} p={p}"),
            to_c(v),
            to_c(exact),
            (v - exact).abs() / exact,
            opts.tol(TANH_SINH_TOL),
        ));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in std::iter::once(Suite::All).chain(Suite::EACH) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn bad_override_is_rejected() {
        let opts = VerifyOptions {
            tol: Some(0.0),
            ..Default::default()
        };
        assert!(matches!(
            run_suite(Suite::Quadrature, &opts),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn quadrature_suite_passes_and_override_bites() {
        let rows = run_suite(Suite::Quadrature, &VerifyOptions::default()).unwrap();
        assert!(
            rows.iter().all(|r| r.pass),
            "{:?}",
            rows.iter().find(|r| !r.pass)
        );
        let strict = VerifyOptions {
            tol: Some(1e-300),
            ..Default::default()
        };
        let rows = run_suite(Suite::Quadrature, &strict).unwrap();
        assert!(rows.iter().any(|r| !r.pass));
    }

    #[test]
    fn limits_suite_passes() {
        let rows = run_suite(Suite::Limits, &VerifyOptions::default()).unwrap();
        assert_eq!(rows.len(), 18);
        assert!(
            rows.iter().all(|r| r.pass),
            "{:?}",
            rows.iter().find(|r| !r.pass)
        );
    }

    #[test]
    fn errors_carry_the_point() {
        let e = Error::Domain("x".into()).at("k=(1,1) x=2");
        assert_eq!(e.to_string(), "at k=(1,1) x=2: domain error: x");
        assert!(!e.is_numerical());
        assert_eq!(e.root(), &Error::Domain("x".into()));
    }
}

use dunkl_core::quadrature::{
    gauss_jacobi, gauss_legendre, integrate, integrate_mapped, jacobi_weight_integral, tanh_sinh,
};
use dunkl_core::RuleKind;
use proptest::prelude::*;

/// ∫₋₁¹ Σ cᵢ tⁱ dt
fn poly_integral(c: &[f64]) -> f64 {
    c.iter()
        .enumerate()
        .map(|(i, ci)| {
            if i % 2 == 1 {
                0.0
            } else {
                2.0 * ci / (i as f64 + 1.0)
            }
        })
        .sum()
}

fn horner(c: &[f64], t: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, ci| acc * t + ci)
}

proptest! {
    #[test]
    fn legendre_is_exact_to_degree_2n_minus_1(n in 1usize..40, seed in prop::collection::vec(-1.0f64..1.0, 80)) {
        let coeffs = &seed[..2 * n];
        let rule = gauss_legendre(n).unwrap();
        let v: f64 = rule.sum(-1.0, 1.0, |t| horner(coeffs, t)).unwrap();
        let exact = poly_integral(coeffs);
        let scale = coeffs.iter().map(|c| c.abs()).sum::<f64>().max(1.0);
        prop_assert!((v - exact).abs() <= 1e-13 * scale, "n={n}: {v} vs {exact}");
    }

    #[test]
    fn jacobi_is_exact_against_its_weight(n in 2usize..24, a in -0.9f64..3.0, b in -0.9f64..3.0, d in 0usize..4) {
        // ∫ (1+t)^d w(t) dt = 2^{α+β+d+1} B(α+1, β+d+1)
        let rule = gauss_jacobi(n, a, b).unwrap();
        let v: f64 = rule.nodes().iter().zip(rule.weights()).map(|(t, w)| w * (1.0 + t).powi(d as i32)).sum();
        let exact = jacobi_weight_integral(a, b + d as f64);
        prop_assert!((v - exact).abs() <= 1e-12 * exact, "{v} vs {exact}");
    }

    #[test]
    fn rules_are_positive_and_ordered(n in 1usize..64, a in -0.95f64..2.0, b in -0.95f64..2.0) {
        let rule = gauss_jacobi(n, a, b).unwrap();
        prop_assert_eq!(rule.len(), n);
        prop_assert!(rule.weights().iter().all(|&w| w > 0.0));
        prop_assert!(rule.nodes().windows(2).all(|p| p[0] < p[1]));
        prop_assert!(rule.nodes().iter().all(|t| t.abs() < 1.0));
    }
}

#[test]
fn jacobi_beta_moment_grid() {
    let grid = [-0.7, -0.3, 0.0, 0.5, 2.0];
    for &a in &grid {
        for &b in &grid {
            let rule = gauss_jacobi(12, a, b).unwrap();
            let mass: f64 = rule.weights().iter().sum();
            let exact = jacobi_weight_integral(a, b);
            assert!(
                (mass - exact).abs() <= 1e-12 * exact,
                "α={a} β={b}: {mass} vs {exact}"
            );
        }
    }
    let r = gauss_jacobi(8, -0.5, 0.0).unwrap();
    let s: f64 = r.weights().iter().sum();
    assert!((s - 2.0 * 2f64.sqrt()).abs() < 1e-13);
}

#[test]
fn tanh_sinh_singular_benchmarks() {
    let rule = tanh_sinh(7).unwrap();
    let v: f64 = integrate_mapped(&rule, |m| m.from_lo.powf(-0.5), (0.0, 1.0))
        .unwrap()
        .value;
    assert!((v - 2.0).abs() < 1e-10, "{v}");

    let rule = tanh_sinh(8).unwrap();
    for p in [0.1, 0.3, 0.5, 1.0] {
        let v: f64 = integrate_mapped(&rule, |m| m.from_lo.powf(p - 1.0), (0.0, 1.0))
            .unwrap()
            .value;
        assert!((v - 1.0 / p).abs() < 1e-9 * (1.0 / p), "p={p}: {v}");
        // the singularity at the upper end is resolved just as well
        let w: f64 = integrate_mapped(&rule, |m| m.to_hi.powf(p - 1.0), (0.0, 1.0))
            .unwrap()
            .value;
        assert!((w - 1.0 / p).abs() < 1e-9 * (1.0 / p), "p={p}: {w}");
    }
    let one: f64 = integrate(&rule, |_| 1.0, (-1.0, 1.0)).unwrap().value;
    assert!((one - 2.0).abs() < 1e-12);
}

#[test]
fn tanh_sinh_error_estimate_shrinks_with_level() {
    // strictly decreasing until it reaches rounding level, then stays there;
    // the oscillatory case is aliased at step h = 1 and 1/2, so starts at level 3
    const ROUNDING: f64 = 1e-13;
    type Case = (fn(f64) -> f64, u32);
    let cases: [Case; 3] = [
        (|t| t.exp(), 1),
        (|t| 1.0 / (2.0 + t), 1),
        (|t| (1.0 + t * t).recip() * (3.0 * t).cos(), 3),
    ];
    for (i, (f, first)) in cases.into_iter().enumerate() {
        let mut last = f64::INFINITY;
        for level in first..=9 {
            let r = integrate(&tanh_sinh(level).unwrap(), f, (-1.0, 2.0)).unwrap();
            assert_eq!(r.method, RuleKind::TanhSinh { level });
            if last > ROUNDING {
                assert!(
                    r.est_error < last,
                    "case {i} level {level}: {} !< {last}",
                    r.est_error
                );
            } else {
                assert!(
                    r.est_error <= ROUNDING,
                    "case {i} level {level}: {}",
                    r.est_error
                );
            }
            last = r.est_error;
        }
        assert!(last <= ROUNDING);
    }
}

#[test]
fn out_of_range_requests_are_errors() {
    assert!(gauss_legendre(0).is_err());
    assert!(gauss_legendre(513).is_err());
    assert!(gauss_jacobi(4, -1.0, 0.0).is_err());
    assert!(tanh_sinh(0).is_err());
    assert!(tanh_sinh(13).is_err());
    assert!(integrate(&gauss_legendre(3).unwrap(), |t: f64| t, (1.0, 1.0)).is_err());
}

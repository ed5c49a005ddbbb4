use num_complex::Complex64;

use super::*;
use crate::multiplicity::Multiplicity;
use crate::specfun::{opdam_g, SpectralParam};

fn k(k1: f64, k2: f64) -> Multiplicity {
    Multiplicity::new(k1, k2).unwrap()
}

fn g(kk: &Multiplicity, l: f64, x: f64) -> Complex64 {
    opdam_g(kk, SpectralParam::real(l).unwrap(), x).unwrap()
}

#[test]
fn plane_wave_maps_to_opdam_function() {
    let kk = k(0.5, 0.5);
    let v = apply_v(
        &kk,
        &TestFunction::plane_wave(Complex64::new(1.5, 0.0)),
        1.0,
    )
    .unwrap();
    let expect = g(&kk, 1.5, 1.0);
    assert!((v.value - expect).norm() < 1e-6, "{} vs {expect}", v.value);
    assert!(v.est_error < 1e-8);
}

#[test]
fn constant_maps_to_zero_frequency() {
    let kk = k(0.7, 0.4);
    let one = TestFunction::from_id("one").unwrap();
    for &x in &[-2.0, -0.3, 0.8, 1.7] {
        let v = apply_v(&kk, &one, x).unwrap();
        let expect = g(&kk, 0.0, x);
        assert!((v.value - expect).norm() < 1e-8 * expect.norm(), "x={x}");
    }
}

#[test]
fn origin_returns_f0() {
    let f = TestFunction::gaussian(0.3, 0.5);
    let v = apply_v(&k(1.0, 1.0), &f, 0.0).unwrap();
    assert_eq!(v.value, f.eval(0.0));
    assert_eq!(v.est_error, 0.0);
}

#[test]
fn complex_multiplicity_eigenfunction() {
    let kk = Multiplicity::complex(Complex64::new(0.8, 0.4), Complex64::new(0.6, -0.3)).unwrap();
    let lam = SpectralParam::real(1.2).unwrap();
    let x = -1.1;
    let v = apply_v(&kk, &TestFunction::plane_wave(Complex64::new(1.2, 0.0)), x).unwrap();
    let expect = opdam_g(&kk, lam, x).unwrap();
    assert!(
        (v.value - expect).norm() < 1e-6 * (1.0 + expect.norm()),
        "{} vs {expect}",
        v.value
    );
}

#[test]
fn dual_operator_edge_cases() {
    let kk = k(0.7, 0.4);
    let zero = TestFunction::constant(Complex64::new(0.0, 0.0)).with_support(2.0);
    assert_eq!(
        apply_vt(&kk, &zero, 0.5).unwrap().value,
        Complex64::new(0.0, 0.0)
    );
    let bump = TestFunction::bump(2.0);
    assert_eq!(
        apply_vt(&kk, &bump, 2.0).unwrap().value,
        Complex64::new(0.0, 0.0)
    );
    assert_eq!(
        apply_vt(&kk, &bump, -3.0).unwrap().value,
        Complex64::new(0.0, 0.0)
    );
    assert!(apply_vt(&kk, &bump, 0.4).unwrap().value.re > 0.0);
    let no_support = TestFunction::gaussian(0.0, 1.0);
    assert!(matches!(
        apply_vt(&kk, &no_support, 0.1),
        Err(crate::Error::Contract(_))
    ));
}

#[test]
fn duality_pairing() {
    let kk = k(0.7, 0.4);
    let f = TestFunction::gaussian(0.25, 1.0);
    let bump = TestFunction::bump(2.0);
    let gap = duality_gap(&kk, &f, &bump).unwrap();
    assert!(gap <= 1e-6, "gap={gap}");
    let zero = TestFunction::constant(Complex64::new(0.0, 0.0));
    assert_eq!(duality_gap(&kk, &zero, &bump).unwrap(), 0.0);
}

#[test]
fn intertwining_relation() {
    let kk = k(1.0, 1.0);
    let gap = intertwine_gap(&kk, &TestFunction::monomial(2), 1.0).unwrap();
    assert!(gap <= 1e-4, "gap={gap}");
    let gap = intertwine_gap(
        &kk,
        &TestFunction::plane_wave(Complex64::new(2.0, 0.0)),
        -0.7,
    )
    .unwrap();
    assert!(gap <= 1e-4, "gap={gap}");
    assert!(intertwine_gap(&kk, &TestFunction::monomial(2), 0.0).is_err());
}

#[test]
fn intertwining_is_homogeneous() {
    let kk = k(0.3, 0.7);
    let f = TestFunction::gaussian(-0.2, 0.7);
    let g1 = intertwine_gap(&kk, &f, 1.3).unwrap();
    let g2 = intertwine_gap(&kk, &f.scaled(Complex64::new(2.0, 0.0)), 1.3).unwrap();
    assert!(g2 <= 2.0 * g1 + 1e-9);
}

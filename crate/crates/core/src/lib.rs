//! Integral representation of the rank-one trigonometric Dunkl intertwining
//! operator and its dual, with the special functions and quadrature needed
//! to evaluate and check it.
//!
//! The crate is organised bottom-up:
//!
//! * [`specfun`]: Gamma, ₂F₁, Jacobi functions and the Opdam function G_{iλ}
//! * [`quadrature`]: Gauss–Legendre, Gauss–Jacobi and tanh-sinh rules
//! * [`kernel`]: the kernel 𝒦(x, y), its limits and the Jacobi-setting pieces
//! * [`operators`]: the Cherednik operator D, V, ᵗV and positivity scans
//! * [`verify`]: the verification suites run by the `dunkl` CLI
//!
//! ```
//! use dunkl_core::{intertwining_kernel, KernelPoint, Multiplicity};
//!
//! let k = Multiplicity::new(0.5, 0.5)?;
//! let v = intertwining_kernel(&k, KernelPoint::new(1.0, -0.3)?)?;
//! assert!(v.value.re > 0.0);
//! # Ok::<(), dunkl_core::Error>(())
//! ```

pub mod config;
mod error;
pub mod kernel;
mod multiplicity;
pub mod operators;
pub mod quadrature;
mod scalar;
pub mod specfun;
pub mod verify;

pub use config::QuadSettings;
pub use error::{Error, Result};
pub use kernel::{
    constant_c, constant_c_complex, dktilde_dy, intertwining_kernel, intertwining_kernel_assembled,
    jacobi_kernel, ktilde, limit_kernel_k1_zero, limit_kernel_k2_zero, sigma, weight_a,
    DerivativeConvention, IntertwiningKernel, KernelPoint, KtildeForm,
};
pub use multiplicity::Multiplicity;
pub use num_complex::Complex64;
pub use operators::{
    apply_v, apply_vt, cherednik_d, duality_gap, intertwine_gap, positivity_scan, CherednikForm,
    Intertwiner, ScanReport, TestFunction,
};
pub use quadrature::{EvalResult, QuadratureRule, RuleKind};
pub use scalar::Scalar;
pub use specfun::{gamma_real, hyp2f1, jacobi_phi, opdam_g, Hyp2F1Args, SpectralParam};

/// The guide in `book/`, compiled so that its examples run as doc-tests.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $file:literal) => {
            #[doc = include_str!(concat!("../../../book/src/", $file))]
            pub struct $name;
        };
    }
    chapter!(Introduction, "introduction.md");
    chapter!(Multiplicities, "multiplicities.md");
    chapter!(SpecialFunctions, "special-functions.md");
    chapter!(Quadrature, "quadrature.md");
    chapter!(Kernel, "kernel.md");
    chapter!(Assembly, "assembly.md");
    chapter!(Operators, "operators.md");
    chapter!(Positivity, "positivity.md");
    chapter!(Verification, "verification.md");
    chapter!(Cli, "cli.md");

    #[doc = include_str!("../../../README.md")]
    pub struct Readme;
}

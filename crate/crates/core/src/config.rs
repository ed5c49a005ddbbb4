//! Default numerical settings, grids and tolerances.
//!
//! Everything the CLI and the verification suites fall back to lives here.

/// Quadrature sizes used by the kernel and operator code.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadSettings {
    /// Gauss–Jacobi nodes for the inner kernel integrals (real k).
    /// Error estimates use twice as many.
    pub jacobi_nodes: usize,
    /// Tanh-sinh level for the inner kernel integrals (complex k).
    pub inner_level: u32,
    /// Tanh-sinh level for single outer integrals (V, tV, defining form of K̃).
    pub outer_level: u32,
    /// Tanh-sinh level for each layer of the nested duality integrals.
    pub nested_level: u32,
    /// Relative error estimate above which a kernel evaluation is reported
    /// as non-convergent.
    pub max_rel_error: f64,
}

impl Default for QuadSettings {
    fn default() -> Self {
        Self {
            jacobi_nodes: 64,
            inner_level: 8,
            outer_level: 6,
            nested_level: 5,
            max_rel_error: 1e-6,
        }
    }
}

/// Multiplicity values of the default verification grid (used for both k₁ and k₂).
pub const GRID_K: [f64; 3] = [0.3, 0.7, 1.5];

/// Positive x values of the kernel grids; both signs are used.
pub const GRID_KERNEL_X: [f64; 3] = [0.6, 1.3, 2.4];

/// y / |x| ratios of the kernel-consistency grid.
pub const GRID_KERNEL_Y_FRACTIONS: [f64; 7] = [0.0, 0.2, -0.2, 0.7, -0.7, 0.95, -0.95];

/// y / x ratios of the positivity scan; negative values with x > 0 probe y ↘ −x.
pub const GRID_SCAN_FRACTIONS: [f64; 9] = [0.0, 0.5, -0.5, 0.9, -0.9, 0.99, -0.99, 0.9999, -0.9999];

/// Spectral parameters of the eigenfunction grid.
pub const GRID_LAMBDA: [f64; 3] = [0.0, 1.0, 2.5];

/// x values of the eigenfunction and intertwining grids.
pub const GRID_OPERATOR_X: [f64; 6] = [0.5, -0.5, 1.0, -1.0, 2.0, -2.0];

/// Points (x, y) for the limit-kernel comparisons, three per multiplicity.
pub const GRID_LIMIT_POINTS: [(f64, f64); 3] = [(1.3, 0.26), (-0.6, 0.42), (2.4, -2.28)];

/// Small multiplicity standing in for zero in the limit comparisons.
pub const LIMIT_EPSILON: f64 = 1e-4;

/// Support radius of the compactly supported test function in duality checks.
pub const DUALITY_SUPPORT: f64 = 2.0;

/// x values for the δ₀ check, coarsest first.
pub const DELTA_X: [f64; 3] = [1e-1, 1e-2, 1e-3];

/// Default tolerances of the verification suites.
pub mod tol {
    /// |V(e^{iλ·})(x) − G_{iλ}(x)| / (1 + |G|)
    pub const EIGEN: f64 = 1e-6;
    /// relative gap between the direct kernel and the assembled one
    pub const KERNEL_ORACLE: f64 = 1e-7;
    /// relative gap between the two closed integrals for K̃
    pub const BY_PARTS: f64 = 1e-8;
    /// relative gap between ∂ᵧK̃ and its centered difference
    pub const DERIVATIVE: f64 = 1e-5;
    /// step of that centered difference
    pub const DERIVATIVE_STEP: f64 = 1e-5;
    /// relative gap to the closed-form limit kernels
    pub const LIMIT: f64 = 1e-3;
    pub const DUALITY: f64 = 1e-6;
    pub const INTERTWINE: f64 = 1e-4;
    /// relative gap between the two displayed forms of D
    pub const CHEREDNIK_FORMS: f64 = 1e-12;
    /// |D G_{iλ} − iλ G_{iλ}| with a numerical derivative of G
    pub const CHEREDNIK_EIGEN: f64 = 1e-5;
}

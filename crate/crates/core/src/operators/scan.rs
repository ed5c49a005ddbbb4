//! Grid scan of the kernel sign for real multiplicities.

use rayon::prelude::*;

use crate::config::QuadSettings;
use crate::error::{domain, Result};
use crate::kernel::{IntertwiningKernel, KernelPoint};
use crate::multiplicity::Multiplicity;

/// One evaluated grid cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanCell {
    pub k1: f64,
    pub k2: f64,
    pub x: f64,
    pub y: f64,
    pub value: f64,
    pub est_error: f64,
}

/// Result of [`positivity_scan`]. Cells are ordered by (k, x, fraction) index.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    pub k_grid: Vec<(f64, f64)>,
    pub x_grid: Vec<f64>,
    pub fractions: Vec<f64>,
    pub cells: Vec<ScanCell>,
    pub min_value: f64,
    /// (k₁, k₂, x, y) of the first cell attaining `min_value`
    pub argmin: (f64, f64, f64, f64),
    pub all_positive: bool,
}

/// Evaluates 𝒦(x, y) at every (k, x, y = fraction·x) and reports the minimum.
///
/// Fractions must lie in (−1, 1); with x > 0 a fraction near −1 probes the
/// corner y ↘ −x.
pub fn positivity_scan(
    k_grid: &[(f64, f64)],
    x_grid: &[f64],
    fractions: &[f64],
) -> Result<ScanReport> {
    positivity_scan_with(QuadSettings::default(), k_grid, x_grid, fractions)
}

pub fn positivity_scan_with(
    settings: QuadSettings,
    k_grid: &[(f64, f64)],
    x_grid: &[f64],
    fractions: &[f64],
) -> Result<ScanReport> {
    if k_grid.is_empty() || x_grid.is_empty() || fractions.is_empty() {
        return Err(domain("scan grids must be non-empty"));
    }
    if let Some(f) = fractions.iter().find(|f| f.is_nan() || f.abs() >= 1.0) {
        return Err(domain(format!("y fractions must lie in (-1, 1), got {f}")));
    }
    let kernels = k_grid
        .iter()
        .map(|&(k1, k2)| IntertwiningKernel::with_settings(Multiplicity::new(k1, k2)?, settings))
        .collect::<Result<Vec<_>>>()?;
    let points = x_grid
        .iter()
        .flat_map(|&x| fractions.iter().map(move |&f| KernelPoint::new(x, f * x)))
        .collect::<Result<Vec<_>>>()?;

    let jobs: Vec<(usize, usize)> = (0..kernels.len())
        .flat_map(|i| (0..points.len()).map(move |j| (i, j)))
        .collect();
    let cells = jobs
        .par_iter()
        .map(|&(i, j)| {
            let p = points[j];
            let r = kernels[i].eval(p)?;
            let (k1, k2) = k_grid[i];
            Ok(ScanCell {
                k1,
                k2,
                x: p.x(),
                y: p.y(),
                value: r.value.re,
                est_error: r.est_error,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut best = &cells[0];
    for c in &cells[1..] {
        if c.value < best.value {
            best = c;
        }
    }
    let min_value = best.value;
    Ok(ScanReport {
        k_grid: k_grid.to_vec(),
        x_grid: x_grid.to_vec(),
        fractions: fractions.to_vec(),
        argmin: (best.k1, best.k2, best.x, best.y),
        all_positive: min_value > 0.0,
        min_value,
        cells,
    })
}

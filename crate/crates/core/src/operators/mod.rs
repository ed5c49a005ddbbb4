//! The Cherednik operator D, the intertwining operator V, its dual ᵗV, the
//! identities tying them together, and positivity scans of the kernel.

mod cherednik;
mod intertwiner;
mod scan;
mod testfn;

pub use cherednik::{cherednik_d, cherednik_from_values, CherednikForm};
pub use intertwiner::{apply_v, apply_vt, duality_gap, intertwine_gap, GapReport, Intertwiner};
pub use scan::{positivity_scan, positivity_scan_with, ScanCell, ScanReport};
pub use testfn::TestFunction;

#[cfg(test)]
mod tests;

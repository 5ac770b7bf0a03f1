//! Numerical thresholds shared across the crate.

/// Walls: a weight below this is treated as zero.
pub const WALL: f64 = 1e-12;
/// Iwasawa pivots of `ẑẑ*` below this abort the factorization.
pub const IWASAWA_PIVOT: f64 = 1e-14;
/// Bruhat pivots below this multiple of their accumulated magnitude leave the big cell.
pub const BRUHAT_CELL: f64 = 1e-12;
/// Torus entries below this make the character undefined.
pub const TORUS_ZERO: f64 = 1e-300;
/// Degenerate charts: a forbidden coordinate above this is rejected.
pub const DEGENERACY: f64 = 1e-12;
/// Integrality ratios are compared to integers within this.
pub const INTEGRALITY: f64 = 1e-9;
/// Default finite-difference step.
pub const FD_STEP: f64 = 1e-4;
/// Successive quadrature rules must agree within this.
pub const QUADRATURE: f64 = 1e-6;

//! Random inputs for verification sweeps. Callers supply the RNG, so a seeded
//! generator gives reproducible runs.

use num_complex::Complex64 as C;
use rand::Rng;

use crate::decompose::ChartPoint;
use crate::lie_core::{InitialPoint, RootDatum};
use crate::linalg::CMat;

pub fn complex<R: Rng + ?Sized>(rng: &mut R, scale: f64) -> C {
    C::new(rng.random_range(-scale..=scale), rng.random_range(-scale..=scale))
}

/// Coordinates uniform in the box `[−scale, scale]²` per root.
pub fn chart_point<R: Rng + ?Sized>(datum: &RootDatum, rng: &mut R, scale: f64) -> ChartPoint {
    ChartPoint::new((0..datum.positive_roots.len()).map(|_| complex(rng, scale)).collect())
}

/// As [`chart_point`], with zeros on the directions a degenerate μ₀ forbids.
pub fn orbit_chart_point<R: Rng + ?Sized>(datum: &RootDatum, mu0: &InitialPoint, rng: &mut R, scale: f64) -> ChartPoint {
    let mut p = chart_point(datum, rng, scale);
    for (r, z) in p.coords.iter_mut().enumerate() {
        if mu0.pairing(datum, r) < crate::tol::WALL {
            *z = C::new(0.0, 0.0);
        }
    }
    p
}

/// Weights uniform in `(lo, hi]`.
pub fn weights<R: Rng + ?Sized>(datum: &RootDatum, rng: &mut R, lo: f64, hi: f64) -> Vec<f64> {
    (0..datum.rank()).map(|_| hi - rng.random_range(0.0..(hi - lo))).collect()
}

/// An element of the compact algebra 𝔤 with coefficients in `[−1, 1]`.
pub fn algebra_element<R: Rng + ?Sized>(datum: &RootDatum, rng: &mut R) -> CMat {
    let basis = datum.compact_basis();
    let n = datum.dim();
    basis.iter().fold(CMat::zeros(n, n), |acc, b| acc + b * C::new(rng.random_range(-1.0..=1.0), 0.0))
}

/// `exp(X)` for a random `X ∈ 𝔤` scaled by π.
pub fn compact_element<R: Rng + ?Sized>(datum: &RootDatum, rng: &mut R) -> CMat {
    (algebra_element(datum, rng) * C::new(std::f64::consts::PI, 0.0)).exp()
}

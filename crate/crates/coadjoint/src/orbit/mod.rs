//! The generalized stereographic projection: dressing an initial point into
//! the orbit, chart transitions, and fibrations over smaller orbits.

mod fibration;
mod su3;

use num_complex::Complex64 as C;

use crate::decompose::{chart_matrix, gauss_bruhat, iwasawa, ChartPoint};
use crate::lie_core::{simple_reflection_matrix, Family, InitialPoint, RootDatum};
use crate::linalg::{self, CMat};
use crate::{tol, Error, Result};

pub use fibration::{fibration, FibrationDescription, OrbitDescriptor};
pub use su3::{gell_mann, pair_with_basis, su3_closed_form, su3_coordinates, su3_transition_closed_form};

#[derive(Clone, Debug)]
pub struct OrbitPoint {
    pub mu_matrix: CMat,
    /// Gell-Mann coordinates μ₁ … μ₈ (SU(3) only).
    pub coords: Option<Vec<f64>>,
    pub chart: Vec<usize>,
}

impl OrbitPoint {
    pub fn spectrum(&self) -> Vec<f64> {
        linalg::anti_hermitian_spectrum(&self.mu_matrix)
    }
}

/// Rejects nonzero coordinates along roots that pair to zero with μ₀.
pub fn check_degeneracy(datum: &RootDatum, mu0: &InitialPoint, point: &ChartPoint) -> Result<()> {
    if !point.chart.is_empty() {
        return Ok(());
    }
    for (index, z) in point.coords.iter().enumerate() {
        if mu0.pairing(datum, index) < tol::WALL && z.norm() > tol::DEGENERACY {
            return Err(Error::DegeneracyViolation { index, value: z.norm() });
        }
    }
    Ok(())
}

/// `μ̂ = ŵ·k̂*μ̂₀k̂·ŵ*`, where `ŵ` represents the chart label.
pub fn dress(datum: &RootDatum, mu0: &InitialPoint, point: &ChartPoint) -> Result<OrbitPoint> {
    check_degeneracy(datum, mu0, point)?;
    let k = iwasawa(datum, point)?.k;
    let mut mu = k.adjoint() * &mu0.matrix * &k;
    if !point.chart.is_empty() {
        let w = point.chart_matrix(datum);
        mu = &w * mu * w.adjoint();
    }
    let coords = (datum.group.family == Family::SU && datum.group.n == 3).then(|| su3_coordinates(&mu));
    Ok(OrbitPoint { mu_matrix: mu, coords, chart: point.chart.clone() })
}

/// Coordinates of the same orbit point on the cell translated by the Weyl
/// word `word`, found from the Gauss–Bruhat factors of `ẑŵ`.
pub fn chart_transition(datum: &RootDatum, word: &[usize], point: &ChartPoint) -> Result<ChartPoint> {
    let w = word
        .iter()
        .fold(linalg::identity(datum.dim()), |m, &k| m * simple_reflection_matrix(datum, k));
    let z = chart_matrix(datum, point)?;
    let f = gauss_bruhat(datum, &(z * w)).map_err(|e| match e {
        Error::OutsideCell { .. } => Error::PoleOnChart,
        other => other,
    })?;
    let mut chart = point.chart.clone();
    chart.extend_from_slice(word);
    Ok(ChartPoint { coords: f.point.coords, chart })
}

/// Best torus element `t` (weight-basis diagonal phases) with `t·a ≈ b`, and
/// the residual `‖t·a − b‖∞`.
pub fn align_torus(datum: &RootDatum, a: &CMat, b: &CMat) -> (CMat, f64) {
    let aw = datum.to_weight_basis(a);
    let bw = datum.to_weight_basis(b);
    let phases: Vec<C> = (0..aw.nrows())
        .map(|i| {
            let s: C = (0..aw.ncols()).map(|j| aw[(i, j)].conj() * bw[(i, j)]).sum();
            if s.norm() > 0.0 { s / s.norm() } else { C::new(1.0, 0.0) }
        })
        .collect();
    let t = datum.from_weight_basis(&linalg::diag(&phases));
    let residual = linalg::dist(&(&t * a), b);
    (t, residual)
}

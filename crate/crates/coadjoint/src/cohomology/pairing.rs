use nalgebra::DMatrix;
use num_complex::Complex64 as C;

use crate::decompose::{hermitian_udu, ChartPoint};
use crate::kahler::Differencer;
use crate::lie_core::RootDatum;
use crate::orbit::chart_transition;
use crate::quadrature::gauss_legendre;
use crate::{tol, Error, Result};

/// Convention for the basis forms: `ω_j = (i/2π)·∂∂̄Φ_j`, which in real
/// coordinates is `(1/π)·g_j·dx∧dy`.
pub const PAIRING_NORMALIZATION: &str = "omega_j = (i/2pi) * d dbar Phi_j";

/// The sphere traced by `SU_{α_k}(2)` through the base point: `z_{α_k}` free,
/// all other coordinates zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoCycle {
    /// Simple root index k.
    pub root: usize,
    /// Positive-root index of the free coordinate.
    pub coordinate: usize,
}

impl TwoCycle {
    pub fn point(&self, datum: &RootDatum, w: C) -> ChartPoint {
        let mut p = ChartPoint::origin(datum);
        p.coords[self.coordinate] = w;
        p
    }
}

/// Closed two-form with potential `Φ_j = F_j`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BasisTwoForm {
    pub index: usize,
    /// The prefactor `i/2π`.
    pub normalization: C,
}

impl BasisTwoForm {
    pub fn new(index: usize) -> Self {
        Self { index, normalization: C::new(0.0, 1.0 / (2.0 * std::f64::consts::PI)) }
    }

    pub fn potential(&self, datum: &RootDatum, point: &ChartPoint) -> Result<f64> {
        potential_fast(datum, self.index, &point.coords)
    }
}

pub fn basis_cycles(datum: &RootDatum) -> Vec<TwoCycle> {
    (0..datum.rank()).map(|k| TwoCycle { root: k, coordinate: datum.simple[k] }).collect()
}

pub fn basis_forms(datum: &RootDatum) -> Vec<BasisTwoForm> {
    (0..datum.rank()).map(BasisTwoForm::new).collect()
}

/// `F_j` from the pivots of `ẑẑ*` alone.
fn potential_fast(datum: &RootDatum, j: usize, coords: &[C]) -> Result<f64> {
    let z = crate::decompose::chart_matrix_weight(datum, &ChartPoint::new(coords.to_vec()))?;
    let (_, d) = hermitian_udu(&(&z * z.adjoint()))?;
    let n = d.len();
    Ok(datum
        .fundamental_minors(j)
        .iter()
        .map(|&(m, c)| c * d[n - m..].iter().map(|x| x.ln()).sum::<f64>())
        .sum())
}

fn density(datum: &RootDatum, form: &BasisTwoForm, cycle: &TwoCycle, w: C, diff: &Differencer) -> f64 {
    let f = |z: &[C]| potential_fast(datum, form.index, z).unwrap_or(f64::NAN);
    diff.laplacian_quarter(&f, &cycle.point(datum, w).coords, cycle.coordinate)
}

fn raw_integral(datum: &RootDatum, form: &BasisTwoForm, cycle: &TwoCycle, nodes: usize) -> Result<f64> {
    let diff = Differencer::new(1e-3).with_richardson();
    let theta = gauss_legendre(nodes, 0.0, std::f64::consts::PI);
    let phi = gauss_legendre(nodes, 0.0, 2.0 * std::f64::consts::PI);
    let mut total = 0.0;
    for &(t, wt) in &theta {
        let r = (t / 2.0).tan();
        let jac = r * (1.0 + r * r) / 2.0;
        let mut ring = 0.0;
        for &(p, wp) in &phi {
            let w = C::from_polar(r, p);
            let g = if t <= std::f64::consts::FRAC_PI_2 {
                density(datum, form, cycle, w, &diff)
            } else {
                let flipped = chart_transition(datum, &[cycle.root], &cycle.point(datum, w))?;
                let w2 = flipped.coords[cycle.coordinate];
                let c = w2 * w;
                density(datum, form, cycle, w2, &diff) * c.norm_sqr() / w.norm_sqr().powi(2)
            };
            ring += wp * g;
        }
        total += wt * jac * ring;
    }
    Ok(total / std::f64::consts::PI)
}

/// `∫_{γ} ω_j` with an `nodes × nodes` product rule, checked against the rule
/// of half the size.
pub fn pairing_integral_with(datum: &RootDatum, form: &BasisTwoForm, cycle: &TwoCycle, nodes: usize) -> Result<f64> {
    let fine = raw_integral(datum, form, cycle, nodes)?;
    let coarse = raw_integral(datum, form, cycle, nodes / 2)?;
    if (fine - coarse).abs() > tol::QUADRATURE {
        return Err(Error::QuadratureNotConverged { coarse, fine });
    }
    Ok(fine)
}

pub fn pairing_integral(datum: &RootDatum, form: &BasisTwoForm, cycle: &TwoCycle) -> Result<f64> {
    pairing_integral_with(datum, form, cycle, 128)
}

/// Matrix `M_ij = ∫_{γ_i} ω_j`.
pub fn pairing_matrix(datum: &RootDatum, nodes: usize) -> Result<DMatrix<f64>> {
    let cycles = basis_cycles(datum);
    let forms = basis_forms(datum);
    let mut m = DMatrix::zeros(cycles.len(), forms.len());
    for (i, c) in cycles.iter().enumerate() {
        for (j, f) in forms.iter().enumerate() {
            m[(i, j)] = pairing_integral_with(datum, f, c, nodes)?;
        }
    }
    Ok(m)
}

//! SU(3)-specific coordinates: Gell-Mann pairing, the closed-form projection
//! and the closed-form chart transitions.

use num_complex::Complex64 as C;

use crate::decompose::ChartPoint;
use crate::lie_core::InitialPoint;
use crate::linalg::CMat;
use crate::{Error, Result};

/// The eight Gell-Mann matrices λ₁ … λ₈.
pub fn gell_mann() -> [CMat; 8] {
    let o = C::new(0.0, 0.0);
    let one = C::new(1.0, 0.0);
    let i = C::new(0.0, 1.0);
    let s = C::new(1.0 / 3f64.sqrt(), 0.0);
    let m = |v: [C; 9]| CMat::from_row_slice(3, 3, &v);
    [
        m([o, one, o, one, o, o, o, o, o]),
        m([o, -i, o, i, o, o, o, o, o]),
        m([one, o, o, o, -one, o, o, o, o]),
        m([o, o, one, o, o, o, one, o, o]),
        m([o, o, -i, o, o, o, i, o, o]),
        m([o, o, o, o, o, one, o, one, o]),
        m([o, o, o, o, o, -i, o, i, o]),
        m([s, o, o, o, s, o, o, o, s * -2.0]),
    ]
}

/// Pairing `−2·Tr(μ̂ Y)` of 𝔤* against basis elements `Y`.
pub fn pair_with_basis(mu: &CMat, basis: &[CMat]) -> Vec<f64> {
    basis.iter().map(|y| -2.0 * crate::linalg::trace_product(mu, y).re).collect()
}

/// Group coordinates `μ_a = ⟨μ̂, Y_a⟩`, `Y_a = −(i/2)λ_a`.
pub fn su3_coordinates(mu: &CMat) -> Vec<f64> {
    let y: Vec<CMat> = gell_mann().iter().map(|l| l * C::new(0.0, -0.5)).collect();
    pair_with_basis(mu, &y)
}

fn su3_args(mu0: &InitialPoint, z: &ChartPoint) -> Result<(f64, f64, C, C, C)> {
    if mu0.weights.len() != 2 || z.coords.len() != 3 {
        return Err(Error::InvalidInput("closed forms exist only for SU(3)".into()));
    }
    Ok((mu0.weights[0], mu0.weights[1], z.coords[0], z.coords[1], z.coords[2]))
}

/// Direct evaluation of the closed-form generalized stereographic projection.
pub fn su3_closed_form(mu0: &InitialPoint, point: &ChartPoint) -> Result<[f64; 8]> {
    let (xi, eta, z1, z2, z3) = su3_args(mu0, point)?;
    let i = C::new(0.0, 1.0);
    let w = z3 - z1 * z2;
    let r1 = 1.0 + z1.norm_sqr() + w.norm_sqr();
    let r2 = 1.0 + z2.norm_sqr() + z3.norm_sqr();
    let (e, x) = (eta / r2, xi / r1);
    let mu1 = -e * (z2.conj() * z3 + z2 * z3.conj()) - x * (z1 + z1.conj());
    let mu2 = i * e * (z2.conj() * z3 - z2 * z3.conj()) + i * x * (z1 - z1.conj());
    let mu3 = e * (z2.norm_sqr() - z3.norm_sqr()) + x * (1.0 - z1.norm_sqr());
    let mu4 = -e * (z3 + z3.conj()) - x * (w + w.conj());
    let mu5 = i * e * (z3 - z3.conj()) + i * x * (w - w.conj());
    let mu6 = -e * (z2 + z2.conj()) + x * (z1.conj() * w + z1 * w.conj());
    let mu7 = i * e * (z2 - z2.conj()) - i * x * (z1.conj() * w - z1 * w.conj());
    let mu8 = (e * (2.0 - z2.norm_sqr() - z3.norm_sqr()) + x * (1.0 + z1.norm_sqr() - 2.0 * w.norm_sqr()))
        / 3f64.sqrt();
    Ok([mu1.re, mu2.re, mu3, mu4.re, mu5.re, mu6.re, mu7.re, mu8])
}

/// Closed-form change of coordinates under ŵ₁ (`generator = 0`) or ŵ₂ (`1`).
pub fn su3_transition_closed_form(generator: usize, point: &ChartPoint) -> Result<ChartPoint> {
    if point.coords.len() != 3 {
        return Err(Error::InvalidInput("closed forms exist only for SU(3)".into()));
    }
    let (z1, z2, z3) = (point.coords[0], point.coords[1], point.coords[2]);
    let coords = match generator {
        0 => {
            if z1.norm() == 0.0 {
                return Err(Error::PoleOnChart);
            }
            vec![z1.inv(), -z3, -z2]
        }
        1 => {
            if z2.norm() == 0.0 {
                return Err(Error::PoleOnChart);
            }
            vec![-(z3 - z1 * z2), z2.inv(), -z3 / z2]
        }
        _ => return Err(Error::InvalidInput(format!("SU(3) has no generator {generator}"))),
    };
    let mut chart = point.chart.clone();
    chart.push(generator);
    Ok(ChartPoint { coords, chart })
}

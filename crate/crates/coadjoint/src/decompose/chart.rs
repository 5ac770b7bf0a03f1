use num_complex::Complex64 as C;

use crate::lie_core::{simple_reflection_matrix, Family, RootDatum};
use crate::linalg::{self, CMat};
use crate::{Error, Result};

/// Complex coordinates `z_α`, indexed like `RootDatum::positive_roots`, on the
/// Bruhat cell translated by the Weyl word `chart`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChartPoint {
    pub coords: Vec<C>,
    pub chart: Vec<usize>,
}

impl ChartPoint {
    pub fn new(coords: Vec<C>) -> Self {
        Self { coords, chart: Vec::new() }
    }

    pub fn origin(datum: &RootDatum) -> Self {
        Self::new(vec![C::new(0.0, 0.0); datum.positive_roots.len()])
    }

    pub fn with_chart(mut self, chart: Vec<usize>) -> Self {
        self.chart = chart;
        self
    }

    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Matrix representative of the chart label.
    pub fn chart_matrix(&self, datum: &RootDatum) -> CMat {
        self.chart
            .iter()
            .fold(linalg::identity(datum.dim()), |m, &k| m * simple_reflection_matrix(datum, k))
    }
}

fn check_len(datum: &RootDatum, point: &ChartPoint) -> Result<()> {
    if point.coords.len() != datum.positive_roots.len() {
        return Err(Error::InvalidInput(format!(
            "{} coordinates given, {} positive roots",
            point.coords.len(),
            datum.positive_roots.len()
        )));
    }
    if point.coords.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::InvalidInput("non-finite coordinate".into()));
    }
    Ok(())
}

fn entry_of(x: &CMat) -> (usize, usize) {
    let mut best = (0, 0);
    let mut v = 0.0;
    for i in 0..x.nrows() {
        for j in 0..x.ncols() {
            if x[(i, j)].norm() > v {
                v = x[(i, j)].norm();
                best = (i, j);
            }
        }
    }
    best
}

/// ẑ in the weight basis.
pub(crate) fn chart_matrix_weight(datum: &RootDatum, point: &ChartPoint) -> Result<CMat> {
    check_len(datum, point)?;
    let n = datum.dim();
    if datum.group.family == Family::SU {
        let mut m = linalg::identity(n);
        for (r, z) in point.coords.iter().enumerate() {
            m[entry_of(datum.lowering_weight_basis(r))] = *z;
        }
        return Ok(m);
    }
    let mut x = CMat::zeros(n, n);
    for (r, z) in point.coords.iter().enumerate() {
        x += datum.lowering_weight_basis(r) * *z;
    }
    Ok(linalg::exp_nilpotent(&x))
}

/// The lower-unipotent chart element ẑ (standard coordinates).
pub fn chart_matrix(datum: &RootDatum, point: &ChartPoint) -> Result<CMat> {
    Ok(datum.from_weight_basis(&chart_matrix_weight(datum, point)?))
}

/// Coordinates of a lower-unipotent element given in the weight basis.
pub(crate) fn chart_coords_weight(datum: &RootDatum, zeta: &CMat) -> Vec<C> {
    let roots = 0..datum.positive_roots.len();
    if datum.group.family == Family::SU {
        return roots.map(|r| zeta[entry_of(datum.lowering_weight_basis(r))]).collect();
    }
    let log = linalg::log_unipotent(zeta);
    roots
        .map(|r| {
            let x = datum.lowering_weight_basis(r);
            let num: C = x.iter().zip(log.iter()).map(|(a, b)| a.conj() * b).sum();
            let den: f64 = x.iter().map(|a| a.norm_sqr()).sum();
            num / den
        })
        .collect()
}

/// Chart coordinates of a lower-unipotent element (standard coordinates).
pub fn chart_point_from_matrix(datum: &RootDatum, zeta: &CMat) -> ChartPoint {
    ChartPoint::new(chart_coords_weight(datum, &datum.to_weight_basis(zeta)))
}

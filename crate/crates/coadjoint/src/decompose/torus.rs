use num_complex::Complex64 as C;

use crate::lie_core::RootDatum;
use crate::linalg::CMat;
use crate::{tol, Error, Result};

/// `χ^ξ` on a torus element given by its weight-basis diagonal.
///
/// The character of weight `λ = Σ ξ_k·(2/|α_k|²)·ϖ_k` is assembled from the
/// trailing products `δ_m` of the diagonal, each of which is the character of
/// the highest weight of `Λ^{N−m}`.
pub fn torus_character_diagonal(datum: &RootDatum, diag: &[C], weights: &[f64]) -> Result<C> {
    if let Some(index) = diag.iter().position(|x| x.norm() < tol::TORUS_ZERO) {
        return Err(Error::ZeroTorusEntry { index });
    }
    if weights.len() != datum.rank() {
        return Err(Error::InvalidInput(format!("{} weights for rank {}", weights.len(), datum.rank())));
    }
    let n = diag.len();
    let log_delta = |m: usize| -> C { diag[n - m..].iter().fold(C::new(1.0, 0.0), |acc, x| acc * x).ln() };
    let mut log = C::new(0.0, 0.0);
    for (k, xi) in weights.iter().enumerate() {
        let f = datum.coroot_factor(k) * xi;
        for (m, c) in datum.fundamental_minors(k) {
            log += log_delta(m) * (f * c);
        }
    }
    Ok(log.exp())
}

/// `χ^ξ(d)` for `d` in the complexified torus (standard coordinates).
pub fn torus_character(datum: &RootDatum, d: &CMat, weights: &[f64]) -> Result<C> {
    let w = datum.to_weight_basis(d);
    let off = w.iter().enumerate().fold(0.0f64, |acc, (idx, x)| {
        let (i, j) = (idx % w.nrows(), idx / w.nrows());
        if i == j { acc } else { acc.max(x.norm()) }
    });
    if off > 1e-9 * crate::linalg::max_abs(&w) {
        return Err(Error::InvalidInput("element is not in the torus".into()));
    }
    let diag: Vec<C> = (0..w.nrows()).map(|i| w[(i, i)]).collect();
    torus_character_diagonal(datum, &diag, weights)
}

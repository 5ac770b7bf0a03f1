use num_complex::Complex64 as C;

use super::chart::{chart_coords_weight, ChartPoint};
use crate::lie_core::RootDatum;
use crate::linalg::{self, CMat};
use crate::{tol, Error, Result};

/// `g = n_B·d·ζ` with `n_B` upper unipotent, `d` in the complex torus and `ζ`
/// lower unipotent.
#[derive(Clone, Debug)]
pub struct BruhatFactors {
    pub n_b: CMat,
    pub d: CMat,
    pub zeta: CMat,
    /// Diagonal of `d` in the weight basis.
    pub d_diagonal: Vec<C>,
    /// Chart coordinates of `ζ`.
    pub point: ChartPoint,
}

/// Upper·diagonal·lower factorization, eliminating from the bottom-right corner.
///
/// Each pivot is compared with the magnitude of the terms that were summed
/// into it, so that a pivot is rejected only when it is zero up to cancellation.
pub(crate) fn udl(x: &CMat) -> Result<(CMat, Vec<C>, CMat)> {
    let n = x.nrows();
    let mut work = x.clone();
    let mut scale = x.map(|v| v.norm());
    let mut u = linalg::identity(n);
    let mut l = linalg::identity(n);
    let mut d = vec![C::new(0.0, 0.0); n];
    for j in (0..n).rev() {
        let p = work[(j, j)];
        if p.norm() <= tol::BRUHAT_CELL * scale[(j, j)] || p.norm() < tol::TORUS_ZERO {
            return Err(Error::OutsideCell { index: j, pivot: p.norm() });
        }
        d[j] = p;
        for i in 0..j {
            u[(i, j)] = work[(i, j)] / p;
            l[(j, i)] = work[(j, i)] / p;
        }
        for i in 0..j {
            for k in 0..j {
                let v = work[(i, j)] * work[(j, k)] / p;
                work[(i, k)] -= v;
                scale[(i, k)] += v.norm();
            }
        }
    }
    Ok((u, d, l))
}

pub fn gauss_bruhat(datum: &RootDatum, g: &CMat) -> Result<BruhatFactors> {
    let (u, d, l) = udl(&datum.to_weight_basis(g))?;
    let point = ChartPoint::new(chart_coords_weight(datum, &l));
    Ok(BruhatFactors {
        n_b: datum.from_weight_basis(&u),
        d: datum.from_weight_basis(&linalg::diag(&d)),
        zeta: datum.from_weight_basis(&l),
        d_diagonal: d,
        point,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_core::{build_group, root_datum, Family};

    #[test]
    fn identity_is_trivial() {
        let d = root_datum(&build_group(Family::SU, 3).unwrap());
        let f = gauss_bruhat(&d, &linalg::identity(3)).unwrap();
        assert!(linalg::dist(&f.n_b, &linalg::identity(3)) == 0.0);
        assert!(linalg::dist(&f.d, &linalg::identity(3)) == 0.0);
        assert!(linalg::dist(&f.zeta, &linalg::identity(3)) == 0.0);
    }

    #[test]
    fn antidiagonal_outside_cell() {
        let d = root_datum(&build_group(Family::SU, 3).unwrap());
        let (o, one) = (C::new(0.0, 0.0), C::new(1.0, 0.0));
        let p = CMat::from_row_slice(3, 3, &[o, o, one, o, -one, o, one, o, o]);
        assert!(matches!(gauss_bruhat(&d, &p), Err(Error::OutsideCell { .. })));
    }

    #[test]
    fn far_points_stay_in_cell() {
        let d = root_datum(&build_group(Family::SO, 3).unwrap());
        let z = crate::decompose::chart_matrix(&d, &crate::decompose::ChartPoint::new(vec![C::new(3e4, 1e4)])).unwrap();
        let w = crate::lie_core::simple_reflection_matrix(&d, 0);
        assert!(gauss_bruhat(&d, &(z * w)).is_ok());
    }

    #[test]
    fn cancellation_detected() {
        let d = root_datum(&build_group(Family::SU, 2).unwrap());
        let one = C::new(1.0, 0.0);
        let g = CMat::from_row_slice(2, 2, &[one, one * 2.0, one * 0.5, one]);
        assert!(matches!(gauss_bruhat(&d, &g), Err(Error::OutsideCell { index: 0, .. })));
    }

    #[test]
    fn multiply_back() {
        let d = root_datum(&build_group(Family::SO, 4).unwrap());
        let g = CMat::from_fn(4, 4, |i, j| C::new(((i * 7 + j * 3) % 5) as f64 - 1.5, (i as f64 - j as f64) * 0.25));
        let f = gauss_bruhat(&d, &g).unwrap();
        assert!(linalg::dist(&(&f.n_b * &f.d * &f.zeta), &g) < 1e-12);
    }
}

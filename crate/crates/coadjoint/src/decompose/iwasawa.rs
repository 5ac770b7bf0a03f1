use num_complex::Complex64 as C;

use super::chart::{chart_matrix_weight, ChartPoint};
use crate::lie_core::{Family, QMatrix, RootDatum};
use crate::linalg::{self, CMat};
use crate::{tol, Error, Result};

/// `ẑ = n·a·k` with `n` upper unipotent, `a` positive, `k` compact.
#[derive(Clone, Debug)]
pub struct IwasawaFactors {
    pub n: CMat,
    pub a: CMat,
    pub k: CMat,
    /// Diagonal of `a²` in the weight basis.
    pub pivots: Vec<f64>,
}

impl IwasawaFactors {
    /// `ln T_m`: logarithm of the trailing `m×m` minor of `ẑẑ*` in the weight basis.
    pub fn log_trailing_minor(&self, m: usize) -> f64 {
        self.pivots[self.pivots.len() - m..].iter().map(|d| d.ln()).sum()
    }

    /// Positive diagonal entries of `a` in the weight basis.
    pub fn a_diagonal(&self) -> Vec<f64> {
        self.pivots.iter().map(|d| d.sqrt()).collect()
    }

    /// For Sp(n): `k` as a quaternion matrix, with its distance from the
    /// quaternionic block pattern.
    pub fn k_quaternion(&self) -> (QMatrix, f64) {
        QMatrix::from_complex(&self.k)
    }
}

/// `M = N·diag(d)·N*` for hermitian positive-definite `M`, `N` unit upper
/// triangular, eliminating from the last column.
pub fn hermitian_udu(m: &CMat) -> Result<(CMat, Vec<f64>)> {
    let n = m.nrows();
    let mut work = m.clone();
    let mut u = linalg::identity(n);
    let mut d = vec![0.0; n];
    for j in (0..n).rev() {
        let p = work[(j, j)].re;
        if p.is_nan() || p < tol::IWASAWA_PIVOT {
            return Err(Error::NumericalBreakdown { index: j, pivot: p });
        }
        d[j] = p;
        for i in 0..j {
            u[(i, j)] = work[(i, j)] / p;
        }
        for i in 0..j {
            for k in 0..j {
                let v = u[(i, j)] * p * u[(k, j)].conj();
                work[(i, k)] -= v;
            }
        }
    }
    Ok((u, d))
}

/// Iwasawa factors of an arbitrary complexified group element given in the
/// weight basis.
pub(crate) fn iwasawa_weight(datum: &RootDatum, zw: &CMat) -> Result<IwasawaFactors> {
    let m = zw * zw.adjoint();
    let (nw, pivots) = hermitian_udu(&m)?;
    let root: Vec<C> = pivots.iter().map(|d| C::new(d.sqrt(), 0.0)).collect();
    let inv: Vec<C> = root.iter().map(|r| r.inv()).collect();
    let x = nw.solve_upper_triangular(zw).expect("unit triangular");
    let kw = linalg::diag(&inv) * x;
    Ok(IwasawaFactors {
        n: datum.from_weight_basis(&nw),
        a: datum.from_weight_basis(&linalg::diag(&root)),
        k: datum.from_weight_basis(&kw),
        pivots,
    })
}

pub fn iwasawa(datum: &RootDatum, point: &ChartPoint) -> Result<IwasawaFactors> {
    iwasawa_weight(datum, &chart_matrix_weight(datum, point)?)
}

/// Iwasawa factors of any invertible element of the complexified group.
pub fn iwasawa_of(datum: &RootDatum, g: &CMat) -> Result<IwasawaFactors> {
    iwasawa_weight(datum, &datum.to_weight_basis(g))
}

/// The compact factor `k̂(z) = â⁻¹n̂⁻¹ẑ`.
pub fn dressing_matrix(datum: &RootDatum, point: &ChartPoint) -> Result<CMat> {
    Ok(iwasawa(datum, point)?.k)
}

/// `‖k·k* − I‖∞`, using the quaternionic adjoint for Sp and the transpose for SO.
pub fn compactness_defect(datum: &RootDatum, k: &CMat) -> f64 {
    match datum.group.family {
        Family::SU => linalg::dist(&(k * k.adjoint()), &linalg::identity(k.nrows())),
        Family::SO => {
            let imag = k.iter().fold(0.0f64, |a, x| a.max(x.im.abs()));
            let real = k.map(|x| C::new(x.re, 0.0));
            imag.max(linalg::dist(&(&real * real.transpose()), &linalg::identity(k.nrows())))
        }
        Family::Sp => {
            let (q, defect) = QMatrix::from_complex(k);
            let p = q.mul(&q.adjoint()).sub(&QMatrix::identity(q.nrows()));
            defect.max(p.max_abs())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::chart_matrix;
    use crate::lie_core::{build_group, root_datum};

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    #[test]
    fn su3_unit_z1() {
        let d = root_datum(&build_group(Family::SU, 3).unwrap());
        let f = iwasawa(&d, &ChartPoint::new(vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)])).unwrap();
        let r1sq = f.log_trailing_minor(2).exp();
        let r2sq = f.log_trailing_minor(1).exp();
        assert!((r1sq - 2.0).abs() < 1e-14);
        assert!((r2sq - 1.0).abs() < 1e-14);
        assert!((f.n[(0, 1)] - c(0.5, 0.0)).norm() < 1e-15);
        assert!(f.n[(0, 2)].norm() < 1e-15 && f.n[(1, 2)].norm() < 1e-15);
    }

    #[test]
    fn origin_is_trivial() {
        for (fam, n) in [(Family::SU, 3), (Family::Sp, 2), (Family::SO, 3), (Family::SO, 4)] {
            let d = root_datum(&build_group(fam, n).unwrap());
            let f = iwasawa(&d, &ChartPoint::origin(&d)).unwrap();
            let id = linalg::identity(d.dim());
            assert!(linalg::dist(&f.n, &id) < 1e-15);
            assert!(linalg::dist(&f.a, &id) < 1e-15);
            assert!(linalg::dist(&f.k, &id) < 1e-15);
        }
    }

    #[test]
    fn multiply_back_all_families() {
        for (fam, n) in [(Family::SU, 4), (Family::Sp, 2), (Family::Sp, 3), (Family::SO, 3), (Family::SO, 4)] {
            let d = root_datum(&build_group(fam, n).unwrap());
            let coords =
                (0..d.positive_roots.len()).map(|k| c(0.7 - 0.4 * k as f64, 0.3 * (k as f64).sin())).collect();
            let p = ChartPoint::new(coords);
            let f = iwasawa(&d, &p).unwrap();
            let z = chart_matrix(&d, &p).unwrap();
            assert!(linalg::dist(&(&f.n * &f.a * &f.k), &z) < 1e-12, "{fam:?}({n})");
            assert!(compactness_defect(&d, &f.k) < 1e-12, "{fam:?}({n})");
            assert!(d.complex_group_defect(&f.k) < 1e-12, "{fam:?}({n})");
        }
    }

    #[test]
    fn breakdown_reported() {
        let m = linalg::diag(&[c(1.0, 0.0), c(0.0, 0.0)]);
        assert!(matches!(hermitian_udu(&m), Err(Error::NumericalBreakdown { index: 1, .. })));
    }
}

//! Iwasawa factorization over the quaternions: `GL(n,ℍ) = N·A·Sp(n)`.
//!
//! This is the native quaternionic route: a lower-unipotent quaternion matrix
//! `Z` is split as `Z = N·A·K` with `N` unit upper triangular over ℍ, `A`
//! real positive diagonal and `K` quaternion-unitary.

use crate::lie_core::{QMatrix, Quaternion};
use crate::linalg::CMat;
use num_complex::Complex64 as C;
use crate::{tol, Error, Result};

#[derive(Clone, Debug)]
pub struct QuaternionicIwasawa {
    pub n: QMatrix,
    pub a: Vec<f64>,
    pub k: QMatrix,
}

/// Lower-unipotent `n×n` quaternion matrix; entries below the diagonal are
/// filled by height (first subdiagonal first), then by column.
pub fn quaternionic_chart(n: usize, coords: &[Quaternion]) -> Result<QMatrix> {
    let want = n * (n - 1) / 2;
    if coords.len() != want {
        return Err(Error::InvalidInput(format!("{} quaternions given, {want} expected", coords.len())));
    }
    let mut z = QMatrix::identity(n);
    let mut it = coords.iter();
    for h in 1..n {
        for j in 0..n - h {
            z.set(j + h, j, *it.next().expect("counted"));
        }
    }
    Ok(z)
}

pub fn quaternionic_iwasawa(z: &QMatrix) -> Result<QuaternionicIwasawa> {
    let size = z.nrows();
    let mut m = z.mul(&z.adjoint());
    let mut n = QMatrix::identity(size);
    let mut d = vec![0.0; size];
    for j in (0..size).rev() {
        let p = m.get(j, j).z1.re;
        if p.is_nan() || p < tol::IWASAWA_PIVOT {
            return Err(Error::NumericalBreakdown { index: j, pivot: p });
        }
        d[j] = p;
        for i in 0..j {
            n.set(i, j, m.get(i, j).scale(1.0 / p));
        }
        for i in 0..j {
            for k in 0..j {
                let v = m.get(i, k) - n.get(i, j).scale(p) * n.get(k, j).conj();
                m.set(i, k, v);
            }
        }
    }
    let mut x = z.clone();
    for i in (0..size).rev() {
        for col in 0..size {
            let mut v = z.get(i, col);
            for k in i + 1..size {
                v = v - n.get(i, k) * x.get(k, col);
            }
            x.set(i, col, v);
        }
    }
    let a: Vec<f64> = d.iter().map(|p| p.sqrt()).collect();
    let mut k = x;
    for (i, ai) in a.iter().enumerate() {
        for col in 0..size {
            k.set(i, col, k.get(i, col).scale(1.0 / ai));
        }
    }
    Ok(QuaternionicIwasawa { n, a, k })
}

impl QuaternionicIwasawa {
    pub fn multiply_back(&self) -> QMatrix {
        let mut na = self.n.clone();
        for j in 0..na.ncols() {
            for i in 0..na.nrows() {
                na.set(i, j, na.get(i, j).scale(self.a[j]));
            }
        }
        na.mul(&self.k)
    }

    /// Complex images `(n, a, k)` of the three factors.
    pub fn to_complex(&self) -> (CMat, CMat, CMat) {
        let a: Vec<C> = self.a.iter().map(|x| C::new(*x, 0.0)).collect();
        let a = QMatrix { a: crate::linalg::diag(&a), b: CMat::zeros(a.len(), a.len()) };
        (self.n.to_complex(), a.to_complex(), self.k.to_complex())
    }

    /// `r_i²` read off as trailing products of `a²`, matching
    /// `A = diag(1/r, r)` for Sp(2).
    pub fn radii_squared(&self) -> Vec<f64> {
        let n = self.a.len();
        (1..n).map(|m| self.a[n - m..].iter().map(|x| x * x).product()).collect()
    }
}

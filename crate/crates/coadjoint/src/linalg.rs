//! Dense complex matrix helpers on top of `nalgebra`.

use nalgebra::DMatrix;
use num_complex::Complex64 as C;

pub type CMat = DMatrix<C>;

pub fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

pub fn identity(n: usize) -> CMat {
    CMat::identity(n, n)
}

pub fn from_real(m: &DMatrix<f64>) -> CMat {
    m.map(|x| C::new(x, 0.0))
}

pub fn diag(d: &[C]) -> CMat {
    let n = d.len();
    CMat::from_fn(n, n, |i, j| if i == j { d[i] } else { C::new(0.0, 0.0) })
}

/// Max-modulus entry, the `‖·‖∞` used for residuals throughout.
pub fn max_abs(m: &CMat) -> f64 {
    m.iter().fold(0.0, |acc, x| acc.max(x.norm()))
}

pub fn dist(a: &CMat, b: &CMat) -> f64 {
    max_abs(&(a - b))
}

pub fn commutator(a: &CMat, b: &CMat) -> CMat {
    a * b - b * a
}

pub fn trace(m: &CMat) -> C {
    m.diagonal().sum()
}

/// `Tr(A B)` without forming the product.
pub fn trace_product(a: &CMat, b: &CMat) -> C {
    let mut s = C::new(0.0, 0.0);
    for i in 0..a.nrows() {
        for k in 0..a.ncols() {
            s += a[(i, k)] * b[(k, i)];
        }
    }
    s
}

/// Exponential of a nilpotent matrix by its terminating series.
pub fn exp_nilpotent(x: &CMat) -> CMat {
    let n = x.nrows();
    let mut out = identity(n);
    let mut term = identity(n);
    for k in 1..=n {
        term = &term * x / C::new(k as f64, 0.0);
        if max_abs(&term) == 0.0 {
            break;
        }
        out += &term;
    }
    out
}

/// Logarithm of a unipotent matrix by its terminating series.
pub fn log_unipotent(u: &CMat) -> CMat {
    let n = u.nrows();
    let x = u - identity(n);
    let mut out = CMat::zeros(n, n);
    let mut term = identity(n);
    for k in 1..=n {
        term = &term * &x;
        if max_abs(&term) == 0.0 {
            break;
        }
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        out += &term * C::new(sign / k as f64, 0.0);
    }
    out
}

/// Sorted eigenvalues of the hermitian matrix `i·m` for anti-hermitian `m`.
pub fn anti_hermitian_spectrum(m: &CMat) -> Vec<f64> {
    let h = m * C::new(0.0, 1.0);
    let h = (&h + h.adjoint()) * C::new(0.5, 0.0);
    let mut ev: Vec<f64> = h.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(|a, b| a.total_cmp(b));
    ev
}

/// Multiset distance between two sorted spectra.
pub fn spectrum_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |acc, (x, y)| acc.max((x - y).abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_log_roundtrip() {
        let mut x = CMat::zeros(3, 3);
        x[(1, 0)] = c(1.0, 2.0);
        x[(2, 1)] = c(-0.5, 0.3);
        x[(2, 0)] = c(0.2, 0.0);
        let u = exp_nilpotent(&x);
        assert!(dist(&log_unipotent(&u), &x) < 1e-14);
        assert_eq!(u[(0, 0)], c(1.0, 0.0));
    }

    #[test]
    fn spectrum_of_diagonal() {
        let m = diag(&[c(0.0, -2.0), c(0.0, 1.0), c(0.0, 1.0)]);
        let s = anti_hermitian_spectrum(&m);
        assert!(spectrum_distance(&s, &[-1.0, -1.0, 2.0]) < 1e-14);
    }
}

//! Quaternions `q = z1 + z2·j` and quaternion matrices stored as complex pairs.

use std::ops::{Add, Mul, Neg, Sub};

use crate::linalg::CMat;
use num_complex::Complex64 as C;

#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Quaternion {
    pub z1: C,
    pub z2: C,
}

impl Quaternion {
    pub const ONE: Self = Self { z1: C::new(1.0, 0.0), z2: C::new(0.0, 0.0) };
    pub const J: Self = Self { z1: C::new(0.0, 0.0), z2: C::new(1.0, 0.0) };

    pub fn new(z1: C, z2: C) -> Self {
        Self { z1, z2 }
    }

    pub fn real(x: f64) -> Self {
        Self::new(C::new(x, 0.0), C::new(0.0, 0.0))
    }

    pub fn conj(self) -> Self {
        Self::new(self.z1.conj(), -self.z2)
    }

    pub fn norm_sqr(self) -> f64 {
        self.z1.norm_sqr() + self.z2.norm_sqr()
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn inv(self) -> Self {
        let n = self.norm_sqr();
        let c = self.conj();
        Self::new(c.z1 / n, c.z2 / n)
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.z1 * s, self.z2 * s)
    }

    /// The 2×2 complex image `[[z1, z2], [−z̄2, z̄1]]`.
    pub fn to_complex(self) -> [[C; 2]; 2] {
        [[self.z1, self.z2], [-self.z2.conj(), self.z1.conj()]]
    }
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.z1 + o.z1, self.z2 + o.z2)
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.z1 - o.z1, self.z2 - o.z2)
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.z1, -self.z2)
    }
}

impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.z1 * o.z1 - self.z2 * o.z2.conj(),
            self.z1 * o.z2 + self.z2 * o.z1.conj(),
        )
    }
}

/// Quaternion matrix `A + B·j` with complex `A`, `B`.
#[derive(Clone, Debug, PartialEq)]
pub struct QMatrix {
    pub a: CMat,
    pub b: CMat,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { a: CMat::zeros(rows, cols), b: CMat::zeros(rows, cols) }
    }

    pub fn identity(n: usize) -> Self {
        Self { a: CMat::identity(n, n), b: CMat::zeros(n, n) }
    }

    pub fn nrows(&self) -> usize {
        self.a.nrows()
    }

    pub fn ncols(&self) -> usize {
        self.a.ncols()
    }

    pub fn get(&self, i: usize, j: usize) -> Quaternion {
        Quaternion::new(self.a[(i, j)], self.b[(i, j)])
    }

    pub fn set(&mut self, i: usize, j: usize, q: Quaternion) {
        self.a[(i, j)] = q.z1;
        self.b[(i, j)] = q.z2;
    }

    /// Quaternionic conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self { a: self.a.adjoint(), b: -self.b.transpose() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self {
            a: &self.a * &o.a - &self.b * o.b.conjugate(),
            b: &self.a * &o.b + &self.b * o.a.conjugate(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self { a: &self.a - &o.a, b: &self.b - &o.b }
    }

    pub fn max_abs(&self) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..self.nrows() {
            for j in 0..self.ncols() {
                m = m.max(self.get(i, j).norm());
            }
        }
        m
    }

    /// Block image `[[A, B], [−B̄, Ā]]` in `2n×2n` complex matrices.
    pub fn to_complex(&self) -> CMat {
        let (r, c) = (self.nrows(), self.ncols());
        let mut m = CMat::zeros(2 * r, 2 * c);
        m.view_mut((0, 0), (r, c)).copy_from(&self.a);
        m.view_mut((0, c), (r, c)).copy_from(&self.b);
        m.view_mut((r, 0), (r, c)).copy_from(&(-self.b.conjugate()));
        m.view_mut((r, c), (r, c)).copy_from(&self.a.conjugate());
        m
    }

    /// Inverse of [`QMatrix::to_complex`]; returns the reading together with
    /// how far `m` is from the quaternionic block pattern.
    pub fn from_complex(m: &CMat) -> (Self, f64) {
        let r = m.nrows() / 2;
        let c = m.ncols() / 2;
        let a = m.view((0, 0), (r, c)).into_owned();
        let b = m.view((0, c), (r, c)).into_owned();
        let q = Self { a, b };
        let defect = crate::linalg::dist(&q.to_complex(), m);
        (q, defect)
    }
}

use nalgebra::DMatrix;
use num_complex::Complex64 as C;

use crate::tol;

/// Central finite differences in `(Re z, Im z)`, optionally Richardson-extrapolated.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Differencer {
    pub step: f64,
    pub richardson: bool,
}

impl Default for Differencer {
    fn default() -> Self {
        Self { step: tol::FD_STEP, richardson: false }
    }
}

fn shifted(z: &[C], moves: &[(usize, C)]) -> Vec<C> {
    let mut out = z.to_vec();
    for &(i, d) in moves {
        out[i] += d;
    }
    out
}

impl Differencer {
    pub fn new(step: f64) -> Self {
        Self { step, richardson: false }
    }

    pub fn with_richardson(mut self) -> Self {
        self.richardson = true;
        self
    }

    fn extrapolate(&self, f: impl Fn(f64) -> C) -> C {
        if self.richardson {
            let (a, b) = (f(self.step), f(self.step / 2.0));
            (b * 4.0 - a) / 3.0
        } else {
            f(self.step)
        }
    }

    /// `∂²f/∂z_a∂z̄_b` over the index set `active`.
    pub fn wirtinger_hessian(&self, f: &dyn Fn(&[C]) -> f64, z: &[C], active: &[usize]) -> DMatrix<C> {
        let m = active.len();
        let mut g = DMatrix::zeros(m, m);
        for (p, &a) in active.iter().enumerate() {
            for (q, &b) in active.iter().enumerate().skip(p) {
                let v = self.extrapolate(|h| {
                    let dirs = [C::new(h, 0.0), C::new(0.0, h)];
                    let mut second = [[0.0; 2]; 2];
                    for (s, da) in dirs.iter().enumerate() {
                        for (t, db) in dirs.iter().enumerate() {
                            let e = |sa: f64, sb: f64| f(&shifted(z, &[(a, *da * sa), (b, *db * sb)]));
                            second[s][t] = (e(1.0, 1.0) - e(1.0, -1.0) - e(-1.0, 1.0) + e(-1.0, -1.0)) / (4.0 * h * h);
                        }
                    }
                    C::new(second[0][0] + second[1][1], second[0][1] - second[1][0]) * 0.25
                });
                g[(p, q)] = v;
                g[(q, p)] = v.conj();
            }
        }
        for p in 0..m {
            g[(p, p)] = C::new(g[(p, p)].re, 0.0);
        }
        g
    }

    /// `∂²f/∂w∂w̄ = Δf/4` along the single coordinate `index` (five-point stencil).
    pub fn laplacian_quarter(&self, f: &dyn Fn(&[C]) -> f64, z: &[C], index: usize) -> f64 {
        let centre = f(z);
        self.extrapolate(|h| {
            let mut s = -4.0 * centre;
            for d in [C::new(h, 0.0), C::new(-h, 0.0), C::new(0.0, h), C::new(0.0, -h)] {
                s += f(&shifted(z, &[(index, d)]));
            }
            C::new(s / (4.0 * h * h), 0.0)
        })
        .re
    }

    /// Holomorphic derivative `∂f/∂z_a` of a complex-valued function.
    pub fn holomorphic_derivative(&self, f: &dyn Fn(&[C]) -> C, z: &[C], a: usize) -> C {
        self.extrapolate(|h| {
            let dx = (f(&shifted(z, &[(a, C::new(h, 0.0))])) - f(&shifted(z, &[(a, C::new(-h, 0.0))]))) / (2.0 * h);
            let dy = (f(&shifted(z, &[(a, C::new(0.0, h))])) - f(&shifted(z, &[(a, C::new(0.0, -h))]))) / (2.0 * h);
            (dx - dy * C::new(0.0, 1.0)) * 0.5
        })
    }
}

//! Root data in a weight basis of the defining representation.
//!
//! Every family is handled through a unitary change of basis `W` under which
//! the maximal torus is diagonal, the basis weights decrease, positive root
//! vectors are strictly upper triangular and negative ones strictly lower.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C;

use super::group::{Family, GroupSpec};
use crate::linalg::{self, CMat};

#[derive(Clone, Debug, PartialEq)]
pub struct Root {
    /// ε-coordinates.
    pub vector: Vec<f64>,
    /// Expansion in simple roots.
    pub coeffs: Vec<i64>,
    pub height: i64,
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    pub group: GroupSpec,
    /// Columns: weight-basis vectors in standard coordinates.
    pub basis: CMat,
    /// ε-coordinates of the weight of each basis vector.
    pub weights: Vec<Vec<f64>>,
    pub positive_roots: Vec<Root>,
    /// Indices into `positive_roots`, ordered α₁ … α_l.
    pub simple: Vec<usize>,
    /// Simple roots as Cartan-subalgebra matrices α̂_k.
    pub simple_roots: Vec<CMat>,
    /// `X_{−α}` in standard coordinates, parallel to `positive_roots`.
    pub lowering: Vec<CMat>,
    /// `X_α = X_{−α}*`.
    pub raising: Vec<CMat>,
    /// `H_α = [X_α, X_{−α}]`.
    pub cartan_vectors: Vec<CMat>,
    /// `Tr` multiple used as the invariant form on 𝔤.
    pub bilinear_form_scale: f64,
    /// Bilinear form preserved by the complex group (standard coordinates).
    pub form: Option<CMat>,
    lowering_w: Vec<CMat>,
}

fn unit(m: usize, i: usize) -> Vec<f64> {
    let mut v = vec![0.0; m];
    v[i] = 1.0;
    v
}

fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn neg(a: &[f64]) -> Vec<f64> {
    a.iter().map(|x| -x).collect()
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn simple_vectors(g: &GroupSpec) -> Vec<Vec<f64>> {
    let m = g.euclid_dim();
    let chain = |k: usize| sub(&unit(m, k), &unit(m, k + 1));
    match (g.family, g.n) {
        (Family::SU, _) => (0..g.rank).map(chain).collect(),
        (Family::Sp, n) => {
            let mut v: Vec<_> = (0..n - 1).map(chain).collect();
            v.push(unit(m, n - 1).iter().map(|x| 2.0 * x).collect());
            v
        }
        (Family::SO, 3) => vec![unit(1, 0)],
        (Family::SO, _) => vec![chain(0), add(&unit(2, 0), &unit(2, 1))],
    }
}

fn weight_basis(g: &GroupSpec) -> (CMat, Vec<Vec<f64>>) {
    let m = g.euclid_dim();
    let s = std::f64::consts::FRAC_1_SQRT_2;
    match (g.family, g.n) {
        (Family::SU, n) => (linalg::identity(n), (0..n).map(|v| unit(m, v)).collect()),
        (Family::Sp, n) => {
            let mut w = CMat::zeros(2 * n, 2 * n);
            let mut wts = Vec::new();
            for v in 0..2 * n {
                if v < n {
                    w[(v, v)] = C::new(1.0, 0.0);
                    wts.push(unit(m, v));
                } else {
                    w[(3 * n - 1 - v, v)] = C::new(1.0, 0.0);
                    wts.push(neg(&unit(m, 2 * n - 1 - v)));
                }
            }
            (w, wts)
        }
        (Family::SO, 3) => {
            let w = CMat::from_row_slice(
                3,
                3,
                &[
                    C::new(s, 0.0), C::new(0.0, 0.0), C::new(s, 0.0),
                    C::new(0.0, -s), C::new(0.0, 0.0), C::new(0.0, s),
                    C::new(0.0, 0.0), C::new(1.0, 0.0), C::new(0.0, 0.0),
                ],
            );
            (w, vec![vec![1.0], vec![0.0], vec![-1.0]])
        }
        (Family::SO, _) => {
            let z = C::new(0.0, 0.0);
            let (r, i) = (C::new(s, 0.0), C::new(0.0, s));
            let w = CMat::from_row_slice(
                4,
                4,
                &[
                    r, z, z, r,
                    -i, z, z, i,
                    z, r, r, z,
                    z, -i, i, z,
                ],
            );
            let e = |k| unit(2, k);
            (w, vec![e(0), e(1), neg(&e(1)), neg(&e(0))])
        }
    }
}

fn std_form(g: &GroupSpec) -> Option<CMat> {
    match g.family {
        Family::SU => None,
        Family::SO => Some(linalg::identity(g.n)),
        Family::Sp => {
            let n = g.n;
            let mut j = CMat::zeros(2 * n, 2 * n);
            for k in 0..n {
                j[(k, n + k)] = C::new(1.0, 0.0);
                j[(n + k, k)] = C::new(-1.0, 0.0);
            }
            Some(j)
        }
    }
}

pub fn root_datum(g: &GroupSpec) -> RootDatum {
    let (w, weights) = weight_basis(g);
    let form = std_form(g);
    let form_w = form.as_ref().map(|b| w.transpose() * b * &w);
    let form_w_inv = form_w.as_ref().map(|b| b.clone().try_inverse().expect("nondegenerate form"));
    let simple_vecs = simple_vectors(g);
    let l = simple_vecs.len();
    let gram = DMatrix::from_fn(l, l, |i, j| dot(&simple_vecs[i], &simple_vecs[j]));
    let gram_inv = gram.try_inverse().expect("simple roots independent");
    let expand = |v: &[f64]| -> Vec<i64> {
        let rhs = DVector::from_fn(l, |i, _| dot(&simple_vecs[i], v));
        (&gram_inv * rhs).iter().map(|x| x.round() as i64).collect()
    };

    let dim = g.rep_dim();
    let mut found: Vec<(Root, CMat)> = Vec::new();
    for j in 0..dim {
        for i in j + 1..dim {
            let vector = sub(&weights[j], &weights[i]);
            if found.iter().any(|(r, _)| sub(&r.vector, &vector).iter().all(|x| x.abs() < 1e-12)) {
                continue;
            }
            let mut x = CMat::zeros(dim, dim);
            x[(i, j)] = C::new(1.0, 0.0);
            if let (Some(b), Some(bi)) = (&form_w, &form_w_inv) {
                x = &x - bi * x.transpose() * b;
            }
            let std = &w * &x * w.adjoint();
            let scale = linalg::max_abs(&std);
            if scale < 1e-12 {
                continue;
            }
            let coeffs = expand(&vector);
            let height = coeffs.iter().sum();
            found.push((Root { vector, coeffs, height }, x / C::new(scale, 0.0)));
        }
    }
    found.sort_by(|(a, _), (b, _)| a.height.cmp(&b.height).then_with(|| b.coeffs.cmp(&a.coeffs)));

    let simple = (0..l)
        .map(|k| {
            found
                .iter()
                .position(|(r, _)| sub(&r.vector, &simple_vecs[k]).iter().all(|x| x.abs() < 1e-12))
                .expect("simple root present")
        })
        .collect();
    let (positive_roots, lowering_w): (Vec<_>, Vec<_>) = found.into_iter().unzip();
    let lowering: Vec<CMat> = lowering_w.iter().map(|x| &w * x * w.adjoint()).collect();
    let raising: Vec<CMat> = lowering.iter().map(|x| x.adjoint()).collect();
    let cartan_vectors = raising.iter().zip(&lowering).map(|(a, b)| linalg::commutator(a, b)).collect();

    let mut datum = RootDatum {
        group: *g,
        basis: w,
        weights,
        positive_roots,
        simple,
        simple_roots: Vec::new(),
        lowering,
        raising,
        cartan_vectors,
        bilinear_form_scale: g.trace_scale(),
        form,
        lowering_w,
    };
    datum.simple_roots = simple_vecs.iter().map(|a| datum.torus_matrix(a)).collect();
    datum
}

impl RootDatum {
    pub fn rank(&self) -> usize {
        self.group.rank
    }

    pub fn dim(&self) -> usize {
        self.group.rep_dim()
    }

    pub fn simple_vector(&self, k: usize) -> &[f64] {
        &self.positive_roots[self.simple[k]].vector
    }

    /// `2/⟨α_k, α_k⟩`.
    pub fn coroot_factor(&self, k: usize) -> f64 {
        let a = self.simple_vector(k);
        2.0 / dot(a, a)
    }

    /// Negative root vector `X_{−α}` in the weight basis.
    pub fn lowering_weight_basis(&self, r: usize) -> &CMat {
        &self.lowering_w[r]
    }

    pub fn to_weight_basis(&self, m: &CMat) -> CMat {
        self.basis.adjoint() * m * &self.basis
    }

    pub fn from_weight_basis(&self, m: &CMat) -> CMat {
        &self.basis * m * self.basis.adjoint()
    }

    /// `W · i·diag(⟨wt_v, λ⟩) · W*` for λ in ε-coordinates.
    pub fn torus_matrix(&self, lambda: &[f64]) -> CMat {
        let d: Vec<C> = self.weights.iter().map(|wt| C::new(0.0, dot(wt, lambda))).collect();
        self.from_weight_basis(&linalg::diag(&d))
    }

    /// Fundamental weights ω_k, in the span of the simple roots, with
    /// `⟨ω_k, α_j⟩ = δ_kj`.
    pub fn fundamental_weights(&self) -> Vec<Vec<f64>> {
        let l = self.rank();
        let m = self.group.euclid_dim();
        let gram = DMatrix::from_fn(l, l, |i, j| dot(self.simple_vector(i), self.simple_vector(j)));
        let inv = gram.try_inverse().expect("simple roots independent");
        (0..l)
            .map(|k| {
                let mut w = vec![0.0; m];
                for j in 0..l {
                    for (x, a) in w.iter_mut().zip(self.simple_vector(j)) {
                        *x += inv[(k, j)] * a;
                    }
                }
                w
            })
            .collect()
    }

    pub fn reflect(&self, k: usize, mu: &[f64]) -> Vec<f64> {
        let a = self.simple_vector(k);
        let c = 2.0 * dot(mu, a) / dot(a, a);
        mu.iter().zip(a).map(|(x, y)| x - c * y).collect()
    }

    /// Simple reflection `s_k` as a matrix on ε-coordinates.
    pub fn reflection_matrix(&self, k: usize) -> DMatrix<f64> {
        let m = self.group.euclid_dim();
        let mut out = DMatrix::zeros(m, m);
        for j in 0..m {
            let col = self.reflect(k, &unit(m, j));
            for i in 0..m {
                out[(i, j)] = col[i];
            }
        }
        out
    }

    /// The invariant form `scale · Tr(XY)` on 𝔤.
    pub fn trace_form(&self, x: &CMat, y: &CMat) -> f64 {
        self.bilinear_form_scale * linalg::trace_product(x, y).re
    }

    /// Fundamental potentials as combinations of logarithmic trailing minors:
    /// `F_k = Σ c · ln T_m`, returned as `(m, c)` pairs.
    pub fn fundamental_minors(&self, k: usize) -> Vec<(usize, f64)> {
        let g = &self.group;
        match (g.family, g.n) {
            (Family::SU, n) => vec![(n - 1 - k, 1.0)],
            (Family::Sp, n) => vec![(2 * n - 1 - k, 1.0)],
            (Family::SO, 3) => vec![(1, 0.5)],
            (Family::SO, _) => {
                if k == 0 {
                    vec![(3, 1.0), (2, -0.5)]
                } else {
                    vec![(2, 0.5)]
                }
            }
        }
    }

    /// Indices of positive roots lying in the span of the given simple roots.
    pub fn roots_in_span(&self, simple: &[usize]) -> Vec<usize> {
        (0..self.positive_roots.len())
            .filter(|&r| {
                self.positive_roots[r]
                    .coeffs
                    .iter()
                    .enumerate()
                    .all(|(k, &c)| c == 0 || simple.contains(&k))
            })
            .collect()
    }

    /// A basis of the compact real form 𝔤.
    pub fn compact_basis(&self) -> Vec<CMat> {
        let i = C::new(0.0, 1.0);
        let mut out = self.simple_roots.clone();
        for (up, down) in self.raising.iter().zip(&self.lowering) {
            out.push(up - down);
            out.push((up + down) * i);
        }
        out
    }

    /// Whether `g` preserves the family's bilinear form and has unit determinant.
    pub fn complex_group_defect(&self, g: &CMat) -> f64 {
        let det_defect = if self.group.family == Family::SU {
            (g.determinant() - C::new(1.0, 0.0)).norm()
        } else {
            0.0
        };
        let form_defect = self
            .form
            .as_ref()
            .map(|b| linalg::dist(&(g.transpose() * b * g), b))
            .unwrap_or(0.0);
        det_defect.max(form_defect)
    }
}

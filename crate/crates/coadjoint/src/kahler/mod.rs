//! Kähler potentials from torus characters, the Kähler metric and form, the
//! KKS pairing, cocycle covariance and integrality.

mod differ;

use nalgebra::DMatrix;
use num_complex::Complex64 as C;

use crate::decompose::{chart_matrix, gauss_bruhat, iwasawa, torus_character_diagonal, ChartPoint, IwasawaFactors};
use crate::lie_core::{build_group, root_datum, Family, InitialPoint, RootDatum};
use crate::linalg::{self, CMat};
use crate::orbit::{check_degeneracy, OrbitPoint};
use crate::{tol, Error, Result};

pub use differ::Differencer;

/// Fundamental potential `F_k = Σ c·ln T_m` from already computed Iwasawa factors.
pub fn fundamental_from_factors(datum: &RootDatum, f: &IwasawaFactors, k: usize) -> f64 {
    datum.fundamental_minors(k).iter().map(|&(m, c)| c * f.log_trailing_minor(m)).sum()
}

/// `F_k(z)`, normalized so that its form pairs to `δ_jk` with the cycles.
pub fn fundamental_potential(datum: &RootDatum, k: usize, point: &ChartPoint) -> Result<f64> {
    Ok(fundamental_from_factors(datum, &iwasawa(datum, point)?, k))
}

/// `ln r_k² = (2/|α_k|²)·F_k`, the torus coordinates of the Iwasawa factor.
pub fn log_radii_squared(datum: &RootDatum, point: &ChartPoint) -> Result<Vec<f64>> {
    let f = iwasawa(datum, point)?;
    Ok((0..datum.rank()).map(|k| datum.coroot_factor(k) * fundamental_from_factors(datum, &f, k)).collect())
}

/// `Φ = Σ_k ⟨μ₀, α_k⟩·ln r_k²`.
pub fn potential(datum: &RootDatum, mu0: &InitialPoint, point: &ChartPoint) -> Result<f64> {
    Ok(log_radii_squared(datum, point)?.iter().zip(&mu0.weights).map(|(l, w)| l * w).sum())
}

#[derive(Clone, Debug)]
pub struct KahlerTensor {
    /// `g_{αβ̄}` over the active coordinates.
    pub g: DMatrix<C>,
    /// Positive-root indices labelling the rows of `g`.
    pub active: Vec<usize>,
    /// `ω = omega_scale · i·Σ g_{αβ̄} dz_α∧dz̄_β`.
    pub omega_scale: f64,
    pub base_point: ChartPoint,
}

impl KahlerTensor {
    /// `ω(u, v)` for tangent vectors given in the full coordinate set.
    pub fn omega(&self, u: &[C], v: &[C]) -> f64 {
        let mut s = C::new(0.0, 0.0);
        for (p, &a) in self.active.iter().enumerate() {
            for (q, &b) in self.active.iter().enumerate() {
                s += self.g[(p, q)] * u[a] * v[b].conj();
            }
        }
        -2.0 * self.omega_scale * s.im
    }

    pub fn min_eigenvalue(&self) -> f64 {
        let h = (&self.g + self.g.adjoint()) * C::new(0.5, 0.0);
        h.symmetric_eigenvalues().iter().copied().fold(f64::INFINITY, f64::min)
    }
}

fn check_step(point: &ChartPoint, d: &Differencer) -> Result<()> {
    let norm = point.norm();
    if norm > 1e3 / d.step {
        return Err(Error::StepUnderflow { norm, step: d.step });
    }
    Ok(())
}

/// Roots along which μ₀ does not vanish.
pub fn active_roots(datum: &RootDatum, mu0: &InitialPoint) -> Vec<usize> {
    (0..datum.positive_roots.len()).filter(|&r| mu0.pairing(datum, r) >= tol::WALL).collect()
}

/// `g_{αβ̄} = ∂²Φ/∂z_α∂z̄_β` by finite differences.
pub fn metric_with(datum: &RootDatum, mu0: &InitialPoint, point: &ChartPoint, d: &Differencer) -> Result<KahlerTensor> {
    check_degeneracy(datum, mu0, point)?;
    check_step(point, d)?;
    iwasawa(datum, point)?;
    let active = active_roots(datum, mu0);
    let f = |z: &[C]| potential(datum, mu0, &ChartPoint::new(z.to_vec())).unwrap_or(f64::NAN);
    let g = d.wirtinger_hessian(&f, &point.coords, &active);
    Ok(KahlerTensor { g, active, omega_scale: 1.0, base_point: point.clone() })
}

pub fn metric(datum: &RootDatum, mu0: &InitialPoint, point: &ChartPoint) -> Result<KahlerTensor> {
    metric_with(datum, mu0, point, &Differencer::default())
}

/// `⟨μ, [X, Y]⟩` with the invariant trace form of the family.
pub fn kks_pairing(datum: &RootDatum, mu: &OrbitPoint, x: &CMat, y: &CMat) -> f64 {
    datum.trace_form(&mu.mu_matrix, &linalg::commutator(x, y))
}

/// `z_{exp(τX)}` differentiated at `τ = 0`: the fundamental vector field of `X`.
pub fn tangent_vector(datum: &RootDatum, point: &ChartPoint, x: &CMat, step: f64) -> Result<Vec<C>> {
    let z = chart_matrix(datum, point)?;
    let moved = |tau: f64| -> Result<Vec<C>> {
        let g = (x * C::new(tau, 0.0)).exp();
        Ok(gauss_bruhat(datum, &(&z * g))?.point.coords)
    };
    let mut out = vec![C::new(0.0, 0.0); point.coords.len()];
    for (coef, tau) in [(8.0, step), (-8.0, -step), (-1.0, 2.0 * step), (1.0, -2.0 * step)] {
        for (o, v) in out.iter_mut().zip(moved(tau)?) {
            *o += v * (coef / (12.0 * step));
        }
    }
    Ok(out)
}

/// The constant `c` with `ω(X̃, Ỹ) = c·⟨μ, [X, Y]⟩`, fitted once on SU(2) at
/// the origin with ξ = 1.
pub fn kks_scale() -> f64 {
    let d = root_datum(&build_group(Family::SU, 2).expect("SU(2)"));
    let mu0 = InitialPoint::new(&d, &[1.0]).expect("weight");
    let z = ChartPoint::origin(&d);
    let basis = d.compact_basis();
    let (x, y) = (&basis[1], &basis[2]);
    let tensor = metric_with(&d, &mu0, &z, &Differencer::new(1e-3).with_richardson()).expect("metric");
    let u = tangent_vector(&d, &z, x, 1e-3).expect("tangent");
    let v = tangent_vector(&d, &z, y, 1e-3).expect("tangent");
    let mu = crate::orbit::dress(&d, &mu0, &z).expect("dress");
    tensor.omega(&u, &v) / kks_pairing(&d, &mu, x, y)
}

#[derive(Clone, Debug)]
pub struct CocycleShift {
    pub z_g: ChartPoint,
    /// `Φ(z_g) − Φ(z)`.
    pub shift: f64,
    /// Torus part of `ẑĝ = n_B·d·ẑ_g` (weight-basis diagonal).
    pub d_diagonal: Vec<C>,
}

/// Transformation of the potential under `z ↦ z_g`. The shift is
/// `ln|χ^ξ(d⁻¹)|² = −ln|χ^ξ(d)|²`.
pub fn cocycle_shift(datum: &RootDatum, mu0: &InitialPoint, point: &ChartPoint, g: &CMat) -> Result<CocycleShift> {
    let z = chart_matrix(datum, point)?;
    let f = gauss_bruhat(datum, &(z * g))?;
    let chi = torus_character_diagonal(datum, &f.d_diagonal, &mu0.weights)?;
    Ok(CocycleShift { z_g: f.point, shift: -2.0 * chi.norm().ln(), d_diagonal: f.d_diagonal })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Integrality {
    /// `2⟨μ₀, α_k⟩/⟨α_k, α_k⟩` per simple root.
    pub ratios: Vec<f64>,
    pub integral: Vec<bool>,
}

impl Integrality {
    pub fn all(&self) -> bool {
        self.integral.iter().all(|&b| b)
    }
}

pub fn integrality_check(datum: &RootDatum, mu0: &InitialPoint) -> Integrality {
    let ratios: Vec<f64> = (0..datum.rank()).map(|k| datum.coroot_factor(k) * mu0.weights[k]).collect();
    let integral = ratios.iter().map(|r| (r - r.round()).abs() < tol::INTEGRALITY).collect();
    Integrality { ratios, integral }
}

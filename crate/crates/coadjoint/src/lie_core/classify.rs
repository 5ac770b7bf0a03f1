//! Initial points in the closed positive chamber and the orbit types they induce.

use std::fmt;

use super::group::Family;
use super::roots::{dot, RootDatum};
use super::weyl::WeylGroup;
use crate::linalg::{self, CMat};
use crate::{tol, Error, Result};

#[derive(Clone, Debug)]
pub struct InitialPoint {
    /// `ξ_k = ⟨μ₀, α_k⟩`.
    pub weights: Vec<f64>,
    /// μ₀ in ε-coordinates.
    pub lambda: Vec<f64>,
    /// μ̂₀ as an anti-hermitian matrix.
    pub matrix: CMat,
}

impl InitialPoint {
    pub fn new(datum: &RootDatum, weights: &[f64]) -> Result<Self> {
        if weights.len() != datum.rank() {
            return Err(Error::InvalidInput(format!(
                "{} weights given, rank is {}",
                weights.len(),
                datum.rank()
            )));
        }
        for (index, &value) in weights.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::InvalidInput(format!("weight {index} is not finite")));
            }
            if value < -tol::WALL {
                return Err(Error::OutsideChamber { index, value });
            }
        }
        let omega = datum.fundamental_weights();
        let mut lambda = vec![0.0; datum.group.euclid_dim()];
        for (w, o) in weights.iter().zip(&omega) {
            for (x, y) in lambda.iter_mut().zip(o) {
                *x += w * y;
            }
        }
        let matrix = -datum.torus_matrix(&lambda);
        Ok(Self { weights: weights.to_vec(), lambda, matrix })
    }

    /// `⟨μ₀, α⟩` for the positive root with the given index.
    pub fn pairing(&self, datum: &RootDatum, root: usize) -> f64 {
        dot(&self.lambda, &datum.positive_roots[root].vector)
    }

    pub fn spectrum(&self) -> Vec<f64> {
        linalg::anti_hermitian_spectrum(&self.matrix)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitKind {
    Generic,
    Degenerate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StabilizerFactor {
    U1,
    SU(usize),
    Sp(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stabilizer {
    pub factors: Vec<StabilizerFactor>,
}

impl fmt::Display for Stabilizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|x| match x {
                StabilizerFactor::U1 => "U(1)".to_string(),
                StabilizerFactor::SU(k) => format!("SU({k})"),
                StabilizerFactor::Sp(k) => format!("Sp({k})"),
            })
            .collect();
        write!(f, "{}", parts.join("×"))
    }
}

#[derive(Clone, Debug)]
pub struct OrbitClass {
    pub kind: OrbitKind,
    /// No intermediate subgroup between the stabilizer and G.
    pub maximal_degenerate: bool,
    /// Simple roots (by index) with `⟨μ₀, α⟩ = 0`.
    pub vanishing_walls: Vec<usize>,
    /// Positive roots (by index) with `⟨μ₀, α⟩ ≠ 0`: the chart coordinates.
    pub active_roots: Vec<usize>,
    pub real_dimension: usize,
    pub stabilizer: Stabilizer,
}

/// Connected components of the Dynkin subdiagram on `subset`, as factors.
pub fn levi_factors(datum: &RootDatum, subset: &[usize]) -> Vec<StabilizerFactor> {
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    let linked = |a: usize, b: usize| dot(datum.simple_vector(a), datum.simple_vector(b)).abs() > 1e-12;
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for &k in &sorted {
        let hits: Vec<usize> = (0..comps.len()).filter(|&c| comps[c].iter().any(|&j| linked(j, k))).collect();
        let mut merged = vec![k];
        for &c in hits.iter().rev() {
            merged.extend(comps.remove(c));
        }
        comps.push(merged);
    }
    comps.sort_by_key(|c| c.iter().copied().min());
    let long = datum.group.family == Family::Sp;
    let mut out: Vec<StabilizerFactor> = comps
        .iter()
        .map(|c| {
            if long && c.contains(&(datum.rank() - 1)) {
                StabilizerFactor::Sp(c.len())
            } else {
                StabilizerFactor::SU(c.len() + 1)
            }
        })
        .collect();
    out.sort_by_key(|f| match f {
        StabilizerFactor::Sp(k) => (0, std::cmp::Reverse(*k)),
        StabilizerFactor::SU(k) => (1, std::cmp::Reverse(*k)),
        StabilizerFactor::U1 => (2, std::cmp::Reverse(0)),
    });
    out
}

pub fn classify_initial_point(datum: &RootDatum, mu0: &InitialPoint) -> Result<OrbitClass> {
    if mu0.weights.iter().all(|w| w.abs() < tol::WALL) {
        return Err(Error::AllWeightsZero);
    }
    let vanishing_walls: Vec<usize> = (0..datum.rank()).filter(|&k| mu0.weights[k] < tol::WALL).collect();
    let frozen = datum.roots_in_span(&vanishing_walls);
    let active_roots: Vec<usize> = (0..datum.positive_roots.len()).filter(|r| !frozen.contains(r)).collect();
    let mut factors = levi_factors(datum, &vanishing_walls);
    factors.extend(std::iter::repeat_n(StabilizerFactor::U1, datum.rank() - vanishing_walls.len()));
    Ok(OrbitClass {
        kind: if vanishing_walls.is_empty() { OrbitKind::Generic } else { OrbitKind::Degenerate },
        maximal_degenerate: vanishing_walls.len() + 1 == datum.rank(),
        real_dimension: 2 * active_roots.len(),
        active_roots,
        vanishing_walls,
        stabilizer: Stabilizer { factors },
    })
}

/// The Weyl image of μ (ε-coordinates) in the closed positive chamber, with
/// the index of an element carrying μ there.
pub fn dominant_image(datum: &RootDatum, weyl: &WeylGroup, mu: &[f64]) -> (Vec<f64>, usize) {
    let v = nalgebra::DVector::from_vec(mu.to_vec());
    for (i, e) in weyl.elements.iter().enumerate() {
        let img: Vec<f64> = (&e.action * &v).iter().copied().collect();
        if (0..datum.rank()).all(|k| dot(&img, datum.simple_vector(k)) >= -1e-12) {
            return (img, i);
        }
    }
    unreachable!("the closed chamber is a fundamental domain")
}

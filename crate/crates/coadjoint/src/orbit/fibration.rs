use std::fmt;

use crate::lie_core::{classify_initial_point, levi_factors, Family, InitialPoint, RootDatum, Stabilizer, StabilizerFactor};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDescriptor {
    pub group: String,
    pub stabilizer: String,
    pub real_dimension: usize,
    pub name: String,
}

/// `O = E(K\G, G_μ₀\K)` for an intermediate subgroup `G ⊃ K ⊃ G_μ₀`.
#[derive(Clone, Debug)]
pub struct FibrationDescription {
    pub total: OrbitDescriptor,
    pub base: OrbitDescriptor,
    pub fiber: OrbitDescriptor,
    /// Simple roots generating the stabilizer's Weyl group.
    pub stabilizer_walls: Vec<usize>,
    /// Simple roots generating K's Weyl group.
    pub intermediate_walls: Vec<usize>,
}

impl fmt::Display for FibrationDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E({}, {})", self.base.name, self.fiber.name)
    }
}

fn with_tori(mut factors: Vec<StabilizerFactor>, tori: usize) -> String {
    factors.extend(std::iter::repeat_n(StabilizerFactor::U1, tori));
    Stabilizer { factors }.to_string()
}

pub fn fibration(datum: &RootDatum, mu0: &InitialPoint) -> Result<FibrationDescription> {
    let class = classify_initial_point(datum, mu0)?;
    if class.maximal_degenerate {
        return Err(Error::MaximalDegenerate);
    }
    let l = datum.rank();
    let roots = datum.positive_roots.len();
    let s = class.vanishing_walls.clone();
    let j0 = (0..l).find(|k| !s.contains(k)).expect("some weight is nonzero");
    let sk: Vec<usize> = (0..l).filter(|&k| k != j0).collect();
    let span_s = datum.roots_in_span(&s).len();
    let span_k = datum.roots_in_span(&sk).len();
    let g = datum.group;
    let group = g.to_string();

    let base_dim = 2 * (roots - span_k);
    let base_name = if g.family == Family::SU && base_dim == 2 * (g.n - 1) {
        format!("CP^{}", g.n - 1)
    } else {
        format!("O_d^{{{group}}}")
    };
    let base =
        OrbitDescriptor { group: group.clone(), stabilizer: with_tori(levi_factors(datum, &sk), 1), real_dimension: base_dim, name: base_name };

    let k_group = Stabilizer { factors: levi_factors(datum, &sk) }.to_string();
    let fiber_dim = 2 * (span_k - span_s);
    let fiber_name = if fiber_dim == 2 {
        "CP^1".to_string()
    } else if s.is_empty() {
        format!("O^{{{k_group}}}")
    } else {
        format!("O_d^{{{k_group}}}")
    };
    let fiber = OrbitDescriptor {
        group: k_group,
        stabilizer: with_tori(levi_factors(datum, &s), sk.len() - s.len()),
        real_dimension: fiber_dim,
        name: fiber_name,
    };
    let total = OrbitDescriptor {
        group,
        stabilizer: class.stabilizer.to_string(),
        real_dimension: class.real_dimension,
        name: if s.is_empty() { format!("O^{{{g}}}") } else { format!("O_d^{{{g}}}") },
    };
    Ok(FibrationDescription { total, base, fiber, stabilizer_walls: s, intermediate_walls: sk })
}

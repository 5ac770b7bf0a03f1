//! Betti numbers, Leray–Hirsch products, two-cycles and basis two-forms.

mod betti;
mod pairing;

pub use betti::{betti_from_walls, coset_poincare, poly_mul, BettiVector};
pub use pairing::{basis_cycles, basis_forms, pairing_integral, pairing_integral_with, pairing_matrix, BasisTwoForm, TwoCycle, PAIRING_NORMALIZATION};

use crate::lie_core::{classify_initial_point, InitialPoint, RootDatum, WeylGroup};
use crate::orbit::{fibration, FibrationDescription};
use crate::{Error, Result};

pub fn betti(datum: &RootDatum, weyl: &WeylGroup, mu0: &InitialPoint) -> Result<BettiVector> {
    let class = classify_initial_point(datum, mu0)?;
    Ok(betti_from_walls(weyl, &class.vanishing_walls))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LerayHirsch {
    pub total: Vec<u64>,
    pub base: Vec<u64>,
    pub fiber: Vec<u64>,
    pub holds: bool,
    pub note: Option<String>,
}

/// Compares the Poincaré polynomial of the total space with the product of
/// those of base and fiber, each computed from its own coset count.
pub fn leray_hirsch_check(fib: &FibrationDescription, weyl: &WeylGroup) -> LerayHirsch {
    let all: Vec<usize> = (0..weyl.rank()).collect();
    let total = coset_poincare(weyl, &fib.stabilizer_walls, &all);
    let base = coset_poincare(weyl, &fib.intermediate_walls, &all);
    let fiber = coset_poincare(weyl, &fib.stabilizer_walls, &fib.intermediate_walls);
    let holds = poly_mul(&base, &fiber) == total;
    LerayHirsch { total, base, fiber, holds, note: None }
}

/// Leray–Hirsch for the orbit through μ₀; maximal degenerate orbits have no
/// fibration and pass vacuously.
pub fn leray_hirsch_for(datum: &RootDatum, weyl: &WeylGroup, mu0: &InitialPoint) -> Result<LerayHirsch> {
    match fibration(datum, mu0) {
        Ok(f) => Ok(leray_hirsch_check(&f, weyl)),
        Err(Error::MaximalDegenerate) => {
            let b = betti(datum, weyl, mu0)?.b;
            Ok(LerayHirsch {
                total: b.clone(),
                base: b,
                fiber: vec![1],
                holds: true,
                note: Some("maximal degenerate orbit: no intermediate fibration".into()),
            })
        }
        Err(e) => Err(e),
    }
}

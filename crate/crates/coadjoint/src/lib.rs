//! Coadjoint orbits of the compact classical groups SU(n), Sp(n), SO(3) and SO(4).
//!
//! An orbit is fixed by a [`GroupSpec`] and an [`InitialPoint`] in the closed
//! positive Weyl chamber. Points of the orbit are addressed through complex
//! chart coordinates ([`ChartPoint`]); the compact factor of the Iwasawa
//! decomposition of the chart element dresses the initial point into the orbit.
//!
//! ```
//! use coadjoint::{build_group, lie_core::root_datum, orbit, ChartPoint, Family, InitialPoint};
//! use coadjoint::Complex64 as C;
//!
//! let d = root_datum(&build_group(Family::SU, 3).unwrap());
//! let mu0 = InitialPoint::new(&d, &[1.0, 2.0]).unwrap();
//! let z = ChartPoint::new(vec![C::new(0.3, 0.1), C::new(-0.2, 0.4), C::new(1.0, 0.0)]);
//! let p = orbit::dress(&d, &mu0, &z).unwrap();
//! let closed = orbit::su3_closed_form(&mu0, &z).unwrap();
//! for (a, b) in p.coords.unwrap().iter().zip(closed.iter()) {
//!     assert!((a - b).abs() < 1e-12);
//! }
//! ```

pub mod cohomology;
pub mod decompose;
mod error;
pub mod kahler;
pub mod lie_core;
pub mod linalg;
pub mod orbit;
pub mod quadrature;
pub mod sample;
pub mod tol;

pub use decompose::{BruhatFactors, ChartPoint, IwasawaFactors};
pub use error::{Error, Result};
pub use lie_core::{build_group, Family, GroupSpec, InitialPoint, OrbitClass, OrbitKind, RootDatum, WeylGroup};
pub use num_complex::Complex64;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/charts.md")]
    mod charts {}
    #[doc = include_str!("../../../book/src/orbits.md")]
    mod orbits {}
    #[doc = include_str!("../../../book/src/kahler.md")]
    mod kahler {}
    #[doc = include_str!("../../../book/src/cohomology.md")]
    mod cohomology {}
}

//! Matrix fields, root data, Weyl groups, and orbit classification.

mod classify;
mod group;
pub mod quaternion;
mod roots;
mod weyl;

pub use classify::{
    classify_initial_point, dominant_image, levi_factors, InitialPoint, OrbitClass, OrbitKind, Stabilizer,
    StabilizerFactor,
};
pub use group::{build_group, Family, GroupSpec};
pub use quaternion::{QMatrix, Quaternion};
pub use roots::{dot, root_datum, Root, RootDatum};
pub use weyl::{simple_reflection_matrix, weyl_group, WeylElement, WeylGroup};

//! Chart elements, Iwasawa factors and Gauss–Bruhat factors.

mod bruhat;
mod chart;
mod iwasawa;
pub mod quaternionic;
mod torus;

pub use bruhat::{gauss_bruhat, BruhatFactors};
pub(crate) use chart::chart_matrix_weight;
pub use chart::{chart_matrix, chart_point_from_matrix, ChartPoint};
pub use iwasawa::{compactness_defect, dressing_matrix, hermitian_udu, iwasawa, iwasawa_of, IwasawaFactors};
pub use torus::{torus_character, torus_character_diagonal};

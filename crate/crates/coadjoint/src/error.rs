use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unsupported group {0}")]
    UnsupportedGroup(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("all weights vanish: the orbit is a single point")]
    AllWeightsZero,
    #[error("initial point lies outside the closed positive chamber (weight {index} = {value})")]
    OutsideChamber { index: usize, value: f64 },
    #[error("pivot {pivot:e} at index {index} below breakdown threshold")]
    NumericalBreakdown { index: usize, pivot: f64 },
    #[error("element lies outside the big Bruhat cell (pivot {pivot:e} at index {index})")]
    OutsideCell { index: usize, pivot: f64 },
    #[error("torus entry {index} vanishes")]
    ZeroTorusEntry { index: usize },
    #[error("coordinate {index} must vanish on this degenerate orbit (|z| = {value:e})")]
    DegeneracyViolation { index: usize, value: f64 },
    #[error("chart transition hits a pole")]
    PoleOnChart,
    #[error("orbit is maximal degenerate: no intermediate fibration")]
    MaximalDegenerate,
    #[error("|z| = {norm:e} too large for step {step:e}")]
    StepUnderflow { norm: f64, step: f64 },
    #[error("quadrature not converged: {coarse} vs {fine}")]
    QuadratureNotConverged { coarse: f64, fine: f64 },
}

use thiserror::Error;

/// Errors shared by every module.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("outside the domain: {0}")]
    Domain(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("no balanced lift pairing (best mismatch {mismatch:e})")]
    Unbalanced { mismatch: f64 },
    #[error("lift pairing is near balanced but not within tolerance (mismatch {mismatch:e})")]
    Ambiguous { mismatch: f64 },
    #[error("f1 - f2 vanishes inside the disc at ({re}, {im})")]
    RoyalCrossing { re: f64, im: f64 },
    #[error("certification failed: best ratio {ratio}")]
    Certification { ratio: f64 },
    #[error("classification failed: {0}")]
    Classification(String),
    #[error("no analytic disc found (residual {residual:e}, lift bound {lift_bound})")]
    NoWitness { residual: f64, lift_bound: f64 },
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

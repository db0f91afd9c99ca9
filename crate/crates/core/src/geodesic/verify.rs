use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::AnalyticDisc;
use crate::disc::hyperbolic;
use crate::distance::caratheodory;
use crate::scalar::Scalar;
use crate::tol::Tolerances;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairCheck<T> {
    pub l1: Complex<T>,
    pub l2: Complex<T>,
    pub caratheodory: T,
    pub poincare: T,
    pub deviation: T,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport<T> {
    pub pairs: Vec<PairCheck<T>>,
    pub worst_deviation: T,
    pub passed: bool,
}

/// Checks `c(φ(λ1), φ(λ2)) = p(λ1, λ2)` on each pair, the left side from the
/// extremal-function sweep. Pairs run in parallel; the fold is sequential.
pub fn verify_geodesic<T: Scalar, D: AnalyticDisc<T> + ?Sized>(
    disc: &D,
    pairs: &[(Complex<T>, Complex<T>)],
    tol: T,
    cfg: &Tolerances,
) -> VerifyReport<T> {
    let checks: Vec<PairCheck<T>> = pairs
        .par_iter()
        .map(|&(l1, l2)| {
            let inside = l1.norm() < T::one() && l2.norm() < T::one();
            let c = if inside {
                caratheodory(&disc.point(l1), &disc.point(l2), cfg).map(|v| v.value).unwrap_or(T::nan())
            } else {
                T::nan()
            };
            let p = if inside { hyperbolic(l1, l2) } else { T::nan() };
            let deviation = (c - p).abs();
            PairCheck { l1, l2, caratheodory: c, poincare: p, deviation, passed: deviation <= tol }
        })
        .collect();
    let mut worst = T::zero();
    for c in &checks {
        if !(c.deviation <= worst) {
            worst = c.deviation;
        }
    }
    let passed = checks.iter().all(|c| c.passed);
    VerifyReport { pairs: checks, worst_deviation: worst, passed }
}

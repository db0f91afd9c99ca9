use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::rational::RationalDisc;
use super::Geodesic;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{cis, Scalar};
use crate::symm::{lift, SymPoint};

/// How a geodesic meets the royal variety.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum RoyalIntersection<T> {
    Empty,
    SinglePoint { lambda: Complex<T> },
    Whole,
}

/// Zeros of a polynomial in the open disc, with nearby roots merged so that
/// double roots on the circle do not leak inside. Rounding in the
/// coefficients splits a double root by roughly the square root of their
/// error, so the merge radius is generous (1e-4).
pub fn interior_zeros<T: Scalar>(p: &Poly<T>) -> Result<Option<Vec<Complex<T>>>> {
    if p.max_abs() <= T::tol(1e-12) {
        return Ok(None);
    }
    let inside = p
        .clustered_roots(T::tol(1e-13), T::tol(1e-4))?
        .into_iter()
        .map(|(c, _)| c)
        .filter(|c| c.norm() < T::one() - T::tol(1e-10))
        .collect();
    Ok(Some(inside))
}

fn classify<T: Scalar>(p: &Poly<T>) -> Result<RoyalIntersection<T>> {
    match interior_zeros(p)? {
        None => Ok(RoyalIntersection::Whole),
        Some(z) => match z.as_slice() {
            [] => Ok(RoyalIntersection::Empty),
            [l] => Ok(RoyalIntersection::SinglePoint { lambda: *l }),
            many => Err(Error::Classification(format!("{} isolated royal intersections; not a geodesic", many.len()))),
        },
    }
}

/// Classifies the zero set of `ψ = φ₁² - 4φ₂` inside the disc.
///
/// Transport by `B_a` multiplies `ψ` by a zero-free factor, so a transported
/// geodesic is classified through its inner form. For flat geodesics `ψ` is
/// the square of `f1 - f2` and the unsquared difference is used.
pub fn royal_intersection_class<T: Scalar>(g: &Geodesic<T>) -> Result<RoyalIntersection<T>> {
    match g {
        Geodesic::Origin(o) => classify(&o.rational().psi_numerator()),
        Geodesic::Transported(t) => classify(&t.inner().rational().psi_numerator()),
        Geodesic::Flat(f) => classify(&f.difference_numerator()),
    }
}

/// Same classification for an arbitrary rational disc.
pub fn classify_rational<T: Scalar>(r: &RationalDisc<T>) -> Result<RoyalIntersection<T>> {
    classify(&r.psi_numerator())
}

/// One sample of the boundary trace.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceRow<T> {
    pub theta: T,
    pub root1_modulus: T,
    pub root2_modulus: T,
    pub point: SymPoint<T>,
}

/// Evaluates the rational form on `n` equally spaced boundary points and
/// reports the moduli of the lifted roots.
pub fn boundary_trace<T: Scalar>(g: &Geodesic<T>, n: usize) -> Result<Vec<TraceRow<T>>> {
    if n == 0 {
        return Err(Error::Domain("need at least one sample".into()));
    }
    let r = g.rational();
    (0..n)
        .map(|k| {
            let theta = T::TAU() * T::lit(k as f64) / T::lit(n as f64);
            let point =
                r.eval(cis(theta)).ok_or_else(|| Error::Internal(format!("pole on the boundary at angle {theta}")))?;
            let l = lift(&point);
            Ok(TraceRow { theta, root1_modulus: l.l1.norm(), root2_modulus: l.l2.norm(), point })
        })
        .collect()
}

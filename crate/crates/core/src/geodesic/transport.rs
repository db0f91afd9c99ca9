use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::origin::{construct_origin_with, OriginGeodesic, SigmaSearch};
use super::rational::RationalDisc;
use crate::disc::{hyperbolic, DiscPoint};
use crate::error::{Error, Result};
use crate::scalar::{real, zero, Scalar};
use crate::symm::{on_royal_variety, require_inside, RoyalAutomorphism, SymPoint};

/// `B_α ∘ inner`: an origin geodesic moved so that `λ = 0` lands on `(2α, α²)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransportedGeodesic<T> {
    alpha: Complex<T>,
    inner: OriginGeodesic<T>,
}

impl<T: Scalar> TransportedGeodesic<T> {
    pub fn new(alpha: Complex<T>, inner: OriginGeodesic<T>) -> Result<Self> {
        DiscPoint::new(alpha)?;
        Ok(Self { alpha, inner })
    }

    pub fn alpha(&self) -> Complex<T> {
        self.alpha
    }

    pub fn inner(&self) -> &OriginGeodesic<T> {
        &self.inner
    }

    pub fn transport(&self) -> RoyalAutomorphism<T> {
        RoyalAutomorphism::raw(self.alpha)
    }

    pub fn apply(&self, l: Complex<T>) -> SymPoint<T> {
        self.transport().apply(&self.inner.apply(l))
    }

    pub fn eval(&self, l: Complex<T>) -> Result<SymPoint<T>> {
        DiscPoint::closed(l)?;
        Ok(self.apply(l))
    }

    pub fn rational(&self) -> RationalDisc<T> {
        self.inner.rational().transported(&self.transport())
    }
}

/// A transported geodesic with the parameters of the two prescribed points.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransportedConstruction<T> {
    pub geodesic: TransportedGeodesic<T>,
    pub at_z: Complex<T>,
    pub at_w: Complex<T>,
    pub sigma: T,
    pub distance: T,
}

/// Geodesic through a royal point `z0 = (2a, a²)` and `w`, built as
/// `B_a ∘ construct_origin(B_a(w))`.
pub fn construct_through_royal<T: Scalar>(
    z0: &SymPoint<T>,
    w: &SymPoint<T>,
    royal_tol: T,
) -> Result<TransportedConstruction<T>> {
    construct_through_royal_with(z0, w, royal_tol, &SigmaSearch::default())
}

pub fn construct_through_royal_with<T: Scalar>(
    z0: &SymPoint<T>,
    w: &SymPoint<T>,
    royal_tol: T,
    search: &SigmaSearch,
) -> Result<TransportedConstruction<T>> {
    if !on_royal_variety(z0, royal_tol) {
        return Err(Error::Domain("first point is not on the royal variety".into()));
    }
    require_inside(z0)?;
    require_inside(w)?;
    if z0 == w {
        return Err(Error::Degenerate("points coincide".into()));
    }
    let a = z0.s * T::lit(0.5);
    let b = RoyalAutomorphism::new(a)?;
    let inner = construct_origin_with(&b.apply(w), search)?;
    let s2 = inner.sigma * inner.sigma;
    Ok(TransportedConstruction {
        geodesic: TransportedGeodesic { alpha: a, inner: inner.geodesic },
        at_z: zero(),
        at_w: real(s2),
        sigma: inner.sigma,
        distance: hyperbolic(zero(), real(s2)),
    })
}

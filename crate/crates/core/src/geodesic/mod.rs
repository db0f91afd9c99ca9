//! Complex geodesics of `G₂`: construction, evaluation, certificates,
//! royal-variety classification, boundary traces and verification.

mod certificate;
mod extremal;
mod flat;
mod origin;
mod rational;
mod royal;
mod transport;
mod verify;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

pub use certificate::{certificate_flat, certificate_samples, certificate_search, verify_certificate, Certificate};
pub use extremal::{geodesic_through_pair, PairConstruction};
pub use flat::{construct_flat, flat_rootfree_check, FlatConstruction, FlatGeodesic, RootFreeCheck};
pub use origin::{
    certificate_origin, construct_origin, construct_origin_from_lift, construct_origin_with, OriginConstruction,
    OriginGeodesic, SigmaSearch,
};
pub use rational::RationalDisc;
pub use royal::{
    boundary_trace, classify_rational, interior_zeros, royal_intersection_class, RoyalIntersection, TraceRow,
};
pub use transport::{
    construct_through_royal, construct_through_royal_with, TransportedConstruction, TransportedGeodesic,
};
pub use verify::{verify_geodesic, PairCheck, VerifyReport};

use crate::disc::DiscPoint;
use crate::error::Result;
use crate::scalar::Scalar;
use crate::symm::SymPoint;
use crate::tol::Tolerances;

/// Anything that maps the disc into ℂ².
pub trait AnalyticDisc<T: Scalar>: Sync {
    fn point(&self, l: Complex<T>) -> SymPoint<T>;
}

/// Wraps a closure as an [`AnalyticDisc`].
pub struct FnDisc<F>(pub F);

impl<T: Scalar, F: Fn(Complex<T>) -> SymPoint<T> + Sync> AnalyticDisc<T> for FnDisc<F> {
    fn point(&self, l: Complex<T>) -> SymPoint<T> {
        (self.0)(l)
    }
}

/// The three computational forms of a geodesic.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "crate::json::GeodesicJson<T>", into = "crate::json::GeodesicJson<T>", bound = "T: Scalar")]
pub enum Geodesic<T: Scalar> {
    Origin(OriginGeodesic<T>),
    Transported(TransportedGeodesic<T>),
    Flat(FlatGeodesic<T>),
}

impl<T: Scalar> Geodesic<T> {
    pub fn apply(&self, l: Complex<T>) -> SymPoint<T> {
        match self {
            Self::Origin(g) => g.apply(l),
            Self::Transported(g) => g.apply(l),
            Self::Flat(g) => g.apply(l),
        }
    }

    pub fn eval(&self, l: Complex<T>) -> Result<SymPoint<T>> {
        DiscPoint::closed(l)?;
        Ok(self.apply(l))
    }

    pub fn rational(&self) -> RationalDisc<T> {
        match self {
            Self::Origin(g) => g.rational(),
            Self::Transported(g) => g.rational(),
            Self::Flat(g) => g.rational(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Origin(_) => "origin",
            Self::Transported(_) => "transported",
            Self::Flat(_) => "flat",
        }
    }

    /// Closed-form certificate for origin geodesics, the flat recipe for flat
    /// ones, and the angle search for transported ones.
    pub fn certificate(&self, tol: &Tolerances) -> Result<Certificate<T>> {
        match self {
            Self::Origin(g) => Ok(certificate_origin(g)),
            Self::Flat(g) => certificate_flat(g, tol),
            Self::Transported(g) => certificate_search(g, tol),
        }
    }
}

impl<T: Scalar> AnalyticDisc<T> for Geodesic<T> {
    fn point(&self, l: Complex<T>) -> SymPoint<T> {
        self.apply(l)
    }
}

impl<T: Scalar> AnalyticDisc<T> for OriginGeodesic<T> {
    fn point(&self, l: Complex<T>) -> SymPoint<T> {
        self.apply(l)
    }
}

impl<T: Scalar> AnalyticDisc<T> for TransportedGeodesic<T> {
    fn point(&self, l: Complex<T>) -> SymPoint<T> {
        self.apply(l)
    }
}

impl<T: Scalar> AnalyticDisc<T> for FlatGeodesic<T> {
    fn point(&self, l: Complex<T>) -> SymPoint<T> {
        self.apply(l)
    }
}

impl<T: Scalar> From<OriginGeodesic<T>> for Geodesic<T> {
    fn from(g: OriginGeodesic<T>) -> Self {
        Self::Origin(g)
    }
}

impl<T: Scalar> From<TransportedGeodesic<T>> for Geodesic<T> {
    fn from(g: TransportedGeodesic<T>) -> Self {
        Self::Transported(g)
    }
}

impl<T: Scalar> From<FlatGeodesic<T>> for Geodesic<T> {
    fn from(g: FlatGeodesic<T>) -> Self {
        Self::Flat(g)
    }
}

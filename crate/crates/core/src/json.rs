//! Wire shapes for geodesics and `Gₙ` points. Complex numbers are `[re, im]`.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::disc::{BlaschkeProduct, DiscAutomorphism};
use crate::error::{Error, Result};
use crate::geodesic::{FlatGeodesic, Geodesic, OriginGeodesic, TransportedGeodesic};
use crate::gn::SymPointN;
use crate::scalar::Scalar;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct AutomorphismJson<T> {
    pub tau: Complex<T>,
    pub alpha: Complex<T>,
}

/// `{"type": "origin"|"transported"|"flat", ...}` with only the fields the
/// type uses. For `transported`, `alpha` is the transport parameter and
/// `tau`, `zeros` describe the inner origin geodesic.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", bound = "T: Scalar")]
pub enum GeodesicJson<T> {
    Origin { tau: Complex<T>, zeros: Vec<Complex<T>> },
    Transported { alpha: Complex<T>, tau: Complex<T>, zeros: Vec<Complex<T>> },
    Flat { f1: AutomorphismJson<T>, f2: AutomorphismJson<T> },
}

impl<T: Scalar> From<&DiscAutomorphism<T>> for AutomorphismJson<T> {
    fn from(f: &DiscAutomorphism<T>) -> Self {
        Self { tau: f.tau(), alpha: f.alpha() }
    }
}

fn origin<T: Scalar>(tau: Complex<T>, zeros: Vec<Complex<T>>) -> Result<OriginGeodesic<T>> {
    OriginGeodesic::new(BlaschkeProduct::new(tau, zeros)?)
}

impl<T: Scalar> TryFrom<GeodesicJson<T>> for Geodesic<T> {
    type Error = Error;

    fn try_from(j: GeodesicJson<T>) -> Result<Self> {
        Ok(match j {
            GeodesicJson::Origin { tau, zeros } => Geodesic::Origin(origin(tau, zeros)?),
            GeodesicJson::Transported { alpha, tau, zeros } => {
                Geodesic::Transported(TransportedGeodesic::new(alpha, origin(tau, zeros)?)?)
            }
            GeodesicJson::Flat { f1, f2 } => Geodesic::Flat(FlatGeodesic::new(
                DiscAutomorphism::new(f1.tau, f1.alpha)?,
                DiscAutomorphism::new(f2.tau, f2.alpha)?,
            )?),
        })
    }
}

impl<T: Scalar> From<Geodesic<T>> for GeodesicJson<T> {
    fn from(g: Geodesic<T>) -> Self {
        match g {
            Geodesic::Origin(o) => {
                GeodesicJson::Origin { tau: o.blaschke().tau(), zeros: o.blaschke().zeros().to_vec() }
            }
            Geodesic::Transported(t) => GeodesicJson::Transported {
                alpha: t.alpha(),
                tau: t.inner().blaschke().tau(),
                zeros: t.inner().blaschke().zeros().to_vec(),
            },
            Geodesic::Flat(f) => GeodesicJson::Flat { f1: f.f1().into(), f2: f.f2().into() },
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct SymPointNJson<T> {
    pub n: usize,
    pub sigma: Vec<Complex<T>>,
}

impl<T: Scalar> TryFrom<SymPointNJson<T>> for SymPointN<T> {
    type Error = Error;

    fn try_from(j: SymPointNJson<T>) -> Result<Self> {
        if j.n != j.sigma.len() {
            return Err(Error::Domain(format!("n = {} but {} coordinates given", j.n, j.sigma.len())));
        }
        SymPointN::new(j.sigma)
    }
}

impl<T: Scalar> From<SymPointN<T>> for SymPointNJson<T> {
    fn from(z: SymPointN<T>) -> Self {
        Self { n: z.n(), sigma: z.coords().to_vec() }
    }
}

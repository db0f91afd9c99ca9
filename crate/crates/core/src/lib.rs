//! Complex geodesics of the symmetrized bidisc
//! `G₂ = {(λ₁ + λ₂, λ₁λ₂) : |λ₁|, |λ₂| < 1}`.
//!
//! Everything is generic over the scalar type ([`Scalar`], `f32` or `f64`);
//! the `*64` aliases below are what most callers want.

// `!(x < y)` is how NaN gets rejected throughout; the dense linear algebra
// reads better with index loops.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod disc;
pub mod distance;
pub mod error;
pub mod geodesic;
pub mod gn;
pub mod json;
pub mod optim;
pub mod poly;
pub mod scalar;
pub mod symm;
pub mod tol;

pub use disc::{
    automorphism_through, blaschke_interpolate_origin, hyperbolic, mobius_distance, poincare_distance,
    pseudo_hyperbolic, BlaschkeProduct, DiscAutomorphism, DiscPoint,
};
pub use distance::{
    caratheodory, distance_report, lempert_upper, lempert_upper_with, lift_bound, CaratheodoryValue, DistanceReport,
    LempertBound, LiftDisc, Witness, WitnessPath,
};
pub use error::{Error, Result};
pub use geodesic::*;
pub use gn::{
    contains_n, eval_conjectured, lempert_upper_origin_n, lift_n, pi_n, ConjecturedGeodesic, DegreeFit, FitConfig,
    GnUpperReport, SymPointN,
};
pub use scalar::{cis, Scalar};
pub use symm::{
    contains, extremal_eval, lift, on_royal_variety, pi2, random_disc_point, random_interior_point, ExtremalParam,
    Lift, Membership, RoyalAutomorphism, SymPoint,
};
pub use tol::Tolerances;

pub use num_complex::Complex;

pub type Complex64 = Complex<f64>;
pub type Complex32 = Complex<f32>;
pub type SymPoint64 = SymPoint<f64>;
pub type SymPoint32 = SymPoint<f32>;
pub type Geodesic64 = Geodesic<f64>;
pub type Geodesic32 = Geodesic<f32>;
pub type DiscAutomorphism64 = DiscAutomorphism<f64>;
pub type BlaschkeProduct64 = BlaschkeProduct<f64>;
pub type SymPointN64 = SymPointN<f64>;
pub type DistanceReport64 = DistanceReport<f64>;

use std::fmt::{Debug, Display, LowerExp};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Floating-point type the library is generic over (`f32` or `f64`).
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Default
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + Serialize
    + DeserializeOwned
    + 'static
{
    /// Smallest comparison tolerance worth asking of this precision.
    const TOL_FLOOR: f64;

    /// Converts an `f64` constant.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite constant")
    }

    /// A comparison tolerance, floored to what the precision can deliver.
    fn tol(x: f64) -> Self {
        Self::lit(x.max(Self::TOL_FLOOR))
    }

    /// A tiny positive offset that still moves values near 1.
    fn tiny(x: f64) -> Self {
        Self::lit(x).max(Self::epsilon() * Self::lit(8.0))
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    const TOL_FLOOR: f64 = 2e-5;
}

impl Scalar for f64 {
    const TOL_FLOOR: f64 = 0.0;
}

#[cfg(test)]
pub(crate) fn c(re: f64, im: f64) -> Complex<f64> {
    Complex::new(re, im)
}

pub(crate) fn real<T: Scalar>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

pub(crate) fn one<T: Scalar>() -> Complex<T> {
    Complex::new(T::one(), T::zero())
}

pub(crate) fn zero<T: Scalar>() -> Complex<T> {
    Complex::new(T::zero(), T::zero())
}

/// Unit complex number `e^{iθ}`.
pub fn cis<T: Scalar>(theta: T) -> Complex<T> {
    Complex::new(theta.cos(), theta.sin())
}

/// Projects a nonzero complex number onto the unit circle.
pub(crate) fn unit<T: Scalar>(z: Complex<T>) -> Complex<T> {
    let r = z.norm();
    if r > T::zero() {
        z / r
    } else {
        one()
    }
}

pub(crate) fn is_finite<T: Scalar>(z: Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

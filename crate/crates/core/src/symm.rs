//! The symmetrized bidisc `G₂ = π(𝔻²)`, its royal variety and the maps
//! `B_α` and `F_ω`.

use std::cmp::Ordering;

use num_complex::Complex;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{cis, is_finite, one, zero, Scalar};

/// A point `(s, p)` of ℂ².
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymPoint<T> {
    pub s: Complex<T>,
    pub p: Complex<T>,
}

impl<T: Scalar> SymPoint<T> {
    pub fn new(s: Complex<T>, p: Complex<T>) -> Self {
        Self { s, p }
    }

    pub fn origin() -> Self {
        Self::new(zero(), zero())
    }

    /// `(2λ, λ²)`.
    pub fn royal(l: Complex<T>) -> Self {
        Self::new(l * T::lit(2.0), l * l)
    }

    pub fn is_origin(&self) -> bool {
        self.s == zero() && self.p == zero()
    }

    /// Max-norm distance to another point.
    pub fn dist(&self, o: &Self) -> T {
        (self.s - o.s).norm().max((self.p - o.p).norm())
    }

    pub fn is_finite(&self) -> bool {
        is_finite(self.s) && is_finite(self.p)
    }
}

/// The unordered root pair of `λ² - sλ + p`, stored in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Lift<T> {
    pub l1: Complex<T>,
    pub l2: Complex<T>,
}

impl<T: Scalar> Lift<T> {
    pub fn swapped(&self) -> Self {
        Self { l1: self.l2, l2: self.l1 }
    }

    pub fn max_modulus(&self) -> T {
        self.l1.norm().max(self.l2.norm())
    }
}

fn lex<T: Scalar>(a: &Complex<T>, b: &Complex<T>) -> Ordering {
    a.re.partial_cmp(&b.re).unwrap_or(Ordering::Equal).then(a.im.partial_cmp(&b.im).unwrap_or(Ordering::Equal))
}

/// `π(l1, l2) = (l1 + l2, l1 l2)`.
pub fn pi2<T: Scalar>(l1: Complex<T>, l2: Complex<T>) -> SymPoint<T> {
    SymPoint::new(l1 + l2, l1 * l2)
}

/// Roots of `λ² - sλ + p`; the larger one first, the other as `p / r1`.
pub fn lift<T: Scalar>(z: &SymPoint<T>) -> Lift<T> {
    let mut q = (z.s * z.s - z.p * T::lit(4.0)).sqrt();
    if (z.s.conj() * q).re < T::zero() {
        q = -q;
    }
    let half = T::lit(0.5);
    let r1 = (z.s + q) * half;
    let r2 = if r1 == zero() { (z.s - q) * half } else { z.p / r1 };
    if lex(&r1, &r2) == Ordering::Greater {
        Lift { l1: r2, l2: r1 }
    } else {
        Lift { l1: r1, l2: r2 }
    }
}

/// Membership verdict with `margin = 1 - max |root|`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Membership<T> {
    pub inside: bool,
    pub margin: T,
}

pub fn contains<T: Scalar>(z: &SymPoint<T>) -> Membership<T> {
    if !z.is_finite() {
        return Membership { inside: false, margin: T::neg_infinity() };
    }
    let margin = T::one() - lift(z).max_modulus();
    Membership { inside: margin > T::zero(), margin }
}

pub(crate) fn require_inside<T: Scalar>(z: &SymPoint<T>) -> Result<()> {
    if contains(z).inside {
        Ok(())
    } else {
        Err(Error::Domain(format!("({}, {}) is not in the symmetrized bidisc", z.s, z.p)))
    }
}

/// `|s² - 4p| ≤ tol` and `|s| < 2`.
pub fn on_royal_variety<T: Scalar>(z: &SymPoint<T>, tol: T) -> bool {
    (z.s * z.s - z.p * T::lit(4.0)).norm() <= tol && z.s.norm() < T::lit(2.0)
}

/// `B_α(s, p) = π(b_α(λ1), b_α(λ2))`, an involution of `G₂`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RoyalAutomorphism<T> {
    alpha: Complex<T>,
}

impl<T: Scalar> RoyalAutomorphism<T> {
    pub fn new(alpha: Complex<T>) -> Result<Self> {
        if !is_finite(alpha) || alpha.norm() >= T::one() {
            return Err(Error::Domain(format!("alpha = {alpha} is not inside the disc")));
        }
        Ok(Self { alpha })
    }

    pub(crate) fn raw(alpha: Complex<T>) -> Self {
        Self { alpha }
    }

    pub fn alpha(&self) -> Complex<T> {
        self.alpha
    }

    /// Closed rational form, valid wherever `1 - ᾱs + ᾱ²p ≠ 0`.
    pub fn apply(&self, z: &SymPoint<T>) -> SymPoint<T> {
        let a = self.alpha;
        let ab = a.conj();
        let two = T::lit(2.0);
        let d = one::<T>() - ab * z.s + ab * ab * z.p;
        let s = (a * two - z.s * (T::one() + a.norm_sqr()) + ab * z.p * two) / d;
        let p = (a * a - a * z.s + z.p) / d;
        SymPoint::new(s, p)
    }

    /// Same map computed through the lift.
    pub fn apply_via_lift(&self, z: &SymPoint<T>) -> SymPoint<T> {
        let l = lift(z);
        let b = |x: Complex<T>| (self.alpha - x) / (one::<T>() - self.alpha.conj() * x);
        pi2(b(l.l1), b(l.l2))
    }

    pub fn inverse(&self) -> Self {
        *self
    }
}

/// `ω`, either 0 or on the unit circle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExtremalParam<T> {
    omega: Complex<T>,
}

impl<T: Scalar> ExtremalParam<T> {
    pub fn zero() -> Self {
        Self { omega: zero() }
    }

    pub fn unimodular(omega: Complex<T>) -> Result<Self> {
        if omega == zero() {
            return Ok(Self::zero());
        }
        if !is_finite(omega) || (omega.norm() - T::one()).abs() > T::tol(1e-12) {
            return Err(Error::Domain(format!("omega = {omega} is neither 0 nor unimodular")));
        }
        Ok(Self { omega: omega / omega.norm() })
    }

    pub fn from_angle(theta: T) -> Self {
        Self { omega: cis(theta) }
    }

    pub fn omega(&self) -> Complex<T> {
        self.omega
    }

    pub fn is_zero(&self) -> bool {
        self.omega == zero()
    }

    /// `(2p - ωs)/(2 - ω̄s)` without a membership check.
    pub fn apply(&self, z: &SymPoint<T>) -> Complex<T> {
        let two = T::lit(2.0);
        (z.p * two - self.omega * z.s) / (Complex::new(two, T::zero()) - self.omega.conj() * z.s)
    }
}

/// `F_ω(z)` for `z ∈ G₂`.
pub fn extremal_eval<T: Scalar>(omega: &ExtremalParam<T>, z: &SymPoint<T>) -> Result<Complex<T>> {
    require_inside(z)?;
    Ok(omega.apply(z))
}

/// Uniform sample of the disc of radius `r`.
pub fn random_disc_point<T: Scalar, R: Rng + ?Sized>(rng: &mut R, r: T) -> Complex<T> {
    let u: f64 = rng.random();
    let v: f64 = rng.random();
    let rho = r * T::lit(u.sqrt());
    cis(T::lit(v * std::f64::consts::TAU)) * rho
}

/// `π` of two independent uniform samples of the disc of radius `r_max`.
pub fn random_interior_point<T: Scalar, R: Rng + ?Sized>(rng: &mut R, r_max: T) -> SymPoint<T> {
    let a = random_disc_point(rng, r_max);
    let b = random_disc_point(rng, r_max);
    pi2(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::c;

    fn sp(s: (f64, f64), p: (f64, f64)) -> SymPoint<f64> {
        SymPoint::new(c(s.0, s.1), c(p.0, p.1))
    }

    #[test]
    fn pi2_examples() {
        assert_eq!(pi2(c(0.3, 0.0), c(-0.3, 0.0)), sp((0.0, 0.0), (-0.09, 0.0)));
        assert_eq!(pi2(c(0.5, 0.0), c(0.5, 0.0)), sp((1.0, 0.0), (0.25, 0.0)));
        let z = pi2(c(0.0, 0.5), c(0.2, 0.0));
        assert!(z.dist(&sp((0.2, 0.5), (0.0, 0.1))) < 1e-16);
    }

    #[test]
    fn lift_examples() {
        let l = lift(&sp((0.0, 0.0), (-0.09, 0.0)));
        assert!((l.l1 - c(-0.3, 0.0)).norm() < 1e-15 && (l.l2 - c(0.3, 0.0)).norm() < 1e-15);
        let l = lift(&sp((1.0, 0.0), (0.25, 0.0)));
        assert!((l.l1 - c(0.5, 0.0)).norm() < 1e-15 && (l.l2 - c(0.5, 0.0)).norm() < 1e-15);
        let l = lift(&sp((2.0, 0.0), (1.0, 0.0)));
        assert_eq!((l.l1, l.l2), (c(1.0, 0.0), c(1.0, 0.0)));
    }

    #[test]
    fn lift_is_stable_for_small_product() {
        // roots 1.5 and 1e-12: the naive formula loses the small one entirely
        let l = lift(&pi2(c(1.5, 0.0), c(1e-12, 0.0)));
        assert!((l.l1 - c(1e-12, 0.0)).norm() < 1e-27);
    }

    #[test]
    fn membership_examples() {
        let m = contains(&sp((0.0, 0.0), (-0.09, 0.0)));
        assert!(m.inside && (m.margin - 0.7).abs() < 1e-15);
        let m = contains(&sp((1.0, 0.0), (0.25, 0.0)));
        assert!(m.inside && (m.margin - 0.5).abs() < 1e-15);
        let m = contains(&sp((2.0, 0.0), (1.0, 0.0)));
        assert!(!m.inside && m.margin.abs() < 1e-12);
    }

    #[test]
    fn royal_variety_examples() {
        assert!(on_royal_variety(&sp((1.0, 0.0), (0.25, 0.0)), 1e-10));
        assert!(on_royal_variety(&SymPoint::<f64>::origin(), 1e-10));
        assert!(!on_royal_variety(&sp((0.0, 0.0), (-0.09, 0.0)), 1e-10));
    }

    #[test]
    fn royal_automorphism_examples() {
        let b = RoyalAutomorphism::new(c(0.5, 0.0)).unwrap();
        assert!(b.apply(&SymPoint::origin()).dist(&sp((1.0, 0.0), (0.25, 0.0))) < 1e-15);
        assert!(b.apply(&sp((1.0, 0.0), (0.25, 0.0))).dist(&SymPoint::origin()) < 1e-15);
        let z = pi2(c(0.1, 0.7), c(-0.4, 0.2));
        let g = RoyalAutomorphism::new(c(-0.3, 0.6)).unwrap();
        assert!(g.apply(&g.apply(&z)).dist(&z) < 1e-14);
        assert!(g.apply(&z).dist(&g.apply_via_lift(&z)) < 1e-14);
        assert!(RoyalAutomorphism::new(c(1.0, 0.0)).is_err());
    }

    #[test]
    fn extremal_examples() {
        let z = sp((0.0, 0.0), (-0.09, 0.0));
        assert_eq!(extremal_eval(&ExtremalParam::zero(), &z).unwrap(), c(-0.09, 0.0));
        let one = ExtremalParam::unimodular(c(1.0, 0.0)).unwrap();
        assert!((extremal_eval(&one, &sp((1.0, 0.0), (0.25, 0.0))).unwrap() - c(-0.5, 0.0)).norm() < 1e-15);
        assert!((extremal_eval(&one, &sp((0.4, 0.0), (0.0, 0.0))).unwrap().norm() - 0.25).abs() < 1e-15);
        assert!(extremal_eval(&one, &sp((2.0, 0.0), (1.0, 0.0))).is_err());
        assert!(ExtremalParam::unimodular(c(0.5, 0.0)).is_err());
    }

    #[test]
    fn random_points() {
        use rand::SeedableRng;
        let mut a = rand::rngs::StdRng::seed_from_u64(7);
        let mut b = rand::rngs::StdRng::seed_from_u64(7);
        let (x, y): (SymPoint<f64>, SymPoint<f64>) =
            (random_interior_point(&mut a, 0.95), random_interior_point(&mut b, 0.95));
        assert_eq!(x, y);
        assert!(contains(&x).inside);
        assert!(random_interior_point::<f64, _>(&mut a, 0.0).is_origin());
    }
}

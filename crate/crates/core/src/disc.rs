//! Hyperbolic geometry of the unit disc.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{is_finite, one, unit, zero, Scalar};

/// A point of the open unit disc.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DiscPoint<T>(Complex<T>);

impl<T: Scalar> DiscPoint<T> {
    pub fn new(z: Complex<T>) -> Result<Self> {
        if !is_finite(z) || z.norm() >= T::one() {
            return Err(Error::Domain(format!("|{z}| is not below 1")));
        }
        Ok(Self(z))
    }

    /// Closed-disc variant used for boundary work.
    pub fn closed(z: Complex<T>) -> Result<Self> {
        if !is_finite(z) || z.norm() > T::one() + T::tol(1e-12) {
            return Err(Error::Domain(format!("|{z}| exceeds 1")));
        }
        Ok(Self(z))
    }

    pub fn real(x: T) -> Result<Self> {
        Self::new(Complex::new(x, T::zero()))
    }

    pub fn value(self) -> Complex<T> {
        self.0
    }
}

impl<T> From<DiscPoint<T>> for Complex<T> {
    fn from(p: DiscPoint<T>) -> Self {
        p.0
    }
}

/// `|a - b| / |1 - conj(a) b|` without validation.
pub fn pseudo_hyperbolic<T: Scalar>(a: Complex<T>, b: Complex<T>) -> T {
    let num = (a - b).norm();
    if num == T::zero() {
        return T::zero();
    }
    (num / (one::<T>() - a.conj() * b).norm()).min(T::one())
}

/// Poincaré distance `atanh(m)` without validation.
///
/// Far apart points go through `1 - m^2 = (1-|a|^2)(1-|b|^2)/|1 - conj(a) b|^2`,
/// which keeps full relative accuracy near the boundary.
pub fn hyperbolic<T: Scalar>(a: Complex<T>, b: Complex<T>) -> T {
    let m = pseudo_hyperbolic(a, b);
    let half = T::lit(0.5);
    if m < half {
        return m.atanh();
    }
    let (ra, rb) = (a.norm(), b.norm());
    let log_1m_m2 = (T::one() - ra).ln() + ra.ln_1p() + (T::one() - rb).ln() + rb.ln_1p()
        - T::lit(2.0) * (one::<T>() - a.conj() * b).norm().ln();
    (m.ln_1p() - half * log_1m_m2).max(T::zero())
}

fn check_interior<T: Scalar>(z: Complex<T>) -> Result<()> {
    if !is_finite(z) || T::one() - z.norm() < T::tol(1e-12) {
        return Err(Error::Domain(format!("{z} is too close to the unit circle")));
    }
    Ok(())
}

/// Pseudo-hyperbolic distance `m(a, b)`.
pub fn mobius_distance<T: Scalar>(a: DiscPoint<T>, b: DiscPoint<T>) -> Result<T> {
    check_interior(a.0)?;
    check_interior(b.0)?;
    Ok(pseudo_hyperbolic(a.0, b.0))
}

/// Poincaré distance `p(a, b) = atanh(m(a, b))`.
pub fn poincare_distance<T: Scalar>(a: DiscPoint<T>, b: DiscPoint<T>) -> Result<T> {
    check_interior(a.0)?;
    check_interior(b.0)?;
    Ok(hyperbolic(a.0, b.0))
}

/// The Möbius map `λ ↦ τ(λ - α)/(1 - conj(α) λ)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiscAutomorphism<T> {
    tau: Complex<T>,
    alpha: Complex<T>,
}

impl<T: Scalar> DiscAutomorphism<T> {
    pub fn new(tau: Complex<T>, alpha: Complex<T>) -> Result<Self> {
        if !is_finite(tau) || (tau.norm() - T::one()).abs() > T::tol(1e-12) {
            return Err(Error::Domain(format!("tau = {tau} is not unimodular")));
        }
        if !is_finite(alpha) || alpha.norm() >= T::one() {
            return Err(Error::Domain(format!("alpha = {alpha} is not inside the disc")));
        }
        Ok(Self { tau: unit(tau), alpha })
    }

    pub(crate) fn raw(tau: Complex<T>, alpha: Complex<T>) -> Self {
        Self { tau: unit(tau), alpha }
    }

    pub fn identity() -> Self {
        Self::raw(one(), zero())
    }

    pub fn rotation(tau: Complex<T>) -> Result<Self> {
        Self::new(tau, zero())
    }

    /// `λ ↦ (λ - a)/(1 - conj(a) λ)`, sending `a` to 0.
    pub fn centering(a: Complex<T>) -> Result<Self> {
        Self::new(one(), a)
    }

    /// The involution `λ ↦ (α - λ)/(1 - conj(α) λ)`.
    pub fn b_alpha(alpha: Complex<T>) -> Result<Self> {
        Self::new(-one::<T>(), alpha)
    }

    pub fn tau(&self) -> Complex<T> {
        self.tau
    }

    pub fn alpha(&self) -> Complex<T> {
        self.alpha
    }

    /// Evaluates the formula at any complex number off the pole.
    pub fn apply(&self, z: Complex<T>) -> Complex<T> {
        self.tau * (z - self.alpha) / (one::<T>() - self.alpha.conj() * z)
    }

    pub fn eval(&self, z: DiscPoint<T>) -> DiscPoint<T> {
        DiscPoint(self.apply(z.0))
    }

    pub fn derivative(&self, z: Complex<T>) -> Complex<T> {
        let d = one::<T>() - self.alpha.conj() * z;
        self.tau * (T::one() - self.alpha.norm_sqr()) / (d * d)
    }

    fn matrix(&self) -> [Complex<T>; 4] {
        [self.tau, -self.tau * self.alpha, -self.alpha.conj(), one()]
    }

    fn from_matrix(m: [Complex<T>; 4]) -> Self {
        let [a, b, _, d] = m;
        Self::raw(a / d, -b / a)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Self {
        let [a, b, c, d] = self.matrix();
        let [e, f, g, h] = inner.matrix();
        Self::from_matrix([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h])
    }

    pub fn inverse(&self) -> Self {
        Self::raw(self.tau.conj(), -self.tau * self.alpha)
    }
}

/// `τ ∏ (λ - a_k)/(1 - conj(a_k) λ)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlaschkeProduct<T> {
    tau: Complex<T>,
    zeros: Vec<Complex<T>>,
}

impl<T: Scalar> BlaschkeProduct<T> {
    pub fn new(tau: Complex<T>, zeros: Vec<Complex<T>>) -> Result<Self> {
        if !is_finite(tau) || (tau.norm() - T::one()).abs() > T::tol(1e-12) {
            return Err(Error::Domain(format!("tau = {tau} is not unimodular")));
        }
        if let Some(z) = zeros.iter().find(|z| !is_finite(**z) || z.norm() >= T::one()) {
            return Err(Error::Domain(format!("zero {z} is not inside the disc")));
        }
        Ok(Self { tau: unit(tau), zeros })
    }

    pub(crate) fn raw(tau: Complex<T>, zeros: Vec<Complex<T>>) -> Self {
        Self { tau: unit(tau), zeros }
    }

    pub fn identity() -> Self {
        Self::raw(one(), vec![zero()])
    }

    pub fn tau(&self) -> Complex<T> {
        self.tau
    }

    pub fn zeros(&self) -> &[Complex<T>] {
        &self.zeros
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    pub fn apply(&self, z: Complex<T>) -> Complex<T> {
        self.zeros.iter().fold(self.tau, |acc, a| acc * (z - a) / (one::<T>() - a.conj() * z))
    }

    /// Evaluation on the closed disc.
    pub fn eval(&self, z: Complex<T>) -> Result<Complex<T>> {
        DiscPoint::closed(z)?;
        Ok(self.apply(z))
    }
}

/// The unique automorphism with `h(a) = c` and `h(b) = d`, built as
/// `φ_c⁻¹ ∘ rotation ∘ φ_a` where `φ_x` centres `x`.
pub fn automorphism_through<T: Scalar>(
    a: Complex<T>,
    b: Complex<T>,
    c: Complex<T>,
    d: Complex<T>,
    tol_interp: T,
) -> Result<DiscAutomorphism<T>> {
    for z in [a, b, c, d] {
        DiscPoint::new(z)?;
    }
    let mab = pseudo_hyperbolic(a, b);
    if mab <= T::tiny(1e-15) {
        return Err(Error::Degenerate("the two source points coincide".into()));
    }
    let mismatch = (mab - pseudo_hyperbolic(c, d)).abs();
    if mismatch > tol_interp {
        return Err(Error::Infeasible(format!("pseudo-hyperbolic distances differ by {:e}", mismatch.as_f64())));
    }
    let phi_a = DiscAutomorphism::raw(one(), a);
    let phi_c = DiscAutomorphism::raw(one(), c);
    let rho = unit(phi_c.apply(d) / phi_a.apply(b));
    Ok(phi_c.inverse().compose(&DiscAutomorphism::raw(rho, zero()).compose(&phi_a)))
}

/// Degree ≤ 2 Blaschke product with `B(0) = 0`, `B(σ) = t1`, `B(-σ) = t2`.
pub fn blaschke_interpolate_origin<T: Scalar>(
    sigma: T,
    t1: Complex<T>,
    t2: Complex<T>,
    tol_interp: T,
) -> Result<BlaschkeProduct<T>> {
    if !(sigma > T::zero() && sigma < T::one()) {
        return Err(Error::Infeasible(format!("sigma = {sigma} is not in (0, 1)")));
    }
    if t1.norm() > sigma + tol_interp || t2.norm() > sigma + tol_interp {
        return Err(Error::Infeasible("interpolation values exceed sigma".into()));
    }
    if (t1 + t2).norm() <= tol_interp && (t1.norm() - sigma).abs() <= tol_interp {
        return Ok(BlaschkeProduct::raw(t1 / sigma, vec![zero()]));
    }
    let s = Complex::new(sigma, T::zero());
    let h = automorphism_through(s, -s, t1 / sigma, -t2 / sigma, tol_interp).map_err(|e| match e {
        Error::Domain(m) => Error::Infeasible(m),
        other => other,
    })?;
    Ok(BlaschkeProduct::raw(h.tau(), vec![zero(), h.alpha()]))
}

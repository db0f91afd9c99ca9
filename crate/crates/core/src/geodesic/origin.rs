use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::rational::RationalDisc;
use super::Certificate;
use crate::disc::{
    blaschke_interpolate_origin, hyperbolic, pseudo_hyperbolic, BlaschkeProduct, DiscAutomorphism, DiscPoint,
};
use crate::error::{Error, Result};
use crate::optim::bisect;
use crate::poly::Poly;
use crate::scalar::{one, real, zero, Scalar};
use crate::symm::{contains, lift, pi2, ExtremalParam, SymPoint};

/// `φ(λ) = (B(√λ) + B(-√λ), B(√λ) B(-√λ))` for a Blaschke product `B` of degree
/// one or two with `B(0) = 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OriginGeodesic<T> {
    b: BlaschkeProduct<T>,
}

impl<T: Scalar> OriginGeodesic<T> {
    /// Accepts `B` whose zero list contains 0; the remaining zero (if any) is
    /// moved to the second slot.
    pub fn new(b: BlaschkeProduct<T>) -> Result<Self> {
        let zs = b.zeros();
        let Some(k) = zs.iter().position(|z| *z == zero()) else {
            return Err(Error::Domain("B(0) must vanish".into()));
        };
        match zs.len() {
            1 => Ok(Self::degree1(b.tau())),
            2 => Ok(Self::degree2(b.tau(), zs[1 - k])),
            d => Err(Error::Domain(format!("degree {d} is not 1 or 2"))),
        }
    }

    /// `B(λ) = τλ`.
    pub fn degree1(tau: Complex<T>) -> Self {
        Self { b: BlaschkeProduct::raw(tau, vec![zero()]) }
    }

    /// `B(λ) = τλ(λ - α)/(1 - ᾱλ)`.
    pub fn degree2(tau: Complex<T>, alpha: Complex<T>) -> Self {
        Self { b: BlaschkeProduct::raw(tau, vec![zero(), alpha]) }
    }

    pub fn blaschke(&self) -> &BlaschkeProduct<T> {
        &self.b
    }

    pub fn tau(&self) -> Complex<T> {
        self.b.tau()
    }

    pub fn degree(&self) -> usize {
        self.b.degree()
    }

    /// The nonzero-slot zero of a degree-two `B`.
    pub fn alpha(&self) -> Option<Complex<T>> {
        (self.degree() == 2).then(|| self.b.zeros()[1])
    }

    /// Closed-form evaluation at any `λ` off the pole.
    pub fn apply(&self, l: Complex<T>) -> SymPoint<T> {
        let tau = self.tau();
        match self.alpha() {
            None => SymPoint::new(zero(), -tau * tau * l),
            Some(a) => {
                let ab = a.conj();
                let d = one::<T>() - ab * ab * l;
                let s = tau * l * T::lit(2.0) * (T::one() - a.norm_sqr()) / d;
                let p = tau * tau * l * (l - a * a) / d;
                SymPoint::new(s, p)
            }
        }
    }

    pub fn eval(&self, l: Complex<T>) -> Result<SymPoint<T>> {
        DiscPoint::closed(l)?;
        Ok(self.apply(l))
    }

    /// `(B(μ) + B(-μ), B(μ) B(-μ))` with `μ` the principal root of `λ`, or its
    /// negative when `other_branch` is set.
    pub fn eval_branches(&self, l: Complex<T>, other_branch: bool) -> SymPoint<T> {
        let mu = if other_branch { -l.sqrt() } else { l.sqrt() };
        pi2(self.b.apply(mu), self.b.apply(-mu))
    }

    pub fn rational(&self) -> RationalDisc<T> {
        let tau = self.tau();
        match self.alpha() {
            None => RationalDisc {
                s_num: Poly::constant(zero()),
                p_num: Poly::linear(zero(), -tau * tau),
                den: Poly::constant(one()),
            },
            Some(a) => {
                let ab = a.conj();
                let t2 = tau * tau;
                RationalDisc {
                    s_num: Poly::linear(zero(), tau * T::lit(2.0) * (T::one() - a.norm_sqr())),
                    p_num: Poly::new(vec![zero(), -t2 * a * a, t2]),
                    den: Poly::linear(one(), -ab * ab),
                }
            }
        }
    }
}

/// Bracket and stopping rule for the σ-search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmaSearch {
    pub lower_offset: f64,
    pub upper_offset: f64,
    /// Bracket width at which bisection stops; 0 runs to machine precision.
    pub tol: f64,
    pub max_iter: usize,
    pub tol_interp: f64,
    /// Below this `|t1 + t2|` the target is treated as `t2 = -t1`.
    pub antipodal: f64,
}

impl Default for SigmaSearch {
    fn default() -> Self {
        // a 1e-12 stopping width is too coarse near the boundary: the miss at
        // φ(σ²) grows like 1/(1 - σ)²
        Self { lower_offset: 1e-14, upper_offset: 1e-14, tol: 0.0, max_iter: 200, tol_interp: 1e-9, antipodal: 1e-12 }
    }
}

/// A geodesic through the origin together with `σ`: `φ(0) = (0,0)`, `φ(σ²) = target`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OriginConstruction<T> {
    pub geodesic: OriginGeodesic<T>,
    pub sigma: T,
    /// `p(0, σ²)`.
    pub distance: T,
}

/// Canonical representative of `±x`: positive real part, or positive imaginary
/// part on the imaginary axis. `B(λ)` and `B(-λ)` give the same geodesic.
fn canonical_sign<T: Scalar>(x: Complex<T>) -> Complex<T> {
    if x.re < T::zero() || (x.re == T::zero() && x.im < T::zero()) {
        -x
    } else {
        x
    }
}

pub fn construct_origin<T: Scalar>(target: &SymPoint<T>) -> Result<OriginConstruction<T>> {
    construct_origin_with(target, &SigmaSearch::default())
}

pub fn construct_origin_with<T: Scalar>(target: &SymPoint<T>, search: &SigmaSearch) -> Result<OriginConstruction<T>> {
    if target.is_origin() {
        return Err(Error::Degenerate("target is the origin".into()));
    }
    if !contains(target).inside {
        return Err(Error::Domain(format!("({}, {}) is not in the symmetrized bidisc", target.s, target.p)));
    }
    let l = lift(target);
    construct_origin_from_lift(l.l1, l.l2, search)
}

/// Same as [`construct_origin_with`] but with an explicit root order.
pub fn construct_origin_from_lift<T: Scalar>(
    t1: Complex<T>,
    t2: Complex<T>,
    search: &SigmaSearch,
) -> Result<OriginConstruction<T>> {
    let big = t1.norm().max(t2.norm());
    if big == T::zero() {
        return Err(Error::Degenerate("target is the origin".into()));
    }
    if big >= T::one() {
        return Err(Error::Domain("lift leaves the disc".into()));
    }
    if (t1 + t2).norm() <= T::tol(search.antipodal) {
        let sigma = big;
        let t = if t1.norm() >= t2.norm() { t1 } else { -t2 };
        let tau = canonical_sign(t / t.norm());
        return Ok(OriginConstruction {
            geodesic: OriginGeodesic::degree1(tau),
            sigma,
            distance: hyperbolic(zero(), real(sigma * sigma)),
        });
    }
    let lo = big + T::tiny(search.lower_offset);
    let hi = T::one() - T::tiny(search.upper_offset);
    if !(lo < hi) {
        return Err(Error::Internal("empty sigma bracket".into()));
    }
    let two = T::lit(2.0);
    let gap = |s: T| two * s / (T::one() + s * s) - pseudo_hyperbolic(t1 / s, -t2 / s);
    let sigma = bisect(gap, lo, hi, T::lit(search.tol), search.max_iter)?;
    let b = blaschke_interpolate_origin(sigma, t1, t2, T::tol(search.tol_interp))
        .map_err(|e| Error::Internal(format!("interpolation after sigma-search: {e}")))?;
    let g = match b.degree() {
        1 => OriginGeodesic::degree1(canonical_sign(b.tau())),
        _ => {
            let a = b.zeros()[1];
            let ca = canonical_sign(a);
            OriginGeodesic::degree2(b.tau(), ca)
        }
    };
    Ok(OriginConstruction { geodesic: g, sigma, distance: hyperbolic(zero(), real(sigma * sigma)) })
}

/// `F_ω ∘ φ` is a rotation: ω = 0 for degree one, ω = 1 when the second zero
/// vanishes, and `ω = |α|² τ / ᾱ²` otherwise.
pub fn certificate_origin<T: Scalar>(g: &OriginGeodesic<T>) -> Certificate<T> {
    let tau = g.tau();
    let (omega, c) = match g.alpha() {
        None => (ExtremalParam::zero(), -tau * tau),
        Some(a) if a == zero() => (ExtremalParam::from_angle(T::zero()), -tau),
        Some(a) => {
            let w = tau * a / a.conj();
            let w = w / w.norm();
            (ExtremalParam::unimodular(w).expect("unit by construction"), -tau * w)
        }
    };
    Certificate { omega, rotation: DiscAutomorphism::raw(c, zero()), ratio: T::one() }
}

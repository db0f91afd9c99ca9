use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::rational::RationalDisc;
use crate::disc::{automorphism_through, hyperbolic, pseudo_hyperbolic, DiscAutomorphism, DiscPoint};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{one, real, zero, Scalar};
use crate::symm::{lift, pi2, require_inside, SymPoint};
use crate::tol::Tolerances;

/// `π ∘ (f1, f2)` with automorphism components.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlatGeodesic<T> {
    f1: DiscAutomorphism<T>,
    f2: DiscAutomorphism<T>,
}

impl<T: Scalar> FlatGeodesic<T> {
    /// Checks that `f1 - f2` has no zero in the disc.
    pub fn new(f1: DiscAutomorphism<T>, f2: DiscAutomorphism<T>) -> Result<Self> {
        let check = flat_rootfree_check(&f1, &f2)?;
        if !check.root_free {
            let r = check.root.unwrap_or_else(zero);
            return Err(Error::RoyalCrossing { re: r.re.as_f64(), im: r.im.as_f64() });
        }
        Ok(Self { f1, f2 })
    }

    /// Skips the crossing check. The result is an analytic disc that need not
    /// be a geodesic; useful as a negative control.
    pub fn new_unchecked(f1: DiscAutomorphism<T>, f2: DiscAutomorphism<T>) -> Self {
        Self { f1, f2 }
    }

    pub fn f1(&self) -> &DiscAutomorphism<T> {
        &self.f1
    }

    pub fn f2(&self) -> &DiscAutomorphism<T> {
        &self.f2
    }

    pub fn apply(&self, l: Complex<T>) -> SymPoint<T> {
        pi2(self.f1.apply(l), self.f2.apply(l))
    }

    pub fn eval(&self, l: Complex<T>) -> Result<SymPoint<T>> {
        DiscPoint::closed(l)?;
        Ok(self.apply(l))
    }

    /// `g = f2 ∘ f1⁻¹`, so that the disc is `μ ↦ π(μ, g(μ))` after reparametrizing.
    pub fn normalized(&self) -> DiscAutomorphism<T> {
        self.f2.compose(&self.f1.inverse())
    }

    fn parts(f: &DiscAutomorphism<T>) -> (Poly<T>, Poly<T>) {
        let (t, a) = (f.tau(), f.alpha());
        (Poly::linear(-t * a, t), Poly::linear(one(), -a.conj()))
    }

    /// Numerator of `f1 - f2` over `(1 - ᾱ1λ)(1 - ᾱ2λ)`.
    pub fn difference_numerator(&self) -> Poly<T> {
        let (n1, d1) = Self::parts(&self.f1);
        let (n2, d2) = Self::parts(&self.f2);
        n1.mul(&d2).sub(&n2.mul(&d1))
    }

    pub fn rational(&self) -> RationalDisc<T> {
        let (n1, d1) = Self::parts(&self.f1);
        let (n2, d2) = Self::parts(&self.f2);
        RationalDisc { s_num: n1.mul(&d2).add(&n2.mul(&d1)), p_num: n1.mul(&n2), den: d1.mul(&d2) }
    }
}

/// Both verdicts on whether `f1 - f2` is zero-free in the disc.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootFreeCheck<T> {
    /// `|1 - τ| ≤ 2|α|` for the normalized map `g = f2 ∘ f1⁻¹`.
    pub root_free: bool,
    /// Verdict from solving `ᾱμ² + (τ - 1)μ - τα = 0` directly.
    pub quadratic_root_free: bool,
    /// `2|α| - |1 - τ|`; near zero means the roots sit on the circle.
    pub margin: T,
    /// A crossing parameter `λ` in the disc, if one exists.
    pub root: Option<Complex<T>>,
    pub tau: Complex<T>,
    pub alpha: Complex<T>,
}

/// Tests `|1 - τ| ≤ 2|α|` and cross-checks it by the quadratic for fixed points of `g`.
pub fn flat_rootfree_check<T: Scalar>(f1: &DiscAutomorphism<T>, f2: &DiscAutomorphism<T>) -> Result<RootFreeCheck<T>> {
    let g = f2.compose(&f1.inverse());
    let (tau, alpha) = (g.tau(), g.alpha());
    let tiny = T::tol(1e-12);
    if (tau - one::<T>()).norm() <= tiny && alpha.norm() <= tiny {
        return Err(Error::Degenerate("f1 and f2 coincide".into()));
    }
    let two = T::lit(2.0);
    let margin = two * alpha.norm() - (one::<T>() - tau).norm();

    // fixed points of g: ᾱμ² + (τ-1)μ - τα = 0
    let (qa, qb, qc) = (alpha.conj(), tau - one::<T>(), -tau * alpha);
    let roots: Vec<Complex<T>> = if qa.norm() <= T::epsilon() {
        if qb.norm() == T::zero() {
            vec![]
        } else {
            vec![-qc / qb]
        }
    } else {
        let mut d = (qb * qb - qa * qc * T::lit(4.0)).sqrt();
        if (qb.conj() * d).re < T::zero() {
            d = -d;
        }
        let big = -(qb + d) / two;
        if big == zero() {
            vec![zero(), zero()]
        } else {
            vec![big / qa, qc / big]
        }
    };
    // the roots multiply to a unimodular number: either both sit on the
    // circle (up to rounding) or one is strictly inside
    let inner = roots
        .iter()
        .copied()
        .filter(|m| m.norm() < T::one() - T::tol(1e-10))
        .min_by(|a, b| a.norm().partial_cmp(&b.norm()).unwrap_or(std::cmp::Ordering::Equal));
    Ok(RootFreeCheck {
        root_free: margin >= T::zero(),
        quadratic_root_free: inner.is_none(),
        margin,
        root: inner.map(|m| f1.inverse().apply(m)),
        tau,
        alpha,
    })
}

/// A flat geodesic with `φ(0) = z`, `φ(λ₂) = w`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlatConstruction<T> {
    pub geodesic: FlatGeodesic<T>,
    pub at_z: Complex<T>,
    pub at_w: Complex<T>,
    pub distance: T,
    /// Mismatch of the chosen lift pairing.
    pub mismatch: T,
}

/// Builds `π ∘ (f1, f2)` through `z` and `w` from a balanced lift pairing.
pub fn construct_flat<T: Scalar>(z: &SymPoint<T>, w: &SymPoint<T>, tol: &Tolerances) -> Result<FlatConstruction<T>> {
    require_inside(z)?;
    require_inside(w)?;
    if z == w {
        return Err(Error::Degenerate("points coincide".into()));
    }
    let (lz, lw) = (lift(z), lift(w));
    let pairings = [(lz.l1, lw.l1, lz.l2, lw.l2), (lz.l1, lw.l2, lz.l2, lw.l1)];
    let scored = pairings.map(|(z1, w1, z2, w2)| {
        let (m1, m2) = (pseudo_hyperbolic(z1, w1), pseudo_hyperbolic(z2, w2));
        ((m1 - m2).abs(), (z1, w1, z2, w2))
    });
    let (mismatch, (z1, w1, z2, w2)) = if scored[1].0 < scored[0].0 { scored[1] } else { scored[0] };
    if mismatch > T::tol(tol.interp) {
        return Err(if mismatch < T::tol(tol.ambiguous) {
            Error::Ambiguous { mismatch: mismatch.as_f64() }
        } else {
            Error::Unbalanced { mismatch: mismatch.as_f64() }
        });
    }
    // parametrize by the larger of the two equal distances so both fits pass
    let (m1, m2) = (pseudo_hyperbolic(z1, w1), pseudo_hyperbolic(z2, w2));
    let lam = if m1 >= m2 { m1 } else { m2 };
    if lam <= T::zero() {
        return Err(Error::Degenerate("points coincide".into()));
    }
    let (zero_c, lam_c) = (zero::<T>(), real(lam));
    let f1 = automorphism_through(zero_c, lam_c, z1, w1, T::tol(tol.interp))?;
    let f2 = automorphism_through(zero_c, lam_c, z2, w2, T::tol(tol.interp))?;
    let check = flat_rootfree_check(&f1, &f2)?;
    if !check.root_free {
        let r = check.root.unwrap_or_else(zero);
        return Err(Error::RoyalCrossing { re: r.re.as_f64(), im: r.im.as_f64() });
    }
    Ok(FlatConstruction {
        geodesic: FlatGeodesic { f1, f2 },
        at_z: zero_c,
        at_w: lam_c,
        distance: hyperbolic(zero_c, lam_c),
        mismatch,
    })
}

use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::flat::FlatGeodesic;
use super::AnalyticDisc;
use crate::disc::{automorphism_through, pseudo_hyperbolic, DiscAutomorphism};
use crate::error::{Error, Result};
use crate::optim::{golden_max, newton_max};
use crate::scalar::{cis, real, unit, zero, Scalar};
use crate::symm::ExtremalParam;
use crate::tol::Tolerances;

/// Claims that `F_ω ∘ φ` equals `rotation`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate<T> {
    pub omega: ExtremalParam<T>,
    pub rotation: DiscAutomorphism<T>,
    /// `m(G(0), G(r)) / r` for `G = F_ω ∘ φ`; exactly 1 for closed forms.
    pub ratio: T,
}

/// The 16 × 16 polar grid used to check certificates.
pub fn certificate_samples<T: Scalar>() -> Vec<Complex<T>> {
    let mut out = Vec::with_capacity(256);
    for i in 0..16 {
        let r = T::lit(0.95 * (i + 1) as f64 / 16.0);
        for k in 0..16 {
            out.push(cis(T::lit(std::f64::consts::TAU * k as f64 / 16.0)) * r);
        }
    }
    out
}

/// Largest `|F_ω(φ(λ)) - rotation(λ)|` over the sample grid.
pub fn verify_certificate<T: Scalar, D: AnalyticDisc<T> + ?Sized>(disc: &D, cert: &Certificate<T>) -> T {
    certificate_samples::<T>()
        .into_iter()
        .map(|l| (cert.omega.apply(&disc.point(l)) - cert.rotation.apply(l)).norm())
        .fold(T::zero(), |m, d| if d > m || d.is_nan() { d } else { m })
}

const PROBE: f64 = 0.5;

fn pair_ratio<T: Scalar, D: AnalyticDisc<T> + ?Sized>(disc: &D, om: &ExtremalParam<T>) -> T {
    let r = T::lit(PROBE);
    let (a, b) = (disc.point(zero()), disc.point(real(r)));
    pseudo_hyperbolic(om.apply(&a), om.apply(&b)) / r
}

fn fit_rotation<T: Scalar, D: AnalyticDisc<T> + ?Sized>(
    disc: &D,
    om: &ExtremalParam<T>,
    ratio: T,
) -> Result<Certificate<T>> {
    let r = real(T::lit(PROBE));
    let (g0, g1) = (om.apply(&disc.point(zero())), om.apply(&disc.point(r)));
    let rotation = automorphism_through(zero(), r, g0, g1, T::lit(1e-4))?;
    Ok(Certificate { omega: *om, rotation, ratio })
}

/// Searches `ω` on the circle (and `ω = 0`) for which `F_ω ∘ φ` is an
/// automorphism. The objective is `m(G(0), G(r))/r`, which is at most 1 by
/// Schwarz–Pick with equality exactly for automorphisms.
pub fn certificate_search<T: Scalar, D: AnalyticDisc<T> + ?Sized>(
    disc: &D,
    tol: &Tolerances,
) -> Result<Certificate<T>> {
    let n = tol.omega_grid.max(16);
    let step = T::TAU() / T::lit(n as f64);
    let f = |t: T| pair_ratio(disc, &ExtremalParam::from_angle(t));
    let grid: Vec<T> = (0..n).into_par_iter().map(|k| f(step * T::lit(k as f64))).collect();
    let mut best_k = 0;
    for (k, v) in grid.iter().enumerate() {
        if *v > grid[best_k] {
            best_k = k;
        }
    }
    let centre = step * T::lit(best_k as f64);
    let (lo, hi) = (centre - step, centre + step);
    let (t, v) = golden_max(f, lo, hi, T::lit(tol.angle), 200);
    let (t, v) = newton_max(f, t, v, T::lit(1e-5), lo, hi);
    let zero_ratio = pair_ratio(disc, &ExtremalParam::zero());
    let (om, ratio) =
        if zero_ratio > v { (ExtremalParam::zero(), zero_ratio) } else { (ExtremalParam::from_angle(t), v) };
    if !(ratio >= T::one() - T::tol(tol.certificate_floor)) {
        return Err(Error::Certification { ratio: ratio.as_f64() });
    }
    fit_rotation(disc, &om, ratio)
}

/// Certificate for a flat geodesic. On the boundary `|1 - τ| = 2|α|` of the
/// normalized map the closed form `ω̃ = -|α| + i√(1-|α|²)` is used; otherwise a
/// deterministic angle search.
pub fn certificate_flat<T: Scalar>(g: &FlatGeodesic<T>, tol: &Tolerances) -> Result<Certificate<T>> {
    let n = g.normalized();
    let (tau, alpha) = (n.tau(), n.alpha());
    let two = T::lit(2.0);
    let edge = (two * alpha.norm() - (Complex::new(T::one(), T::zero()) - tau).norm()).abs();
    if edge <= T::tol(1e-9) && alpha.norm() > T::zero() {
        let a = alpha.norm();
        let sign = if tau.im >= T::zero() { T::one() } else { -T::one() };
        let wt = Complex::new(-a, sign * (T::one() - a * a).sqrt());
        let om = ExtremalParam::unimodular(unit(wt.conj() * tau * alpha / a))?;
        let ratio = pair_ratio(g, &om);
        if ratio >= T::one() - T::tol(tol.certificate) {
            return fit_rotation(g, &om, ratio);
        }
    }
    certificate_search(g, tol)
}

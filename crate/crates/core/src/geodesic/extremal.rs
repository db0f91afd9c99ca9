//! Geodesics through two arbitrary points, driven by the extremal parameter.
//!
//! Given the maximizing `ω` for the pair, the geodesic is recovered in closed
//! form: its `p`-component is the degree-two map sending the two `F_ω`-values
//! to the two `p`-values and fixing `ω²` on the circle, and `s` then follows
//! from `F_ω(s, p) = λ`. Its single royal point gives the transport parameter
//! `a`, which turns the disc into `B_a ∘ (origin geodesic)`. A short
//! Levenberg–Marquardt pass over `(a, λ_w)` removes the rounding left over.

use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::origin::{construct_origin_with, SigmaSearch};
use super::rational::RationalDisc;
use super::transport::TransportedGeodesic;
use crate::disc::hyperbolic;
use crate::error::{Error, Result};
use crate::optim::{levenberg_marquardt, LevenbergMarquardt};
use crate::poly::Poly;
use crate::scalar::{cis, one, real, unit, zero, Scalar};
use crate::symm::{ExtremalParam, RoyalAutomorphism, SymPoint};
use crate::tol::Tolerances;

/// A transported geodesic through `z` and `w` found numerically.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairConstruction<T> {
    pub geodesic: TransportedGeodesic<T>,
    pub at_z: Complex<T>,
    pub at_w: Complex<T>,
    pub distance: T,
    /// Max-norm miss at the two prescribed points.
    pub residual: T,
}

fn mob<T: Scalar>(c: Complex<T>, x: Complex<T>) -> Complex<T> {
    (x - c) / (one::<T>() - c.conj() * x)
}

/// Rational disc through `z`, `w` on which `F_ω` is the identity parameter.
fn closed_form_disc<T: Scalar>(
    z: &SymPoint<T>,
    w: &SymPoint<T>,
    om: Complex<T>,
) -> Option<(RationalDisc<T>, Complex<T>, Complex<T>)> {
    let f = ExtremalParam::unimodular(om).ok()?;
    let (lz, lw) = (f.apply(z), f.apply(w));
    let (pz, pw) = (z.p, w.p);
    let mlw = mob(lz, lw);
    if mlw.norm() <= T::tiny(1e-14) {
        return None;
    }
    let q = mob(pz, pw) / mlw;
    if !(q.norm() < T::one() - T::tol(1e-12)) {
        return None;
    }
    let o2 = om * om;
    let u = mob(pz, o2) / mob(lz, o2);
    let e = unit(mob(q, u) / mob(lw, o2));

    let x = Poly::x();
    let c1 = Poly::constant(one());
    let lin = |c: Complex<T>| x.sub(&Poly::constant(c));
    let den = |c: Complex<T>| c1.sub(&x.scale(c.conj()));
    let n1 = lin(lw).scale(e).add(&den(lw).scale(q));
    let d1 = den(lw).add(&lin(lw).scale(q.conj() * e));
    let a = lin(lz).mul(&n1);
    let bd = den(lz).mul(&d1);
    let np = a.add(&bd.scale(pz));
    let dp = bd.add(&a.scale(pz.conj()));
    let (quot, _) = np.sub(&x.mul(&dp)).div_root(o2);
    let s_num = quot.scale(-om * T::lit(2.0));
    Some((RationalDisc { s_num, p_num: np, den: dp }, lz, lw))
}

/// Starting point `(a, λ_w)` from the closed-form disc.
fn closed_form_seed<T: Scalar>(z: &SymPoint<T>, w: &SymPoint<T>, om: Complex<T>) -> Option<(Complex<T>, Complex<T>)> {
    let (r, lz, lw) = closed_form_disc(z, w, om)?;
    let inside: Vec<Complex<T>> = r
        .psi_numerator()
        .clustered_roots(T::tol(1e-13), T::tol(1e-4))
        .ok()?
        .into_iter()
        .map(|(c, _)| c)
        .filter(|c| c.norm() < T::one() - T::tol(1e-6))
        .collect();
    let [l0] = inside.as_slice() else {
        return None;
    };
    let a = r.eval(*l0)?.s * T::lit(0.5);
    if !(a.norm() < T::one()) {
        return None;
    }
    let inner = construct_origin_with(&RoyalAutomorphism::raw(a).apply(z), &SigmaSearch::default()).ok()?;
    let rot = unit(real::<T>(inner.sigma * inner.sigma) / mob(*l0, lz));
    Some((a, rot * mob(*l0, lw)))
}

fn residual<T: Scalar>(z: &SymPoint<T>, w: &SymPoint<T>, x: &[T]) -> Vec<T> {
    let big = vec![T::lit(1e3); 4];
    let a = Complex::new(x[0], x[1]);
    let l = Complex::new(x[2], x[3]);
    if !(a.norm() < T::one()) || !(l.norm() < T::one()) {
        return big;
    }
    let b = RoyalAutomorphism::raw(a);
    match construct_origin_with(&b.apply(z), &SigmaSearch::default()) {
        Ok(o) => {
            let pt = b.apply(&o.geodesic.apply(l));
            let r = vec![(pt.s - w.s).re, (pt.s - w.s).im, (pt.p - w.p).re, (pt.p - w.p).im];
            if r.iter().all(|v| v.is_finite()) {
                r
            } else {
                big
            }
        }
        Err(_) => big,
    }
}

fn finish<T: Scalar>(z: &SymPoint<T>, w: &SymPoint<T>, a: Complex<T>, lw: Complex<T>) -> Result<PairConstruction<T>> {
    let b = RoyalAutomorphism::new(a)?;
    let inner = construct_origin_with(&b.apply(z), &SigmaSearch::default())?;
    let at_z = real(inner.sigma * inner.sigma);
    let geodesic = TransportedGeodesic::new(a, inner.geodesic)?;
    let residual = geodesic.apply(at_z).dist(z).max(geodesic.apply(lw).dist(w));
    Ok(PairConstruction { geodesic, at_z, at_w: lw, distance: hyperbolic(at_z, lw), residual })
}

fn polish<T: Scalar>(z: &SymPoint<T>, w: &SymPoint<T>, a: Complex<T>, lw: Complex<T>) -> Result<PairConstruction<T>> {
    let (x, _) =
        levenberg_marquardt(|x| residual(z, w, x), &[a.re, a.im, lw.re, lw.im], &LevenbergMarquardt::default());
    finish(z, w, Complex::new(x[0], x[1]), Complex::new(x[2], x[3]))
}

/// Geodesic through `z` and `w` guided by the maximizing extremal parameter `ω`.
pub fn geodesic_through_pair<T: Scalar>(
    z: &SymPoint<T>,
    w: &SymPoint<T>,
    omega: &ExtremalParam<T>,
    tol: &Tolerances,
) -> Result<PairConstruction<T>> {
    let closed = if omega.is_zero() { None } else { closed_form_seed(z, w, omega.omega()) };
    if let Some((a, lw)) = closed {
        if let Ok(pc) = polish(z, w, a, lw) {
            if pc.residual <= T::tol(tol.witness) {
                return Ok(pc);
            }
        }
    }
    lattice_search(z, w, tol)
}

/// Multi-start fit over a fixed lattice of transport parameters.
fn lattice_search<T: Scalar>(z: &SymPoint<T>, w: &SymPoint<T>, tol: &Tolerances) -> Result<PairConstruction<T>> {
    let seeds: Vec<Complex<T>> = [0.25, 0.6]
        .iter()
        .flat_map(|r| (0..8).map(move |k| cis(T::lit(std::f64::consts::TAU * (k as f64 + 0.5) / 8.0)) * T::lit(*r)))
        .collect();
    let fits: Vec<Option<PairConstruction<T>>> = seeds
        .par_iter()
        .map(|&a| {
            let b = RoyalAutomorphism::raw(a);
            let inner = construct_origin_with(&b.apply(z), &SigmaSearch::default()).ok()?;
            let mut best = (T::infinity(), zero());
            for i in 1..=16 {
                for k in 0..32 {
                    let l = cis(T::lit(std::f64::consts::TAU * k as f64 / 32.0)) * T::lit(0.98 * i as f64 / 16.0);
                    let d = b.apply(&inner.geodesic.apply(l)).dist(w);
                    if d < best.0 {
                        best = (d, l);
                    }
                }
            }
            polish(z, w, a, best.1).ok()
        })
        .collect();
    let mut best: Option<PairConstruction<T>> = None;
    for f in fits.into_iter().flatten() {
        if best.as_ref().is_none_or(|b| f.residual < b.residual) {
            best = Some(f);
        }
    }
    match best {
        Some(b) if b.residual <= T::tol(tol.witness) => Ok(b),
        Some(b) => Err(Error::NoWitness { residual: b.residual.as_f64(), lift_bound: f64::NAN }),
        None => Err(Error::NoWitness { residual: f64::INFINITY, lift_bound: f64::NAN }),
    }
}

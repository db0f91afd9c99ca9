//! Carathéodory lower bounds from the `F_ω` sweep, Lempert upper bounds from
//! explicit analytic discs, and reports comparing the two.

use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::disc::{automorphism_through, hyperbolic, pseudo_hyperbolic, DiscAutomorphism};
use crate::error::{Error, Result};
use crate::geodesic::{construct_flat, construct_through_royal, geodesic_through_pair, AnalyticDisc, Geodesic};
use crate::optim::golden_max;
use crate::scalar::{real, unit, zero, Scalar};
use crate::symm::{lift, on_royal_variety, pi2, require_inside, ExtremalParam, SymPoint};
use crate::tol::Tolerances;

/// The swept value and the maximizing parameter.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaratheodoryValue<T> {
    pub value: T,
    pub omega: ExtremalParam<T>,
}

/// `max_ω p(F_ω(z), F_ω(w))` over `ω ∈ {0} ∪ ∂𝔻`: a uniform angle grid, then
/// golden-section refinement of the three best local maxima.
pub fn caratheodory<T: Scalar>(z: &SymPoint<T>, w: &SymPoint<T>, tol: &Tolerances) -> Result<CaratheodoryValue<T>> {
    require_inside(z)?;
    require_inside(w)?;
    if z == w {
        return Ok(CaratheodoryValue { value: T::zero(), omega: ExtremalParam::zero() });
    }
    let n = tol.omega_grid.max(16);
    let step = T::TAU() / T::lit(n as f64);
    let f = |t: T| {
        let om = ExtremalParam::from_angle(t);
        pseudo_hyperbolic(om.apply(z), om.apply(w))
    };
    let grid: Vec<T> = (0..n).into_par_iter().map(|k| f(step * T::lit(k as f64))).collect();
    let mut peaks: Vec<usize> =
        (0..n).filter(|&k| grid[k] >= grid[(k + n - 1) % n] && grid[k] >= grid[(k + 1) % n]).collect();
    peaks.sort_by(|a, b| grid[*b].partial_cmp(&grid[*a]).unwrap_or(std::cmp::Ordering::Equal).then(a.cmp(b)));
    let mut best = (T::zero(), T::neg_infinity());
    for &k in peaks.iter().take(3) {
        let c = step * T::lit(k as f64);
        let (t, v) = golden_max(f, c - step, c + step, T::lit(tol.angle), 200);
        let (t, v) = if grid[k] >= v { (c, grid[k]) } else { (t, v) };
        if v > best.1 {
            best = (t, v);
        }
    }
    let mut t = best.0;
    if t < T::zero() {
        t += T::TAU();
    }
    let circle = ExtremalParam::from_angle(t);
    let on_circle = hyperbolic(circle.apply(z), circle.apply(w));
    let at_zero = hyperbolic(z.p, w.p);
    // ties within rounding go to ω = 0
    let slack = T::epsilon() * T::lit(64.0) * (T::one() + on_circle);
    Ok(if at_zero + slack >= on_circle {
        CaratheodoryValue { value: at_zero.max(on_circle), omega: ExtremalParam::zero() }
    } else {
        CaratheodoryValue { value: on_circle, omega: circle }
    })
}

/// `λ ↦ π(f1(λ), outer(scale·λ))`: each lift coordinate moves along its own
/// disc, the slower one shrunk to arrive on time.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LiftDisc<T> {
    pub f1: DiscAutomorphism<T>,
    pub outer: DiscAutomorphism<T>,
    pub scale: Complex<T>,
}

impl<T: Scalar> AnalyticDisc<T> for LiftDisc<T> {
    fn point(&self, l: Complex<T>) -> SymPoint<T> {
        pi2(self.f1.apply(l), self.outer.apply(self.scale * l))
    }
}

/// Which branch of the dispatcher produced the upper bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessPath {
    Royal,
    Flat,
    Extremal,
    LiftBound,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", bound = "T: Scalar")]
pub enum Witness<T: Scalar> {
    Geodesic { geodesic: Geodesic<T>, at_z: Complex<T>, at_w: Complex<T> },
    LiftDisc { disc: LiftDisc<T>, at_z: Complex<T>, at_w: Complex<T> },
}

impl<T: Scalar> Witness<T> {
    pub fn params(&self) -> (Complex<T>, Complex<T>) {
        match self {
            Self::Geodesic { at_z, at_w, .. } | Self::LiftDisc { at_z, at_w, .. } => (*at_z, *at_w),
        }
    }

    pub fn point(&self, l: Complex<T>) -> SymPoint<T> {
        match self {
            Self::Geodesic { geodesic, .. } => geodesic.apply(l),
            Self::LiftDisc { disc, .. } => disc.point(l),
        }
    }

    pub fn geodesic(&self) -> Option<&Geodesic<T>> {
        match self {
            Self::Geodesic { geodesic, .. } => Some(geodesic),
            Self::LiftDisc { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct LempertBound<T: Scalar> {
    pub value: T,
    pub witness: Witness<T>,
    pub path: WitnessPath,
    /// Max-norm miss of the witness at the two points.
    pub residual: T,
}

/// `min` over pairings of `max(p(z1, w1), p(z2, w2))` with its disc.
pub fn lift_bound<T: Scalar>(z: &SymPoint<T>, w: &SymPoint<T>) -> Result<LempertBound<T>> {
    require_inside(z)?;
    require_inside(w)?;
    let (lz, lw) = (lift(z), lift(w));
    let mut best: Option<(T, LiftDisc<T>, T)> = None;
    for (z1, w1, z2, w2) in [(lz.l1, lw.l1, lz.l2, lw.l2), (lz.l1, lw.l2, lz.l2, lw.l1)] {
        let (m1, m2) = (pseudo_hyperbolic(z1, w1), pseudo_hyperbolic(z2, w2));
        let ((a1, b1, m1), (a2, b2, m2)) =
            if m1 >= m2 { ((z1, w1, m1), (z2, w2, m2)) } else { ((z2, w2, m2), (z1, w1, m1)) };
        if m1 <= T::zero() {
            continue;
        }
        let f1 = automorphism_through(zero(), real(m1), a1, b1, T::lit(1e-6))?;
        let outer = DiscAutomorphism::centering(a2)?.inverse();
        let scale = unit(DiscAutomorphism::centering(a2)?.apply(b2)) * (m2 / m1);
        let value = hyperbolic(a1, b1).max(hyperbolic(a2, b2));
        if best.as_ref().is_none_or(|b| value < b.0) {
            best = Some((value, LiftDisc { f1, outer, scale }, m1));
        }
    }
    let (value, disc, m1) = best.ok_or_else(|| Error::Degenerate("points coincide".into()))?;
    let (at_z, at_w) = (zero(), real(m1));
    let residual = disc.point(at_z).dist(z).max(disc.point(at_w).dist(w));
    Ok(LempertBound { value, witness: Witness::LiftDisc { disc, at_z, at_w }, path: WitnessPath::LiftBound, residual })
}

pub fn lempert_upper<T: Scalar>(z: &SymPoint<T>, w: &SymPoint<T>, tol: &Tolerances) -> Result<LempertBound<T>> {
    lempert_upper_with(z, w, tol, None)
}

/// Upper bound from an explicit analytic disc through `z` and `w`: via a royal
/// point if either lies on the variety, else a flat geodesic if a balanced
/// pairing exists, else the extremal-parameter construction. Fails with
/// [`Error::NoWitness`] carrying the lift bound when nothing hits both points.
pub fn lempert_upper_with<T: Scalar>(
    z: &SymPoint<T>,
    w: &SymPoint<T>,
    tol: &Tolerances,
    omega: Option<ExtremalParam<T>>,
) -> Result<LempertBound<T>> {
    require_inside(z)?;
    require_inside(w)?;
    if z == w {
        return Err(Error::Degenerate("points coincide".into()));
    }
    let royal = T::tol(tol.royal);
    let from_geodesic = |g: Geodesic<T>, at_z: Complex<T>, at_w: Complex<T>, value: T, path| {
        let residual = g.apply(at_z).dist(z).max(g.apply(at_w).dist(w));
        LempertBound { value, witness: Witness::Geodesic { geodesic: g, at_z, at_w }, path, residual }
    };
    if on_royal_variety(z, royal) {
        let r = construct_through_royal(z, w, royal)?;
        return Ok(from_geodesic(r.geodesic.into(), r.at_z, r.at_w, r.distance, WitnessPath::Royal));
    }
    if on_royal_variety(w, royal) {
        let r = construct_through_royal(w, z, royal)?;
        return Ok(from_geodesic(r.geodesic.into(), r.at_w, r.at_z, r.distance, WitnessPath::Royal));
    }
    if let Ok(f) = construct_flat(z, w, tol) {
        return Ok(from_geodesic(f.geodesic.into(), f.at_z, f.at_w, f.distance, WitnessPath::Flat));
    }
    let omega = match omega {
        Some(o) => o,
        None => caratheodory(z, w, tol)?.omega,
    };
    match geodesic_through_pair(z, w, &omega, tol) {
        Ok(pc) => Ok(LempertBound {
            value: pc.distance,
            witness: Witness::Geodesic { geodesic: pc.geodesic.into(), at_z: pc.at_z, at_w: pc.at_w },
            path: WitnessPath::Extremal,
            residual: pc.residual,
        }),
        Err(Error::NoWitness { residual, .. }) => {
            let lb = lift_bound(z, w)?;
            Err(Error::NoWitness { residual, lift_bound: lb.value.as_f64() })
        }
        Err(e) => Err(e),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct DistanceReport<T: Scalar> {
    pub caratheodory_lower: T,
    pub argmax_omega: ExtremalParam<T>,
    pub lempert_upper: T,
    pub witness: Option<Witness<T>>,
    pub path: Option<WitnessPath>,
    pub residual: T,
    pub gap: T,
    /// Gap below the tolerance with a geodesic witness: a certified geodesic.
    pub tight: bool,
}

/// Runs both bounds. When no disc hits both points the lift bound is used and
/// the report is marked not tight.
pub fn distance_report<T: Scalar>(z: &SymPoint<T>, w: &SymPoint<T>, tol: &Tolerances) -> Result<DistanceReport<T>> {
    require_inside(z)?;
    require_inside(w)?;
    if z == w {
        return Ok(DistanceReport {
            caratheodory_lower: T::zero(),
            argmax_omega: ExtremalParam::zero(),
            lempert_upper: T::zero(),
            witness: None,
            path: None,
            residual: T::zero(),
            gap: T::zero(),
            tight: true,
        });
    }
    let c = caratheodory(z, w, tol)?;
    let upper = match lempert_upper_with(z, w, tol, Some(c.omega)) {
        Ok(u) => u,
        Err(Error::NoWitness { .. }) => lift_bound(z, w)?,
        Err(e) => return Err(e),
    };
    let gap = upper.value - c.value;
    let tight = upper.path != WitnessPath::LiftBound && gap.abs() < T::tol(tol.gap);
    Ok(DistanceReport {
        caratheodory_lower: c.value,
        argmax_omega: c.omega,
        lempert_upper: upper.value,
        witness: Some(upper.witness),
        path: Some(upper.path),
        residual: upper.residual,
        gap,
        tight,
    })
}

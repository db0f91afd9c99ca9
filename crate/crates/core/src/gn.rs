//! The symmetrized polydisc `Gₙ = πₙ(𝔻ⁿ)` and the conjectured geodesics
//! through its origin, `λ ↦ πₙ(B(ε⁰μ), …, B(εⁿ⁻¹μ))` with `μⁿ = λ`.
//!
//! Only upper bounds for the Lempert function are produced here.

use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::disc::{hyperbolic, BlaschkeProduct};
use crate::error::{Error, Result};
use crate::optim::{levenberg_marquardt, nelder_mead, LevenbergMarquardt, NelderMead};
use crate::poly::Poly;
use crate::scalar::{cis, one, real, zero, Scalar};
use crate::symm::Membership;

/// Elementary symmetric values `(σ₁, …, σₙ)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "crate::json::SymPointNJson<T>", into = "crate::json::SymPointNJson<T>", bound = "T: Scalar")]
pub struct SymPointN<T: Scalar> {
    sigma: Vec<Complex<T>>,
}

impl<T: Scalar> SymPointN<T> {
    pub fn new(sigma: Vec<Complex<T>>) -> Result<Self> {
        if sigma.is_empty() {
            return Err(Error::Domain("need at least one coordinate".into()));
        }
        Ok(Self { sigma })
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn coords(&self) -> &[Complex<T>] {
        &self.sigma
    }

    pub fn is_origin(&self) -> bool {
        self.sigma.iter().all(|c| *c == zero())
    }

    pub fn dist(&self, o: &Self) -> T {
        self.sigma.iter().zip(&o.sigma).fold(T::zero(), |m, (a, b)| m.max((a - b).norm()))
    }

    /// Monic `λⁿ - σ₁λⁿ⁻¹ + σ₂λⁿ⁻² - …`, coefficients in increasing degree.
    pub fn polynomial(&self) -> Poly<T> {
        let n = self.n();
        let mut c = vec![zero(); n + 1];
        c[n] = one();
        for (k, s) in self.sigma.iter().enumerate() {
            let sign = if k % 2 == 0 { -T::one() } else { T::one() };
            c[n - 1 - k] = s * sign;
        }
        Poly::new(c)
    }
}

/// Elementary symmetric polynomials, by expanding `∏ (x + lᵢ)`.
pub fn pi_n<T: Scalar>(l: &[Complex<T>]) -> SymPointN<T> {
    let mut e = vec![zero::<T>(); l.len() + 1];
    e[0] = one();
    for (j, x) in l.iter().enumerate() {
        for k in (1..=j + 1).rev() {
            let prev = e[k - 1];
            e[k] += prev * x;
        }
    }
    SymPointN { sigma: e[1..].to_vec() }
}

/// The points `l` with `πₙ(l) = z`.
pub fn lift_n<T: Scalar>(z: &SymPointN<T>) -> Result<Vec<Complex<T>>> {
    z.polynomial().roots(T::zero())
}

pub fn contains_n<T: Scalar>(z: &SymPointN<T>) -> Result<Membership<T>> {
    let roots = lift_n(z)?;
    let max = roots.iter().fold(T::zero(), |m, r| m.max(r.norm()));
    let margin = T::one() - max;
    Ok(Membership { inside: margin > T::zero(), margin })
}

/// `λ ↦ πₙ(B(ε⁰μ), …, B(εⁿ⁻¹μ))` for `B(0) = 0`, `deg B ≤ n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConjecturedGeodesic<T> {
    n: usize,
    b: BlaschkeProduct<T>,
}

impl<T: Scalar> ConjecturedGeodesic<T> {
    pub fn new(n: usize, b: BlaschkeProduct<T>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain("n must be at least 2".into()));
        }
        if b.degree() == 0 || b.degree() > n {
            return Err(Error::Domain(format!("degree {} is not in 1..={n}", b.degree())));
        }
        if b.apply(zero()).norm() > T::zero() {
            return Err(Error::Domain("B(0) must vanish".into()));
        }
        Ok(Self { n, b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blaschke(&self) -> &BlaschkeProduct<T> {
        &self.b
    }

    /// Evaluation using the root `μ·ε^branch`, `μ` the principal n-th root.
    pub fn apply_branch(&self, l: Complex<T>, branch: usize) -> SymPointN<T> {
        let nn = T::lit(self.n as f64);
        let mu = if l == zero() { zero() } else { Complex::from_polar(l.norm().powf(T::one() / nn), l.arg() / nn) };
        let step = T::TAU() / nn;
        let pts: Vec<Complex<T>> =
            (0..self.n).map(|k| self.b.apply(mu * cis(step * T::lit(((k + branch) % self.n) as f64)))).collect();
        pi_n(&pts)
    }
}

/// Evaluates on the principal root and checks against the next branch.
pub fn eval_conjectured<T: Scalar>(g: &ConjecturedGeodesic<T>, l: Complex<T>) -> Result<SymPointN<T>> {
    if !(l.norm() < T::one()) {
        return Err(Error::Domain(format!("|{l}| is not below 1")));
    }
    let a = g.apply_branch(l, 0);
    // an independent root: the principal one of the conjugate, conjugated back
    let nn = T::lit(g.n as f64);
    let mu2 =
        if l == zero() { zero() } else { Complex::from_polar(l.norm().powf(T::one() / nn), -(l.conj().arg()) / nn) };
    let b = pi_n(&(0..g.n).map(|k| g.b.apply(mu2 * cis(T::TAU() * T::lit(k as f64) / nn))).collect::<Vec<_>>());
    let err = a.dist(&b);
    if err > T::tol(1e-10) {
        return Err(Error::Internal(format!("branch disagreement {err:e}")));
    }
    Ok(a)
}

#[derive(Debug, Clone, Copy)]
pub struct FitConfig {
    pub nelder_mead: NelderMead,
    pub starts_per_zero: usize,
    pub success: f64,
}

impl Default for FitConfig {
    fn default() -> Self {
        Self {
            nelder_mead: NelderMead { max_iter: 20_000, f_tol: 1e-20, x_tol: 1e-10, initial_step: 0.3 },
            starts_per_zero: 8,
            success: 1e-8,
        }
    }
}

/// Outcome for one degree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegreeFit<T> {
    pub degree: usize,
    pub residual: T,
    /// `p(0, σⁿ)` when the fit succeeded.
    pub value: Option<T>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GnUpperReport<T> {
    /// Best fitted value, or the lift bound when no degree fits.
    pub value: T,
    pub fitted: bool,
    pub geodesic: Option<ConjecturedGeodesic<T>>,
    pub sigma: Option<T>,
    pub degree: Option<usize>,
    pub residual: T,
    /// `max_j p(0, l_j)` over the lift of the target.
    pub lift_bound: T,
    pub fits: Vec<DegreeFit<T>>,
}

struct Params<T> {
    tau: Complex<T>,
    sigma: T,
    zeros: Vec<Complex<T>>,
}

fn decode<T: Scalar>(x: &[T]) -> Params<T> {
    let sigma = T::one() / (T::one() + (-x[1]).exp());
    let zeros = x[2..]
        .chunks(2)
        .map(|c| {
            let v = Complex::new(c[0], c[1]);
            let r = v.norm();
            if r == T::zero() {
                v
            } else {
                v * (r.tanh() / r)
            }
        })
        .collect();
    Params { tau: cis(x[0]), sigma, zeros }
}

fn encode_zero<T: Scalar>(z: Complex<T>) -> [T; 2] {
    let r = z.norm();
    if r == T::zero() {
        return [T::zero(), T::zero()];
    }
    let s = r.atanh() / r;
    [z.re * s, z.im * s]
}

fn build<T: Scalar>(n: usize, p: &Params<T>) -> ConjecturedGeodesic<T> {
    let mut zs = vec![zero()];
    zs.extend(p.zeros.iter().copied());
    ConjecturedGeodesic { n, b: BlaschkeProduct::raw(p.tau, zs) }
}

fn fit_residual<T: Scalar>(n: usize, target: &SymPointN<T>, x: &[T]) -> Vec<T> {
    let p = decode(x);
    if !(p.sigma > T::zero() && p.sigma < T::one()) || p.zeros.iter().any(|z| !(z.norm() < T::one())) {
        return vec![T::lit(1e3); 2 * n];
    }
    let g = build(n, &p);
    let v = g.apply_branch(real(p.sigma.powi(n as i32)), 0);
    v.coords()
        .iter()
        .zip(target.coords())
        .flat_map(|(a, b)| {
            let d = a - b;
            [d.re, d.im]
        })
        .collect()
}

fn fit_degree<T: Scalar>(target: &SymPointN<T>, degree: usize, big: T, cfg: &FitConfig) -> (Vec<T>, T) {
    let n = target.n();
    let free = degree - 1;
    let sigma_starts = [big + (T::one() - big) * T::lit(0.3), big + (T::one() - big) * T::lit(0.7)];
    let k = cfg.starts_per_zero.max(1);
    let zero_seeds: Vec<Complex<T>> =
        (0..k).map(|j| cis(T::TAU() * T::lit(j as f64) / T::lit(k as f64)) * T::lit(0.5)).collect();
    let mut starts: Vec<Vec<T>> = Vec::new();
    let combos = k.pow(free as u32);
    for s0 in sigma_starts {
        for t in 0..4 {
            for c in 0..combos {
                let mut x = vec![T::TAU() * T::lit(t as f64) / T::lit(4.0), (s0 / (T::one() - s0)).ln()];
                let mut idx = c;
                for _ in 0..free {
                    x.extend(encode_zero(zero_seeds[idx % k]));
                    idx /= k;
                }
                starts.push(x);
            }
        }
    }
    let obj = |x: &[T]| fit_residual(n, target, x).iter().fold(T::zero(), |a, v| a + *v * *v);
    let lm = LevenbergMarquardt { max_iter: 100, target: 1e-15, fd_step: 1e-7 };
    let success = T::tol(cfg.success);
    // chunks keep the early exit while still using the thread pool
    let mut best: (Vec<T>, T) = (starts[0].clone(), T::infinity());
    for chunk in starts.chunks(8) {
        let results: Vec<(Vec<T>, T)> = chunk
            .par_iter()
            .map(|x0| {
                let first = levenberg_marquardt(|x| fit_residual(n, target, x), x0, &lm);
                if first.1 <= success {
                    return first;
                }
                let (x, _) = nelder_mead(obj, x0, &cfg.nelder_mead);
                let second = levenberg_marquardt(|x| fit_residual(n, target, x), &x, &lm);
                if second.1 < first.1 {
                    second
                } else {
                    first
                }
            })
            .collect();
        for r in results {
            if r.1 < best.1 {
                best = r;
            }
        }
        if best.1 <= success {
            break;
        }
    }
    best
}

/// Fits the conjectured geodesic through the origin and `target` for every
/// degree `1..=n`; the smallest successful `p(0, σⁿ)` is reported.
pub fn lempert_upper_origin_n<T: Scalar>(target: &SymPointN<T>, cfg: &FitConfig) -> Result<GnUpperReport<T>> {
    let n = target.n();
    if n < 2 {
        return Err(Error::Domain("n must be at least 2".into()));
    }
    if target.is_origin() {
        return Err(Error::Degenerate("target is the origin".into()));
    }
    let roots = lift_n(target)?;
    let big = roots.iter().fold(T::zero(), |m, r| m.max(r.norm()));
    if !(big < T::one()) {
        return Err(Error::Domain("target is not in the symmetrized polydisc".into()));
    }
    let lift_bound = hyperbolic(zero(), real(big));
    let mut fits = Vec::with_capacity(n);
    let mut best: Option<(T, ConjecturedGeodesic<T>, T, usize, T)> = None;
    let mut best_residual = T::infinity();
    for degree in 1..=n {
        let (x, res) = fit_degree(target, degree, big, cfg);
        best_residual = best_residual.min(res);
        let ok = res <= T::tol(cfg.success);
        let p = decode(&x);
        let value = ok.then(|| hyperbolic(zero(), real(p.sigma.powi(n as i32))));
        fits.push(DegreeFit { degree, residual: res, value });
        if let Some(v) = value {
            if best.as_ref().is_none_or(|b| v < b.0) {
                best = Some((v, build(n, &p), p.sigma, degree, res));
            }
        }
    }
    Ok(match best {
        Some((value, g, sigma, degree, residual)) => GnUpperReport {
            value,
            fitted: true,
            geodesic: Some(g),
            sigma: Some(sigma),
            degree: Some(degree),
            residual,
            lift_bound,
            fits,
        },
        None => GnUpperReport {
            value: lift_bound,
            fitted: false,
            geodesic: None,
            sigma: None,
            degree: None,
            residual: best_residual,
            lift_bound,
            fits,
        },
    })
}

//! Small deterministic optimizers: bisection, golden section, Nelder–Mead and
//! Levenberg–Marquardt with a finite-difference Jacobian.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Root of a continuous `f` with a sign change on `[lo, hi]`. Stops once the
/// bracket is below `tol` or the midpoint no longer moves.
pub fn bisect<T: Scalar>(mut f: impl FnMut(T) -> T, mut lo: T, mut hi: T, tol: T, max_iter: usize) -> Result<T> {
    let (flo, fhi) = (f(lo), f(hi));
    if flo == T::zero() {
        return Ok(lo);
    }
    if fhi == T::zero() {
        return Ok(hi);
    }
    if !(flo.signum() != fhi.signum()) || flo.is_nan() || fhi.is_nan() {
        return Err(Error::Internal(format!("no sign change on [{lo}, {hi}]: f = {flo}, {fhi}")));
    }
    let lo_neg = flo < T::zero();
    let half = T::lit(0.5);
    for _ in 0..max_iter {
        let mid = lo + (hi - lo) * half;
        if hi - lo <= tol || mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == T::zero() {
            return Ok(mid);
        }
        if (fm < T::zero()) == lo_neg {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo + (hi - lo) * half)
}

/// Maximizes a unimodal `f` on `[a, b]`; returns the best point seen.
pub fn golden_max<T: Scalar>(mut f: impl FnMut(T) -> T, mut a: T, mut b: T, tol: T, max_iter: usize) -> (T, T) {
    let g = (T::lit(5.0).sqrt() - T::one()) * T::lit(0.5);
    let mut x1 = b - g * (b - a);
    let mut x2 = a + g * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..max_iter {
        if b - a <= tol {
            break;
        }
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = f(x2);
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// A few Newton steps on the derivative of `f`, using central differences
/// with step `h`. Only improving steps inside `[lo, hi]` are kept.
pub fn newton_max<T: Scalar>(f: impl Fn(T) -> T, mut x: T, mut fx: T, h: T, lo: T, hi: T) -> (T, T) {
    let two = T::lit(2.0);
    for _ in 0..4 {
        let (fp, fm) = (f(x + h), f(x - h));
        let d1 = (fp - fm) / (two * h);
        let d2 = (fp - two * fx + fm) / (h * h);
        if !(d2 < T::zero()) {
            break;
        }
        let y = x - d1 / d2;
        if !(y > lo && y < hi) {
            break;
        }
        let fy = f(y);
        if !(fy > fx) {
            break;
        }
        x = y;
        fx = fy;
    }
    (x, fx)
}

#[derive(Debug, Clone, Copy)]
pub struct NelderMead {
    pub max_iter: usize,
    /// Stop when the spread of simplex values drops below this.
    pub f_tol: f64,
    /// Stop when every vertex is within this of the best one.
    pub x_tol: f64,
    pub initial_step: f64,
}

impl Default for NelderMead {
    fn default() -> Self {
        Self { max_iter: 20_000, f_tol: 1e-20, x_tol: 1e-10, initial_step: 0.2 }
    }
}

/// Minimizes `f` from `x0`; returns the best vertex and its value.
pub fn nelder_mead<T: Scalar>(f: impl Fn(&[T]) -> T, x0: &[T], opts: &NelderMead) -> (Vec<T>, T) {
    let n = x0.len();
    let step = T::lit(opts.initial_step);
    let mut simplex: Vec<(Vec<T>, T)> = Vec::with_capacity(n + 1);
    simplex.push((x0.to_vec(), f(x0)));
    for i in 0..n {
        let mut x = x0.to_vec();
        x[i] += step;
        let fx = f(&x);
        simplex.push((x, fx));
    }
    let (half, two) = (T::lit(0.5), T::lit(2.0));
    let order = |s: &mut Vec<(Vec<T>, T)>| {
        s.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
    };
    let affine = |a: &[T], b: &[T], t: T| -> Vec<T> { a.iter().zip(b).map(|(p, q)| *p + t * (*q - *p)).collect() };
    for _ in 0..opts.max_iter {
        order(&mut simplex);
        let spread = simplex[n].1 - simplex[0].1;
        if spread <= T::lit(opts.f_tol) || simplex[0].1 <= T::lit(opts.f_tol) {
            break;
        }
        let size = simplex[1..]
            .iter()
            .fold(T::zero(), |m, (x, _)| x.iter().zip(&simplex[0].0).fold(m, |m, (a, b)| m.max((*a - *b).abs())));
        if size <= T::lit(opts.x_tol) {
            break;
        }
        let mut centroid = vec![T::zero(); n];
        for (x, _) in &simplex[..n] {
            for (c, v) in centroid.iter_mut().zip(x) {
                *c += *v / T::lit(n as f64);
            }
        }
        let worst = simplex[n].0.clone();
        let xr = affine(&centroid, &worst, -T::one());
        let fr = f(&xr);
        if fr < simplex[0].1 {
            let xe = affine(&centroid, &worst, -two);
            let fe = f(&xe);
            simplex[n] = if fe < fr { (xe, fe) } else { (xr, fr) };
        } else if fr < simplex[n - 1].1 {
            simplex[n] = (xr, fr);
        } else {
            let (xc, fc) = if fr < simplex[n].1 {
                let x = affine(&centroid, &worst, -half);
                let v = f(&x);
                (x, v)
            } else {
                let x = affine(&centroid, &worst, half);
                let v = f(&x);
                (x, v)
            };
            if fc < simplex[n].1.min(fr) {
                simplex[n] = (xc, fc);
            } else {
                let best = simplex[0].0.clone();
                for v in simplex.iter_mut().skip(1) {
                    v.0 = affine(&best, &v.0, half);
                    v.1 = f(&v.0);
                }
            }
        }
    }
    order(&mut simplex);
    simplex.swap_remove(0)
}

#[derive(Debug, Clone, Copy)]
pub struct LevenbergMarquardt {
    pub max_iter: usize,
    /// Stop once the residual norm is at most this.
    pub target: f64,
    /// Relative finite-difference step.
    pub fd_step: f64,
}

impl Default for LevenbergMarquardt {
    fn default() -> Self {
        Self { max_iter: 60, target: 1e-14, fd_step: 1e-7 }
    }
}

fn norm2<T: Scalar>(r: &[T]) -> T {
    r.iter().fold(T::zero(), |a, v| a + *v * *v)
}

/// Least squares on `residual`; returns the best point and its residual norm.
pub fn levenberg_marquardt<T: Scalar>(
    residual: impl Fn(&[T]) -> Vec<T>,
    x0: &[T],
    opts: &LevenbergMarquardt,
) -> (Vec<T>, T) {
    let n = x0.len();
    let mut x = x0.to_vec();
    let mut r = residual(&x);
    let mut cost = norm2(&r);
    if !cost.is_finite() {
        return (x, T::infinity());
    }
    let mut mu = T::lit(1e-3);
    let target = T::lit(opts.target);
    for _ in 0..opts.max_iter {
        if cost.sqrt() <= target {
            break;
        }
        let m = r.len();
        let mut jac = vec![vec![T::zero(); n]; m];
        for j in 0..n {
            let h = T::lit(opts.fd_step) * (T::one() + x[j].abs());
            let mut xp = x.clone();
            let mut xm = x.clone();
            xp[j] += h;
            xm[j] -= h;
            let (rp, rm) = (residual(&xp), residual(&xm));
            for i in 0..m {
                jac[i][j] = (rp[i] - rm[i]) / (h + h);
            }
        }
        let mut a = vec![vec![T::zero(); n]; n];
        let mut g = vec![T::zero(); n];
        for i in 0..m {
            for p in 0..n {
                g[p] += jac[i][p] * r[i];
                for q in 0..n {
                    a[p][q] += jac[i][p] * jac[i][q];
                }
            }
        }
        let mut improved = false;
        for _ in 0..30 {
            let mut damped = a.clone();
            for p in 0..n {
                damped[p][p] += mu * (a[p][p] + T::lit(1e-30));
            }
            let Some(delta) = solve(damped, g.iter().map(|v| -*v).collect()) else {
                mu *= T::lit(10.0);
                continue;
            };
            let xn: Vec<T> = x.iter().zip(&delta).map(|(a, d)| *a + *d).collect();
            let rn = residual(&xn);
            let cn = norm2(&rn);
            if cn.is_finite() && cn < cost {
                x = xn;
                r = rn;
                cost = cn;
                mu = (mu * T::lit(0.2)).max(T::lit(1e-12));
                improved = true;
                break;
            }
            mu *= T::lit(10.0);
            if mu > T::lit(1e16) {
                break;
            }
        }
        if !improved {
            break;
        }
    }
    (x, cost.sqrt())
}

/// Gaussian elimination with partial pivoting.
pub fn solve<T: Scalar>(mut a: Vec<Vec<T>>, mut b: Vec<T>) -> Option<Vec<T>> {
    let n = b.len();
    for k in 0..n {
        let p =
            (k..n).max_by(|i, j| a[*i][k].abs().partial_cmp(&a[*j][k].abs()).unwrap_or(std::cmp::Ordering::Equal))?;
        if a[p][k] == T::zero() || !a[p][k].is_finite() {
            return None;
        }
        a.swap(k, p);
        b.swap(k, p);
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            for j in k..n {
                let v = a[k][j];
                a[i][j] -= f * v;
            }
            let v = b[k];
            b[i] -= f * v;
        }
    }
    let mut x = vec![T::zero(); n];
    for k in (0..n).rev() {
        let s = (k + 1..n).fold(b[k], |s, j| s - a[k][j] * x[j]);
        x[k] = s / a[k][k];
    }
    Some(x)
}

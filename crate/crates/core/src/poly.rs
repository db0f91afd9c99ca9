//! Dense complex polynomials and their roots.
//!
//! Roots come from the eigenvalues of a balanced companion matrix, computed by
//! a shifted QR iteration on the (already Hessenberg) companion form, followed
//! by a Newton polish on the original coefficients.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{is_finite, one, zero, Scalar};

/// Coefficients in increasing degree: `c[0] + c[1] x + ...`.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<T> {
    c: Vec<Complex<T>>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(c: Vec<Complex<T>>) -> Self {
        if c.is_empty() {
            return Self { c: vec![zero()] };
        }
        Self { c }
    }

    pub fn constant(a: Complex<T>) -> Self {
        Self { c: vec![a] }
    }

    /// `a + b x`.
    pub fn linear(a: Complex<T>, b: Complex<T>) -> Self {
        Self { c: vec![a, b] }
    }

    pub fn x() -> Self {
        Self::linear(zero(), one())
    }

    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.c
    }

    /// Nominal degree (length minus one, leading zeros included).
    pub fn len_degree(&self) -> usize {
        self.c.len() - 1
    }

    pub fn max_abs(&self) -> T {
        self.c.iter().fold(T::zero(), |m, a| m.max(a.norm()))
    }

    pub fn eval(&self, x: Complex<T>) -> Complex<T> {
        self.c.iter().rev().fold(zero(), |acc, a| acc * x + a)
    }

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return Self::constant(zero());
        }
        Self::new(self.c[1..].iter().enumerate().map(|(k, a)| a * T::lit((k + 1) as f64)).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new(
            (0..n)
                .map(|k| self.c.get(k).copied().unwrap_or_else(zero) + o.c.get(k).copied().unwrap_or_else(zero))
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-one::<T>()))
    }

    pub fn scale(&self, a: Complex<T>) -> Self {
        Self::new(self.c.iter().map(|x| x * a).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = vec![zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Synthetic division by `x - r`: returns quotient and remainder.
    pub fn div_root(&self, r: Complex<T>) -> (Self, Complex<T>) {
        let n = self.c.len();
        if n == 1 {
            return (Self::constant(zero()), self.c[0]);
        }
        let mut q = vec![zero(); n - 1];
        let mut acc = self.c[n - 1];
        for k in (0..n - 1).rev() {
            q[k] = acc;
            acc = self.c[k] + acc * r;
        }
        (Self::new(q), acc)
    }

    /// Drops leading coefficients at most `rel` times the largest one.
    pub fn trimmed(&self, rel: T) -> Self {
        let cut = self.max_abs() * rel;
        let mut c = self.c.clone();
        while c.len() > 1 && c.last().is_some_and(|a| a.norm() <= cut) {
            c.pop();
        }
        Self::new(c)
    }

    /// All roots of the trimmed polynomial (leading coefficients below
    /// `rel · max|c|` are treated as zero, i.e. roots at infinity are dropped).
    pub fn roots(&self, rel: T) -> Result<Vec<Complex<T>>> {
        let p = self.trimmed(rel);
        let cut = p.max_abs() * rel;
        if p.max_abs() == T::zero() {
            return Err(Error::Degenerate("zero polynomial has no isolated roots".into()));
        }
        // Exact zeros at the origin factor out.
        let lead_zeros = p.c.iter().take_while(|a| a.norm() <= cut).count();
        let core = Self::new(p.c[lead_zeros..].to_vec());
        let mut roots = vec![zero(); lead_zeros];
        let d = core.len_degree();
        match d {
            0 => {}
            1 => roots.push(-core.c[0] / core.c[1]),
            _ => {
                let lead = core.c[d];
                let monic: Vec<Complex<T>> = core.c.iter().map(|a| a / lead).collect();
                let eig = companion_eigenvalues(&monic)?;
                let dp = core.derivative();
                roots.extend(eig.into_iter().map(|r| newton_polish(&core, &dp, r)));
            }
        }
        Ok(roots)
    }
}

fn newton_polish<T: Scalar>(p: &Poly<T>, dp: &Poly<T>, mut x: Complex<T>) -> Complex<T> {
    let mut fx = p.eval(x).norm();
    for _ in 0..3 {
        let d = dp.eval(x);
        if d.norm() == T::zero() {
            break;
        }
        let y = x - p.eval(x) / d;
        let fy = p.eval(y).norm();
        if !(fy < fx) {
            break;
        }
        x = y;
        fx = fy;
    }
    x
}

/// Eigenvalues of the companion matrix of a monic polynomial (`c[n] = 1`).
fn companion_eigenvalues<T: Scalar>(c: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
    let n = c.len() - 1;
    let mut h = vec![vec![zero::<T>(); n]; n];
    for j in 0..n {
        h[0][j] = -c[n - 1 - j];
    }
    for i in 1..n {
        h[i][i - 1] = one();
    }
    balance(&mut h);
    hessenberg_qr(h)
}

fn l1<T: Scalar>(z: Complex<T>) -> T {
    z.re.abs() + z.im.abs()
}

/// Diagonal similarity scaling by powers of two.
fn balance<T: Scalar>(a: &mut [Vec<Complex<T>>]) {
    let n = a.len();
    let two = T::lit(2.0);
    for _ in 0..100 {
        let mut done = true;
        for i in 0..n {
            let (mut col, mut row) = (T::zero(), T::zero());
            for j in 0..n {
                if j != i {
                    col += l1(a[j][i]);
                    row += l1(a[i][j]);
                }
            }
            if col == T::zero() || row == T::zero() {
                continue;
            }
            let total = col + row;
            let mut f = T::one();
            let mut cc = col;
            while cc < row / two {
                f *= two;
                cc *= two * two;
            }
            while cc > row * two {
                f /= two;
                cc /= two * two;
            }
            if (cc + row / f) < T::lit(0.95) * total {
                done = false;
                for j in 0..n {
                    a[i][j] /= f;
                    a[j][i] *= f;
                }
            }
        }
        if done {
            break;
        }
    }
}

/// Single-shift QR with Givens rotations and Wilkinson shifts on an upper
/// Hessenberg matrix.
fn hessenberg_qr<T: Scalar>(mut h: Vec<Vec<Complex<T>>>) -> Result<Vec<Complex<T>>> {
    let n = h.len();
    let eps = T::epsilon();
    let mut eig = Vec::with_capacity(n);
    let mut hi = n - 1;
    let mut iter = 0usize;
    loop {
        if hi == 0 {
            eig.push(h[0][0]);
            break;
        }
        let mut l = hi;
        while l > 0 {
            let s = l1(h[l - 1][l - 1]) + l1(h[l][l]);
            if l1(h[l][l - 1]) <= eps * s || h[l][l - 1].norm() == T::zero() {
                h[l][l - 1] = zero();
                break;
            }
            l -= 1;
        }
        if l == hi {
            eig.push(h[hi][hi]);
            hi -= 1;
            iter = 0;
            continue;
        }
        iter += 1;
        if iter > 60 * n {
            return Err(Error::Internal("companion QR did not converge".into()));
        }
        let mu = if iter.is_multiple_of(11) {
            // exceptional shift
            h[hi][hi] + Complex::new(T::lit(0.75), T::lit(0.43)) * h[hi][hi - 1].norm()
        } else {
            wilkinson(h[hi - 1][hi - 1], h[hi - 1][hi], h[hi][hi - 1], h[hi][hi])
        };
        for k in l..=hi {
            h[k][k] -= mu;
        }
        let mut rots = Vec::with_capacity(hi - l);
        for k in l..hi {
            let (x, y) = (h[k][k], h[k + 1][k]);
            let r = (x.norm_sqr() + y.norm_sqr()).sqrt();
            if r == T::zero() {
                rots.push((one(), zero()));
                continue;
            }
            let (c, s) = (x / r, y / r);
            for j in k..=hi {
                let (a, b) = (h[k][j], h[k + 1][j]);
                h[k][j] = c.conj() * a + s.conj() * b;
                h[k + 1][j] = -s * a + c * b;
            }
            rots.push((c, s));
        }
        for (idx, (c, s)) in rots.into_iter().enumerate() {
            let k = l + idx;
            for i in l..=(k + 1).min(hi) {
                let (a, b) = (h[i][k], h[i][k + 1]);
                h[i][k] = a * c + b * s;
                h[i][k + 1] = -a * s.conj() + b * c.conj();
            }
        }
        for k in l..=hi {
            h[k][k] += mu;
        }
    }
    Ok(eig)
}

fn wilkinson<T: Scalar>(a: Complex<T>, b: Complex<T>, c: Complex<T>, d: Complex<T>) -> Complex<T> {
    let half = T::lit(0.5);
    let m = (a + d) * half;
    let disc = ((a - d) * half * (a - d) * half + b * c).sqrt();
    let (r1, r2) = (m + disc, m - disc);
    if (r1 - d).norm() <= (r2 - d).norm() {
        r1
    } else {
        r2
    }
}

/// Groups roots closer than `tol` and returns each group's centroid with its size.
pub fn cluster_roots<T: Scalar>(roots: &[Complex<T>], tol: T) -> Vec<(Complex<T>, usize)> {
    let mut groups: Vec<(Complex<T>, usize)> = Vec::new();
    for &r in roots {
        match groups.iter_mut().find(|(c, _)| (*c - r).norm() <= tol) {
            Some((c, k)) => {
                let kk = T::lit(*k as f64);
                *c = (*c * kk + r) / (kk + T::one());
                *k += 1;
            }
            None => groups.push((r, 1)),
        }
    }
    groups
}

impl<T: Scalar> Poly<T> {
    /// Roots merged by [`cluster_roots`], each multiple root refined as a
    /// simple root of the matching derivative.
    pub fn clustered_roots(&self, rel: T, tol: T) -> Result<Vec<(Complex<T>, usize)>> {
        let roots = self.roots(rel)?;
        let mut groups = cluster_roots(&roots, tol);
        for (c, m) in groups.iter_mut().filter(|(_, m)| *m > 1) {
            let d = (1..*m).fold(self.clone(), |q, _| q.derivative());
            let dd = d.derivative();
            let mut x = *c;
            for _ in 0..8 {
                let den = dd.eval(x);
                if den.norm() == T::zero() {
                    break;
                }
                let step = d.eval(x) / den;
                x -= step;
                if step.norm() <= T::epsilon() * x.norm().max(T::one()) {
                    break;
                }
            }
            if is_finite(x) && (x - *c).norm() <= tol {
                *c = x;
            }
        }
        Ok(groups)
    }
}

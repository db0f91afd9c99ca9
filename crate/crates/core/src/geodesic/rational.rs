use num_complex::Complex;

use crate::poly::Poly;
use crate::scalar::{one, Scalar};
use crate::symm::{RoyalAutomorphism, SymPoint};

/// An analytic disc `λ ↦ (s_num/den, p_num/den)` with polynomial parts.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalDisc<T> {
    pub s_num: Poly<T>,
    pub p_num: Poly<T>,
    pub den: Poly<T>,
}

impl<T: Scalar> RationalDisc<T> {
    /// `None` at (numerical) poles.
    pub fn eval(&self, l: Complex<T>) -> Option<SymPoint<T>> {
        let d = self.den.eval(l);
        if d.norm() <= T::tol(1e-12) * self.den.max_abs() {
            return None;
        }
        Some(SymPoint::new(self.s_num.eval(l) / d, self.p_num.eval(l) / d))
    }

    /// Numerator of `s² - 4p` over the common denominator `den²`.
    pub fn psi_numerator(&self) -> Poly<T> {
        self.s_num.mul(&self.s_num).sub(&self.p_num.mul(&self.den).scale(Complex::new(T::lit(4.0), T::zero())))
    }

    /// `B_a ∘ self`, still rational with the same degree pattern.
    pub fn transported(&self, b: &RoyalAutomorphism<T>) -> Self {
        let a = b.alpha();
        let ab = a.conj();
        let two = T::lit(2.0);
        let (n1, n2, e) = (&self.s_num, &self.p_num, &self.den);
        let d = e.sub(&n1.scale(ab)).add(&n2.scale(ab * ab));
        let s = e.scale(a * two).sub(&n1.scale(one::<T>() * (T::one() + a.norm_sqr()))).add(&n2.scale(ab * two));
        let p = e.scale(a * a).sub(&n1.scale(a)).add(n2);
        Self { s_num: s, p_num: p, den: d }
    }
}

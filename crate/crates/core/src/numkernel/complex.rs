//! Arbitrary-precision complex scalar built from two [`Real`] parts.

use super::real::Real;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A finite complex number with arbitrary-precision real and imaginary parts.
#[derive(Debug, Clone, PartialEq)]
pub struct Complex {
    re: Real,
    im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn zero(bits: u32) -> Self {
        Complex::new(Real::zero(bits), Real::zero(bits))
    }

    pub fn one(bits: u32) -> Self {
        Complex::new(Real::one(bits), Real::zero(bits))
    }

    pub fn from_real(re: Real) -> Self {
        let bits = re.prec();
        Complex::new(re, Real::zero(bits))
    }

    pub fn re(&self) -> &Real {
        &self.re
    }

    pub fn im(&self) -> &Real {
        &self.im
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Complex {
        Complex::new(self.re.clone(), self.im.neg_ref())
    }

    /// Modulus |z|.
    pub fn abs(&self) -> Real {
        self.re.hypot(&self.im)
    }

    /// |z|^2 without the square root.
    pub fn abs_sqr(&self) -> Real {
        self.re.mul_add_mul(&self.re, &self.im, &self.im)
    }

    /// Argument in (-pi, pi].
    pub fn arg(&self) -> Real {
        assert!(!self.is_zero(), "argument of zero");
        self.im.atan2(&self.re)
    }

    pub fn scale(&self, s: &Real) -> Complex {
        Complex::new(&self.re * s, &self.im * s)
    }

    pub fn recip(&self) -> Complex {
        let d = self.abs_sqr();
        assert!(!d.is_zero(), "reciprocal of complex zero");
        Complex::new(&self.re / &d, &(-&self.im) / &d)
    }

    /// z^n for integer n (negative allowed), by binary powering.
    pub fn powi(&self, n: i64) -> Complex {
        let bits = self.prec();
        if n == 0 {
            return Complex::one(bits);
        }
        let mut base = if n < 0 { self.recip() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Complex::one(bits);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// self + a*b in a single pass (two fused real operations per part).
    pub fn add_prod(&self, a: &Complex, b: &Complex) -> Complex {
        // re: self.re + a.re*b.re - a.im*b.im
        let re = &self.re + a.re.mul_sub_mul(&b.re, &a.im, &b.im);
        let im = &self.im + a.re.mul_add_mul(&b.im, &a.im, &b.re);
        Complex::new(re, im)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl Add<&Complex> for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&Complex> for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&Complex> for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        let re = self.re.mul_sub_mul(&rhs.re, &self.im, &rhs.im);
        let im = self.re.mul_add_mul(&rhs.im, &self.im, &rhs.re);
        Complex::new(re, im)
    }
}

impl Div<&Complex> for &Complex {
    type Output = Complex;
    fn div(self, rhs: &Complex) -> Complex {
        let d = rhs.abs_sqr();
        assert!(!d.is_zero(), "division by complex zero");
        let num = self * &rhs.conj();
        Complex::new(&num.re / &d, &num.im / &d)
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(self.re.neg_ref(), self.im.neg_ref())
    }
}

macro_rules! owned_variants {
    ($trait:ident, $method:ident) => {
        impl $trait<Complex> for Complex {
            type Output = Complex;
            fn $method(self, rhs: Complex) -> Complex {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Complex> for Complex {
            type Output = Complex;
            fn $method(self, rhs: &Complex) -> Complex {
                (&self).$method(rhs)
            }
        }
        impl $trait<Complex> for &Complex {
            type Output = Complex;
            fn $method(self, rhs: Complex) -> Complex {
                self.$method(&rhs)
            }
        }
    };
}

owned_variants!(Add, add);
owned_variants!(Sub, sub);
owned_variants!(Mul, mul);
owned_variants!(Div, div);

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        -&self
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.is_sign_negative() {
            write!(f, "{} - {}i", self.re, self.im.abs())
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(Real::from_f64(128, re), Real::from_f64(128, im))
    }

    #[test]
    fn mul_and_div_roundtrip() {
        let a = c(1.5, -2.0);
        let b = c(0.25, 3.0);
        let p = &a * &b;
        assert_eq!(p.to_f64_pair(), (1.5 * 0.25 - (-2.0) * 3.0, 1.5 * 3.0 + (-2.0) * 0.25));
        let q = &p / &b;
        assert!(q.re().rel_distance(a.re()).to_f64() < 1e-30);
        assert!(q.im().rel_distance(a.im()).to_f64() < 1e-30);
    }

    #[test]
    fn powi_negative() {
        let a = c(0.0, 2.0);
        let inv_sq = a.powi(-2);
        // (2i)^-2 = -1/4
        assert!((inv_sq.re().to_f64() + 0.25).abs() < 1e-30);
        assert!(inv_sq.im().is_zero() || inv_sq.im().to_f64().abs() < 1e-30);
    }

    #[test]
    fn abs_of_three_four() {
        assert_eq!(c(3.0, 4.0).abs().to_f64(), 5.0);
    }
}

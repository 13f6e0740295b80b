//! Arbitrary-precision real scalar.

use rug::float::Constant;
use rug::ops::{CompleteRound, Pow};
use rug::{Assign, Float};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A finite arbitrary-precision real number.
///
/// Thin wrapper over an MPFR float. The precision travels with the value;
/// binary operations produce results at the larger operand precision, so
/// values constructed under one [`super::PrecisionContext`] stay at that
/// context's precision throughout.
#[derive(Debug, Clone)]
pub struct Real(Float);

fn guard(f: Float) -> Real {
    assert!(
        f.is_finite(),
        "non-finite value in arbitrary-precision arithmetic (overflow or 0/0)"
    );
    Real(f)
}

impl Real {
    pub fn zero(bits: u32) -> Self {
        Real(Float::new(bits))
    }

    pub fn one(bits: u32) -> Self {
        Real(Float::with_val(bits, 1))
    }

    pub fn from_u64(bits: u32, v: u64) -> Self {
        Real(Float::with_val(bits, v))
    }

    pub fn from_i64(bits: u32, v: i64) -> Self {
        Real(Float::with_val(bits, v))
    }

    pub fn from_f64(bits: u32, v: f64) -> Self {
        assert!(v.is_finite(), "cannot build Real from non-finite f64");
        Real(Float::with_val(bits, v))
    }

    pub fn parse(bits: u32, s: &str) -> crate::Result<Self> {
        let inc = Float::parse(s)
            .map_err(|e| crate::Error::Invalid(format!("cannot parse number {s:?}: {e}")))?;
        let f = Float::with_val(bits, inc);
        if !f.is_finite() {
            return Err(crate::Error::Invalid(format!("non-finite number {s:?}")));
        }
        Ok(Real(f))
    }

    pub fn pow2(bits: u32, exp: i64) -> Self {
        let mut f = Float::with_val(bits, 1);
        f <<= exp as i32;
        guard(f)
    }

    pub fn pi(bits: u32) -> Self {
        Real(Float::with_val(bits, Constant::Pi))
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative() && !self.0.is_zero()
    }

    /// Binary exponent of the value, `None` for zero.
    pub fn exponent(&self) -> Option<i64> {
        self.0.get_exp().map(|e| e as i64)
    }

    pub fn abs(&self) -> Real {
        guard(self.0.clone().abs())
    }

    pub fn neg_ref(&self) -> Real {
        guard((-&self.0).complete(self.0.prec()))
    }

    pub fn sqrt(&self) -> Real {
        assert!(!self.0.is_sign_negative() || self.0.is_zero(), "sqrt of negative value");
        guard(self.0.clone().sqrt())
    }

    pub fn recip(&self) -> Real {
        assert!(!self.0.is_zero(), "reciprocal of zero");
        guard(self.0.clone().recip())
    }

    pub fn square(&self) -> Real {
        guard(self.0.clone().square())
    }

    pub fn ln(&self) -> Real {
        assert!(self.0.is_sign_positive() && !self.0.is_zero(), "ln of non-positive value");
        guard(self.0.clone().ln())
    }

    pub fn exp(&self) -> Real {
        guard(self.0.clone().exp())
    }

    pub fn powi(&self, n: i64) -> Real {
        guard(self.0.clone().pow(n as i32))
    }

    pub fn pow_real(&self, e: &Real) -> Real {
        guard(self.0.clone().pow(&e.0))
    }

    /// Positive n-th root of a nonnegative value.
    pub fn nth_root(&self, n: u64) -> Real {
        assert!(n > 0);
        assert!(!self.is_sign_negative(), "nth_root of negative value");
        guard(self.0.clone().root(n as u32))
    }

    pub fn hypot(&self, other: &Real) -> Real {
        guard(self.0.clone().hypot(&other.0))
    }

    pub fn atan2(&self, x: &Real) -> Real {
        guard(self.0.clone().atan2(&x.0))
    }

    pub fn sin_cos(&self) -> (Real, Real) {
        let (s, c) = self.0.clone().sin_cos(Float::new(self.0.prec()));
        (guard(s), guard(c))
    }

    pub fn max_ref(&self, other: &Real) -> Real {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn min_ref(&self, other: &Real) -> Real {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// self*b + c*d in one rounding.
    pub fn mul_add_mul(&self, b: &Real, c: &Real, d: &Real) -> Real {
        guard(self.0.clone().mul_add_mul(&b.0, &c.0, &d.0))
    }

    /// self*b - c*d in one rounding.
    pub fn mul_sub_mul(&self, b: &Real, c: &Real, d: &Real) -> Real {
        guard(self.0.clone().mul_sub_mul(&b.0, &c.0, &d.0))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    /// Factorial as a context-precision scalar.
    pub fn factorial(bits: u32, n: u64) -> Real {
        guard(Float::with_val(bits, Float::factorial(n as u32)))
    }

    /// Relative distance |a-b| / max(|a|,|b|), zero when both are zero.
    pub fn rel_distance(&self, other: &Real) -> Real {
        let bits = self.prec().max(other.prec());
        let diff = (self - other).abs();
        let scale = self.abs().max_ref(&other.abs());
        if scale.is_zero() {
            Real::zero(bits)
        } else {
            &diff / &scale
        }
    }

    /// Scientific-notation decimal string with `digits` significant digits.
    /// Canonical form `[-]d.dd...e[+|-]X`; the representation is deterministic
    /// for a given value, digit count, and precision.
    pub fn to_sci_string(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.0.is_zero() {
            let zeros = "0".repeat(digits.saturating_sub(1));
            return if zeros.is_empty() {
                "0e+0".to_string()
            } else {
                format!("0.{zeros}e+0")
            };
        }
        let raw = self.0.to_string_radix(10, Some(digits));
        normalize_sci(&raw, digits)
    }
}

/// Rewrite rug's decimal output (`120.000`, `1.25e-3`, `-0.0031`) into the
/// canonical `[-]d.dd...e[+|-]X` form with a fixed digit count.
fn normalize_sci(raw: &str, digits: usize) -> String {
    let (sign, body) = match raw.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", raw),
    };
    let (mantissa, exp10) = match body.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().expect("exponent in rug output")),
        None => (body, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let mut all: String = int_part.chars().chain(frac_part.chars()).collect();
    // Exponent of the leading digit relative to the decimal point.
    let mut lead_exp = int_part.len() as i64 - 1 + exp10;
    // Strip leading zeros (values printed as 0.00123).
    while all.len() > 1 && all.starts_with('0') {
        all.remove(0);
        lead_exp -= 1;
    }
    while all.len() < digits {
        all.push('0');
    }
    all.truncate(digits);
    let (head, tail) = all.split_at(1);
    let exp_str = if lead_exp < 0 {
        format!("-{}", -lead_exp)
    } else {
        format!("+{lead_exp}")
    };
    if tail.is_empty() {
        format!("{sign}{head}e{exp_str}")
    } else {
        format!("{sign}{head}.{tail}e{exp_str}")
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sci_string(20))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                let p = self.0.prec().max(rhs.0.prec());
                guard((&self.0 $op &rhs.0).complete(p))
            }
        }
        impl $trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl $trait<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Div<&Real> for &Real {
    type Output = Real;
    fn div(self, rhs: &Real) -> Real {
        assert!(!rhs.0.is_zero(), "division by exact zero");
        let p = self.0.prec().max(rhs.0.prec());
        guard((&self.0 / &rhs.0).complete(p))
    }
}
impl Div<Real> for Real {
    type Output = Real;
    fn div(self, rhs: Real) -> Real {
        (&self).div(&rhs)
    }
}
impl Div<&Real> for Real {
    type Output = Real;
    fn div(self, rhs: &Real) -> Real {
        (&self).div(rhs)
    }
}
impl Div<Real> for &Real {
    type Output = Real;
    fn div(self, rhs: Real) -> Real {
        self.div(&rhs)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        self.neg_ref()
    }
}
impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        self.neg_ref()
    }
}

/// Crate-internal access to the raw MPFR value for hot kernels that reuse
/// buffers instead of allocating per operation.
impl Real {
    pub(crate) fn raw(&self) -> &Float {
        &self.0
    }

    pub(crate) fn raw_mut(&mut self) -> &mut Float {
        &mut self.0
    }

    pub(crate) fn from_raw(f: Float) -> Real {
        guard(f)
    }

    pub(crate) fn assign_raw(&mut self, f: &Float) {
        self.0.assign(f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_keeps_precision() {
        let a = Real::from_f64(384, 1.5);
        let b = Real::from_f64(384, 2.25);
        assert_eq!((&a + &b).prec(), 384);
        assert_eq!((&a * &b).to_f64(), 3.375);
    }

    #[test]
    fn fused_ops() {
        let bits = 128;
        let a = Real::from_f64(bits, 3.0);
        let b = Real::from_f64(bits, 4.0);
        let c = Real::from_f64(bits, 5.0);
        let d = Real::from_f64(bits, 6.0);
        assert_eq!(a.mul_add_mul(&b, &c, &d).to_f64(), 42.0);
        assert_eq!(a.mul_sub_mul(&b, &c, &d).to_f64(), -18.0);
    }

    #[test]
    fn sci_string_forms() {
        let bits = 128;
        assert_eq!(Real::from_f64(bits, 120.0).to_sci_string(6), "1.20000e+2");
        assert_eq!(Real::from_f64(bits, 0.125).to_sci_string(4), "1.250e-1");
        assert_eq!(Real::from_f64(bits, -0.125).to_sci_string(3), "-1.25e-1");
        assert_eq!(Real::zero(bits).to_sci_string(3), "0.00e+0");
        assert_eq!(Real::from_f64(bits, 1.0).to_sci_string(1), "1e+0");
        let third = &Real::one(bits) / &Real::from_f64(bits, 3.0);
        assert_eq!(third.to_sci_string(5), "3.3333e-1");
    }

    #[test]
    fn pow2_and_exponent() {
        let t = Real::pow2(128, -100);
        assert_eq!(t.exponent(), Some(-99));
        assert_eq!(t.to_f64(), 2f64.powi(-100));
        assert_eq!(Real::zero(128).exponent(), None);
    }

    #[test]
    #[should_panic(expected = "division by exact zero")]
    fn div_by_zero_panics() {
        let _ = &Real::one(64) / &Real::zero(64);
    }

    #[test]
    fn rel_distance_zero_for_equal_zeros() {
        let z = Real::zero(64);
        assert!(z.rel_distance(&Real::zero(64)).is_zero());
    }
}

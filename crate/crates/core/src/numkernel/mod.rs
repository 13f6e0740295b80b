//! Arbitrary-precision scalars and dense matrices with determinants and SVD.
//!
//! Everything downstream (Hankel determinants, AAK spectra, conformal maps)
//! runs on the three types defined here: [`Real`], [`Complex`], and
//! [`DenseMatrix`], all parameterized by a [`PrecisionContext`].
//!
//! Arithmetic is backed by MPFR through the `rug` crate. Values are binary
//! floating point with a fixed mantissa length; every scalar produced under a
//! context carries exactly that context's precision. Non-finite values are
//! never stored: an operation that would produce NaN or infinity panics, since
//! at the exponent ranges MPFR supports this indicates a programming error
//! (division by an unguarded exact zero), not legitimate overflow.

mod complex;
mod lu;
mod matrix;
mod real;
mod svd;

pub use complex::Complex;
pub use lu::lu_det;
pub use matrix::DenseMatrix;
pub use real::Real;
pub use svd::{dominant_singular_values, jacobi_svd, Svd};

/// Rounding mode applied by scalar constructors. MPFR's round-to-nearest,
/// ties-to-even is the only mode the laboratory uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoundMode {
    NearestEven,
}

/// Working precision shared by a family of computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecisionContext {
    bits: u32,
    round: RoundMode,
}

/// Default mantissa length. Products of m+1 approximation errors at n near 50
/// reach magnitudes around 1e-50; 384 bits leaves roughly sixty decimal digits
/// of headroom over the smallest target quantity.
pub const DEFAULT_PRECISION_BITS: u32 = 384;

/// Hard cap on matrix dimensions accepted by constructors.
pub const DEFAULT_DIM_CAP: usize = 2048;

impl PrecisionContext {
    /// A context with the given mantissa length. Requires `bits >= 64`.
    pub fn new(bits: u32) -> crate::Result<Self> {
        if bits < 64 {
            return Err(crate::Error::Invalid(format!(
                "precision must be at least 64 bits, got {bits}"
            )));
        }
        Ok(PrecisionContext {
            bits,
            round: RoundMode::NearestEven,
        })
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn round_mode(&self) -> RoundMode {
        self.round
    }

    pub fn real_zero(&self) -> Real {
        Real::zero(self.bits)
    }

    pub fn real_from_u64(&self, v: u64) -> Real {
        Real::from_u64(self.bits, v)
    }

    pub fn real_from_i64(&self, v: i64) -> Real {
        Real::from_i64(self.bits, v)
    }

    pub fn real_from_f64(&self, v: f64) -> Real {
        Real::from_f64(self.bits, v)
    }

    /// Parse a decimal string (integer, fixed point, or scientific).
    pub fn real_parse(&self, s: &str) -> crate::Result<Real> {
        Real::parse(self.bits, s)
    }

    /// Exact rational p/q rounded once to context precision.
    pub fn real_ratio(&self, p: i64, q: i64) -> Real {
        assert!(q != 0, "zero denominator");
        &self.real_from_i64(p) / &self.real_from_i64(q)
    }

    pub fn complex_zero(&self) -> Complex {
        Complex::new(self.real_zero(), self.real_zero())
    }

    pub fn complex_from_f64(&self, re: f64, im: f64) -> Complex {
        Complex::new(self.real_from_f64(re), self.real_from_f64(im))
    }

    pub fn complex_from_real(&self, re: Real) -> Complex {
        let im = self.real_zero();
        Complex::new(re, im)
    }

    /// 2^exp as a context-precision scalar; the usual way thresholds like
    /// 2^(16-bits) are materialized.
    pub fn real_pow2(&self, exp: i64) -> Real {
        Real::pow2(self.bits, exp)
    }

    pub fn pi(&self) -> Real {
        Real::pi(self.bits)
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext {
            bits: DEFAULT_PRECISION_BITS,
            round: RoundMode::NearestEven,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_rejects_small_precision() {
        assert!(PrecisionContext::new(32).is_err());
        assert!(PrecisionContext::new(64).is_ok());
    }

    #[test]
    fn ratio_matches_parse() {
        let ctx = PrecisionContext::default();
        let a = ctx.real_ratio(1, 8);
        let b = ctx.real_parse("0.125").unwrap();
        assert_eq!(a, b);
    }
}

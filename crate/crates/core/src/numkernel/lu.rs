//! Determinant via LU with partial pivoting.

use super::{Complex, DenseMatrix, PrecisionContext, Real};
use crate::{Error, Result};

/// Determinant of a square matrix by LU factorization with partial pivoting.
///
/// A pivot whose modulus falls below `2^(16 - bits) * max|entry|` is treated as
/// a structurally dependent column and the determinant is returned as exact
/// zero. This separates genuine rank deficiency (Kronecker-type Hankel
/// matrices of rational symbols) from roundoff residue.
pub fn lu_det(m: &DenseMatrix, ctx: &PrecisionContext) -> Result<Complex> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant requires a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let bits = ctx.bits();

    // Threshold in the squared-modulus domain to avoid square roots.
    let max_abs = m.max_abs();
    let zero_thresh_sqr = if max_abs.is_zero() {
        Real::zero(bits)
    } else {
        (ctx.real_pow2(16 - bits as i64) * &max_abs).square()
    };

    let mut a: Vec<Vec<Complex>> = (0..n)
        .map(|i| (0..n).map(|j| m.at(i, j).clone()).collect())
        .collect();

    let mut det = Complex::one(bits);
    let mut negate = false;

    for k in 0..n {
        // Partial pivoting on |.|^2.
        let mut best = k;
        let mut best_sqr = a[k][k].abs_sqr();
        for i in (k + 1)..n {
            let s = a[i][k].abs_sqr();
            if s > best_sqr {
                best_sqr = s;
                best = i;
            }
        }
        if max_abs.is_zero() || best_sqr <= zero_thresh_sqr {
            return Ok(ctx.complex_zero());
        }
        if best != k {
            a.swap(k, best);
            negate = !negate;
        }
        let pivot = a[k][k].clone();
        det = &det * &pivot;
        let pivot_inv = pivot.recip();
        for i in (k + 1)..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = &a[i][k] * &pivot_inv;
            let neg_factor = -&factor;
            for j in (k + 1)..n {
                let prod = &neg_factor * &a[k][j];
                a[i][j] = &a[i][j] + &prod;
            }
            a[i][k] = Complex::zero(bits);
        }
    }

    if negate {
        det = -det;
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    #[test]
    fn one_by_one_is_identity_case() {
        let c = ctx();
        let m = DenseMatrix::from_f64_rows(&[vec![(2.5, -1.0)]], c.bits()).unwrap();
        let d = lu_det(&m, &c).unwrap();
        assert_eq!(d, *m.at(0, 0));
    }

    #[test]
    fn identity_matrix() {
        let c = ctx();
        let m = DenseMatrix::identity(2, c.bits()).unwrap();
        assert_eq!(lu_det(&m, &c).unwrap(), Complex::one(c.bits()));
    }

    #[test]
    fn singular_matrix_gives_exact_zero() {
        let c = ctx();
        let m = DenseMatrix::from_f64_rows(
            &[
                vec![(1.0, 0.0), (2.0, 0.0)],
                vec![(2.0, 0.0), (4.0, 0.0)],
            ],
            c.bits(),
        )
        .unwrap();
        let d = lu_det(&m, &c).unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn non_square_rejected() {
        let c = ctx();
        let m = DenseMatrix::zeros(2, 3, c.bits()).unwrap();
        assert!(matches!(lu_det(&m, &c), Err(Error::Dimension(_))));
    }

    #[test]
    fn sign_from_row_swap() {
        let c = ctx();
        // [[0,1],[1,0]] has determinant -1 and needs a pivot swap.
        let m = DenseMatrix::from_f64_rows(
            &[vec![(0.0, 0.0), (1.0, 0.0)], vec![(1.0, 0.0), (0.0, 0.0)]],
            c.bits(),
        )
        .unwrap();
        let d = lu_det(&m, &c).unwrap();
        assert_eq!(d.re().to_f64(), -1.0);
        assert!(d.im().is_zero());
    }
}

//! Singular value decomposition by Jacobi iteration.
//!
//! The public entry point is [`jacobi_svd`]. General matrices go through
//! one-sided Jacobi on columns: rotations are applied on the right until the
//! implicit Gram matrix is diagonal to tolerance, at which point column norms
//! are the singular values and the accumulated rotations are the right
//! singular vectors. Real symmetric input is detected and routed through a
//! two-sided cyclic Jacobi eigensolver instead; the eigenvector matrix is a
//! valid right singular vector basis and the singular values are the absolute
//! eigenvalues. Both kernels share the rotation algebra and the convergence
//! policy (relative threshold, capped sweep count).

use super::{Complex, DenseMatrix, PrecisionContext, Real};
use crate::{Error, Result};
use rug::ops::CompleteRound;
use rug::{Assign, Float};
use std::mem;

/// Sweep cap before a convergence error is raised.
pub const SWEEP_CAP: u32 = 64;

/// Default relative tolerance exponent: rotations stop once all off-diagonal
/// Gram entries fall below `2^(32 - bits)` relative to the diagonal scale.
pub fn default_tol(ctx: &PrecisionContext) -> Real {
    ctx.real_pow2(32 - ctx.bits() as i64)
}

/// Result of a decomposition: descending nonnegative values and a
/// column-orthonormal matrix of right singular vectors.
#[derive(Debug, Clone)]
pub struct Svd {
    pub values: Vec<Real>,
    pub right_vectors: DenseMatrix,
}

/// One-sided Jacobi SVD (with a two-sided fast path for real symmetric input).
///
/// Requires `rows >= cols` and `tol > 0`. Values are sorted descending;
/// right vectors are column-orthonormal to tolerance and phase-normalized so
/// that each column's largest-modulus entry is positive real.
pub fn jacobi_svd(m: &DenseMatrix, ctx: &PrecisionContext, tol: &Real) -> Result<Svd> {
    if m.rows() < m.cols() {
        return Err(Error::Dimension(format!(
            "jacobi_svd requires rows >= cols, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if tol.is_zero() || tol.is_sign_negative() {
        return Err(Error::Invalid("tolerance must be positive".into()));
    }
    let mut svd = if m.is_real() && m.is_symmetric() {
        symmetric_eigen_svd(m, ctx, tol)?
    } else {
        one_sided_svd(m, ctx, tol)?
    };
    normalize_phases(&mut svd.right_vectors);
    Ok(svd)
}

/// First `count` singular values of [`jacobi_svd`], identical to the full
/// decomposition's prefix.
pub fn dominant_singular_values(
    m: &DenseMatrix,
    count: usize,
    ctx: &PrecisionContext,
    tol: &Real,
) -> Result<Vec<Real>> {
    if count == 0 || count > m.cols() {
        return Err(Error::Dimension(format!(
            "count {} out of range 1..={}",
            count,
            m.cols()
        )));
    }
    let mut svd = jacobi_svd(m, ctx, tol)?;
    svd.values.truncate(count);
    Ok(svd.values)
}

/// Jacobi rotation parameters for the symmetric 2x2 [[app, g], [g, aqq]]
/// with g > 0: returns (c, s, t) with tan(theta) = t, |t| <= 1.
fn rotation_params(app: &Real, aqq: &Real, g: &Real) -> (Real, Real, Real) {
    let bits = g.prec();
    let two = Real::from_u64(bits, 2);
    let tau = &(aqq - app) / &(&two * g);
    let one = Real::one(bits);
    let t = if tau.is_zero() {
        one.clone()
    } else {
        let denom = tau.abs() + (&one + tau.square()).sqrt();
        let mag = &one / &denom;
        if tau.is_sign_negative() {
            -mag
        } else {
            mag
        }
    };
    let c = (&one / &(&one + t.square())).sqrt();
    let s = &c * &t;
    (c, s, t)
}

fn one_sided_svd(m: &DenseMatrix, ctx: &PrecisionContext, tol: &Real) -> Result<Svd> {
    let rows = m.rows();
    let cols = m.cols();
    let bits = ctx.bits();
    let tol_sqr = tol.square();

    // Column-major working copies.
    let mut a: Vec<Vec<Complex>> = (0..cols).map(|j| m.col(j).cloned().collect()).collect();
    let mut v: Vec<Vec<Complex>> = (0..cols)
        .map(|j| {
            (0..cols)
                .map(|i| {
                    if i == j {
                        Complex::one(bits)
                    } else {
                        Complex::zero(bits)
                    }
                })
                .collect()
        })
        .collect();

    // Squared column norms, kept current across rotations.
    let mut norms_sqr: Vec<Real> = a.iter().map(|col| col_norm_sqr(col, bits)).collect();

    let mut last_residual_sqr = Real::zero(bits);
    let mut converged = false;
    for _sweep in 0..SWEEP_CAP {
        let mut max_ratio_sqr = Real::zero(bits);
        let mut rotated = false;
        for p in 0..cols.saturating_sub(1) {
            for q in (p + 1)..cols {
                let apq = dot_conj(&a[p], &a[q], bits);
                if apq.is_zero() {
                    continue;
                }
                let denom = &norms_sqr[p] * &norms_sqr[q];
                if denom.is_zero() {
                    // A zero column cannot have a nonzero cross product.
                    continue;
                }
                let apq_sqr = apq.abs_sqr();
                let ratio_sqr = &apq_sqr / &denom;
                if ratio_sqr > max_ratio_sqr {
                    max_ratio_sqr = ratio_sqr.clone();
                }
                if ratio_sqr <= tol_sqr {
                    continue;
                }
                rotated = true;
                let g = apq.abs();
                let (c, s, t) = rotation_params(&norms_sqr[p], &norms_sqr[q], &g);
                // Unit phase of the cross product; rotation columns are
                // (c, -s*conj(u)) and (s, c*conj(u)).
                let u_conj = apq.conj().scale(&g.recip());
                let su = u_conj.scale(&s);
                let cu = u_conj.scale(&c);
                rotate_pair(&mut a, p, q, rows, &c, &s, &su, &cu);
                rotate_pair(&mut v, p, q, cols, &c, &s, &su, &cu);
                let shift = &t * &g;
                norms_sqr[p] = &norms_sqr[p] - &shift;
                norms_sqr[q] = &norms_sqr[q] + &shift;
            }
        }
        last_residual_sqr = max_ratio_sqr.clone();
        if !rotated || max_ratio_sqr <= tol_sqr {
            converged = true;
            break;
        }
        // Refresh cached norms once per sweep against drift.
        for (j, col) in a.iter().enumerate() {
            norms_sqr[j] = col_norm_sqr(col, bits);
        }
    }
    if !converged {
        return Err(Error::Convergence {
            sweeps: SWEEP_CAP,
            residual: last_residual_sqr.sqrt().to_f64(),
        });
    }

    let mut values: Vec<Real> = a.iter().map(|col| col_norm_sqr(col, bits).sqrt()).collect();
    let mut order: Vec<usize> = (0..cols).collect();
    order.sort_by(|&i, &j| values[j].partial_cmp(&values[i]).unwrap().then(i.cmp(&j)));
    values = order.iter().map(|&i| values[i].clone()).collect();
    let right_vectors =
        DenseMatrix::from_fn(cols, cols, |i, j| v[order[j]][i].clone())?;
    Ok(Svd {
        values,
        right_vectors,
    })
}

fn col_norm_sqr(col: &[Complex], bits: u32) -> Real {
    let mut acc = Real::zero(bits);
    for z in col {
        acc = acc + z.abs_sqr();
    }
    acc
}

fn dot_conj(a: &[Complex], b: &[Complex], bits: u32) -> Complex {
    let mut acc = Complex::zero(bits);
    for (x, y) in a.iter().zip(b) {
        acc = acc.add_prod(&x.conj(), y);
    }
    acc
}

fn rotate_pair(
    cols: &mut [Vec<Complex>],
    p: usize,
    q: usize,
    len: usize,
    c: &Real,
    s: &Real,
    su: &Complex,
    cu: &Complex,
) {
    let (head, tail) = cols.split_at_mut(q);
    let col_p = &mut head[p];
    let col_q = &mut tail[0];
    for i in 0..len {
        let xp = col_p[i].clone();
        let xq = col_q[i].clone();
        // col_p[i] = c*xp - su*xq ; col_q[i] = s*xp + cu*xq
        col_p[i] = &xp.scale(c) - &(su * &xq);
        col_q[i] = &xp.scale(s) + &(cu * &xq);
    }
}

/// Two-sided cyclic Jacobi on a real symmetric matrix, working on raw MPFR
/// floats with preallocated temporaries. Returns |eigenvalues| sorted
/// descending with the correspondingly permuted eigenvector columns.
fn symmetric_eigen_svd(m: &DenseMatrix, ctx: &PrecisionContext, tol: &Real) -> Result<Svd> {
    let n = m.rows();
    let bits = ctx.bits();
    let tol_sqr = tol.square();

    let mut h: Vec<Float> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            h.push(m.at(i, j).re().raw().clone());
        }
    }
    let mut v: Vec<Float> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            v.push(Float::with_val(bits, u32::from(i == j)));
        }
    }

    // Absolute floor: entries this far below the matrix scale are beyond the
    // ultimate attainable accuracy and are skipped to guarantee termination.
    let scale = m.max_abs();
    let floor_sqr = if scale.is_zero() {
        Real::zero(bits)
    } else {
        (ctx.real_pow2(-(bits as i64) - 64) * &scale).square()
    };

    let mut t1 = Float::new(bits);
    let mut t2 = Float::new(bits);

    let mut last_residual_sqr = Real::zero(bits);
    let mut converged = scale.is_zero();
    for _sweep in 0..SWEEP_CAP {
        if converged {
            break;
        }
        let mut rotated = false;
        let mut max_ratio_sqr = Real::zero(bits);
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let hpq = Real::from_raw(h[p * n + q].clone());
                if hpq.is_zero() {
                    continue;
                }
                let hpq_sqr = hpq.square();
                if hpq_sqr <= floor_sqr {
                    continue;
                }
                let hpp = Real::from_raw(h[p * n + p].clone());
                let hqq = Real::from_raw(h[q * n + q].clone());
                let diag_sqr = (&hpp * &hqq).abs();
                if !diag_sqr.is_zero() {
                    let ratio_sqr = &hpq_sqr / &diag_sqr;
                    if ratio_sqr > max_ratio_sqr {
                        max_ratio_sqr = ratio_sqr.clone();
                    }
                    if ratio_sqr <= tol_sqr {
                        continue;
                    }
                }
                rotated = true;
                let g = hpq.abs();
                let (c, s, t) = rotation_params(&hpp, &hqq, &g);
                // Fold the sign of the pivot into s: the rotation below
                // annihilates [[hpp, g],[g, hqq]]; for negative hpq the
                // rotation angle flips sign.
                let (s, t) = if hpq.is_sign_negative() {
                    (-s, -t)
                } else {
                    (s, t)
                };
                let (cf, sf) = (c.raw(), s.raw());

                // Rows and columns p, q.
                for i in 0..n {
                    if i == p || i == q {
                        continue;
                    }
                    let ip = i * n + p;
                    let iq = i * n + q;
                    t1.assign(cf.mul_sub_mul_ref(&h[ip], sf, &h[iq]));
                    t2.assign(sf.mul_add_mul_ref(&h[ip], cf, &h[iq]));
                    mem::swap(&mut h[ip], &mut t1);
                    mem::swap(&mut h[iq], &mut t2);
                    let (pi, qi) = (p * n + i, q * n + i);
                    t1.assign(&h[ip]);
                    mem::swap(&mut h[pi], &mut t1);
                    t2.assign(&h[iq]);
                    mem::swap(&mut h[qi], &mut t2);
                }
                let shift = &t * &hpq;
                t1.assign((hpp.raw() - shift.raw()).complete(bits));
                mem::swap(&mut h[p * n + p], &mut t1);
                t2.assign((hqq.raw() + shift.raw()).complete(bits));
                mem::swap(&mut h[q * n + q], &mut t2);
                h[p * n + q].assign(0);
                h[q * n + p].assign(0);

                // Eigenvector columns p, q.
                for i in 0..n {
                    let ip = i * n + p;
                    let iq = i * n + q;
                    t1.assign(cf.mul_sub_mul_ref(&v[ip], sf, &v[iq]));
                    t2.assign(sf.mul_add_mul_ref(&v[ip], cf, &v[iq]));
                    mem::swap(&mut v[ip], &mut t1);
                    mem::swap(&mut v[iq], &mut t2);
                }
            }
        }
        last_residual_sqr = max_ratio_sqr.clone();
        if !rotated || max_ratio_sqr <= tol_sqr {
            converged = true;
        }
    }
    if !converged {
        return Err(Error::Convergence {
            sweeps: SWEEP_CAP,
            residual: last_residual_sqr.sqrt().to_f64(),
        });
    }

    let eigs: Vec<Real> = (0..n)
        .map(|i| Real::from_raw(h[i * n + i].clone()))
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        eigs[j]
            .abs()
            .partial_cmp(&eigs[i].abs())
            .unwrap()
            .then(i.cmp(&j))
    });
    let values: Vec<Real> = order.iter().map(|&i| eigs[i].abs()).collect();
    let right_vectors = DenseMatrix::from_fn(n, n, |i, j| {
        Complex::from_real(Real::from_raw(v[i * n + order[j]].clone()))
    })?;
    Ok(Svd {
        values,
        right_vectors,
    })
}

use rug::ops::CompleteRound;

/// Rotate each column so its largest-modulus entry is positive real; makes
/// bilinear/orthogonality checks reproducible across runs and kernels.
fn normalize_phases(v: &mut DenseMatrix) {
    let n_rows = v.rows();
    let n_cols = v.cols();
    for j in 0..n_cols {
        let mut best_i = 0usize;
        let mut best = v.at(0, j).abs_sqr();
        for i in 1..n_rows {
            let a = v.at(i, j).abs_sqr();
            if a > best {
                best = a;
                best_i = i;
            }
        }
        if best.is_zero() {
            continue;
        }
        let lead = v.at(best_i, j).clone();
        if lead.im().is_zero() {
            if lead.re().is_sign_negative() {
                for i in 0..n_rows {
                    let flipped = -v.at(i, j);
                    *v.at_mut(i, j) = flipped;
                }
            }
        } else {
            let phase = lead.conj().scale(&lead.abs().recip());
            for i in 0..n_rows {
                let rotated = v.at(i, j) * &phase;
                *v.at_mut(i, j) = rotated;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    fn diag(entries: &[f64], bits: u32) -> DenseMatrix {
        let n = entries.len();
        DenseMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Complex::from_real(Real::from_f64(bits, entries[i]))
            } else {
                Complex::zero(bits)
            }
        })
        .unwrap()
    }

    #[test]
    fn diagonal_matrix_values() {
        let c = ctx();
        let m = diag(&[3.0, 1.0], c.bits());
        let svd = jacobi_svd(&m, &c, &default_tol(&c)).unwrap();
        assert_eq!(svd.values[0].to_f64(), 3.0);
        assert_eq!(svd.values[1].to_f64(), 1.0);
    }

    #[test]
    fn zero_matrix_all_zero() {
        let c = ctx();
        let m = DenseMatrix::zeros(4, 3, c.bits()).unwrap();
        let svd = jacobi_svd(&m, &c, &default_tol(&c)).unwrap();
        assert!(svd.values.iter().all(|v| v.is_zero()));
    }

    #[test]
    fn dominant_prefix_of_diag() {
        let c = ctx();
        let m = diag(&[5.0, 2.0, 1.0], c.bits());
        let vals = dominant_singular_values(&m, 2, &c, &default_tol(&c)).unwrap();
        assert_eq!(vals.len(), 2);
        assert_eq!(vals[0].to_f64(), 5.0);
        assert_eq!(vals[1].to_f64(), 2.0);
    }

    #[test]
    fn count_out_of_range_is_dimension_error() {
        let c = ctx();
        let m = diag(&[5.0, 2.0, 1.0], c.bits());
        assert!(matches!(
            dominant_singular_values(&m, 4, &c, &default_tol(&c)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn wide_matrix_rejected() {
        let c = ctx();
        let m = DenseMatrix::zeros(2, 3, c.bits()).unwrap();
        assert!(matches!(
            jacobi_svd(&m, &c, &default_tol(&c)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn symmetric_path_matches_one_sided() {
        let c = ctx();
        // Real symmetric with a negative eigenvalue: [[0,1],[1,0]].
        let m = DenseMatrix::from_f64_rows(
            &[vec![(0.0, 0.0), (1.0, 0.0)], vec![(1.0, 0.0), (0.0, 0.0)]],
            c.bits(),
        )
        .unwrap();
        let svd = jacobi_svd(&m, &c, &default_tol(&c)).unwrap();
        assert!((svd.values[0].to_f64() - 1.0).abs() < 1e-100);
        assert!((svd.values[1].to_f64() - 1.0).abs() < 1e-100);
        // Columns orthonormal.
        let v = &svd.right_vectors;
        let vtv = v.conj_transpose().mul(v).unwrap();
        assert!(vtv.at(0, 0).re().rel_distance(&Real::one(c.bits())).to_f64() < 1e-100);
        assert!(vtv.at(0, 1).abs().to_f64() < 1e-100);
    }

    #[test]
    fn values_nonincreasing_on_random_complex() {
        let c = ctx();
        let m = DenseMatrix::from_f64_rows(
            &[
                vec![(0.3, -1.2), (0.9, 0.4), (-0.5, 0.0)],
                vec![(1.1, 0.2), (-0.7, 0.8), (0.6, -0.3)],
                vec![(0.0, 0.5), (0.2, -0.9), (1.4, 0.1)],
                vec![(-0.4, 0.0), (0.8, 0.8), (0.3, 0.7)],
            ],
            c.bits(),
        )
        .unwrap();
        let svd = jacobi_svd(&m, &c, &default_tol(&c)).unwrap();
        for w in svd.values.windows(2) {
            assert!(w[0] >= w[1]);
        }
        assert!(!svd.values[2].is_sign_negative());
    }
}

//! Dense row-major complex matrix.

use super::{Complex, Real, DEFAULT_DIM_CAP};
use crate::{Error, Result};

/// Dense matrix of [`Complex`] entries in row-major order.
///
/// Dimensions are validated against a cap at construction so that a malformed
/// experiment cannot silently allocate gigabytes of mantissa.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize, bits: u32) -> Result<Self> {
        Self::check_dims(rows, cols)?;
        let data = vec![Complex::zero(bits); rows * cols];
        Ok(DenseMatrix { rows, cols, data })
    }

    pub fn identity(n: usize, bits: u32) -> Result<Self> {
        let mut m = Self::zeros(n, n, bits)?;
        for i in 0..n {
            *m.at_mut(i, i) = Complex::one(bits);
        }
        Ok(m)
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Complex,
    ) -> Result<Self> {
        Self::check_dims(rows, cols)?;
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    /// Rows given as slices of (re, im) f64 pairs; test and example helper.
    pub fn from_f64_rows(rows: &[Vec<(f64, f64)>], bits: u32) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::from_fn(r, c, |i, j| {
            let (re, im) = rows[i][j];
            Complex::new(Real::from_f64(bits, re), Real::from_f64(bits, im))
        })
    }

    fn check_dims(rows: usize, cols: usize) -> Result<()> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension("matrix dimensions must be positive".into()));
        }
        let cap = DEFAULT_DIM_CAP;
        if rows > cap || cols > cap {
            return Err(Error::DimensionCap {
                requested: rows.max(cols),
                cap,
            });
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Complex {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Complex {
        &mut self.data[i * self.cols + j]
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(|z| z.im().is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.at(i, j) != self.at(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> Real {
        let bits = self.data[0].prec();
        let mut best = Real::zero(bits);
        for z in &self.data {
            let a = z.abs();
            if a > best {
                best = a;
            }
        }
        best
    }

    pub fn frobenius_norm(&self) -> Real {
        let bits = self.data[0].prec();
        let mut acc = Real::zero(bits);
        for z in &self.data {
            acc = acc + z.abs_sqr();
        }
        acc.sqrt()
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.at(i, j).clone());
            }
        }
        DenseMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn conj_transpose(&self) -> DenseMatrix {
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.at(i, j).conj());
            }
        }
        DenseMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, rhs: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let bits = self.data[0].prec();
        let mut out = DenseMatrix::zeros(self.rows, rhs.cols, bits)?;
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Complex::zero(bits);
                for k in 0..self.cols {
                    acc = acc.add_prod(self.at(i, k), rhs.at(k, j));
                }
                *out.at_mut(i, j) = acc;
            }
        }
        Ok(out)
    }

    /// Column j as a vector of refs, used by the SVD kernels.
    pub(crate) fn col(&self, j: usize) -> impl Iterator<Item = &Complex> {
        (0..self.rows).map(move |i| self.at(i, j))
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            let ia = i * self.cols + a;
            let ib = i * self.cols + b;
            self.data.swap(ia, ib);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_indexing() {
        let m = DenseMatrix::from_f64_rows(
            &[vec![(1.0, 0.0), (2.0, 0.0)], vec![(3.0, 0.0), (4.0, 0.0)]],
            128,
        )
        .unwrap();
        assert_eq!(m.at(1, 0).re().to_f64(), 3.0);
        assert!(m.is_real());
        assert!(!m.is_symmetric());
    }

    #[test]
    fn dimension_cap_enforced() {
        assert!(matches!(
            DenseMatrix::zeros(4096, 2, 64),
            Err(Error::DimensionCap { .. })
        ));
        assert!(matches!(
            DenseMatrix::zeros(0, 2, 64),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn matmul_identity() {
        let m = DenseMatrix::from_f64_rows(
            &[vec![(1.0, 1.0), (2.0, 0.0)], vec![(0.0, -1.0), (4.0, 0.0)]],
            128,
        )
        .unwrap();
        let id = DenseMatrix::identity(2, 128).unwrap();
        assert_eq!(m.mul(&id).unwrap(), m);
    }
}

use std::fmt;

use num_bigint::BigInt;

use super::poly::ZPoly;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Dense row-major matrix over a [`Ring`].
///
/// Indices are 0-based in the API; the verifiers translate to the 1-based
/// indices used when stating identities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

pub type IntMatrix = Matrix<BigInt>;
/// Matrix over `Z[m]`.
pub type PolyMatrix = Matrix<ZPoly>;

impl<R: Ring> Matrix<R> {
    pub fn new(rows: usize, cols: usize, data: Vec<R>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::BadShape { rows, cols, len: data.len() });
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Panics if `rows` or `cols` is zero.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::BadShape { rows: r, cols: c, len: rows.iter().map(Vec::len).sum() });
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn scalar(n: usize, c: &R) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { c.clone() } else { R::zero() })
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

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        self.data.chunks(self.cols).map(<[R]>::to_vec).collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> R {
        let mut acc = R::zero();
        for k in 0..self.rows.min(self.cols) {
            acc.add_assign(self.get(k, k));
        }
        acc
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn mat_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        let mut out = vec![R::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            let acc = &mut out[i * rhs.cols..(i + 1) * rhs.cols];
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (slot, b) in acc.iter_mut().zip(rhs.row(k)) {
                    slot.mul_acc(a, b);
                }
            }
        }
        Ok(Matrix { rows: self.rows, cols: rhs.cols, data: out })
    }

    pub fn mul_vec(&self, v: &[R]) -> Result<Vec<R>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: v.len(),
                right_cols: 1,
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = R::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    acc.mul_acc(a, b);
                }
                acc
            })
            .collect())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    /// `A^e` by binary exponentiation; `A^0 = I`.
    pub fn mat_pow(&self, e: u64) -> Result<Self> {
        let n = self.require_square()?;
        let mut acc = Self::identity(n);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mat_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mat_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `[A^0, A^1, ..., A^e_max]` by repeated multiplication.
    pub fn powers(&self, e_max: u64) -> Result<Vec<Self>> {
        let n = self.require_square()?;
        let mut out = Vec::with_capacity(e_max as usize + 1);
        out.push(Self::identity(n));
        for _ in 0..e_max {
            let next = out.last().expect("nonempty").mat_mul(self)?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn im(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn identity_times_a() {
        let a = im(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(IntMatrix::identity(3).mat_mul(&a).unwrap(), a);
        assert_eq!(im(&[&[2]]).mat_mul(&im(&[&[3]])).unwrap(), im(&[&[6]]));
    }

    #[test]
    fn shape_errors() {
        let a = im(&[&[1, 2]]);
        assert!(matches!(a.mat_mul(&a), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(a.mat_pow(2), Err(Error::NotSquare { .. })));
        assert!(IntMatrix::new(0, 1, vec![]).is_err());
        assert!(IntMatrix::new(2, 2, vec![BigInt::from(1)]).is_err());
    }

    #[test]
    fn pow_zero_and_one() {
        let a = im(&[&[0, 1], &[1, 1]]);
        assert!(a.mat_pow(0).unwrap().is_identity());
        assert_eq!(a.mat_pow(1).unwrap(), a);
        assert_eq!(a.mat_pow(10).unwrap(), im(&[&[34, 55], &[55, 89]]));
    }

    #[test]
    fn display_nested() {
        assert_eq!(im(&[&[1, -2], &[3, 4]]).to_string(), "[[1,-2],[3,4]]");
    }

    fn small_square() -> impl Strategy<Value = IntMatrix> {
        (1usize..5).prop_flat_map(|n| {
            prop::collection::vec(-3i64..4, n * n)
                .prop_map(move |v| IntMatrix::new(n, n, v.into_iter().map(BigInt::from).collect()).unwrap())
        })
    }

    proptest! {
        #[test]
        fn pow_is_additive_in_exponent(a in small_square(), i in 0u64..7, j in 0u64..7) {
            let lhs = a.mat_pow(i + j).unwrap();
            let rhs = a.mat_pow(i).unwrap().mat_mul(&a.mat_pow(j).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn incremental_powers_match_binary(a in small_square()) {
            let pows = a.powers(6).unwrap();
            for (e, p) in pows.iter().enumerate() {
                prop_assert_eq!(p, &a.mat_pow(e as u64).unwrap());
            }
        }
    }
}

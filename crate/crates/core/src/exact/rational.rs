//! Rational matrices and exact kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense matrix of normalized rationals (`BigRational` keeps `gcd = 1`,
/// positive denominator).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigRational>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::BadShape { rows, cols, len: data.len() });
        }
        Ok(RatMatrix { rows, cols, data })
    }

    pub fn from_int_rows(rows: &[Vec<BigInt>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::BadShape { rows: r, cols: c, len: rows.iter().map(Vec::len).sum() });
        }
        let data = rows.iter().flatten().map(|v| BigRational::from_integer(v.clone())).collect();
        Self::new(r, c, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(BigRational::zero(), |acc, j| acc + self.get(i, j) * &v[j])
            })
            .collect()
    }
}

/// Basis of the right kernel of `a`.
///
/// Rows are scaled to integers, then reduced by fraction-free (Bareiss)
/// Gauss-Jordan elimination; every intermediate entry is a minor of the
/// scaled matrix, so each division is exact. Returned vectors have
/// integer entries with content 1.
pub fn nullspace_rational(a: &RatMatrix) -> Vec<Vec<BigRational>> {
    let (rows, cols) = (a.rows, a.cols);
    let mut m: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            let den = (0..cols).fold(BigInt::one(), |acc, j| acc.lcm(a.get(i, j).denom()));
            (0..cols).map(|j| (a.get(i, j) * BigRational::from_integer(den.clone())).to_integer()).collect()
        })
        .collect();

    let mut pivots: Vec<usize> = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = m[i][c].clone();
            for j in 0..cols {
                let num = &piv * &m[i][j] - &factor * &m[r][j];
                let (q, rem) = num.div_rem(&prev);
                assert!(rem.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }

    // After fraction-free Gauss-Jordan every pivot row has the same pivot
    // value `prev` and zeros in all other pivot columns.
    let mut basis = Vec::new();
    let mut is_pivot = vec![None; cols];
    for (row, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(row);
    }
    for free in (0..cols).filter(|&c| is_pivot[c].is_none()) {
        let mut v = vec![BigInt::zero(); cols];
        v[free] = prev.clone();
        for (row, &c) in pivots.iter().enumerate() {
            v[c] = -m[row][free].clone();
        }
        let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let lead_negative = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
        let g = if lead_negative { -g } else { g };
        basis.push(v.into_iter().map(|x| BigRational::from_integer(x / &g)).collect());
    }
    basis
}

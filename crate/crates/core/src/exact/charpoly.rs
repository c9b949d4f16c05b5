use num_bigint::{BigInt, Sign};

use super::matrix::{IntMatrix, Matrix};
use super::modp::{inv_mod, is_prime_u64, mul_mod, reduce_big, sub_mod, ModMatrix};
use super::poly::Poly;
use super::ring::Ring;
use crate::error::{Error, Result};

/// `det(A - xI)` by the Faddeev-LeVerrier trace recurrence.
///
/// `M_1 = I`, `c_{k} = -tr(A M_k) / k`, `M_{k+1} = A M_k + c_k I`. The
/// divisions by `k` are exact in any ring containing `Z` where the
/// characteristic polynomial has integral coefficients; a remainder is
/// reported as [`Error::InexactDivision`].
pub fn charpoly_exact<R: Ring>(a: &Matrix<R>) -> Result<Poly<R>> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    // monic[k] is the coefficient of x^(n-k) in det(xI - A).
    let mut monic = Vec::with_capacity(n + 1);
    monic.push(R::one());
    let mut m = Matrix::<R>::identity(n);
    for k in 1..=n {
        let am = a.mat_mul(&m)?;
        let tr = am.trace();
        let c = tr
            .div_exact_int(&BigInt::from(k))
            .ok_or_else(|| Error::InexactDivision(format!("trace {tr} by {k}")))?
            .neg();
        if k < n {
            m = am;
            for d in 0..n {
                let v = m.get(d, d).add(&c);
                m.set(d, d, v);
            }
        }
        monic.push(c);
    }
    // det(A - xI) = (-1)^n det(xI - A)
    let coeffs = (0..=n).map(|deg| monic[n - deg].signed(n as i64)).collect();
    Ok(Poly::new(coeffs))
}

/// Bit length of `prod_i (1 + ||row_i||_2)`, an upper bound on the absolute
/// value of every coefficient of the characteristic polynomial.
pub fn charpoly_bound_bits(a: &IntMatrix) -> u64 {
    (0..a.rows())
        .map(|i| {
            let sq: BigInt = a.row(i).iter().map(|v| v * v).sum();
            let norm = sq.sqrt() + BigInt::from(2);
            norm.bits()
        })
        .sum()
}

/// `det(A - xI)` for an integer matrix via Hessenberg reduction modulo
/// 62-bit primes and Chinese remaindering, with enough primes to cover
/// twice [`charpoly_bound_bits`].
pub fn charpoly_multimodular(a: &IntMatrix) -> Result<Poly<BigInt>> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    let need_bits = charpoly_bound_bits(a) + 2;
    let mut modulus = BigInt::from(1);
    let mut acc = vec![BigInt::from(0); n + 1];
    let mut candidate: u64 = (1 << 62) - 1;
    while modulus.bits() <= need_bits {
        while !is_prime_u64(candidate) {
            candidate -= 2;
        }
        let p = candidate;
        candidate -= 2;
        let residues = ModMatrix::from_int(a, p)?.charpoly_monic();
        // Garner step: acc += modulus * ((r - acc) * modulus^-1 mod p)
        let minv = inv_mod(reduce_big(&modulus, p), p).expect("distinct primes");
        for (slot, &r) in acc.iter_mut().zip(&residues) {
            let diff = sub_mod(r, reduce_big(slot, p), p);
            let t = mul_mod(diff, minv, p);
            if t != 0 {
                *slot += &modulus * BigInt::from(t);
            }
        }
        modulus *= BigInt::from(p);
    }
    let half = &modulus >> 1;
    let sign = if n % 2 == 0 { Sign::Plus } else { Sign::Minus };
    let coeffs = acc
        .into_iter()
        .map(|v| {
            let v = if v > half { v - &modulus } else { v };
            if sign == Sign::Minus {
                -v
            } else {
                v
            }
        })
        .collect();
    Ok(Poly::new(coeffs))
}

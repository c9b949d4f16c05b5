//! Arithmetic in `Z/p` with word-sized moduli.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

pub fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse mod a prime `p`; `None` for zero.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(p as i128) as u64)
}

pub fn reduce_i64(v: i64, p: u64) -> u64 {
    (v as i128).rem_euclid(p as i128) as u64
}

pub fn reduce_big(v: &BigInt, p: u64) -> u64 {
    v.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

/// Symmetric representative in `(-p/2, p/2]`, used for printing `-1` as `-1`.
pub fn signed_residue(v: u64, p: u64) -> i128 {
    if v > p / 2 {
        v as i128 - p as i128
    } else {
        v as i128
    }
}

/// Primality by trial division; intended for user-supplied moduli.
pub fn is_prime_trial(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn require_prime(p: u64) -> Result<()> {
    if is_prime_trial(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Square matrix with entries reduced mod `p`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModMatrix {
    n: usize,
    p: u64,
    data: Vec<u64>,
}

impl ModMatrix {
    pub fn identity(n: usize, p: u64) -> Self {
        Self::scalar(n, 1, p)
    }

    pub fn scalar(n: usize, c: u64, p: u64) -> Self {
        let mut data = vec![0; n * n];
        for k in 0..n {
            data[k * n + k] = c % p;
        }
        ModMatrix { n, p, data }
    }

    pub fn from_int(a: &IntMatrix, p: u64) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
        }
        Ok(ModMatrix { n: a.rows(), p, data: a.entries().iter().map(|v| reduce_big(v, p)).collect() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.n + j]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!((self.n, self.p), (rhs.n, rhs.p), "incompatible modular matrices");
        let n = self.n;
        let p = self.p;
        let mut out = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let slot = &mut out[i * n + j];
                    *slot = add_mod(*slot, mul_mod(a, rhs.data[k * n + j], p), p);
                }
            }
        }
        ModMatrix { n, p, data: out }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::identity(self.n, self.p);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `Some(c)` when the matrix is `c * I`.
    pub fn as_scalar(&self) -> Option<u64> {
        let c = self.get(0, 0);
        for i in 0..self.n {
            for j in 0..self.n {
                let want = if i == j { c } else { 0 };
                if self.get(i, j) != want {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn is_identity(&self) -> bool {
        self.as_scalar() == Some(1 % self.p)
    }

    /// `det(xI - A)` over `Z/p` via Hessenberg reduction, lowest degree first.
    pub fn charpoly_monic(&self) -> Vec<u64> {
        let n = self.n;
        let p = self.p;
        let mut h = self.data.clone();
        let at = |i: usize, j: usize| i * n + j;
        for c in 0..n.saturating_sub(2) {
            let Some(piv) = (c + 1..n).find(|&r| h[at(r, c)] != 0) else {
                continue;
            };
            if piv != c + 1 {
                for j in 0..n {
                    h.swap(at(piv, j), at(c + 1, j));
                }
                for i in 0..n {
                    h.swap(at(i, piv), at(i, c + 1));
                }
            }
            let inv = inv_mod(h[at(c + 1, c)], p).expect("nonzero pivot");
            for i in c + 2..n {
                let u = mul_mod(h[at(i, c)], inv, p);
                if u == 0 {
                    continue;
                }
                for j in 0..n {
                    let t = mul_mod(u, h[at(c + 1, j)], p);
                    h[at(i, j)] = sub_mod(h[at(i, j)], t, p);
                }
                for r in 0..n {
                    let t = mul_mod(u, h[at(r, i)], p);
                    h[at(r, c + 1)] = add_mod(h[at(r, c + 1)], t, p);
                }
            }
        }
        // chars[k] = det(xI - H_k) for the leading k x k block.
        let mut chars: Vec<Vec<u64>> = vec![vec![1]];
        for k in 0..n {
            let prev = &chars[k];
            let mut next = vec![0u64; k + 2];
            for (d, &c) in prev.iter().enumerate() {
                next[d + 1] = add_mod(next[d + 1], c, p);
                next[d] = sub_mod(next[d], mul_mod(h[at(k, k)], c, p), p);
            }
            let mut prod = 1u64;
            for i in (0..k).rev() {
                prod = mul_mod(prod, h[at(i + 1, i)], p);
                let coef = mul_mod(h[at(i, k)], prod, p);
                if coef == 0 {
                    continue;
                }
                for (d, &c) in chars[i].iter().enumerate() {
                    next[d] = sub_mod(next[d], mul_mod(coef, c, p), p);
                }
            }
            chars.push(next);
        }
        chars.pop().expect("nonempty")
    }
}

impl fmt::Display for ModMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.n {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

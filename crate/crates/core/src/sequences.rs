//! The general Fibonacci sequence `U_e(m)` and its Lucas companion `V_e(m)`.
//!
//! `U_0 = 0, U_1 = 1`, `V_0 = 2, V_1 = m`, both with `x_{e+1} = m x_e + x_{e-1}`.
//! `m = 1` gives Fibonacci and Lucas numbers, `m = 2` the Pell numbers, and
//! an indeterminate `m` the Fibonacci polynomials.

use crate::error::{Error, Result};
use crate::exact::modp::{add_mod, mul_mod, reduce_i64};
use crate::exact::Ring;
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeqKind {
    U,
    V,
}

/// Memoizing generator for one sequence at one parameter.
///
/// Not internally synchronized; clone it per thread.
#[derive(Clone, Debug)]
pub struct SequenceGen<R> {
    kind: SeqKind,
    m: R,
    cache: Vec<R>,
}

impl<R: Ring> SequenceGen<R> {
    pub fn new(kind: SeqKind, m: R) -> Self {
        let first = match kind {
            SeqKind::U => vec![R::zero(), R::one()],
            SeqKind::V => vec![R::from_i64(2), m.clone()],
        };
        SequenceGen { kind, m, cache: first }
    }

    pub fn u(m: R) -> Self {
        Self::new(SeqKind::U, m)
    }

    pub fn v(m: R) -> Self {
        Self::new(SeqKind::V, m)
    }

    /// A generator with every index up to `max` already cached.
    pub fn upto(kind: SeqKind, m: R, max: usize) -> Self {
        let mut g = Self::new(kind, m);
        g.extend_to(max);
        g
    }

    pub fn kind(&self) -> SeqKind {
        self.kind
    }

    pub fn param(&self) -> &R {
        &self.m
    }

    pub fn extend_to(&mut self, max: usize) {
        while self.cache.len() <= max {
            let k = self.cache.len();
            let next = self.m.mul(&self.cache[k - 1]).add(&self.cache[k - 2]);
            self.cache.push(next);
        }
    }

    fn min_index(&self) -> i64 {
        match self.kind {
            SeqKind::U => -1,
            SeqKind::V => 0,
        }
    }

    /// Value at `e`, extending the cache as needed. `U_{-1} = 1` is the only
    /// negative index supported.
    pub fn get(&mut self, e: i64) -> Result<R> {
        if e < self.min_index() {
            return Err(Error::UnsupportedIndex(e));
        }
        if e < 0 {
            return Ok(R::one());
        }
        self.extend_to(e as usize);
        Ok(self.cache[e as usize].clone())
    }

    /// Cached value at `e`. Panics when `e` is outside the cached range.
    pub fn at(&self, e: i64) -> R {
        if e == -1 && self.kind == SeqKind::U {
            return R::one();
        }
        assert!(e >= 0 && (e as usize) < self.cache.len(), "index {e} not cached");
        self.cache[e as usize].clone()
    }

    pub fn cached(&self) -> &[R] {
        &self.cache
    }
}

pub fn seq_u<R: Ring>(m: &R, e: i64) -> Result<R> {
    SequenceGen::u(m.clone()).get(e)
}

pub fn seq_v<R: Ring>(m: &R, e: i64) -> Result<R> {
    SequenceGen::v(m.clone()).get(e)
}

/// `U_e(m) mod p`.
pub fn seq_u_mod(m: i64, p: u64, e: u64) -> u64 {
    ModSequence::new(m, p).nth(e as usize).expect("infinite sequence")
}

/// Iterator over `U_0, U_1, ... mod p`.
#[derive(Clone, Debug)]
pub struct ModSequence {
    m: u64,
    p: u64,
    cur: u64,
    next: u64,
}

impl ModSequence {
    pub fn new(m: i64, p: u64) -> Self {
        ModSequence { m: reduce_i64(m, p), p, cur: 0, next: 1 % p }
    }

    /// Period of the pair `(U_e, U_{e+1}) mod p`.
    ///
    /// The step `(a, b) -> (b, m b + a)` is invertible, so the pair
    /// sequence is purely periodic and returns to `(0, 1)`.
    pub fn pair_period(m: i64, p: u64) -> u64 {
        let mut s = ModSequence::new(m, p);
        let start = (s.cur, s.next);
        let mut k = 0u64;
        loop {
            s.step();
            k += 1;
            if (s.cur, s.next) == start {
                return k;
            }
        }
    }

    fn step(&mut self) {
        let n = add_mod(mul_mod(self.m, self.next, self.p), self.cur, self.p);
        self.cur = self.next;
        self.next = n;
    }
}

impl Iterator for ModSequence {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let v = self.cur;
        self.step();
        Some(v)
    }
}

/// Cassini: `U_{e-1} U_{e+1} - U_e^2 = (-1)^e` for `0 <= e <= e_max`.
pub fn cassini_report<R: Ring>(m: &R, e_max: usize) -> Report {
    let g = SequenceGen::upto(SeqKind::U, m.clone(), e_max + 1);
    let mut r = Report::new("seq.cassini").param("m", m).param("e_max", e_max);
    for e in 0..=e_max as i64 {
        let lhs = g.at(e - 1).mul(&g.at(e + 1)).sub(&g.at(e).mul(&g.at(e)));
        r.check(|| format!("e={e}"), &R::one().signed(e), &lhs);
    }
    r
}

/// `V_e = U_{e+1} + U_{e-1}` for `0 <= e <= e_max`.
pub fn lucas_report<R: Ring>(m: &R, e_max: usize) -> Report {
    let u = SequenceGen::upto(SeqKind::U, m.clone(), e_max + 1);
    let v = SequenceGen::upto(SeqKind::V, m.clone(), e_max);
    let mut r = Report::new("seq.lucas").param("m", m).param("e_max", e_max);
    for e in 0..=e_max as i64 {
        r.check(|| format!("e={e}"), &v.at(e), &u.at(e + 1).add(&u.at(e - 1)));
    }
    r
}

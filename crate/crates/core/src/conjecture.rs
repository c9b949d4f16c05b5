//! The Lucas-factor product for the characteristic polynomial of `T_n(m)`.
//!
//! With `p_n(x) = det(T_n(m) - xI)` the conjectured values are
//! `p_0 = 1`, `p_1 = 1 - x`, `p_2 = -1 - V_1 x + x^2`,
//! `p_3 = -(1 + x)(1 - V_2 x + x^2)` and, for `n >= 4`, a product of two
//! quadratics in Lucas numbers times `p_{n-4}`.

use std::fmt;

use num_bigint::BigInt;

use crate::error::Result;
use crate::exact::{charpoly_exact, charpoly_multimodular, Poly, Ring, ZPoly};
use crate::fibmat::{build_t, FibSpec};
use crate::report::{Report, Witness};
use crate::sequences::{SeqKind, SequenceGen};

/// Largest `n` for which [`Method::Auto`] uses the trace recurrence on
/// integer matrices.
pub const AUTO_EXACT_MAX_N: usize = 12;

/// Default bound for symbolic checks.
pub const SYMBOLIC_MAX_N: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Faddeev-LeVerrier over `Z` (or `Z[m]`).
    Exact,
    /// Hessenberg modulo word-size primes plus CRT; integer `m` only.
    Multimodular,
    /// `Exact` up to [`AUTO_EXACT_MAX_N`], `Multimodular` beyond.
    Auto,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MMode {
    Symbolic,
    Integer(i64),
}

impl fmt::Display for MMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MMode::Symbolic => write!(f, "symbolic"),
            MMode::Integer(m) => write!(f, "{m}"),
        }
    }
}

fn quad<R: Ring>(c0: i64, c1: R, c2: i64) -> Poly<R> {
    Poly::new(vec![R::from_i64(c0), c1, R::from_i64(c2)])
}

/// The conjectured `p_n`, built by the four residue-class recursions.
pub fn conjectured_charpoly<R: Ring>(n: usize, m: &R) -> Poly<R> {
    let v = SequenceGen::upto(SeqKind::V, m.clone(), n + 3);
    let vv = |k: usize| v.at(k as i64);
    let one_minus_x = Poly::new(vec![R::one(), R::from_i64(-1)]);
    let base = |r: usize| -> Poly<R> {
        match r {
            0 => Poly::constant(R::one()),
            1 => one_minus_x.clone(),
            2 => quad(-1, vv(1).neg(), 1),
            _ => Poly::new(vec![R::from_i64(-1), R::from_i64(-1)]).mul(&quad(1, vv(2).neg(), 1)),
        }
    };
    let r = n % 4;
    let mut p = base(r);
    let mut cur = r;
    while cur + 4 <= n {
        let next = cur + 4;
        // next = 4k + r
        let factor = match r {
            1 | 3 => quad(1, vv(next - 3), 1).mul(&quad(1, vv(next - 1).neg(), 1)),
            _ => quad(-1, vv(next - 3), 1).mul(&quad(-1, vv(next - 1).neg(), 1)),
        };
        p = factor.mul(&p);
        cur = next;
    }
    p
}

/// Computed and conjectured `p_n` side by side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport<R> {
    pub n: usize,
    pub m_mode: MMode,
    pub computed: Poly<R>,
    pub conjectured: Poly<R>,
    pub equal: bool,
    /// `(degree, computed, conjectured)` for each differing coefficient.
    pub mismatch_coefficients: Vec<(usize, R, R)>,
}

impl<R: Ring> ConjectureReport<R> {
    fn compare(n: usize, m_mode: MMode, computed: Poly<R>, conjectured: Poly<R>) -> Self {
        let top = computed.coeffs().len().max(conjectured.coeffs().len());
        let mismatch_coefficients: Vec<(usize, R, R)> = (0..top)
            .filter_map(|k| {
                let (a, b) = (computed.coeff(k), conjectured.coeff(k));
                (a != b).then_some((k, a, b))
            })
            .collect();
        ConjectureReport { n, m_mode, equal: mismatch_coefficients.is_empty(), computed, conjectured, mismatch_coefficients }
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new("conj6").param("n", self.n).param("m", &self.m_mode);
        r.checks = self.computed.coeffs().len().max(self.conjectured.coeffs().len()) as u64;
        for (k, computed, conjectured) in &self.mismatch_coefficients {
            r.push_witness(Witness::new(format!("x^{k}"), conjectured, computed));
        }
        r
    }
}

/// `det(T_n(m) - xI)` in `Z[m][x]` against the conjecture.
pub fn verify_conjecture_symbolic(n: usize) -> Result<ConjectureReport<ZPoly>> {
    let m = ZPoly::var();
    let t = build_t(&FibSpec::new(n, m.clone())?);
    let computed = charpoly_exact(&t)?;
    Ok(ConjectureReport::compare(n, MMode::Symbolic, computed, conjectured_charpoly(n, &m)))
}

/// `det(T_n(m) - xI)` for an integer `m` against the conjecture.
pub fn verify_conjecture_int(n: usize, m: i64, method: Method) -> Result<ConjectureReport<BigInt>> {
    let mb = BigInt::from(m);
    let t = build_t(&FibSpec::new(n, mb.clone())?);
    let computed = match method {
        Method::Exact => charpoly_exact(&t)?,
        Method::Multimodular => charpoly_multimodular(&t)?,
        Method::Auto if n <= AUTO_EXACT_MAX_N => charpoly_exact(&t)?,
        Method::Auto => charpoly_multimodular(&t)?,
    };
    Ok(ConjectureReport::compare(n, MMode::Integer(m), computed, conjectured_charpoly(n, &mb)))
}

//! Netted tableaux and the recurrence coefficients of matrix powers.
//!
//! A tableau `a[i][j]`, `0 <= i, j <= n+1`, is netted with parameters
//! `(alpha, beta, gamma, delta)` when
//!
//! ```text
//! delta a[i][j] = alpha a[i-1][j] + beta a[i-1][j-1] + gamma a[i][j-1]   (1 <= i, j <= n+1)
//! beta a[i][0] + gamma a[i+1][0] = 0                                       (1 <= i <= n-1)
//! delta a[i+1][n+1] - alpha a[i][n+1] = 0                                  (1 <= i <= n-1)
//! ```
//!
//! The `n x n` window then has netted powers whose coefficients come from
//! [`coeff_sequences`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{binomial, nullspace_rational, Matrix, RatMatrix, Ring};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NettedParams<R> {
    pub alpha: R,
    pub beta: R,
    pub gamma: R,
    pub delta: R,
}

impl<R: Ring> NettedParams<R> {
    pub fn new(alpha: R, beta: R, gamma: R, delta: R) -> Result<Self> {
        if [&alpha, &beta, &gamma, &delta].iter().all(|c| c.is_zero()) {
            return Err(Error::DegenerateParams);
        }
        Ok(NettedParams { alpha, beta, gamma, delta })
    }

    /// Parameters given in `(alpha, beta, gamma, delta)` order.
    pub fn from_i64s(alpha: i64, beta: i64, gamma: i64, delta: i64) -> Result<Self> {
        Self::new(R::from_i64(alpha), R::from_i64(beta), R::from_i64(gamma), R::from_i64(delta))
    }
}

impl<R: Ring> fmt::Display for NettedParams<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.alpha, self.beta, self.gamma, self.delta)
    }
}

/// Recurrence coefficients for the `e`-th power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffQuad<R> {
    pub e: u64,
    pub alpha: R,
    pub beta: R,
    pub gamma: R,
    pub delta: R,
}

impl<R: Ring> CoeffQuad<R> {
    fn components(&self) -> [(&'static str, &R); 4] {
        [("alpha", &self.alpha), ("beta", &self.beta), ("gamma", &self.gamma), ("delta", &self.delta)]
    }
}

/// Quads for `e = 1..=e_max` from the coupled first-order system
///
/// ```text
/// delta_e = delta delta_{e-1} - gamma alpha_{e-1}
/// alpha_e = alpha delta_{e-1} + beta alpha_{e-1}
/// beta_e  = beta beta_{e-1}  - alpha gamma_{e-1}
/// gamma_e = gamma beta_{e-1} + delta gamma_{e-1}
/// ```
pub fn coeff_sequences<R: Ring>(params: &NettedParams<R>, e_max: u64) -> Vec<CoeffQuad<R>> {
    let NettedParams { alpha, beta, gamma, delta } = params;
    let mut out: Vec<CoeffQuad<R>> = Vec::with_capacity(e_max as usize);
    if e_max == 0 {
        return out;
    }
    out.push(CoeffQuad { e: 1, alpha: alpha.clone(), beta: beta.clone(), gamma: gamma.clone(), delta: delta.clone() });
    for e in 2..=e_max {
        let prev = out.last().expect("nonempty");
        let next = CoeffQuad {
            e,
            delta: delta.mul(&prev.delta).sub(&gamma.mul(&prev.alpha)),
            alpha: alpha.mul(&prev.delta).add(&beta.mul(&prev.alpha)),
            beta: beta.mul(&prev.beta).sub(&alpha.mul(&prev.gamma)),
            gamma: gamma.mul(&prev.beta).add(&delta.mul(&prev.gamma)),
        };
        out.push(next);
    }
    out
}

/// Checks each quad component against `x_{e+1} = trace_coeff * x_e - (beta delta + alpha gamma) x_{e-1}`.
fn scalar_recurrence<R: Ring>(claim: &str, params: &NettedParams<R>, quads: &[CoeffQuad<R>], trace_coeff: &R) -> Report {
    let NettedParams { alpha, beta, gamma, delta } = params;
    let det = beta.mul(delta).add(&alpha.mul(gamma));
    let mut r = Report::new(claim).param("params", params).param("e_max", quads.len());
    for w in quads.windows(3) {
        for ((name, x0), ((_, x1), (_, x2))) in w[0].components().into_iter().zip(w[1].components().into_iter().zip(w[2].components())) {
            let predicted = trace_coeff.mul(x1).sub(&det.mul(x0));
            r.check(|| format!("{name}_{}", w[2].e), x2, &predicted);
        }
    }
    r
}

/// The coefficient quads against the closed second-order recurrence, in
/// both the `(beta + delta)` form and the `(beta + gamma)` form; the second
/// is reported as a documented discrepancy when it disagrees.
pub fn verify_coeff_recurrence<R: Ring>(params: &NettedParams<R>, e_max: u64) -> Vec<Report> {
    let quads = coeff_sequences(params, e_max);
    let stated = scalar_recurrence("thm2.1.coeff", params, &quads, &params.beta.add(&params.delta));
    let printed = scalar_recurrence("thm2.1.coeff.proof-form", params, &quads, &params.beta.add(&params.gamma)).documented();
    let mut init = Report::new("thm2.1.coeff").param("params", params).param("e_max", e_max).param("part", "initial");
    if let Some(q2) = quads.get(1) {
        let NettedParams { alpha, beta, gamma, delta } = params;
        let ag = alpha.mul(gamma);
        init.check(|| "delta_2".into(), &delta.mul(delta).sub(&ag), &q2.delta);
        init.check(|| "alpha_2".into(), &alpha.mul(&delta.add(beta)), &q2.alpha);
        init.check(|| "beta_2".into(), &beta.mul(beta).sub(&ag), &q2.beta);
        init.check(|| "gamma_2".into(), &gamma.mul(&beta.add(delta)), &q2.gamma);
    }
    vec![init, stated, printed]
}

/// Checks that every power `A^e`, `1 <= e <= e_max`, satisfies the netted
/// relation with the `e`-th quad on all cells `2 <= i, j <= n` (1-based).
pub fn verify_power_netted<R: Ring>(a: &Matrix<R>, params: &NettedParams<R>, e_max: u64) -> Result<Report> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    if n < 2 {
        return Err(Error::DimensionTooSmall { min: 2, got: n });
    }
    let quads = coeff_sequences(params, e_max);
    let mut r = Report::new("thm2.1").param("n", n).param("params", params).param("e_max", e_max);
    let mut power = a.clone();
    for q in &quads {
        if q.e > 1 {
            power = power.mat_mul(a)?;
        }
        for i in 1..n {
            for j in 1..n {
                let lhs = q.delta.mul(power.get(i, j));
                let mut rhs = R::zero();
                rhs.mul_acc(&q.alpha, power.get(i - 1, j));
                rhs.mul_acc(&q.beta, power.get(i - 1, j - 1));
                rhs.mul_acc(&q.gamma, power.get(i, j - 1));
                r.check(|| format!("e={},i={},j={}", q.e, i + 1, j + 1), &lhs, &rhs);
            }
        }
    }
    Ok(r)
}

/// The three binomial families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `m^(i-j) C(i-1, j-1)`
    A1,
    /// `m^(i+j-n-1) C(i-1, n-j)`; this is `T_n(m)`.
    A2,
    /// `m^(j-i) C(n-i, n-j)`, with `a[i][j] = a[i-1][j-1] - m a[i][j-1]`
    A3,
}

/// Sign patterns applied entrywise to a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignTwist {
    None,
    /// `(-1)^(i+j)`
    Checkerboard,
    /// `(-1)^(i-1)`
    Rows,
    /// `(-1)^(j-1)`
    Cols,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyKind {
    pub family: Family,
    pub twist: SignTwist,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 12] = {
        const F: [Family; 3] = [Family::A1, Family::A2, Family::A3];
        const T: [SignTwist; 4] = [SignTwist::None, SignTwist::Checkerboard, SignTwist::Rows, SignTwist::Cols];
        let mut out = [FamilyKind { family: Family::A1, twist: SignTwist::None }; 12];
        let mut k = 0;
        while k < 12 {
            out[k] = FamilyKind { family: F[k / 4], twist: T[k % 4] };
            k += 1;
        }
        out
    };
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            Family::A1 => "a1",
            Family::A2 => "a2",
            Family::A3 => "a3",
        };
        let twist = match self.twist {
            SignTwist::None => "",
            SignTwist::Checkerboard => "-alt",
            SignTwist::Rows => "-row",
            SignTwist::Cols => "-col",
        };
        write!(f, "{fam}{twist}")
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// Builds a family matrix at scale `m` together with its parameters.
pub fn build_family<R: Ring>(kind: FamilyKind, n: usize, m: &R) -> Result<(Matrix<R>, NettedParams<R>)> {
    if n == 0 {
        return Err(Error::DimensionTooSmall { min: 1, got: 0 });
    }
    let nn = n as i64;
    let entry = |i: i64, j: i64| -> R {
        let (c, e) = match kind.family {
            Family::A1 => (binomial(i - 1, j - 1), i - j),
            Family::A2 => (binomial(i - 1, nn - j), i + j - nn - 1),
            Family::A3 => (binomial(nn - i, nn - j), j - i),
        };
        if c == BigInt::from(0) {
            return R::zero();
        }
        let sign = match kind.twist {
            SignTwist::None => 0,
            SignTwist::Checkerboard => i + j,
            SignTwist::Rows => i - 1,
            SignTwist::Cols => j - 1,
        };
        m.pow(e as u64).mul(&R::from_int(&c)).signed(sign)
    };
    let mat = Matrix::from_fn(n, n, |i, j| entry(i as i64 + 1, j as i64 + 1));

    let one = R::one();
    let zero = R::zero();
    let (alpha, beta, gamma, delta) = match kind.family {
        Family::A1 => (m.clone(), one.clone(), zero, one),
        Family::A2 => (one.clone(), m.clone(), one.neg(), zero),
        Family::A3 => (zero, one.clone(), m.neg(), one),
    };
    // Substituting a[i][j] = s(i, j) b[i][j] flips the sign of each term
    // whose sign factor differs from that of a[i][j].
    let params = match kind.twist {
        SignTwist::None => NettedParams { alpha, beta, gamma, delta },
        SignTwist::Checkerboard => NettedParams { alpha: alpha.neg(), beta, gamma: gamma.neg(), delta },
        SignTwist::Rows => NettedParams { alpha: alpha.neg(), beta: beta.neg(), gamma, delta },
        SignTwist::Cols => NettedParams { alpha, beta: beta.neg(), gamma: gamma.neg(), delta },
    };
    Ok((mat, params))
}

/// The `(n+2) x (n+2)` extension `a[i][j]`, `0 <= i, j <= n+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau<R> {
    n: usize,
    entries: Vec<R>,
    params: NettedParams<R>,
}

impl<R: Ring> Tableau<R> {
    pub fn new(n: usize, entries: Vec<R>, params: NettedParams<R>) -> Result<Self> {
        let side = n + 2;
        if entries.len() != side * side {
            return Err(Error::BadShape { rows: side, cols: side, len: entries.len() });
        }
        Ok(Tableau { n, entries, params })
    }

    /// Embeds an `n x n` matrix with zeros on all four borders.
    pub fn zero_border(window: &Matrix<R>, params: NettedParams<R>) -> Result<Self> {
        if !window.is_square() {
            return Err(Error::NotSquare { rows: window.rows(), cols: window.cols() });
        }
        let n = window.rows();
        let side = n + 2;
        let mut entries = vec![R::zero(); side * side];
        for i in 0..n {
            for j in 0..n {
                entries[(i + 1) * side + j + 1] = window.get(i, j).clone();
            }
        }
        Ok(Tableau { n, entries, params })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn params(&self) -> &NettedParams<R> {
        &self.params
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * (self.n + 2) + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        let side = self.n + 2;
        self.entries[i * side + j] = v;
    }

    /// The `n x n` matrix `a[1..=n][1..=n]`.
    pub fn window(&self) -> Matrix<R> {
        Matrix::from_fn(self.n, self.n, |i, j| self.get(i + 1, j + 1).clone())
    }
}

/// Reports every violated boundary equation.
pub fn boundary_check<R: Ring>(t: &Tableau<R>) -> Report {
    let NettedParams { alpha, beta, gamma, delta } = &t.params;
    let n = t.n;
    let mut r = Report::new("bc2").param("n", n).param("params", &t.params);
    for i in 1..n {
        let left = beta.mul(t.get(i, 0)).add(&gamma.mul(t.get(i + 1, 0)));
        r.check(|| format!("left,i={i}"), &R::zero(), &left);
        let right = delta.mul(t.get(i + 1, n + 1)).sub(&alpha.mul(t.get(i, n + 1)));
        r.check(|| format!("right,i={i}"), &R::zero(), &right);
    }
    r
}

/// Reports every cell `1 <= i, j <= n+1` violating the netted relation.
pub fn recurrence_check<R: Ring>(t: &Tableau<R>) -> Report {
    let NettedParams { alpha, beta, gamma, delta } = &t.params;
    let mut r = Report::new("tableau").param("n", t.n).param("params", &t.params);
    for i in 1..=t.n + 1 {
        for j in 1..=t.n + 1 {
            let lhs = delta.mul(t.get(i, j));
            let mut rhs = R::zero();
            rhs.mul_acc(alpha, t.get(i - 1, j));
            rhs.mul_acc(beta, t.get(i - 1, j - 1));
            rhs.mul_acc(gamma, t.get(i, j - 1));
            r.check(|| format!("i={i},j={j}"), &lhs, &rhs);
        }
    }
    r
}

/// Linear constraints on the `(n+2)^2` tableau unknowns (row-major), one
/// row per netted cell and per boundary equation.
pub fn tableau_constraints(params: &NettedParams<BigInt>, n: usize) -> Vec<Vec<BigInt>> {
    let side = n + 2;
    let idx = |i: usize, j: usize| i * side + j;
    let zero = BigInt::from(0);
    let mut rows = Vec::new();
    for i in 1..=n + 1 {
        for j in 1..=n + 1 {
            let mut row = vec![zero.clone(); side * side];
            row[idx(i, j)] += &params.delta;
            row[idx(i - 1, j)] -= &params.alpha;
            row[idx(i - 1, j - 1)] -= &params.beta;
            row[idx(i, j - 1)] -= &params.gamma;
            rows.push(row);
        }
    }
    for i in 1..n {
        let mut left = vec![zero.clone(); side * side];
        left[idx(i, 0)] += &params.beta;
        left[idx(i + 1, 0)] += &params.gamma;
        rows.push(left);
        let mut right = vec![zero.clone(); side * side];
        right[idx(i + 1, n + 1)] += &params.delta;
        right[idx(i, n + 1)] -= &params.alpha;
        rows.push(right);
    }
    rows
}

/// A seeded random integer point of the solution space of the netted and
/// boundary equations, or `None` when that space is trivial.
pub fn sample_tableau(params: &NettedParams<BigInt>, n: usize, seed: u64) -> Result<Option<Tableau<BigInt>>> {
    if n < 2 {
        return Err(Error::DimensionTooSmall { min: 2, got: n });
    }
    let system = RatMatrix::from_int_rows(&tableau_constraints(params, n))?;
    let kernel = nullspace_rational(&system);
    if kernel.is_empty() {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs: Vec<i64> = kernel.iter().map(|_| rng.gen_range(-3..=3)).collect();
    if coeffs.iter().all(|&c| c == 0) {
        coeffs[0] = 1;
    }
    let unknowns = (n + 2) * (n + 2);
    let mut point = vec![BigRational::from_integer(BigInt::from(0)); unknowns];
    for (v, &c) in kernel.iter().zip(&coeffs) {
        if c == 0 {
            continue;
        }
        let c = BigRational::from_integer(BigInt::from(c));
        for (slot, x) in point.iter_mut().zip(v) {
            *slot += &c * x;
        }
    }
    let entries = point.into_iter().map(|x| x.to_integer()).collect();
    Tableau::new(n, entries, params.clone()).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{IntMatrix, ZPoly};

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn im(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()).unwrap()
    }

    fn kind(s: &str) -> FamilyKind {
        s.parse().unwrap()
    }

    #[test]
    fn quads_initial_conditions() {
        let p = NettedParams::<BigInt>::from_i64s(2, 3, 5, 7).unwrap();
        let q = coeff_sequences(&p, 2);
        assert_eq!((q[0].alpha.clone(), q[0].beta.clone(), q[0].gamma.clone(), q[0].delta.clone()), (int(2), int(3), int(5), int(7)));
        // (alpha(delta+beta), beta^2 - alpha gamma, gamma(beta+delta), delta^2 - alpha gamma)
        assert_eq!((q[1].alpha.clone(), q[1].beta.clone(), q[1].gamma.clone(), q[1].delta.clone()), (int(20), int(-1), int(50), int(39)));
        assert!(coeff_sequences(&p, 0).is_empty());
    }

    #[test]
    fn symbolic_quads_second_power() {
        let m = ZPoly::var();
        let p = NettedParams::new(ZPoly::one(), m.clone(), ZPoly::one().neg(), ZPoly::zero()).unwrap();
        let reports = verify_coeff_recurrence(&p, 12);
        assert!(reports[0].passed() && reports[1].passed());
    }

    #[test]
    fn pell_quad_at_three() {
        let p = NettedParams::<BigInt>::from_i64s(1, 2, -1, 0).unwrap();
        let q = &coeff_sequences(&p, 3)[2];
        assert_eq!((q.alpha.clone(), q.beta.clone(), q.gamma.clone(), q.delta.clone()), (int(5), int(12), int(-5), int(2)));
    }

    #[test]
    fn degenerate_params_rejected() {
        assert_eq!(NettedParams::<BigInt>::from_i64s(0, 0, 0, 0), Err(Error::DegenerateParams));
    }

    #[test]
    fn family_examples() {
        let one = int(1);
        assert_eq!(build_family(kind("a1"), 3, &one).unwrap().0, im(&[&[1, 0, 0], &[1, 1, 0], &[1, 2, 1]]));
        assert_eq!(build_family(kind("a2"), 3, &one).unwrap().0, im(&[&[0, 0, 1], &[0, 1, 1], &[1, 2, 1]]));
        assert_eq!(build_family(kind("a3"), 2, &one).unwrap().0, im(&[&[1, 1], &[0, 1]]));
        assert_eq!(build_family(kind("a1-alt"), 3, &one).unwrap().0, im(&[&[1, 0, 0], &[-1, 1, 0], &[1, -2, 1]]));
        let (_, p) = build_family(kind("a2"), 3, &one).unwrap();
        assert_eq!(p, NettedParams::from_i64s(1, 1, -1, 0).unwrap());
        assert!(matches!("a4".parse::<FamilyKind>(), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn every_family_is_netted() {
        for kind in FamilyKind::ALL {
            for n in 2..=6 {
                for m in [1, 2, -3] {
                    let (a, p) = build_family(kind, n, &int(m)).unwrap();
                    assert!(verify_power_netted(&a, &p, 4).unwrap().passed(), "{kind} n={n} m={m}");
                }
                let (a, p) = build_family(kind, n, &ZPoly::var()).unwrap();
                assert!(verify_power_netted(&a, &p, 3).unwrap().passed(), "{kind} n={n} symbolic");
            }
        }
    }

    #[test]
    fn third_family_needs_beta_one_gamma_minus_one() {
        let (a, p) = build_family(kind("a3"), 3, &int(1)).unwrap();
        assert_eq!(p, NettedParams::from_i64s(0, 1, -1, 1).unwrap());
        let swapped = NettedParams::from_i64s(0, -1, 1, 1).unwrap();
        assert!(verify_power_netted(&a, &swapped, 1).unwrap().failed());
    }

    #[test]
    fn identity_is_netted_under_diagonal_shift() {
        let p = NettedParams::<BigInt>::from_i64s(0, 1, 0, 1).unwrap();
        for n in 2..6 {
            assert!(verify_power_netted(&IntMatrix::identity(n), &p, 6).unwrap().passed());
        }
    }

    #[test]
    fn pascal_cube_all_interior_cells() {
        let (a, p) = build_family(kind("a1"), 5, &int(1)).unwrap();
        let r = verify_power_netted(&a, &p, 3).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks, 3 * 16);
    }

    #[test]
    fn fibonacci_coefficients_for_reflected_family() {
        // F_{e-1} a_ij = F_e a_{i-1,j} + F_{e+1} a_{i-1,j-1} - F_e a_{i,j-1}
        let (a, p) = build_family(kind("a2"), 4, &int(1)).unwrap();
        let q = &coeff_sequences(&p, 2)[1];
        assert_eq!((q.alpha.clone(), q.beta.clone(), q.gamma.clone(), q.delta.clone()), (int(1), int(2), int(-1), int(1)));
        let a2 = a.mat_pow(2).unwrap();
        let lhs = a2.get(1, 1).clone();
        let rhs = a2.get(0, 1) + int(2) * a2.get(0, 0) - a2.get(1, 0);
        assert_eq!(lhs, rhs);
        assert!(verify_power_netted(&a, &p, 2).unwrap().passed());
    }

    #[test]
    fn broken_matrix_reports_violations() {
        let (mut a, p) = build_family(kind("a1"), 4, &int(1)).unwrap();
        a.set(2, 2, int(5));
        let r = verify_power_netted(&a, &p, 2).unwrap();
        assert!(r.failed());
        assert!(r.witnesses.iter().any(|w| w.location.starts_with("e=1,")));
    }

    #[test]
    fn proof_form_discrepancy_is_visible() {
        let p = NettedParams::<BigInt>::from_i64s(1, 1, 0, 1).unwrap();
        let reports = verify_coeff_recurrence(&p, 10);
        assert!(reports[1].passed());
        assert_eq!(reports[2].status, crate::report::Status::DiscrepancyDocumented);
    }

    #[test]
    fn boundary_examples() {
        let (a, p) = build_family(kind("a2"), 4, &int(1)).unwrap();
        let t = Tableau::zero_border(&a, p).unwrap();
        assert!(boundary_check(&t).passed());

        let p = NettedParams::<BigInt>::from_i64s(1, 1, 0, 1).unwrap();
        let mut t = Tableau::zero_border(&IntMatrix::identity(3), p).unwrap();
        t.set(1, 0, int(1));
        let r = boundary_check(&t);
        assert!(r.failed());
        assert_eq!(r.witnesses[0].location, "left,i=1");
    }

    #[test]
    fn sampled_tableaux_are_sound() {
        for &(al, be, ga, de) in &[(1, 1, 0, 1), (1, 1, -1, 0), (0, 1, -1, 1), (2, 1, 1, 1)] {
            let p = NettedParams::<BigInt>::from_i64s(al, be, ga, de).unwrap();
            for seed in 0..3 {
                let t = sample_tableau(&p, 3, seed).unwrap().expect("nontrivial kernel");
                assert!(boundary_check(&t).passed());
                assert!(recurrence_check(&t).passed());
                assert!(verify_power_netted(&t.window(), &p, 3).unwrap().passed());
            }
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let p = NettedParams::<BigInt>::from_i64s(1, 1, 0, 1).unwrap();
        assert_eq!(sample_tableau(&p, 3, 9).unwrap(), sample_tableau(&p, 3, 9).unwrap());
        assert!(sample_tableau(&p, 1, 0).is_err());
    }

    #[test]
    fn kernel_contains_reflected_family() {
        // Look for a kernel element whose window is a2 and whose columns 0
        // and n+1 vanish on rows 1..n by solving K c = target there.
        let n = 3;
        let side = n + 2;
        let p = NettedParams::<BigInt>::from_i64s(1, 1, -1, 0).unwrap();
        let (a, _) = build_family(kind("a2"), n, &int(1)).unwrap();
        let kernel = nullspace_rational(&RatMatrix::from_int_rows(&tableau_constraints(&p, n)).unwrap());
        let mut coords = Vec::new();
        let mut target = Vec::new();
        for i in 1..=n {
            for j in 0..side {
                coords.push(i * side + j);
                target.push(if j == 0 || j == n + 1 { int(0) } else { a.get(i - 1, j - 1).clone() });
            }
        }
        let rows: Vec<Vec<BigRational>> = coords
            .iter()
            .zip(&target)
            .map(|(&c, t)| {
                let mut row: Vec<BigRational> = kernel.iter().map(|v| v[c].clone()).collect();
                row.push(BigRational::from_integer(-t.clone()));
                row
            })
            .collect();
        let aug = RatMatrix::new(rows.len(), kernel.len() + 1, rows.into_iter().flatten().collect()).unwrap();
        let sol = nullspace_rational(&aug);
        assert!(sol.iter().any(|v| v.last().is_some_and(|x| *x != BigRational::from_integer(int(0)))));
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(48))]

        #[test]
        fn families_netted_for_any_scale(k in 0usize..12, n in 2usize..8, m in -5i64..6) {
            let (a, p) = build_family(FamilyKind::ALL[k], n, &int(m)).unwrap();
            proptest::prop_assert!(verify_power_netted(&a, &p, 4).unwrap().passed());
        }

        #[test]
        fn quads_follow_second_order_recurrence(a in -4i64..5, b in -4i64..5, c in -4i64..5, d in -4i64..5) {
            proptest::prop_assume!((a, b, c, d) != (0, 0, 0, 0));
            let p = NettedParams::<BigInt>::from_i64s(a, b, c, d).unwrap();
            let reports = verify_coeff_recurrence(&p, 10);
            proptest::prop_assert!(reports[0].passed() && reports[1].passed());
        }
    }
}

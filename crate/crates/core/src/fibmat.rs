//! The generalized Fibonacci matrix `T_n(m)`.
//!
//! `T_n(m)[i][j] = m^(i+j-n-1) C(i-1, n-j)` (1-based), read as 0 whenever
//! the binomial vanishes. `T_2(m) = [[0,1],[1,m]]` is the classical
//! Fibonacci matrix; `m = 2` gives the Pell matrix.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{binomial, Matrix, Ring, ZPoly};
use crate::report::Report;
use crate::sequences::{SeqKind, SequenceGen};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibSpec<R> {
    pub n: usize,
    pub m: R,
}

impl<R: Ring> FibSpec<R> {
    pub fn new(n: usize, m: R) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionTooSmall { min: 1, got: 0 });
        }
        Ok(FibSpec { n, m })
    }

    fn u_table(&self, max: i64) -> SequenceGen<R> {
        SequenceGen::upto(SeqKind::U, self.m.clone(), max.max(1) as usize)
    }

    fn base_report(&self, claim: &str) -> Report {
        Report::new(claim).param("n", self.n).param("m", &self.m)
    }
}

/// `coef * prod base^exp`, where a negative exponent is only allowed next
/// to a zero coefficient (the term is then 0).
fn term<R: Ring>(coef: &BigInt, factors: &[(&R, i64)]) -> Result<R> {
    if Zero::is_zero(coef) {
        return Ok(R::zero());
    }
    let mut acc = R::from_int(coef);
    for &(base, exp) in factors {
        if exp < 0 {
            return Err(Error::InexactDivision(format!("negative power {exp} of {base}")));
        }
        acc = acc.mul(&base.pow(exp as u64));
    }
    Ok(acc)
}

pub fn build_t<R: Ring>(spec: &FibSpec<R>) -> Matrix<R> {
    let n = spec.n as i64;
    Matrix::from_fn(spec.n, spec.n, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        term(&binomial(i - 1, n - j), &[(&spec.m, i + j - n - 1)]).expect("exponent is nonnegative when the binomial is nonzero")
    })
}

/// `T_n(m)` grown from `T_1 = [1]` by bordering: a first column
/// `(0, ..., 0, 1)` on the left and a last row with `a[n][n] = m^(n-1)` and
/// `a[n][j] = m a[n-1][j] + a[n-1][j+1]` at the bottom.
pub fn build_t_by_bordering<R: Ring>(spec: &FibSpec<R>) -> Matrix<R> {
    let mut t = Matrix::<R>::identity(1);
    for k in 2..=spec.n {
        let prev = t;
        t = Matrix::from_fn(k, k, |i, j| {
            if i + 1 < k {
                if j == 0 {
                    R::zero()
                } else {
                    prev.get(i, j - 1).clone()
                }
            } else if j == 0 {
                R::one()
            } else {
                R::zero()
            }
        });
        let last = k - 1;
        t.set(last, last, spec.m.pow(last as u64));
        for j in 1..last {
            let v = spec.m.mul(t.get(last - 1, j)).add(t.get(last - 1, j + 1));
            t.set(last, j, v);
        }
    }
    t
}

/// `w_j = (-1)^(n+1-j) U_{n-j}` (1-based).
pub fn build_w<R: Ring>(spec: &FibSpec<R>) -> Vec<R> {
    let n = spec.n as i64;
    let u = spec.u_table(n);
    (1..=n).map(|j| u.at(n - j).signed(n + 1 - j)).collect()
}

/// `T_n(m)^-1[i][j] = (-1)^(n+i+j+1) m^(n+1-i-j) C(n-i, j-1)`.
pub fn build_t_inverse<R: Ring>(spec: &FibSpec<R>) -> Matrix<R> {
    let n = spec.n as i64;
    Matrix::from_fn(spec.n, spec.n, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        term(&binomial(n - i, j - 1), &[(&spec.m, n + 1 - i - j)])
            .expect("exponent is nonnegative when the binomial is nonzero")
            .signed(n + i + j + 1)
    })
}

/// `T^(e+1) w = (U_{(n-1)e}, ..., U_{(n-1)(e+1)})` for `0 <= e <= e_max`.
pub fn verify_power_vector<R: Ring>(spec: &FibSpec<R>, e_max: u64) -> Result<Report> {
    if spec.n < 2 {
        return Err(Error::DimensionTooSmall { min: 2, got: spec.n });
    }
    let n = spec.n as i64;
    let t = build_t(spec);
    let w = build_w(spec);
    let u = spec.u_table((n - 1) * (e_max as i64 + 1));
    let mut r = spec.base_report("thm3.2").param("e_max", e_max);
    let mut power = t.clone();
    for e in 0..=e_max as i64 {
        if e > 0 {
            power = power.mat_mul(&t)?;
        }
        let got = power.mul_vec(&w)?;
        for (k, value) in got.iter().enumerate() {
            let idx = (n - 1) * e + k as i64;
            r.check(|| format!("e={e},row={}", k + 1), &u.at(idx), value);
        }
    }
    Ok(r)
}

/// `U_{e-1} a_ij + U_e a_{i,j-1} = U_e a_{i-1,j} + U_{e+1} a_{i-1,j-1}` on
/// every power up to `e_max`.
pub fn verify_fib_recurrence<R: Ring>(spec: &FibSpec<R>, e_max: u64) -> Result<Report> {
    let t = build_t(spec);
    let u = spec.u_table(e_max as i64 + 1);
    let mut r = spec.base_report("thm3.2.recurrence").param("e_max", e_max);
    let mut power = t.clone();
    for e in 1..=e_max as i64 {
        if e > 1 {
            power = power.mat_mul(&t)?;
        }
        for i in 1..spec.n {
            for j in 1..spec.n {
                let lhs = u.at(e - 1).mul(power.get(i, j)).add(&u.at(e).mul(power.get(i, j - 1)));
                let rhs = u.at(e).mul(power.get(i - 1, j)).add(&u.at(e + 1).mul(power.get(i - 1, j - 1)));
                r.check(|| format!("e={e},i={},j={}", i + 1, j + 1), &lhs, &rhs);
            }
        }
    }
    Ok(r)
}

/// The characterization `a_1j = 0 (j < n)`, `a_in = m^(i-1)`,
/// `a_ij = m a_{i-1,j} + a_{i-1,j+1}`, plus agreement with the bordering
/// construction.
pub fn verify_uniqueness<R: Ring>(spec: &FibSpec<R>) -> Report {
    let t = build_t(spec);
    let n = spec.n;
    let mut r = spec.base_report("thm3.2.unique");
    for j in 0..n - 1 {
        r.check(|| format!("first-row,j={}", j + 1), &R::zero(), t.get(0, j));
    }
    for i in 0..n {
        r.check(|| format!("last-col,i={}", i + 1), &spec.m.pow(i as u64), t.get(i, n - 1));
    }
    for i in 1..n {
        for j in 0..n {
            let right = if j + 1 < n { t.get(i - 1, j + 1).clone() } else { R::zero() };
            let expected = spec.m.mul(t.get(i - 1, j)).add(&right);
            r.check(|| format!("step,i={},j={}", i + 1, j + 1), &expected, t.get(i, j));
        }
    }
    let bordered = build_t_by_bordering(spec);
    for i in 0..n {
        for j in 0..n {
            r.check(|| format!("bordering,i={},j={}", i + 1, j + 1), t.get(i, j), bordered.get(i, j));
        }
    }
    r
}

/// `T T^-1 = T^-1 T = I`.
pub fn verify_inverse<R: Ring>(spec: &FibSpec<R>) -> Result<Report> {
    let t = build_t(spec);
    let inv = build_t_inverse(spec);
    let id = Matrix::<R>::identity(spec.n);
    let mut r = spec.base_report("thm4.2");
    for (side, prod) in [("T*Tinv", t.mat_mul(&inv)?), ("Tinv*T", inv.mat_mul(&t)?)] {
        for i in 0..spec.n {
            for j in 0..spec.n {
                r.check(|| format!("{side},i={},j={}", i + 1, j + 1), id.get(i, j), prod.get(i, j));
            }
        }
    }
    Ok(r)
}

/// Which closed form covers a 1-based position of an `n x n` power.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Line {
    Row1,
    Col1,
    Row2,
    Col2,
    LastRow,
    LastCol,
}

pub fn line_of(n: usize, i: usize, j: usize) -> Result<Line> {
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::OutOfCoverage { n, i, j });
    }
    Ok(if i == 1 {
        Line::Row1
    } else if j == 1 {
        Line::Col1
    } else if i == 2 {
        Line::Row2
    } else if j == 2 {
        Line::Col2
    } else if i == n {
        Line::LastRow
    } else if j == n {
        Line::LastCol
    } else {
        return Err(Error::OutOfCoverage { n, i, j });
    })
}

fn row1<R: Ring>(n: i64, j: i64, u: &SequenceGen<R>, e: i64) -> Result<R> {
    term(&binomial(n - 1, j - 1), &[(&u.at(e - 1), n - j), (&u.at(e), j - 1)])
}

fn col1<R: Ring>(n: i64, i: i64, u: &SequenceGen<R>, e: i64) -> Result<R> {
    term(&BigInt::from(1), &[(&u.at(e - 1), n - i), (&u.at(e), i - 1)])
}

fn row2<R: Ring>(n: i64, j: i64, u: &SequenceGen<R>, e: i64) -> Result<R> {
    let (a, b, c) = (u.at(e - 1), u.at(e), u.at(e + 1));
    let first = term(&binomial(n - 2, j - 1), &[(&a, n - j - 1), (&b, j)])?;
    let second = term(&binomial(n - 2, j - 2), &[(&a, n - j), (&b, j - 2), (&c, 1)])?;
    Ok(first.add(&second))
}

/// Second column: `(n-i) U_{e-1}^(n-i-1) U_e^i + (i-1) U_{e-1}^(n-i) U_e^(i-2) U_{e+1}`.
fn col2<R: Ring>(n: i64, i: i64, u: &SequenceGen<R>, e: i64) -> Result<R> {
    let (a, b, c) = (u.at(e - 1), u.at(e), u.at(e + 1));
    let first = term(&BigInt::from(n - i), &[(&a, n - i - 1), (&b, i)])?;
    let second = term(&BigInt::from(i - 1), &[(&a, n - i), (&b, i - 2), (&c, 1)])?;
    Ok(first.add(&second))
}

/// The second-column expression with exponents `n-i`, `i-1`, `n-i+1`, as
/// it is commonly printed; it does not match the matrix powers and is kept
/// to document the difference.
pub fn printed_col2_entry<R: Ring>(spec: &FibSpec<R>, e: u64, i: usize) -> Result<R> {
    let (n, i, e) = (spec.n as i64, i as i64, e as i64);
    let u = spec.u_table(e + 1);
    let (a, b, c) = (u.at(e - 1), u.at(e), u.at(e + 1));
    let first = term(&BigInt::from(n - i), &[(&a, n - i), (&b, i - 1)])?;
    let second = term(&BigInt::from(i - 1), &[(&a, n - i + 1), (&b, i - 2), (&c, 1)])?;
    Ok(first.add(&second))
}

/// Closed form of entry `(i, j)` (1-based) of `T_n(m)^e` on the first,
/// second and last rows and columns. The last row and column of the `e`-th
/// power are the first row and column of the `(e+1)`-th.
pub fn closed_form_entry<R: Ring>(spec: &FibSpec<R>, e: u64, i: usize, j: usize) -> Result<R> {
    let line = line_of(spec.n, i, j)?;
    let (n, ii, jj, ee) = (spec.n as i64, i as i64, j as i64, e as i64);
    let u = spec.u_table(ee + 2);
    match line {
        Line::Row1 => row1(n, jj, &u, ee),
        Line::Col1 => col1(n, ii, &u, ee),
        Line::Row2 => row2(n, jj, &u, ee),
        Line::Col2 => col2(n, ii, &u, ee),
        Line::LastRow => row1(n, jj, &u, ee + 1),
        Line::LastCol => col1(n, ii, &u, ee + 1),
    }
}

/// Compares every closed form against `T^e` for `1 <= e <= e_max`.
pub fn verify_closed_forms<R: Ring>(spec: &FibSpec<R>, e_max: u64) -> Result<Vec<Report>> {
    let n = spec.n;
    let t = build_t(spec);
    let mut row1_r = spec.base_report("eq11.row1").param("e_max", e_max);
    let mut col1_r = spec.base_report("eq11.col1").param("e_max", e_max);
    let mut row2_r = spec.base_report("prop3.6.row2").param("e_max", e_max);
    let mut col2_r = spec.base_report("prop3.6.col2").param("e_max", e_max);
    let mut printed = spec.base_report("prop3.6.col2.printed").param("e_max", e_max);
    let mut last_r = spec.base_report("rem3.7").param("e_max", e_max);
    let mut power = t.clone();
    for e in 1..=e_max {
        if e > 1 {
            power = power.mat_mul(&t)?;
        }
        for i in 1..=n {
            for j in 1..=n {
                let Ok(line) = line_of(n, i, j) else { continue };
                let actual = power.get(i - 1, j - 1);
                let expected = closed_form_entry(spec, e, i, j)?;
                let report = match line {
                    Line::Row1 => &mut row1_r,
                    Line::Col1 => &mut col1_r,
                    Line::Row2 => &mut row2_r,
                    Line::Col2 => &mut col2_r,
                    Line::LastRow | Line::LastCol => &mut last_r,
                };
                report.check(|| format!("e={e},i={i},j={j}"), &expected, actual);
            }
            if n >= 2 {
                let expected = printed_col2_entry(spec, e, i)?;
                printed.check(|| format!("e={e},i={i},j=2"), &expected, power.get(i - 1, 1));
            }
        }
        // Last row and column in full, including cells owned by other lines.
        let next = power.mat_mul(&t)?;
        for k in 1..=n {
            last_r.check(|| format!("e={e},i={n},j={k}"), next.get(0, k - 1), power.get(n - 1, k - 1));
            last_r.check(|| format!("e={e},i={k},j={n}"), next.get(k - 1, 0), power.get(k - 1, n - 1));
        }
    }
    Ok(vec![row1_r, col1_r, row2_r, col2_r, printed.documented(), last_r])
}

/// The four binomial-sum identities and the general index-translation sum,
/// over `1 <= i <= n`, `0 <= l <= l_max`, `0 <= p <= p_max`.
///
/// The fourth identity has a factor `U_{l-1}^(-1)` in its `j = n` term; it
/// is evaluated by multiplying every term by `U_{l-1}` and dividing the
/// total exactly, and is skipped for `l` with `U_{l-1} = 0`.
pub fn verify_corollary_identities<R: Ring>(spec: &FibSpec<R>, l_max: u64, p_max: u64) -> Result<Vec<Report>> {
    let n = spec.n as i64;
    if n < 2 {
        return Err(Error::DimensionTooSmall { min: 2, got: spec.n });
    }
    let (l_max, p_max) = (l_max as i64, p_max as i64);
    let top = (n - 1) * (l_max + p_max + 1) + n + 2;
    let u = spec.u_table(top);
    let m = &spec.m;

    let mut id1 = spec.base_report("cor3.4.1");
    let mut id2 = spec.base_report("cor3.4.2");
    for i in 1..=n {
        let mut lhs1 = R::zero();
        for j in 1..=n {
            let t = term(&binomial(i - 1, n - j), &[(m, i + j - n - 1)])?;
            lhs1.add_assign(&t.mul(&u.at(n - j)).signed(n + 1 - j));
        }
        id1.check(|| format!("i={i}"), &u.at(i - 1), &lhs1);

        let mut lhs2 = R::zero();
        for j in 1..=n {
            for k in 1..=n {
                let c = binomial(i - 1, n - k) * binomial(k - 1, n - j);
                let t = term(&c, &[(m, i + j + 2 * k - 2 * n - 2)])?;
                lhs2.add_assign(&t.mul(&u.at(n - j)).signed(n + 1 - j));
            }
        }
        id2.check(|| format!("i={i}"), &u.at(n + i - 2), &lhs2);
    }

    let params = |r: Report| r.param("l_max", l_max).param("p_max", p_max);
    let mut id3 = params(spec.base_report("cor3.4.3"));
    let mut id4 = params(spec.base_report("cor3.4.4"));
    let mut rem = params(spec.base_report("rem3.5"));
    let powers = build_t(spec).powers(l_max as u64)?;
    for l in 0..=l_max {
        let (prev, cur) = (u.at(l - 1), u.at(l));
        for p in 0..=p_max {
            let base = (n - 1) * p;
            let mut lhs3 = R::zero();
            for j in 1..=n {
                let t = term(&binomial(n - 1, j - 1), &[(&prev, n - j), (&cur, j - 1)])?;
                lhs3.add_assign(&t.mul(&u.at(base + j - 1)));
            }
            id3.check(|| format!("l={l},p={p}"), &u.at((n - 1) * (l + p)), &lhs3);

            if !prev.is_zero() {
                let mut scaled = R::zero();
                for j in 1..=n {
                    let a = term(&binomial(n - 1, j - 1), &[(&prev, n - j), (&cur, j)])?;
                    let b = term(&binomial(n - 2, j - 2), &[(&prev, n - j), (&cur, j - 2)])?.signed(l);
                    scaled.add_assign(&a.add(&b).mul(&u.at(base + j - 1)));
                }
                let expected = u.at((n - 1) * (l + p) + 1);
                match scaled.div_exact(&prev) {
                    Some(lhs4) => {
                        id4.check(|| format!("l={l},p={p}"), &expected, &lhs4);
                    }
                    None => {
                        id4.check(|| format!("l={l},p={p} (inexact)"), &expected.mul(&prev), &scaled);
                    }
                }
            }

            let power = &powers[l as usize];
            for i in 1..=n {
                let mut lhs = R::zero();
                for j in 1..=n {
                    lhs.mul_acc(&u.at(base + j - 1), power.get((i - 1) as usize, (j - 1) as usize));
                }
                rem.check(|| format!("i={i},l={l},p={p}"), &u.at((n - 1) * (l + p) + i - 1), &lhs);
            }
        }
    }
    Ok(vec![id1, id2, id3, id4, rem])
}

/// `T_3(m)`, `T_3(m)^2`, `T_3(m)^3` as printed, coefficients lowest degree first.
pub fn printed_t3_powers() -> [Matrix<ZPoly>; 3] {
    let p = |c: &[i64]| ZPoly::from_ints(c);
    let mat = |rows: [[&[i64]; 3]; 3]| {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|c| p(c)).collect()).collect()).expect("3x3")
    };
    [
        mat([[&[0], &[0], &[1]], [&[0], &[1], &[0, 1]], [&[1], &[0, 2], &[0, 0, 1]]]),
        mat([
            [&[1], &[0, 2], &[0, 0, 1]],
            [&[0, 1], &[1, 0, 2], &[0, 1, 0, 1]],
            [&[0, 0, 1], &[0, 2, 0, 2], &[1, 0, 2, 0, 1]],
        ]),
        mat([
            [&[0, 0, 1], &[0, 2, 0, 2], &[1, 0, 2, 0, 1]],
            [&[0, 1, 0, 1], &[1, 0, 4, 0, 2], &[0, 2, 0, 3, 0, 1]],
            [&[1, 0, 2, 0, 1], &[0, 4, 0, 6, 0, 2], &[0, 0, 4, 0, 4, 0, 1]],
        ]),
    ]
}

/// Symbolic `T_3(m)^e`, `e = 1, 2, 3`, against the printed matrices.
pub fn verify_t3_example() -> Result<Report> {
    let spec = FibSpec::new(3, ZPoly::var())?;
    let t = build_t(&spec);
    let mut r = Report::new("ex3.3").param("n", 3).param("m", "symbolic");
    for (k, printed) in printed_t3_powers().iter().enumerate() {
        let e = k as u64 + 1;
        let computed = t.mat_pow(e)?;
        for i in 0..3 {
            for j in 0..3 {
                r.check(|| format!("e={e},i={},j={}", i + 1, j + 1), printed.get(i, j), computed.get(i, j));
            }
        }
    }
    Ok(r)
}

//! Bivariate truncated series for the entries of `T_n(m)^e`.
//!
//! `B(x, y) = sum a_ij x^(i-1) y^(j-1)` satisfies
//! `B (U_{e-1} + U_e y - x (U_e + U_{e+1} y)) = (U_{e-1} + U_e y)^n`
//! on the `n x n` window.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::Ring;
use crate::fibmat::{build_t, FibSpec};
use crate::report::{Report, Witness};
use crate::sequences::{SeqKind, SequenceGen};

/// Dense series `sum c[a][b] x^a y^b` truncated to `a <= deg_x`, `b <= deg_y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries<R> {
    deg_x: usize,
    deg_y: usize,
    coeffs: Vec<Vec<R>>,
}

impl<R: Ring> BiSeries<R> {
    pub fn zero(deg_x: usize, deg_y: usize) -> Self {
        BiSeries { deg_x, deg_y, coeffs: vec![vec![R::zero(); deg_y + 1]; deg_x + 1] }
    }

    /// Builds from `(a, b, c)` terms; terms outside the window are dropped.
    pub fn from_terms(deg_x: usize, deg_y: usize, terms: impl IntoIterator<Item = (usize, usize, R)>) -> Self {
        let mut s = Self::zero(deg_x, deg_y);
        for (a, b, c) in terms {
            if a <= deg_x && b <= deg_y {
                s.coeffs[a][b].add_assign(&c);
            }
        }
        s
    }

    pub fn deg_x(&self) -> usize {
        self.deg_x
    }

    pub fn deg_y(&self) -> usize {
        self.deg_y
    }

    pub fn coeff(&self, a: usize, b: usize) -> R {
        self.coeffs.get(a).and_then(|row| row.get(b)).cloned().unwrap_or_else(R::zero)
    }

    pub fn set(&mut self, a: usize, b: usize, c: R) {
        self.coeffs[a][b] = c;
    }

    /// Product truncated to the window of `self`.
    pub fn mul_trunc(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.deg_x, self.deg_y);
        for (a1, row) in rhs.coeffs.iter().enumerate() {
            for (b1, c1) in row.iter().enumerate() {
                if c1.is_zero() {
                    continue;
                }
                for a0 in 0..=self.deg_x.saturating_sub(a1) {
                    if a0 + a1 > self.deg_x {
                        break;
                    }
                    for b0 in 0..=self.deg_y {
                        if b0 + b1 > self.deg_y {
                            break;
                        }
                        let c0 = &self.coeffs[a0][b0];
                        out.coeffs[a0 + a1][b0 + b1].mul_acc(c0, c1);
                    }
                }
            }
        }
        out
    }

    pub fn pow_trunc(&self, k: u64) -> Self {
        let mut acc = Self::from_terms(self.deg_x, self.deg_y, [(0, 0, R::one())]);
        for _ in 0..k {
            acc = acc.mul_trunc(self);
        }
        acc
    }

    /// `self / den` on the window, solving for coefficients in graded order.
    /// Fails when `den(0, 0)` does not divide exactly.
    pub fn div_trunc(&self, den: &Self) -> Result<Self> {
        let c0 = den.coeff(0, 0);
        let mut q = Self::zero(self.deg_x, self.deg_y);
        for a in 0..=self.deg_x {
            for b in 0..=self.deg_y {
                let mut rest = self.coeffs[a][b].clone();
                for da in 0..=a {
                    for db in 0..=b {
                        if da == 0 && db == 0 {
                            continue;
                        }
                        let d = den.coeff(da, db);
                        if !d.is_zero() {
                            rest = rest.sub(&d.mul(&q.coeffs[a - da][b - db]));
                        }
                    }
                }
                let v = rest
                    .div_exact(&c0)
                    .ok_or_else(|| Error::InexactDivision(format!("{rest} by {c0} at x^{a} y^{b}")))?;
                q.coeffs[a][b] = v;
            }
        }
        Ok(q)
    }
}

impl<R: Ring> fmt::Display for BiSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for a in 0..=self.deg_x {
            for b in 0..=self.deg_y {
                let c = &self.coeffs[a][b];
                if c.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "({c})*x^{a}*y^{b}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `sum a_ij x^(i-1) y^(j-1)` from `T_n(m)^e`.
pub fn series_from_power<R: Ring>(spec: &FibSpec<R>, e: u64) -> Result<BiSeries<R>> {
    let n = spec.n;
    let power = build_t(spec).mat_pow(e)?;
    let mut s = BiSeries::zero(n - 1, n - 1);
    for i in 0..n {
        for j in 0..n {
            s.set(i, j, power.get(i, j).clone());
        }
    }
    Ok(s)
}

/// Numerator `(U_{e-1} + U_e y)^n` and denominator
/// `U_{e-1} + U_e y - x (U_e + U_{e+1} y)` on the `n x n` window.
pub fn closed_form_parts<R: Ring>(spec: &FibSpec<R>, e: u64) -> (BiSeries<R>, BiSeries<R>) {
    let w = spec.n - 1;
    let e = e as i64;
    let u = SequenceGen::upto(SeqKind::U, spec.m.clone(), e as usize + 1);
    let (prev, cur, next) = (u.at(e - 1), u.at(e), u.at(e + 1));
    let base = BiSeries::from_terms(w, w, [(0, 0, prev.clone()), (0, 1, cur.clone())]);
    let num = base.pow_trunc(spec.n as u64);
    let den = BiSeries::from_terms(w, w, [(0, 0, prev), (0, 1, cur.clone()), (1, 0, cur.neg()), (1, 1, next.neg())]);
    (num, den)
}

/// Checks `B D = N` on the window; for `e >= 2` also that `N / D`, expanded
/// as a series, reproduces `B` (reported as `thm4.1.division`, which needs
/// `U_{e-1} != 0`).
pub fn verify_genfunc<R: Ring>(spec: &FibSpec<R>, e: u64) -> Result<Vec<Report>> {
    if e == 0 {
        return Err(Error::UnsupportedIndex(0));
    }
    let w = spec.n - 1;
    let p = series_from_power(spec, e)?;
    let (num, den) = closed_form_parts(spec, e);
    let prod = p.mul_trunc(&den);
    let base = |claim: &str| Report::new(claim).param("n", spec.n).param("m", &spec.m).param("e", e);
    let mut r = base("thm4.1");
    for a in 0..=w {
        for b in 0..=w {
            r.check(|| format!("x^{a}*y^{b}"), &num.coeff(a, b), &prod.coeff(a, b));
        }
    }
    let mut out = vec![r];
    if e >= 2 && den.coeff(0, 0).is_zero() {
        out.push(base("thm4.1.division").hypothesis_not_satisfied(Witness::new("U_(e-1)", "nonzero", "0")));
    } else if e >= 2 {
        let mut d = base("thm4.1.division");
        match num.div_trunc(&den) {
            Ok(q) => {
                for a in 0..=w {
                    for b in 0..=w {
                        d.check(|| format!("x^{a}*y^{b}"), &p.coeff(a, b), &q.coeff(a, b));
                    }
                }
            }
            Err(err) => {
                d.check(|| "series division".to_string(), &"exact".to_string(), &err.to_string());
            }
        }
        out.push(d);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ZPoly;
    use num_bigint::BigInt;

    fn sym(n: usize) -> FibSpec<ZPoly> {
        FibSpec::new(n, ZPoly::var()).unwrap()
    }

    #[test]
    fn series_examples() {
        let s = series_from_power(&sym(2), 1).unwrap();
        assert_eq!(s.coeff(0, 0), ZPoly::zero());
        assert_eq!(s.coeff(0, 1), ZPoly::one());
        assert_eq!(s.coeff(1, 0), ZPoly::one());
        assert_eq!(s.coeff(1, 1), ZPoly::var());
        assert_eq!(series_from_power(&sym(3), 1).unwrap().coeff(2, 2), ZPoly::from_ints(&[0, 0, 1]));
        assert_eq!(series_from_power(&sym(3), 2).unwrap().coeff(1, 2), ZPoly::from_ints(&[0, 1, 0, 1]));
    }

    #[test]
    fn window_identity() {
        for n in 2..=6 {
            for m in 1..=3 {
                let spec = FibSpec::new(n, BigInt::from(m)).unwrap();
                for e in 1..=4 {
                    for r in verify_genfunc(&spec, e).unwrap() {
                        assert!(r.passed(), "{r}");
                    }
                }
            }
        }
        for n in 2..=3 {
            for e in 1..=3 {
                for r in verify_genfunc(&sym(n), e).unwrap() {
                    assert!(r.passed(), "{r}");
                }
            }
        }
    }

    #[test]
    fn division_only_from_e2() {
        let spec = FibSpec::new(3, BigInt::from(1)).unwrap();
        assert_eq!(verify_genfunc(&spec, 1).unwrap().len(), 1);
        assert_eq!(verify_genfunc(&spec, 2).unwrap().len(), 2);
        assert!(verify_genfunc(&spec, 0).is_err());
    }

    #[test]
    fn detects_corrupted_series() {
        let spec = FibSpec::new(3, BigInt::from(2)).unwrap();
        let mut p = series_from_power(&spec, 2).unwrap();
        p.set(1, 1, p.coeff(1, 1).add(&BigInt::from(1)));
        let (num, den) = closed_form_parts(&spec, 2);
        assert_ne!(p.mul_trunc(&den), num);
    }

    #[test]
    fn division_is_inverse_of_product() {
        let a = BiSeries::from_terms(3, 3, [(0, 0, BigInt::from(2)), (1, 2, BigInt::from(-3)), (2, 1, BigInt::from(5))]);
        let d = BiSeries::from_terms(3, 3, [(0, 0, BigInt::from(1)), (0, 1, BigInt::from(4)), (1, 0, BigInt::from(-1))]);
        assert_eq!(a.mul_trunc(&d).div_trunc(&d).unwrap(), a);
        let bad = BiSeries::from_terms(1, 1, [(0, 0, BigInt::from(2))]);
        let one = BiSeries::from_terms(1, 1, [(0, 0, BigInt::from(1))]);
        assert!(one.div_trunc(&bad).is_err());
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(48))]

        #[test]
        fn window_identity_for_any_m(n in 2usize..8, m in -5i64..6, e in 1u64..6) {
            let spec = FibSpec::new(n, BigInt::from(m)).unwrap();
            for r in verify_genfunc(&spec, e).unwrap() {
                proptest::prop_assert!(!r.failed(), "{}", r);
                proptest::prop_assert!(r.passed() || m == 0, "{}", r);
            }
        }
    }
}

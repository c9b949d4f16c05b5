use std::fmt;

use num_bigint::BigInt;

use super::ring::Ring;

/// Dense univariate polynomial, lowest degree first.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and every other polynomial has a nonzero leading coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

/// Integer polynomials in the indeterminate `m`.
pub type ZPoly = Poly<BigInt>;

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: R, degree: usize) -> Self {
        if c.is_zero() {
            return Self::new(Vec::new());
        }
        let mut coeffs = vec![R::zero(); degree + 1];
        coeffs[degree] = c;
        Poly { coeffs }
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::monomial(R::one(), 1)
    }

    /// Builds from small integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| R::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn eval(&self, at: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    pub fn scale(&self, k: &R) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mul(k)).collect())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    fn nonzero_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Formats with an explicit variable name.
    pub fn display_with<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, var }
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn from_int(v: &BigInt) -> Self {
        Self::constant(R::from_int(v))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }

    fn add_assign(&mut self, rhs: &Self) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), R::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            a.add_assign(b);
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(R::neg).collect() }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        out.mul_acc(self, rhs);
        out
    }

    fn mul_acc(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        // Iterate the sparser operand in the outer loop; powers of T_n(m)
        // are multiplied by monomials most of the time.
        let (outer, inner) = if a.nonzero_terms() <= b.nonzero_terms() { (a, b) } else { (b, a) };
        let len = a.coeffs.len() + b.coeffs.len() - 1;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, R::zero());
        }
        for (i, x) in outer.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in inner.coeffs.iter().enumerate() {
                self.coeffs[i + j].mul_acc(x, y);
            }
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let d = rhs.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lead = rhs.leading()?;
        let mut rem = self.coeffs.clone();
        let top = rem.len().checked_sub(d + 1)?;
        let mut quot = vec![R::zero(); top + 1];
        for k in (0..=top).rev() {
            let c = &rem[k + d];
            if c.is_zero() {
                continue;
            }
            let q = c.div_exact(lead)?;
            for (t, r) in rhs.coeffs.iter().enumerate() {
                rem[k + t] = rem[k + t].sub(&q.mul(r));
            }
            quot[k] = q;
        }
        rem.iter().all(R::is_zero).then(|| Self::new(quot))
    }

    fn div_exact_int(&self, d: &BigInt) -> Option<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.div_exact_int(d))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(coeffs))
    }

    fn depth() -> usize {
        R::depth() + 1
    }

    fn is_atomic(&self) -> bool {
        match self.nonzero_terms() {
            0 => true,
            1 => self.coeffs.iter().all(|c| c.is_zero() || c.is_atomic()),
            _ => false,
        }
    }
}

const VARS: [&str; 3] = ["m", "x", "z"];

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = VARS[(Self::depth() - 1).min(VARS.len() - 1)];
        write!(f, "{}", self.display_with(var))
    }
}

struct PolyDisplay<'a, R> {
    poly: &'a Poly<R>,
    var: &'a str,
}

impl<R: Ring> fmt::Display for PolyDisplay<'_, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => self.var.to_string(),
                _ => format!("{}^{}", self.var, k),
            };
            let term = if mono.is_empty() {
                c.to_string()
            } else if c.is_one() {
                mono
            } else if c.neg().is_one() {
                format!("-{mono}")
            } else if c.is_atomic() {
                format!("{c}*{mono}")
            } else {
                format!("({c})*{mono}")
            };
            terms.push(term);
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            match t.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(t);
                }
            }
        }
        f.write_str(&out)
    }
}

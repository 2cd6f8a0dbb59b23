use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Integer Laurent polynomial in one variable. Zero coefficients are never
/// stored, so derived equality is coefficient-wise equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(coeff, exp);
        p
    }

    /// Builds `sum coeffs[k] * x^(low + k)`.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            p.add_term(c, low + k as i64);
        }
        p
    }

    pub fn add_term(&mut self, coeff: i64, exp: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.terms.entry(exp).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    pub fn scale(&self, s: i64) -> Self {
        let mut p = Self::zero();
        for (e, c) in self.terms() {
            p.add_term(c * s, e);
        }
        p
    }

    /// Substitutes `x -> x^-1`.
    pub fn mirror(&self) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect() }
    }

    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// `n`-th derivative evaluated at `x = 1`.
    pub fn derivative_at_one(&self, n: u32) -> i64 {
        self.terms()
            .map(|(e, c)| {
                let falling: i64 = (0..n as i64).map(|k| e - k).product();
                c * falling
            })
            .sum()
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut p = self.clone();
        for (e, c) in rhs.terms() {
            p.add_term(c, e);
        }
        p
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut p = self.clone();
        for (e, c) in rhs.terms() {
            p.add_term(-c, e);
        }
        p
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut p = LaurentPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                p.add_term(c1 * c2, e1 + e2);
            }
        }
        p
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.scale(-1)
    }
}

impl LaurentPolynomial {
    /// Human-readable form in the variable `var`.
    pub fn format(&self, var: &str) -> String {
        Formatted(self, var).to_string()
    }
}

struct Formatted<'a>(&'a LaurentPolynomial, &'a str);

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Formatted(self, "z").fmt(f)
    }
}

impl fmt::Display for Formatted<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Formatted(p, v) = *self;
        if p.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in p.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match (a, e) {
                (_, 0) => write!(f, "{a}")?,
                (1, 1) => write!(f, "{v}")?,
                (1, _) => write!(f, "{v}^{e}")?,
                (_, 1) => write!(f, "{a}{v}")?,
                _ => write!(f, "{a}{v}^{e}")?,
            }
        }
        Ok(())
    }
}

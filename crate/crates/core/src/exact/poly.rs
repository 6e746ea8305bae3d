//! Dense univariate polynomials over [`Rational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;

/// Coefficients in ascending degree. The highest stored coefficient is
/// never zero; the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `c * x^degree`.
    pub fn monomial(c: Rational, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        UniPoly { coeffs }
    }

    /// `a*x + b`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![b, a])
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(Rational::is_one)
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, by: &Rational) -> Self {
        if by.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c * by).collect(),
        }
    }

    /// Multiplies by `x^shift`.
    pub fn shift_up(&self, shift: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes another polynomial for the variable.
    pub fn compose(&self, inner: &UniPoly) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    /// `p(a*x + b)`, expanded: a Taylor shift by `b` followed by scaling
    /// the `i`-th coefficient by `a^i`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Self {
        let mut c = self.coeffs.clone();
        taylor_shift(&mut c, b, |acc, next, by| *acc += &(next * by));
        let mut scale = Rational::one();
        for coeff in c.iter_mut().skip(1) {
            scale *= a;
            *coeff *= &scale;
        }
        Self::new(c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from(i))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c / Rational::from(i + 1)),
        );
        UniPoly { coeffs }
    }

    /// Exact `∫_lo^hi p(t) dt`.
    pub fn definite_integral(&self, lo: &Rational, hi: &Rational) -> Rational {
        let anti = self.antiderivative();
        anti.eval(hi) - anti.eval(lo)
    }

    /// Human-readable form in descending degree, e.g. `x^2 - 2/3 x`.
    pub fn pretty(&self, var: &str) -> String {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| (c.clone(), monomial_text(var, d)));
        join_terms(terms)
    }
}

/// In-place Taylor shift `c(x) -> c(x + by)` over any coefficient ring,
/// given `fma(acc, next, by)` computing `acc += next * by`.
pub(crate) fn taylor_shift<T, S>(c: &mut [T], by: &S, fma: impl Fn(&mut T, &T, &S)) {
    let d = c.len();
    for i in 0..d.saturating_sub(1) {
        for j in (i..d - 1).rev() {
            let (lo, hi) = c.split_at_mut(j + 1);
            fma(&mut lo[j], &hi[0], by);
        }
    }
}

pub(crate) fn monomial_text(var: &str, degree: usize) -> String {
    match degree {
        0 => String::new(),
        1 => var.to_string(),
        d => format!("{var}^{d}"),
    }
}

/// Joins `(coefficient, monomial)` pairs with explicit signs. An empty
/// monomial string denotes a constant term.
pub(crate) fn join_terms(terms: impl Iterator<Item = (Rational, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let negative = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag} {mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self.pretty("x"))
    }
}

impl From<Rational> for UniPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        UniPoly::new(coeffs)
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly { (&self).$m(&rhs) }
        }
        impl $tr<&UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: &UniPoly) -> UniPoly { (&self).$m(rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl std::iter::Sum for UniPoly {
    fn sum<I: Iterator<Item = UniPoly>>(iter: I) -> Self {
        iter.fold(UniPoly::zero(), |acc, p| &acc + &p)
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Vec::<Rational>::deserialize(deserializer).map(UniPoly::new)
    }
}

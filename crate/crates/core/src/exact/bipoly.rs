//! Polynomials in `x` whose coefficients are polynomials in `y`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{join_terms, monomial_text, taylor_shift};
use super::{Rational, UniPoly};

/// Which variable of a [`BiPoly`] to substitute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// x-major: `x_coeffs[i]` is the coefficient of `x^i`, a polynomial in `y`.
/// The last stored coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    x_coeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn new(mut x_coeffs: Vec<UniPoly>) -> Self {
        while x_coeffs.last().is_some_and(UniPoly::is_zero) {
            x_coeffs.pop();
        }
        BiPoly { x_coeffs }
    }

    pub fn zero() -> Self {
        BiPoly::default()
    }

    /// Lifts a polynomial in `x` with constant coefficients.
    pub fn from_x_poly(p: &UniPoly) -> Self {
        Self::new(p.coeffs().iter().cloned().map(UniPoly::constant).collect())
    }

    /// Lifts a polynomial in `y` (constant in `x`).
    pub fn from_y_poly(p: UniPoly) -> Self {
        Self::new(vec![p])
    }

    pub fn x_coeffs(&self) -> &[UniPoly] {
        &self.x_coeffs
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.x_coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.x_coeffs.is_empty()
    }

    /// Substitutes `value` for one variable, leaving a polynomial in the other.
    pub fn partial_eval(&self, which: Var, value: &Rational) -> UniPoly {
        match which {
            Var::X => self
                .x_coeffs
                .iter()
                .rev()
                .fold(UniPoly::zero(), |acc, c| &acc.scale(value) + c),
            Var::Y => UniPoly::new(self.x_coeffs.iter().map(|c| c.eval(value)).collect()),
        }
    }

    /// Multiplies every x-coefficient by a polynomial in `y`.
    pub fn mul_y(&self, factor: &UniPoly) -> Self {
        Self::new(self.x_coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn scale(&self, by: &Rational) -> Self {
        Self::new(self.x_coeffs.iter().map(|c| c.scale(by)).collect())
    }

    /// `q(a*x + b; y)`.
    pub fn compose_x_affine(&self, a: &Rational, b: &Rational) -> Self {
        let mut c = self.x_coeffs.clone();
        taylor_shift(&mut c, b, |acc, next, by| *acc = &*acc + &next.scale(by));
        let mut scale = Rational::one();
        for coeff in c.iter_mut().skip(1) {
            scale *= a;
            *coeff = coeff.scale(&scale);
        }
        Self::new(c)
    }

    /// Integrates each x-coefficient over `y ∈ [lo, hi]`.
    pub fn integrate_y(&self, lo: &Rational, hi: &Rational) -> UniPoly {
        UniPoly::new(
            self.x_coeffs
                .iter()
                .map(|c| c.definite_integral(lo, hi))
                .collect(),
        )
    }

    /// Expanded monomials, descending in `x` then `y`.
    pub fn pretty(&self) -> String {
        let terms = self.x_coeffs.iter().enumerate().rev().flat_map(|(i, c)| {
            c.coeffs()
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(j, v)| {
                    let mono = [monomial_text("x", i), monomial_text("y", j)]
                        .into_iter()
                        .filter(|s| !s.is_empty())
                        .collect::<Vec<_>>()
                        .join(" ");
                    (v.clone(), mono)
                })
        });
        join_terms(terms)
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({})", self.pretty())
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let len = self.x_coeffs.len().max(rhs.x_coeffs.len());
        let zero = UniPoly::zero();
        BiPoly::new(
            (0..len)
                .map(|i| {
                    self.x_coeffs.get(i).unwrap_or(&zero) + rhs.x_coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &rhs.scale(&-Rational::one())
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![UniPoly::zero(); self.x_coeffs.len() + rhs.x_coeffs.len() - 1];
        for (i, a) in self.x_coeffs.iter().enumerate() {
            for (j, b) in rhs.x_coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BiPoly::new(out)
    }
}

impl std::iter::Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> Self {
        iter.fold(BiPoly::zero(), |acc, q| &acc + &q)
    }
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.x_coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Vec::<UniPoly>::deserialize(deserializer).map(BiPoly::new)
    }
}

//! Exact scalars and polynomials.

mod bipoly;
mod poly;
mod rational;

pub use bipoly::{BiPoly, Var};
pub use poly::UniPoly;
pub use rational::Rational;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(n, k)` as an integer; zero when `k < 0` or `k > n`.
pub fn binomial_int(n: usize, k: i64) -> BigInt {
    if k < 0 || k as u64 > n as u64 {
        return BigInt::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binomial(n: usize, k: i64) -> Rational {
    Rational::from_integer(binomial_int(n, k))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(7, 0), 1);
        assert_eq!(binomial(5, 7), 0);
        assert_eq!(binomial(5, -1), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial_int(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn pascal_rule() {
        for n in 1..30usize {
            for k in 0..=n as i64 {
                assert_eq!(
                    binomial_int(n, k),
                    binomial_int(n - 1, k) + binomial_int(n - 1, k - 1)
                );
            }
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(10), BigInt::from(3_628_800));
    }
}

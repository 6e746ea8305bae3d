//! Bernoulli, p-Bernoulli and geometric sequences.
//!
//! Every p-Bernoulli number can be produced by four independent routes
//! (see [`Route`]); they must agree exactly, which is what the verifier
//! and the test suites lean on. Results are memoized in a [`Sequences`]
//! context that is safe to share between threads.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::sync::RwLock;

use crate::combinatorics::{r_stirling2, stirling2};
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, BiPoly, Rational, UniPoly};

/// Index `n` and parameter `p` of `B_{n,p}` and `B_{n,p}(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PBernoulliKey {
    pub n: usize,
    pub p: usize,
}

impl PBernoulliKey {
    pub fn new(n: usize, p: usize) -> Self {
        PBernoulliKey { n, p }
    }
}

/// Ways to compute `B_{n,p}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// `B_{m+1,q} = q B_{m,q} - (q+1)^2/(q+2) B_{m,q+1}` from `B_{0,q} = 1`.
    Recurrence,
    /// `(p+1)/p! Σ_k S_p(n+p, k+p) (-1)^k (k+p)!/(k+p+1)`.
    ExplicitPStirling,
    /// `(p+1) Σ_{k≥1} S(n,k) (-1)^(k+n+1) k!/((k+p)(k+p+1))`; needs `n ≥ 1`.
    ExplicitTheorem4,
    /// `(p+1) ∫_{-1}^0 (1+y)^p w_n(y) dy`.
    WeightedIntegral,
}

impl Route {
    pub const ALL: [Route; 4] = [
        Route::Recurrence,
        Route::ExplicitPStirling,
        Route::ExplicitTheorem4,
        Route::WeightedIntegral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::Recurrence => "recurrence",
            Route::ExplicitPStirling => "explicit-p-stirling",
            Route::ExplicitTheorem4 => "explicit-theorem4",
            Route::WeightedIntegral => "weighted-integral",
        }
    }

    /// Smallest `n` the route is defined for.
    pub fn min_n(self) -> usize {
        match self {
            Route::ExplicitTheorem4 => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown route {s:?}")))
    }
}

/// Exponent of the alternating sign in the Stirling-sum formula for
/// `B_{n,p}`. Only `KPlusNPlusOne` reproduces the recurrence; `KPlusN`
/// differs by an overall sign and is kept so the mismatch can be shown.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignExponent {
    KPlusN,
    KPlusNPlusOne,
}

/// Route for the alternating reciprocal-binomial sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AltSumRoute {
    Direct,
    ClosedForm,
}

impl FromStr for AltSumRoute {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(AltSumRoute::Direct),
            "closed-form" => Ok(AltSumRoute::ClosedForm),
            _ => Err(Error::Parse(format!("unknown altsum route {s:?}"))),
        }
    }
}

type Memo<K, V> = RwLock<HashMap<K, V>>;

fn memo<K: Eq + Hash + Copy, V: Clone>(table: &Memo<K, V>, key: K, f: impl FnOnce() -> V) -> V {
    if let Some(v) = table.read().expect("memo lock poisoned").get(&key) {
        return v.clone();
    }
    // Computed without holding the lock; `f` may recurse into the same table.
    let v = f();
    table
        .write()
        .expect("memo lock poisoned")
        .entry(key)
        .or_insert(v)
        .clone()
}

/// Memoizing constructor context for every sequence.
#[derive(Debug, Default)]
pub struct Sequences {
    bernoulli: Memo<usize, Rational>,
    bernoulli_poly: Memo<usize, UniPoly>,
    p_bernoulli: Memo<(usize, usize), Rational>,
    p_bernoulli_poly: Memo<(usize, usize), UniPoly>,
    geometric: Memo<usize, UniPoly>,
}

impl Sequences {
    pub fn new() -> Self {
        Self::default()
    }

    /// `B_n` from `Σ_k S(n,k) (-1)^k k!/(k+1)`; `B_1 = -1/2`.
    pub fn bernoulli_number(&self, n: usize) -> Rational {
        memo(&self.bernoulli, n, || {
            (0..=n)
                .map(|k| {
                    Rational::from_integer(stirling2(n, k as i64) * factorial(k))
                        * Rational::sign_power(k)
                        / Rational::from(k + 1)
                })
                .sum()
        })
    }

    /// `B_n(x) = Σ_k C(n,k) B_k x^(n-k)`.
    pub fn bernoulli_poly(&self, n: usize) -> UniPoly {
        memo(&self.bernoulli_poly, n, || {
            UniPoly::new(
                (0..=n)
                    .map(|j| binomial(n, j as i64) * self.bernoulli_number(n - j))
                    .collect(),
            )
        })
    }

    /// `w_n(y)` expanded from its Stirling-number form.
    pub fn geometric_poly(&self, n: usize) -> UniPoly {
        if n == 0 {
            return UniPoly::one();
        }
        memo(&self.geometric, n, || {
            let y_plus_one = UniPoly::from_integers(&[1, 1]);
            let mut power = UniPoly::one();
            let mut sum = UniPoly::zero();
            for k in 1..=n {
                let c = Rational::from_integer(stirling2(n, k as i64) * factorial(k))
                    * Rational::sign_power(n + k);
                sum = &sum + &power.scale(&c);
                power = &power * &y_plus_one;
            }
            sum.shift_up(1)
        })
    }

    /// `w_n(x; y) = Σ_k C(n,k) w_k(y) x^(n-k)`.
    pub fn geometric_poly_two_var(&self, n: usize) -> BiPoly {
        BiPoly::new(
            (0..=n)
                .map(|j| self.geometric_poly(n - j).scale(&binomial(n, j as i64)))
                .collect(),
        )
    }

    /// `∫_{-1}^0 (1+y)^p w_n(y) dy`, equal to `B_{n,p}/(p+1)`.
    pub fn weighted_geometric_integral(&self, n: usize, p: usize) -> Rational {
        let weight = UniPoly::from_integers(&[1, 1]).pow(p);
        (&weight * &self.geometric_poly(n)).definite_integral(&-Rational::one(), &Rational::zero())
    }

    /// `B_{n,p}` by the default (recurrence) route.
    pub fn p_bernoulli(&self, n: usize, p: usize) -> Rational {
        if let Some(v) = self
            .p_bernoulli
            .read()
            .expect("memo lock poisoned")
            .get(&(n, p))
        {
            return v.clone();
        }
        self.fill_recurrence(n, p)
    }

    // Fills the triangle B_{m,q}, m + (q - p) <= n, and caches all of it.
    fn fill_recurrence(&self, n: usize, p: usize) -> Rational {
        let mut row: Vec<Rational> = vec![Rational::one(); n + 1];
        let mut computed = Vec::with_capacity((n + 1) * (n + 2) / 2);
        for (i, v) in row.iter().enumerate() {
            computed.push(((0, p + i), v.clone()));
        }
        for m in 1..=n {
            let next: Vec<Rational> = (0..=n - m)
                .map(|i| {
                    let q = p + i;
                    let ratio = Rational::from((q + 1) * (q + 1)) / Rational::from(q + 2);
                    Rational::from(q) * &row[i] - ratio * &row[i + 1]
                })
                .collect();
            for (i, v) in next.iter().enumerate() {
                computed.push(((m, p + i), v.clone()));
            }
            row = next;
        }
        let mut table = self.p_bernoulli.write().expect("memo lock poisoned");
        for (k, v) in computed {
            table.entry(k).or_insert(v);
        }
        row.swap_remove(0)
    }

    /// `B_{n,p}` by the requested route.
    pub fn p_bernoulli_number(&self, key: PBernoulliKey, route: Route) -> Result<Rational> {
        let PBernoulliKey { n, p } = key;
        match route {
            Route::Recurrence => Ok(self.p_bernoulli(n, p)),
            Route::ExplicitPStirling => {
                let mut sum = Rational::zero();
                for k in 0..=n {
                    let s = r_stirling2(n + p, (k + p) as i64, p)?;
                    sum += Rational::from_integer(s * factorial(k + p)) * Rational::sign_power(k)
                        / Rational::from(k + p + 1);
                }
                Ok(Rational::from(p + 1) / Rational::from_integer(factorial(p)) * sum)
            }
            Route::ExplicitTheorem4 => {
                if n < route.min_n() {
                    return Err(Error::RouteUndefined {
                        route: route.to_string(),
                        n,
                    });
                }
                Ok(self.stirling_sum_formula(n, p, SignExponent::KPlusNPlusOne))
            }
            Route::WeightedIntegral => {
                Ok(Rational::from(p + 1) * self.weighted_geometric_integral(n, p))
            }
        }
    }

    /// `(p+1) Σ_{k=1}^n S(n,k) (-1)^e k!/((k+p)(k+p+1))` with the chosen
    /// sign exponent `e`.
    pub fn stirling_sum_formula(&self, n: usize, p: usize, sign: SignExponent) -> Rational {
        let extra = match sign {
            SignExponent::KPlusN => 0,
            SignExponent::KPlusNPlusOne => 1,
        };
        let sum: Rational = (1..=n)
            .map(|k| {
                Rational::from_integer(stirling2(n, k as i64) * factorial(k))
                    * Rational::sign_power(k + n + extra)
                    / Rational::from((k + p) * (k + p + 1))
            })
            .sum();
        Rational::from(p + 1) * sum
    }

    /// `B_{n,p}(x) = Σ_k C(n,k) x^(n-k) B_{k,p}`.
    pub fn p_bernoulli_poly(&self, key: PBernoulliKey) -> UniPoly {
        let PBernoulliKey { n, p } = key;
        memo(&self.p_bernoulli_poly, (n, p), || {
            UniPoly::new(
                (0..=n)
                    .map(|j| binomial(n, j as i64) * self.p_bernoulli(n - j, p))
                    .collect(),
            )
        })
    }

    /// `Σ_{k=0}^m k^n` via Bernoulli polynomials (`0^0 = 1`).
    pub fn faulhaber_sum(&self, n: usize, m: usize) -> Rational {
        if n == 0 {
            return Rational::from(m + 1);
        }
        let b = self.bernoulli_poly(n + 1);
        (b.eval(&Rational::from(m + 1)) - self.bernoulli_number(n + 1)) / Rational::from(n + 1)
    }

    /// `Σ_{k=0}^n k^p (-1)^k / C(n,k)`.
    pub fn alt_binom_reciprocal_sum(
        &self,
        n: usize,
        p: usize,
        route: AltSumRoute,
    ) -> Result<Rational> {
        match route {
            AltSumRoute::Direct => Ok((0..=n)
                .map(|k| Rational::from(k).pow(p) * Rational::sign_power(k) / binomial(n, k as i64))
                .sum()),
            AltSumRoute::ClosedForm => {
                if n == 0 {
                    return Err(Error::Domain(
                        "closed form of the alternating sum needs n >= 1".into(),
                    ));
                }
                let poly = self.p_bernoulli_poly(PBernoulliKey::new(p, n + 1));
                let at = poly.eval(&-Rational::from(n));
                let bracket = Rational::sign_power(n + p) * at + self.p_bernoulli(p, n + 1);
                Ok(Rational::frac(n as i64 + 1, n as i64 + 2) * bracket)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn bernoulli_examples() {
        let s = Sequences::new();
        assert_eq!(s.bernoulli_number(0), 1);
        assert_eq!(s.bernoulli_number(1), r(-1, 2));
        assert_eq!(s.bernoulli_number(2), r(1, 6));
        assert_eq!(s.bernoulli_number(3), 0);
        assert_eq!(s.bernoulli_number(12), r(-691, 2730));
    }

    #[test]
    fn bernoulli_poly_examples() {
        let s = Sequences::new();
        assert_eq!(s.bernoulli_poly(0), UniPoly::one());
        assert_eq!(s.bernoulli_poly(1), UniPoly::new(vec![r(-1, 2), r(1, 1)]));
        assert_eq!(
            s.bernoulli_poly(2),
            UniPoly::new(vec![r(1, 6), r(-1, 1), r(1, 1)])
        );
        for n in 1..=12 {
            assert_eq!(
                s.bernoulli_poly(n).derivative(),
                s.bernoulli_poly(n - 1).scale(&Rational::from(n))
            );
        }
    }

    #[test]
    fn geometric_examples() {
        let s = Sequences::new();
        assert_eq!(s.geometric_poly(0), UniPoly::one());
        assert_eq!(s.geometric_poly(1), UniPoly::x());
        assert_eq!(s.geometric_poly(2), UniPoly::from_integers(&[0, 1, 2]));
        assert_eq!(s.geometric_poly(3), UniPoly::from_integers(&[0, 1, 6, 6]));
    }

    #[test]
    fn two_variable_geometric() {
        use crate::exact::Var;
        let s = Sequences::new();
        assert_eq!(
            s.geometric_poly_two_var(1),
            BiPoly::new(vec![UniPoly::x(), UniPoly::one()])
        );
        for n in 0..=10 {
            let q = s.geometric_poly_two_var(n);
            assert_eq!(q.x_degree(), Some(n));
            assert_eq!(
                q.partial_eval(Var::X, &Rational::zero()),
                s.geometric_poly(n)
            );
            assert_eq!(
                q.partial_eval(Var::Y, &Rational::zero()),
                UniPoly::monomial(Rational::one(), n)
            );
        }
    }

    #[test]
    fn p_bernoulli_examples() {
        let s = Sequences::new();
        for p in 0..=6 {
            for route in Route::ALL {
                if route.min_n() == 0 {
                    let v = s
                        .p_bernoulli_number(PBernoulliKey::new(0, p), route)
                        .unwrap();
                    assert_eq!(v, 1, "route {route}");
                }
                let v = s
                    .p_bernoulli_number(PBernoulliKey::new(1, p), route)
                    .unwrap();
                assert_eq!(v, r(-1, p as i64 + 2), "route {route}");
            }
        }
        for n in 0..=10 {
            assert_eq!(s.p_bernoulli(n, 0), s.bernoulli_number(n));
        }
        assert_eq!(s.p_bernoulli(2, 1), 0);
    }

    #[test]
    fn theorem4_route_rejects_n_zero() {
        let s = Sequences::new();
        let err = s
            .p_bernoulli_number(PBernoulliKey::new(0, 3), Route::ExplicitTheorem4)
            .unwrap_err();
        assert!(matches!(err, Error::RouteUndefined { n: 0, .. }));
    }

    #[test]
    fn uncorrected_sign_flips_every_value() {
        let s = Sequences::new();
        assert_eq!(s.stirling_sum_formula(1, 0, SignExponent::KPlusN), r(1, 2));
        for n in 1..=8 {
            for p in 0..=4 {
                assert_eq!(
                    s.stirling_sum_formula(n, p, SignExponent::KPlusN),
                    -s.p_bernoulli(n, p)
                );
            }
        }
    }

    #[test]
    fn p_bernoulli_poly_examples() {
        let s = Sequences::new();
        for p in 0..=10i64 {
            let key = |n| PBernoulliKey::new(n, p as usize);
            assert_eq!(
                s.p_bernoulli_poly(key(1)),
                UniPoly::new(vec![r(-1, p + 2), r(1, 1)])
            );
            assert_eq!(
                s.p_bernoulli_poly(key(2)),
                UniPoly::new(vec![r(-(p - 1), (p + 2) * (p + 3)), r(-2, p + 2), r(1, 1)])
            );
        }
        for n in 0..=8 {
            assert_eq!(
                s.p_bernoulli_poly(PBernoulliKey::new(n, 0)),
                s.bernoulli_poly(n)
            );
        }
    }

    #[test]
    fn weighted_integral_examples() {
        let s = Sequences::new();
        for n in 0..=10 {
            assert_eq!(s.weighted_geometric_integral(n, 0), s.bernoulli_number(n));
        }
        assert_eq!(s.weighted_geometric_integral(1, 1), r(-1, 6));
        for p in 0..=8i64 {
            assert_eq!(s.weighted_geometric_integral(0, p as usize), r(1, p + 1));
        }
    }

    #[test]
    fn faulhaber_examples() {
        let s = Sequences::new();
        assert_eq!(s.faulhaber_sum(2, 3), 14);
        assert_eq!(s.faulhaber_sum(3, 4), 100);
        assert_eq!(s.faulhaber_sum(0, 4), 5);
        for m in 0..=12i64 {
            assert_eq!(s.faulhaber_sum(1, m as usize), m * (m + 1) / 2);
        }
    }

    #[test]
    fn alt_sum_examples() {
        let s = Sequences::new();
        for route in [AltSumRoute::Direct, AltSumRoute::ClosedForm] {
            assert_eq!(s.alt_binom_reciprocal_sum(2, 0, route).unwrap(), r(3, 2));
            assert_eq!(s.alt_binom_reciprocal_sum(1, 0, route).unwrap(), 0);
            assert_eq!(s.alt_binom_reciprocal_sum(2, 1, route).unwrap(), r(3, 2));
        }
        assert!(s
            .alt_binom_reciprocal_sum(0, 2, AltSumRoute::ClosedForm)
            .is_err());
    }

    #[test]
    fn route_names_roundtrip() {
        for route in Route::ALL {
            assert_eq!(route.name().parse::<Route>().unwrap(), route);
        }
        assert!("fast".parse::<Route>().is_err());
    }
}

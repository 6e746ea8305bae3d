//! The identity table: one entry per checked statement, each with its
//! parameter domain and an exact two-sided evaluation.

use std::sync::OnceLock;

use super::{BoundSource, ParamSpec, Sides, StatementKind, Value};
use crate::combinatorics::{eulerian_poly, stirling2};
use crate::exact::{binomial, factorial, BiPoly, Rational, UniPoly};
use crate::sequences::{AltSumRoute, PBernoulliKey, Route, Sequences, SignExponent};

pub(crate) type Check = fn(&Sequences, &[usize]) -> Sides;

pub(crate) struct Identity {
    pub id: &'static str,
    pub params: &'static [ParamSpec],
    pub kind: StatementKind,
    pub location: &'static str,
    pub statement: &'static str,
    pub check: Check,
}

const fn n(min: usize) -> ParamSpec {
    ParamSpec {
        name: "n",
        min,
        bound: BoundSource::N,
        meaning: "index",
    }
}

const fn p(min: usize) -> ParamSpec {
    ParamSpec {
        name: "p",
        min,
        bound: BoundSource::P,
        meaning: "p-Bernoulli parameter",
    }
}

const fn m(min: usize) -> ParamSpec {
    ParamSpec {
        name: "m",
        min,
        bound: BoundSource::M,
        meaning: "summation limit or multiplier",
    }
}

use StatementKind::{
    PolynomialEquality1Var as Poly1, PolynomialEquality2Var as Poly2, RationalEquality as Scalar,
};

static TABLE: &[Identity] = &[
    Identity {
        id: "bernoulli-recurrence",
        params: &[n(1)],
        kind: Scalar,
        location: "Sec. 1",
        statement: "sum_{k=0}^{n} C(n+1,k) B_k = 0",
        check: bernoulli_recurrence,
    },
    Identity {
        id: "bernoulli-explicit",
        params: &[n(0)],
        kind: Scalar,
        location: "Sec. 1",
        statement: "sum_k S(n,k) (-1)^k k!/(k+1) = B_{n,0} (three-term recurrence)",
        check: bernoulli_explicit,
    },
    Identity {
        id: "keller",
        params: &[n(0)],
        kind: Scalar,
        location: "Sec. 1",
        statement: "int_{-1}^{0} w_n(y) dy = B_n",
        check: keller,
    },
    Identity {
        id: "eq17",
        params: &[n(0), p(0)],
        kind: Scalar,
        location: "Eq. (17)",
        statement: "B_{n,p}/(p+1) = int_{-1}^{0} (1+y)^p w_n(y) dy",
        check: eq17,
    },
    Identity {
        id: "eq25",
        params: &[n(2), p(0)],
        kind: Scalar,
        location: "Eq. (25)",
        statement: "int_{-1}^{0} y^p w_n(y) dy = (-1)^{n+p+1} (p+1)/(p+2) B_{n-1,p+1}",
        check: eq25,
    },
    Identity {
        id: "eq24-reflection",
        params: &[n(1)],
        kind: Poly1,
        location: "Eq. (24)",
        statement: "(y+1) w_n(y) = (-1)^n y w_n(-y-1)",
        check: eq24_reflection,
    },
    Identity {
        id: "eq19-appell",
        params: &[n(1), p(0)],
        kind: Poly1,
        location: "Eq. (19)",
        statement: "d/dx B_{n,p}(x) = n B_{n-1,p}(x)",
        check: eq19_appell,
    },
    Identity {
        id: "eq19-integral",
        params: &[
            n(0),
            p(0),
            ParamSpec {
                name: "bounds",
                min: 0,
                bound: BoundSource::Fixed(2),
                meaning: "(b,a) in [(0,1), (-1,0), (1/2,3/2)]",
            },
        ],
        kind: Scalar,
        location: "Eq. (19)",
        statement: "int_b^a B_{n,p}(t) dt = (B_{n+1,p}(a) - B_{n+1,p}(b))/(n+1)",
        check: eq19_integral,
    },
    Identity {
        id: "eq20",
        params: &[n(0), p(0)],
        kind: Scalar,
        location: "Eq. (20)",
        statement: "int_0^1 B_{n,p}(t) dt = 1/(n+1) sum_{k=0}^{n} C(n+1,k) B_{k,p}",
        check: eq20,
    },
    Identity {
        id: "eq22",
        params: &[n(0), p(0)],
        kind: Poly1,
        location: "Eq. (22)",
        statement: "B_{n,p}(x+1) - B_{n,p}(x) = sum_{k=0}^{n-1} C(n,k) B_{k,p}(x)",
        check: eq22,
    },
    Identity {
        id: "eq21",
        params: &[n(0), p(0)],
        kind: Poly1,
        location: "Eq. (21)",
        statement: "B_{n+1,p}(x) = (x+p) B_{n,p}(x) - (p+1)^2/(p+2) B_{n,p+1}(x)",
        check: eq21,
    },
    Identity {
        id: "eq6-theorem1",
        params: &[n(1), p(0)],
        kind: Scalar,
        location: "Eq. (6)",
        statement: "sum_{k=0}^{n} C(n+1,k) B_{k,p} = -p B_{n,p}",
        check: eq6_theorem1,
    },
    Identity {
        id: "bnp-at-1",
        params: &[n(2), p(0)],
        kind: Scalar,
        location: "Sec. 1, after Theorem 1",
        statement: "B_{n,p}(1) = B_{n,p} - p B_{n-1,p}",
        check: bnp_at_1,
    },
    Identity {
        id: "eq7a",
        params: &[n(1), p(0)],
        kind: Scalar,
        location: "Eq. (7a)",
        statement: "int_0^1 B_{n,p}(t) dt = -p B_{n,p}/(n+1)",
        check: eq7a,
    },
    Identity {
        id: "eq8-corrected",
        params: &[n(1), p(0)],
        kind: Scalar,
        location: "Eq. (8)",
        statement: "B_{n,p} = (p+1) sum_{k=1}^{n} S(n,k) (-1)^{k+n+1} k!/((k+p)(k+p+1))",
        check: eq8_corrected,
    },
    Identity {
        id: "eq8-as-printed",
        params: &[n(1), p(0)],
        kind: Scalar,
        location: "Eq. (8)",
        statement: "B_{n,p} = (p+1) sum_{k=1}^{n} S(n,k) (-1)^{k+n} k!/((k+p)(k+p+1))",
        check: eq8_as_printed,
    },
    Identity {
        id: "eq26-corrected",
        params: &[n(1)],
        kind: Scalar,
        location: "Eq. (26)",
        statement: "B_n = sum_{k=1}^{n} S(n,k) (-1)^{k+n+1} (k-1)!/(k+1)",
        check: eq26_corrected,
    },
    Identity {
        id: "pbernoulli-explicit",
        params: &[n(0), p(0)],
        kind: Scalar,
        location: "Sec. 1",
        statement: "B_{n,p} = (p+1)/p! sum_{k=0}^{n} S_p(n+p,k+p) (-1)^k (k+p)!/(k+p+1)",
        check: pbernoulli_explicit,
    },
    Identity {
        id: "eq2-prop2",
        params: &[n(0), p(0)],
        kind: Poly1,
        location: "Eq. (2)",
        statement: "B_{n,p}(x)/(p+1) = int_{-1}^{0} (1+y)^p w_n(x;y) dy",
        check: eq2_prop2,
    },
    Identity {
        id: "eq28-telescopic",
        params: &[n(0), p(0)],
        kind: Poly1,
        location: "Eq. (28)",
        statement: "B_{n,p+1}(x+1) - B_{n,p+1}(x) = (p+2)/(p+1) (B_{n,p}(x+1) - x^n)",
        check: eq28_telescopic,
    },
    Identity {
        id: "eq4-theorem5",
        params: &[n(0), p(0), m(0)],
        kind: Scalar,
        location: "Eq. (4)",
        statement: "sum_{k=0}^{m} B_{n,p}(k+1) = (B_{n+1}(m+1) - B_{n+1})/(n+1) + (p+1)/(p+2) (B_{n,p+1}(m+1) - B_{n,p+1})",
        check: eq4_theorem5,
    },
    Identity {
        id: "eq27",
        params: &[n(0), m(0)],
        kind: Scalar,
        location: "Eq. (27)",
        statement: "sum_{k=0}^{m} (B_n(k+1) + n k^n) = (m+1) B_n(m+1)",
        check: eq27,
    },
    Identity {
        id: "eq31-raabe",
        params: &[n(0), p(0), m(1)],
        kind: Poly1,
        location: "Eq. (31)",
        statement: "m^{n-1} sum_{k<m} B_{n,p}(x+k/m) = (p+1) B_n(mx) - p sum_k C(n,k) m^k B_{n-k}(mx) B_{k,p}/(k+1)",
        check: eq31_raabe,
    },
    Identity {
        id: "classical-raabe",
        params: &[n(0), m(1)],
        kind: Poly1,
        location: "Sec. 1",
        statement: "m^{n-1} sum_{k<m} B_n(x+k/m) = B_n(mx)",
        check: classical_raabe,
    },
    Identity {
        id: "cor2-convolution",
        params: &[n(0), m(1)],
        kind: Scalar,
        location: "Corollary 2",
        statement: "sum_k C(n,k) m^k B_{k+1} B_{n-k}/(k+1) = (-m B_n - B_{n+1})/m + m^{n-1} sum_{k<m} (k/m) B_n(k/m)",
        check: cor2_convolution,
    },
    Identity {
        id: "chu-zhou-m1",
        params: &[n(0)],
        kind: Scalar,
        location: "Sec. 1",
        statement: "sum_k C(n,k) B_{k+1} B_{n-k}/(k+1) = -B_n - B_{n+1}",
        check: chu_zhou_m1,
    },
    Identity {
        id: "chu-zhou-m2",
        params: &[n(0)],
        kind: Scalar,
        location: "Sec. 1",
        statement: "sum_k C(n,k) 2^k B_{k+1} B_{n-k}/(k+1) = (-B_{n+1} - (2^{n-1}+1) B_n)/2",
        check: chu_zhou_m2,
    },
    Identity {
        id: "eq36",
        params: &[n(1), p(1)],
        kind: Poly1,
        location: "Eq. (36)",
        statement: "p^2 sum_{k=1}^{n} C(n+1,k+1) y^{n-k} B_{k,p} = (p+1) y^{n+1} + p(n+1) y^n - (p+1) B_{n+1,p-1}(1+y)",
        check: eq36,
    },
    Identity {
        id: "eq15-raabe-geometric",
        params: &[n(1), m(1)],
        kind: Poly2,
        location: "Eq. (15)",
        statement: "n y m^{n-1} sum_{k<m} w_{n-1}(x+k/m; y) = sum_{k=1}^{n} C(n,k) m^k B_{n-k}(mx) w_k(y)",
        check: eq15_raabe_geometric,
    },
    Identity {
        id: "eq32-arith-geom",
        params: &[n(0), p(0)],
        kind: Poly1,
        location: "Eq. (32)",
        statement: "(1-y)^{p+1} sum_{k=0}^{n} k^p y^k = A_p(y) - y^{n+1} sum_k C(p,k) (n+1)^{p-k} A_k(y) (1-y)^{p-k}",
        check: eq32_arith_geom,
    },
    Identity {
        id: "eq32-geometric-form",
        params: &[n(0), p(0)],
        kind: Poly1,
        location: "Sec. 4, proof of Theorem 2",
        statement: "sum_{k=0}^{n} k^p y^k (1+y)^{n-k} = (1+y)^{n+1} w_p(y) - y^{n+1} sum_k C(p,k) (n+1)^{p-k} w_k(y)",
        check: eq32_geometric_form,
    },
    Identity {
        id: "eulerian-transform",
        params: &[n(0)],
        kind: Poly1,
        location: "Sec. 4",
        statement: "(1-y)^n w_n(y/(1-y)) = A_n(y)",
        check: eulerian_transform,
    },
    Identity {
        id: "theorem2-main",
        params: &[n(1), p(0)],
        kind: Scalar,
        location: "Theorem 2",
        statement: "sum_{k=0}^{n} k^p (-1)^k / C(n,k) = (n+1)/(n+2) ((-1)^{n+p} B_{p,n+1}(-n) + B_{p,n+1})",
        check: theorem2_main,
    },
    Identity {
        id: "gould",
        params: &[n(1)],
        kind: Scalar,
        location: "Sec. 1",
        statement: "sum_{k=0}^{n} (-1)^k / C(n,k) = (n+1)/(n+2) ((-1)^n + 1)",
        check: gould,
    },
    Identity {
        id: "eq3-faulhaber",
        params: &[n(0), m(0)],
        kind: Scalar,
        location: "Eq. (3)",
        statement: "sum_{k=0}^{m} k^n = (B_{n+1}(m+1) - B_{n+1})/(n+1)",
        check: eq3_faulhaber,
    },
    Identity {
        id: "eq34-beta",
        params: &[
            ParamSpec { name: "a", min: 1, bound: BoundSource::N, meaning: "first Beta argument" },
            ParamSpec { name: "b", min: 1, bound: BoundSource::N, meaning: "second Beta argument" },
        ],
        kind: Scalar,
        location: "Eq. (34)",
        statement: "int_0^1 (1-t)^{a-1} t^{b-1} dt = (a-1)! (b-1)! / (a+b-1)!",
        check: eq34_beta,
    },
];

/// All identities, sorted by id.
pub(crate) fn all() -> &'static [&'static Identity] {
    static SORTED: OnceLock<Vec<&'static Identity>> = OnceLock::new();
    SORTED.get_or_init(|| {
        let mut v: Vec<_> = TABLE.iter().collect();
        v.sort_by_key(|i| i.id);
        v
    })
}

pub(crate) fn find(id: &str) -> Option<&'static Identity> {
    all().iter().copied().find(|i| i.id == id)
}

// ---------------------------------------------------------------------------
// helpers

fn q(v: usize) -> Rational {
    Rational::from(v)
}

fn rat(lhs: Rational, rhs: Rational) -> Sides {
    Sides {
        lhs: Value::Rational(lhs),
        rhs: Value::Rational(rhs),
    }
}

fn uni(lhs: UniPoly, rhs: UniPoly) -> Sides {
    Sides {
        lhs: Value::Uni(lhs),
        rhs: Value::Uni(rhs),
    }
}

fn pbp(s: &Sequences, n: usize, p: usize) -> UniPoly {
    s.p_bernoulli_poly(PBernoulliKey::new(n, p))
}

fn over_minus_one_to_zero(poly: &UniPoly) -> Rational {
    poly.definite_integral(&-Rational::one(), &Rational::zero())
}

fn one_plus_y(exp: usize) -> UniPoly {
    UniPoly::from_integers(&[1, 1]).pow(exp)
}

fn one_minus_y(exp: usize) -> UniPoly {
    UniPoly::from_integers(&[1, -1]).pow(exp)
}

fn y_pow(exp: usize) -> UniPoly {
    UniPoly::monomial(Rational::one(), exp)
}

/// `m^(n-1)` as a rational (n may be 0).
fn m_pow_n_minus_one(m: usize, n: usize) -> Rational {
    q(m).pow(n) / q(m)
}

fn shift(poly: &UniPoly, by: &Rational) -> UniPoly {
    poly.compose_affine(&Rational::one(), by)
}

fn dilate(poly: &UniPoly, by: usize) -> UniPoly {
    poly.compose_affine(&q(by), &Rational::zero())
}

// ---------------------------------------------------------------------------
// checks

fn bernoulli_recurrence(s: &Sequences, a: &[usize]) -> Sides {
    let n = a[0];
    let lhs = (0..=n)
        .map(|k| binomial(n + 1, k as i64) * s.bernoulli_number(k))
        .sum();
    rat(lhs, Rational::zero())
}

fn bernoulli_explicit(s: &Sequences, a: &[usize]) -> Sides {
    let n = a[0];
    rat(s.bernoulli_number(n), s.p_bernoulli(n, 0))
}

fn keller(s: &Sequences, a: &[usize]) -> Sides {
    let n = a[0];
    rat(
        over_minus_one_to_zero(&s.geometric_poly(n)),
        s.bernoulli_number(n),
    )
}

fn eq17(s: &Sequences, a: &[usize]) -> Sides {
    let (n, p) = (a[0], a[1]);
    rat(
        s.p_bernoulli(n, p) / q(p + 1),
        s.weighted_geometric_integral(n, p),
    )
}

fn eq25(s: &Sequences, a: &[usize]) -> Sides {
    let (n, p) = (a[0], a[1]);
    let lhs = over_minus_one_to_zero(&(&y_pow(p) * &s.geometric_poly(n)));
    let rhs = Rational::sign_power(n + p + 1) * q(p + 1) / q(p + 2) * s.p_bernoulli(n - 1, p + 1);
    rat(lhs, rhs)
}

fn eq24_reflection(s: &Sequences, a: &[usize]) -> Sides {
    let n = a[0];
    let w = s.geometric_poly(n);
    let lhs = &one_plus_y(1) * &w;
    let minus_one = -Rational::one();
    let rhs = w
        .compose_affine(&minus_one, &minus_one)
        .shift_up(1)
        .scale(&Rational::sign_power(n));
    uni(lhs, rhs)
}

fn eq19_appell(s: &Sequences, a: &[usize]) -> Sides {
    let (n, p) = (a[0], a[1]);
    uni(pbp(s, n, p).derivative(), pbp(s, n - 1, p).scale(&q(n)))
}

fn eq19_integral(s: &Sequences, a: &[usize]) -> Sides {
    let (n, p) = (a[0], a[1]);
    let (lo, hi) = match a[2] {
        0 => (Rational::zero(), Rational::one()),
        1 => (-Rational::one(), Rational::zero()),
        _ => (Rational::frac(1, 2), Rational::frac(3, 2)),
    };
    let lhs = pbp(s, n, p).definite_integral(&lo, &hi);
    let next = pbp(s, n + 1, p);
    rat(lhs, (next.eval(&hi) - next.eval(&lo)) / q(n + 1))
}

fn eq20(s: &Sequences, a: &[usize]) -> Sides {
    let (n, p) = (a[0], a[1]);
    let lhs = pbp(s, n, p).definite_integral(&Rational::zero(), &Rational::one());
    let sum: Rational = (0..=n)
        .map(|k| binomial(n + 1, k as i64) * s.p_bernoulli(k, p))
        .sum();
    rat(lhs, sum / q(n + 1))
}

fn eq22(s: &Sequences, a: &[usize]) -> Sides {
    let (n, p) = (a[0], a[1]);
    let b = pbp(s, n, p);
    let lhs = &shift(&b, &Rational::one()) - &b;
    let rhs = (0..n)
        .map(|k| pbp(s, k, p).scale(&binomial(n, k as i64)))
        .sum();
    uni(lhs, rhs)
}

fn eq21(s: &Sequences, a: &[usize]) -> Sides {
    let (n, p) = (a[0], a[1]);
    let lin = UniPoly::linear(Rational::one(), q(p));
    let ratio = q((p + 1) * (p + 1)) / q(p + 2);
    let rhs = &(&lin * &pbp(s, n, p)) - &pbp(s, n, p + 1).scale(&ratio);
    uni(pbp(s, n + 1, p), rhs)
}

fn eq6_theorem1(s: &Sequences, a: &[usize]) -> Sides {
    let (n, p) = (a[0], a[1]);
    let lhs = (0..=n)
        .map(|k| binomial(n + 1, k as i64) * s.p_bernoulli(k, p))
        .sum();
    rat(lhs, -(q(p) * s.p_bernoulli(n, p)))
}

fn bnp_at_1(s: &Sequences, a: &[usize]) -> Sides {
    let (n, p) = (a[0], a[1]);
    let lhs = pbp(s, n, p).eval(&Rational::one());
    rat(lhs, s.p_bernoulli(n, p) - q(p) * s.p_bernoulli(n - 1, p))
}

fn eq7a(s: &Sequences, a: &[usize]) -> Sides {
    let (n, p) = (a[0], a[1]);
    let lhs = pbp(s, n, p).definite_integral(&Rational::zero(), &Rational::one());
    rat(lhs, -(q(p) * s.p_bernoulli(n, p)) / q(n + 1))
}

fn eq8_corrected(s: &Sequences, a: &[usize]) -> Sides {
    let (n, p) = (a[0], a[1]);
    rat(
        s.p_bernoulli(n, p),
        s.stirling_sum_formula(n, p, SignExponent::KPlusNPlusOne),
    )
}

fn eq8_as_printed(s: &Sequences, a: &[usize]) -> Sides {
    let (n, p) = (a[0], a[1]);
    rat(
        s.p_bernoulli(n, p),
        s.stirling_sum_formula(n, p, SignExponent::KPlusN),
    )
}

fn eq26_corrected(s: &Sequences, a: &[usize]) -> Sides {
    let n = a[0];
    let rhs = (1..=n)
        .map(|k| {
            Rational::from_integer(stirling2(n, k as i64) * factorial(k - 1))
                * Rational::sign_power(k + n + 1)
                / q(k + 1)
        })
        .sum();
    rat(s.bernoulli_number(n), rhs)
}

fn pbernoulli_explicit(s: &Sequences, a: &[usize]) -> Sides {
    let (n, p) = (a[0], a[1]);
    let rhs = s
        .p_bernoulli_number(PBernoulliKey::new(n, p), Route::ExplicitPStirling)
        .expect("explicit p-Stirling route is defined for all n, p");
    rat(s.p_bernoulli(n, p), rhs)
}

fn eq2_prop2(s: &Sequences, a: &[usize]) -> Sides {
    let (n, p) = (a[0], a[1]);
    let lhs = pbp(s, n, p).scale(&(Rational::one() / q(p + 1)));
    let rhs = s
        .geometric_poly_two_var(n)
        .mul_y(&one_plus_y(p))
        .integrate_y(&-Rational::one(), &Rational::zero());
    uni(lhs, rhs)
}

fn eq28_telescopic(s: &Sequences, a: &[usize]) -> Sides {
    let (n, p) = (a[0], a[1]);
    let one = Rational::one();
    let upper = pbp(s, n, p + 1);
    let lhs = &shift(&upper, &one) - &upper;
    let inner = &shift(&pbp(s, n, p), &one) - &UniPoly::monomial(one.clone(), n);
    uni(lhs, inner.scale(&(q(p + 2) / q(p + 1))))
}

fn eq4_theorem5(s: &Sequences, a: &[usize]) -> Sides {
    let (n, p, m) = (a[0], a[1], a[2]);
    let b = pbp(s, n, p);
    let lhs = (0..=m).map(|k| b.eval(&q(k + 1))).sum();
    let faulhaber =
        (s.bernoulli_poly(n + 1).eval(&q(m + 1)) - s.bernoulli_number(n + 1)) / q(n + 1);
    let upper = pbp(s, n, p + 1).eval(&q(m + 1)) - s.p_bernoulli(n, p + 1);
    rat(lhs, faulhaber + q(p + 1) / q(p + 2) * upper)
}

fn eq27(s: &Sequences, a: &[usize]) -> Sides {
    let (n, m) = (a[0], a[1]);
    let b = s.bernoulli_poly(n);
    let lhs = (0..=m)
        .map(|k| b.eval(&q(k + 1)) + q(n) * q(k).pow(n))
        .sum();
    rat(lhs, q(m + 1) * b.eval(&q(m + 1)))
}

fn eq31_raabe(s: &Sequences, a: &[usize]) -> Sides {
    let (n, p, m) = (a[0], a[1], a[2]);
    let b = pbp(s, n, p);
    let lhs = (0..m)
        .map(|k| shift(&b, &Rational::frac(k as i64, m as i64)))
        .sum::<UniPoly>()
        .scale(&m_pow_n_minus_one(m, n));
    let correction: UniPoly = (0..=n)
        .map(|k| {
            let c = binomial(n, k as i64) * q(m).pow(k) * s.p_bernoulli(k, p) / q(k + 1);
            dilate(&s.bernoulli_poly(n - k), m).scale(&c)
        })
        .sum();
    let rhs = &dilate(&s.bernoulli_poly(n), m).scale(&q(p + 1)) - &correction.scale(&q(p));
    uni(lhs, rhs)
}

fn classical_raabe(s: &Sequences, a: &[usize]) -> Sides {
    let (n, m) = (a[0], a[1]);
    let b = s.bernoulli_poly(n);
    let lhs = (0..m)
        .map(|k| shift(&b, &Rational::frac(k as i64, m as i64)))
        .sum::<UniPoly>()
        .scale(&m_pow_n_minus_one(m, n));
    uni(lhs, dilate(&b, m))
}

fn chu_zhou_sum(s: &Sequences, n: usize, m: usize) -> Rational {
    (0..=n)
        .map(|k| {
            binomial(n, k as i64)
                * q(m).pow(k)
                * s.bernoulli_number(k + 1)
                * s.bernoulli_number(n - k)
                / q(k + 1)
        })
        .sum()
}

fn cor2_convolution(s: &Sequences, a: &[usize]) -> Sides {
    let (n, m) = (a[0], a[1]);
    let b = s.bernoulli_poly(n);
    let tail: Rational = (0..m)
        .map(|k| {
            let at = Rational::frac(k as i64, m as i64);
            &at * b.eval(&at)
        })
        .sum();
    let rhs = (-(q(m) * s.bernoulli_number(n)) - s.bernoulli_number(n + 1)) / q(m)
        + m_pow_n_minus_one(m, n) * tail;
    rat(chu_zhou_sum(s, n, m), rhs)
}

fn chu_zhou_m1(s: &Sequences, a: &[usize]) -> Sides {
    let n = a[0];
    rat(
        chu_zhou_sum(s, n, 1),
        -s.bernoulli_number(n) - s.bernoulli_number(n + 1),
    )
}

fn chu_zhou_m2(s: &Sequences, a: &[usize]) -> Sides {
    let n = a[0];
    let two_pow = m_pow_n_minus_one(2, n);
    let rhs =
        (-s.bernoulli_number(n + 1) - (two_pow + Rational::one()) * s.bernoulli_number(n)) / q(2);
    rat(chu_zhou_sum(s, n, 2), rhs)
}

fn eq36(s: &Sequences, a: &[usize]) -> Sides {
    let (n, p) = (a[0], a[1]);
    let lhs = (1..=n)
        .map(|k| UniPoly::monomial(binomial(n + 1, k as i64 + 1) * s.p_bernoulli(k, p), n - k))
        .sum::<UniPoly>()
        .scale(&q(p * p));
    let shifted = shift(&pbp(s, n + 1, p - 1), &Rational::one()).scale(&q(p + 1));
    let rhs =
        &(&UniPoly::monomial(q(p + 1), n + 1) + &UniPoly::monomial(q(p * (n + 1)), n)) - &shifted;
    uni(lhs, rhs)
}

fn eq15_raabe_geometric(s: &Sequences, a: &[usize]) -> Sides {
    let (n, m) = (a[0], a[1]);
    let w = s.geometric_poly_two_var(n - 1);
    let lhs = (0..m)
        .map(|k| w.compose_x_affine(&Rational::one(), &Rational::frac(k as i64, m as i64)))
        .sum::<BiPoly>()
        .mul_y(&UniPoly::monomial(q(n) * m_pow_n_minus_one(m, n), 1));
    let rhs = (1..=n)
        .map(|k| {
            let c = binomial(n, k as i64) * q(m).pow(k);
            BiPoly::from_x_poly(&dilate(&s.bernoulli_poly(n - k), m).scale(&c))
                .mul_y(&s.geometric_poly(k))
        })
        .sum();
    Sides {
        lhs: Value::Bi(lhs),
        rhs: Value::Bi(rhs),
    }
}

fn eq32_arith_geom(_s: &Sequences, a: &[usize]) -> Sides {
    let (n, p) = (a[0], a[1]);
    let progression: UniPoly = (0..=n).map(|k| UniPoly::monomial(q(k).pow(p), k)).sum();
    let lhs = &one_minus_y(p + 1) * &progression;
    let tail: UniPoly = (0..=p)
        .map(|k| {
            let c = binomial(p, k as i64) * q(n + 1).pow(p - k);
            (&eulerian_poly(k) * &one_minus_y(p - k)).scale(&c)
        })
        .sum();
    uni(lhs, &eulerian_poly(p) - &tail.shift_up(n + 1))
}

fn eq32_geometric_form(s: &Sequences, a: &[usize]) -> Sides {
    let (n, p) = (a[0], a[1]);
    let lhs = (0..=n)
        .map(|k| one_plus_y(n - k).shift_up(k).scale(&q(k).pow(p)))
        .sum();
    let tail: UniPoly = (0..=p)
        .map(|k| {
            s.geometric_poly(k)
                .scale(&(binomial(p, k as i64) * q(n + 1).pow(p - k)))
        })
        .sum();
    let rhs = &(&one_plus_y(n + 1) * &s.geometric_poly(p)) - &tail.shift_up(n + 1);
    uni(lhs, rhs)
}

fn eulerian_transform(s: &Sequences, a: &[usize]) -> Sides {
    let n = a[0];
    // Substituting y/(1-y) into a degree-n polynomial and clearing (1-y)^n
    // turns c_j y^j into c_j y^j (1-y)^(n-j).
    let lhs = s
        .geometric_poly(n)
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| one_minus_y(n - j).shift_up(j).scale(c))
        .sum();
    uni(lhs, eulerian_poly(n))
}

fn theorem2_main(s: &Sequences, a: &[usize]) -> Sides {
    let (n, p) = (a[0], a[1]);
    let direct = s.alt_binom_reciprocal_sum(n, p, AltSumRoute::Direct);
    let closed = s.alt_binom_reciprocal_sum(n, p, AltSumRoute::ClosedForm);
    rat(
        direct.expect("direct route is total"),
        closed.expect("closed form is defined for n >= 1"),
    )
}

fn gould(s: &Sequences, a: &[usize]) -> Sides {
    let n = a[0];
    let direct = s
        .alt_binom_reciprocal_sum(n, 0, AltSumRoute::Direct)
        .expect("direct route is total");
    let rhs = q(n + 1) / q(n + 2) * (Rational::sign_power(n) + Rational::one());
    rat(direct, rhs)
}

fn eq3_faulhaber(s: &Sequences, a: &[usize]) -> Sides {
    let (n, m) = (a[0], a[1]);
    let direct = (0..=m).map(|k| q(k).pow(n)).sum();
    let closed = (s.bernoulli_poly(n + 1).eval(&q(m + 1)) - s.bernoulli_number(n + 1)) / q(n + 1);
    rat(direct, closed)
}

fn eq34_beta(_s: &Sequences, a: &[usize]) -> Sides {
    let (x, y) = (a[0], a[1]);
    let integrand = &one_minus_y(x - 1) * &y_pow(y - 1);
    let lhs = integrand.definite_integral(&Rational::zero(), &Rational::one());
    let rhs = Rational::from_integer(factorial(x - 1) * factorial(y - 1))
        / Rational::from_integer(factorial(x + y - 1));
    rat(lhs, rhs)
}

//! Registry of exactly-checkable identities and a grid-sweep verifier.
//!
//! Every identity is a pair of exact values (rational, polynomial in one
//! variable, or polynomial in two) computed from a parameter assignment.
//! The verifier walks the full parameter grid, compares both sides
//! coefficient-wise, and reports counterexamples in grid order. Grid
//! points run on a rayon pool; results are collected in input order, so the
//! number of worker threads never changes a report.

mod config;
mod registry;

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

pub use config::{GridBounds, VerifyConfig};

use crate::error::{Error, Result};
use crate::exact::{BiPoly, Rational, UniPoly};
use crate::sequences::Sequences;
use registry::Identity;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StatementKind {
    RationalEquality,
    PolynomialEquality1Var,
    PolynomialEquality2Var,
}

/// Which grid bound limits a parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundSource {
    N,
    P,
    M,
    /// A fixed upper end independent of the grid bounds.
    Fixed(usize),
}

impl BoundSource {
    fn resolve(self, bounds: &GridBounds) -> usize {
        match self {
            BoundSource::N => bounds.n_max,
            BoundSource::P => bounds.p_max,
            BoundSource::M => bounds.m_max,
            BoundSource::Fixed(v) => v,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub min: usize,
    pub bound: BoundSource,
    pub meaning: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub parameters: Vec<ParamSpec>,
    pub statement_kind: StatementKind,
    pub paper_location: &'static str,
    pub statement: &'static str,
    /// Listed in the bundled verifier configuration as a known failure.
    pub expected_fail: bool,
}

/// One side of an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Rational(Rational),
    Uni(UniPoly),
    Bi(BiPoly),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rational(r) => write!(f, "{r}"),
            Value::Uni(p) => write!(f, "{}", p.pretty("x")),
            Value::Bi(q) => write!(f, "{}", q.pretty()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sides {
    pub lhs: Value,
    pub rhs: Value,
}

impl Sides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Parameter values in declaration order; serialized as a JSON object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment(pub Vec<(&'static str, usize)>);

impl Assignment {
    pub fn get(&self, name: &str) -> Option<usize> {
        self.0.iter().find(|(k, _)| *k == name).map(|(_, v)| *v)
    }
}

impl Serialize for Assignment {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub params: Assignment,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub cases_checked: usize,
    pub outcome: Outcome,
    pub vacuous: bool,
    /// Failing grid points in total; `counterexamples` holds at most the cap.
    pub failed_cases: usize,
    pub counterexamples: Vec<Counterexample>,
    #[serde(rename = "elapsed_ms", serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl IdentityReport {
    /// Equality ignoring timing.
    pub fn same_content(&self, other: &IdentityReport) -> bool {
        self.id == other.id
            && self.cases_checked == other.cases_checked
            && self.outcome == other.outcome
            && self.vacuous == other.vacuous
            && self.failed_cases == other.failed_cases
            && self.counterexamples == other.counterexamples
    }

    pub fn status(&self) -> &'static str {
        match (self.outcome, self.vacuous) {
            (Outcome::Fail, _) => "FAIL",
            (Outcome::Pass, true) => "VACUOUS",
            (Outcome::Pass, false) => "PASS",
        }
    }
}

/// Reports for a set of identities, in registry order.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub bounds: GridBounds,
    pub expected_fail: BTreeSet<String>,
    pub success: bool,
    pub reports: Vec<IdentityReport>,
}

impl SuiteReport {
    fn new(
        bounds: GridBounds,
        expected_fail: &BTreeSet<String>,
        reports: Vec<IdentityReport>,
    ) -> Self {
        let success = overall_success(&reports, expected_fail);
        SuiteReport {
            bounds,
            expected_fail: expected_fail.clone(),
            success,
            reports,
        }
    }

    pub fn report(&self, id: &str) -> Option<&IdentityReport> {
        self.reports.iter().find(|r| r.id == id)
    }

    pub fn same_content(&self, other: &SuiteReport) -> bool {
        self.bounds == other.bounds
            && self.expected_fail == other.expected_fail
            && self.success == other.success
            && self.reports.len() == other.reports.len()
            && self
                .reports
                .iter()
                .zip(&other.reports)
                .all(|(a, b)| a.same_content(b))
    }
}

/// Every id in `expected_fail` failed and every other id passed.
pub fn overall_success(reports: &[IdentityReport], expected_fail: &BTreeSet<String>) -> bool {
    reports.iter().all(|r| {
        let want = if expected_fail.contains(&r.id) {
            Outcome::Fail
        } else {
            Outcome::Pass
        };
        r.outcome == want
    })
}

fn describe(identity: &Identity, expected: &BTreeSet<String>) -> IdentityDescriptor {
    IdentityDescriptor {
        id: identity.id,
        parameters: identity.params.to_vec(),
        statement_kind: identity.kind,
        paper_location: identity.location,
        statement: identity.statement,
        expected_fail: expected.contains(identity.id),
    }
}

/// Every registered identity, ordered by id.
pub fn list_identities() -> Vec<IdentityDescriptor> {
    let expected = VerifyConfig::default().expected_fail;
    registry::all()
        .iter()
        .map(|i| describe(i, &expected))
        .collect()
}

pub fn describe_identity(id: &str) -> Option<IdentityDescriptor> {
    let expected = VerifyConfig::default().expected_fail;
    registry::find(id).map(|i| describe(i, &expected))
}

fn grid(params: &[ParamSpec], bounds: &GridBounds) -> Vec<Vec<usize>> {
    params.iter().fold(vec![Vec::new()], |acc, spec| {
        let hi = spec.bound.resolve(bounds);
        acc.into_iter()
            .flat_map(|prefix| {
                (spec.min..=hi).map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect()
    })
}

fn check_bounds(identity: &Identity, bounds: &GridBounds) -> Result<()> {
    for spec in identity.params {
        let got = spec.bound.resolve(bounds);
        if got < spec.min {
            return Err(Error::BoundsBelowMinimum {
                id: identity.id.to_string(),
                param: spec.name.to_string(),
                min: spec.min,
                got,
            });
        }
    }
    Ok(())
}

/// Sweeps identities over parameter grids on a dedicated thread pool.
pub struct Verifier {
    seqs: Sequences,
    cap: usize,
    pool: rayon::ThreadPool,
}

impl Verifier {
    /// A verifier with `jobs` worker threads (at least 1).
    pub fn new(jobs: usize) -> Result<Self> {
        if jobs == 0 {
            return Err(Error::Config("jobs must be at least 1".into()));
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Config(e.to_string()))?;
        Ok(Verifier {
            seqs: Sequences::new(),
            cap: VerifyConfig::default().counterexample_cap,
            pool,
        })
    }

    /// Maximum number of counterexamples kept per identity.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn sequences(&self) -> &Sequences {
        &self.seqs
    }

    fn run(&self, identity: &Identity, bounds: &GridBounds) -> IdentityReport {
        let start = Instant::now();
        let points = grid(identity.params, bounds);
        let results: Vec<Sides> = self.pool.install(|| {
            points
                .par_iter()
                .map(|pt| (identity.check)(&self.seqs, pt))
                .collect()
        });
        let mut failed_cases = 0;
        let mut counterexamples = Vec::new();
        for (pt, sides) in points.iter().zip(results) {
            if sides.holds() {
                continue;
            }
            failed_cases += 1;
            if counterexamples.len() < self.cap {
                counterexamples.push(Counterexample {
                    params: Assignment(
                        identity
                            .params
                            .iter()
                            .map(|s| s.name)
                            .zip(pt.iter().copied())
                            .collect(),
                    ),
                    lhs: sides.lhs,
                    rhs: sides.rhs,
                });
            }
        }
        IdentityReport {
            id: identity.id.to_string(),
            cases_checked: points.len(),
            outcome: if failed_cases == 0 {
                Outcome::Pass
            } else {
                Outcome::Fail
            },
            vacuous: points.is_empty(),
            failed_cases,
            counterexamples,
            elapsed: start.elapsed(),
        }
    }

    /// Checks one identity over its full grid. Fails on an unknown id or
    /// when a bound is below the identity's minimum for that parameter.
    pub fn verify_identity(&self, id: &str, bounds: &GridBounds) -> Result<IdentityReport> {
        let identity = registry::find(id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
        check_bounds(identity, bounds)?;
        Ok(self.run(identity, bounds))
    }

    /// Checks the listed identities (registry order is kept). Same error
    /// rules as [`Verifier::verify_identity`].
    pub fn verify_ids(
        &self,
        ids: &[&str],
        bounds: &GridBounds,
        expected_fail: &BTreeSet<String>,
    ) -> Result<SuiteReport> {
        let mut selected = Vec::new();
        for id in ids {
            let identity =
                registry::find(id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
            check_bounds(identity, bounds)?;
            selected.push(identity);
        }
        selected.sort_by_key(|i| i.id);
        selected.dedup_by_key(|i| i.id);
        let reports = self
            .pool
            .install(|| selected.par_iter().map(|i| self.run(i, bounds)).collect());
        Ok(SuiteReport::new(*bounds, expected_fail, reports))
    }

    /// Checks every registered identity. Identities whose minimum exceeds a
    /// bound are reported as vacuous passes with zero cases.
    pub fn verify_all(&self, bounds: &GridBounds, expected_fail: &BTreeSet<String>) -> SuiteReport {
        let reports = self.pool.install(|| {
            registry::all()
                .par_iter()
                .map(|i| self.run(i, bounds))
                .collect()
        });
        SuiteReport::new(*bounds, expected_fail, reports)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expected() -> BTreeSet<String> {
        VerifyConfig::default().expected_fail
    }

    #[test]
    fn registry_contents() {
        let list = list_identities();
        assert!(list.len() >= 27);
        assert!(list.iter().any(|d| d.id == "keller"));
        let printed = list.iter().find(|d| d.id == "eq8-as-printed").unwrap();
        assert!(printed.expected_fail);
        assert!(list.windows(2).all(|w| w[0].id < w[1].id));
    }

    #[test]
    fn grid_is_lexicographic() {
        let params = [
            ParamSpec {
                name: "n",
                min: 1,
                bound: BoundSource::N,
                meaning: "",
            },
            ParamSpec {
                name: "p",
                min: 0,
                bound: BoundSource::P,
                meaning: "",
            },
        ];
        let g = grid(&params, &GridBounds::new(2, 1, 0));
        assert_eq!(g, vec![vec![1, 0], vec![1, 1], vec![2, 0], vec![2, 1]]);
        assert!(grid(&params, &GridBounds::new(0, 1, 0)).is_empty());
    }

    #[test]
    fn theorem1_case_count() {
        let v = Verifier::new(2).unwrap();
        let r = v
            .verify_identity("eq6-theorem1", &GridBounds::new(10, 6, 0))
            .unwrap();
        assert_eq!(r.outcome, Outcome::Pass);
        assert_eq!(r.cases_checked, 70);
    }

    #[test]
    fn printed_sign_witness() {
        let v = Verifier::new(1).unwrap();
        let r = v
            .verify_identity("eq8-as-printed", &GridBounds::new(2, 0, 0))
            .unwrap();
        assert_eq!(r.outcome, Outcome::Fail);
        let first = &r.counterexamples[0];
        assert_eq!(first.params.0, vec![("n", 1), ("p", 0)]);
        assert_eq!(first.lhs, Value::Rational(Rational::frac(-1, 2)));
        assert_eq!(first.rhs, Value::Rational(Rational::frac(1, 2)));
    }

    #[test]
    fn counterexample_cap_limits_list_not_count() {
        let v = Verifier::new(1).unwrap().with_cap(3);
        let r = v
            .verify_identity("eq8-as-printed", &GridBounds::new(4, 3, 0))
            .unwrap();
        assert_eq!(r.counterexamples.len(), 3);
        // 16 grid points; B_{2,1}, B_{3,0} and B_{4,1} vanish, so the sign
        // flip goes unnoticed there.
        assert_eq!(r.failed_cases, 13);
    }

    #[test]
    fn errors_for_unknown_id_and_low_bounds() {
        let v = Verifier::new(1).unwrap();
        assert!(matches!(
            v.verify_identity("nope", &GridBounds::default()),
            Err(Error::UnknownIdentity(_))
        ));
        assert!(matches!(
            v.verify_identity("eq36", &GridBounds::new(4, 0, 0)),
            Err(Error::BoundsBelowMinimum { .. })
        ));
    }

    #[test]
    fn empty_grid_is_vacuous() {
        let v = Verifier::new(2).unwrap();
        let suite = v.verify_all(&GridBounds::new(0, 0, 0), &BTreeSet::new());
        let keller = suite.report("keller").unwrap();
        assert!(!keller.vacuous);
        for id in ["eq25", "eq6-theorem1", "eq36", "gould", "eq34-beta"] {
            let r = suite.report(id).unwrap();
            assert!(r.vacuous, "{id}");
            assert_eq!(r.cases_checked, 0);
            assert_eq!(r.outcome, Outcome::Pass);
            assert_eq!(r.status(), "VACUOUS");
        }
    }

    #[test]
    fn small_suite_honours_expected_failures() {
        let v = Verifier::new(4).unwrap();
        let bounds = GridBounds::new(5, 3, 3);
        assert!(v.verify_all(&bounds, &expected()).success);
        assert!(!v.verify_all(&bounds, &BTreeSet::new()).success);
    }

    #[test]
    fn report_json_shape() {
        let v = Verifier::new(1).unwrap();
        let r = v
            .verify_identity("eq8-as-printed", &GridBounds::new(1, 0, 0))
            .unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["id"], "eq8-as-printed");
        assert_eq!(json["outcome"], "fail");
        assert_eq!(json["vacuous"], false);
        assert_eq!(json["counterexamples"][0]["params"]["n"], 1);
        assert_eq!(json["counterexamples"][0]["rhs"], "1/2");
        assert!(json["elapsed_ms"].is_number());
    }
}

//! `pbern`: compute p-Bernoulli values and polynomials, verify the identity
//! registry, and export tables.
//!
//! Exit codes: 0 success, 1 verification found an unexpected outcome,
//! 2 usage or environment error.

use std::collections::BTreeSet;
use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use pbern_core::combinatorics::{eulerian_poly, r_stirling2, stirling2};
use pbern_core::exact::Rational;
use pbern_core::identities::{describe_identity, GridBounds, SuiteReport, Verifier, VerifyConfig};
use pbern_core::sequences::{AltSumRoute, PBernoulliKey, Route, Sequences};
use serde::Serialize;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "pbern",
    version,
    about = "Exact p-Bernoulli numbers, polynomials and identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a single exact value.
    #[command(subcommand)]
    Compute(ComputeKind),
    /// Print a polynomial.
    #[command(subcommand)]
    Poly(PolyKind),
    /// Check identities over a parameter grid.
    Verify(VerifyArgs),
    /// Export a table of values.
    #[command(subcommand)]
    Table(TableKind),
}

#[derive(Subcommand)]
enum ComputeKind {
    /// Classical Bernoulli number B_n.
    Bernoulli {
        #[arg(long)]
        n: usize,
    },
    /// p-Bernoulli number B_{n,p}.
    Pbernoulli {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value = "recurrence", value_parser = parse_route)]
        route: Route,
    },
    /// Geometric polynomial w_n(y) at a rational point.
    GeometricAt {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        y: Rational,
    },
    /// Power sum 0^n + 1^n + ... + m^n.
    Faulhaber {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Alternating sum of k^p over binomial coefficients C(n,k).
    Altsum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value = "direct", value_parser = parse_altsum_route)]
        route: AltSumRoute,
    },
}

fn parse_route(s: &str) -> Result<Route, String> {
    s.parse().map_err(|e: pbern_core::Error| e.to_string())
}

fn parse_altsum_route(s: &str) -> Result<AltSumRoute, String> {
    s.parse().map_err(|e: pbern_core::Error| e.to_string())
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFormat {
    Json,
    Pretty,
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = PolyFormat::Json)]
    format: PolyFormat,
}

#[derive(Subcommand)]
enum PolyKind {
    /// B_n(x).
    Bernoulli(PolyArgs),
    /// B_{n,p}(x).
    Pbernoulli {
        #[command(flatten)]
        common: PolyArgs,
        #[arg(long)]
        p: usize,
    },
    /// w_n(y).
    Geometric(PolyArgs),
    /// w_n(x;y).
    Geometric2(PolyArgs),
    /// A_n(t).
    Eulerian(PolyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity ids, or `all`.
    #[arg(required = true)]
    ids: Vec<String>,
    /// Largest n in the grid [default: from config]
    #[arg(long)]
    n_max: Option<usize>,
    /// Largest p in the grid [default: from config]
    #[arg(long)]
    p_max: Option<usize>,
    /// Largest m in the grid [default: from config]
    #[arg(long)]
    m_max: Option<usize>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, env = "PBERN_JOBS", value_parser = clap::value_parser!(u32).range(1..))]
    jobs: Option<u32>,
    /// Write the full JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Ids expected to fail, comma separated. Given without a value, the
    /// expected set is empty.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    expect_fail: Option<Vec<String>>,
    /// Counterexamples kept per identity.
    #[arg(long)]
    cap: Option<usize>,
    /// TOML file with bounds, cap and expected failures.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct TableOutput {
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum TableKind {
    /// B_{n,p} for 0 <= n <= n-max, 0 <= p <= p-max.
    PbernoulliNumbers {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        p_max: usize,
        #[command(flatten)]
        output: TableOutput,
    },
    /// S(n,k) for 0 <= k <= n <= n-max.
    Stirling {
        #[arg(long)]
        n_max: usize,
        #[command(flatten)]
        output: TableOutput,
    },
    /// r-Stirling numbers for r <= k <= n <= n-max.
    RStirling {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        output: TableOutput,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Compute(kind) => writeln!(out, "{}", compute(kind)?)?,
        Command::Poly(kind) => writeln!(out, "{}", poly(kind)?)?,
        Command::Verify(args) => return verify(args, &mut out),
        Command::Table(kind) => table(kind, &mut out)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn compute(kind: ComputeKind) -> anyhow::Result<Rational> {
    let s = Sequences::new();
    Ok(match kind {
        ComputeKind::Bernoulli { n } => s.bernoulli_number(n),
        ComputeKind::Pbernoulli { n, p, route } => {
            s.p_bernoulli_number(PBernoulliKey::new(n, p), route)?
        }
        ComputeKind::GeometricAt { n, y } => s.geometric_poly(n).eval(&y),
        ComputeKind::Faulhaber { n, m } => s.faulhaber_sum(n, m),
        ComputeKind::Altsum { n, p, route } => s.alt_binom_reciprocal_sum(n, p, route)?,
    })
}

fn poly(kind: PolyKind) -> anyhow::Result<String> {
    let s = Sequences::new();
    let (format, uni, var) = match kind {
        PolyKind::Bernoulli(a) => (a.format, s.bernoulli_poly(a.n), "x"),
        PolyKind::Pbernoulli { common: a, p } => (
            a.format,
            s.p_bernoulli_poly(PBernoulliKey::new(a.n, p)),
            "x",
        ),
        PolyKind::Geometric(a) => (a.format, s.geometric_poly(a.n), "y"),
        PolyKind::Eulerian(a) => (a.format, eulerian_poly(a.n), "t"),
        PolyKind::Geometric2(a) => {
            let q = s.geometric_poly_two_var(a.n);
            return Ok(match a.format {
                PolyFormat::Json => serde_json::to_string(&q)?,
                PolyFormat::Pretty => q.pretty(),
            });
        }
    };
    Ok(match format {
        PolyFormat::Json => serde_json::to_string(&uni)?,
        PolyFormat::Pretty => uni.pretty(var),
    })
}

#[derive(Serialize)]
struct VersionedReport<'a> {
    schema_version: u32,
    #[serde(flatten)]
    suite: &'a SuiteReport,
}

fn verify(args: VerifyArgs, out: &mut impl Write) -> anyhow::Result<ExitCode> {
    // Expected failures come from --expect-fail, else from an explicit
    // --config file, else nothing.
    let config = match &args.config {
        Some(path) => Some(VerifyConfig::load(path)?),
        None => None,
    };
    let defaults = config.clone().unwrap_or_default();
    let bounds = GridBounds::new(
        args.n_max.unwrap_or(defaults.bounds.n_max),
        args.p_max.unwrap_or(defaults.bounds.p_max),
        args.m_max.unwrap_or(defaults.bounds.m_max),
    );
    let expected: BTreeSet<String> = match args.expect_fail {
        Some(ids) => ids.into_iter().filter(|s| !s.is_empty()).collect(),
        None => config.map(|c| c.expected_fail).unwrap_or_default(),
    };
    for id in &expected {
        if describe_identity(id).is_none() {
            bail!("unknown identity {id:?} in expected failures");
        }
    }
    let jobs = match args.jobs {
        Some(j) => j as usize,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let verifier = Verifier::new(jobs)?.with_cap(args.cap.unwrap_or(defaults.counterexample_cap));

    let suite = if args.ids.iter().any(|id| id == "all") {
        if args.ids.len() > 1 {
            bail!("`all` cannot be combined with other ids");
        }
        verifier.verify_all(&bounds, &expected)
    } else {
        let ids: Vec<&str> = args.ids.iter().map(String::as_str).collect();
        verifier.verify_ids(&ids, &bounds, &expected)?
    };

    if let Some(path) = &args.out {
        let file = create(path)?;
        let versioned = VersionedReport {
            schema_version: SCHEMA_VERSION,
            suite: &suite,
        };
        serde_json::to_writer_pretty(&file, &versioned)
            .with_context(|| format!("writing {}", path.display()))?;
    }

    let width = suite.reports.iter().map(|r| r.id.len()).max().unwrap_or(0);
    for report in &suite.reports {
        let note = if expected.contains(&report.id) {
            " (expected)"
        } else {
            ""
        };
        writeln!(
            out,
            "{:<width$}  {:>6} cases  {}{note}",
            report.id,
            report.cases_checked,
            report.status()
        )?;
        if let Some(c) = report.counterexamples.first() {
            writeln!(
                out,
                "{:<width$}  witness {}: lhs = {}, rhs = {}",
                "", c.params, c.lhs, c.rhs
            )?;
        }
    }
    let verdict = if suite.success { "success" } else { "failure" };
    writeln!(out, "overall: {verdict}")?;
    Ok(if suite.success {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn create(path: &Path) -> anyhow::Result<File> {
    File::create(path).with_context(|| format!("cannot write {}", path.display()))
}

fn table(kind: TableKind, stdout: &mut dyn Write) -> anyhow::Result<()> {
    let (columns, rows, output): (_, Vec<(usize, usize, String)>, _) = match kind {
        TableKind::PbernoulliNumbers {
            n_max,
            p_max,
            output,
        } => {
            let s = Sequences::new();
            let rows = (0..=n_max)
                .flat_map(|n| (0..=p_max).map(move |p| (n, p)))
                .map(|(n, p)| (n, p, s.p_bernoulli(n, p).to_string()))
                .collect();
            (["n", "p"], rows, output)
        }
        TableKind::Stirling { n_max, output } => {
            let rows = (0..=n_max)
                .flat_map(|n| (0..=n).map(move |k| (n, k)))
                .map(|(n, k)| (n, k, stirling2(n, k as i64).to_string()))
                .collect();
            (["n", "k"], rows, output)
        }
        TableKind::RStirling { n_max, r, output } => {
            let mut rows = Vec::new();
            for n in r..=n_max {
                for k in r..=n {
                    rows.push((n, k, r_stirling2(n, k as i64, r)?.to_string()));
                }
            }
            (["n", "k"], rows, output)
        }
    };

    let sink: Box<dyn Write + '_> = match &output.out {
        Some(path) => Box::new(create(path)?),
        None => Box::new(&mut *stdout),
    };
    match output.format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(sink);
            w.write_record([columns[0], columns[1], "value"])?;
            for (a, b, v) in &rows {
                w.write_record([a.to_string(), b.to_string(), v.clone()])?;
            }
            w.flush()?;
        }
        TableFormat::Json => {
            let records: Vec<serde_json::Value> = rows
                .into_iter()
                .map(
                    |(a, b, v)| serde_json::json!({ (columns[0]): a, (columns[1]): b, "value": v }),
                )
                .collect();
            let mut sink = sink;
            serde_json::to_writer(&mut sink, &records)?;
            writeln!(sink)?;
        }
    }
    Ok(())
}

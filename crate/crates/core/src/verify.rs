//! Parameter sweeps over every registered identity and gcd theorem.
//!
//! Work is split into `(k, family)` tasks that run on a rayon pool. Each task
//! folds its reports into counts and keeps only the notable ones (violations
//! and hypothesis counterexamples, or everything with `full_results`). The
//! merged output is sorted canonically, so it does not depend on the thread
//! count.

use std::collections::{BTreeMap, BTreeSet};
use std::num::NonZeroUsize;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::divisibility::{self as div, GcdReport};
use crate::genfunc::{self, Variant};
use crate::identities::{self as id, IdentityReport, VajdaArgs};
use crate::{Error, Result, Seq, SequenceParams, Terms};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Report {
    Identity(IdentityReport),
    Gcd(GcdReport),
}

impl Report {
    pub fn name(&self) -> &str {
        match self {
            Report::Identity(r) => &r.identity_name,
            Report::Gcd(r) => &r.theorem_name,
        }
    }

    pub fn inputs(&self) -> &BTreeMap<String, u64> {
        match self {
            Report::Identity(r) => &r.inputs,
            Report::Gcd(r) => &r.inputs,
        }
    }

    pub fn holds(&self) -> bool {
        match self {
            Report::Identity(r) => r.holds,
            Report::Gcd(r) => r.holds,
        }
    }

    pub fn hypothesis_met(&self) -> bool {
        match self {
            Report::Identity(r) => r.hypothesis_met,
            Report::Gcd(r) => r.hypothesis_met,
        }
    }

    pub fn is_violation(&self) -> bool {
        self.hypothesis_met() && !self.holds()
    }

    pub fn is_counterexample(&self) -> bool {
        !self.hypothesis_met() && !self.holds()
    }

    fn sort_key(&self) -> (&str, &BTreeMap<String, u64>) {
        (self.name(), self.inputs())
    }
}

impl From<IdentityReport> for Report {
    fn from(r: IdentityReport) -> Self {
        Report::Identity(r)
    }
}

impl From<GcdReport> for Report {
    fn from(r: GcdReport) -> Self {
        Report::Gcd(r)
    }
}

type Emit<'a> = &'a mut dyn FnMut(Report);
type Runner = fn(&Terms, u64, Emit<'_>) -> Result<()>;

/// A named group of checks sharing an index domain.
pub struct Family {
    pub name: &'static str,
    /// Report names the family emits.
    pub variants: &'static [&'static str],
    pub description: &'static str,
    run: Runner,
}

impl Family {
    /// Runs every in-domain check with indices bounded by `max_index`.
    /// `t` must cover indices up to `3 * max_index + 2`.
    pub fn run(&self, t: &Terms, max_index: u64, emit: Emit<'_>) -> Result<()> {
        (self.run)(t, max_index, emit)
    }
}

macro_rules! family {
    ($name:literal, [$($v:literal),*], $desc:literal, $run:expr) => {
        Family { name: $name, variants: &[$($v),*], description: $desc, run: $run }
    };
}

static CATALOG: &[Family] = &[
    family!(
        "catalan",
        ["catalan-b", "catalan-c"],
        "X(n+r)X(n-r) - X(n)^2, 1 <= n, 0 <= r <= n",
        |t, m, e| {
            for seq in [Seq::B, Seq::C] {
                for n in 1..=m {
                    for r in 0..=n {
                        e(id::catalan_in(t, seq, n, r)?.into());
                    }
                }
            }
            Ok(())
        }
    ),
    family!(
        "cassini",
        ["cassini-b", "cassini-c"],
        "X(n)^2 - X(n-1)X(n+1), n >= 1",
        |t, m, e| {
            for seq in [Seq::B, Seq::C] {
                for n in 1..=m {
                    e(id::cassini_in(t, seq, n)?.into());
                }
            }
            Ok(())
        }
    ),
    family!(
        "docagne",
        ["docagne-b", "docagne-c"],
        "X(m)X(n+1) - X(n)X(m+1), m >= n >= 0",
        |t, mx, e| {
            for seq in [Seq::B, Seq::C] {
                for m in 0..=mx {
                    for n in 0..=m {
                        e(id::docagne_in(t, seq, m, n)?.into());
                    }
                }
            }
            Ok(())
        }
    ),
    family!(
        "vajda",
        ["vajda-1", "vajda-2"],
        "both Vajda forms over the index box",
        |t, mx, e| {
            for n in 0..=mx {
                for i in 0..=mx {
                    for j in 0..=mx {
                        e(id::vajda_in(t, VajdaArgs::Form1 { n, i, j })?.into());
                    }
                }
            }
            for n in 0..=mx {
                for l in 0..=mx {
                    for m in n + l + 1..=mx {
                        e(id::vajda_in(t, VajdaArgs::Form2 { n, m, l })?.into());
                    }
                }
            }
            Ok(())
        }
    ),
    family!(
        "sum",
        ["sum-b", "sum-c"],
        "closed forms for partial sums, n >= 1",
        |t, m, e| {
            for seq in [Seq::B, Seq::C] {
                for n in 1..=m {
                    e(id::sum_closed_form_in(t, seq, n)?.into());
                }
            }
            Ok(())
        }
    ),
    family!(
        "addition",
        ["addition"],
        "B(m+n) = B(m)B(n+1) + (1-k)B(m-1)B(n)",
        |t, mx, e| {
            for m in 1..=mx {
                for n in 0..=mx {
                    e(id::addition_formula_in(t, m, n)?.into());
                }
            }
            Ok(())
        }
    ),
    family!(
        "doubling",
        ["doubling"],
        "B(2n) and B(2n-1) from B(n-1), B(n), B(n+1)",
        |t, m, e| {
            for n in 1..=m {
                e(id::doubling_formulas_in(t, n)?.into());
            }
            Ok(())
        }
    ),
    family!(
        "power-sum",
        ["power-sum"],
        "alpha^n + beta^n = B(n+1) - (k-1)B(n-1)",
        |t, m, e| {
            for n in 1..=m {
                e(id::power_sum_identity_in(t, n)?.into());
            }
            Ok(())
        }
    ),
    family!(
        "c-from-b",
        ["c-from-b"],
        "C(n) = B(n+1) + 3(1-k)B(n)",
        |t, m, e| {
            for n in 0..=m {
                e(id::c_from_b_in(t, n)?.into());
            }
            Ok(())
        }
    ),
    family!("matrix-a", ["matrix-a"], "A^n in terms of B", |t, m, e| {
        for n in 1..=m {
            e(id::matrix_a_in(t, n)?.into());
        }
        Ok(())
    }),
    family!(
        "matrix-r",
        ["matrix-r"],
        "R A^n in terms of C",
        |t, m, e| {
            for n in 1..=m {
                e(id::matrix_r_in(t, n)?.into());
            }
            Ok(())
        }
    ),
    family!(
        "matrix-det",
        ["matrix-det"],
        "det(A^n) = (k-1)^n",
        |t, m, e| {
            for n in 1..=m {
                e(id::matrix_det_in(t, n)?.into());
            }
            Ok(())
        }
    ),
    family!("ar-commute", ["ar-commute"], "A R = R A", |t, _, e| {
        e(id::ar_commute(t.params()).into());
        Ok(())
    }),
    family!(
        "negative-index",
        ["negative-index"],
        "B(-n) against the backward recurrence, k >= 2",
        |t, m, e| {
            if t.params().is_degenerate() {
                return Ok(());
            }
            for n in 1..=m {
                e(id::negative_index_in(t, n)?.into());
            }
            Ok(())
        }
    ),
    family!(
        "genfunc",
        ["genfunc-b", "genfunc-c"],
        "series coefficients against the recurrence",
        |t, m, e| {
            for seq in [Seq::B, Seq::C] {
                let coeffs = genfunc::series(t.params(), seq, Variant::Corrected, m as usize);
                for n in 0..=m {
                    e(genfunc::coefficient_report(t, seq, &coeffs, n)?.into());
                }
            }
            Ok(())
        }
    ),
    family!(
        "index-divisibility",
        ["index-divisibility"],
        "m | n implies B(m) | B(n)",
        |t, mx, e| {
            for m in 1..=mx {
                for n in (m..=mx).step_by(m as usize) {
                    e(div::check_index_divisibility_in(t, m, n)?.into());
                }
            }
            Ok(())
        }
    ),
    family!(
        "coprime-norm",
        ["coprime-norm-b", "coprime-norm-c"],
        "gcd(1-k, X(n)) = 1",
        |t, m, e| {
            for seq in [Seq::B, Seq::C] {
                for n in 1..=m {
                    e(div::check_coprime_norm_in(t, seq, n)?.into());
                }
            }
            Ok(())
        }
    ),
    family!(
        "consecutive-gcd",
        ["consecutive-gcd-b", "consecutive-gcd-c"],
        "gcd(X(n), X(n+1)) = 1",
        |t, m, e| {
            for seq in [Seq::B, Seq::C] {
                for n in 1..=m {
                    e(div::check_consecutive_coprime_in(t, seq, n)?.into());
                }
            }
            Ok(())
        }
    ),
    family!(
        "b-c-coprime",
        ["b-c-coprime"],
        "gcd(B(n), C(n)) = 1",
        |t, m, e| {
            for n in 0..=m {
                e(div::check_b_c_coprime_in(t, n)?.into());
            }
            Ok(())
        }
    ),
    family!(
        "strong-gcd",
        ["strong-gcd"],
        "gcd(B(m), B(n)) = B(gcd(m, n))",
        |t, mx, e| {
            for m in 1..=mx {
                for n in 1..=mx {
                    e(div::check_strong_gcd_in(t, m, n)?.into());
                }
            }
            Ok(())
        }
    ),
];

pub fn catalog() -> &'static [Family] {
    CATALOG
}

/// Table size needed by [`Family::run`].
pub fn table_size(max_index: u64) -> u64 {
    3 * max_index + 2
}

/// Selection of report names, resolved from family or variant names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    All,
    Names(BTreeSet<String>),
}

impl Selection {
    fn contains(&self, report: &str) -> bool {
        match self {
            Selection::All => true,
            Selection::Names(s) => s.contains(report),
        }
    }

    fn selects_family(&self, f: &Family) -> bool {
        f.variants.iter().any(|v| self.contains(v))
    }

    /// Labels echoed in the report config.
    pub fn labels(&self) -> Vec<String> {
        match self {
            Selection::All => vec!["all".into()],
            Selection::Names(s) => s.iter().cloned().collect(),
        }
    }
}

impl FromStr for Selection {
    type Err = Error;

    /// Comma-separated family or variant names, or `all`.
    fn from_str(s: &str) -> Result<Self> {
        let mut names = BTreeSet::new();
        for token in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            if token == "all" {
                return Ok(Selection::All);
            }
            let mut found = false;
            for f in catalog() {
                if f.name == token {
                    names.extend(f.variants.iter().map(|v| v.to_string()));
                    found = true;
                } else if f.variants.contains(&token) {
                    names.insert(token.to_string());
                    found = true;
                }
            }
            if !found {
                return Err(Error::domain(format!("unknown identity '{token}'")));
            }
        }
        if names.is_empty() {
            return Err(Error::domain("empty identity selection"));
        }
        Ok(Selection::Names(names))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Threads {
    #[default]
    Auto,
    Fixed(NonZeroUsize),
}

impl FromStr for Threads {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "auto" {
            return Ok(Threads::Auto);
        }
        s.parse::<NonZeroUsize>().map(Threads::Fixed).map_err(|_| {
            Error::domain(format!(
                "threads must be a positive integer or 'auto', got '{s}'"
            ))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRunConfig {
    pub k_min: u64,
    pub k_max: u64,
    pub max_index: u64,
    pub selection: Selection,
    pub threads: Threads,
    /// Keep every report, not just violations and counterexamples.
    pub full_results: bool,
}

impl Default for VerifyRunConfig {
    fn default() -> Self {
        VerifyRunConfig {
            k_min: 1,
            k_max: 12,
            max_index: 40,
            selection: Selection::All,
            threads: Threads::Auto,
            full_results: false,
        }
    }
}

impl VerifyRunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.k_min < 1 {
            return Err(Error::InvalidK);
        }
        if self.k_min > self.k_max {
            return Err(Error::domain(format!(
                "empty k-range {}..{}",
                self.k_min, self.k_max
            )));
        }
        if self.max_index < 1 {
            return Err(Error::domain("max-index must be >= 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub checked: u64,
    pub held: u64,
    pub failed: u64,
    pub hypothesis_not_met: u64,
    pub counterexamples: u64,
}

impl Counts {
    fn record(&mut self, r: &Report) {
        self.checked += 1;
        if r.holds() {
            self.held += 1;
        }
        if r.is_violation() {
            self.failed += 1;
        }
        if !r.hypothesis_met() {
            self.hypothesis_not_met += 1;
        }
        if r.is_counterexample() {
            self.counterexamples += 1;
        }
    }

    fn merge(&mut self, o: &Counts) {
        self.checked += o.checked;
        self.held += o.held;
        self.failed += o.failed;
        self.hypothesis_not_met += o.hypothesis_not_met;
        self.counterexamples += o.counterexamples;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub per_identity: BTreeMap<String, Counts>,
    pub total: Counts,
    pub all_held: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub k_range: [u64; 2],
    pub max_index: u64,
    pub identities: Vec<String>,
    pub full_results: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub tool_version: String,
    pub config: ConfigEcho,
    pub results: Vec<Report>,
    pub summary: Summary,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.summary.all_held
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Default)]
struct Partial {
    counts: BTreeMap<String, Counts>,
    kept: Vec<Report>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        for (name, c) in other.counts {
            self.counts.entry(name).or_default().merge(&c);
        }
        self.kept.extend(other.kept);
        self
    }
}

pub fn run(config: &VerifyRunConfig) -> Result<VerifyReport> {
    config.validate()?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Threads::Fixed(n) = config.threads {
        builder = builder.num_threads(n.get());
    }
    let pool = builder
        .build()
        .map_err(|e| Error::domain(format!("thread pool: {e}")))?;
    pool.install(|| run_in_pool(config))
}

fn run_in_pool(config: &VerifyRunConfig) -> Result<VerifyReport> {
    let size = table_size(config.max_index);
    let tables: Vec<Terms> = (config.k_min..=config.k_max)
        .into_par_iter()
        .map(|k| SequenceParams::new(k).map(|p| Terms::new(p, size)))
        .collect::<Result<_>>()?;

    let families: Vec<&Family> = catalog()
        .iter()
        .filter(|f| config.selection.selects_family(f))
        .collect();
    let tasks: Vec<(&Terms, &Family)> = tables
        .iter()
        .flat_map(|t| families.iter().map(move |f| (t, *f)))
        .collect();

    let partial = tasks
        .par_iter()
        .map(|(t, f)| {
            let mut part = Partial::default();
            f.run(t, config.max_index, &mut |r: Report| {
                if !config.selection.contains(r.name()) {
                    return;
                }
                part.counts
                    .entry(r.name().to_string())
                    .or_default()
                    .record(&r);
                if config.full_results || !r.holds() {
                    part.kept.push(r);
                }
            })?;
            Ok(part)
        })
        .try_reduce(Partial::default, |a, b| Ok(a.merge(b)))?;

    let mut results = partial.kept;
    results.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    let mut total = Counts::default();
    for c in partial.counts.values() {
        total.merge(c);
    }
    Ok(VerifyReport {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        config: ConfigEcho {
            k_range: [config.k_min, config.k_max],
            max_index: config.max_index,
            identities: config.selection.labels(),
            full_results: config.full_results,
        },
        results,
        summary: Summary {
            all_held: total.failed == 0,
            per_identity: partial.counts,
            total,
        },
    })
}

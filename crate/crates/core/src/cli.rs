//! The `balancing` command line.
//!
//! Exit codes: 0 on success, 1 when a verification or cross-check fails,
//! 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::engines::DEFAULT_ITERATIVE_CAP;
use crate::genfunc::{self, Variant};
use crate::verify::{self, Selection, Threads, VerifyReport, VerifyRunConfig};
use crate::{errata, term_b_negative, Engine, Engines, Error, Seq, SequenceParams, Terms};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "balancing",
    version,
    about = "Generalized Balancing and Balancing-Lucas numbers"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,

    /// Suppress warnings and progress chatter on stderr.
    #[arg(long, global = true)]
    pub quiet: bool,

    /// Worker threads for sweeps: a positive integer or `auto`.
    #[arg(long, global = true, default_value = "auto")]
    pub threads: String,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one term B(k,n) or C(k,n).
    Term(TermArgs),
    /// Print B and C over ranges of k and n.
    Table(TableArgs),
    /// Expand a generating function into power-series coefficients.
    Series(SeriesArgs),
    /// Sweep every identity and gcd theorem over a parameter box.
    Verify(VerifyArgs),
    /// Time the engines against each other.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct TermArgs {
    #[arg(long, default_value = "B")]
    pub seq: String,
    #[arg(long)]
    pub k: i64,
    /// Index; negative values are accepted for B and yield exact rationals.
    #[arg(long)]
    pub n: i64,
    #[arg(long, default_value = "doubling")]
    pub engine: String,
    #[arg(long, default_value_t = DEFAULT_ITERATIVE_CAP)]
    pub iterative_cap: u64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct TableArgs {
    /// `lo..hi` (inclusive) or a single value.
    #[arg(long, default_value = "1..4")]
    pub k: String,
    #[arg(long, default_value = "0..5")]
    pub n: String,
    /// Comma-separated subset of `B,C`.
    #[arg(long, default_value = "B,C")]
    pub seq: String,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SeriesArgs {
    #[arg(long, default_value = "B")]
    pub seq: String,
    #[arg(long)]
    pub k: i64,
    /// Highest coefficient index.
    #[arg(long = "N", visible_alias = "terms")]
    pub terms: i64,
    #[arg(long, default_value = "corrected")]
    pub variant: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "1..12")]
    pub k: String,
    #[arg(long, default_value_t = 40)]
    pub max_index: u64,
    /// Comma-separated family or variant names, or `all`.
    #[arg(long, default_value = "all")]
    pub identity: String,
    /// Include every report in the output, not only the failing ones.
    #[arg(long)]
    pub full_results: bool,
    /// Write the errata ledger (Markdown) to this path.
    #[arg(long)]
    pub emit_errata: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub k: u64,
    /// Comma-separated indices.
    #[arg(long)]
    pub n: String,
    /// Comma-separated engine names, or `all`.
    #[arg(long, default_value = "all")]
    pub engines: String,
    #[arg(long, default_value_t = 3)]
    pub repetitions: u32,
    #[arg(long, default_value_t = DEFAULT_ITERATIVE_CAP)]
    pub iterative_cap: u64,
}

/// Failures that map onto exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Failed(format!("i/o error: {e}"))
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Failed(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILED
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match &cli.command {
        Command::Term(a) => cmd_term(cli, a, out),
        Command::Table(a) => cmd_table(cli, a, out),
        Command::Series(a) => cmd_series(cli, a, out, err),
        Command::Verify(a) => cmd_verify(cli, a, out, err),
        Command::Bench(a) => cmd_bench(cli, a, out),
    }
}

fn params(k: i64) -> Result<SequenceParams, Failure> {
    if k < 1 {
        return Err(Error::InvalidK.into());
    }
    Ok(SequenceParams::new(k as u64)?)
}

fn parse<T: FromStr<Err = Error>>(s: &str) -> Result<T, Failure> {
    Ok(s.parse::<T>()?)
}

/// `lo..hi`, `lo..=hi` or a single value; both ends inclusive.
fn parse_range(s: &str, what: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::Usage(format!("invalid {what} range '{s}' (expected lo..hi)"));
    let num = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
    match s.split_once("..") {
        Some((lo, hi)) => Ok((num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?)),
        None => {
            let v = num(s)?;
            Ok((v, v))
        }
    }
}

fn cmd_term(cli: &Cli, a: &TermArgs, out: &mut dyn Write) -> CmdResult {
    let p = params(a.k)?;
    let seq: Seq = parse(&a.seq)?;
    let engine: Engine = parse(&a.engine)?;
    let value = if a.n < 0 {
        if seq == Seq::C {
            return Err(Failure::Usage(
                "negative indices are defined for B only".into(),
            ));
        }
        crate::exact::rational_to_string(&term_b_negative(p, a.n.unsigned_abs())?)
    } else {
        Engines::with_iterative_cap(a.iterative_cap)
            .term(p, seq, a.n as u64, engine)?
            .to_string()
    };
    match cli.format {
        Format::Plain => writeln!(out, "{value}")?,
        Format::Csv => {
            writeln!(out, "seq,k,n,engine,value")?;
            writeln!(out, "{seq},{},{},{engine},{value}", a.k, a.n)?;
        }
        Format::Json => {
            let v = json!({"seq": seq, "k": a.k, "n": a.n, "engine": engine, "value": value});
            writeln!(out, "{v}")?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_table(cli: &Cli, a: &TableArgs, out: &mut dyn Write) -> CmdResult {
    let (k_lo, k_hi) = parse_range(&a.k, "k")?;
    let (n_lo, n_hi) = parse_range(&a.n, "n")?;
    if k_lo <= k_hi && k_lo < 1 {
        return Err(Error::InvalidK.into());
    }
    if n_lo <= n_hi && n_lo < 0 {
        return Err(Failure::Usage("table indices must be >= 0".into()));
    }
    let mut seqs: Vec<Seq> = Vec::new();
    for tok in a.seq.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let s: Seq = parse(tok)?;
        if !seqs.contains(&s) {
            seqs.push(s);
        }
    }
    if seqs.is_empty() {
        return Err(Failure::Usage("--seq must name B and/or C".into()));
    }
    seqs.sort();

    let mut rows: Vec<(i64, i64, Vec<BigInt>)> = Vec::new();
    if n_lo <= n_hi {
        for k in k_lo..=k_hi {
            let t = Terms::new(params(k)?, n_hi as u64);
            for n in n_lo..=n_hi {
                let vals = seqs
                    .iter()
                    .map(|&s| t.get(s, n as u64).cloned())
                    .collect::<Result<Vec<_>, _>>()?;
                rows.push((k, n, vals));
            }
        }
    }

    let headers: Vec<String> = seqs.iter().map(|s| s.to_string()).collect();
    match cli.format {
        Format::Csv => {
            writeln!(out, "k,n,{}", headers.join(","))?;
            for (k, n, vals) in &rows {
                let vals: Vec<String> = vals.iter().map(|v| v.to_string()).collect();
                writeln!(out, "{k},{n},{}", vals.join(","))?;
            }
        }
        Format::Json => {
            let arr: Vec<serde_json::Value> = rows
                .iter()
                .map(|(k, n, vals)| {
                    let mut obj = serde_json::Map::new();
                    obj.insert("k".into(), json!(k));
                    obj.insert("n".into(), json!(n));
                    for (h, v) in headers.iter().zip(vals) {
                        obj.insert(h.clone(), json!(v.to_string()));
                    }
                    serde_json::Value::Object(obj)
                })
                .collect();
            writeln!(out, "{}", serde_json::Value::Array(arr))?;
        }
        Format::Plain => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|(k, n, vals)| {
                    let mut r = vec![k.to_string(), n.to_string()];
                    r.extend(vals.iter().map(|v| v.to_string()));
                    r
                })
                .collect();
            let mut head = vec!["k".to_string(), "n".to_string()];
            head.extend(headers);
            let widths: Vec<usize> = (0..head.len())
                .map(|i| {
                    cells
                        .iter()
                        .map(|r| r[i].len())
                        .chain([head[i].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            for row in std::iter::once(&head).chain(cells.iter()) {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                writeln!(out, "{}", line.join("  "))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_series(cli: &Cli, a: &SeriesArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let p = params(a.k)?;
    let seq: Seq = parse(&a.seq)?;
    let variant: Variant = parse(&a.variant)?;
    if a.terms < 0 {
        return Err(Failure::Usage("N must be >= 0".into()));
    }
    let coeffs = genfunc::series(p, seq, variant, a.terms as usize);
    if seq == Seq::C && variant == Variant::Printed && !cli.quiet {
        writeln!(
            err,
            "warning: the printed numerator 1 + 3(1+k)x does not generate C(k,n); \
             coefficients diverge from n = 1"
        )?;
    }
    let strs: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    match cli.format {
        Format::Plain => writeln!(out, "{}", strs.join(" "))?,
        Format::Csv => {
            writeln!(out, "n,coefficient")?;
            for (i, c) in strs.iter().enumerate() {
                writeln!(out, "{i},{c}")?;
            }
        }
        Format::Json => {
            let v = json!({
                "seq": seq, "k": a.k, "variant": variant.to_string(), "coefficients": strs,
            });
            writeln!(out, "{v}")?;
        }
    }
    Ok(EXIT_OK)
}

pub fn verify_config(args: &VerifyArgs, threads: &str) -> Result<VerifyRunConfig, Error> {
    let (lo, hi) = parse_range(&args.k, "k").map_err(|f| match f {
        Failure::Usage(m) | Failure::Failed(m) => Error::Domain(m),
    })?;
    if lo < 1 {
        return Err(Error::InvalidK);
    }
    Ok(VerifyRunConfig {
        k_min: lo as u64,
        k_max: hi.max(0) as u64,
        max_index: args.max_index,
        selection: args.identity.parse::<Selection>()?,
        threads: threads.parse::<Threads>()?,
        full_results: args.full_results,
    })
}

fn cmd_verify(cli: &Cli, a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let config = verify_config(a, &cli.threads)?;
    let report = verify::run(&config)?;
    let mut ok = report.passed();

    if let Some(path) = &a.emit_errata {
        let ledger = errata::ledger();
        std::fs::write(path, errata::render_markdown(&ledger))?;
        let unconfirmed: Vec<&str> = ledger
            .iter()
            .filter(|e| !e.confirmed())
            .map(|e| e.id)
            .collect();
        if !unconfirmed.is_empty() {
            writeln!(err, "errata not confirmed: {}", unconfirmed.join(", "))?;
            ok = false;
        } else if !cli.quiet {
            writeln!(
                err,
                "wrote {} errata entries to {}",
                ledger.len(),
                path.display()
            )?;
        }
    }

    write_verify(cli, &report, out)?;
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}

fn write_verify(cli: &Cli, report: &VerifyReport, out: &mut dyn Write) -> std::io::Result<()> {
    let s = &report.summary;
    match cli.format {
        Format::Json => writeln!(out, "{}", report.to_json()),
        Format::Csv => {
            writeln!(
                out,
                "identity,checked,held,failed,hypothesis_not_met,counterexamples"
            )?;
            for (name, c) in &s.per_identity {
                writeln!(
                    out,
                    "{name},{},{},{},{},{}",
                    c.checked, c.held, c.failed, c.hypothesis_not_met, c.counterexamples
                )?;
            }
            Ok(())
        }
        Format::Plain => {
            if !cli.quiet {
                let width = s.per_identity.keys().map(String::len).max().unwrap_or(0);
                for (name, c) in &s.per_identity {
                    writeln!(
                        out,
                        "{name:<width$}  checked {:>7}  held {:>7}  failed {:>3}  hypothesis-not-met {:>5}",
                        c.checked, c.held, c.failed, c.hypothesis_not_met
                    )?;
                }
                for r in report.results.iter().filter(|r| r.is_violation()) {
                    writeln!(out, "VIOLATION {} {:?}", r.name(), r.inputs())?;
                }
            }
            let t = &s.total;
            writeln!(
                out,
                "{}: {} checks, {} failed, {} outside hypothesis ({} counterexamples)",
                if s.all_held { "OK" } else { "FAILED" },
                t.checked,
                t.failed,
                t.hypothesis_not_met,
                t.counterexamples
            )
        }
    }
}

struct BenchRow {
    engine: Engine,
    n: u64,
    status: String,
    digits: usize,
    best: Option<Duration>,
    mean: Option<Duration>,
}

fn cmd_bench(cli: &Cli, a: &BenchArgs, out: &mut dyn Write) -> CmdResult {
    let p = SequenceParams::new(a.k)?;
    let engines: Vec<Engine> = if a.engines.trim() == "all" {
        Engine::ALL.to_vec()
    } else {
        a.engines
            .split(',')
            .map(|s| parse::<Engine>(s.trim()))
            .collect::<Result<_, _>>()?
    };
    let ns: Vec<u64> =
        a.n.split(',')
            .map(|s| {
                s.trim()
                    .parse::<u64>()
                    .map_err(|_| Failure::Usage(format!("invalid index '{s}'")))
            })
            .collect::<Result<_, _>>()?;
    if a.repetitions == 0 {
        return Err(Failure::Usage("repetitions must be >= 1".into()));
    }
    let config = Engines::with_iterative_cap(a.iterative_cap);

    let mut rows = Vec::new();
    for &n in &ns {
        let active: Vec<Engine> = engines
            .iter()
            .copied()
            .filter(|&e| !(e == Engine::Iterative && n > a.iterative_cap))
            .collect();
        // Cross-check before any timing is reported.
        let values = active
            .iter()
            .map(|&e| config.term_b(p, n, e))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(i) = values.iter().position(|v| *v != values[0]) {
            return Err(Failure::Failed(format!(
                "engines disagree on B({}, {n}): {} vs {}",
                a.k, active[0], active[i]
            )));
        }
        let digits = values
            .first()
            .map(|v| v.to_string().trim_start_matches('-').len());
        for &e in &engines {
            if !active.contains(&e) {
                rows.push(BenchRow {
                    engine: e,
                    n,
                    status: format!("skipped (cap {})", a.iterative_cap),
                    digits: 0,
                    best: None,
                    mean: None,
                });
                continue;
            }
            let mut times = Vec::with_capacity(a.repetitions as usize);
            for _ in 0..a.repetitions {
                let start = Instant::now();
                let v = config.term_b(p, n, e)?;
                times.push(start.elapsed());
                std::hint::black_box(v);
            }
            let total: Duration = times.iter().sum();
            rows.push(BenchRow {
                engine: e,
                n,
                status: "ok".into(),
                digits: digits.unwrap_or(0),
                best: times.iter().min().copied(),
                mean: Some(total / a.repetitions),
            });
        }
    }

    let ms = |d: Option<Duration>| {
        d.map(|d| format!("{:.3}", d.as_secs_f64() * 1e3))
            .unwrap_or_default()
    };
    match cli.format {
        Format::Json => {
            let arr: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "engine": r.engine, "n": r.n, "status": r.status, "digits": r.digits,
                        "best_ms": r.best.map(|d| d.as_secs_f64() * 1e3),
                        "mean_ms": r.mean.map(|d| d.as_secs_f64() * 1e3),
                    })
                })
                .collect();
            writeln!(out, "{}", json!({"k": a.k, "rows": arr}))?;
        }
        Format::Csv => {
            writeln!(out, "engine,n,status,digits,best_ms,mean_ms")?;
            for r in &rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.engine,
                    r.n,
                    r.status,
                    r.digits,
                    ms(r.best),
                    ms(r.mean)
                )?;
            }
        }
        Format::Plain => {
            writeln!(
                out,
                "{:<10} {:>9} {:>9} {:>12} {:>12}  status",
                "engine", "n", "digits", "best ms", "mean ms"
            )?;
            for r in &rows {
                writeln!(
                    out,
                    "{:<10} {:>9} {:>9} {:>12} {:>12}  {}",
                    r.engine.to_string(),
                    r.n,
                    r.digits,
                    ms(r.best),
                    ms(r.mean),
                    r.status
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}

//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on domain errors (poles, malformed
//! partitions, caps exceeded, failed checks), 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use monowalk_core::genfun::{
    counterexample_family, evaluate, leading_ratio, normalization, series_coefficient,
};
use monowalk_core::scanner::{default_point, interval_stat};
use monowalk_core::walks::{class_function_check, enumerate_counts, oracle_compare};
use monowalk_core::{ExactRat, Partition};

use crate::parallel::{obtain_table, scan};
use crate::cache;
use crate::report;
use crate::selftest::{self, Level};

#[derive(Debug, Parser)]
#[command(name = "monowalk", version, about = "Exact monotone-walk generating functions on S(d)")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Use the character-table cache in $WG_CACHE_DIR.
    #[arg(long, global = true, value_enum, default_value_t = Switch::On)]
    cache: Switch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate M_alpha(x); with --beta and no --x, print the x -> 0 ratio M_beta/M_alpha.
    Eval {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: Option<String>,
        /// Rational point, `N/D` or `N` (default 1/d).
        #[arg(long)]
        x: Option<String>,
        /// Print M_alpha(x) * (d!)^2 / d^d instead.
        #[arg(long)]
        normalized: bool,
    },
    /// Series coefficients m^r(alpha).
    Coeff {
        #[arg(long)]
        alpha: String,
        #[arg(long = "r")]
        r: Option<u32>,
        /// Print every coefficient up to this length.
        #[arg(long = "R")]
        max_r: Option<u32>,
    },
    /// Monotonicity scan over all partitions of d.
    Scan {
        #[arg(long = "d")]
        d: u32,
        #[arg(long)]
        x: Option<String>,
        /// Exclusive lower end of an interval query.
        #[arg(long, requires = "high")]
        low: Option<String>,
        /// Inclusive upper end of an interval query.
        #[arg(long, requires = "low")]
        high: Option<String>,
    },
    /// Brute-force monotone walk counts, checked against the character formula.
    Walks {
        #[arg(long = "d")]
        d: u32,
        #[arg(long = "R")]
        max_r: u32,
    },
    /// The equal-length family (1,3^n) vs (2^n,n+1) for n = 1..=N.
    Family {
        #[arg(long)]
        n: u32,
    },
    /// Run the built-in checks.
    Selftest {
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
    },
}

struct Fail(String);

impl<E: std::fmt::Display> From<E> for Fail {
    fn from(e: E) -> Self {
        Fail(e.to_string())
    }
}

/// Run with explicit argv and output streams; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(()) => 0,
        Err(Fail(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn cache_dir(cli: &Cli) -> Option<PathBuf> {
    match cli.cache {
        Switch::On => cache::dir_from_env(),
        Switch::Off => None,
    }
}

fn parse_rat(s: &str) -> Result<ExactRat, Fail> {
    Ok(s.parse::<ExactRat>()?)
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Fail> {
    let dir = cache_dir(cli);
    let table = |d: u32| obtain_table(d, cli.jobs, dir.as_deref());

    match &cli.command {
        Command::Eval {
            alpha,
            beta,
            x,
            normalized,
        } => {
            let alpha: Partition = alpha.parse()?;
            let beta: Option<Partition> = beta.as_deref().map(str::parse).transpose()?;
            let d = alpha.degree();
            if let (Some(beta), None) = (&beta, x) {
                let ratio = leading_ratio(&alpha, beta)?;
                match cli.format {
                    Format::Json => writeln!(
                        out,
                        "{}",
                        serde_json::json!({"alpha": alpha.to_string(), "beta": beta.to_string(), "leading_ratio": ratio.to_string()})
                    )?,
                    _ => writeln!(out, "{ratio}")?,
                }
                return Ok(());
            }
            let x = match x {
                Some(s) => parse_rat(s)?,
                None => default_point(d),
            };
            let t = table(d)?;
            let mut rows = Vec::new();
            for p in std::iter::once(&alpha).chain(beta.as_ref()) {
                let mut v = evaluate(p, &x, &t)?;
                if *normalized {
                    v *= normalization(d);
                }
                rows.push((p.clone(), v));
            }
            match cli.format {
                Format::Json => {
                    let entries: Vec<_> = rows
                        .iter()
                        .map(|(p, v)| serde_json::json!({"partition": p.to_string(), "value": v.to_string()}))
                        .collect();
                    writeln!(
                        out,
                        "{}",
                        serde_json::json!({"x": x.to_string(), "normalized": normalized, "entries": entries})
                    )?;
                }
                Format::Csv => {
                    writeln!(out, "partition,value")?;
                    for (p, v) in &rows {
                        writeln!(out, "\"{p}\",{v}")?;
                    }
                }
                Format::Text if rows.len() == 1 => writeln!(out, "{}", rows[0].1)?,
                Format::Text => {
                    for (p, v) in &rows {
                        writeln!(out, "({p}) {v}")?;
                    }
                    let rel = match rows[0].1.cmp(&rows[1].1) {
                        std::cmp::Ordering::Less => "<",
                        std::cmp::Ordering::Equal => "=",
                        std::cmp::Ordering::Greater => ">",
                    };
                    writeln!(out, "({}) {rel} ({})", rows[0].0, rows[1].0)?;
                }
            }
        }
        Command::Coeff { alpha, r, max_r } => {
            let alpha: Partition = alpha.parse()?;
            let t = table(alpha.degree())?;
            let lengths: Vec<u32> = match (r, max_r) {
                (Some(r), _) => vec![*r],
                (None, Some(m)) => (0..=*m).collect(),
                (None, None) => return Err(Fail("coeff needs --r or --R".into())),
            };
            let values = lengths
                .iter()
                .map(|&r| series_coefficient(&alpha, r, &t).map(|c| (r, c)))
                .collect::<Result<Vec<_>, _>>()?;
            match cli.format {
                Format::Text if values.len() == 1 => writeln!(out, "{}", values[0].1)?,
                Format::Json => {
                    let rows: Vec<_> = values
                        .iter()
                        .map(|(r, c)| serde_json::json!({"r": r, "count": c.to_string()}))
                        .collect();
                    writeln!(out, "{}", serde_json::json!({"partition": alpha.to_string(), "coefficients": rows}))?;
                }
                _ => {
                    writeln!(out, "r,count")?;
                    for (r, c) in &values {
                        writeln!(out, "{r},{c}")?;
                    }
                }
            }
        }
        Command::Scan { d, x, low, high } => {
            let x = x.as_deref().map(parse_rat).transpose()?;
            let t = table(*d)?;
            let report = scan(&t, x.as_ref(), cli.jobs)?;
            let mut intervals = Vec::new();
            if let (Some(low), Some(high)) = (low, high) {
                let low: Partition = low.parse()?;
                let high: Partition = high.parse()?;
                intervals.push(interval_stat(&report, &low, &high)?);
            }
            let text = match cli.format {
                Format::Json => report::scan_json(&report, &intervals),
                Format::Csv => report::scan_csv(&report),
                Format::Text => report::scan_text(&report, &intervals),
            };
            out.write_all(text.as_bytes())?;
        }
        Command::Walks { d, max_r } => {
            let w = enumerate_counts(*d, *max_r)?;
            out.write_all(report::walks_csv(&w).as_bytes())?;
            if let Err(witness) = class_function_check(&w) {
                return Err(Fail(format!("class-function check failed: {witness:?}")));
            }
            let oracle = oracle_compare(*d, *max_r, &table(*d)?)?;
            if !oracle.passed() {
                return Err(Fail(format!("walk counts disagree with series: {:?}", oracle.mismatches)));
            }
            if cli.format == Format::Text {
                writeln!(err, "class-function check: pass")?;
                writeln!(err, "oracle comparison: pass ({} values)", oracle.compared)?;
            }
        }
        Command::Family { n } => {
            if *n == 0 {
                return Err(Fail("family needs --n >= 1".into()));
            }
            let members = (1..=*n)
                .map(counterexample_family)
                .collect::<Result<Vec<_>, _>>()?;
            match cli.format {
                Format::Json => {
                    let rows: Vec<_> = members
                        .iter()
                        .map(|m| {
                            serde_json::json!({"n": m.n, "alpha": m.alpha.to_string(), "beta": m.beta.to_string(), "ratio": m.ratio.to_string()})
                        })
                        .collect();
                    writeln!(out, "{}", serde_json::Value::from(rows))?;
                }
                _ => {
                    writeln!(out, "n,alpha,beta,ratio")?;
                    for m in &members {
                        writeln!(out, "{},\"{}\",\"{}\",{}", m.n, m.alpha, m.beta, m.ratio)?;
                    }
                }
            }
        }
        Command::Selftest { level } => {
            let result = selftest::run(*level, cli.jobs, dir.as_deref(), |name, ok, elapsed| {
                let _ = writeln!(
                    out,
                    "{} {name} ({:.2?})",
                    if ok { "PASS" } else { "FAIL" },
                    elapsed
                );
            });
            match result {
                Ok(summary) => writeln!(out, "selftest {:?}: {} checks passed", summary.level, summary.passed.len())?,
                Err(failure) => return Err(Fail(format!("selftest failed at {failure}"))),
            }
        }
    }
    Ok(())
}

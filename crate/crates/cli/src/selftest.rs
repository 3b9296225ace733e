//! Self-test levels.
//!
//! * quick: identities for `d ≤ 8`.
//! * standard: adds `d ≤ 13`, the walk oracle at `d = 6` and the `d = 13`
//!   counterexample values.
//! * extended: adds the violation sets for `d = 14..=16` and the `d = 20` scan.

use std::path::Path;
use std::time::{Duration, Instant};

use monowalk_core::characters::{check_conjugate_sign, verify_table, CharacterTable};
use monowalk_core::genfun::{catalan_product, normalized_value, series_coefficient, vanishing_order};
use monowalk_core::partitions::lex_list;
use monowalk_core::scanner::interval_stat;
use monowalk_core::walks::oracle_compare;
use monowalk_core::{ExactRat, Partition};

use crate::known;
use crate::parallel::{obtain_table, scan};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Level {
    Quick,
    Standard,
    Extended,
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct Summary {
    pub level: Level,
    pub passed: Vec<CheckResult>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{check}: {message}")]
pub struct Failure {
    pub check: String,
    pub message: String,
}

struct Ctx<'a> {
    jobs: Option<usize>,
    cache_dir: Option<&'a Path>,
}

impl Ctx<'_> {
    fn table(&self, d: u32) -> Result<CharacterTable, String> {
        obtain_table(d, self.jobs, self.cache_dir).map_err(|e| e.to_string())
    }
}

type Check = (String, Box<dyn Fn(&Ctx) -> Result<(), String>>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tables_verify(range: std::ops::RangeInclusive<u32>) -> Check {
    (
        format!("character identities for d in {range:?}"),
        Box::new(move |ctx| {
            for d in range.clone() {
                let t = ctx.table(d)?;
                verify_table(&t).map_err(|e| format!("d = {d}: {e}"))?;
                if d <= 10 {
                    check_conjugate_sign(&t).map_err(|e| format!("d = {d}: {e}"))?;
                }
            }
            Ok(())
        }),
    )
}

fn scans_monotone(range: std::ops::RangeInclusive<u32>) -> Check {
    (
        format!("strictly decreasing at x = 1/d for d in {range:?}"),
        Box::new(move |ctx| {
            for d in range.clone() {
                let r = scan(&ctx.table(d)?, None, ctx.jobs).map_err(|e| e.to_string())?;
                ensure(r.is_strictly_decreasing(), || {
                    format!("d = {d}: violations {:?}, ties {:?}", r.violations(), r.ties())
                })?;
            }
            Ok(())
        }),
    )
}

fn oracle(d: u32, max_length: u32) -> Check {
    (
        format!("walk counts equal series coefficients, d = {d}, r <= {max_length}"),
        Box::new(move |ctx| {
            let report = oracle_compare(d, max_length, &ctx.table(d)?).map_err(|e| e.to_string())?;
            ensure(report.passed(), || format!("{report:?}"))
        }),
    )
}

fn catalan_bottom(range: std::ops::RangeInclusive<u32>) -> Check {
    (
        format!("lowest coefficient is a Catalan product for d in {range:?}"),
        Box::new(move |ctx| {
            for d in range.clone() {
                let t = ctx.table(d)?;
                for alpha in t.order() {
                    let got = series_coefficient(alpha, vanishing_order(alpha), &t)
                        .map_err(|e| e.to_string())?;
                    ensure(got == catalan_product(alpha), || format!("({alpha}): {got}"))?;
                }
            }
            Ok(())
        }),
    )
}

fn violation_listing(d: u32) -> Check {
    (
        format!("violation set at d = {d} matches the known listing"),
        Box::new(move |ctx| {
            let r = scan(&ctx.table(d)?, None, ctx.jobs).map_err(|e| e.to_string())?;
            let expected = known::violations(d).expect("listed degree");
            ensure(r.violations() == expected.as_slice(), || {
                format!("got {:?}, expected {expected:?}", r.violations())
            })
        }),
    )
}

fn checks(level: Level) -> Vec<Check> {
    let mut out: Vec<Check> = vec![
        (
            "lex order of partitions".into(),
            Box::new(|_| {
                let six: Vec<String> = lex_list(6).iter().map(|p| p.to_plain_string()).collect();
                ensure(six.len() == 11 && six[0] == "1,1,1,1,1,1" && six[10] == "6", || {
                    format!("{six:?}")
                })?;
                ensure(lex_list(20).len() == known::P20, || "p(20)".into())
            }),
        ),
        tables_verify(1..=8),
        oracle(5, 8),
        catalan_bottom(1..=8),
        scans_monotone(1..=8),
    ];
    if level >= Level::Standard {
        out.push(tables_verify(9..=12));
        out.push(oracle(6, 8));
        out.push(scans_monotone(9..=12));
        out.push((
            "d = 13 counterexample values".into(),
            Box::new(|ctx| {
                let t = ctx.table(13)?;
                for (alpha, expected) in known::D13_NORMALIZED {
                    let alpha: Partition = alpha.parse().map_err(|e| format!("{e}"))?;
                    let got = normalized_value(&alpha, &t).map_err(|e| e.to_string())?;
                    let expected: ExactRat = expected.parse().map_err(|e| format!("{e}"))?;
                    ensure(got == expected, || format!("({alpha}): {got} != {expected}"))?;
                }
                Ok(())
            }),
        ));
        out.push(violation_listing(known::FIRST_FAILING_DEGREE));
    }
    if level >= Level::Extended {
        for d in 14..=16 {
            out.push(violation_listing(d));
        }
        out.push((
            "d = 20 violation count and long monotone interval".into(),
            Box::new(|ctx| {
                let r = scan(&ctx.table(20)?, None, ctx.jobs).map_err(|e| e.to_string())?;
                ensure(r.violations().len() == known::G20_SIZE, || {
                    format!("|G_20| = {}", r.violations().len())
                })?;
                let (low, high, card, inside) = known::D20_INTERVAL;
                let low: Partition = low.parse().map_err(|e| format!("{e}"))?;
                let high: Partition = high.parse().map_err(|e| format!("{e}"))?;
                let stat = interval_stat(&r, &low, &high).map_err(|e| e.to_string())?;
                ensure(
                    stat.cardinality == card && stat.violations_inside == known::parse_all(inside),
                    || format!("{stat:?}"),
                )
            }),
        ));
    }
    out
}

/// Run every check of `level` in order, stopping at the first failure.
/// `progress` sees each check name and whether it passed.
pub fn run(
    level: Level,
    jobs: Option<usize>,
    cache_dir: Option<&Path>,
    mut progress: impl FnMut(&str, bool, Duration),
) -> Result<Summary, Failure> {
    let ctx = Ctx { jobs, cache_dir };
    let mut passed = Vec::new();
    for (name, check) in checks(level) {
        let start = Instant::now();
        let outcome = check(&ctx);
        let elapsed = start.elapsed();
        progress(&name, outcome.is_ok(), elapsed);
        if let Err(message) = outcome {
            return Err(Failure { check: name, message });
        }
        passed.push(CheckResult { name, elapsed });
    }
    Ok(Summary { level, passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_level_passes() {
        let mut seen = Vec::new();
        let summary = run(Level::Quick, None, None, |n, ok, _| seen.push((n.to_string(), ok))).unwrap();
        assert_eq!(summary.passed.len(), 5);
        assert!(seen.iter().all(|(_, ok)| *ok));
    }

    #[test]
    fn levels_nest() {
        assert!(checks(Level::Quick).len() < checks(Level::Standard).len());
        assert!(checks(Level::Standard).len() < checks(Level::Extended).len());
    }
}

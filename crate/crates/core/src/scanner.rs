//! Monotonicity scan of `α ↦ M_α(x)` along the lex order of partitions of `d`.
//!
//! `α` is a violation when `M_α(x) < M_{α⁺}(x)` strictly, `α⁺` being its lex
//! successor. Exact equality is recorded separately as a tie. Runs are the
//! maximal lex stretches with no internal violation; a run ends right at each
//! violation.

use alloc::vec::Vec;

use crate::characters::CharacterTable;
use crate::exact::{ExactInt, ExactRat};
use crate::genfun::{normalization, Weights};
use crate::partitions::Partition;
use crate::{Error, Result};

/// `M_α(x)` and its normalized form `M_α(x) · (d!)² / d^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MValue {
    pub alpha: Partition,
    pub value: ExactRat,
    pub normalized: ExactRat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    pub start: Partition,
    pub end: Partition,
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    degree: u32,
    x: ExactRat,
    entries: Vec<MValue>,
    violations: Vec<Partition>,
    ties: Vec<Partition>,
    runs: Vec<Run>,
}

/// Half-open lex interval `(low, high]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalStat {
    pub low: Partition,
    pub high: Partition,
    pub cardinality: usize,
    pub violations_inside: Vec<Partition>,
}

impl ScanReport {
    /// Derive violations, ties and runs from values listed in lex order.
    pub fn assemble(degree: u32, x: ExactRat, entries: Vec<MValue>) -> Self {
        let mut violations = Vec::new();
        let mut ties = Vec::new();
        let mut runs = Vec::new();
        let mut run_start = 0;
        for (i, pair) in entries.windows(2).enumerate() {
            match pair[0].value.cmp(&pair[1].value) {
                core::cmp::Ordering::Less => {
                    violations.push(pair[0].alpha.clone());
                    runs.push(Run {
                        start: entries[run_start].alpha.clone(),
                        end: pair[0].alpha.clone(),
                        length: i + 1 - run_start,
                    });
                    run_start = i + 1;
                }
                core::cmp::Ordering::Equal => ties.push(pair[0].alpha.clone()),
                core::cmp::Ordering::Greater => {}
            }
        }
        if let Some(last) = entries.last() {
            runs.push(Run {
                start: entries[run_start].alpha.clone(),
                end: last.alpha.clone(),
                length: entries.len() - run_start,
            });
        }
        ScanReport {
            degree,
            x,
            entries,
            violations,
            ties,
            runs,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn x(&self) -> &ExactRat {
        &self.x
    }

    pub fn entries(&self) -> &[MValue] {
        &self.entries
    }

    /// `G_d` (at this report's `x`), in lex order.
    pub fn violations(&self) -> &[Partition] {
        &self.violations
    }

    /// Partitions whose value equals their successor's.
    pub fn ties(&self) -> &[Partition] {
        &self.ties
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    pub fn position(&self, alpha: &Partition) -> Option<usize> {
        self.entries.binary_search_by(|e| e.alpha.cmp(alpha)).ok()
    }

    pub fn value_of(&self, alpha: &Partition) -> Option<&MValue> {
        self.position(alpha).map(|i| &self.entries[i])
    }

    /// Values strictly decrease along the whole lex list.
    pub fn is_strictly_decreasing(&self) -> bool {
        self.violations.is_empty() && self.ties.is_empty()
    }

    pub fn max_run_length(&self) -> usize {
        self.runs.iter().map(|r| r.length).max().unwrap_or(0)
    }

    /// Longest monotone run as a fraction of `p(d)`.
    pub fn max_run_fraction(&self) -> ExactRat {
        ExactRat::new(
            ExactInt::from(self.max_run_length()),
            ExactInt::from(self.entries.len().max(1)),
        )
        .expect("positive denominator")
    }
}

/// `1/d`
pub fn default_point(d: u32) -> ExactRat {
    ExactRat::from_i64(1, d.max(1) as i64).expect("nonzero")
}

/// One entry of a scan; independent across columns.
pub fn scan_entry(table: &CharacterTable, weights: &Weights, scale: &ExactRat, col: usize) -> MValue {
    let value = weights.evaluate_column(table, col);
    MValue {
        alpha: table.order()[col].clone(),
        normalized: &value * scale,
        value,
    }
}

/// Sequential scan at `x` (default `1/d`).
pub fn scan(table: &CharacterTable, x: Option<&ExactRat>) -> Result<ScanReport> {
    let d = table.degree();
    let x = x.cloned().unwrap_or_else(|| default_point(d));
    let weights = Weights::new(table.order(), &x)?;
    let scale = normalization(d);
    let entries = (0..table.size())
        .map(|col| scan_entry(table, &weights, &scale, col))
        .collect();
    Ok(ScanReport::assemble(d, x, entries))
}

pub fn violation_set(report: &ScanReport) -> &[Partition] {
    report.violations()
}

pub fn monotone_runs(report: &ScanReport) -> &[Run] {
    report.runs()
}

/// Cardinality of `(low, high]` and the violations inside it.
pub fn interval_stat(report: &ScanReport, low: &Partition, high: &Partition) -> Result<IntervalStat> {
    let lo = report
        .position(low)
        .ok_or_else(|| Error::UnknownPartition(low.clone()))?;
    let hi = report
        .position(high)
        .ok_or_else(|| Error::UnknownPartition(high.clone()))?;
    if lo >= hi {
        return Err(Error::IntervalOrder {
            low: low.clone(),
            high: high.clone(),
        });
    }
    let violations_inside = report
        .violations()
        .iter()
        .filter(|v| *v > low && *v <= high)
        .cloned()
        .collect();
    Ok(IntervalStat {
        low: low.clone(),
        high: high.clone(),
        cardinality: hi - lo,
        violations_inside,
    })
}

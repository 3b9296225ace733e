//! Text, JSON and CSV renderings of scan and walk reports.
//!
//! Rationals are always written `N/D` and partitions in exponent form
//! (`1^6,7`).

use std::fmt::Write;

use monowalk_core::scanner::{IntervalStat, ScanReport};
use monowalk_core::walks::WalkCounts;
use serde::Serialize;

#[derive(Serialize)]
struct JsonEntry {
    partition: String,
    value: String,
    normalized: String,
}

#[derive(Serialize)]
struct JsonRun {
    start: String,
    end: String,
    length: usize,
}

#[derive(Serialize)]
struct JsonInterval {
    low: String,
    high: String,
    cardinality: usize,
    violations: Vec<String>,
}

#[derive(Serialize)]
struct JsonScan {
    degree: u32,
    x: String,
    entries: Vec<JsonEntry>,
    violations: Vec<String>,
    ties: Vec<String>,
    runs: Vec<JsonRun>,
    max_run_fraction: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    intervals: Vec<JsonInterval>,
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

pub fn scan_json(report: &ScanReport, intervals: &[IntervalStat]) -> String {
    let doc = JsonScan {
        degree: report.degree(),
        x: report.x().to_string(),
        entries: report
            .entries()
            .iter()
            .map(|e| JsonEntry {
                partition: e.alpha.to_string(),
                value: e.value.to_string(),
                normalized: e.normalized.to_string(),
            })
            .collect(),
        violations: strings(report.violations()),
        ties: strings(report.ties()),
        runs: report
            .runs()
            .iter()
            .map(|r| JsonRun {
                start: r.start.to_string(),
                end: r.end.to_string(),
                length: r.length,
            })
            .collect(),
        max_run_fraction: report.max_run_fraction().to_string(),
        intervals: intervals
            .iter()
            .map(|i| JsonInterval {
                low: i.low.to_string(),
                high: i.high.to_string(),
                cardinality: i.cardinality,
                violations: strings(&i.violations_inside),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    s.push('\n');
    s
}

fn quote(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// `partition,normalized` per entry.
pub fn scan_csv(report: &ScanReport) -> String {
    let mut s = String::from("partition,normalized\n");
    for e in report.entries() {
        let _ = writeln!(s, "{},{}", quote(&e.alpha.to_string()), e.normalized);
    }
    s
}

pub fn scan_text(report: &ScanReport, intervals: &[IntervalStat]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "degree {}  x = {}  partitions {}", report.degree(), report.x(), report.entries().len());
    for e in report.entries() {
        let _ = writeln!(s, "{:<28} {}", e.alpha.to_string(), e.normalized);
    }
    let list = |items: &[monowalk_core::Partition]| {
        if items.is_empty() {
            "{}".to_string()
        } else {
            let inner: Vec<String> = items.iter().map(|p| format!("({p})")).collect();
            format!("{{{}}}", inner.join(", "))
        }
    };
    let _ = writeln!(s, "violations ({}): {}", report.violations().len(), list(report.violations()));
    let _ = writeln!(s, "ties ({}): {}", report.ties().len(), list(report.ties()));
    let _ = writeln!(s, "runs ({}):", report.runs().len());
    for r in report.runs() {
        let _ = writeln!(s, "  ({}) .. ({})  length {}", r.start, r.end, r.length);
    }
    let _ = writeln!(
        s,
        "longest run {} of {} ({})",
        report.max_run_length(),
        report.entries().len(),
        report.max_run_fraction()
    );
    for i in intervals {
        let _ = writeln!(
            s,
            "interval (({}), ({})]: cardinality {}, violations inside {}",
            i.low,
            i.high,
            i.cardinality,
            list(&i.violations_inside)
        );
    }
    s
}

/// `type,r,count` rows for every cycle type and length.
pub fn walks_csv(w: &WalkCounts) -> String {
    let mut s = String::from("type,r,count\n");
    for (t, alpha) in w.types.iter().enumerate() {
        for (r, row) in w.per_type.iter().enumerate() {
            let _ = writeln!(s, "{},{},{}", quote(&alpha.to_string()), r, row[t]);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use monowalk_core::characters::build_table;
    use monowalk_core::scanner::scan;
    use monowalk_core::walks::enumerate_counts;

    #[test]
    fn json_fields() {
        let report = scan(&build_table(3).unwrap(), None).unwrap();
        let v: serde_json::Value = serde_json::from_str(&scan_json(&report, &[])).unwrap();
        assert_eq!(v["degree"], 3);
        assert_eq!(v["x"], "1/3");
        assert_eq!(v["entries"].as_array().unwrap().len(), 3);
        assert_eq!(v["entries"][0]["partition"], "1^3");
        assert_eq!(v["violations"].as_array().unwrap().len(), 0);
        assert_eq!(v["runs"][0]["length"], 3);
        assert!(v.get("intervals").is_none());
    }

    #[test]
    fn csv_quotes_partitions() {
        let report = scan(&build_table(3).unwrap(), None).unwrap();
        let csv = scan_csv(&report);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "partition,normalized");
        assert!(lines[2].starts_with("\"1,2\","));
        assert!(lines[3].starts_with("3,"));

        let w = enumerate_counts(2, 2).unwrap();
        assert_eq!(walks_csv(&w), "type,r,count\n1^2,0,1\n1^2,1,0\n1^2,2,1\n2,0,0\n2,1,1\n2,2,0\n");
    }
}

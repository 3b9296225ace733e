//! Acceptance suite: one pass/fail line per criterion, exact comparisons only.
//!
//! Run with `cargo test -p monowalk --test acceptance`.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::rc::Rc;
use std::time::{Duration, Instant};

use monowalk::parallel::{build_table, scan};
use monowalk::report::scan_json;
use monowalk_core::characters::{check_conjugate_sign, verify_table, CharacterTable};
use monowalk_core::exact::{catalan, ExactInt, ExactRat};
use monowalk_core::genfun::{
    catalan_product, counterexample_family, evaluate, normalized_value, series_coefficient,
    vanishing_order,
};
use monowalk_core::partitions::lex_list;
use monowalk_core::scanner::{default_point, interval_stat};
use monowalk_core::walks::{class_function_check, enumerate_counts, oracle_compare};
use monowalk_core::Partition;

type Outcome = Result<String, String>;

#[derive(Default)]
struct Tables(RefCell<BTreeMap<u32, Rc<CharacterTable>>>);

impl Tables {
    fn get(&self, d: u32) -> Result<Rc<CharacterTable>, String> {
        if let Some(t) = self.0.borrow().get(&d) {
            return Ok(Rc::clone(t));
        }
        let t = Rc::new(build_table(d, None).map_err(|e| e.to_string())?);
        self.0.borrow_mut().insert(d, Rc::clone(&t));
        Ok(t)
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn part(s: &str) -> Partition {
    s.parse().expect("partition literal")
}

fn parts(items: &[&str]) -> Vec<Partition> {
    items.iter().map(|s| part(s)).collect()
}

fn rat(s: &str) -> ExactRat {
    s.parse().expect("rational literal")
}

fn lex_order(_: &Tables) -> Outcome {
    let expected = parts(&[
        "1,1,1,1,1,1",
        "1,1,1,1,2",
        "1,1,1,3",
        "1,1,2,2",
        "1,1,4",
        "1,2,3",
        "1,5",
        "2,2,2",
        "2,4",
        "3,3",
        "6",
    ]);
    ensure(lex_list(6) == expected, || format!("{:?}", lex_list(6)))?;
    let p20 = lex_list(20).len();
    ensure(p20 == 627, || format!("p(20) = {p20}"))?;
    Ok("11 partitions of 6 in order, p(20) = 627".into())
}

fn holds_low(tables: &Tables) -> Outcome {
    for d in 1..=12 {
        let r = scan(&*tables.get(d)?, None, None).map_err(|e| e.to_string())?;
        ensure(r.is_strictly_decreasing() && r.ties().is_empty(), || {
            format!("d = {d}: violations {:?}, ties {:?}", r.violations(), r.ties())
        })?;
    }
    Ok("strictly decreasing at x = 1/d for d <= 12".into())
}

fn first_failure(tables: &Tables) -> Outcome {
    let t = tables.get(13)?;
    let a = part("1^6,7");
    let b = part("1^5,2^4");
    ensure(a.lex_successor().as_ref() == Some(&b), || "pair not adjacent".into())?;
    let na = normalized_value(&a, &t).map_err(|e| e.to_string())?;
    let nb = normalized_value(&b, &t).map_err(|e| e.to_string())?;
    ensure(na == rat("30132115571/1149266300"), || format!("nu(1^6,7) = {na}"))?;
    ensure(nb == rat("426729597219/16089728200"), || format!("nu(1^5,2^4) = {nb}"))?;
    let x = default_point(13);
    let ma = evaluate(&a, &x, &t).map_err(|e| e.to_string())?;
    let mb = evaluate(&b, &x, &t).map_err(|e| e.to_string())?;
    ensure(ma < mb, || format!("M values {ma} vs {mb}"))?;
    let r = scan(&t, None, None).map_err(|e| e.to_string())?;
    ensure(r.violations() == [a].as_slice(), || format!("G_13 = {:?}", r.violations()))?;
    ensure(r.ties().is_empty(), || format!("ties {:?}", r.ties()))?;
    Ok("nu values exact, M(1^6,7) < M(1^5,2^4), G_13 = {(1^6,7)}".into())
}

fn regressions(tables: &Tables) -> Outcome {
    let listed: [(u32, &[&str]); 3] = [
        (14, &["1^7,7", "1^5,2,7", "1^5,9"]),
        (15, &["1^8,7", "1^6,2,7", "1^6,9", "1^4,11", "1^3,2,10", "1^3,3,9"]),
        (
            16,
            &[
                "1^11,5", "1^9,7", "1^7,2,7", "1^7,9", "1^6,10", "1^5,2^2,7", "1^5,11", "1^4,2,10",
                "1^4,3,9", "1^3,13", "1,4,11",
            ],
        ),
    ];
    for (d, expected) in listed {
        let r = scan(&*tables.get(d)?, None, None).map_err(|e| e.to_string())?;
        let expected = parts(expected);
        ensure(r.violations() == expected.as_slice(), || {
            format!("d = {d}: got {:?}", r.violations())
        })?;
        ensure(r.ties().is_empty(), || format!("d = {d}: ties {:?}", r.ties()))?;
    }
    Ok("G_14, G_15, G_16 match element for element (3, 6, 11)".into())
}

fn extended(tables: &Tables) -> Outcome {
    let r = scan(&*tables.get(20)?, None, None).map_err(|e| e.to_string())?;
    ensure(r.violations().len() == 45, || format!("|G_20| = {}", r.violations().len()))?;
    let stat = interval_stat(&r, &part("1,2^2,4,11"), &part("2,5,13")).map_err(|e| e.to_string())?;
    ensure(stat.cardinality == 151, || format!("cardinality {}", stat.cardinality))?;
    ensure(stat.violations_inside == [part("2,5,13")], || {
        format!("inside {:?}", stat.violations_inside)
    })?;
    ensure(r.max_run_length() >= 150, || format!("max run {}", r.max_run_length()))?;
    Ok(format!(
        "|G_20| = 45, interval cardinality 151 containing only (2,5,13), max run {}",
        r.max_run_length()
    ))
}

fn oracle(tables: &Tables) -> Outcome {
    let mut compared = 0;
    for d in 1..=6 {
        let report = oracle_compare(d, 8, &*tables.get(d)?).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("d = {d}: {:?}", report.mismatches))?;
        compared += report.compared;
        let w = enumerate_counts(d, 8).map_err(|e| e.to_string())?;
        class_function_check(&w).map_err(|e| format!("d = {d}: {e:?}"))?;
    }
    Ok(format!("{compared} walk counts equal series coefficients, class functions"))
}

fn catalan_identities(tables: &Tables) -> Outcome {
    for d in 1..=10 {
        let t = tables.get(d)?;
        for alpha in t.order() {
            let got = series_coefficient(alpha, vanishing_order(alpha), &t).map_err(|e| e.to_string())?;
            // Independent product of Catalan numbers.
            let expected: ExactInt = alpha.parts().iter().map(|&k| catalan(k - 1)).product();
            ensure(got == expected && got == catalan_product(alpha), || format!("({alpha}): {got}"))?;
        }
    }
    let ratio = |n| counterexample_family(n).map(|m| m.ratio).map_err(|e| e.to_string());
    let mut first = None;
    for n in 1..=20 {
        if first.is_none() && ratio(n)? > ExactRat::one() {
            first = Some(n);
        }
        let step = ratio(n + 1)?.checked_div(&ratio(n)?).map_err(|e| e.to_string())?;
        let expected = ExactRat::from_i64(2 * n as i64 + 1, n as i64 + 2).map_err(|e| e.to_string())?;
        ensure(step == expected, || format!("n = {n}: step {step}"))?;
    }
    ensure(first == Some(5), || format!("first ratio above 1 at {first:?}"))?;
    let growth = ratio(20)?.checked_div(&ratio(5)?).map_err(|e| e.to_string())?;
    ensure(growth > ExactRat::from(100), || format!("ratio(20)/ratio(5) = {growth}"))?;
    Ok(format!("bottom coefficients for d <= 10, family first exceeds 1 at n = 5, growth {growth}"))
}

fn self_consistency(tables: &Tables) -> Outcome {
    for d in 1..=12 {
        let t = tables.get(d)?;
        verify_table(&t).map_err(|e| format!("d = {d}: {e}"))?;
        if d <= 10 {
            check_conjugate_sign(&t).map_err(|e| format!("d = {d}: {e}"))?;
        }
    }
    Ok("orthogonality, dimensions, sum of squares for d <= 12, conjugate sign for d <= 10".into())
}

fn positivity_parity(tables: &Tables) -> Outcome {
    let mut points_checked = 0;
    for d in 2..=10u32 {
        let t = tables.get(d)?;
        let di = d as i64;
        let points = [(1, 10 * di), (1, 2 * di), (1, di), (99, 100 * (di - 1)), (1, 2 * di - 1)];
        for (n, q) in points {
            let x = ExactRat::from_i64(n, q).map_err(|e| e.to_string())?;
            for alpha in t.order() {
                let v = evaluate(alpha, &x, &t).map_err(|e| e.to_string())?;
                ensure(v.is_positive(), || format!("({alpha}) at {x}: {v}"))?;
                points_checked += 1;
            }
        }
    }
    for d in 1..=8 {
        let t = tables.get(d)?;
        for alpha in t.order() {
            let v = vanishing_order(alpha);
            for r in 0..=10u32 {
                if r < v || (r - v) % 2 == 1 {
                    let c = series_coefficient(alpha, r, &t).map_err(|e| e.to_string())?;
                    ensure(c.is_zero(), || format!("({alpha}) r = {r}: {c}"))?;
                }
            }
        }
    }
    Ok(format!("{points_checked} positive values, coefficients vanish off support for d <= 8"))
}

fn determinism(_: &Tables) -> Outcome {
    let many = std::thread::available_parallelism().map_or(4, |n| n.get()).max(4);
    let one = build_table(16, Some(1)).map_err(|e| e.to_string())?;
    let par = build_table(16, Some(many)).map_err(|e| e.to_string())?;
    ensure(one == par, || "d = 16 tables differ".into())?;
    let a = scan_json(&scan(&one, None, Some(1)).map_err(|e| e.to_string())?, &[]);
    let b = scan_json(&scan(&par, None, Some(many)).map_err(|e| e.to_string())?, &[]);
    ensure(a.as_bytes() == b.as_bytes(), || "scan reports differ".into())?;
    Ok(format!("d = 16 table and scan report identical for 1 and {many} workers ({} bytes)", a.len()))
}

type Criterion = (u32, &'static str, Duration, fn(&Tables) -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "lex order", Duration::from_secs(1), lex_order),
        (2, "monotone for d <= 12", Duration::from_secs(300), holds_low),
        (3, "d = 13 counterexample", Duration::from_secs(60), first_failure),
        (4, "violation sets d = 14..16", Duration::from_secs(600), regressions),
        (5, "extended scan d = 20", Duration::from_secs(7200), extended),
        (6, "walk oracle", Duration::from_secs(120), oracle),
        (7, "Catalan identities", Duration::from_secs(60), catalan_identities),
        (8, "character self-consistency", Duration::from_secs(300), self_consistency),
        (9, "positivity and parity", Duration::from_secs(120), positivity_parity),
        (10, "determinism", Duration::from_secs(600), determinism),
    ];
    let tables = Tables::default();
    let mut failed = 0;
    for (id, name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| check(&tables)))
            .unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            ensure(elapsed <= budget, || format!("took {elapsed:.2?}, budget {budget:?}"))?;
            Ok(detail)
        });
        match outcome {
            Ok(detail) => println!("[PASS] {id:>2} {name}: {detail} ({elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {id:>2} {name}: {why} ({elapsed:.2?})");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

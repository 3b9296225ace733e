use monowalk_core::exact::{catalan, factorial, ExactInt, ExactRat};
use monowalk_core::partitions::{cell_stats, class_size, compare_lex, conjugate, lex_list};
use monowalk_core::Partition;
use proptest::prelude::*;
use std::cmp::Ordering;

fn small_int() -> impl Strategy<Value = i64> {
    -1_000_000i64..1_000_000
}

fn nonzero_int() -> impl Strategy<Value = i64> {
    small_int().prop_filter("nonzero", |v| *v != 0)
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..7, 1..8).prop_map(|parts| Partition::new(parts).unwrap())
}

proptest! {
    #[test]
    fn additive_inverse(a in small_int(), b in nonzero_int()) {
        let x = ExactRat::from_i64(a, b).unwrap();
        let y = ExactRat::from_i64(-a, b).unwrap();
        prop_assert_eq!(x + y, ExactRat::zero());
    }

    #[test]
    fn multiplicative_inverse(a in nonzero_int(), b in nonzero_int()) {
        let x = ExactRat::from_i64(a, b).unwrap();
        let y = ExactRat::from_i64(b, a).unwrap();
        prop_assert_eq!(x * y, ExactRat::one());
    }

    #[test]
    fn canonical_form(a in small_int(), b in nonzero_int(), k in 1i64..1000) {
        let x = ExactRat::from_i64(a, b).unwrap();
        prop_assert!(x.denom().is_positive());
        prop_assert!(x.numer().gcd(x.denom()).is_one());
        // Reducing again changes nothing, and equal values share one form.
        let again = ExactRat::new(x.numer().clone(), x.denom().clone()).unwrap();
        prop_assert_eq!(&again, &x);
        let scaled = ExactRat::from_i64(a * k, b * k).unwrap();
        prop_assert_eq!(scaled.to_string(), x.to_string());
    }

    #[test]
    fn text_round_trip(a in small_int(), b in nonzero_int()) {
        let x = ExactRat::from_i64(a, b).unwrap();
        prop_assert_eq!(x.to_string().parse::<ExactRat>().unwrap(), x);
    }

    #[test]
    fn order_agrees_with_cross_multiplication(
        a in small_int(), b in 1i64..100_000, c in small_int(), e in 1i64..100_000
    ) {
        let x = ExactRat::from_i64(a, b).unwrap();
        let y = ExactRat::from_i64(c, e).unwrap();
        prop_assert_eq!(x.cmp(&y), ((a as i128) * (e as i128)).cmp(&((c as i128) * (b as i128))));
    }

    #[test]
    fn conjugate_is_involution(p in partition()) {
        let c = conjugate(&p);
        prop_assert_eq!(c.degree(), p.degree());
        prop_assert_eq!(conjugate(&c), p);
    }

    #[test]
    fn cell_stats_shape(p in partition()) {
        let s = cell_stats(&p);
        let d = p.degree() as usize;
        prop_assert_eq!(s.hook_lengths.len(), d);
        prop_assert_eq!(s.contents.len(), d);
        let lo = -(p.len() as i64 - 1);
        let hi = p.largest() as i64 - 1;
        prop_assert!(s.contents.iter().all(|&c| lo <= c && c <= hi));
        prop_assert!(s.dimension().is_positive());
    }

    #[test]
    fn partition_text_round_trip(p in partition()) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p.clone());
        prop_assert_eq!(p.to_plain_string().parse::<Partition>().unwrap(), p);
    }
}

#[test]
fn lex_lists_strictly_increase_and_count_partitions() {
    // Partition numbers by the standard recurrence over largest part size.
    let mut p = vec![vec![0u64; 21]; 21];
    p[0].fill(1);
    for n in 1..=20 {
        for k in 1..=20 {
            p[n][k] = p[n][k - 1] + if k <= n { p[n - k][k] } else { 0 };
        }
    }
    for d in 1..=20u32 {
        let list = lex_list(d);
        assert_eq!(list.len() as u64, p[d as usize][d as usize], "p({d})");
        assert!(list.iter().all(|q| q.degree() == d));
        for w in list.windows(2) {
            assert_eq!(compare_lex(&w[0], &w[1]), Ok(Ordering::Less));
            assert_eq!(w[0].lex_successor().as_ref(), Some(&w[1]));
        }
        assert_eq!(list[0], Partition::ones(d));
        assert_eq!(list.last(), Some(&Partition::single(d)));
    }
    assert_eq!(lex_list(6).len(), 11);
    assert_eq!(lex_list(13).len(), 101);
    assert_eq!(lex_list(20).len(), 627);
}

#[test]
fn class_sizes_sum_to_group_order() {
    for d in 1..=12 {
        let total: ExactInt = lex_list(d).iter().map(class_size).sum();
        assert_eq!(total, factorial(d), "d = {d}");
    }
}

#[test]
fn dimensions_are_integral() {
    for d in 1..=12 {
        for lambda in lex_list(d) {
            let s = cell_stats(&lambda);
            let dim = factorial(d).div_exact(&s.hook_product());
            assert!(dim.is_some_and(|v| v.is_positive()), "({lambda})");
        }
    }
}

#[test]
fn factorial_and_catalan_recurrences() {
    for n in 1..=30u32 {
        assert_eq!(factorial(n), ExactInt::from(n) * factorial(n - 1));
    }
    for n in 0..=64u32 {
        assert_eq!(
            catalan(n + 1) * ExactInt::from(n + 2),
            catalan(n) * ExactInt::from(2 * (2 * n + 1))
        );
    }
}

//! Published counterexample data used by the self-test.

use monowalk_core::Partition;

/// First degree where `M_α(1/d)` fails to decrease along the lex order.
pub const FIRST_FAILING_DEGREE: u32 = 13;

/// `(α, ν_α)` at `d = 13` for the unique violating pair.
pub const D13_NORMALIZED: [(&str, &str); 2] = [
    ("1^6,7", "30132115571/1149266300"),
    ("1^5,2^4", "426729597219/16089728200"),
];

pub const G13: &[&str] = &["1^6,7"];

pub const G14: &[&str] = &["1^7,7", "1^5,2,7", "1^5,9"];

pub const G15: &[&str] = &["1^8,7", "1^6,2,7", "1^6,9", "1^4,11", "1^3,2,10", "1^3,3,9"];

pub const G16: &[&str] = &[
    "1^11,5", "1^9,7", "1^7,2,7", "1^7,9", "1^6,10", "1^5,2^2,7", "1^5,11", "1^4,2,10", "1^4,3,9",
    "1^3,13", "1,4,11",
];

pub const G20_SIZE: usize = 45;

/// `(low, high]` at `d = 20`, its cardinality and the violations inside it.
pub const D20_INTERVAL: (&str, &str, usize, &[&str]) = ("1,2^2,4,11", "2,5,13", 151, &["2,5,13"]);

pub const P20: usize = 627;

/// Listed violation set for `d`, where one is known exactly.
pub fn violations(d: u32) -> Option<Vec<Partition>> {
    let listed: &[&str] = match d {
        1..=12 => &[],
        13 => G13,
        14 => G14,
        15 => G15,
        16 => G16,
        _ => return None,
    };
    Some(parse_all(listed))
}

pub fn parse_all(items: &[&str]) -> Vec<Partition> {
    items
        .iter()
        .map(|s| s.parse().expect("well-formed literal"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listings_are_lex_sorted_and_sized() {
        for d in 13..=16 {
            let v = violations(d).unwrap();
            assert!(v.windows(2).all(|w| w[0] < w[1]));
            assert!(v.iter().all(|p| p.degree() == d));
        }
        assert_eq!(violations(15).unwrap().len(), 6);
        assert_eq!(violations(16).unwrap().len(), 11);
        assert!(violations(17).is_none());
    }
}

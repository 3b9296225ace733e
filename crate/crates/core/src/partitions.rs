//! Integer partitions stored as nondecreasing part sequences.
//!
//! Ordering is plain dictionary order on that sequence (`1 < 2 < ...`, a strict
//! prefix sorts before its extensions), so `(1^d)` comes first and `(d)` last.
//! Young-diagram routines look at the same parts reversed, as nonincreasing
//! row lengths.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::exact::{factorial, ExactInt};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Parts in any order; they are sorted into nondecreasing order.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts"));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("zero part"));
        }
        if parts.iter().try_fold(0u32, |acc, &p| acc.checked_add(p)).is_none() {
            return Err(Error::InvalidPartition("degree overflows u32"));
        }
        parts.sort_unstable();
        Ok(Partition { parts })
    }

    /// From nonincreasing Young-diagram row lengths; zero rows are dropped.
    pub fn from_rows(rows: &[u32]) -> Result<Self> {
        Self::new(rows.iter().copied().filter(|&r| r > 0).collect())
    }

    /// The one-part partition `(d)`.
    pub fn single(d: u32) -> Self {
        assert!(d > 0, "partition of zero");
        Partition { parts: alloc::vec![d] }
    }

    /// `(1^d)`.
    pub fn ones(d: u32) -> Self {
        assert!(d > 0, "partition of zero");
        Partition {
            parts: alloc::vec![1; d as usize],
        }
    }

    /// Nondecreasing parts.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn degree(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts, `ℓ`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn largest(&self) -> u32 {
        *self.parts.last().expect("partitions are nonempty")
    }

    /// Row lengths of the Young diagram, nonincreasing.
    pub fn rows(&self) -> Vec<u32> {
        self.parts.iter().rev().copied().collect()
    }

    /// `(part, multiplicity)` pairs in increasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Comma-separated parts without exponent shorthand, e.g. `1,1,2`.
    pub fn to_plain_string(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{p}");
        }
        s
    }

    /// Successor in dictionary order among partitions of the same degree.
    pub fn lex_successor(&self) -> Option<Partition> {
        lex_successor(self)
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exponent form, e.g. `1^6,7` or `1^5,2^4`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (p, m)) in self.multiplicities().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if m == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Accepts `1,1,2`, `1^2,2` and mixtures; surrounding parentheses and
/// whitespace are ignored.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "partition",
            input: String::from(s),
        };
        let body = s.trim();
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body);
        let mut parts = Vec::new();
        for token in body.split(',') {
            let token = token.trim();
            let (part, reps) = match token.split_once('^') {
                Some((p, m)) => (p.trim(), m.trim()),
                None => (token, "1"),
            };
            let part: u32 = part.parse().map_err(|_| bad())?;
            let reps: u32 = reps.parse().map_err(|_| bad())?;
            if part == 0 || reps == 0 {
                return Err(bad());
            }
            parts.extend(core::iter::repeat_n(part, reps as usize));
        }
        Partition::new(parts)
    }
}

/// All partitions of `d` in dictionary order of their nondecreasing parts.
pub fn lex_list(d: u32) -> Vec<Partition> {
    fn descend(remaining: u32, min_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in min_part..=remaining {
            // The tail after p must be empty or made of parts >= p.
            let rest = remaining - p;
            if rest != 0 && rest < p {
                continue;
            }
            prefix.push(p);
            descend(rest, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d > 0 {
        descend(d, 1, &mut Vec::with_capacity(d as usize), &mut out);
    }
    out
}

/// Next partition of the same degree in [`lex_list`] order, `None` for `(d)`.
pub fn lex_successor(alpha: &Partition) -> Option<Partition> {
    let a = &alpha.parts;
    let n = a.len();
    if n < 2 {
        return None;
    }
    // Keep a[..n-2] and raise the second-to-last part, which always admits a
    // completion: either repeat the raised value and let the last part absorb
    // the remainder, or collapse the two-part tail into one part.
    let i = n - 2;
    let tail = a[i] + a[i + 1];
    let bumped = a[i] + 1;
    let mut parts = a[..i].to_vec();
    if tail >= 2 * bumped {
        let mut rest = tail;
        while rest >= 2 * bumped {
            parts.push(bumped);
            rest -= bumped;
        }
        parts.push(rest);
    } else {
        parts.push(tail);
    }
    Some(Partition { parts })
}

/// Dictionary comparison of two partitions of the same degree.
pub fn compare_lex(alpha: &Partition, beta: &Partition) -> Result<Ordering> {
    let (l, r) = (alpha.degree(), beta.degree());
    if l != r {
        return Err(Error::DegreeMismatch { left: l, right: r });
    }
    Ok(alpha.cmp(beta))
}

/// Transpose of the Young diagram.
pub fn conjugate(lambda: &Partition) -> Partition {
    let rows = lambda.rows();
    let width = rows[0];
    // Column j has as many cells as there are rows longer than j.
    let cols: Vec<u32> = (0..width)
        .map(|j| rows.iter().take_while(|&&r| r > j).count() as u32)
        .collect();
    Partition::from_rows(&cols).expect("conjugate of a partition is a partition")
}

/// Hook lengths and contents of every cell of a Young diagram, in row-major
/// order over the nonincreasing rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellStats {
    pub hook_lengths: Vec<u32>,
    pub contents: Vec<i64>,
}

impl CellStats {
    /// `Π h(□)`
    pub fn hook_product(&self) -> ExactInt {
        self.hook_lengths.iter().map(|&h| ExactInt::from(h)).product()
    }

    /// Number of standard Young tableaux, `d! / Π h(□)`.
    pub fn dimension(&self) -> ExactInt {
        factorial(self.hook_lengths.len() as u32)
            .div_exact(&self.hook_product())
            .expect("hook-length formula is integral")
    }
}

pub fn cell_stats(lambda: &Partition) -> CellStats {
    let rows = lambda.rows();
    let cols = conjugate(lambda).rows();
    let d = lambda.degree() as usize;
    let mut hook_lengths = Vec::with_capacity(d);
    let mut contents = Vec::with_capacity(d);
    for (i, &row) in rows.iter().enumerate() {
        for (j, &col) in cols.iter().enumerate().take(row as usize) {
            let arm = row as usize - j - 1;
            let leg = col as usize - i - 1;
            hook_lengths.push((1 + arm + leg) as u32);
            contents.push(j as i64 - i as i64);
        }
    }
    CellStats {
        hook_lengths,
        contents,
    }
}

/// Size of the conjugacy class of cycle type `alpha`:
/// `d! / Π_i i^{m_i} m_i!`.
pub fn class_size(alpha: &Partition) -> ExactInt {
    factorial(alpha.degree())
        .div_exact(&centralizer_order(alpha))
        .expect("centralizer order divides d!")
}

/// `z_α = Π_i i^{m_i} m_i!`
pub fn centralizer_order(alpha: &Partition) -> ExactInt {
    alpha
        .multiplicities()
        .into_iter()
        .map(|(p, m)| ExactInt::from(p).pow(m) * factorial(m))
        .product()
}

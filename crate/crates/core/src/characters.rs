//! Irreducible characters of the symmetric group.
//!
//! `χ^λ_α` is computed with the Murnaghan–Nakayama rule: remove a border strip
//! of size equal to the largest part of `α` from `λ` in every possible way,
//! weight each removal by `(-1)^height`, and recurse on the smaller shape and
//! the remaining parts. Border strips are enumerated on the beta-set
//! (first-column hook lengths) of the shape: a strip of size `k` corresponds
//! to moving one bead from `b` to an empty position `b - k`, and its height
//! is the number of beads jumped over.
//!
//! Because the largest part is always stripped first, the remaining parts of
//! `α` are a prefix of its nondecreasing part list. Columns of a table
//! therefore share most sub-problems, and a single [`MnMemo`] can be reused
//! across an entire table.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::exact::{factorial, ExactInt};
use crate::partitions::{cell_stats, centralizer_order, class_size, conjugate, lex_list, Partition};
use crate::{Error, Result};

/// Largest degree [`build_table`] accepts unless a caller supplies its own cap.
pub const DEFAULT_MAX_DEGREE: u32 = 20;

/// Memo entries kept before the cache is flushed.
pub const DEFAULT_MEMO_LIMIT: usize = 1 << 22;

/// Memoized Murnaghan–Nakayama evaluator.
///
/// Keys are `(remaining shape as rows, remaining parts)`. The map is flushed
/// whenever it reaches its entry limit.
#[derive(Debug, Clone)]
pub struct MnMemo {
    map: BTreeMap<(Vec<u32>, Vec<u32>), ExactInt>,
    limit: usize,
}

impl Default for MnMemo {
    fn default() -> Self {
        Self::new()
    }
}

impl MnMemo {
    pub fn new() -> Self {
        Self::with_limit(DEFAULT_MEMO_LIMIT)
    }

    pub fn with_limit(limit: usize) -> Self {
        MnMemo {
            map: BTreeMap::new(),
            limit: limit.max(1),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn character(&mut self, lambda: &Partition, alpha: &Partition) -> Result<ExactInt> {
        let (l, r) = (lambda.degree(), alpha.degree());
        if l != r {
            return Err(Error::DegreeMismatch { left: l, right: r });
        }
        Ok(self.chi(&lambda.rows(), alpha.parts()))
    }

    /// `χ^λ_α` for every `λ` in `order` (all of the same degree as `α`).
    pub fn column(&mut self, order: &[Partition], alpha: &Partition) -> Vec<ExactInt> {
        order
            .iter()
            .map(|lambda| self.chi(&lambda.rows(), alpha.parts()))
            .collect()
    }

    /// `rows` nonincreasing, `parts` nondecreasing, equal sums.
    fn chi(&mut self, rows: &[u32], parts: &[u32]) -> ExactInt {
        let Some((&k, rest)) = parts.split_last() else {
            return if rows.is_empty() {
                ExactInt::one()
            } else {
                ExactInt::zero()
            };
        };
        if rest.is_empty() {
            // One part left: λ must be a hook, χ = (-1)^(rows - 1).
            return match hook_leg(rows) {
                Some(leg) if leg % 2 == 0 => ExactInt::one(),
                Some(_) => -ExactInt::one(),
                None => ExactInt::zero(),
            };
        }
        if let Some(v) = self.map.get(&(rows.to_vec(), parts.to_vec())) {
            return v.clone();
        }
        let mut total = ExactInt::zero();
        for (shape, odd) in border_strip_removals(rows, k) {
            let v = self.chi(&shape, rest);
            if v.is_zero() {
                continue;
            }
            if odd {
                total -= v;
            } else {
                total += v;
            }
        }
        if self.map.len() >= self.limit {
            self.map.clear();
        }
        self.map.insert((rows.to_vec(), parts.to_vec()), total.clone());
        total
    }
}

/// Leg length if `rows` is a hook shape.
fn hook_leg(rows: &[u32]) -> Option<usize> {
    match rows.split_first() {
        Some((_, below)) if below.iter().all(|&r| r == 1) => Some(below.len()),
        _ => None,
    }
}

/// Every shape reachable from `rows` by removing a border strip of size `k`,
/// paired with whether the strip has odd height.
fn border_strip_removals(rows: &[u32], k: u32) -> Vec<(Vec<u32>, bool)> {
    let len = rows.len();
    let beta: Vec<u32> = rows
        .iter()
        .enumerate()
        .map(|(i, &r)| r + (len - 1 - i) as u32)
        .collect();
    let mut out = Vec::new();
    for i in 0..len {
        let b = beta[i];
        if b < k {
            // beta is strictly decreasing, so every later bead is too small.
            break;
        }
        let target = b - k;
        // Beads strictly between target and b sit at indices i+1.. and are > target.
        let mut jumped = 0usize;
        let mut occupied = false;
        for &c in &beta[i + 1..] {
            if c > target {
                jumped += 1;
            } else {
                occupied = c == target;
                break;
            }
        }
        if occupied {
            continue;
        }
        let mut moved = beta.clone();
        moved.remove(i);
        let pos = i + jumped;
        moved.insert(pos, target);
        let mut shape: Vec<u32> = moved
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (len - 1 - j) as u32)
            .collect();
        while shape.last() == Some(&0) {
            shape.pop();
        }
        out.push((shape, jumped % 2 == 1));
    }
    out
}

/// A single character value with a throwaway memo.
pub fn mn_character(lambda: &Partition, alpha: &Partition) -> Result<ExactInt> {
    MnMemo::new().character(lambda, alpha)
}

/// Complete character table of `S(d)`, rows and columns both indexed by
/// [`lex_list`]`(d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    degree: u32,
    order: Vec<Partition>,
    // row-major: values[row(λ) * n + col(α)] = χ^λ_α
    values: Vec<ExactInt>,
}

impl CharacterTable {
    /// Assemble from a lex-ordered index and row-major entries.
    pub fn from_parts(degree: u32, order: Vec<Partition>, values: Vec<ExactInt>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::MalformedTable("degree zero"));
        }
        if order != lex_list(degree) {
            return Err(Error::MalformedTable("index is not the lex order of the degree"));
        }
        if values.len() != order.len() * order.len() {
            return Err(Error::MalformedTable("entry count is not square in the index"));
        }
        Ok(CharacterTable {
            degree,
            order,
            values,
        })
    }

    /// Assemble from columns given in lex order of `α`.
    pub fn from_columns(degree: u32, columns: Vec<Vec<ExactInt>>) -> Result<Self> {
        let order = lex_list(degree);
        let n = order.len();
        if columns.len() != n || columns.iter().any(|c| c.len() != n) {
            return Err(Error::MalformedTable("column shape does not match the index"));
        }
        let mut values = alloc::vec![ExactInt::zero(); n * n];
        for (col, column) in columns.into_iter().enumerate() {
            for (row, v) in column.into_iter().enumerate() {
                values[row * n + col] = v;
            }
        }
        Self::from_parts(degree, order, values)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> &[Partition] {
        &self.order
    }

    pub fn size(&self) -> usize {
        self.order.len()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.order.binary_search(p).ok()
    }

    pub fn value(&self, row: usize, col: usize) -> &ExactInt {
        &self.values[row * self.order.len() + col]
    }

    /// `χ^λ_α`, `None` when either partition has the wrong degree.
    pub fn character(&self, lambda: &Partition, alpha: &Partition) -> Option<&ExactInt> {
        Some(self.value(self.index_of(lambda)?, self.index_of(alpha)?))
    }

    pub fn row(&self, row: usize) -> &[ExactInt] {
        let n = self.order.len();
        &self.values[row * n..(row + 1) * n]
    }

    /// Row-major entries.
    pub fn values(&self) -> &[ExactInt] {
        &self.values
    }
}

pub fn check_degree(d: u32, max: u32) -> Result<()> {
    if d == 0 || d > max {
        return Err(Error::DegreeOutOfRange { degree: d, max });
    }
    Ok(())
}

/// Sequential table build with a shared memo, capped at [`DEFAULT_MAX_DEGREE`].
pub fn build_table(d: u32) -> Result<CharacterTable> {
    build_table_capped(d, DEFAULT_MAX_DEGREE)
}

pub fn build_table_capped(d: u32, max: u32) -> Result<CharacterTable> {
    check_degree(d, max)?;
    let order = lex_list(d);
    let mut memo = MnMemo::new();
    let columns = order.iter().map(|alpha| memo.column(&order, alpha)).collect();
    CharacterTable::from_columns(d, columns)
}

/// Which identity a table failed, and where.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyFailure {
    #[error("row orthogonality fails for rows {lambda} and {mu}: got {got}")]
    RowOrthogonality {
        lambda: Partition,
        mu: Partition,
        got: ExactInt,
    },
    #[error("column orthogonality fails for classes {alpha} and {beta}: got {got}")]
    ColumnOrthogonality {
        alpha: Partition,
        beta: Partition,
        got: ExactInt,
    },
    #[error("dimension of {lambda} is {got}, hook-length formula gives {expected}")]
    Dimension {
        lambda: Partition,
        got: ExactInt,
        expected: ExactInt,
    },
    #[error("sum of squared dimensions is {got}, expected d! = {expected}")]
    DimensionSquares { got: ExactInt, expected: ExactInt },
    #[error("conjugate-sign symmetry fails at {lambda} on class {alpha}")]
    ConjugateSign { lambda: Partition, alpha: Partition },
}

/// Identities confirmed by [`verify_table`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub degree: u32,
    pub checks: Vec<&'static str>,
}

/// Row orthogonality, column orthogonality, the dimension column and
/// `Σ (f^λ)² = d!`, in that order. Cost is cubic in the table size.
pub fn verify_table(t: &CharacterTable) -> core::result::Result<VerifyReport, VerifyFailure> {
    let n = t.size();
    let d_fact = factorial(t.degree);
    let classes: Vec<ExactInt> = t.order.iter().map(class_size).collect();

    for i in 0..n {
        for j in i..n {
            let got: ExactInt = (0..n)
                .map(|a| &classes[a] * t.value(i, a) * t.value(j, a))
                .sum();
            let expected = if i == j { d_fact.clone() } else { ExactInt::zero() };
            if got != expected {
                return Err(VerifyFailure::RowOrthogonality {
                    lambda: t.order[i].clone(),
                    mu: t.order[j].clone(),
                    got,
                });
            }
        }
    }

    for a in 0..n {
        for b in a..n {
            let got: ExactInt = (0..n).map(|l| t.value(l, a) * t.value(l, b)).sum();
            let expected = if a == b {
                centralizer_order(&t.order[a])
            } else {
                ExactInt::zero()
            };
            if got != expected {
                return Err(VerifyFailure::ColumnOrthogonality {
                    alpha: t.order[a].clone(),
                    beta: t.order[b].clone(),
                    got,
                });
            }
        }
    }

    // order[0] is (1^d), the identity class.
    let mut squares = ExactInt::zero();
    for (l, lambda) in t.order.iter().enumerate() {
        let expected = cell_stats(lambda).dimension();
        let got = t.value(l, 0);
        if *got != expected {
            return Err(VerifyFailure::Dimension {
                lambda: lambda.clone(),
                got: got.clone(),
                expected,
            });
        }
        squares += got * got;
    }
    if squares != d_fact {
        return Err(VerifyFailure::DimensionSquares {
            got: squares,
            expected: d_fact,
        });
    }

    Ok(VerifyReport {
        degree: t.degree,
        checks: alloc::vec![
            "row orthogonality",
            "column orthogonality",
            "dimension column",
            "sum of squared dimensions",
        ],
    })
}

/// `χ^{λ'}_α = (-1)^{d-ℓ(α)} χ^λ_α` for every entry.
pub fn check_conjugate_sign(t: &CharacterTable) -> core::result::Result<(), VerifyFailure> {
    let n = t.size();
    for (l, lambda) in t.order.iter().enumerate() {
        let lc = t
            .index_of(&conjugate(lambda))
            .expect("conjugate has the same degree");
        for a in 0..n {
            let alpha = &t.order[a];
            let odd = (t.degree as usize - alpha.len()) % 2 == 1;
            let expected = if odd { -t.value(l, a) } else { t.value(l, a).clone() };
            if *t.value(lc, a) != expected {
                return Err(VerifyFailure::ConjugateSign {
                    lambda: lambda.clone(),
                    alpha: alpha.clone(),
                });
            }
        }
    }
    Ok(())
}

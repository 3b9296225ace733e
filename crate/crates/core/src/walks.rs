//! Brute-force counting of monotone walks on the transposition Cayley graph.
//!
//! The edge for transposition `(i j)`, `i < j`, carries label `j` (1-based).
//! A walk `e → τ₁ → τ₁τ₂ → …` is monotone when its labels weakly increase.
//! The dynamic program runs over states `(permutation, last label)` and is
//! only meant for small degrees, where it serves as an independent check on
//! the character-formula coefficients.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::characters::CharacterTable;
use crate::exact::ExactInt;
use crate::genfun::series_coefficient;
use crate::partitions::{lex_list, Partition};
use crate::{Error, Result};

pub const MAX_DEGREE: u32 = 7;
pub const MAX_LENGTH: u32 = 12;

/// One-line notation, 0-based: `perm[i]` is the image of `i`.
pub type Perm = Vec<u8>;

/// `S(d)` with a fixed ranking and a precomputed right-multiplication table.
#[derive(Debug, Clone)]
struct CayleyGraph {
    degree: usize,
    perms: Vec<Perm>,
    /// `(i, j, label)` sorted by label.
    transpositions: Vec<(usize, usize, usize)>,
    /// `step[p * transpositions.len() + t]` = rank of `perms[p] · τ_t`.
    step: Vec<u32>,
}

impl CayleyGraph {
    fn new(degree: usize) -> Self {
        let perms = all_perms(degree);
        let rank: BTreeMap<&[u8], u32> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_slice(), i as u32))
            .collect();
        let mut transpositions = Vec::new();
        for j in 1..degree {
            for i in 0..j {
                transpositions.push((i, j, j + 1));
            }
        }
        let mut step = Vec::with_capacity(perms.len() * transpositions.len());
        let mut buf = Vec::with_capacity(degree);
        for p in &perms {
            for &(i, j, _) in &transpositions {
                // (σ·τ)(x) = σ(τ(x)) swaps positions i and j.
                buf.clear();
                buf.extend_from_slice(p);
                buf.swap(i, j);
                step.push(rank[buf.as_slice()]);
            }
        }
        CayleyGraph {
            degree,
            perms,
            transpositions,
            step,
        }
    }

    fn identity(&self) -> usize {
        0
    }
}

/// Permutations of `0..n` in lexicographic order (identity first).
fn all_perms(n: usize) -> Vec<Perm> {
    let mut cur: Perm = (0..n as u8).collect();
    let mut out = alloc::vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

pub fn cycle_type(perm: &[u8]) -> Partition {
    let mut seen = alloc::vec![false; perm.len()];
    let mut parts = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x] as usize;
            len += 1;
        }
        parts.push(len);
    }
    Partition::new(parts).expect("nonempty permutation")
}

pub fn inverse(perm: &[u8]) -> Perm {
    let mut inv = alloc::vec![0u8; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p as usize] = i as u8;
    }
    inv
}

/// A fixed permutation of cycle type `alpha`: cycles on consecutive blocks.
pub fn representative(alpha: &Partition) -> Perm {
    let mut perm = Vec::with_capacity(alpha.degree() as usize);
    let mut base = 0u8;
    for &len in alpha.parts() {
        let len = len as u8;
        for k in 0..len {
            perm.push(base + (k + 1) % len);
        }
        base += len;
    }
    perm
}

/// Monotone walk counts from the identity, for every target and length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkCounts {
    pub degree: u32,
    pub max_length: u32,
    /// All of `S(d)`, lexicographic.
    pub permutations: Vec<Perm>,
    /// `per_permutation[r][p]`
    pub per_permutation: Vec<Vec<ExactInt>>,
    /// Cycle types in lex order.
    pub types: Vec<Partition>,
    /// `per_type[r][t]`: count at the representative of `types[t]`.
    pub per_type: Vec<Vec<ExactInt>>,
}

impl WalkCounts {
    pub fn per_type(&self, alpha: &Partition, r: u32) -> Option<&ExactInt> {
        let t = self.types.binary_search(alpha).ok()?;
        self.per_type.get(r as usize)?.get(t)
    }

    pub fn index_of(&self, perm: &[u8]) -> Option<usize> {
        self.permutations.binary_search_by(|p| p.as_slice().cmp(perm)).ok()
    }
}

fn check_caps(d: u32, max_length: u32) -> Result<()> {
    if !(1..=MAX_DEGREE).contains(&d) || max_length > MAX_LENGTH {
        return Err(Error::WalkCapExceeded {
            degree: d,
            length: max_length,
            max_degree: MAX_DEGREE,
            max_length: MAX_LENGTH,
        });
    }
    Ok(())
}

/// Count monotone walks of every length `r ≤ max_length` on `S(d)`.
pub fn enumerate_counts(d: u32, max_length: u32) -> Result<WalkCounts> {
    check_caps(d, max_length)?;
    let g = CayleyGraph::new(d as usize);
    let n = g.perms.len();
    let slots = g.degree; // slot s holds walks whose last label is s + 1; slot 0 = empty walk
    let nt = g.transpositions.len();

    let mut cur = alloc::vec![ExactInt::zero(); n * slots];
    cur[g.identity() * slots] = ExactInt::one();
    let mut per_permutation = Vec::with_capacity(max_length as usize + 1);

    for r in 0..=max_length {
        per_permutation.push(
            (0..n)
                .map(|p| cur[p * slots..(p + 1) * slots].iter().sum())
                .collect::<Vec<ExactInt>>(),
        );
        if r == max_length {
            break;
        }
        let mut next = alloc::vec![ExactInt::zero(); n * slots];
        for p in 0..n {
            let row = &cur[p * slots..(p + 1) * slots];
            if row.iter().all(ExactInt::is_zero) {
                continue;
            }
            // acc = walks whose last label is <= the label being appended
            let mut acc = ExactInt::zero();
            let mut filled = 0;
            for (t, &(_, _, label)) in g.transpositions.iter().enumerate() {
                while filled < label {
                    acc += &row[filled];
                    filled += 1;
                }
                if acc.is_zero() {
                    continue;
                }
                let q = g.step[p * nt + t] as usize;
                next[q * slots + label - 1] += &acc;
            }
        }
        cur = next;
    }

    let types = lex_list(d);
    let reps: Vec<usize> = types
        .iter()
        .map(|a| {
            let rep = representative(a);
            g.perms.binary_search(&rep).expect("representative is a permutation")
        })
        .collect();
    let per_type = per_permutation
        .iter()
        .map(|row| reps.iter().map(|&i| row[i].clone()).collect())
        .collect();

    Ok(WalkCounts {
        degree: d,
        max_length,
        permutations: g.perms,
        per_permutation,
        types,
        per_type,
    })
}

/// Walk counts with no label constraint, indexed like
/// [`WalkCounts::per_permutation`].
pub fn count_all_walks(d: u32, max_length: u32) -> Result<Vec<Vec<ExactInt>>> {
    check_caps(d, max_length)?;
    let g = CayleyGraph::new(d as usize);
    let n = g.perms.len();
    let nt = g.transpositions.len();
    let mut cur = alloc::vec![ExactInt::zero(); n];
    cur[g.identity()] = ExactInt::one();
    let mut out = Vec::with_capacity(max_length as usize + 1);
    for r in 0..=max_length {
        out.push(cur.clone());
        if r == max_length {
            break;
        }
        let mut next = alloc::vec![ExactInt::zero(); n];
        for p in 0..n {
            if cur[p].is_zero() {
                continue;
            }
            for t in 0..nt {
                next[g.step[p * nt + t] as usize] += &cur[p];
            }
        }
        cur = next;
    }
    Ok(out)
}

/// Two permutations of the same cycle type whose counts differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassWitness {
    pub r: u32,
    pub cycle_type: Partition,
    pub first: Perm,
    pub first_count: ExactInt,
    pub second: Perm,
    pub second_count: ExactInt,
}

/// Checks that per-permutation counts are constant on conjugacy classes and
/// agree with `per_type`.
pub fn class_function_check(w: &WalkCounts) -> core::result::Result<(), Box<ClassWitness>> {
    let types: Vec<Partition> = w.permutations.iter().map(|p| cycle_type(p)).collect();
    for (r, row) in w.per_permutation.iter().enumerate() {
        let mut seen: BTreeMap<&Partition, usize> = BTreeMap::new();
        for (p, alpha) in types.iter().enumerate() {
            let &mut first = seen.entry(alpha).or_insert(p);
            if row[first] != row[p] {
                return Err(Box::new(ClassWitness {
                    r: r as u32,
                    cycle_type: alpha.clone(),
                    first: w.permutations[first].clone(),
                    first_count: row[first].clone(),
                    second: w.permutations[p].clone(),
                    second_count: row[p].clone(),
                }));
            }
        }
        for (t, alpha) in w.types.iter().enumerate() {
            let Some(&p) = seen.get(alpha) else { continue };
            if row[p] != w.per_type[r][t] {
                let rep = representative(alpha);
                return Err(Box::new(ClassWitness {
                    r: r as u32,
                    cycle_type: alpha.clone(),
                    first: w.permutations[p].clone(),
                    first_count: row[p].clone(),
                    second: rep,
                    second_count: w.per_type[r][t].clone(),
                }));
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub alpha: Partition,
    pub r: u32,
    pub walks: ExactInt,
    pub series: ExactInt,
}

/// Outcome of comparing walk counts with character-formula coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub degree: u32,
    pub max_length: u32,
    pub compared: usize,
    pub class_function: core::result::Result<(), Box<ClassWitness>>,
    pub mismatches: Vec<Mismatch>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.class_function.is_ok() && self.mismatches.is_empty()
    }
}

/// `per_type(α, r) = m^r(α)` for all `α ⊢ d`, `r ≤ max_length`.
pub fn oracle_compare(d: u32, max_length: u32, table: &CharacterTable) -> Result<OracleReport> {
    if table.degree() != d {
        return Err(Error::DegreeMismatch {
            left: d,
            right: table.degree(),
        });
    }
    let w = enumerate_counts(d, max_length)?;
    let mut mismatches = Vec::new();
    let mut compared = 0;
    for (t, alpha) in w.types.iter().enumerate() {
        for r in 0..=max_length {
            let series = series_coefficient(alpha, r, table)?;
            let walks = &w.per_type[r as usize][t];
            compared += 1;
            if *walks != series {
                mismatches.push(Mismatch {
                    alpha: alpha.clone(),
                    r,
                    walks: walks.clone(),
                    series,
                });
            }
        }
    }
    Ok(OracleReport {
        degree: d,
        max_length,
        compared,
        class_function: class_function_check(&w),
        mismatches,
    })
}

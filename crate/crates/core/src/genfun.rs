//! The monotone-walk generating function
//!
//! ```text
//! M_α(x) = Σ_λ χ^λ_α / Π_□ h(□)(1 - c(□)x)
//! ```
//!
//! evaluated exactly at rational points, plus its Taylor coefficients
//! `m^r(α)` and the small-`x` data (vanishing order, Catalan leading term).

use alloc::vec::Vec;

use crate::characters::CharacterTable;
use crate::exact::{catalan, factorial, ExactInt, ExactRat};
use crate::partitions::{cell_stats, Partition};
use crate::{Error, Result};

/// Per-shape weights `1 / Π h(□)(1 - c(□)x)` over a common denominator, so
/// that `M_α(x) = Σ_λ χ^λ_α · numerators[λ] / denominator`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weights {
    degree: u32,
    x: ExactRat,
    numerators: Vec<ExactInt>,
    denominator: ExactInt,
}

impl Weights {
    /// `order` is the table index (every partition of one degree).
    pub fn new(order: &[Partition], x: &ExactRat) -> Result<Self> {
        let degree = order.first().map(Partition::degree).unwrap_or(0);
        // With x = p/q:  Π h (1 - c p/q) = Π h · Π (q - c p) / q^d.
        let (p, q) = (x.numer(), x.denom());
        let q_pow = q.pow(degree);
        let mut terms = Vec::with_capacity(order.len());
        for lambda in order {
            let stats = cell_stats(lambda);
            let mut den = stats.hook_product();
            for &c in &stats.contents {
                let factor = q - &(ExactInt::from(c) * p);
                if factor.is_zero() {
                    return Err(Error::Pole { content: c });
                }
                den *= factor;
            }
            terms.push(ExactRat::new(q_pow.clone(), den)?);
        }
        let denominator = terms
            .iter()
            .fold(ExactInt::one(), |acc, t| acc.lcm(t.denom()));
        let numerators = terms
            .iter()
            .map(|t| {
                t.numer()
                    * denominator
                        .div_exact(t.denom())
                        .expect("lcm is a multiple of each denominator")
            })
            .collect();
        Ok(Weights {
            degree,
            x: x.clone(),
            numerators,
            denominator,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn x(&self) -> &ExactRat {
        &self.x
    }

    /// `M_α(x)` for the class at column `col` of `table`.
    pub fn evaluate_column(&self, table: &CharacterTable, col: usize) -> ExactRat {
        let sum: ExactInt = self
            .numerators
            .iter()
            .enumerate()
            .filter_map(|(row, w)| {
                let chi = table.value(row, col);
                (!chi.is_zero()).then(|| chi * w)
            })
            .sum();
        ExactRat::new(sum, self.denominator.clone()).expect("denominator is a positive lcm")
    }
}

fn check_table_degree(alpha: &Partition, table: &CharacterTable) -> Result<usize> {
    let (l, r) = (alpha.degree(), table.degree());
    if l != r {
        return Err(Error::DegreeMismatch { left: l, right: r });
    }
    Ok(table.index_of(alpha).expect("same-degree partitions are indexed"))
}

/// `M_α(x)`, exactly.
pub fn evaluate(alpha: &Partition, x: &ExactRat, table: &CharacterTable) -> Result<ExactRat> {
    let col = check_table_degree(alpha, table)?;
    Ok(Weights::new(table.order(), x)?.evaluate_column(table, col))
}

/// `(d!)² / d^d`, the factor taking `M_α(1/d)` to its normalized value.
pub fn normalization(d: u32) -> ExactRat {
    let f = factorial(d);
    ExactRat::new(&f * &f, ExactInt::from(d).pow(d)).expect("d >= 1")
}

/// `ν_α = M_α(1/d) · (d!)² / d^d`.
pub fn normalized_value(alpha: &Partition, table: &CharacterTable) -> Result<ExactRat> {
    let d = alpha.degree();
    let x = ExactRat::from_i64(1, d as i64)?;
    Ok(evaluate(alpha, &x, table)? * normalization(d))
}

/// Complete homogeneous symmetric polynomial `h_r` evaluated at `values`.
pub fn complete_homogeneous(values: &[i64], r: u32) -> ExactInt {
    let r = r as usize;
    let mut h = alloc::vec![ExactInt::zero(); r + 1];
    h[0] = ExactInt::one();
    for &v in values {
        if v == 0 {
            continue;
        }
        let v = ExactInt::from(v);
        // h_k(S ∪ {v}) = h_k(S) + v · h_{k-1}(S ∪ {v}), increasing k.
        for k in 1..=r {
            let add = &v * &h[k - 1];
            h[k] += add;
        }
    }
    h.swap_remove(r)
}

/// `m^r(α)`: the coefficient of `x^r` in `M_α(x)`, from
/// `Σ_λ χ^λ_α / Π h(□) · h_r(contents of λ)`.
pub fn series_coefficient(alpha: &Partition, r: u32, table: &CharacterTable) -> Result<ExactInt> {
    let col = check_table_degree(alpha, table)?;
    let stats: Vec<_> = table.order().iter().map(cell_stats).collect();
    let hooks: Vec<ExactInt> = stats.iter().map(|s| s.hook_product()).collect();
    let common = hooks.iter().fold(ExactInt::one(), |acc, h| acc.lcm(h));
    let mut sum = ExactInt::zero();
    for (row, s) in stats.iter().enumerate() {
        let chi = table.value(row, col);
        if chi.is_zero() {
            continue;
        }
        let scale = common.div_exact(&hooks[row]).expect("lcm of hook products");
        sum += chi * complete_homogeneous(&s.contents, r) * scale;
    }
    Ok(sum
        .div_exact(&common)
        .expect("walk counts are integers"))
}

/// Minimal walk length `d - ℓ(α)`; `m^r(α) = 0` below it.
pub fn vanishing_order(alpha: &Partition) -> u32 {
    alpha.degree() - alpha.len() as u32
}

/// `m_0(α) = Π_i Cat_{α_i - 1}`, the number of minimal monotone walks.
pub fn catalan_product(alpha: &Partition) -> ExactInt {
    alpha.parts().iter().map(|&a| catalan(a - 1)).product()
}

/// `lim_{x→0} M_β(x) / M_α(x)` for partitions of equal degree and length.
pub fn leading_ratio(alpha: &Partition, beta: &Partition) -> Result<ExactRat> {
    let (l, r) = (alpha.degree(), beta.degree());
    if l != r {
        return Err(Error::DegreeMismatch { left: l, right: r });
    }
    if alpha.len() != beta.len() {
        return Err(Error::LengthMismatch {
            left: alpha.len(),
            right: beta.len(),
        });
    }
    ExactRat::new(catalan_product(beta), catalan_product(alpha))
}

/// `α = (1, 3^n)` and `β = (2^n, n+1)`: equal degree `3n + 1`, equal length,
/// `α` before `β`, yet `β` has the larger leading term once `n ≥ 5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    pub n: u32,
    pub alpha: Partition,
    pub beta: Partition,
    /// `Cat_n / 2^n`
    pub ratio: ExactRat,
}

pub fn counterexample_family(n: u32) -> Result<FamilyMember> {
    if n == 0 {
        return Err(Error::InvalidPartition("family index must be positive"));
    }
    let mut a = alloc::vec![1];
    a.extend(core::iter::repeat_n(3, n as usize));
    let mut b: Vec<u32> = core::iter::repeat_n(2, n as usize).collect();
    b.push(n + 1);
    let ratio = ExactRat::new(catalan(n), ExactInt::from(2).pow(n))?;
    Ok(FamilyMember {
        n,
        alpha: Partition::new(a)?,
        beta: Partition::new(b)?,
        ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::build_table;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn q(s: &str) -> ExactRat {
        s.parse().unwrap()
    }

    #[test]
    fn evaluation_small_cases() {
        let t1 = build_table(1).unwrap();
        for x in ["1/2", "3/7", "0", "-5/3"] {
            assert_eq!(evaluate(&p("1"), &q(x), &t1).unwrap(), ExactRat::one());
        }
        // x / (1 - x²) at x = 1/2.
        let t2 = build_table(2).unwrap();
        assert_eq!(evaluate(&p("2"), &q("1/2"), &t2).unwrap(), q("2/3"));
        assert_eq!(evaluate(&p("1,1"), &q("1/2"), &t2).unwrap(), q("4/3"));
    }

    #[test]
    fn poles_are_errors() {
        let t = build_table(3).unwrap();
        // Content 2 of (3) vanishes 1 - 2x at x = 1/2.
        assert_eq!(
            evaluate(&p("3"), &q("1/2"), &t),
            Err(Error::Pole { content: 2 })
        );
        assert_eq!(
            evaluate(&p("2"), &q("1/5"), &t),
            Err(Error::DegreeMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn homogeneous_sums() {
        assert_eq!(complete_homogeneous(&[0, 1], 1), ExactInt::one());
        assert_eq!(complete_homogeneous(&[0, 1], 3), ExactInt::one());
        assert_eq!(complete_homogeneous(&[4, -2, 9], 0), ExactInt::one());
        assert_eq!(complete_homogeneous(&[], 3), ExactInt::zero());
        // h_2(1,2) = 1 + 2 + 4
        assert_eq!(complete_homogeneous(&[1, 2], 2), ExactInt::from(7));
        // h_2(a,b,c) brute force over multisets
        let vals = [3i64, -1, 2];
        let mut brute = 0i64;
        for i in 0..3 {
            for j in i..3 {
                brute += vals[i] * vals[j];
            }
        }
        assert_eq!(complete_homogeneous(&vals, 2), ExactInt::from(brute));
    }

    #[test]
    fn coefficient_examples() {
        let t3 = build_table(3).unwrap();
        assert_eq!(series_coefficient(&p("3"), 2, &t3).unwrap(), ExactInt::from(2));
        let t2 = build_table(2).unwrap();
        assert_eq!(series_coefficient(&p("2"), 2, &t2).unwrap(), ExactInt::zero());
        assert_eq!(series_coefficient(&p("1,1"), 2, &t2).unwrap(), ExactInt::one());
        assert_eq!(series_coefficient(&p("1,1"), 0, &t2).unwrap(), ExactInt::one());
    }

    #[test]
    fn catalan_data() {
        assert_eq!(catalan_product(&Partition::ones(9)), ExactInt::one());
        assert_eq!(catalan_product(&p("1,3^5")), ExactInt::from(32));
        assert_eq!(catalan_product(&p("2^5,6")), ExactInt::from(42));
        assert_eq!(vanishing_order(&Partition::ones(9)), 0);
        assert_eq!(vanishing_order(&p("9")), 8);
        assert_eq!(vanishing_order(&p("1^5,2^4")), 4);
    }

    #[test]
    fn leading_ratios() {
        assert_eq!(leading_ratio(&p("2,3"), &p("2,3")).unwrap(), ExactRat::one());
        assert_eq!(leading_ratio(&p("1,3^5"), &p("2^5,6")).unwrap(), q("21/16"));
        assert_eq!(leading_ratio(&p("1,3"), &p("2,2")).unwrap(), q("1/2"));
        assert_eq!(
            leading_ratio(&p("1,3"), &p("4")),
            Err(Error::LengthMismatch { left: 2, right: 1 })
        );
    }

    #[test]
    fn family_members() {
        let f1 = counterexample_family(1).unwrap();
        assert_eq!((f1.alpha, f1.beta, f1.ratio), (p("1,3"), p("2,2"), q("1/2")));
        let f5 = counterexample_family(5).unwrap();
        assert_eq!((f5.alpha, f5.beta, f5.ratio), (p("1,3^5"), p("2^5,6"), q("21/16")));
        let f20 = counterexample_family(20).unwrap();
        assert_eq!(f20.ratio, q("6564120420/1048576"));
        assert!(counterexample_family(0).is_err());
    }

    #[test]
    fn normalization_matches_definition() {
        assert_eq!(normalization(1), ExactRat::one());
        assert_eq!(normalization(2), q("1"));
        assert_eq!(normalization(3), q("36/27"));
    }
}

//! Exact integers and rationals.
//!
//! [`ExactInt`] wraps an arbitrary-precision signed integer. [`ExactRat`] is a
//! rational kept in lowest terms with a positive denominator after every
//! operation, so structural equality is value equality and comparisons never
//! touch floating point.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::iter::{Product, Sum};
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision signed integer.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactInt(BigInt);

impl ExactInt {
    pub fn zero() -> Self {
        ExactInt(BigInt::zero())
    }

    pub fn one() -> Self {
        ExactInt(BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        if self.0.is_positive() {
            1
        } else if self.0.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn abs(&self) -> Self {
        ExactInt(self.0.abs())
    }

    /// Nonnegative greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        ExactInt(self.0.gcd(&other.0))
    }

    /// Nonnegative least common multiple; zero if either argument is zero.
    pub fn lcm(&self, other: &Self) -> Self {
        ExactInt(self.0.lcm(&other.0))
    }

    pub fn pow(&self, exponent: u32) -> Self {
        ExactInt(Pow::pow(&self.0, exponent))
    }

    /// `self / divisor` if the division is exact, `None` otherwise (including
    /// division by zero).
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.0.div_rem(&divisor.0);
        r.is_zero().then_some(ExactInt(q))
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.0.to_i64()
    }

    pub fn as_bigint(&self) -> &BigInt {
        &self.0
    }
}

impl From<BigInt> for ExactInt {
    fn from(value: BigInt) -> Self {
        ExactInt(value)
    }
}

macro_rules! int_from_primitive {
    ($($t:ty),*) => {$(
        impl From<$t> for ExactInt {
            fn from(value: $t) -> Self {
                ExactInt(BigInt::from(value))
            }
        }
    )*};
}

int_from_primitive!(i8, i16, i32, i64, i128, u8, u16, u32, u64, u128, usize, isize);

impl fmt::Display for ExactInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for ExactInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Optionally signed decimal.
impl FromStr for ExactInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse {
                what: "integer",
                input: String::from(s),
            });
        }
        t.parse::<BigInt>().map(ExactInt).map_err(|_| Error::Parse {
            what: "integer",
            input: String::from(s),
        })
    }
}

macro_rules! forward_binop {
    ($ty:ident, $trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident, $imp:expr) => {
        impl $trait<&$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                let f: fn(&$ty, &$ty) -> $ty = $imp;
                f(self, rhs)
            }
        }
        impl $trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl $trait<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
        impl $assign_trait<&$ty> for $ty {
            fn $assign_method(&mut self, rhs: &$ty) {
                *self = (&*self).$method(rhs);
            }
        }
        impl $assign_trait<$ty> for $ty {
            fn $assign_method(&mut self, rhs: $ty) {
                *self = (&*self).$method(&rhs);
            }
        }
    };
}

forward_binop!(ExactInt, Add, add, AddAssign, add_assign, |a, b| ExactInt(&a.0 + &b.0));
forward_binop!(ExactInt, Sub, sub, SubAssign, sub_assign, |a, b| ExactInt(&a.0 - &b.0));
forward_binop!(ExactInt, Mul, mul, MulAssign, mul_assign, |a, b| ExactInt(&a.0 * &b.0));

impl Neg for ExactInt {
    type Output = ExactInt;
    fn neg(self) -> ExactInt {
        ExactInt(-self.0)
    }
}

impl Neg for &ExactInt {
    type Output = ExactInt;
    fn neg(self) -> ExactInt {
        ExactInt(-&self.0)
    }
}

impl Sum for ExactInt {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(ExactInt::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a ExactInt> for ExactInt {
    fn sum<I: Iterator<Item = &'a ExactInt>>(iter: I) -> Self {
        iter.fold(ExactInt::zero(), |acc, x| acc + x)
    }
}

impl Product for ExactInt {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(ExactInt::one(), |acc, x| acc * x)
    }
}

impl<'a> Product<&'a ExactInt> for ExactInt {
    fn product<I: Iterator<Item = &'a ExactInt>>(iter: I) -> Self {
        iter.fold(ExactInt::one(), |acc, x| acc * x)
    }
}

/// `n!`
pub fn factorial(n: u32) -> ExactInt {
    (1..=n).map(ExactInt::from).product()
}

/// `base^exponent`, with `0^0 = 1`.
pub fn int_pow(base: &ExactInt, exponent: u32) -> ExactInt {
    base.pow(exponent)
}

/// Binomial coefficient `n choose k`, zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    // Each partial product is itself a binomial coefficient, so the
    // division is exact at every step.
    let mut acc = ExactInt::one();
    for i in 0..k {
        acc = (acc * ExactInt::from(n - i))
            .div_exact(&ExactInt::from(i + 1))
            .expect("partial binomial products are integral");
    }
    acc
}

/// Catalan number `binomial(2n, n) / (n + 1)`.
pub fn catalan(n: u32) -> ExactInt {
    binomial(2 * n, n)
        .div_exact(&ExactInt::from(n + 1))
        .expect("Catalan numbers are integral")
}

/// Rational number in lowest terms with a strictly positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactRat {
    numer: ExactInt,
    denom: ExactInt,
}

impl ExactRat {
    /// `numer / denom`, reduced.
    pub fn new(numer: ExactInt, denom: ExactInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(numer, denom))
    }

    fn reduce(numer: ExactInt, denom: ExactInt) -> Self {
        debug_assert!(!denom.is_zero());
        if numer.is_zero() {
            return ExactRat::zero();
        }
        let g = numer.gcd(&denom);
        let (mut n, mut d) = if g.is_one() {
            (numer, denom)
        } else {
            (
                ExactInt(&numer.0 / &g.0),
                ExactInt(&denom.0 / &g.0),
            )
        };
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        ExactRat { numer: n, denom: d }
    }

    pub fn from_int(value: ExactInt) -> Self {
        ExactRat {
            numer: value,
            denom: ExactInt::one(),
        }
    }

    /// Convenience for small literals; `den` must be nonzero.
    pub fn from_i64(num: i64, den: i64) -> Result<Self> {
        Self::new(ExactInt::from(num), ExactInt::from(den))
    }

    pub fn zero() -> Self {
        Self::from_int(ExactInt::zero())
    }

    pub fn one() -> Self {
        Self::from_int(ExactInt::one())
    }

    pub fn numer(&self) -> &ExactInt {
        &self.numer
    }

    pub fn denom(&self) -> &ExactInt {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.numer.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.numer.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.denom.is_one()
    }

    /// The numerator if the denominator is 1.
    pub fn to_integer(&self) -> Option<ExactInt> {
        self.is_integer().then(|| self.numer.clone())
    }

    pub fn recip(&self) -> Result<Self> {
        ExactRat::new(self.denom.clone(), self.numer.clone())
    }

    pub fn checked_div(&self, rhs: &ExactRat) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(ExactRat::reduce(
            &self.numer * &rhs.denom,
            &self.denom * &rhs.numer,
        ))
    }

    pub fn pow(&self, exponent: u32) -> Self {
        // Powers of coprime integers stay coprime.
        ExactRat {
            numer: self.numer.pow(exponent),
            denom: self.denom.pow(exponent),
        }
    }
}

impl From<ExactInt> for ExactRat {
    fn from(value: ExactInt) -> Self {
        ExactRat::from_int(value)
    }
}

impl From<i64> for ExactRat {
    fn from(value: i64) -> Self {
        ExactRat::from_int(ExactInt::from(value))
    }
}

forward_binop!(ExactRat, Add, add, AddAssign, add_assign, |a, b| {
    if a.denom == b.denom {
        ExactRat::reduce(&a.numer + &b.numer, a.denom.clone())
    } else {
        ExactRat::reduce(
            &a.numer * &b.denom + &b.numer * &a.denom,
            &a.denom * &b.denom,
        )
    }
});
forward_binop!(ExactRat, Sub, sub, SubAssign, sub_assign, |a, b| {
    ExactRat::reduce(
        &a.numer * &b.denom - &b.numer * &a.denom,
        &a.denom * &b.denom,
    )
});
forward_binop!(ExactRat, Mul, mul, MulAssign, mul_assign, |a, b| {
    ExactRat::reduce(&a.numer * &b.numer, &a.denom * &b.denom)
});

impl Neg for ExactRat {
    type Output = ExactRat;
    fn neg(self) -> ExactRat {
        ExactRat {
            numer: -self.numer,
            denom: self.denom,
        }
    }
}

impl Neg for &ExactRat {
    type Output = ExactRat;
    fn neg(self) -> ExactRat {
        -self.clone()
    }
}

impl Sum for ExactRat {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(ExactRat::zero(), |acc, x| acc + x)
    }
}

impl Ord for ExactRat {
    /// Cross-multiplication; both denominators are positive.
    fn cmp(&self, other: &Self) -> Ordering {
        if self.denom == other.denom {
            return self.numer.cmp(&other.numer);
        }
        (&self.numer * &other.denom).cmp(&(&other.numer * &self.denom))
    }
}

impl PartialOrd for ExactRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Always `N/D`, including `D = 1`.
impl fmt::Display for ExactRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

impl fmt::Debug for ExactRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `N/D` or `N`.
impl FromStr for ExactRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "rational",
            input: String::from(s),
        };
        match s.split_once('/') {
            Some((n, d)) => {
                let n: ExactInt = n.parse().map_err(|_| bad())?;
                let d: ExactInt = d.parse().map_err(|_| bad())?;
                ExactRat::new(n, d)
            }
            None => s.parse::<ExactInt>().map(ExactRat::from_int).map_err(|_| bad()),
        }
    }
}

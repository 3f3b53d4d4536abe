//! Scalars: arbitrary-precision rationals and the handful of number-theoretic
//! helpers the rest of the crate needs (exact k-th roots, heights, text form).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator (zero is `0/1`).
pub type Rat = BigRational;

/// `n/d` as a reduced rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn big(n: &BigInt) -> Rat {
    Rat::from_integer(n.clone())
}

/// Height `max(|num|, den)`.
pub fn height(x: &Rat) -> BigInt {
    let n = x.numer().abs();
    let d = x.denom().clone();
    if n > d {
        n
    } else {
        d
    }
}

/// Exact integer k-th root of a non-negative integer, if it exists.
fn int_kth_root(n: &BigInt, k: u32) -> Option<BigInt> {
    debug_assert!(!n.is_negative());
    let r = n.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *n {
        Some(r)
    } else {
        None
    }
}

/// Returns `r` with `r^k == x` when such a rational exists.
///
/// For even `k` the non-negative root is returned; negative `x` has no even
/// root. For odd `k` the unique real root is returned. Works on numerator
/// and denominator separately, which is valid because both are coprime.
pub fn kth_power_test(x: &Rat, k: u32) -> Option<Rat> {
    assert!(k >= 1, "k must be positive");
    if x.is_zero() {
        return Some(Rat::zero());
    }
    let neg = x.is_negative();
    if neg && k.is_multiple_of(2) {
        return None;
    }
    let n = int_kth_root(&x.numer().abs(), k)?;
    let d = int_kth_root(x.denom(), k)?;
    let r = Rat::new(n, d);
    Some(if neg { -r } else { r })
}

pub fn is_square(x: &Rat) -> bool {
    kth_power_test(x, 2).is_some()
}

pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// Canonical text form: `num/den`, or `num` when the denominator is 1.
pub fn fmt_rat(x: &Rat) -> String {
    x.to_string()
}

/// Parses `[-]digits[/digits]` into a reduced rational.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let bad = |msg: &str| Error::Parse {
        position: 0,
        message: format!("{msg}: {s:?}"),
    };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad("invalid rational numerator"))?;
    let d: BigInt = d.parse().map_err(|_| bad("invalid rational denominator"))?;
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rat::new(n, d))
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(xs: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

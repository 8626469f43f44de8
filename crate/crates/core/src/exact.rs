//! Exact scalars and the factorial family.
//!
//! Everything downstream is computed over [`Rational`](crate::Rational) or
//! [`Integer`](crate::Integer); nothing here rounds.

use std::fmt::Display;

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Num, One, Zero};

use crate::error::{Error, Result};
use crate::{Integer, Rational};

/// Rising factorial `x^(r)` for any integer exponent.
///
/// For `r > 0` this is `x(x+1)...(x+r-1)`, for `r = 0` it is 1, and for
/// `r < 0` it is `1 / ((x-1)(x-2)...(x+r))`, i.e. `|r|` factors below `x`.
pub fn rising_factorial<T>(x: &T, r: i64) -> Result<T>
where
    T: Clone + Num + FromPrimitive + Display,
{
    let mut acc = T::one();
    if r >= 0 {
        let mut f = x.clone();
        for _ in 0..r {
            acc = acc * f.clone();
            f = f + T::one();
        }
        return Ok(acc);
    }
    for j in 1..=r.unsigned_abs() {
        let offset = T::from_u64(j).expect("small integer fits the scalar type");
        let factor = x.clone() - offset;
        if factor.is_zero() {
            return Err(Error::ZeroDenominator {
                base: x.to_string(),
                offset: j,
            });
        }
        acc = acc * factor;
    }
    Ok(T::one() / acc)
}

/// `C(n, k)` for `n >= 0`; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Result<Integer> {
    if n < 0 {
        return Err(Error::NegativeN(n));
    }
    if k < 0 || k > n {
        return Ok(BigInt::zero());
    }
    Ok(choose(n as u64, k as u64))
}

/// Unchecked-domain binomial for non-negative arguments.
pub(crate) fn choose(n: u64, k: u64) -> Integer {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc = C(n, i) here, so the division is exact.
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `(-1)^C(r,2)`, the sign carried by an `r x r` reversal.
pub fn reversal_sign(r: usize) -> i64 {
    if (r * r.saturating_sub(1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The integer value of `q`, if it has denominator 1.
pub fn to_integer(q: &Rational) -> Option<Integer> {
    q.is_integer().then(|| q.to_integer())
}

//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use hoggatt_hankel::{Integer, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<Integer>]) -> Integer {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = BigInt::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Integer>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][col] * cofactor_det(&minor);
        if col % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `C(n, k)` by Pascal's rule, no shared code with the library.
pub fn pascal(n: u64, k: i64) -> Integer {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::one(); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row[k as usize].clone()
}

/// Hankel determinant of the binomial column by cofactor expansion.
pub fn binomial_hankel_oracle(k: u64, m: u64, r: usize) -> Integer {
    let mat: Vec<Vec<Integer>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| pascal(k + (i + j) as u64, m as i64))
                .collect()
        })
        .collect();
    cofactor_det(&mat)
}

/// Product of `(1-x)^n` with a coefficient list by binomial convolution.
pub fn convolve_one_minus_x(coeffs: &[Rational], n: u64) -> Vec<Rational> {
    (0..coeffs.len())
        .map(|i| {
            (0..=i.min(n as usize)).fold(Rational::zero(), |acc, t| {
                let b = Rational::from_integer(pascal(n, t as i64));
                let term = b * &coeffs[i - t];
                if t % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect()
}

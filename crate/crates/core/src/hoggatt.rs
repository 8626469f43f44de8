//! Hoggatt binomials `<n over k>_r` and the r-Hoggatt triangle.
//!
//! Several independent routes are provided so they can be checked against
//! each other: the binomial-quotient product (the primary route), the
//! factorial definition, the `L_j` factorization, the hypergeometric row
//! sum, and brute-force tableau enumeration in [`crate::ssyt`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{choose, rat, rising_factorial, to_integer};
use crate::{Integer, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HoggattParams {
    pub n: u64,
    pub k: i64,
    pub r: u64,
}

impl HoggattParams {
    pub fn new(n: u64, k: i64, r: u64) -> Result<Self> {
        if r == 0 {
            return Err(Error::DomainError(
                "Hoggatt dimension r must be >= 1".into(),
            ));
        }
        Ok(HoggattParams { n, k, r })
    }

    pub fn in_range(&self) -> bool {
        self.k >= 0 && self.k as u64 <= self.n
    }

    pub fn value(&self) -> Integer {
        hoggatt_binomial(self.n as i64, self.k, self.r)
    }
}

/// One factor of `<n over k>_r = L_0 L_1 ... L_{r-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LFactor {
    pub j: u64,
    pub value: Rational,
}

/// `<n>_r = C(n + r - 1, r)`.
pub fn hoggatt_basic(n: u64, r: u64) -> Result<Integer> {
    if n < 1 || r < 1 {
        return Err(Error::DomainError(format!(
            "<n>_r needs n >= 1 and r >= 1, got n={n}, r={r}"
        )));
    }
    Ok(choose(n + r - 1, r))
}

/// `<n over k>_r`, zero outside `0 <= k <= n`.
///
/// Evaluated as `prod_{j<r} C(n+j, k) / C(k+j, k)` in exact rationals; the
/// result is asserted integral. `r = 0` gives the empty product 1 in range.
pub fn hoggatt_binomial(n: i64, k: i64, r: u64) -> Integer {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let (n, k) = (n as u64, k as u64);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..r {
        num *= choose(n + j, k);
        den *= choose(k + j, k);
    }
    let q = Rational::new(num, den);
    to_integer(&q).unwrap_or_else(|| panic!("<{n} over {k}>_{r} came out non-integral: {q}"))
}

/// `<n>_r! = <1>_r <2>_r ... <n>_r`.
pub fn hoggatt_factorial(n: u64, r: u64) -> Integer {
    (1..=n).fold(BigInt::one(), |acc, i| acc * choose(i + r - 1, r))
}

/// `<n over k>_r` straight from `<n>_r! / (<k>_r! <n-k>_r!)`.
pub fn hoggatt_by_definition(n: u64, k: i64, r: u64) -> Integer {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = k as u64;
    hoggatt_factorial(n, r) / (hoggatt_factorial(k, r) * hoggatt_factorial(n - k, r))
}

/// `L_j = (n+1-k+j)^(k+r-1-2j) / (1+j)^(k+r-1-2j)` for `j = 0..r`.
///
/// Exponents go negative once `2j > k + r - 1`.
pub fn l_factorization(p: &HoggattParams) -> Result<Vec<LFactor>> {
    if !p.in_range() {
        return Err(Error::DomainError(format!(
            "L-factorization needs 0 <= k <= n, got n={}, k={}",
            p.n, p.k
        )));
    }
    let (n, k, r) = (p.n as i64, p.k, p.r as i64);
    (0..r)
        .map(|j| {
            let e = k + r - 1 - 2 * j;
            let top = rising_factorial(&rat(n + 1 - k + j), e)?;
            let bottom = rising_factorial(&rat(1 + j), e)?;
            Ok(LFactor {
                j: j as u64,
                value: top / bottom,
            })
        })
        .collect()
}

/// Terminating `pFq(a; b; t) = sum_k prod (a_i)^(k) / prod (b_i)^(k) t^k / k!`.
///
/// Some upper parameter must be a non-positive integer so the sum stops.
pub fn terminating_hypergeometric(
    upper: &[Rational],
    lower: &[Rational],
    t: &Rational,
) -> Result<Rational> {
    let terms = upper
        .iter()
        .filter(|a| a.is_integer() && *a <= &rat(0))
        .map(|a| (-a.to_integer()).try_into().unwrap_or(u64::MAX))
        .min()
        .ok_or_else(|| Error::DomainError("hypergeometric series does not terminate".into()))?;
    let mut sum = Rational::zero();
    let mut term = Rational::one();
    for k in 0..=terms {
        sum += &term;
        let kk = rat(k as i64);
        let mut next = term * t / (&kk + rat(1));
        for a in upper {
            next *= a + &kk;
        }
        for b in lower {
            let den = b + &kk;
            if den.is_zero() {
                return Err(Error::PoleEncountered(format!(
                    "lower parameter {b} hits zero at term {}",
                    k + 1
                )));
            }
            next /= den;
        }
        term = next;
    }
    Ok(sum)
}

/// `sum_k <n over k>_r t^k` through the hypergeometric representation
/// `rF_{r-1}(-n, -n-1, ..., -n-r+1; 2, 3, ..., r; (-1)^r t)`.
pub fn row_genfun_hypergeometric(n: u64, r: u64, t: &Rational) -> Rational {
    let n = n as i64;
    let upper: Vec<Rational> = (0..r as i64).map(|i| rat(-n - i)).collect();
    let lower: Vec<Rational> = (2..=r as i64).map(rat).collect();
    let arg = if r.is_multiple_of(2) {
        t.clone()
    } else {
        -t.clone()
    };
    terminating_hypergeometric(&upper, &lower, &arg)
        .expect("upper parameter -n always terminates and lower parameters are positive")
}

/// Rows `0..rows` of the r-Hoggatt triangle.
pub fn triangle(r: u64, rows: u64) -> Vec<Vec<Integer>> {
    (0..rows as i64)
        .map(|n| (0..=n).map(|k| hoggatt_binomial(n, k, r)).collect())
        .collect()
}

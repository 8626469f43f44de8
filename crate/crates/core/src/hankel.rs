//! Hankel determinants `d_k(s, m, r) = det(<k+i+j over m>_s)_{i,j<r}`.
//!
//! `s = 1` is the plain binomial column `C(k+i+j, m)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::det::determinant_fraction_free;
use crate::error::{Error, Result};
use crate::exact::{choose, rat, reversal_sign, rising_factorial};
use crate::hoggatt::hoggatt_binomial;
use crate::poly::Polynomial;
use crate::report::{CheckId, PointParams, Status, VerificationReport};
use crate::{Integer, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HankelParams {
    pub k: u64,
    pub m: u64,
    pub r: usize,
    pub s: u64,
}

impl HankelParams {
    pub fn new(k: u64, m: u64, r: usize, s: u64) -> Result<Self> {
        if s == 0 {
            return Err(Error::DomainError(
                "Hoggatt dimension s must be >= 1".into(),
            ));
        }
        Ok(HankelParams { k, m, r, s })
    }

    /// Plain binomial column, `s = 1`.
    pub fn binomial(k: u64, m: u64, r: usize) -> Self {
        HankelParams { k, m, r, s: 1 }
    }

    /// Same column and size, shifted start.
    pub fn at(self, k: u64) -> Self {
        HankelParams { k, ..self }
    }

    /// Same column, another size.
    pub fn with_size(self, r: usize) -> Self {
        HankelParams { r, ..self }
    }
}

/// The sequence entry `<n over m>_s` (or `C(n, m)` when `s = 1`).
pub fn column_entry(n: u64, m: u64, s: u64) -> Integer {
    if s == 1 {
        choose(n, m)
    } else {
        hoggatt_binomial(n as i64, m as i64, s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelMatrix {
    pub entries: Vec<Vec<Integer>>,
    pub params: HankelParams,
}

impl HankelMatrix {
    /// Entry `(i, j)` depends only on `i + j`.
    pub fn is_hankel(&self) -> bool {
        let n = self.entries.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let t = i + j;
                let (i0, j0) = if t < n { (0, t) } else { (t - n + 1, n - 1) };
                self.entries[i][j] == self.entries[i0][j0]
            })
        })
    }

    pub fn determinant(&self) -> Integer {
        determinant_fraction_free(&self.entries)
    }
}

pub fn build_matrix(p: HankelParams) -> Result<HankelMatrix> {
    if p.r == 0 {
        return Err(Error::DomainError("Hankel matrix needs size r >= 1".into()));
    }
    // 2r - 1 distinct anti-diagonals
    let seq: Vec<Integer> = (0..2 * p.r as u64 - 1)
        .map(|t| column_entry(p.k + t, p.m, p.s))
        .collect();
    let entries = (0..p.r)
        .map(|i| (0..p.r).map(|j| seq[i + j].clone()).collect())
        .collect();
    Ok(HankelMatrix { entries, params: p })
}

/// `d_k(s, m, r)`.
///
/// Size 0 follows the convention `d_k(m, 0) = [k >= m]` for `s = 1`; for
/// `s >= 2` the empty determinant is taken as 1.
pub fn d(p: HankelParams) -> Integer {
    if p.r == 0 {
        return if p.s > 1 || p.k >= p.m {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    build_matrix(p).expect("r >= 1").determinant()
}

/// `D_k(s, m, r) = (-1)^C(r,2) d_k(s, m, r)`.
pub fn signed_d(p: HankelParams) -> Integer {
    d(p) * BigInt::from(reversal_sign(p.r))
}

/// `d_k` for `k` in `ks`, one determinant each.
pub fn d_sequence(p: HankelParams, ks: impl IntoIterator<Item = u64>) -> Vec<Integer> {
    ks.into_iter().map(|k| d(p.at(k))).collect()
}

/// `(-1)^C(r,2) d_k(m, r) = <k over m-r+1>_r`, both sides independently.
pub fn check_theorem1(k: u64, m: u64, r: usize) -> VerificationReport {
    let params = PointParams::smrk(1, m, r as u64, k as i64);
    if r == 0 || m + 1 < r as u64 {
        return VerificationReport::skipped(
            CheckId::Theorem1,
            params,
            "requires r >= 1 and m >= r-1",
        );
    }
    let lhs = signed_d(HankelParams::binomial(k, m, r));
    let rhs = hoggatt_binomial(k as i64, m as i64 - r as i64 + 1, r as u64);
    let mut rep = VerificationReport::new(
        CheckId::Theorem1,
        params,
        Status::from_bool(lhs == rhs),
        &lhs,
        &rhs,
    );
    if k + (r as u64) < m + 1 && !lhs.is_zero() {
        rep.note("nonzero inside the vanishing band k < m-r+1");
    }
    if k + r as u64 == m + 1 && lhs != BigInt::one() {
        rep.note("boundary d_{m-r+1}(m,r) != (-1)^C(r,2)");
    }
    rep
}

/// Desnanot-Jacobi condensation:
/// `d_k(r) d_{k+2}(r-2) - d_{k+2}(r-1) d_k(r-1) + d_{k+1}(r-1)^2 = 0`.
///
/// Also checks the normalized ratio form whenever `D_{k+1}(m, r-1) != 0`.
pub fn check_condensation(k: u64, m: u64, r: usize, s: u64) -> VerificationReport {
    let params = PointParams::smrk(s, m, r as u64, k as i64);
    if r < 2 || s == 0 {
        return VerificationReport::skipped(CheckId::Condensation, params, "requires r >= 2");
    }
    let base = HankelParams { k, m, r, s };
    let at = |dk: u64, size: usize| d(base.at(k + dk).with_size(size));
    let (a, b) = (at(0, r), at(2, r - 2));
    let (c, e) = (at(2, r - 1), at(0, r - 1));
    let f = at(1, r - 1);
    let lhs = &a * &b - &c * &e + &f * &f;
    let mut rep = VerificationReport::new(
        CheckId::Condensation,
        params,
        Status::from_bool(lhs.is_zero()),
        &lhs,
        0,
    );
    if !f.is_zero() {
        // D-normalized form; the signs of sizes r, r-2 agree and differ from r-1.
        let sgn = |size: usize| BigInt::from(reversal_sign(size));
        let dd = |v: &Integer, size: usize| Rational::from_integer(v * sgn(size));
        let denom = dd(&f, r - 1) * dd(&f, r - 1);
        let t1 = dd(&a, r) * dd(&b, r - 2) / &denom;
        let t2 = dd(&c, r - 1) * dd(&e, r - 1) / &denom;
        let sum = &t1 + &t2;
        if sum != rat(1) {
            rep.status = Status::Fail;
        }
        rep.note(format!("normalized form: {t1} + {t2} = {sum}"));
    } else {
        rep.note("normalized form skipped: D_{k+1}(m,r-1) = 0");
    }
    if s == 1 && m + 1 < r as u64 {
        rep.note("outside the stated range m >= r-1");
    }
    if s > 1 {
        rep.note("exploratory for s >= 2");
        if r == 2 {
            rep.note("uses d(., ., 0) = 1 for s >= 2");
        }
    }
    rep
}

/// `prod_{j<count} (k + r - m + shift + j)^(m-2j) / (1+j)^(m-2j)`,
/// the shared shape of the D-products in the proof of Theorem 1.
fn d_product(k: &Rational, m: i64, r: i64, shift: i64, count: i64) -> Result<Rational> {
    let mut acc = rat(1);
    for j in 0..count.max(0) {
        let e = m - 2 * j;
        let x = k + rat(r - m + shift + j);
        acc *= rising_factorial(&x, e)? / rising_factorial(&rat(1 + j), e)?;
    }
    Ok(acc)
}

/// `S_j(m, r) = (k+r-m+j)^(m-2j) / (1+j)^(m-2j)`.
pub fn theorem1_s_weight(k: &Rational, m: i64, r: i64, j: i64) -> Result<Rational> {
    let e = m - 2 * j;
    Ok(rising_factorial(&(k + rat(r - m + j)), e)? / rising_factorial(&rat(1 + j), e)?)
}

/// Values of the two proof ratios, by direct D-products and closed forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofRatios {
    pub first_direct: Rational,
    pub first_closed: Rational,
    pub first_s_quotient: Rational,
    pub second_direct: Rational,
    pub second_closed: Rational,
}

impl ProofRatios {
    pub fn holds(&self) -> bool {
        self.first_direct == self.first_closed
            && self.first_direct == self.first_s_quotient
            && self.second_direct == self.second_closed
            && &self.first_closed + &self.second_closed == rat(1)
    }
}

/// Evaluate both ratios at `(k, m, r)`; `PoleEncountered` on any vanishing
/// denominator.
pub fn proof_ratios(k: &Rational, m: i64, r: i64) -> Result<ProofRatios> {
    if r < 2 {
        return Err(Error::DomainError("proof ratios need r >= 2".into()));
    }
    let pole =
        |what: &str| Error::PoleEncountered(format!("{what} vanishes at k={k}, m={m}, r={r}"));
    let wrap = |e: Error| match e {
        Error::ZeroDenominator { .. } => pole("a rising factorial"),
        other => other,
    };
    let d_kr = d_product(k, m, r, 0, r).map_err(wrap)?;
    let d_k2_r2 = d_product(k, m, r, 0, r - 2).map_err(wrap)?;
    let d_k1_r1 = d_product(k, m, r, 0, r - 1).map_err(wrap)?;
    let d_k_r1 = d_product(k, m, r, -1, r - 1).map_err(wrap)?;
    let d_k2_r1 = d_product(k, m, r, 1, r - 1).map_err(wrap)?;
    if d_k1_r1.is_zero() {
        return Err(pole("D_{k+1}(m,r-1)"));
    }
    let sq = &d_k1_r1 * &d_k1_r1;
    let first_direct = &d_kr * &d_k2_r2 / &sq;
    let second_direct = &d_k2_r1 * &d_k_r1 / &sq;

    let den1 = (k + rat(1)) * (k + rat(2 * r - m - 2));
    let den2 = (k + rat(2 * r - m - 2)) * (k + rat(1));
    if den1.is_zero() || den2.is_zero() {
        return Err(pole("a closed-form denominator"));
    }
    let first_closed = rat((r - 1) * (m - r + 2)) / den1;
    let second_closed = (k + rat(r - m - 1)) * (k + rat(r)) / den2;

    let s_top = theorem1_s_weight(k, m, r, r - 1).map_err(wrap)?;
    let s_bottom = theorem1_s_weight(k, m, r, r - 2).map_err(wrap)?;
    if s_bottom.is_zero() {
        return Err(pole("S_{r-2}"));
    }
    Ok(ProofRatios {
        first_direct,
        first_closed,
        first_s_quotient: s_top / s_bottom,
        second_direct,
        second_closed,
    })
}

pub fn check_proof_ratios(k: i64, m: i64, r: i64) -> VerificationReport {
    let params = PointParams {
        s: Some(1),
        m: Some(m as u64),
        r: Some(r as u64),
        k: Some(k),
    };
    match proof_ratios(&rat(k), m, r) {
        Ok(v) => {
            let sum = &v.first_closed + &v.second_closed;
            let mut rep = VerificationReport::new(
                CheckId::ProofRatios,
                params,
                Status::from_bool(v.holds()),
                &sum,
                1,
            );
            rep.note(format!(
                "first: direct {} closed {} S-quotient {}",
                v.first_direct, v.first_closed, v.first_s_quotient
            ));
            rep.note(format!(
                "second: direct {} closed {}",
                v.second_direct, v.second_closed
            ));
            rep
        }
        Err(e) => VerificationReport::skipped(CheckId::ProofRatios, params, e.to_string()),
    }
}

/// Degree of `k -> d_k(s, m, r)`: `r(ms - r + 1)`.
pub fn determinant_degree(s: u64, m: u64, r: u64) -> Option<u64> {
    (m * s + 1).checked_sub(r).map(|t| r * t)
}

/// Interpolate `k -> d_k(s, m, r)` on `deg + 1` points, then confirm
/// `extra` further points.
pub fn check_polynomiality(s: u64, m: u64, r: usize, extra: usize) -> VerificationReport {
    let params = PointParams::smr(s, m, r as u64);
    let Some(deg) = determinant_degree(s, m, r as u64) else {
        return VerificationReport::skipped(CheckId::Polynomiality, params, "requires ms >= r-1");
    };
    let base = HankelParams { k: 0, m, r, s };
    let n = deg as usize + 1;
    let points: Vec<(Rational, Rational)> = (0..(n + extra) as u64)
        .map(|k| (rat(k as i64), Rational::from_integer(d(base.at(k)))))
        .collect();
    let poly = Polynomial::interpolate(&points[..n]).expect("distinct abscissas");
    let misses: Vec<_> = points[n..]
        .iter()
        .filter(|(x, y)| poly.eval(x) != *y)
        .map(|(x, _)| x.to_string())
        .collect();
    let found = poly.degree().map(|v| v as i64).unwrap_or(-1);
    let ok = misses.is_empty() && found == deg as i64;
    let mut rep = VerificationReport::new(
        CheckId::Polynomiality,
        params,
        Status::from_bool(ok),
        found,
        deg,
    );
    if !misses.is_empty() {
        rep.note(format!(
            "held-out points off the polynomial: k = {}",
            misses.join(",")
        ));
    }
    rep
}

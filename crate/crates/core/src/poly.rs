//! Dense univariate polynomials over an exact scalar.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Num, Signed};

use crate::error::{Error, Result};

/// Dense polynomial, `coeffs[i]` is the coefficient of `x^i`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and [`degree`](Polynomial::degree) returns `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Num> Polynomial<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^deg`
    pub fn monomial(c: T, deg: usize) -> Self {
        let mut coeffs = vec![T::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    /// `(1 + x)^n`
    pub fn one_plus_x_power(n: usize) -> Self {
        let mut coeffs = vec![T::one()];
        for _ in 0..n {
            let mut next = coeffs.clone();
            next.push(T::zero());
            for i in 1..next.len() {
                next[i] = next[i].clone() + coeffs[i - 1].clone();
            }
            coeffs = next;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `x^a`.
    pub fn shift(&self, a: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); a];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Divide by `x^a`, if `x^a` divides `self`.
    pub fn unshift(&self, a: usize) -> Option<Self> {
        if self.coeffs.iter().take(a).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(
            self.coeffs.iter().skip(a).cloned().collect(),
        ))
    }

    /// `b`-fold formal derivative.
    pub fn derivative(&self, b: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(b)
            .map(|(i, c)| {
                let mut f = c.clone();
                for t in 0..b {
                    f = f * from_usize::<T>(i - t);
                }
                f
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Exact product with `(1 - x)^n`, by `n` passes of `c_i <- c_i - c_{i-1}`.
    pub fn scale_by_one_minus_x_power(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(self.coeffs.len() + n, T::zero());
        difference_passes(&mut coeffs, n);
        Self::from_coeffs(coeffs)
    }

    /// True iff `coeff(i) == coeff(n - i)` for `0 <= i <= n`.
    ///
    /// Returns false when `n` is below the degree.
    pub fn is_palindromic(&self, n: usize) -> bool {
        if self.degree().is_some_and(|d| d > n) {
            return false;
        }
        (0..=n / 2).all(|i| self.coeff(i) == self.coeff(n - i))
    }

    /// Peel `gamma_j x^j (1+x)^(n-2j)` off a palindromic polynomial.
    pub fn gamma_decompose(&self, n: usize) -> Result<GammaVector<T>> {
        if !self.is_palindromic(n) {
            return Err(Error::NotPalindromic(n));
        }
        let mut rest = self.clone();
        let mut gammas = Vec::with_capacity(n / 2 + 1);
        for j in 0..=n / 2 {
            let g = rest.coeff(j);
            if !g.is_zero() {
                let term = Self::one_plus_x_power(n - 2 * j).shift(j).scale(&g);
                rest = &rest - &term;
            }
            gammas.push(g);
        }
        debug_assert!(rest.is_zero());
        Ok(GammaVector { gammas, center: n })
    }
}

impl<T: Clone + Num + PartialOrd> Polynomial<T> {
    /// Coefficients weakly rise, then weakly fall.
    pub fn is_unimodal(&self) -> bool {
        let c = &self.coeffs;
        let mut i = 1;
        while i < c.len() && c[i - 1] <= c[i] {
            i += 1;
        }
        while i < c.len() && c[i - 1] >= c[i] {
            i += 1;
        }
        i >= c.len()
    }
}

impl<T: Clone + Num + fmt::Display> Polynomial<T> {
    /// Unique polynomial of degree `< points.len()` through all points.
    ///
    /// Built from Newton divided differences, then expanded to the
    /// monomial basis.
    pub fn interpolate(points: &[(T, T)]) -> Result<Self> {
        for (i, (a, _)) in points.iter().enumerate() {
            if points[..i].iter().any(|(b, _)| b == a) {
                return Err(Error::DuplicateAbscissa(a.to_string()));
            }
        }
        let n = points.len();
        let mut table: Vec<T> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let num = table[i].clone() - table[i - 1].clone();
                let den = points[i].0.clone() - points[i - level].0.clone();
                table[i] = num / den;
            }
        }
        let mut acc = Self::zero();
        for i in (0..n).rev() {
            let factor = Self::from_coeffs(vec![T::zero() - points[i].0.clone(), T::one()]);
            acc = &(&acc * &factor) + &Self::constant(table[i].clone());
        }
        Ok(acc)
    }
}

/// Free-function form of [`Polynomial::interpolate`].
pub fn lagrange_interpolate<T: Clone + Num + fmt::Display>(
    points: &[(T, T)],
) -> Result<Polynomial<T>> {
    Polynomial::interpolate(points)
}

pub(crate) fn difference_passes<T: Clone + Num>(coeffs: &mut [T], n: usize) {
    for _ in 0..n {
        for i in (1..coeffs.len()).rev() {
            coeffs[i] = coeffs[i].clone() - coeffs[i - 1].clone();
        }
    }
}

pub(crate) fn from_usize<T: Clone + Num>(n: usize) -> T {
    let mut acc = T::zero();
    let mut bit = T::one();
    let mut n = n;
    while n > 0 {
        if n & 1 == 1 {
            acc = acc + bit.clone();
        }
        bit = bit.clone() + bit;
        n >>= 1;
    }
    acc
}

/// Coefficients `gamma_j` with `p(x) = sum_j gamma_j x^j (1+x)^(n-2j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaVector<T> {
    pub gammas: Vec<T>,
    pub center: usize,
}

impl<T: Clone + Num> GammaVector<T> {
    pub fn reconstruct(&self) -> Polynomial<T> {
        self.gammas
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .fold(Polynomial::zero(), |acc, (j, g)| {
                let term = Polynomial::one_plus_x_power(self.center - 2 * j)
                    .shift(j)
                    .scale(g);
                &acc + &term
            })
    }
}

impl<T: Clone + Num + Signed> GammaVector<T> {
    /// Strictly positive up to the last nonzero entry.
    pub fn is_positive(&self) -> bool {
        match self.gammas.iter().rposition(|g| !g.is_zero()) {
            Some(last) => self.gammas[..=last].iter().all(|g| g.is_positive()),
            None => false,
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.gammas.iter().all(|g| !g.is_negative())
    }
}

/// Auditable gamma-positivity verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaReport<T> {
    pub palindromic: bool,
    pub gamma: Option<GammaVector<T>>,
    pub positive: bool,
}

pub fn gamma_report<T: Clone + Num + Signed>(p: &Polynomial<T>, n: usize) -> GammaReport<T> {
    match p.gamma_decompose(n) {
        Ok(g) => GammaReport {
            palindromic: true,
            positive: g.is_positive(),
            gamma: Some(g),
        },
        Err(_) => GammaReport {
            palindromic: false,
            gamma: None,
            positive: false,
        },
    }
}

impl<T: Clone + Num> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Clone + Num> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Clone + Num> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl<T: Clone + Num> Add for Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        &self + &rhs
    }
}

impl<T: Clone + Num> Sub for Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        &self - &rhs
    }
}

impl<T: Clone + Num> Mul for Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        &self * &rhs
    }
}

impl<T: Clone + Num + Neg<Output = T>> Neg for Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::from_coeffs(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<T: Clone + Num + Signed + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                _ if unit => {}
                _ => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

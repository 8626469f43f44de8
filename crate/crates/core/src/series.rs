//! Truncated power series with an explicit, checked order.

use num_traits::Num;

use crate::error::{Error, Result};
use crate::poly::{difference_passes, from_usize, Polynomial};

/// Coefficients of `x^0 .. x^order`; anything past `order` is unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Num> TruncatedSeries<T> {
    /// Series known through `x^order`, coefficient `i` given by `f(i)`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> T) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// `coeffs.len() - 1` becomes the order; empty input is rejected.
    pub fn from_coeffs(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::TruncationTooShort {
                order: 0,
                needed: 0,
            });
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// `1 / (1 - x)` through `x^order`.
    pub fn geometric(order: usize) -> Self {
        Self::from_fn(order, |_| T::one())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, or `None` past the truncation order.
    pub fn coeff(&self, i: usize) -> Option<&T> {
        self.coeffs.get(i)
    }

    /// `b`-fold formal derivative; the order drops by `b`.
    pub fn derivative(&self, b: usize) -> Result<Self> {
        if b > self.order() {
            return Err(Error::TruncationTooShort {
                order: self.order(),
                needed: b,
            });
        }
        let coeffs = (0..self.coeffs.len() - b)
            .map(|i| {
                let mut c = self.coeffs[i + b].clone();
                for t in 1..=b {
                    c = c * from_usize::<T>(i + t);
                }
                c
            })
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    /// Multiply by `x^a`; the order grows by `a`.
    pub fn shift(&self, a: usize) -> Self {
        let mut coeffs = vec![T::zero(); a];
        coeffs.extend(self.coeffs.iter().cloned());
        TruncatedSeries { coeffs }
    }

    /// Product with `(1 - x)^n`; the order is unchanged.
    pub fn scale_by_one_minus_x_power(&self, n: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        difference_passes(&mut coeffs, n);
        TruncatedSeries { coeffs }
    }

    /// Quotient by `(1 - x)^n` (prefix sums); the order is unchanged.
    pub fn divide_by_one_minus_x_power(&self, n: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        for _ in 0..n {
            for i in 1..coeffs.len() {
                coeffs[i] = coeffs[i].clone() + coeffs[i - 1].clone();
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Read the series as a polynomial of degree at most `degree_bound`.
    ///
    /// Every coefficient from `degree_bound + 1` through the order must be
    /// zero, and at least one such coefficient must exist.
    pub fn to_polynomial(&self, degree_bound: usize) -> Result<Polynomial<T>> {
        if self.order() <= degree_bound {
            return Err(Error::TruncationTooShort {
                order: self.order(),
                needed: degree_bound + 1,
            });
        }
        if let Some(found) = self.coeffs[degree_bound + 1..]
            .iter()
            .position(|c| !c.is_zero())
        {
            return Err(Error::DegreeOverflow {
                found: found + degree_bound + 1,
                bound: degree_bound,
            });
        }
        Ok(Polynomial::from_coeffs(
            self.coeffs[..=degree_bound].to_vec(),
        ))
    }

    /// `(1 - x)^n * self` as a polynomial of degree at most `degree_bound`.
    ///
    /// The order must reach `n + degree_bound` so that the vanishing tail is
    /// actually observed rather than assumed.
    pub fn scale_to_polynomial(&self, n: usize, degree_bound: usize) -> Result<Polynomial<T>> {
        let needed = n + degree_bound;
        if self.order() < needed {
            return Err(Error::TruncationTooShort {
                order: self.order(),
                needed,
            });
        }
        self.scale_by_one_minus_x_power(n)
            .to_polynomial(degree_bound)
    }

    /// Drop every coefficient past `order`.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = (order + 1).min(self.coeffs.len());
        TruncatedSeries {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }
}

impl<T: Clone + Num> From<&Polynomial<T>> for TruncatedSeries<T> {
    /// A polynomial as a series known through its degree.
    fn from(p: &Polynomial<T>) -> Self {
        let mut coeffs = p.coeffs().to_vec();
        if coeffs.is_empty() {
            coeffs.push(T::zero());
        }
        TruncatedSeries { coeffs }
    }
}

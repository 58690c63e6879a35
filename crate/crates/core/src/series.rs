//! Truncated exponential generating functions with exact rational
//! coefficients.
//!
//! A series of order `N` stores `a_0..a_N` where `f(x) = sum a_n x^n/n!`.
//! Truncation order is explicit on every constructor and mixing orders in
//! arithmetic is an error, never a silent promotion.

use num::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Binomial coefficients `C(n, k)` for `n <= max_n`, built as Pascal rows.
fn pascal_rows(max_n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_n + 1);
    rows.push(vec![BigInt::from(1)]);
    for n in 1..=max_n {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        row.push(BigInt::from(1));
        for k in 1..n {
            row.push(&prev[k - 1] + &prev[k]);
        }
        row.push(BigInt::from(1));
        rows.push(row);
    }
    rows
}

/// A truncated EGF: `coeffs[n]` holds `a_n` in `f(x) = sum a_n x^n/n!`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(try_from = "RawSeries")]
pub struct EGFSeries {
    order: usize,
    coeffs: Vec<Rational>,
}

#[derive(Deserialize)]
struct RawSeries {
    order: usize,
    coeffs: Vec<Rational>,
}

impl TryFrom<RawSeries> for EGFSeries {
    type Error = Error;
    fn try_from(raw: RawSeries) -> Result<Self> {
        EGFSeries::new(raw.order, raw.coeffs)
    }
}

impl<'de> Deserialize<'de> for EGFSeries {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = RawSeries::deserialize(deserializer)?;
        EGFSeries::try_from(raw).map_err(serde::de::Error::custom)
    }
}

impl EGFSeries {
    /// Build a series of the given order; `coeffs` must have `order + 1` entries.
    pub fn new(order: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != order + 1 {
            return Err(Error::CoefficientCount {
                order,
                got: coeffs.len(),
            });
        }
        Ok(EGFSeries { order, coeffs })
    }

    /// The zero series.
    pub fn zero(order: usize) -> Self {
        EGFSeries {
            order,
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// The series `x` (a_1 = 1).
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn check_order(&self, other: &EGFSeries) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    /// Coefficientwise sum; orders must match.
    pub fn add(&self, other: &EGFSeries) -> Result<EGFSeries> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(EGFSeries {
            order: self.order,
            coeffs,
        })
    }

    /// EGF product: `c_n = sum_k C(n,k) a_k b_{n-k}`, truncated at the shared order.
    #[allow(clippy::needless_range_loop)]
    pub fn mul(&self, other: &EGFSeries) -> Result<EGFSeries> {
        self.check_order(other)?;
        let binom = pascal_rows(self.order);
        let mut coeffs = Vec::with_capacity(self.order + 1);
        for n in 0..=self.order {
            let mut c = Rational::zero();
            for k in 0..=n {
                let term = &self.coeffs[k] * &other.coeffs[n - k];
                c += &(&Rational::from(&binom[n][k]) * &term);
            }
            coeffs.push(c);
        }
        Ok(EGFSeries {
            order: self.order,
            coeffs,
        })
    }

    /// Exponential of a series with vanishing constant term, via the
    /// triangular recursion `g_{n+1} = sum_k C(n,k) f_{k+1} g_{n-k}`.
    pub fn exp(&self) -> Result<EGFSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpNonzeroConstant);
        }
        let binom = pascal_rows(self.order);
        let mut g = vec![Rational::one()];
        for n in 0..self.order {
            let mut next = Rational::zero();
            for k in 0..=n {
                let term = &self.coeffs[k + 1] * &g[n - k];
                next += &(&Rational::from(&binom[n][k]) * &term);
            }
            g.push(next);
        }
        Ok(EGFSeries {
            order: self.order,
            coeffs: g,
        })
    }

    /// Inverse of [`exp`](Self::exp) for series with constant term 1, by
    /// inverting the same triangular recursion.
    pub fn log(&self) -> Result<EGFSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogConstantNotOne);
        }
        let binom = pascal_rows(self.order);
        let g = &self.coeffs;
        let mut f = vec![Rational::zero(); self.order + 1];
        for n in 0..self.order {
            // g_{n+1} = f_{n+1} + sum_{k<n} C(n,k) f_{k+1} g_{n-k}
            let mut rest = Rational::zero();
            for k in 0..n {
                let term = &f[k + 1] * &g[n - k];
                rest += &(&Rational::from(&binom[n][k]) * &term);
            }
            f[n + 1] = &g[n + 1] - &rest;
        }
        Ok(EGFSeries {
            order: self.order,
            coeffs: f,
        })
    }
}

/// A y-truncated polynomial whose coefficients are x-series: entry `s` holds
/// the series multiplying `y^s/s!`. All entries share one x-order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivariatePoly {
    yorder: usize,
    coeffs: Vec<EGFSeries>,
}

impl BivariatePoly {
    pub fn new(coeffs: Vec<EGFSeries>) -> Result<Self> {
        let first = coeffs.first().ok_or(Error::EmptyBivariate)?;
        let xorder = first.order();
        for c in &coeffs {
            if c.order() != xorder {
                return Err(Error::OrderMismatch {
                    left: xorder,
                    right: c.order(),
                });
            }
        }
        Ok(BivariatePoly {
            yorder: coeffs.len() - 1,
            coeffs,
        })
    }

    /// Embed a pure y-series (given as EGF coefficients) with no x-dependence.
    pub fn from_y_series(y_coeffs: &[Rational], xorder: usize) -> Result<Self> {
        if y_coeffs.is_empty() {
            return Err(Error::EmptyBivariate);
        }
        let coeffs = y_coeffs
            .iter()
            .map(|c| {
                let mut s = EGFSeries::zero(xorder);
                s.coeffs[0] = c.clone();
                s
            })
            .collect();
        Ok(BivariatePoly {
            yorder: y_coeffs.len() - 1,
            coeffs,
        })
    }

    pub fn yorder(&self) -> usize {
        self.yorder
    }

    pub fn xorder(&self) -> usize {
        self.coeffs[0].order()
    }

    pub fn coeff(&self, s: usize) -> &EGFSeries {
        &self.coeffs[s]
    }
}

/// Apply `exp(sum_m L_m x^m/m! d^m/dy^m)` to `G(x, y)` and evaluate at `y = 0`,
/// truncated at the x-order of `G`'s coefficients.
///
/// `d/dy` maps the basis element `y^s/s!` to `y^{s-1}/(s-1)!`, so the operator
/// applied to `y^s/s!` and evaluated at 0 contributes `x^s [x^s] exp(l(x))`
/// with `l(x) = sum L_m x^m/m!`. Writing `b = exp-EGF of L`, the result is
/// `H_n = sum_s b_s C(n,s) (g_s)_{n-s}`.
#[allow(clippy::needless_range_loop)]
pub fn apply_diff_operator(weights: &[Rational], g: &BivariatePoly) -> Result<EGFSeries> {
    let n_target = g.xorder();
    if g.yorder() < n_target {
        return Err(Error::InsufficientYOrder {
            yorder: g.yorder(),
            required: n_target,
        });
    }
    if weights.len() < n_target {
        return Err(Error::MissingWeight {
            which: "L",
            degree: weights.len() + 1,
        });
    }
    let mut l_coeffs = Vec::with_capacity(n_target + 1);
    l_coeffs.push(Rational::zero());
    l_coeffs.extend(weights.iter().take(n_target).cloned());
    let b = EGFSeries::new(n_target, l_coeffs)?.exp()?;

    let binom = pascal_rows(n_target);
    let mut coeffs = Vec::with_capacity(n_target + 1);
    for n in 0..=n_target {
        let mut h = Rational::zero();
        for s in 0..=n {
            let term = b.coeff(s) * g.coeff(s).coeff(n - s);
            h += &(&Rational::from(&binom[n][s]) * &term);
        }
        coeffs.push(h);
    }
    EGFSeries::new(n_target, coeffs)
}

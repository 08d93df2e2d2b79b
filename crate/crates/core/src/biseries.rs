//! Bivariate power series with rectangular truncation.
//!
//! Coefficient `(i, j)` is `[xⁱ yʲ]` for `0 ≤ i ≤ N`, `0 ≤ j ≤ M`. Products
//! truncated to a rectangle are exact because a coefficient only depends on
//! coefficients with smaller or equal indices in both variables.

use num_traits::{One, Zero};

use crate::arith::{self, Integer, Rational};
use crate::error::{Error, Result};
use crate::series::ExactSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    // row-major: rows indexed by the first variable
    coeffs: Vec<Vec<Rational>>,
    orders: (usize, usize),
}

impl BiSeries {
    pub fn zero(orders: (usize, usize)) -> Self {
        BiSeries {
            coeffs: vec![vec![Rational::zero(); orders.1 + 1]; orders.0 + 1],
            orders,
        }
    }

    pub fn one(orders: (usize, usize)) -> Self {
        Self::monomial(Rational::one(), 0, 0, orders)
    }

    pub fn monomial(c: Rational, i: usize, j: usize, orders: (usize, usize)) -> Self {
        let mut s = Self::zero(orders);
        if i <= orders.0 && j <= orders.1 {
            s.coeffs[i][j] = c;
        }
        s
    }

    pub fn from_fn(orders: (usize, usize), mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        BiSeries {
            coeffs: (0..=orders.0)
                .map(|i| (0..=orders.1).map(|j| f(i, j)).collect())
                .collect(),
            orders,
        }
    }

    /// Embeds a univariate series in the first variable.
    pub fn from_first(s: &ExactSeries, m: usize) -> Self {
        Self::from_fn((s.order(), m), |i, j| if j == 0 { s.coeff(i).clone() } else { Rational::zero() })
    }

    pub fn orders(&self) -> (usize, usize) {
        self.orders
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Rational {
        assert!(
            i <= self.orders.0 && j <= self.orders.1,
            "coefficient ({i}, {j}) outside truncation {:?}",
            self.orders
        );
        &self.coeffs[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().flatten().all(arith::is_integral)
    }

    pub fn truncate(&self, orders: (usize, usize)) -> Self {
        assert!(orders.0 <= self.orders.0 && orders.1 <= self.orders.1);
        Self::from_fn(orders, |i, j| self.coeffs[i][j].clone())
    }

    fn common(&self, rhs: &Self) -> (usize, usize) {
        (self.orders.0.min(rhs.orders.0), self.orders.1.min(rhs.orders.1))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::from_fn(self.common(rhs), |i, j| &self.coeffs[i][j] + &rhs.coeffs[i][j])
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::from_fn(self.common(rhs), |i, j| &self.coeffs[i][j] - &rhs.coeffs[i][j])
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_fn(self.orders, |i, j| &self.coeffs[i][j] * c)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (n, m) = self.common(rhs);
        let mut out = Self::zero((n, m));
        for i1 in 0..=n {
            for j1 in 0..=m {
                let a = &self.coeffs[i1][j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=n - i1 {
                    for j2 in 0..=m - j1 {
                        let b = &rhs.coeffs[i2][j2];
                        if !b.is_zero() {
                            out.coeffs[i1 + i2][j1 + j2] += a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Multiplication by xᵃ yᵇ; both orders rise accordingly.
    pub fn mul_monomial(&self, a: usize, b: usize) -> Self {
        let orders = (self.orders.0 + a, self.orders.1 + b);
        Self::from_fn(orders, |i, j| {
            if i >= a && j >= b {
                self.coeffs[i - a][j - b].clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// ∂/∂x; the first order drops by one.
    pub fn derivative_first(&self) -> Self {
        assert!(self.orders.0 > 0);
        Self::from_fn((self.orders.0 - 1, self.orders.1), |i, j| {
            &self.coeffs[i + 1][j] * Rational::from_integer(Integer::from(i + 1))
        })
    }

    /// ∂/∂y; the second order drops by one.
    pub fn derivative_second(&self) -> Self {
        assert!(self.orders.1 > 0);
        Self::from_fn((self.orders.0, self.orders.1 - 1), |i, j| {
            &self.coeffs[i][j + 1] * Rational::from_integer(Integer::from(j + 1))
        })
    }

    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0][0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = a0.recip();
        let (n, m) = self.orders;
        let mut out = Self::zero((n, m));
        for i in 0..=n {
            for j in 0..=m {
                if i == 0 && j == 0 {
                    out.coeffs[0][0] = inv0.clone();
                    continue;
                }
                let mut acc = Rational::zero();
                for i1 in 0..=i {
                    for j1 in 0..=j {
                        if i1 == 0 && j1 == 0 {
                            continue;
                        }
                        let a = &self.coeffs[i1][j1];
                        if !a.is_zero() {
                            acc += a * &out.coeffs[i - i1][j - j1];
                        }
                    }
                }
                out.coeffs[i][j] = -acc * &inv0;
            }
        }
        Ok(out)
    }

    /// `outer(self)` for a univariate outer series.
    ///
    /// The inner series must have zero constant term. If every monomial of
    /// the inner series has x-degree ≥ a, y-degree ≥ b and total degree ≥ t,
    /// then innerᵏ misses the rectangle once k·a > N, k·b > M or k·t > N + M,
    /// so only the outer terms below that bound are needed, and the outer
    /// series must be known to it.
    pub fn compose_into(&self, outer: &ExactSeries) -> Result<Self> {
        if !self.coeffs[0][0].is_zero() {
            return Err(Error::NonzeroConstantTerm(arith::format_rational(&self.coeffs[0][0])));
        }
        let (n, m) = self.orders;
        let support = || {
            (0..=n).flat_map(move |i| (0..=m).map(move |j| (i, j))).filter(|&(i, j)| !self.coeffs[i][j].is_zero())
        };
        let Some(t) = support().map(|(i, j)| i + j).min() else {
            return Ok(Self::monomial(outer.coeff(0).clone(), 0, 0, self.orders));
        };
        let a = support().map(|(i, _)| i).min().unwrap_or(0);
        let b = support().map(|(_, j)| j).min().unwrap_or(0);
        let mut top = (n + m) / t;
        if let Some(q) = n.checked_div(a) {
            top = top.min(q);
        }
        if let Some(q) = m.checked_div(b) {
            top = top.min(q);
        }
        if outer.order() < top {
            return Err(Error::InvalidParameter(format!(
                "outer series order {} is below the {} needed for orders {:?}",
                outer.order(),
                top,
                self.orders
            )));
        }
        let mut acc = Self::monomial(outer.coeff(top).clone(), 0, 0, self.orders);
        for k in (0..top).rev() {
            acc = acc.mul(self);
            acc.coeffs[0][0] += outer.coeff(k);
        }
        Ok(acc)
    }

    /// Substitutes a univariate series with zero constant term for the first
    /// variable: Σ c(i,j) inner(x)ⁱ yʲ. The first order becomes
    /// `min(N_inner, N)` when the inner valuation is at least one.
    pub fn substitute_first(&self, inner: &ExactSeries) -> Result<Self> {
        if !inner.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm(arith::format_rational(inner.constant_term())));
        }
        let n = inner.order().min(self.orders.0);
        let m = self.orders.1;
        let inner = inner.truncate(n);
        let mut out = Self::zero((n, m));
        let mut power = ExactSeries::one(n);
        for i in 0..=n {
            for j in 0..=m {
                let c = &self.coeffs[i][j];
                if c.is_zero() {
                    continue;
                }
                for (k, p) in power.coeffs().iter().enumerate() {
                    if !p.is_zero() {
                        out.coeffs[k][j] += c * p;
                    }
                }
            }
            power = power.mul(&inner);
        }
        Ok(out)
    }

    /// Σⱼ c(i, j) for each i, the y = 1 specialization. Exact only when the
    /// coefficients vanish for j > M, e.g. when c(i, j) = 0 for j > i and M ≥ N.
    pub fn sum_over_second(&self) -> ExactSeries {
        ExactSeries::from_fn(self.orders.0, |i| {
            self.coeffs[i].iter().fold(Rational::zero(), |acc, c| acc + c)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;

    #[test]
    fn reciprocal_of_one_plus_x_minus_xy() {
        let s = BiSeries::from_fn((4, 4), |i, j| match (i, j) {
            (0, 0) | (1, 0) => rat_int(1),
            (1, 1) => rat_int(-1),
            _ => rat_int(0),
        });
        let r = s.reciprocal().unwrap();
        assert_eq!(s.mul(&r), BiSeries::one((4, 4)));
        // 1/(1 + x(1−y)) = Σ (−x)^k (1−y)^k
        assert_eq!(*r.coeff(2, 1), rat_int(-2));
        assert_eq!(*r.coeff(3, 3), rat_int(1));
    }

    #[test]
    fn compose_geometric_into_xy() {
        let geo = ExactSeries::from_integers(&[1, -1], 10).reciprocal().unwrap();
        let xy = BiSeries::monomial(rat_int(1), 1, 1, (5, 5));
        let got = xy.compose_into(&geo).unwrap();
        for i in 0..=5 {
            for j in 0..=5 {
                assert_eq!(*got.coeff(i, j), rat_int((i == j) as i64));
            }
        }
    }

    #[test]
    fn monomial_shift_and_derivatives() {
        let s = BiSeries::monomial(rat_int(3), 2, 1, (4, 4));
        assert_eq!(*s.derivative_first().coeff(1, 1), rat_int(6));
        assert_eq!(*s.derivative_second().coeff(2, 0), rat_int(3));
        assert_eq!(*s.mul_monomial(1, 2).coeff(3, 3), rat_int(3));
    }
}

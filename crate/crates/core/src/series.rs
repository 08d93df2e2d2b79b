//! Truncated univariate power series with exact rational coefficients.
//!
//! A series carries its truncation order `N` explicitly: coefficients
//! `0..=N` are exact and nothing beyond `N` is claimed. Every operation
//! propagates the order so that it never reports a coefficient it cannot
//! guarantee:
//!
//! * sums and products have order `min(N_a, N_b)`;
//! * `outer ∘ inner` has order `N_inner`, lowered further only when the
//!   outer series is too short to determine it (see [`ExactSeries::compose`]);
//! * differentiation lowers the order by one, integration raises it by one.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::arith::{self, Integer, Rational};
use crate::error::{Error, Result};
use crate::poly::ExactPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactSeries {
    coeffs: Vec<Rational>,
    order: usize,
}

impl ExactSeries {
    /// Builds a series from its leading coefficients, padding with zeros or
    /// dropping entries so that exactly `order + 1` are kept.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        ExactSeries { coeffs, order }
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| arith::rat_int(c)).collect(), order)
    }

    pub fn from_big_integers(coeffs: impl IntoIterator<Item = Integer>, order: usize) -> Self {
        Self::new(coeffs.into_iter().map(Rational::from_integer).collect(), order)
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        ExactSeries {
            coeffs: (0..=order).map(f).collect(),
            order,
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// The series `z`.
    pub fn variable(order: usize) -> Self {
        Self::monomial(Rational::one(), 1, order)
    }

    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_poly(p: &ExactPoly, order: usize) -> Self {
        Self::new(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `[zⁱ]` of the series. Panics when `i` exceeds the truncation order,
    /// because that coefficient is unknown.
    pub fn coeff(&self, i: usize) -> &Rational {
        assert!(
            i <= self.order,
            "coefficient {i} requested from a series truncated at order {}",
            self.order
        );
        &self.coeffs[i]
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(arith::is_integral)
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Integer coefficients, if every coefficient is integral.
    pub fn to_integers(&self) -> Option<Vec<Integer>> {
        self.coeffs
            .iter()
            .map(|c| arith::is_integral(c).then(|| c.to_integer()))
            .collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot raise truncation order {} to {order}", self.order);
        Self::new(self.coeffs[..=order].to_vec(), order)
    }

    /// The polynomial Σ_{i≤N} cᵢ zⁱ (discarding the truncation information).
    pub fn to_poly(&self) -> ExactPoly {
        ExactPoly::new(self.coeffs.clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        Self::from_fn(order, |i| &self.coeffs[i] + &rhs.coeffs[i])
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        Self::from_fn(order, |i| &self.coeffs[i] - &rhs.coeffs[i])
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.order, |i| -&self.coeffs[i])
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_fn(self.order, |i| &self.coeffs[i] * c)
    }

    /// Cauchy product truncated to `min(N_a, N_b)`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        // Clear denominators once so the O(N²) inner loop is pure integer work.
        let (a, da) = integer_parts(&self.coeffs[..=order]);
        let (b, db) = integer_parts(&rhs.coeffs[..=order]);
        let a_nz: Vec<usize> = (0..=order).filter(|&i| !a[i].is_zero()).collect();
        let mut out = vec![Integer::zero(); order + 1];
        for j in 0..=order {
            if b[j].is_zero() {
                continue;
            }
            for &i in &a_nz {
                if i + j > order {
                    break;
                }
                out[i + j] += &a[i] * &b[j];
            }
        }
        let den = da * db;
        ExactSeries {
            coeffs: out.into_iter().map(|c| Rational::new(c, den.clone())).collect(),
            order,
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.order);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplication by zᵏ; the order rises by `k`.
    pub fn mul_z_pow(&self, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs, self.order + k)
    }

    /// Exact division by zᵏ; the order drops by `k`. Fails when one of the
    /// low coefficients is nonzero.
    pub fn div_z_pow(&self, k: usize) -> Result<Self> {
        if k > self.order {
            return Err(Error::InvalidParameter(format!(
                "cannot divide a series of order {} by z^{k}",
                self.order
            )));
        }
        if let Some(i) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(Error::invariant(
                "div_z_pow",
                format!("coefficient of z^{i} is {} , not zero", self.coeffs[i]),
            ));
        }
        Ok(Self::new(self.coeffs[k..].to_vec(), self.order - k))
    }

    /// Formal derivative; the order drops by one. Panics on an order-0 series,
    /// whose derivative has no known coefficient.
    pub fn derivative(&self) -> Self {
        assert!(self.order > 0, "derivative of an order-0 series is undetermined");
        Self::from_fn(self.order - 1, |i| {
            &self.coeffs[i + 1] * Rational::from_integer(Integer::from(i + 1))
        })
    }

    /// Antiderivative with zero constant term; the order rises by one.
    pub fn integrate(&self) -> Self {
        Self::from_fn(self.order + 1, |i| {
            if i == 0 {
                Rational::zero()
            } else {
                &self.coeffs[i - 1] / Rational::from_integer(Integer::from(i))
            }
        })
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = a0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.order + 1);
        out.push(inv0.clone());
        for n in 1..=self.order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc += a * &out[n - k];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(ExactSeries { coeffs: out, order: self.order })
    }

    /// Quotient `self / rhs`, truncated to `min(N_a, N_b)`.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.reciprocal()?))
    }

    /// `self(inner(z))`.
    ///
    /// The inner series must have zero constant term. The result has order
    /// `N_inner` whenever the outer series is known far enough; if the outer
    /// series has order `N_outer` and the inner series has valuation `v`, terms
    /// from z^{(N_outer+1)·v} on would need unknown outer coefficients, so the
    /// order is capped at `(N_outer + 1)·v − 1`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm(arith::format_rational(&inner.coeffs[0])));
        }
        let Some(v) = inner.valuation() else {
            return Ok(Self::constant(self.coeffs[0].clone(), inner.order));
        };
        let order = inner.order.min((self.order + 1) * v - 1);
        let inner = inner.truncate(order);
        // Only outer terms k with k·v ≤ order contribute.
        let top = (order / v).min(self.order);
        let mut acc = Self::constant(self.coeffs[top].clone(), order);
        for k in (0..top).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Square root with constant term 1, by Newton's iteration
    /// r ← (r + a/r)/2, doubling the number of correct coefficients each round.
    pub fn sqrt(&self) -> Result<Self> {
        self.check_unit_constant()?;
        let half = arith::rat(1, 2);
        let mut r = Self::one(0);
        let mut known = 0usize;
        while known < self.order {
            known = (2 * known + 1).min(self.order);
            let r_ext = Self::new(r.coeffs.clone(), known);
            let a = self.truncate(known);
            r = r_ext.add(&a.div(&r_ext)?).scale(&half);
        }
        Ok(Self::new(r.coeffs, self.order))
    }

    /// Square root with constant term 1 via the binomial series
    /// √(1 + h) = Σₖ binom(1/2, k) hᵏ. Independent of [`sqrt`](Self::sqrt).
    pub fn sqrt_binomial(&self) -> Result<Self> {
        self.check_unit_constant()?;
        let h = self.sub(&Self::one(self.order));
        let half = arith::rat(1, 2);
        let outer = Self::from_fn(self.order, |k| arith::binomial_rational(&half, k as u64));
        if h.is_zero() {
            return Ok(Self::one(self.order));
        }
        outer.compose(&h)
    }

    fn check_unit_constant(&self) -> Result<()> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SqrtConstantTerm(arith::format_rational(&self.coeffs[0])));
        }
        Ok(())
    }
}

/// Splits rationals into integer numerators over their least common denominator.
fn integer_parts(values: &[Rational]) -> (Vec<Integer>, Integer) {
    let den = arith::common_denominator(values);
    let nums = values
        .iter()
        .map(|r| {
            if r.denom() == &den {
                r.numer().clone()
            } else {
                r.numer() * den.div_floor(r.denom())
            }
        })
        .collect();
    (nums, den)
}

impl fmt::Display for ExactSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self.to_poly();
        if body.is_zero() {
            write!(f, "O(z^{})", self.order + 1)
        } else {
            write!(f, "{body} + O(z^{})", self.order + 1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    #[test]
    fn difference_of_squares() {
        let a = ExactSeries::from_integers(&[1, 1], 2);
        let b = ExactSeries::from_integers(&[1, -1], 2);
        assert_eq!(a.mul(&b), ExactSeries::from_integers(&[1, 0, -1], 2));
    }

    #[test]
    fn zero_absorbs() {
        let a = ExactSeries::from_integers(&[3, 1, 4, 1, 5], 4);
        assert!(ExactSeries::zero(4).mul(&a).is_zero());
    }

    #[test]
    fn product_order_is_minimum() {
        let a = ExactSeries::from_integers(&[1, 1], 7);
        let b = ExactSeries::from_integers(&[1, 1], 3);
        assert_eq!(a.mul(&b).order(), 3);
        assert_eq!(a.add(&b).order(), 3);
    }

    #[test]
    fn geometric_substitution() {
        let geo = ExactSeries::from_integers(&[1, -1], 10).reciprocal().unwrap();
        let z2 = ExactSeries::monomial(rat_int(1), 2, 10);
        let got = geo.compose(&z2).unwrap();
        assert_eq!(got, ExactSeries::from_integers(&[1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1], 10));
    }

    #[test]
    fn compose_with_identity() {
        let a = ExactSeries::new(vec![rat(1, 2), rat_int(3), rat(-2, 7), rat_int(5)], 6);
        assert_eq!(a.compose(&ExactSeries::variable(6)).unwrap(), a);
    }

    #[test]
    fn compose_rejects_constant_term() {
        let a = ExactSeries::one(4);
        let err = a.compose(&ExactSeries::one(4)).unwrap_err();
        assert!(matches!(err, Error::NonzeroConstantTerm(_)));
    }

    #[test]
    fn compose_order_capped_by_short_outer() {
        let outer = ExactSeries::from_integers(&[1, 1], 1);
        let inner = ExactSeries::variable(10);
        assert_eq!(outer.compose(&inner).unwrap().order(), 1);
        let inner = ExactSeries::monomial(rat_int(1), 3, 10);
        assert_eq!(outer.compose(&inner).unwrap().order(), 5);
    }

    #[test]
    fn sqrt_of_one_minus_four_z() {
        let a = ExactSeries::from_integers(&[1, -4], 30);
        let r = a.sqrt().unwrap();
        assert_eq!(
            &r.coeffs()[..5],
            &[rat_int(1), rat_int(-2), rat_int(-2), rat_int(-4), rat_int(-10)]
        );
        assert_eq!(r.mul(&r), a);
        assert_eq!(r, a.sqrt_binomial().unwrap());
    }

    #[test]
    fn sqrt_of_one() {
        assert_eq!(ExactSeries::one(5).sqrt().unwrap(), ExactSeries::one(5));
        assert_eq!(ExactSeries::one(5).sqrt_binomial().unwrap(), ExactSeries::one(5));
        assert_eq!(ExactSeries::one(0).sqrt().unwrap(), ExactSeries::one(0));
    }

    #[test]
    fn sqrt_rejects_bad_constant() {
        let a = ExactSeries::from_integers(&[4, 1], 3);
        assert!(matches!(a.sqrt(), Err(Error::SqrtConstantTerm(_))));
        assert!(matches!(a.sqrt_binomial(), Err(Error::SqrtConstantTerm(_))));
    }

    #[test]
    fn reciprocal_of_one_minus_z() {
        let r = ExactSeries::from_integers(&[1, -1], 8).reciprocal().unwrap();
        assert_eq!(r, ExactSeries::from_integers(&[1; 9], 8));
        assert_eq!(ExactSeries::variable(3).reciprocal(), Err(Error::NotInvertible));
    }

    #[test]
    fn shifts() {
        let a = ExactSeries::from_integers(&[0, 0, 1, 2], 5);
        let b = a.div_z_pow(2).unwrap();
        assert_eq!(b, ExactSeries::from_integers(&[1, 2], 3));
        assert_eq!(b.mul_z_pow(2), a);
        assert!(ExactSeries::from_integers(&[0, 1], 5).div_z_pow(2).is_err());
    }

    #[test]
    fn rational_coefficients_in_products() {
        let a = ExactSeries::new(vec![rat(1, 2), rat(1, 3)], 3);
        let b = ExactSeries::new(vec![rat(2, 5), rat_int(0), rat(3, 4)], 3);
        let p = a.mul(&b);
        assert_eq!(p.coeffs(), &[rat(1, 5), rat(2, 15), rat(3, 8), rat(1, 4)]);
        for c in p.coeffs() {
            assert!(c.numer().gcd(c.denom()).is_one());
        }
    }
}

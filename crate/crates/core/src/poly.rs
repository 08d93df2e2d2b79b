//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{self, Integer, Rational};

/// A polynomial Σ cₖ zᵏ with exact rational coefficients.
///
/// The coefficient vector never has a trailing zero, so the zero polynomial is
/// the empty vector and `degree()` is `None` for it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExactPoly {
    coeffs: Vec<Rational>,
}

impl ExactPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactPoly { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| arith::rat_int(c)).collect())
    }

    pub fn from_big_integers(coeffs: impl IntoIterator<Item = Integer>) -> Self {
        Self::new(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    pub fn zero() -> Self {
        ExactPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// c·zᵏ
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The polynomial `shift + scale·z`.
    pub fn linear(shift: Rational, scale: Rational) -> Self {
        Self::new(vec![shift, scale])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// True when every coefficient has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(arith::is_integral)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(Integer::from(k)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by zᵏ.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// Exact division by zᵏ; `None` if any of the low `k` coefficients is nonzero.
    pub fn div_z_pow(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// self(inner(z)) by Horner's rule.
    pub fn compose(&self, inner: &ExactPoly) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// The polynomial p(z + by); used for the shift z ↦ z − 1.
    pub fn translate(&self, by: &Rational) -> Self {
        self.compose(&Self::linear(by.clone(), Rational::one()))
    }

    /// Coefficients qₖ with self(z) = Σₖ qₖ·(shift + scale·z)ᵏ.
    ///
    /// With `scale = −4`, `shift = 1` this rewrites a polynomial in powers of
    /// (1 − 4z), which is how partial fractions over a single repeated linear
    /// factor are read off.
    ///
    /// Panics if `scale` is zero and the polynomial is not constant.
    pub fn in_shifted_basis(&self, scale: &Rational, shift: &Rational) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        assert!(!scale.is_zero(), "affine basis needs a nonzero scale");
        // z = (w − shift)/scale, expanded in w.
        let inv = scale.recip();
        let z_of_w = Self::linear(-(shift * &inv), inv);
        self.compose(&z_of_w)
    }

    /// Inverse of [`in_shifted_basis`](Self::in_shifted_basis): evaluates
    /// Σₖ qₖ·(shift + scale·z)ᵏ back in the monomial basis.
    pub fn from_shifted_basis(basis_coeffs: &ExactPoly, scale: &Rational, shift: &Rational) -> Self {
        basis_coeffs.compose(&Self::linear(shift.clone(), scale.clone()))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &ExactPoly) -> (ExactPoly, ExactPoly) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); n - d];
        for k in (0..n - d).rev() {
            let c = &rem[k + d] / &lead;
            if !c.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    pub fn gcd(&self, other: &ExactPoly) -> ExactPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> ExactPoly {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.leading_coeff().recip())
    }

    /// Sign of the value at `x` (−1, 0 or 1).
    pub fn sign_at(&self, x: &Rational) -> i32 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let coeff = arith::format_rational(&mag);
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{coeff}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{coeff}z")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{coeff}z^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ExactPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ExactPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        if self.is_zero() || rhs.is_zero() {
            return ExactPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ExactPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ExactPoly {
            type Output = ExactPoly;
            fn $m(self, rhs: ExactPoly) -> ExactPoly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    #[test]
    fn trailing_zeros_are_stripped() {
        let p = ExactPoly::from_integers(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(ExactPoly::from_integers(&[0, 0]).degree(), None);
    }

    #[test]
    fn square_in_one_minus_four_z_basis() {
        // z² = 1/16 − (1/8)(1−4z) + (1/16)(1−4z)²
        let z2 = ExactPoly::monomial(rat_int(1), 2);
        let q = z2.in_shifted_basis(&rat_int(-4), &rat_int(1));
        assert_eq!(q, ExactPoly::new(vec![rat(1, 16), rat(-1, 8), rat(1, 16)]));
        // Oracle: expand the basis sum by hand.
        let w = ExactPoly::from_integers(&[1, -4]);
        let expanded = &(&ExactPoly::constant(rat(1, 16)) + &w.scale(&rat(-1, 8))) + &w.pow(2).scale(&rat(1, 16));
        assert_eq!(expanded, z2);
    }

    #[test]
    fn constant_is_fixed_by_any_basis() {
        let c = ExactPoly::constant(rat(7, 3));
        assert_eq!(c.in_shifted_basis(&rat(5, 2), &rat(-1, 9)), c);
        assert_eq!(ExactPoly::zero().in_shifted_basis(&rat_int(-4), &rat_int(1)), ExactPoly::zero());
    }

    #[test]
    fn translate_and_derivative() {
        let p = ExactPoly::from_integers(&[0, 0, 1]);
        assert_eq!(p.translate(&rat_int(-1)), ExactPoly::from_integers(&[1, -2, 1]));
        assert_eq!(p.derivative(), ExactPoly::from_integers(&[0, 2]));
    }

    #[test]
    fn division_and_gcd() {
        let a = ExactPoly::from_integers(&[-1, 0, 1]); // (z−1)(z+1)
        let b = ExactPoly::from_integers(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, ExactPoly::from_integers(&[1, 1]));
        assert!(r.is_zero());
        let c = ExactPoly::from_integers(&[1, 2, 1]); // (z+1)²
        assert_eq!(a.gcd(&c), ExactPoly::from_integers(&[1, 1]));
    }

    #[test]
    fn display() {
        let p = ExactPoly::from_integers(&[0, 0, 0, 0, 21, 21]);
        assert_eq!(p.to_string(), "21z^5 + 21z^4");
        let q = ExactPoly::new(vec![rat(-1, 2), rat_int(1)]);
        assert_eq!(q.to_string(), "z - 1/2");
    }
}

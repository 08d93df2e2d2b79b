//! Macromolecular diagrams: D_{g,σ}(z) = 1/(u z² − z + 1) · C_g(θ_σ(z)),
//! with u_σ(z) = z^{2σ−2}/(z^{2σ} − z² + 1) and
//! θ_σ(z) = u z²/(u z² − z + 1)².
//!
//! Clearing the inner denominator b = z^{2σ} − z² + 1 gives
//! θ_σ = z^{2σ}·b/(z^{2σ} + (1−z)·b)² and the prefactor
//! b/(z^{2σ} + (1−z)·b), so everything stays a quotient of polynomials
//! until it is expanded.

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{self, Rational};
use crate::error::{Error, Result};
use crate::poly::ExactPoly;
use crate::series::ExactSeries;
use crate::table::GenusTable;

use super::{cg_series, fiber_sum_macromolecular};

/// numerator/denominator with the denominator nonzero at 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: ExactPoly,
    denominator: ExactPoly,
}

impl RationalFunction {
    pub fn new(numerator: ExactPoly, denominator: ExactPoly) -> Result<Self> {
        if denominator.coeff(0).is_zero() {
            return Err(Error::InvalidParameter(format!(
                "denominator {denominator} vanishes at 0, no power series expansion"
            )));
        }
        Ok(RationalFunction { numerator, denominator })
    }

    pub fn numerator(&self) -> &ExactPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &ExactPoly {
        &self.denominator
    }

    pub fn to_series(&self, order: usize) -> ExactSeries {
        ExactSeries::from_poly(&self.numerator, order)
            .div(&ExactSeries::from_poly(&self.denominator, order))
            .expect("denominator is a unit")
    }

    /// Value at `x`; `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.denominator.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.numerator.eval(x) / d)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

fn check_sigma(sigma: usize) -> Result<()> {
    if sigma == 0 {
        return Err(Error::InvalidParameter("sigma must be at least 1".into()));
    }
    Ok(())
}

/// z^{2σ} − z² + 1.
fn stack_denominator(sigma: usize) -> ExactPoly {
    &ExactPoly::from_integers(&[1, 0, -1]) + &ExactPoly::monomial(Rational::one(), 2 * sigma)
}

/// z^{2σ} + (1 − z)(z^{2σ} − z² + 1).
fn outer_denominator(sigma: usize) -> ExactPoly {
    &ExactPoly::monomial(Rational::one(), 2 * sigma)
        + &(&ExactPoly::from_integers(&[1, -1]) * &stack_denominator(sigma))
}

/// u_σ(z) = z^{2σ−2}/(z^{2σ} − z² + 1).
pub fn u_sigma(sigma: usize) -> Result<RationalFunction> {
    check_sigma(sigma)?;
    RationalFunction::new(ExactPoly::monomial(Rational::one(), 2 * sigma - 2), stack_denominator(sigma))
}

/// θ_σ(z) = z^{2σ}(z^{2σ} − z² + 1)/(z^{2σ} + (1−z)(z^{2σ} − z² + 1))².
pub fn theta_sigma(sigma: usize) -> Result<RationalFunction> {
    check_sigma(sigma)?;
    let outer = outer_denominator(sigma);
    RationalFunction::new(
        stack_denominator(sigma).shift_up(2 * sigma),
        &outer * &outer,
    )
}

/// 1/(u_σ z² − z + 1) = (z^{2σ} − z² + 1)/(z^{2σ} + (1−z)(z^{2σ} − z² + 1)).
pub fn prefactor(sigma: usize) -> Result<RationalFunction> {
    check_sigma(sigma)?;
    RationalFunction::new(stack_denominator(sigma), outer_denominator(sigma))
}

/// D_{g,σ}(z) to `order`.
///
/// θ_σ has valuation 2σ, so C_g is only needed to order ⌊order/2σ⌋. At
/// g = 0 the same formula is evaluated, but nothing guarantees it counts
/// genus-0 diagrams.
pub fn dg_sigma_series(g: usize, sigma: usize, order: usize) -> Result<ExactSeries> {
    let theta = theta_sigma(sigma)?.to_series(order);
    let outer = cg_series(g, order / (2 * sigma) + 1);
    let composed = outer.compose(&theta)?;
    debug_assert_eq!(composed.order(), order);
    Ok(prefactor(sigma)?.to_series(order).mul(&composed))
}

/// D_{g,σ}(z) assembled shape by shape from the fiber series and the shape
/// counts in `shapes` (see [`fiber_sum_macromolecular`]).
pub fn dg_fiber_sum(shapes: &GenusTable, g: usize, sigma: usize, order: usize) -> Result<ExactSeries> {
    check_sigma(sigma)?;
    let exact_through = 2 * sigma * (shapes.n_max() + 1) - 1;
    if order > exact_through {
        return Err(Error::InvalidParameter(format!(
            "shapes with up to {} chords determine the series only through z^{exact_through}",
            shapes.n_max()
        )));
    }
    fiber_sum_macromolecular(shapes, g, sigma, order)
}

/// Cleared form of θ_σ(z) = 1/4: 4·z^{2σ}·b − (z^{2σ} + (1−z)b)² with
/// b = z^{2σ} − z² + 1. Its smallest positive root is the dominant
/// singularity of D_{g,σ}.
pub fn singularity_polynomial(sigma: usize) -> Result<ExactPoly> {
    let theta = theta_sigma(sigma)?;
    Ok(&theta.numerator().scale(&arith::rat_int(4)) - theta.denominator())
}

//! The polynomials P_g with C_g(z) = P_g(z)·√(1−4z)/(1−4z)^{3g}.
//!
//! Two constructions that share nothing but the recursion table:
//!
//! - [`pg_direct`] multiplies the series C_g(z) by √(1−4z)^{6g−1} and reads
//!   off a polynomial, insisting that the tail vanishes.
//! - [`pg_pipeline_step`] integrates the differential equation
//!   z(1−4z)C′_{g+1} + (1−2z)C_{g+1} = Φ_g symbolically: derivatives of C_g
//!   are P_{kg}/(1−4z)^{3g−1/2+k}, the forcing term is Q_g/(1−4z)^{3g+5/2},
//!   partial fractions of Q_g/(1−4z)^{3g+4} integrate termwise, and the
//!   integration constant is fixed by C_{g+1}(0) = 0.

use num_traits::{One, Zero};

use crate::arith::{self, Integer, Rational};
use crate::error::{Error, Result};
use crate::poly::ExactPoly;
use crate::recurrences;
use crate::series::ExactSeries;

use super::cg_series;

/// One link of the P_g chain together with the data that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PgRecord {
    pub g: usize,
    pub p: ExactPoly,
    /// P_g / z^{2g}.
    pub r: ExactPoly,
    /// Q_{g−1}, absent for g = 1.
    pub q_prev: Option<ExactPoly>,
    /// Partial-fraction coefficients A_j of Q_{g−1}/(1−4z)^{3g+1}, listed
    /// for j = 2, 3, …, 3g+1; absent for g = 1.
    pub a: Option<Vec<Rational>>,
}

impl PgRecord {
    /// A_j, for 2 ≤ j ≤ 3(g−1)+4.
    pub fn a_j(&self, j: usize) -> Option<&Rational> {
        self.a.as_ref()?.get(j.checked_sub(2)?)
    }

    /// Integral coefficients, degree ≤ 3g−1, divisible by z^{2g} with
    /// nonzero z^{2g} coefficient equal to c_g(2g), P_g(1/4) ≠ 0, R = P/z^{2g}.
    pub fn validate(&self) -> Result<()> {
        let g = self.g;
        let ctx = format!("P_{g}");
        if !self.p.is_integral() {
            return Err(Error::invariant(ctx, format!("non-integral coefficient in {}", self.p)));
        }
        match self.p.degree() {
            Some(d) if d < 3 * g => {}
            d => return Err(Error::invariant(ctx, format!("degree {d:?} exceeds {}", 3 * g - 1))),
        }
        if self.p.valuation() != Some(2 * g) {
            return Err(Error::invariant(
                ctx,
                format!("lowest term is z^{:?}, expected z^{}", self.p.valuation(), 2 * g),
            ));
        }
        if self.p.eval(&arith::rat(1, 4)).is_zero() {
            return Err(Error::invariant(ctx, "vanishes at 1/4"));
        }
        if self.p.div_z_pow(2 * g).as_ref() != Some(&self.r) {
            return Err(Error::invariant(ctx, "R is not P/z^(2g)"));
        }
        let expected = Rational::from_integer(recurrences::cg_at_2g(g));
        if self.r.coeff(0) != expected {
            return Err(Error::invariant(
                ctx,
                format!("R(0) = {} but c_g(2g) = {}", arith::format_rational(&self.r.coeff(0)), expected),
            ));
        }
        if let Some(a) = &self.a {
            if a.len() != 3 * (g - 1) + 3 {
                return Err(Error::invariant(ctx, format!("{} partial-fraction terms", a.len())));
            }
        }
        Ok(())
    }
}

/// C_g(z)·(1 − 2zC_0(z))^{6g−1} truncated at 3g+10; every coefficient past
/// degree 3g−1 must vanish and the rest must be integers.
pub fn pg_direct(g: usize) -> Result<ExactPoly> {
    if g == 0 {
        return Err(Error::InvalidParameter("P_g is defined for g ≥ 1".into()));
    }
    let order = 3 * g + 10;
    let c0 = super::catalan_series(order);
    let root = ExactSeries::one(order).sub(&c0.mul_z_pow(1).truncate(order).scale(&arith::rat_int(2)));
    let product = cg_series(g, order).mul(&root.pow(6 * g as u32 - 1));
    for k in 3 * g..=order {
        if !product.coeff(k).is_zero() {
            return Err(Error::invariant(
                format!("direct P_{g}"),
                format!("coefficient of z^{k} is {}", arith::format_rational(product.coeff(k))),
            ));
        }
    }
    let p = product.to_poly();
    if !p.is_integral() {
        return Err(Error::invariant(format!("direct P_{g}"), format!("non-integral: {p}")));
    }
    Ok(p)
}

/// The g = 1 link: P_1 = z², the solution of the differential equation with
/// Catalan forcing and C_1(0) = 0.
pub fn pg_base() -> PgRecord {
    let p = ExactPoly::monomial(Rational::one(), 2);
    PgRecord { g: 1, r: ExactPoly::one(), p, q_prev: None, a: None }
}

/// Q_g = 4z⁵P_{3g} + 24z⁴(1−4z)P_{2g} + 27z³(1−4z)²P_{1g} + 3z²(1−4z)³P_g,
/// where P_{k+1,g} = (1−4z)P′_{kg} + (12g − 2 + 4k)P_{kg}.
pub fn qg(p: &ExactPoly, g: usize) -> ExactPoly {
    let w = ExactPoly::from_integers(&[1, -4]);
    let lift = |q: &ExactPoly, c: i64| &(&w * &q.derivative()) + &q.scale(&arith::rat_int(c));
    let gi = g as i64;
    let p1 = lift(p, 12 * gi - 2);
    let p2 = lift(&p1, 12 * gi + 2);
    let p3 = lift(&p2, 12 * gi + 6);
    let w2 = &w * &w;
    let w3 = &w2 * &w;
    let term = |c: i64, k: usize, q: &ExactPoly| q.shift_up(k).scale(&arith::rat_int(c));
    &(&(&term(4, 5, &p3) + &(&w * &term(24, 4, &p2))) + &(&w2 * &term(27, 3, &p1))) + &(&w3 * &term(3, 2, p))
}

/// From P_g to P_{g+1}.
pub fn pg_pipeline_step(prev: &PgRecord) -> Result<PgRecord> {
    let g = prev.g;
    let ctx = || format!("step P_{g} -> P_{}", g + 1);
    let q = qg(&prev.p, g);
    let top = 3 * g + 4;
    for k in [top - 1, top] {
        if !q.coeff(k).is_zero() {
            return Err(Error::invariant(ctx(), format!("[z^{k}]Q_{g} = {}", q.coeff(k))));
        }
    }
    // Q = Σ_k q_k (1−4z)^k, so Q/(1−4z)^{3g+4} = Σ_j A_j/(1−4z)^j with
    // A_j = q_{3g+4−j}
    let (scale, shift) = (arith::rat_int(-4), Rational::one());
    let rebased = q.in_shifted_basis(&scale, &shift);
    if ExactPoly::from_shifted_basis(&rebased, &scale, &shift) != q {
        return Err(Error::invariant(ctx(), "rebasis does not round-trip"));
    }
    let a: Vec<Rational> = (2..=top).map(|j| rebased.coeff(top - j)).collect();

    // ∫ A_j/(1−4y)^j dy = A_j/(4(j−1)) ((1−4z)^{1−j} − 1)
    let w = ExactPoly::from_integers(&[1, -4]);
    let mut numerator = ExactPoly::zero();
    let mut constant = Rational::zero();
    for (idx, aj) in a.iter().enumerate() {
        let j = idx + 2;
        let c = aj / Rational::from_integer(Integer::from(4 * (j - 1)));
        numerator = &numerator + &w.pow((top - j) as u32).scale(&c);
        constant -= c;
    }
    // the same constant read from C_{g+1}(0) = 0 on the assembled numerator
    let from_initial = -numerator.coeff(0);
    if from_initial != constant {
        return Err(Error::invariant(
            ctx(),
            format!(
                "integration constants disagree: {} vs {}",
                arith::format_rational(&constant),
                arith::format_rational(&from_initial)
            ),
        ));
    }
    let full = &numerator + &w.pow(top as u32 - 1).scale(&constant);
    if !full.coeff(0).is_zero() {
        return Err(Error::invariant(ctx(), format!("[z^-1]P_{} = {}", g + 1, full.coeff(0))));
    }
    let p = full.div_z_pow(1).expect("constant term is zero");
    let at_quarter = p.eval(&arith::rat(1, 4));
    let expected = &a[top - 2] / Rational::from_integer(Integer::from(3 * g + 3));
    if at_quarter != expected {
        return Err(Error::invariant(ctx(), "P(1/4) differs from A_(3g+4)/(3g+3)"));
    }
    let r = p
        .div_z_pow(2 * g + 2)
        .ok_or_else(|| Error::invariant(ctx(), format!("P_{} is not divisible by z^{}", g + 1, 2 * g + 2)))?;
    let record = PgRecord { g: g + 1, p, r, q_prev: Some(q), a: Some(a) };
    record.validate()?;
    Ok(record)
}

/// P_1, …, P_{g_max} by repeated pipeline steps.
pub fn pg_pipeline(g_max: usize) -> Result<Vec<PgRecord>> {
    if g_max == 0 {
        return Err(Error::InvalidParameter("P_g is defined for g ≥ 1".into()));
    }
    let mut chain = vec![pg_base()];
    while chain.len() < g_max {
        let next = pg_pipeline_step(chain.last().expect("non-empty"))?;
        chain.push(next);
    }
    Ok(chain)
}

/// R_g = P_g/z^{2g}, with R_g(0) = c_g(2g) and R_g(1/4) ≠ 0 asserted.
pub fn rg(g: usize) -> Result<ExactPoly> {
    let record = pg_pipeline(g)?.pop().expect("non-empty chain");
    let r = record.r;
    if r.eval(&arith::rat(1, 4)).is_zero() {
        return Err(Error::invariant(format!("R_{g}"), "vanishes at 1/4"));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn golden(g: usize) -> ExactPoly {
        let (c, k, inner): (i64, usize, &[i64]) = match g {
            1 => (1, 2, &[1]),
            2 => (21, 4, &[1, 1]),
            3 => (11, 6, &[135, 558, 158]),
            4 => (143, 8, &[1575, 13689, 18378, 2339]),
            _ => (88179, 10, &[675, 9660, 28764, 18908, 1354]),
        };
        ExactPoly::from_integers(inner).shift_up(k).scale(&arith::rat_int(c))
    }

    #[test]
    fn pipeline_reproduces_golden_polynomials() {
        let chain = pg_pipeline(5).unwrap();
        for rec in &chain {
            assert_eq!(rec.p, golden(rec.g), "g = {}", rec.g);
        }
    }

    #[test]
    fn direct_matches_pipeline() {
        let chain = pg_pipeline(6).unwrap();
        for rec in &chain {
            assert_eq!(pg_direct(rec.g).unwrap(), rec.p, "g = {}", rec.g);
        }
    }

    #[test]
    fn q_degree_and_partial_fractions() {
        let chain = pg_pipeline(4).unwrap();
        for rec in &chain[1..] {
            let g = rec.g - 1;
            let q = rec.q_prev.as_ref().unwrap();
            assert!(q.degree().unwrap() <= 3 * g + 2);
            assert!(rec.a_j(1).is_none());
            assert!(rec.a_j(3 * g + 4).is_some());
            assert!(rec.a_j(3 * g + 5).is_none());
        }
    }

    #[test]
    fn r_polynomials() {
        assert_eq!(rg(1).unwrap(), ExactPoly::one());
        assert_eq!(rg(2).unwrap(), ExactPoly::from_integers(&[21, 21]));
        for g in 1..=6 {
            assert_eq!(rg(g).unwrap().coeff(0), Rational::from_integer(recurrences::cg_at_2g(g)));
        }
    }

    #[test]
    fn corrupted_record_is_rejected() {
        let mut rec = pg_pipeline(2).unwrap().pop().unwrap();
        rec.p = &rec.p + &ExactPoly::monomial(arith::rat(1, 2), 5);
        assert!(rec.validate().is_err());
    }
}

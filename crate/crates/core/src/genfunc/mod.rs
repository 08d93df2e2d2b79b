//! Generating functions of diagrams by genus.
//!
//! Univariate series C_g(z) = Σ c_g(n) zⁿ, the closed form
//! C_g(z) = P_g(z)(1−4z)^{1/2−3g} and the polynomial pipeline behind it
//! ([`theorem`]), the bivariate refinements by 1-chords, the fibers of the
//! shape projection, and the macromolecular series D_{g,σ}(z)
//! ([`macromolecular`]).

pub mod macromolecular;
pub mod theorem;

use num_traits::{One, Zero};

use crate::arith::{self, Integer, Rational};
use crate::biseries::BiSeries;
use crate::error::Result;
use crate::recurrences;
use crate::series::ExactSeries;
use crate::table::GenusTable;

pub use macromolecular::{dg_fiber_sum, dg_sigma_series, theta_sigma, u_sigma, RationalFunction};
pub use theorem::{pg_direct, pg_pipeline, pg_pipeline_step, rg, PgRecord};

/// Catalan series Σ binom(2n, n)/(n+1) zⁿ.
pub fn catalan_series(order: usize) -> ExactSeries {
    ExactSeries::from_fn(order, |n| {
        Rational::new(arith::binomial(2 * n as u64, n as u64), Integer::from(n + 1))
    })
}

/// (1 − √(1−4z))/(2z), expanded with the series square root.
pub fn catalan_series_closed(order: usize) -> ExactSeries {
    let root = ExactSeries::from_integers(&[1, -4], order + 1).sqrt().expect("unit constant term");
    ExactSeries::one(order + 1)
        .sub(&root)
        .div_z_pow(1)
        .expect("numerator vanishes at 0")
        .scale(&arith::rat(1, 2))
}

/// 2/(1 + √(1−4z)).
pub fn catalan_series_reciprocal_form(order: usize) -> ExactSeries {
    let root = ExactSeries::from_integers(&[1, -4], order).sqrt().expect("unit constant term");
    let denom = ExactSeries::one(order).add(&root);
    ExactSeries::constant(arith::rat_int(2), order)
        .div(&denom)
        .expect("constant term 2")
}

/// C_g(z) to `order`, coefficients from the recursion.
pub fn cg_series(g: usize, order: usize) -> ExactSeries {
    let t = recurrences::cg_table(g, order);
    ExactSeries::from_big_integers(t.row(g).iter().cloned(), order)
}

/// C_g(z) expanded from P_g(z)·√(1−4z)/(1−4z)^{3g}; P_g from the pipeline.
pub fn cg_series_from_closed_form(g: usize, order: usize) -> Result<ExactSeries> {
    if g == 0 {
        return Ok(catalan_series_closed(order));
    }
    let p = pg_pipeline(g)?.pop().expect("non-empty chain").p;
    let base = ExactSeries::from_integers(&[1, -4], order);
    let root = base.sqrt()?;
    let inv = base.pow(3 * g as u32).reciprocal()?;
    Ok(ExactSeries::from_poly(&p, order).mul(&root).mul(&inv))
}

/// 4z⁵C‴ + 24z⁴C″ + 27z³C′ + 3z²C for C = C_g, truncated at `order`.
pub fn phi(g: usize, order: usize) -> ExactSeries {
    let c = cg_series(g, order + 3);
    let d1 = c.derivative();
    let d2 = d1.derivative();
    let d3 = d2.derivative();
    let term = |s: &ExactSeries, coeff: i64, k: usize| {
        s.truncate(order).mul_z_pow(k).truncate(order).scale(&arith::rat_int(coeff))
    };
    term(&d3, 4, 5)
        .add(&term(&d2, 24, 4))
        .add(&term(&d1, 27, 3))
        .add(&term(&c, 3, 2))
}

/// z(1−4z)C_g′ + (1−2z)C_g − Φ_{g−1}; the zero series when the recursion
/// and the differential equation agree.
pub fn ode_residual(g: usize, order: usize) -> ExactSeries {
    assert!(g >= 1, "the equation relates C_g to C_(g-1), so g ≥ 1");
    let c = cg_series(g, order + 1);
    let dc = c.derivative();
    let lhs = ExactSeries::from_integers(&[0, 1, -4], order)
        .mul(&dc)
        .add(&ExactSeries::from_integers(&[1, -2], order).mul(&c.truncate(order)));
    lhs.sub(&phi(g - 1, order))
}

/// C_g(x, y) = 1/(1+x−xy) · C_g(x/(1+x−xy)²), with y marking 1-chords.
pub fn cg_bivariate(g: usize, orders: (usize, usize)) -> Result<BiSeries> {
    let w = one_plus_x_minus_xy(orders, 1, 1);
    let inv = w.reciprocal()?;
    let inner = inv.mul(&inv).mul_monomial(1, 0).truncate(orders);
    let outer = cg_series(g, orders.0 + orders.1);
    Ok(inv.mul(&inner.compose_into(&outer)?))
}

/// S_g(z, u) = (1+z)/(1+2z−zu) · C_g(z(1+z)/(1+2z−zu)²), the shape series
/// with u marking 1-chords.
pub fn sg_bivariate(g: usize, orders: (usize, usize)) -> Result<BiSeries> {
    let w = one_plus_x_minus_xy(orders, 2, 1);
    let inv = w.reciprocal()?;
    let one_plus_z = BiSeries::one(orders).add(&BiSeries::monomial(Rational::one(), 1, 0, orders));
    let inner = one_plus_z.mul(&inv).mul(&inv).mul_monomial(1, 0).truncate(orders);
    let outer = cg_series(g, orders.0 + orders.1);
    Ok(one_plus_z.mul(&inv).mul(&inner.compose_into(&outer)?))
}

/// 1 + a·x − b·xy.
fn one_plus_x_minus_xy(orders: (usize, usize), a: i64, b: i64) -> BiSeries {
    BiSeries::one(orders)
        .add(&BiSeries::monomial(arith::rat_int(a), 1, 0, orders))
        .add(&BiSeries::monomial(arith::rat_int(-b), 1, 1, orders))
}

/// Every diagram with the shape's chords replaced by stacks: the series
/// S_g(x/(1−x), y), which must reproduce C_g(x, y).
pub fn inflate_stacks(shapes: &BiSeries) -> Result<BiSeries> {
    let geometric = ExactSeries::from_integers(&[1, -1], shapes.orders().0).reciprocal()?;
    let inner = geometric.mul_z_pow(1).truncate(shapes.orders().0);
    shapes.substitute_first(&inner)
}

/// Residual of ∂_yC − (x∂_yC + 2x²∂_xC + xC − xy∂_yC) for C = C_g(x, y);
/// the zero bivariate series when the 1-chord refinement is consistent.
pub fn pde_residual(g: usize, orders: (usize, usize)) -> Result<BiSeries> {
    let big = (orders.0 + 1, orders.1 + 1);
    let c = cg_bivariate(g, big)?;
    let cx = c.derivative_first().truncate(orders);
    let cy = c.derivative_second().truncate(orders);
    let c = c.truncate(orders);
    let rhs = cy
        .mul_monomial(1, 0)
        .truncate(orders)
        .add(&cx.mul_monomial(2, 0).truncate(orders).scale(&arith::rat_int(2)))
        .add(&c.mul_monomial(1, 0).truncate(orders))
        .sub(&cy.mul_monomial(1, 1).truncate(orders));
    Ok(cy.sub(&rhs))
}

/// Checks (m+1)c(n+1, m+1) = (m+1)c(n, m+1) + (2n+1−m)c(n, m) on a table
/// refined by 1-chords; returns the first failing (g, n, m).
pub fn one_chord_recursion_failure(table: &GenusTable) -> Option<(usize, usize, usize)> {
    for g in 0..=table.g_max() {
        for n in 0..table.n_max() {
            for m in 0..=n {
                let lhs = Integer::from(m + 1) * table.get_m(g, n + 1, m + 1);
                let rhs = Integer::from(m + 1) * table.get_m(g, n, m + 1)
                    + Integer::from(2 * n + 1 - m) * table.get_m(g, n, m);
                if lhs != rhs {
                    return Some((g, n, m));
                }
            }
        }
    }
    None
}

/// (x/(1−x))^s y^t: all diagrams projecting to one shape with s chords and
/// t 1-chords.
pub fn fiber_c(s: usize, t: usize, orders: (usize, usize)) -> Result<BiSeries> {
    let base = ExactSeries::from_integers(&[1, -1], orders.0)
        .reciprocal()?
        .mul_z_pow(1)
        .truncate(orders.0)
        .pow(s as u32);
    Ok(BiSeries::from_fn(orders, |i, j| if j == t { base.coeff(i).clone() } else { Rational::zero() }))
}

/// (1−z)^{−1} (z^{2σ}/((1−z²)(1−z)² − (2z−z²)z^{2σ}))^s z^m: macromolecular
/// diagrams with minimum stack size σ over one shape with s ≥ 1 chords and
/// m 1-chords.
pub fn fiber_d(s: usize, m: usize, sigma: usize, order: usize) -> Result<ExactSeries> {
    let ratio = stack_block(sigma, order)?;
    let inv = ExactSeries::from_integers(&[1, -1], order).reciprocal()?;
    Ok(inv.mul(&ratio.pow(s as u32)).mul_z_pow(m).truncate(order))
}

/// z^{2σ}/((1−z²)(1−z)² − (2z−z²)z^{2σ}).
pub(crate) fn stack_block(sigma: usize, order: usize) -> Result<ExactSeries> {
    use crate::poly::ExactPoly;
    let one_minus_z = ExactPoly::from_integers(&[1, -1]);
    let left = &ExactPoly::from_integers(&[1, 0, -1]) * &(&one_minus_z * &one_minus_z);
    let right = ExactPoly::from_integers(&[0, 2, -1]).shift_up(2 * sigma);
    let den = &left - &right;
    let num = ExactPoly::monomial(Rational::one(), 2 * sigma);
    ExactSeries::from_poly(&num, order).div(&ExactSeries::from_poly(&den, order))
}

/// Σ over shapes γ of genus g of the fiber series, using shape counts
/// s_g(n, m) from `shapes`. The empty shape contributes 1/(1−z) at g = 0.
/// Shapes with up to `shapes.n_max()` chords are included, which is exact
/// through order 2σ·(n_max+1) − 1.
pub fn fiber_sum_macromolecular(
    shapes: &GenusTable,
    g: usize,
    sigma: usize,
    order: usize,
) -> Result<ExactSeries> {
    let mut acc = ExactSeries::zero(order);
    if g == 0 {
        acc = ExactSeries::from_integers(&[1, -1], order).reciprocal()?;
    }
    if g > shapes.g_max() {
        return Ok(acc);
    }
    for s in 1..=shapes.n_max() {
        for m in 0..=s {
            let count = shapes.get_m(g, s, m);
            if count.is_zero() {
                continue;
            }
            let fiber = fiber_d(s, m, sigma, order)?;
            acc = acc.add(&fiber.scale(&Rational::from_integer(count)));
        }
    }
    Ok(acc)
}

/// Σ over shapes of s_g(n, m)·fiber_c(n, m): the diagram series rebuilt
/// from shape counts.
pub fn fiber_sum_diagrams(shapes: &GenusTable, g: usize, orders: (usize, usize)) -> Result<BiSeries> {
    let mut acc = BiSeries::zero(orders);
    if g == 0 {
        acc = BiSeries::one(orders);
    }
    for s in 1..=shapes.n_max().min(orders.0) {
        for m in 0..=s.min(orders.1) {
            let count = shapes.get_m(g, s, m);
            if !count.is_zero() {
                acc = acc.add(&fiber_c(s, m, orders)?.scale(&Rational::from_integer(count)));
            }
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat_int};
    use crate::oracle::Oracle;

    #[test]
    fn catalan_three_ways() {
        let a = catalan_series(30);
        assert_eq!(a.to_integers().unwrap()[..6], [1, 1, 2, 5, 14, 42].map(int));
        assert_eq!(a, catalan_series_closed(30));
        assert_eq!(a, catalan_series_reciprocal_form(30));
        let fixed = ExactSeries::one(30).add(&a.mul(&a).mul_z_pow(1).truncate(30));
        assert_eq!(fixed, a);
    }

    #[test]
    fn genus_series() {
        let c1 = cg_series(1, 6);
        assert_eq!(c1.to_integers().unwrap(), [0, 0, 1, 10, 70, 420, 2310].map(int));
        assert_eq!(*cg_series(2, 5).coeff(4), rat_int(21));
        assert_eq!(cg_series(0, 12), catalan_series(12));
    }

    #[test]
    fn closed_form_matches_recursion() {
        for g in 1..=5 {
            assert_eq!(cg_series_from_closed_form(g, 25).unwrap(), cg_series(g, 25), "g = {g}");
        }
    }

    #[test]
    fn ode_residuals_vanish() {
        for g in 1..=5 {
            assert!(ode_residual(g, 15).is_zero(), "g = {g}");
        }
    }

    #[test]
    fn pde_residual_vanishes() {
        for g in 0..=2 {
            assert!(pde_residual(g, (8, 8)).unwrap().is_zero(), "g = {g}");
        }
    }

    #[test]
    fn bivariate_against_oracle() {
        let oracle = Oracle::default();
        let cm = oracle.cg_onechords(6).unwrap();
        let sm = oracle.shapes(6).unwrap();
        for g in 0..=3 {
            let c = cg_bivariate(g, (6, 6)).unwrap();
            let s = sg_bivariate(g, (6, 6)).unwrap();
            for n in 0..=6 {
                for m in 0..=6 {
                    let expect_c = if g <= cm.g_max() { cm.get_m(g, n, m) } else { int(0) };
                    let expect_s = if g <= sm.g_max() { sm.get_m(g, n, m) } else { int(0) };
                    assert_eq!(*c.coeff(n, m), Rational::from_integer(expect_c), "c g={g} n={n} m={m}");
                    assert_eq!(*s.coeff(n, m), Rational::from_integer(expect_s), "s g={g} n={n} m={m}");
                }
            }
            assert_eq!(inflate_stacks(&s).unwrap(), c);
            assert_eq!(c.sum_over_second(), cg_series(g, 6));
        }
        assert!(one_chord_recursion_failure(&cm).is_none());
    }

    #[test]
    fn fiber_lowest_terms() {
        let f = fiber_d(1, 0, 1, 8).unwrap();
        assert_eq!(f.valuation(), Some(2));
        assert_eq!(*f.coeff(2), rat_int(1));
        for (s, m, sigma) in [(2, 1, 1), (2, 0, 2), (3, 2, 3)] {
            assert_eq!(fiber_d(s, m, sigma, 24).unwrap().valuation(), Some(2 * sigma * s + m));
        }
        let fc = fiber_c(2, 1, (5, 3)).unwrap();
        assert_eq!(*fc.coeff(2, 1), rat_int(1));
        assert_eq!(*fc.coeff(3, 1), rat_int(2));
        assert_eq!(*fc.coeff(3, 0), rat_int(0));
    }

    #[test]
    fn diagrams_from_shapes() {
        let sm = Oracle::default().shapes(6).unwrap();
        for g in 0..=2 {
            assert_eq!(fiber_sum_diagrams(&sm, g, (6, 6)).unwrap(), cg_bivariate(g, (6, 6)).unwrap());
        }
    }
}

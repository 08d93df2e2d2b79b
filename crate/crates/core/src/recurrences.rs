//! Counting by recursion: c_g(n) for unbounded n, the explicit low-genus
//! formulas, and the Harer–Zagier polynomials p(n, x) computed two
//! independent ways.

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::arith::{self, Integer, Rational};
use crate::error::{Error, Result};
use crate::poly::ExactPoly;
use crate::series::ExactSeries;
use crate::table::{GenusTable, TableClass};

/// c_g(n) for all g ≤ g_max, n ≤ n_max from
///
/// (n+1)·c_g(n) = 2(2n−1)·c_g(n−1) + (2n−1)(n−1)(2n−3)·c_{g−1}(n−2),
///
/// starting from c_0(0) = 1. Cells with 2g > n are stored zeros. Panics if
/// a division by n+1 is ever inexact.
pub fn cg_table(g_max: usize, n_max: usize) -> GenusTable {
    let mut t = GenusTable::new(TableClass::Full, g_max, n_max);
    t.set(0, 0, Integer::one());
    for n in 1..=n_max {
        let ni = Integer::from(n);
        let two_n_minus_1 = Integer::from(2 * n - 1);
        for g in 0..=g_max.min(n / 2) {
            let mut rhs = Integer::from(2) * &two_n_minus_1 * t.get(g, n - 1);
            if g > 0 && n >= 2 {
                rhs += &two_n_minus_1 * Integer::from(n - 1) * Integer::from(2 * n - 3) * t.get(g - 1, n - 2);
            }
            let (q, r) = rhs.div_rem(&(&ni + 1u32));
            assert!(r.is_zero(), "inexact division by n+1 at g={g}, n={n}");
            t.set(g, n, q);
        }
    }
    t
}

/// Closed forms for g ∈ {1, 2, 3}:
///
/// - c_1(n) = 2^{n−2}(2n−1)!! / (3·(n−2)!)
/// - c_2(n) = 2^{n−4}(5n−2)(2n−1)!! / (90·(n−4)!)
/// - c_3(n) = 2^{n−6}(35n²−77n+12)(2n−1)!! / (5670·(n−6)!)
pub fn cg_closed_form(g: usize, n: usize) -> Result<Integer> {
    if !(1..=3).contains(&g) {
        return Err(Error::InvalidParameter(format!("closed forms exist for g = 1, 2, 3, not {g}")));
    }
    if n < 2 * g {
        return Err(Error::InvalidParameter(format!("need n ≥ 2g = {}, got n = {n}", 2 * g)));
    }
    let k = n - 2 * g;
    let ni = Integer::from(n);
    let (factor, den) = match g {
        1 => (Integer::one(), 3u32),
        2 => (Integer::from(5) * &ni - 2, 90),
        _ => (Integer::from(35) * &ni * &ni - Integer::from(77) * &ni + 12, 5670),
    };
    let num = (Integer::one() << k) * factor * arith::double_factorial_odd(n as u64);
    let den = Integer::from(den) * arith::factorial(k as u64);
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::invariant("closed form", format!("c_{g}({n}) is not an integer")));
    }
    Ok(q)
}

/// c_g(2g) = (4g)! / (4^g (2g+1)!).
pub fn cg_at_2g(g: usize) -> Integer {
    let num = arith::factorial(4 * g as u64);
    let den = (Integer::one() << (2 * g)) * arith::factorial(2 * g as u64 + 1);
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero());
    q
}

/// Σ_g c_g(2g) x^{2g}/(2g)! truncated at `order`.
pub fn cg_at_2g_egf(order: usize) -> ExactSeries {
    ExactSeries::from_fn(order, |k| {
        if k % 2 == 1 {
            return Rational::zero();
        }
        Rational::new(cg_at_2g(k / 2), arith::factorial(k as u64))
    })
}

/// (√(1+2x) − √(1−2x))/(2x) truncated at `order`.
pub fn cg_at_2g_egf_closed(order: usize) -> ExactSeries {
    let n = order + 1;
    let plus = ExactSeries::from_integers(&[1, 2], n).sqrt().expect("unit constant term");
    let minus = ExactSeries::from_integers(&[1, -2], n).sqrt().expect("unit constant term");
    plus.sub(&minus)
        .div_z_pow(1)
        .expect("difference vanishes at 0")
        .scale(&arith::rat(1, 2))
}

/// Rows p(0, x), …, p(n_max, x) of Harer–Zagier polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HZPolyTable {
    rows: Vec<ExactPoly>,
}

impl HZPolyTable {
    pub fn rows(&self) -> &[ExactPoly] {
        &self.rows
    }

    pub fn get(&self, n: usize) -> &ExactPoly {
        &self.rows[n]
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }
}

/// p(n, x) from p(n,x) = p(n,x−1) + p(n−1,x) + p(n−1,x−1), p(0,x) = x,
/// p(n,0) = 0.
///
/// Each row solves the difference equation p(x) − p(x−1) = f(x) for the
/// coefficients of p from the top down; the constant term is fixed by
/// p(n, 0) = 0.
pub fn hz_polys(n_max: usize) -> HZPolyTable {
    let minus_one = -Rational::one();
    let mut rows = vec![ExactPoly::monomial(Rational::one(), 1)];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let f = prev + &prev.translate(&minus_one);
        rows.push(antidifference(&f));
    }
    HZPolyTable { rows }
}

/// The unique p with p(x) − p(x−1) = f(x) and p(0) = 0.
fn antidifference(f: &ExactPoly) -> ExactPoly {
    let Some(d) = f.degree() else {
        return ExactPoly::zero();
    };
    // [x^m](p(x) − p(x−1)) = Σ_{k>m} c_k·binom(k,m)·(−1)^{k−m+1}
    let mut c = vec![Rational::zero(); d + 2];
    for m in (0..=d).rev() {
        let mut rhs = f.coeff(m);
        for (k, ck) in c.iter().enumerate().skip(m + 2) {
            let term = ck * Rational::from_integer(arith::binomial(k as u64, m as u64));
            if (k - m) % 2 == 0 {
                rhs += term;
            } else {
                rhs -= term;
            }
        }
        c[m + 1] = rhs / Rational::from_integer(Integer::from(m + 1));
    }
    ExactPoly::new(c)
}

/// b(n, x) with ((1+z)/(1−z))^x = 1 + 2 Σ_n b(n, x) z^{n+1}, computed as
/// exp(x·L(z)) where L(z) = log((1+z)/(1−z)) = 2(z + z³/3 + z⁵/5 + …).
///
/// The coefficient of x^k in b(n, x) is [z^{n+1}] L(z)^k / (2·k!). Nothing
/// here uses the recursion behind [`hz_polys`].
pub fn hz_rhs(n_max: usize) -> HZPolyTable {
    let order = n_max + 1;
    let log = ExactSeries::from_fn(order, |i| {
        if i % 2 == 1 {
            Rational::new(Integer::from(2), Integer::from(i))
        } else {
            Rational::zero()
        }
    });
    // power = L^k / k! at step k
    let mut coeffs = vec![vec![Rational::zero(); order + 1]; n_max + 1];
    let mut power = ExactSeries::one(order);
    for k in 1..=order {
        power = power.mul(&log).scale(&Rational::new(Integer::one(), Integer::from(k)));
        for (n, row) in coeffs.iter_mut().enumerate() {
            row[k] = power.coeff(n + 1) / Rational::from_integer(Integer::from(2));
        }
    }
    HZPolyTable {
        rows: coeffs.into_iter().map(ExactPoly::new).collect(),
    }
}

/// The full two-variable series ((1+z)/(1−z))^x as a list of polynomials
/// in x indexed by the power of z; entry 0 is 1 and entry 1 is 2x.
pub fn hz_generating_function(order: usize) -> Vec<ExactPoly> {
    let table = hz_rhs(order.saturating_sub(1));
    let mut out = vec![ExactPoly::one()];
    out.extend(table.rows.iter().take(order).map(|p| p.scale(&Rational::from_integer(Integer::from(2)))));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat_int};

    #[test]
    fn catalan_row_and_low_genus_values() {
        let t = cg_table(3, 7);
        let row0: Vec<Integer> = [1, 1, 2, 5, 14, 42, 132].iter().map(|&v| int(v)).collect();
        assert_eq!(&t.row(0)[..7], &row0[..]);
        assert_eq!(*t.get(1, 2), int(1));
        assert_eq!(*t.get(1, 3), int(10));
        assert_eq!(*t.get(1, 4), int(70));
        assert_eq!(*t.get(2, 4), int(21));
        assert_eq!(*t.get(3, 6), int(1485));
        assert_eq!(*t.get(3, 5), int(0));
    }

    #[test]
    fn row_sums_are_double_factorials() {
        let t = cg_table(15, 30);
        for n in 0..=30 {
            assert_eq!(t.column_sum(n), arith::double_factorial_odd(n as u64), "n = {n}");
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(cg_closed_form(1, 2).unwrap(), int(1));
        assert_eq!(cg_closed_form(2, 4).unwrap(), int(21));
        assert!(cg_closed_form(3, 5).is_err());
        assert!(cg_closed_form(4, 8).is_err());
        let t = cg_table(3, 40);
        for g in 1..=3 {
            for n in 2 * g..=40 {
                assert_eq!(cg_closed_form(g, n).unwrap(), *t.get(g, n), "g={g} n={n}");
            }
        }
    }

    #[test]
    fn values_at_n_equal_2g() {
        assert_eq!(cg_at_2g(0), int(1));
        assert_eq!(cg_at_2g(1), int(1));
        assert_eq!(cg_at_2g(2), int(21));
        assert_eq!(cg_at_2g(3), int(1485));
        assert_eq!(cg_at_2g_egf(20), cg_at_2g_egf_closed(20));
    }

    #[test]
    fn hz_small_rows() {
        let t = hz_polys(3);
        assert_eq!(*t.get(0), ExactPoly::from_integers(&[0, 1]));
        assert_eq!(*t.get(1), ExactPoly::from_integers(&[0, 0, 1]));
        for n in 0..=3 {
            assert!(t.get(n).coeff(0).is_zero());
            assert_eq!(t.get(n).degree(), Some(n + 1));
        }
    }

    #[test]
    fn hz_two_sides_agree() {
        assert_eq!(hz_polys(12), hz_rhs(12));
    }

    #[test]
    fn hz_generating_function_head() {
        let gf = hz_generating_function(3);
        assert_eq!(gf[0], ExactPoly::one());
        assert_eq!(gf[1], ExactPoly::from_integers(&[0, 2]));
        assert!(gf.iter().skip(1).all(|p| p.eval(&rat_int(0)).is_zero()));
    }
}

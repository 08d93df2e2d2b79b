//! Growth rates and leading constants, decided in exact arithmetic.
//!
//! Real numbers that are not rational (√π, the singularity ρ_σ) are carried
//! as intervals with rational endpoints; floating point only appears when a
//! value is rendered for people.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::{self, Integer, Rational};
use crate::error::{Error, Result};
use crate::genfunc::{self, macromolecular};
use crate::poly::ExactPoly;
use crate::recurrences;
use crate::series::ExactSeries;

/// A closed interval [lo, hi] with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "empty interval");
        Interval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / arith::rat_int(2)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Lies inside [center − tol, center + tol].
    pub fn within(&self, center: &Rational, tol: &Rational) -> bool {
        self.lo >= center - tol && self.hi <= center + tol
    }

    /// Product of two intervals of positive numbers.
    pub fn mul_positive(&self, other: &Interval) -> Interval {
        assert!(self.lo.is_positive() && other.lo.is_positive());
        Interval::new(&self.lo * &other.lo, &self.hi * &other.hi)
    }

    /// Reciprocal of an interval of positive numbers.
    pub fn recip_positive(&self) -> Interval {
        assert!(self.lo.is_positive());
        Interval::new(self.hi.recip(), self.lo.recip())
    }

    pub fn scale_positive(&self, c: &Rational) -> Interval {
        assert!(c.is_positive());
        Interval::new(&self.lo * c, &self.hi * c)
    }

    /// An interval containing √x for every x in self (self ≥ 0), each end
    /// found by bisection to within `tol`.
    pub fn sqrt(&self, tol: &Rational) -> Interval {
        Interval::new(sqrt_bracket(&self.lo, tol).lo, sqrt_bracket(&self.hi, tol).hi)
    }

    pub fn to_decimal(&self, digits: usize) -> (String, String) {
        (arith::to_decimal(&self.lo, digits), arith::to_decimal(&self.hi, digits))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.to_decimal(15);
        write!(f, "[{lo}, {hi}]")
    }
}

/// [a, b] with a² ≤ x ≤ b² and b − a ≤ tol.
fn sqrt_bracket(x: &Rational, tol: &Rational) -> Interval {
    assert!(!x.is_negative(), "square root of a negative number");
    let mut lo = Rational::zero();
    let mut hi = if x > &Rational::one() { x.clone() } else { Rational::one() };
    while &(&hi - &lo) > tol {
        let mid = dyadic_mid(&lo, &hi);
        match (&mid * &mid).cmp(x) {
            Ordering::Less => lo = mid,
            Ordering::Greater => hi = mid,
            Ordering::Equal => return Interval::point(mid),
        }
    }
    Interval::new(lo, hi)
}

/// The midpoint, rounded to a short binary fraction inside the interval so
/// that repeated bisection keeps denominators small.
fn dyadic_mid(lo: &Rational, hi: &Rational) -> Rational {
    let mid = (lo + hi) / arith::rat_int(2);
    let width = hi - lo;
    let mut den = Integer::one();
    loop {
        let candidate = Rational::new((&mid * Rational::from_integer(den.clone())).round().to_integer(), den.clone());
        if &candidate > lo && &candidate < hi && (&candidate - lo) * arith::rat_int(4) >= width && (hi - &candidate) * arith::rat_int(4) >= width {
            return candidate;
        }
        den <<= 1;
    }
}

/// π lies in this interval (35 correct decimals).
pub fn pi_interval() -> Interval {
    let den: Integer = Integer::from(10u32).pow(35);
    let lo: Integer = "314159265358979323846264338327950288".parse().expect("digits");
    Interval::new(Rational::new(lo.clone(), den.clone()), Rational::new(lo + 1u32, den))
}

/// Γ(k + 1/2)/√π = (2k)!/(4^k k!).
pub fn gamma_half_integer_over_sqrt_pi(k: usize) -> Rational {
    Rational::new(
        arith::factorial(2 * k as u64),
        (Integer::one() << (2 * k)) * arith::factorial(k as u64),
    )
}

/// [zⁿ]F ∼ constant · n^exponent · growthⁿ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticEstimate {
    pub exponent: Rational,
    pub growth_rate: Interval,
    pub constant: Interval,
    /// When the constant is q/√π for rational q, this is q.
    pub constant_over_inv_sqrt_pi: Option<Rational>,
}

/// [zⁿ]C_g ∼ P_g(1/4)/Γ(3g − 1/2) · n^{3g−3/2} 4ⁿ, with the constant
/// enclosed to width about `tol`.
pub fn cg_leading_constant(g: usize, tol: &Rational) -> Result<AsymptoticEstimate> {
    if g == 0 {
        return Err(Error::InvalidParameter("the closed form holds for g ≥ 1".into()));
    }
    let p = genfunc::pg_pipeline(g)?.pop().expect("non-empty").p;
    let q = p.eval(&arith::rat(1, 4)) / gamma_half_integer_over_sqrt_pi(3 * g - 1);
    let inv_sqrt_pi = pi_interval().sqrt(tol).recip_positive();
    Ok(AsymptoticEstimate {
        exponent: Rational::new(Integer::from(6 * g as i64 - 3), Integer::from(2)),
        growth_rate: Interval::point(arith::rat_int(4)),
        constant: inv_sqrt_pi.scale_positive(&q),
        constant_over_inv_sqrt_pi: Some(q),
    })
}

/// c_g(n) exactly: the closed form for g ≤ 3, the recursion otherwise.
fn cg_exact(g: usize, n: usize) -> Integer {
    match g {
        1..=3 if n >= 2 * g => recurrences::cg_closed_form(g, n).expect("valid range"),
        _ => recurrences::cg_table(g, n).get(g, n).clone(),
    }
}

/// Comparison of c_g(n)/(n^{3g−3/2}4ⁿ) with the predicted constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantCheck {
    pub g: usize,
    pub n: usize,
    /// Encloses c_g(n)/(n^{3g−3/2}4ⁿ).
    pub ratio: Interval,
    /// Encloses the predicted constant.
    pub predicted: Interval,
    /// Encloses ratio/predicted − 1.
    pub relative_error: Interval,
}

impl ConstantCheck {
    /// |ratio/predicted − 1| ≤ tol for every value in the enclosure.
    pub fn passes(&self, tol: &Rational) -> bool {
        self.relative_error.within(&Rational::zero(), tol)
    }
}

/// The ratio at `n` enclosed without floating point. The square of the
/// quotient, c_g(n)²·π / (n^{6g−3}·16ⁿ·q²) with q as in
/// [`AsymptoticEstimate::constant_over_inv_sqrt_pi`], is rational up to the
/// π bracket, and only its square root needs bisection.
pub fn cg_constant_check(g: usize, n: usize) -> Result<ConstantCheck> {
    let tol = Rational::new(Integer::one(), Integer::from(10u32).pow(30));
    let est = cg_leading_constant(g, &tol)?;
    let q = est.constant_over_inv_sqrt_pi.clone().expect("exact form");
    let c = cg_exact(g, n);
    if c.is_zero() {
        return Err(Error::InvalidParameter(format!("c_{g}({n}) = 0")));
    }
    let ratio_sq = Rational::new(
        &c * &c,
        Integer::from(n).pow(6 * g as u32 - 3) * (Integer::one() << (4 * n)),
    );
    let ratio = Interval::point(ratio_sq.clone()).sqrt(&tol);
    let quotient_sq = pi_interval().scale_positive(&(ratio_sq / (&q * &q)));
    let quotient = quotient_sq.sqrt(&tol);
    let relative_error = Interval::new(quotient.lo - Rational::one(), quotient.hi - Rational::one());
    Ok(ConstantCheck { g, n, ratio, predicted: est.constant, relative_error })
}

/// An isolated real root: `polynomial` changes sign on [lo, hi] and has
/// exactly one distinct real root there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootIsolation {
    pub polynomial: ExactPoly,
    pub interval: Interval,
    pub sign_change: bool,
    /// Distinct real roots in (0, lo]; zero when no smaller positive root exists.
    pub roots_below: usize,
}

impl RootIsolation {
    /// The reciprocal 1/ρ, enclosed.
    pub fn growth_rate(&self) -> Interval {
        self.interval.recip_positive()
    }
}

/// Sturm sequence p, p′, −rem(p, p′), … of a square-free polynomial.
pub fn sturm_sequence(p: &ExactPoly) -> Vec<ExactPoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(r.scale(&-Rational::one()));
    }
    seq
}

fn sign_variations(seq: &[ExactPoly], x: &Rational) -> usize {
    let signs: Vec<i32> = seq.iter().map(|p| p.sign_at(x)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Distinct real roots in (a, b] of the square-free polynomial with Sturm
/// sequence `seq`.
pub fn count_roots(seq: &[ExactPoly], a: &Rational, b: &Rational) -> usize {
    sign_variations(seq, a) - sign_variations(seq, b)
}

/// p / gcd(p, p′): same roots, all simple.
pub fn square_free_part(p: &ExactPoly) -> ExactPoly {
    let g = p.gcd(&p.derivative());
    if g.degree() == Some(0) {
        return p.clone();
    }
    p.div_rem(&g).0
}

/// Smallest root of `p` in (0, 1], isolated to width ≤ `width`.
pub fn smallest_positive_root(p: &ExactPoly, width: &Rational) -> Result<RootIsolation> {
    let sf = square_free_part(p);
    let seq = sturm_sequence(&sf);
    let (mut lo, mut hi) = (Rational::zero(), Rational::one());
    if sf.sign_at(&lo) == 0 {
        return Err(Error::InvalidParameter("polynomial vanishes at 0".into()));
    }
    if count_roots(&seq, &lo, &hi) == 0 {
        return Err(Error::NoSignChange { polynomial: p.to_string() });
    }
    // invariant: no root in (0, lo], at least one in (lo, hi]
    while &(&hi - &lo) > width || sf.sign_at(&hi) == 0 {
        let mid = dyadic_mid(&lo, &hi);
        if count_roots(&seq, &lo, &mid) > 0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let sign_change = sf.sign_at(&lo) * sf.sign_at(&hi) < 0;
    let roots_in = count_roots(&seq, &lo, &hi);
    if !sign_change || roots_in != 1 {
        return Err(Error::invariant(
            "root isolation",
            format!("interval [{lo}, {hi}] holds {roots_in} roots, sign change {sign_change}"),
        ));
    }
    let roots_below = count_roots(&seq, &Rational::zero(), &lo);
    Ok(RootIsolation { polynomial: p.clone(), interval: Interval::new(lo, hi), sign_change, roots_below })
}

/// ρ_σ, the smallest positive solution of θ_σ(z) = 1/4.
///
/// Also checks that the denominators of θ_σ and of the prefactor have no
/// positive root at or below ρ_σ, so ρ_σ is where D_{g,σ} first becomes
/// singular on the positive axis.
pub fn dominant_singularity(sigma: usize, width: &Rational) -> Result<RootIsolation> {
    let poly = macromolecular::singularity_polynomial(sigma)?;
    let iso = smallest_positive_root(&poly, width)?;
    let theta = macromolecular::theta_sigma(sigma)?;
    let pre = macromolecular::prefactor(sigma)?;
    for den in [theta.denominator(), pre.denominator()] {
        let sf = square_free_part(den);
        let seq = sturm_sequence(&sf);
        if count_roots(&seq, &Rational::zero(), &iso.interval.hi) > 0 {
            return Err(Error::invariant(
                format!("dominant singularity, sigma = {sigma}"),
                format!("denominator {den} has a positive root below the branch point"),
            ));
        }
    }
    Ok(iso)
}

/// Default isolation width 10⁻¹².
pub fn default_width() -> Rational {
    Rational::new(Integer::one(), Integer::from(10u64.pow(12)))
}

/// a(n+1)/a(n) for a coefficient sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmpiricalGrowth {
    pub n: usize,
    pub ratio: Rational,
}

/// Ratio of consecutive coefficients at n, or at the next index where both
/// coefficients are nonzero. `None` if the series runs out first.
pub fn coefficient_ratio(series: &ExactSeries, n: usize) -> Option<EmpiricalGrowth> {
    (n..series.order()).find_map(|k| {
        let (a, b) = (series.coeff(k), series.coeff(k + 1));
        (!a.is_zero() && !b.is_zero()).then(|| EmpiricalGrowth { n: k, ratio: b / a })
    })
}

/// d_{g,σ}(n+1)/d_{g,σ}(n) at n = n_max (moving forward past zeros).
pub fn empirical_growth(g: usize, sigma: usize, n_max: usize) -> Result<EmpiricalGrowth> {
    let slack = 4 * sigma;
    let series = genfunc::dg_sigma_series(g, sigma, n_max + slack)?;
    coefficient_ratio(&series, n_max)
        .ok_or_else(|| Error::InvalidParameter(format!("no nonzero consecutive coefficients in {n_max}..{}", n_max + slack)))
}

/// |estimate/target − 1| ≤ tol for every target in the interval.
pub fn relative_agreement(estimate: &Rational, target: &Interval, tol: &Rational) -> bool {
    assert!(target.lo.is_positive());
    // |e/t − 1| ≤ tol for all t in [lo_t, hi_t] iff e ∈ [hi_t(1−tol), lo_t(1+tol)]
    let need_lo = &target.hi * (Rational::one() - tol);
    let need_hi = &target.lo * (Rational::one() + tol);
    &need_lo <= estimate && estimate <= &need_hi
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    #[test]
    fn pi_and_gamma() {
        let pi = pi_interval();
        assert!(!pi.contains(&rat(314159265, 100000000)));
        assert!(pi.lo > rat(314159, 100000) && pi.hi < rat(314160, 100000));
        assert_eq!(gamma_half_integer_over_sqrt_pi(0), rat_int(1));
        assert_eq!(gamma_half_integer_over_sqrt_pi(2), rat(3, 4));
    }

    #[test]
    fn square_root_enclosure() {
        let tol = rat(1, 1_000_000);
        let s = Interval::point(rat_int(2)).sqrt(&tol);
        assert!(&s.lo * &s.lo <= rat_int(2) && &s.hi * &s.hi >= rat_int(2));
        assert!(s.width() <= tol);
        assert_eq!(Interval::point(rat(9, 4)).sqrt(&tol), Interval::point(rat(3, 2)));
    }

    #[test]
    fn leading_constants() {
        let tol = rat(1, 1_000_000_000);
        let e1 = cg_leading_constant(1, &tol).unwrap();
        assert_eq!(e1.constant_over_inv_sqrt_pi, Some(rat(1, 12)));
        assert_eq!(e1.exponent, rat(3, 2));
        let e2 = cg_leading_constant(2, &tol).unwrap();
        let p2 = genfunc::pg_direct(2).unwrap().eval(&rat(1, 4));
        assert_eq!(p2, rat(105, 1024));
        assert_eq!(e2.constant_over_inv_sqrt_pi, Some(p2 / gamma_half_integer_over_sqrt_pi(5)));
    }

    #[test]
    fn constant_error_shrinks_with_n() {
        for g in 1..=2 {
            let errs: Vec<Rational> = [250, 500, 1000]
                .iter()
                .map(|&n| {
                    let c = cg_constant_check(g, n).unwrap();
                    c.relative_error.hi.abs().max(c.relative_error.lo.abs())
                })
                .collect();
            assert!(errs[0] > errs[1] && errs[1] > errs[2], "g = {g}");
        }
        assert!(cg_constant_check(1, 1000).unwrap().passes(&rat(2, 100)));
    }

    #[test]
    fn sturm_counts() {
        // (z − 1/3)(z − 1/2)(z + 1)
        let p = &(&ExactPoly::from_integers(&[-1, 3]) * &ExactPoly::from_integers(&[-1, 2])) * &ExactPoly::from_integers(&[1, 1]);
        let seq = sturm_sequence(&p);
        assert_eq!(count_roots(&seq, &rat_int(0), &rat_int(1)), 2);
        assert_eq!(count_roots(&seq, &rat_int(-2), &rat_int(1)), 3);
        let iso = smallest_positive_root(&p, &rat(1, 1000)).unwrap();
        assert!(iso.interval.contains(&rat(1, 3)));
        assert_eq!(iso.roots_below, 0);
        let doubled = &p * &ExactPoly::from_integers(&[-1, 3]);
        assert_eq!(square_free_part(&doubled).monic(), p.monic());
    }

    #[test]
    fn no_root_reported() {
        let p = ExactPoly::from_integers(&[1, 0, 1]);
        assert!(matches!(smallest_positive_root(&p, &rat(1, 10)), Err(Error::NoSignChange { .. })));
    }

    #[test]
    fn sigma_one_root_is_golden() {
        // ρ₁ = (3 − √5)/2
        let iso = dominant_singularity(1, &default_width()).unwrap();
        let lo = &iso.interval.lo;
        let hi = &iso.interval.hi;
        // (3 − 2ρ)² = 5 changes sign across the interval
        let f = |x: &Rational| (rat_int(3) - rat_int(2) * x) * (rat_int(3) - rat_int(2) * x) - rat_int(5);
        assert!(f(lo) > Rational::zero() && f(hi) < Rational::zero());
        assert!(iso.interval.width() <= default_width());
    }

    #[test]
    fn catalan_ratio_control() {
        let c0 = genfunc::catalan_series(401);
        let r = coefficient_ratio(&c0, 400).unwrap();
        assert!(relative_agreement(&r.ratio, &Interval::point(rat_int(4)), &rat(1, 100)));
    }
}

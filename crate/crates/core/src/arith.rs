//! Arbitrary-precision integers and rationals plus the handful of
//! combinatorial helpers (factorials, double factorials, binomials) the rest
//! of the crate needs.
//!
//! `Integer` and `Rational` are the `num` crate's big types. A
//! [`Rational`] is always kept in lowest terms with a positive denominator,
//! so structural equality is mathematical equality.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(Integer::from(v))
}

pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(Integer::one(), |acc, k| acc * k)
}

/// (2n−1)!! = 1·3·5···(2n−1), with the empty product for n = 0.
pub fn double_factorial_odd(n: u64) -> Integer {
    (1..=n).fold(Integer::one(), |acc, k| acc * (2 * k - 1))
}

pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Generalized binomial coefficient binom(a, k) for rational `a`.
pub fn binomial_rational(a: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * (a - Rational::from_integer(Integer::from(i))) / Rational::from_integer(Integer::from(i + 1));
    }
    acc
}

pub fn pow_rational(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

/// Least common multiple of the denominators of `values` (1 for an empty slice).
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Integer {
    values
        .into_iter()
        .fold(Integer::one(), |acc, r| if r.denom().is_one() { acc } else { acc.lcm(r.denom()) })
}

pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Renders `p` for integral values and `p/q` otherwise. This is the wire format
/// for every exact number the crate serializes.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<Integer> {
        t.trim()
            .parse::<Integer>()
            .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(parse_int(p)?, q))
        }
    }
}

/// Decimal rendering with `digits` places after the point, rounded toward
/// negative infinity. Only used for human-facing output.
pub fn to_decimal(r: &Rational, digits: usize) -> String {
    let scale = num_traits::pow(Integer::from(10), digits);
    let scaled = (r * Rational::from_integer(scale.clone())).floor().to_integer();
    let negative = scaled.is_negative();
    let abs = scaled.abs();
    let (whole, frac) = abs.div_rem(&scale);
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{:0>width$}", frac.to_string(), width = digits)
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

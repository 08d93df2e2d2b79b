//! JSON and CSV rendering. Every number goes out as a decimal string.

use serde_json::{json, Value};

use linchord::arith::{self, Integer, Rational};
use linchord::asymptotics::Interval;
use linchord::poly::ExactPoly;
use linchord::series::ExactSeries;

const DECIMAL_DIGITS: usize = 15;

pub fn int(v: &Integer) -> Value {
    Value::String(v.to_string())
}

pub fn rat(v: &Rational) -> Value {
    Value::String(arith::format_rational(v))
}

pub fn ints<'a>(vs: impl IntoIterator<Item = &'a Integer>) -> Value {
    Value::Array(vs.into_iter().map(int).collect())
}

pub fn rats<'a>(vs: impl IntoIterator<Item = &'a Rational>) -> Value {
    Value::Array(vs.into_iter().map(rat).collect())
}

/// Coefficients from degree 0 up; `[]` for the zero polynomial.
pub fn poly(p: &ExactPoly) -> Value {
    rats(p.coeffs())
}

pub fn series(s: &ExactSeries) -> Value {
    rats((0..=s.order()).map(|i| s.coeff(i)))
}

pub fn interval(iv: &Interval) -> Value {
    let (lo, hi) = iv.to_decimal(DECIMAL_DIGITS);
    json!({
        "lo": rat(&iv.lo),
        "hi": rat(&iv.hi),
        "decimal": [lo, hi],
    })
}

pub fn decimal(v: &Rational) -> Value {
    Value::String(arith::to_decimal(v, DECIMAL_DIGITS))
}

/// One CSV record per cell of a table payload: `g,n,count` or, with
/// 1-chords, `g,n,m,count`.
pub fn table_csv(rows: &[Value]) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let refined = rows.first().is_some_and(|r| r.get("by_one_chords").is_some());
    if refined {
        w.write_record(["g", "n", "m", "count"])?;
    } else {
        w.write_record(["g", "n", "count"])?;
    }
    for row in rows {
        let g = row["g"].to_string();
        if refined {
            for cell in row["by_one_chords"].as_array().into_iter().flatten() {
                let n = cell["n"].to_string();
                for (m, c) in cell["counts"].as_array().into_iter().flatten().enumerate() {
                    w.write_record([g.as_str(), n.as_str(), &m.to_string(), c.as_str().unwrap_or_default()])?;
                }
            }
        } else {
            for (n, c) in row["counts"].as_array().into_iter().flatten().enumerate() {
                w.write_record([g.as_str(), &n.to_string(), c.as_str().unwrap_or_default()])?;
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

//! Exact rationals and their text forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn big(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

/// Always `p/q` with `q >= 1`, including integers (`2/1`).
pub fn to_pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `p/q` or a bare integer `p`.
pub fn parse_pq(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(big(s.parse().map_err(|_| bad())?)),
    }
}

fn fixed_2dp(hundredths: &BigInt) -> String {
    let sign = if hundredths.is_negative() { "-" } else { "" };
    let (whole, frac) = hundredths.abs().div_rem(&BigInt::from(100));
    format!("{sign}{whole}.{frac:0>2}")
}

/// Rounds half away from zero to two decimals.
pub fn round_2dp(r: &Rational) -> String {
    let scaled = r * int(100);
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let h = if scaled.is_negative() {
        -(-scaled + half).floor().to_integer()
    } else {
        (scaled + half).floor().to_integer()
    };
    fixed_2dp(&h)
}

/// Truncates toward zero to two decimals.
pub fn truncate_2dp(r: &Rational) -> String {
    fixed_2dp(&(r * int(100)).trunc().to_integer())
}

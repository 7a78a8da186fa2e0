//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"n"` or `"p/q"` (optional leading sign, surrounding whitespace ignored).
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match t.split_once('/') {
        None => t.parse::<BigInt>().map(Scalar::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Scalar::new(p, q))
        }
    }
}

/// Canonical text form: `"n"` for integers, `"p/q"` otherwise, lowest terms.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

pub fn is_integer(x: &Scalar) -> bool {
    x.denom().is_one()
}

pub fn abs(x: &Scalar) -> Scalar {
    x.abs()
}

pub fn binomial(n: u32, k: u32) -> Scalar {
    if k > n {
        return zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Scalar::from_integer(acc)
}

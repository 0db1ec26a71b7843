//! Exact rational scalars.
//!
//! Every quantity in this crate is a [`Rat`], an arbitrary-precision rational
//! kept in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// Integer-valued rational.
pub fn rat(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// `num / den`, reduced.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rats(vs: &[i64]) -> Vec<Rat> {
    vs.iter().map(|&v| rat(v)).collect()
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn sum<'a, I: IntoIterator<Item = &'a Rat>>(it: I) -> Rat {
    it.into_iter().fold(Rat::zero(), |acc, x| acc + x)
}

pub fn is_integral(x: &Rat) -> bool {
    x.denom().is_one()
}

/// Converts an integral rational to `i64`, if it fits.
pub fn to_i64(x: &Rat) -> Option<i64> {
    if is_integral(x) {
        x.numer().to_i64()
    } else {
        None
    }
}

pub fn to_i64_vec(xs: &[Rat], what: &str) -> Result<Vec<i64>> {
    xs.iter()
        .map(|x| {
            to_i64(x).ok_or_else(|| Error::NonInteger(format!("{what} entry {x} is not a machine integer")))
        })
        .collect()
}

pub fn max_abs<'a, I: IntoIterator<Item = &'a Rat>>(it: I) -> Rat {
    it.into_iter().map(|x| x.abs()).fold(Rat::zero(), |acc, x| if x > acc { x } else { acc })
}

/// Least common multiple of all denominators.
pub fn common_denominator<'a, I: IntoIterator<Item = &'a Rat>>(it: I) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Weakly decreasing check; returns the first index `j` with `xs[j] < xs[j+1]`.
pub fn first_ascent(xs: &[Rat]) -> Option<usize> {
    xs.windows(2).position(|w| w[0] < w[1])
}

//! Exact rational scalars used by the LP engine and fractional certificates.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational in canonical form (reduced, positive
/// denominator). `num_rational` maintains the invariants on every operation.
pub type Rational = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn rat_is_zero(r: &Rational) -> bool {
    r.is_zero()
}

/// Parses "p/q" or a bare integer "p".
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(Rational::from_integer(p))
        }
    }
}

/// `ceil(r)` as i64; panics if out of range (values here stay tiny).
pub fn ceil_i64(r: &Rational) -> i64 {
    let c = r.ceil();
    let i = c.to_integer();
    i64::try_from(i).expect("rational ceil fits i64")
}

/// `floor(r)` as i64.
pub fn floor_i64(r: &Rational) -> i64 {
    let f = r.floor();
    let i = f.to_integer();
    i64::try_from(i).expect("rational floor fits i64")
}

pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative()
}

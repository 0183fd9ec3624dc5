//! Exact rational scalars.
//!
//! Everything upstream of the classifier verdict is computed over `Rat`
//! (arbitrary-precision rationals, always reduced, positive denominator).
//! Floating point appears only in the numerical labs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator (guaranteed by the `num-rational` constructors).
pub type Rat = BigRational;

/// Shorthand for small integer-valued rationals.
pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Default certification width for real-part intervals: 2^-64.
pub fn default_tol() -> Rat {
    Rat::new(BigInt::one(), BigInt::from(2u8).pow(64))
}

/// Parses "p/q" or "p" (optional sign, arbitrary precision).
pub fn parse_rat(s: &str) -> Result<Rat, RatParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(RatParseError(s.to_string()));
    }
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s).map_err(|_| RatParseError(s.to_string()))?;
            Ok(Rat::from_integer(n))
        }
        Some((num, den)) => {
            let n = BigInt::from_str(num.trim()).map_err(|_| RatParseError(s.to_string()))?;
            let d = BigInt::from_str(den.trim()).map_err(|_| RatParseError(s.to_string()))?;
            if d.is_zero() {
                return Err(RatParseError(s.to_string()));
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Renders a rational as "p" or "p/q"; inverse of [`parse_rat`].
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn rat_to_f64(x: &Rat) -> f64 {
    // Good enough for reporting; exact fields always travel as strings.
    let n = x.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let d = x.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    n / d
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse rational from {0:?}")]
pub struct RatParseError(pub String);

/// Closed interval with rational endpoints, `lo <= hi`.
///
/// Used for certified enclosures of algebraic numbers (eigenvalue real
/// parts, critical exponents). A point interval means the value is known
/// exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RatInterval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RatInterval { lo, hi }
    }

    pub fn point(x: Rat) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &RatInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &RatInterval) -> bool {
        !(self.hi < other.lo || other.hi < self.lo)
    }

    /// Image under x -> c/x for positive intervals (0 < lo).
    pub fn reciprocal_scaled(&self, c: &Rat) -> RatInterval {
        assert!(self.lo.is_positive(), "reciprocal of a non-positive interval");
        RatInterval::new(c / &self.hi, c / &self.lo)
    }
}

impl std::fmt::Display for RatInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_point() {
            write!(f, "{}", format_rat(&self.lo))
        } else {
            write!(f, "[{}, {}]", format_rat(&self.lo), format_rat(&self.hi))
        }
    }
}

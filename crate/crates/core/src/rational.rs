//! Small helpers around the `Rational` scalar type.

use crate::{Int, Rational};
use num::{BigInt, One, Zero};

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a rational in lowest terms.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact factorial.
pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for k in 2..=n {
        acc *= Int::from(k);
    }
    acc
}

/// Parse a rational from `"p/q"` or a plain integer string.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den.is_zero() {
                None
            } else {
                Some(Rational::new(num, den))
            }
        }
        None => {
            let num: BigInt = s.parse().ok()?;
            Some(Rational::from_integer(num))
        }
    }
}

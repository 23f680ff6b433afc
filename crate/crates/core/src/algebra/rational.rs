//! Exact scalar helpers on top of [`num_rational::BigRational`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always reduced with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or an integer literal. Decimal literals are refused so a
/// float never silently becomes a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::ParseRational(s.to_string());
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(n, d))
}

/// Renders as `"p/q"`, or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Nearest `f64`, including for numerators and denominators far outside the
/// `f64` range as long as the quotient itself is representable.
pub fn to_f64(r: &Rational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() && (v != 0.0 || r.is_zero()) {
            return v;
        }
    }
    // Fall back to scaling by powers of two.
    let nb = r.numer().bits() as i64;
    let db = r.denom().bits() as i64;
    let shift = nb - db - 60;
    let scaled = if shift > 0 {
        Rational::new(r.numer().clone(), r.denom() << (shift as usize))
    } else {
        Rational::new(r.numer() << ((-shift) as usize), r.denom().clone())
    };
    let m = scaled.to_f64().unwrap_or(f64::NAN);
    m * 2f64.powi(shift as i32)
}

pub fn floor_to_i64(r: &Rational) -> i64 {
    r.floor()
        .to_integer()
        .to_i64()
        .expect("floor out of i64 range")
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Rising factorial `(x)_k = x (x+1) ... (x+k-1)`.
pub fn rising(x: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut f = x.clone();
    for _ in 0..k {
        acc *= &f;
        f += Rational::one();
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn pow2(k: usize) -> Rational {
    Rational::from_integer(BigInt::one() << k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("9/2").unwrap(), rat(9, 2));
        assert_eq!(parse_rational(" -3 ").unwrap(), int(-3));
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert!(parse_rational("4.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert_eq!(format_rational(&rat(-6, 4)), "-3/2");
        assert_eq!(format_rational(&int(7)), "7");
    }

    #[test]
    fn huge_quotient_to_f64() {
        let big = BigInt::one() << 3000usize;
        let r = Rational::new(big.clone() * 3, big);
        assert_eq!(to_f64(&r), 3.0);
        let tiny = Rational::new(BigInt::one(), BigInt::one() << 1030usize);
        assert!(to_f64(&tiny) > 0.0);
    }

    #[test]
    fn combinatorics() {
        assert_eq!(rising(&int(3), 3), int(60));
        assert_eq!(rising(&int(-2), 3), int(0));
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(factorial(5), BigInt::from(120));
    }
}

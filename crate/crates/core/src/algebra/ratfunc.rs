use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Polynomial;
use super::rational::{to_f64, Rational};
use crate::error::{Error, Result};

/// `num / den` in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

/// Cancels the gcd and makes the denominator monic.
pub fn rf_normalize(num: Polynomial, den: Polynomial) -> Result<RationalFunction> {
    RationalFunction::new(num, den)
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lc = den.leading_coeff().unwrap().recip();
        Ok(RationalFunction {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `None` at a pole.
    pub fn eval(&self, y: &Rational) -> Option<Rational> {
        let d = self.den.eval(y);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(y) / d)
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        let n = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::new(n, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn sub(&self, other: &RationalFunction) -> RationalFunction {
        let n = &(&self.num * &other.den) - &(&other.num * &self.den);
        Self::new(n, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn recip(&self) -> Result<RationalFunction> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn derivative(&self) -> RationalFunction {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(n, &self.den * &self.den).expect("nonzero denominator")
    }

    /// Floating-point value that survives high degree and large `y`.
    pub fn eval_f64(&self, y: f64) -> f64 {
        let (n, d) = self.to_f64_parts();
        eval_parts_f64(&n, &d, y)
    }

    /// Float coefficients for repeated sampling. Numerator and denominator
    /// share a power-of-two scale so the largest coefficient is near 1.
    pub fn to_f64_parts(&self) -> (Vec<f64>, Vec<f64>) {
        let shift = self
            .num
            .coeffs()
            .iter()
            .chain(self.den.coeffs())
            .filter(|c| !c.is_zero())
            .map(|c| c.numer().bits() as i64 - c.denom().bits() as i64)
            .max()
            .unwrap_or(0);
        (scaled_f64(&self.num, shift), scaled_f64(&self.den, shift))
    }
}

/// Coefficients times `2^-shift`, converted to `f64`.
pub fn scaled_f64(p: &Polynomial, shift: i64) -> Vec<f64> {
    let scale = if shift >= 0 {
        Rational::new(1.into(), BigInt::one() << shift as usize)
    } else {
        Rational::from_integer(BigInt::one() << (-shift) as usize)
    };
    p.coeffs().iter().map(|c| to_f64(&(c * &scale))).collect()
}

/// Evaluates `num/den` from float coefficient lists, scaled for large `y`.
pub fn eval_parts_f64(num: &[f64], den: &[f64], y: f64) -> f64 {
    let (nm, ne) = Polynomial::eval_f64_scaled(num, y);
    let (dm, de) = Polynomial::eval_f64_scaled(den, y);
    if nm == 0.0 {
        return 0.0;
    }
    (nm / dm) * y.powi(ne - de)
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    #[test]
    fn normalize_examples() {
        let r = rf_normalize(
            Polynomial::from_ints(&[0, 2]),
            Polynomial::from_ints(&[0, 0, 4]),
        )
        .unwrap();
        assert_eq!(r.num(), &Polynomial::from_fracs(&[(1, 2)]));
        assert_eq!(r.den(), &Polynomial::from_ints(&[0, 1]));

        let r = rf_normalize(
            Polynomial::from_ints(&[-1, 0, 1]),
            Polynomial::from_ints(&[-1, 1]),
        )
        .unwrap();
        assert_eq!(r.num(), &Polynomial::from_ints(&[1, 1]));
        assert_eq!(r.den(), &Polynomial::one());

        let r = rf_normalize(Polynomial::zero(), Polynomial::from_ints(&[0, 1])).unwrap();
        assert!(r.is_zero());
        assert_eq!(r.den(), &Polynomial::one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            rf_normalize(Polynomial::one(), Polynomial::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn quotient_rule() {
        // d/dy 1/y = -1/y^2
        let r = RationalFunction::new(Polynomial::one(), Polynomial::var()).unwrap();
        let d = r.derivative();
        assert_eq!(d.eval(&int(2)).unwrap(), rat(-1, 4));
        assert_eq!(r.eval(&Rational::zero()), None);
    }

    #[test]
    fn float_eval_far_out() {
        // (y^40 + 1) / y^40 -> 1
        let mut n = vec![0i64; 41];
        n[0] = 1;
        n[40] = 1;
        let r = RationalFunction::new(Polynomial::from_ints(&n), Polynomial::monomial(int(1), 40))
            .unwrap();
        assert!((r.eval_f64(1.2e6) - 1.0).abs() < 1e-12);
    }
}

use std::fmt;

use num_traits::One;

use crate::algebra::rational::{format_rational, int, to_f64, Rational};
use crate::algebra::{Polynomial, RationalFunction};
use crate::morse::MorseParam;
use crate::sign::Sign;

/// `y^y_power * exp(exp_coeff / y) * rat(y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuasiRational {
    pub y_power: Rational,
    pub exp_coeff: Rational,
    pub rat: RationalFunction,
}

impl QuasiRational {
    pub fn new(y_power: Rational, exp_coeff: Rational, rat: RationalFunction) -> Self {
        QuasiRational {
            y_power,
            exp_coeff,
            rat,
        }
    }

    pub fn mul(&self, other: &QuasiRational) -> QuasiRational {
        QuasiRational {
            y_power: &self.y_power + &other.y_power,
            exp_coeff: &self.exp_coeff + &other.exp_coeff,
            rat: self.rat.mul(&other.rat),
        }
    }

    /// Multiplies by `y^k`.
    pub fn times_power(&self, k: &Rational) -> QuasiRational {
        QuasiRational {
            y_power: &self.y_power + k,
            ..self.clone()
        }
    }

    /// True when the value is identically the monomial `y^k`.
    pub fn is_power_of_y(&self, k: &Rational) -> bool {
        use num_traits::Zero;
        self.exp_coeff.is_zero()
            && self.rat.den().degree() == Some(0)
            && self.rat.num().degree().is_some()
            && {
                let num = self.rat.num();
                let shift = num.order_at_zero().unwrap();
                num.degree() == Some(shift)
                    && num.coeff(shift).is_one()
                    && &self.y_power + int(shift as i64) == *k
            }
    }

    /// `ln |value|` and its sign, evaluated without overflow.
    pub fn log_abs_f64(&self, y: f64) -> (f64, f64) {
        let v = self.rat.eval_f64(y);
        let ln = to_f64(&self.y_power) * y.ln() + to_f64(&self.exp_coeff) / y + v.abs().ln();
        (ln, v.signum())
    }

    pub fn eval_f64(&self, y: f64) -> f64 {
        let (ln, s) = self.log_abs_f64(y);
        s * ln.exp()
    }
}

impl fmt::Display for QuasiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "y^({}) * exp({}/y) * [{}]",
            format_rational(&self.y_power),
            format_rational(&self.exp_coeff),
            self.rat
        )
    }
}

/// `phi_{+-,0}[y; a] = y^{1 +- a} exp(+-1/y)`.
pub fn basic_solution(sign: Sign, param: &MorseParam) -> QuasiRational {
    let s = int(sign.value());
    QuasiRational::new(
        Rational::one() + &s * param.a(),
        s,
        RationalFunction::from_poly(Polynomial::one()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn reciprocity_identities() {
        for a in [int(3), rat(7, 3), rat(-5, 2), int(0)] {
            let p = MorseParam::with_threshold(a.clone());
            let up = p.shifted(1);
            let prod = basic_solution(Sign::Minus, &up).mul(&basic_solution(Sign::Plus, &p));
            assert!(prod.is_power_of_y(&int(1)));
            let xi = basic_solution(Sign::Plus, &p)
                .mul(&basic_solution(Sign::Minus, &p))
                .times_power(&int(-2));
            assert!(xi.is_power_of_y(&int(0)));
        }
    }

    #[test]
    fn float_evaluation() {
        let p = MorseParam::new(int(3)).unwrap();
        let phi = basic_solution(Sign::Minus, &p);
        // y^{-2} e^{-1/y} at y = 1
        assert!((phi.eval_f64(1.0) - (-1.0f64).exp()).abs() < 1e-15);
    }
}

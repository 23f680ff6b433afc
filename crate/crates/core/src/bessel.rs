//! Generalized Bessel, Romanovski-Bessel and Laguerre polynomials, and exact
//! residuals of the identities that tie them together.

use num_traits::{One, Zero};

use crate::algebra::rational::{binomial, factorial, int, rising, Rational};
use crate::algebra::Polynomial;
use crate::error::{Error, Result};
use crate::sign::Sign;

/// `(alpha, beta)` with `beta != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BesselIndex {
    alpha: Rational,
    beta: Rational,
}

impl BesselIndex {
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self> {
        if beta.is_zero() {
            return Err(Error::ZeroBeta);
        }
        Ok(BesselIndex { alpha, beta })
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }
}

/// Coefficients of `y^2 F'' + (tau_linear y + tau_const) F' + eigenshift(m) F = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OdeCoefficients {
    pub sign: Sign,
    pub a: Rational,
    pub tau_linear: Rational,
    pub tau_const: Rational,
}

impl OdeCoefficients {
    pub fn new(sign: Sign, a: &Rational) -> Self {
        let s = int(sign.value());
        OdeCoefficients {
            sign,
            a: a.clone(),
            tau_linear: int(2) * (Rational::one() + &s * a),
            tau_const: int(-2) * s,
        }
    }

    /// `-m (tau_linear + m - 1)`.
    pub fn eigenshift(&self, m: usize) -> Rational {
        let m = int(m as i64);
        -(&m * (&self.tau_linear + &m - Rational::one()))
    }
}

/// `Y_n^{(alpha)}(y) = sum_k C(n,k) (n+alpha+1)_k (y/2)^k`.
pub fn gen_bessel(n: usize, alpha: &Rational) -> Polynomial {
    let start = int(n as i64) + alpha + Rational::one();
    let mut cs = Vec::with_capacity(n + 1);
    let mut half_pow = Rational::one();
    for k in 0..=n {
        let c = Rational::from_integer(binomial(n, k)) * rising(&start, k) * &half_pow;
        cs.push(c);
        half_pow /= int(2);
    }
    Polynomial::new(cs)
}

/// `Y_n^{(alpha)}(2y / beta)`: `beta = 2` is the identity, `beta = -2`
/// reflects the argument.
pub fn gen_bessel_scaled(n: usize, idx: &BesselIndex) -> Polynomial {
    gen_bessel(n, &idx.alpha).scale_arg(&(int(2) / &idx.beta))
}

/// `B_n^{(A)} = Y_n^{(-2A-1)}`. The orthogonal range is `n < A`; outside it
/// the polynomial is still returned.
pub fn rbessel(n: usize, big_a: &Rational) -> Polynomial {
    if int(n as i64) >= *big_a {
        log::warn!("rbessel: n = {n} is outside the orthogonal range n < {big_a}");
    }
    gen_bessel(n, &(int(-2) * big_a - Rational::one()))
}

/// Generalized Laguerre `L_n^{(alpha)}(y) = sum_k (-1)^k C(n+alpha, n-k) y^k / k!`.
pub fn laguerre(n: usize, alpha: &Rational) -> Polynomial {
    // C(n+alpha, n-k) = (alpha+k+1)_{n-k} / (n-k)!
    let cs = (0..=n)
        .map(|k| {
            let top = rising(&(alpha + int(k as i64 + 1)), n - k);
            let den = factorial(n - k) * factorial(k);
            let s = if k % 2 == 0 { 1 } else { -1 };
            top * int(s) / Rational::from_integer(den)
        })
        .collect();
    Polynomial::new(cs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    LaguerreConnection,
    BackwardShift,
    ForwardShift,
    BochnerOde,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 4] = [
        IdentityKind::LaguerreConnection,
        IdentityKind::BackwardShift,
        IdentityKind::ForwardShift,
        IdentityKind::BochnerOde,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::LaguerreConnection => "laguerre_connection",
            IdentityKind::BackwardShift => "backward_shift",
            IdentityKind::ForwardShift => "forward_shift",
            IdentityKind::BochnerOde => "bochner_ode",
        }
    }
}

/// Left side minus right side of the named identity, as a polynomial in `y`.
///
/// The Bessel index is `alpha = -2a` for `Sign::Minus` and `alpha = 2a` for
/// `Sign::Plus`; the plus family is evaluated at the reflected argument where
/// the identity is stated that way. Returns zero when the identity holds.
pub fn identity_residual(kind: IdentityKind, m: usize, a: &Rational, sign: Sign) -> Polynomial {
    let alpha = int(2 * sign.value()) * a;
    match kind {
        IdentityKind::LaguerreConnection => laguerre_connection_residual(m, &alpha, sign),
        IdentityKind::BackwardShift => {
            // y^2 Y' + (alpha y + 2) Y - 2 Y_{m+1}^{(alpha-2)}
            let y = gen_bessel(m, &alpha);
            let lin = Polynomial::new(vec![int(2), alpha.clone()]);
            let lhs = &y.derivative().shift_up(2) + &(&lin * &y);
            let rhs = gen_bessel(m + 1, &(&alpha - int(2))).scale(&int(2));
            &lhs - &rhs
        }
        IdentityKind::ForwardShift => {
            assert!(m >= 1, "forward shift needs m >= 1");
            // Y_m' = m (m + alpha + 1) / 2 * Y_{m-1}^{(alpha+2)}
            let lhs = gen_bessel(m, &alpha).derivative();
            let mm = int(m as i64);
            let c = &mm * (&mm + &alpha + Rational::one()) / int(2);
            let rhs = gen_bessel(m - 1, &(&alpha + int(2))).scale(&c);
            &lhs - &rhs
        }
        IdentityKind::BochnerOde => {
            let ode = OdeCoefficients::new(sign, a);
            let idx = BesselIndex::new(alpha, int(-2 * sign.value())).expect("beta is +-2");
            let f = gen_bessel_scaled(m, &idx);
            let d1 = f.derivative();
            let lin = Polynomial::new(vec![ode.tau_const.clone(), ode.tau_linear.clone()]);
            let t = &d1.derivative().shift_up(2) + &(&lin * &d1);
            &t + &f.scale(&ode.eigenshift(m))
        }
    }
}

/// `Y_m^{(alpha)}(y) = m! (-y/2)^m L_m^{(-alpha-2m-1)}(2/y)`, and for the plus
/// family the reflected form `Y_m^{(alpha)}(-y) = m! (y/2)^m L_m^{(...)}(-2/y)`.
fn laguerre_connection_residual(m: usize, alpha: &Rational, sign: Sign) -> Polynomial {
    let lag = laguerre(m, &(-alpha - int(2 * m as i64 + 1)));
    // y^m * sum_k l_k (s 2 / y)^k with s = -1 for the reflected form
    let s = match sign {
        Sign::Minus => Rational::one(),
        Sign::Plus => -Rational::one(),
    };
    let pref = Rational::from_integer(factorial(m)) * (-&s / int(2)).pow(m as i32);
    let mut cs = vec![Rational::zero(); m + 1];
    let mut two_k = Rational::one();
    for k in 0..=m {
        cs[m - k] = lag.coeff(k) * &two_k * &pref;
        two_k *= &s * int(2);
    }
    let rhs = Polynomial::new(cs);
    let lhs = match sign {
        Sign::Minus => gen_bessel(m, alpha),
        Sign::Plus => gen_bessel(m, alpha).reflect(),
    };
    &lhs - &rhs
}

/// True when the top coefficient `(m+alpha+1)_m` of `Y_m^{(alpha)}` is zero,
/// so the degree falls below `m`.
pub fn leading_rising_vanishes(m: usize, alpha: &Rational) -> bool {
    rising(&(int(m as i64) + alpha + Rational::one()), m).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn p(cs: &[(i64, i64)]) -> Polynomial {
        Polynomial::from_fracs(cs)
    }

    #[test]
    fn gen_bessel_examples() {
        assert_eq!(gen_bessel(0, &rat(7, 3)), Polynomial::one());
        assert_eq!(gen_bessel(1, &int(-6)), Polynomial::from_ints(&[1, -2]));
        assert_eq!(gen_bessel(2, &int(-6)), p(&[(1, 1), (-3, 1), (3, 2)]));
        assert_eq!(gen_bessel(2, &int(3)), p(&[(1, 1), (6, 1), (21, 2)]));
    }

    #[test]
    fn scaled_examples() {
        let id = BesselIndex::new(int(-6), int(2)).unwrap();
        assert_eq!(gen_bessel_scaled(2, &id), gen_bessel(2, &int(-6)));
        let r = BesselIndex::new(int(3), int(-2)).unwrap();
        assert_eq!(gen_bessel_scaled(1, &r), p(&[(1, 1), (-5, 2)]));
        let r = BesselIndex::new(int(0), int(-2)).unwrap();
        assert_eq!(gen_bessel_scaled(2, &r), Polynomial::from_ints(&[1, -3, 3]));
        assert_eq!(BesselIndex::new(int(1), int(0)), Err(Error::ZeroBeta));
    }

    #[test]
    fn rbessel_examples() {
        let a = rat(5, 2);
        assert_eq!(rbessel(0, &a), Polynomial::one());
        assert_eq!(rbessel(1, &a), Polynomial::from_ints(&[1, -2]));
        assert_eq!(rbessel(2, &a), p(&[(1, 1), (-3, 1), (3, 2)]));
    }

    #[test]
    fn laguerre_examples() {
        assert_eq!(laguerre(0, &rat(1, 3)), Polynomial::one());
        let al = rat(5, 7);
        assert_eq!(
            laguerre(1, &al),
            Polynomial::new(vec![Rational::one() + &al, int(-1)])
        );
        assert_eq!(laguerre(1, &int(-6)), Polynomial::from_ints(&[-5, -1]));
        // L_2^{(0)} = 1 - 2y + y^2/2
        assert_eq!(laguerre(2, &int(0)), p(&[(1, 1), (-2, 1), (1, 2)]));
    }

    #[test]
    fn ode_coefficients() {
        let c = OdeCoefficients::new(Sign::Minus, &int(3));
        assert_eq!(c.tau_linear, int(-4));
        assert_eq!(c.tau_const, int(2));
        assert_eq!(c.eigenshift(2), int(6));
    }

    #[test]
    fn residual_examples() {
        for m in [1, 2] {
            assert!(identity_residual(IdentityKind::BochnerOde, m, &int(3), Sign::Minus).is_zero());
        }
        for a in [rat(1, 3), int(2), rat(-7, 4)] {
            for sign in [Sign::Plus, Sign::Minus] {
                assert!(identity_residual(IdentityKind::LaguerreConnection, 1, &a, sign).is_zero());
            }
        }
    }

    #[test]
    fn residual_detects_a_wrong_convention() {
        // The literal y/beta scaling would break the ODE.
        let a = int(3);
        let f = gen_bessel(2, &int(-6)).scale_arg(&rat(1, 2));
        let ode = OdeCoefficients::new(Sign::Minus, &a);
        let d1 = f.derivative();
        let lin = Polynomial::new(vec![ode.tau_const.clone(), ode.tau_linear.clone()]);
        let r = &(&d1.derivative().shift_up(2) + &(&lin * &d1)) + &f.scale(&ode.eigenshift(2));
        assert!(!r.is_zero());
    }

    #[test]
    fn degree_drop_detection() {
        // Y_5^{(-6)} collapses to a constant.
        assert!(leading_rising_vanishes(5, &int(-6)));
        assert_eq!(gen_bessel(5, &int(-6)).degree(), Some(0));
        assert!(!leading_rising_vanishes(6, &int(-6)));
    }
}

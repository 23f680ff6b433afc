//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::intpoly;
use super::rational::{format_rational, to_f64, Rational};

/// Coefficients are stored constant-first. The zero polynomial is the empty
/// vector and no other polynomial carries a trailing zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(p: &Polynomial, q: &Polynomial, op: ArithOp) -> Polynomial {
    match op {
        ArithOp::Add => p + q,
        ArithOp::Sub => p - q,
        ArithOp::Mul => p * q,
    }
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * y^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `y`
    pub fn var() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(
            cs.iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// Each entry is `(numerator, denominator)`.
    pub fn from_fracs(cs: &[(i64, i64)]) -> Self {
        Self::new(
            cs.iter()
                .map(|&(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Lowest power of `y` with a nonzero coefficient.
    pub fn order_at_zero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `p(c * y)`.
    pub fn scale_arg(&self, c: &Rational) -> Self {
        let mut pw = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            out.push(x * &pw);
            pw *= c;
        }
        Self::new(out)
    }

    /// `p(-y)`.
    pub fn reflect(&self) -> Self {
        self.scale_arg(&-Rational::one())
    }

    /// Multiplies by `y^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Rational::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs: v }
    }

    pub fn pow(&self, n: usize) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * y + c;
        }
        acc
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(to_f64).collect()
    }

    /// Monic rescaling; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc_inv = d.coeffs[dd].recip();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Quotient of a division known to be exact.
    pub fn exact_div(&self, d: &Polynomial) -> Polynomial {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (_, a) = self.primitive_part();
        let (_, b) = other.primitive_part();
        Polynomial::from_bigints(&intpoly::gcd(&a, &b)).monic()
    }

    /// `p / gcd(p, p')`, made monic.
    pub fn squarefree_part(&self) -> Polynomial {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).monic()
    }

    /// Splits `p = factor * prim` with `prim` an integer polynomial whose
    /// coefficients have gcd 1 and a positive leading coefficient.
    pub fn primitive_part(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::one(), Vec::new());
        }
        let den_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer())
            .collect();
        let mut content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
        (Rational::new(content, den_lcm), prim)
    }

    pub fn from_bigints(cs: &[BigInt]) -> Self {
        Self::new(
            cs.iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Evaluates in floating point without overflow for large `y` and high
    /// degree. Returns `(m, e)` with `p(y) = m * y^e`; for `y <= 1` the
    /// exponent is 0 and for `y > 1` it is the degree.
    pub fn eval_f64_scaled(coeffs: &[f64], y: f64) -> (f64, i32) {
        if coeffs.is_empty() {
            return (0.0, 0);
        }
        if y <= 1.0 {
            let mut acc = 0.0;
            for c in coeffs.iter().rev() {
                acc = acc * y + c;
            }
            (acc, 0)
        } else {
            let inv = 1.0 / y;
            let mut acc = 0.0;
            for c in coeffs.iter() {
                acc = acc * inv + c;
            }
            (acc, (coeffs.len() - 1) as i32)
        }
    }
}

/// Interpolating polynomial through `(xs[i], ys[i])` with distinct nodes,
/// built from Newton divided differences.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Polynomial {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = Polynomial::zero();
    for i in (0..n).rev() {
        // acc = acc * (y - x_i) + dd_i
        let lin = Polynomial::new(vec![-xs[i].clone(), Rational::one()]);
        acc = &(&acc * &lin) + &Polynomial::constant(dd[i].clone());
    }
    acc
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = format_rational(&c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != "1" {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "y")?;
                    } else {
                        write!(f, "y^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn p(cs: &[(i64, i64)]) -> Polynomial {
        Polynomial::from_fracs(cs)
    }

    #[test]
    fn arithmetic_examples() {
        let a = Polynomial::from_ints(&[1, -2]);
        let b = Polynomial::from_ints(&[0, 2]);
        assert_eq!(poly_arith(&a, &b, ArithOp::Add), Polynomial::one());
        let c = Polynomial::from_ints(&[1, 2]);
        assert_eq!(
            poly_arith(&a, &c, ArithOp::Mul),
            Polynomial::from_ints(&[1, 0, -4])
        );
        assert!(poly_arith(&a, &Polynomial::zero(), ArithOp::Mul).is_zero());
        assert_eq!(poly_arith(&a, &a, ArithOp::Sub), Polynomial::zero());
    }

    #[test]
    fn derivative_examples() {
        let q = p(&[(1, 1), (-3, 1), (3, 2)]);
        assert_eq!(q.derivative(), Polynomial::from_ints(&[-3, 3]));
        assert!(Polynomial::from_ints(&[5]).derivative().is_zero());
        assert_eq!(
            Polynomial::monomial(int(1), 4).derivative(),
            Polynomial::monomial(int(4), 3)
        );
    }

    #[test]
    fn division_and_gcd() {
        let a = Polynomial::from_ints(&[-1, 0, 1]);
        let b = Polynomial::from_ints(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, Polynomial::from_ints(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&b), b);
        let sq = &a * &b; // (y-1)^2 (y+1)
        assert_eq!(sq.squarefree_part(), a);
    }

    #[test]
    fn primitive_part_roundtrip() {
        let q = p(&[(-3, 4), (3, 2), (-9, 8)]);
        let (f, prim) = q.primitive_part();
        assert!(prim.last().unwrap().is_positive());
        assert_eq!(Polynomial::from_bigints(&prim).scale(&f), q);
        assert_eq!(f, rat(-3, 8));
    }

    #[test]
    fn display() {
        assert_eq!(
            p(&[(1, 1), (-3, 1), (3, 2)]).to_string(),
            "1 - 3*y + 3/2*y^2"
        );
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::from_ints(&[0, -1]).to_string(), "-y");
    }

    #[test]
    fn scaled_eval_matches_plain() {
        let q = Polynomial::from_ints(&[3, -1, 0, 2]);
        let cs = q.to_f64_coeffs();
        for &y in &[0.25, 1.0, 3.5, 1e3] {
            let (m, e) = Polynomial::eval_f64_scaled(&cs, y);
            let v = m * y.powi(e);
            let exact = 3.0 - y + 2.0 * y * y * y;
            assert!((v - exact).abs() <= 1e-12 * exact.abs().max(1.0));
        }
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let q = p(&[(2, 3), (-1, 1), (0, 1), (5, 4)]);
        let xs: Vec<Rational> = (0..4).map(int).collect();
        let ys: Vec<Rational> = xs.iter().map(|x| q.eval(x)).collect();
        assert_eq!(interpolate(&xs, &ys), q);
    }

    #[test]
    fn reflect_and_scale_arg() {
        let q = Polynomial::from_ints(&[1, 3, 3]);
        assert_eq!(q.reflect(), Polynomial::from_ints(&[1, -3, 3]));
        assert_eq!(q.scale_arg(&int(2)), Polynomial::from_ints(&[1, 6, 12]));
    }
}

//! Integrals over `(0, inf)` of quasi-rational weights times polynomials,
//! computed in `t = ln y` with adaptive Gauss-Legendre panels.

use std::sync::OnceLock;

use num_traits::{Signed, Zero};

use crate::algebra::rational::{int, to_f64, Rational};
use crate::algebra::Polynomial;
use crate::bessel::rbessel;
use crate::error::{Error, Result};
use crate::morse::{
    certify_admissible, eigen_numerator, eop_weight, eop_weight_alternative, DeformationSpec,
    QuasiRational,
};

/// `weight(y) * left(y) * right(y)`.
#[derive(Clone, Debug)]
pub struct Integrand {
    pub weight: QuasiRational,
    pub left: Polynomial,
    pub right: Polynomial,
}

const GL_ORDER: usize = 20;

/// Gauss-Legendre nodes and weights on `[-1, 1]` by Newton iteration on
/// `P_n`.
fn gauss_legendre() -> &'static [(f64, f64)] {
    static NODES: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    NODES.get_or_init(|| {
        let n = GL_ORDER;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
        }
        out
    })
}

/// Neumaier compensated sum.
#[derive(Default, Clone, Copy)]
struct Sum {
    s: f64,
    c: f64,
}

impl Sum {
    fn add(&mut self, x: f64) {
        let t = self.s + x;
        if self.s.abs() >= x.abs() {
            self.c += (self.s - t) + x;
        } else {
            self.c += (x - t) + self.s;
        }
        self.s = t;
    }

    fn value(&self) -> f64 {
        self.s + self.c
    }
}

/// The integrand as a function of `t` with `dy = y dt`, evaluated through
/// logarithms so that `y^p e^{c/y}` never overflows on its own.
struct Prepared {
    power: f64,
    exp_coeff: f64,
    num: Vec<f64>,
    den: Vec<f64>,
    left: Vec<f64>,
    right: Vec<f64>,
}

impl Prepared {
    fn new(f: &Integrand) -> Self {
        let (num, den) = f.weight.rat.to_f64_parts();
        Prepared {
            power: to_f64(&f.weight.y_power) + 1.0,
            exp_coeff: to_f64(&f.weight.exp_coeff),
            num,
            den,
            left: f.left.to_f64_coeffs(),
            right: f.right.to_f64_coeffs(),
        }
    }

    fn eval(&self, t: f64) -> f64 {
        let y = t.exp();
        let (nm, ne) = Polynomial::eval_f64_scaled(&self.num, y);
        let (dm, de) = Polynomial::eval_f64_scaled(&self.den, y);
        let (lm, le) = Polynomial::eval_f64_scaled(&self.left, y);
        let (rm, re) = Polynomial::eval_f64_scaled(&self.right, y);
        let mantissa = nm / dm * lm * rm;
        if mantissa == 0.0 {
            return 0.0;
        }
        let log = (self.power + (ne - de + le + re) as f64) * t
            + self.exp_coeff / y
            + mantissa.abs().ln();
        mantissa.signum() * log.exp()
    }

    fn panel(&self, a: f64, b: f64) -> (f64, f64) {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut s = Sum::default();
        let mut abs = Sum::default();
        for &(x, w) in gauss_legendre() {
            let v = w * self.eval(mid + half * x);
            s.add(v);
            abs.add(v.abs());
        }
        (s.value() * half, abs.value() * half)
    }
}

/// Net power of `y` at infinity and the exponential coefficient at zero,
/// after including the Jacobian.
fn check_convergence(f: &Integrand) -> Result<()> {
    if f.left.is_zero() || f.right.is_zero() {
        return Ok(());
    }
    let deg = |p: &Polynomial| p.degree().unwrap() as i64;
    let rat_deg = deg(f.weight.rat.num()) - deg(f.weight.rat.den());
    let at_inf =
        &f.weight.y_power + Rational::from_integer((rat_deg + deg(&f.left) + deg(&f.right)).into());
    if at_inf >= Rational::from_integer((-1).into()) {
        return Err(Error::Divergent(format!(
            "integrand grows like y^{at_inf} at infinity"
        )));
    }
    let c = &f.weight.exp_coeff;
    if c.is_positive() {
        return Err(Error::Divergent("exponential blows up at y = 0".into()));
    }
    if c.is_zero() {
        let ord = |p: &Polynomial| p.order_at_zero().unwrap() as i64;
        let at_zero = &f.weight.y_power
            + Rational::from_integer(
                (ord(f.weight.rat.num()) - ord(f.weight.rat.den()) + ord(&f.left) + ord(&f.right))
                    .into(),
            );
        if at_zero <= Rational::from_integer((-1).into()) {
            return Err(Error::Divergent(format!(
                "integrand behaves like y^{at_zero} at zero"
            )));
        }
    }
    Ok(())
}

/// `int_0^inf weight * left * right dy`, to relative accuracy `rel_tol`
/// measured against `int |integrand|`.
pub fn integrate_half_line(f: &Integrand, rel_tol: f64) -> Result<f64> {
    check_convergence(f)?;
    if f.left.is_zero() || f.right.is_zero() {
        return Ok(0.0);
    }
    let p = Prepared::new(f);
    // Grow unit panels outward from t = 0 until they stop contributing.
    let mut panels: Vec<(f64, f64)> = Vec::new();
    let mut scale = 0.0f64;
    for dir in [-1.0f64, 1.0] {
        let mut quiet = 0;
        let mut k = 0.0;
        while quiet < 3 && k < 400.0 {
            let (a, b) = if dir > 0.0 {
                (k, k + 1.0)
            } else {
                (-k - 1.0, -k)
            };
            let (_, abs) = p.panel(a, b);
            scale = scale.max(abs);
            panels.push((a, b));
            quiet = if abs <= 1e-18 * scale { quiet + 1 } else { 0 };
            k += 1.0;
        }
    }
    panels.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    let mut total = Sum::default();
    let mut total_abs = Sum::default();
    for &(a, b) in &panels {
        let (_, abs) = p.panel(a, b);
        total_abs.add(abs);
    }
    let budget = rel_tol.max(1e-15) * total_abs.value();
    for &(a, b) in &panels {
        total.add(adaptive(&p, a, b, budget / panels.len() as f64, 0));
    }
    Ok(total.value())
}

fn adaptive(p: &Prepared, a: f64, b: f64, tol: f64, depth: usize) -> f64 {
    let (whole, _) = p.panel(a, b);
    let m = 0.5 * (a + b);
    let (l, _) = p.panel(a, m);
    let (r, _) = p.panel(m, b);
    let split = l + r;
    if (split - whole).abs() <= tol || depth >= 30 {
        return split;
    }
    adaptive(p, a, m, 0.5 * tol, depth + 1) + adaptive(p, m, b, 0.5 * tol, depth + 1)
}

#[derive(Clone, Debug, PartialEq)]
pub struct GramReport {
    pub levels: Vec<usize>,
    pub matrix: Vec<Vec<f64>>,
    /// Largest `|G_ij| / sqrt(G_ii G_jj)` over `i != j`.
    pub max_off_diagonal: f64,
}

/// Gram matrix of the eigen-numerator Wronskians under the EOP weight.
pub fn gram_matrix(spec: &DeformationSpec, levels: &[usize], rel_tol: f64) -> Result<GramReport> {
    gram_with(spec, levels, rel_tol, &eop_weight(spec)?)
}

/// The same matrix under the weight carrying one more power of `y`.
pub fn gram_matrix_alternative(
    spec: &DeformationSpec,
    levels: &[usize],
    rel_tol: f64,
) -> Result<GramReport> {
    gram_with(spec, levels, rel_tol, &eop_weight_alternative(spec)?)
}

fn gram_with(
    spec: &DeformationSpec,
    levels: &[usize],
    rel_tol: f64,
    weight: &QuasiRational,
) -> Result<GramReport> {
    if !certify_admissible(spec).ok {
        return Err(Error::Inadmissible(spec.label()));
    }
    let nums: Vec<Polynomial> = levels
        .iter()
        .map(|&n| eigen_numerator(spec, n))
        .collect::<Result<_>>()?;
    let k = levels.len();
    let mut m = vec![vec![0.0; k]; k];
    for i in 0..k {
        for j in i..k {
            let f = Integrand {
                weight: weight.clone(),
                left: nums[i].clone(),
                right: nums[j].clone(),
            };
            let v = integrate_half_line(&f, rel_tol)?;
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    let mut max_off: f64 = 0.0;
    for i in 0..k {
        for j in 0..k {
            if i != j {
                max_off = max_off.max(m[i][j].abs() / (m[i][i] * m[j][j]).abs().sqrt());
            }
        }
    }
    Ok(GramReport {
        levels: levels.to_vec(),
        matrix: m,
        max_off_diagonal: max_off,
    })
}

/// Measured diagonal norm of a reflected Bessel polynomial beside the closed
/// form `n! Gamma(2A + 1 - n) / (2A - 2n - 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormComparison {
    pub n: usize,
    pub measured: f64,
    pub printed: f64,
    pub ratio: f64,
}

/// `int_0^inf y^{-2A-1} e^{-2/y} B_n(y; A)^2 dy` for `n = 0..=max_n`,
/// restricted to `n < A - 1/2` where both sides are finite.
pub fn diagonal_norms(big_a: &Rational, max_n: usize, rel_tol: f64) -> Result<Vec<NormComparison>> {
    let a = to_f64(big_a);
    let weight = QuasiRational::new(
        -(big_a * int(2)) - int(1),
        int(-2),
        crate::algebra::RationalFunction::from_poly(Polynomial::one()),
    );
    let mut out = Vec::new();
    for n in 0..=max_n {
        if (n as f64) >= a - 0.5 {
            break;
        }
        let b = rbessel(n, big_a);
        let measured = integrate_half_line(
            &Integrand {
                weight: weight.clone(),
                left: b.clone(),
                right: b,
            },
            rel_tol,
        )?;
        let printed = gamma(n as f64 + 1.0) * gamma(2.0 * a + 1.0 - n as f64)
            / (2.0 * a - 2.0 * n as f64 - 1.0);
        out.push(NormComparison {
            n,
            measured,
            printed,
            ratio: measured / printed,
        });
    }
    Ok(out)
}

/// Lanczos approximation, adequate for the positive arguments used here.
fn gamma(x: f64) -> f64 {
    const G: f64 = 7.0;
    const C: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        return std::f64::consts::PI / ((std::f64::consts::PI * x).sin() * gamma(1.0 - x));
    }
    let x = x - 1.0;
    let mut s = C[0];
    for (i, c) in C.iter().enumerate().skip(1) {
        s += c / (x + i as f64);
    }
    let t = x + G + 0.5;
    (2.0 * std::f64::consts::PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * s
}

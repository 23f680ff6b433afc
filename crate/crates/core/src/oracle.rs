//! Finite-difference eigensolver for `-u'' + V(e^x) u = E u` with Dirichlet
//! ends, used to check predicted spectra independently of the algebra.

use crate::algebra::ratfunc::{eval_parts_f64, scaled_f64};
use crate::algebra::rational::{to_f64, Rational};
use crate::algebra::sturm_positive_roots;
use crate::algebra::{Polynomial, RationalFunction};
use crate::error::{Error, Result};
use crate::morse::{certify_admissible, eigen_numerator, predicted_energies, DeformationSpec};

pub const DEFAULT_X_MIN: f64 = -4.0;
pub const DEFAULT_X_MAX: f64 = 14.0;
pub const DEFAULT_POINTS: usize = 8000;

/// Uniform grid with spacing `(x_max - x_min) / points`. The unknowns sit at
/// the `points - 1` interior nodes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    x_min: f64,
    x_max: f64,
    points: usize,
}

impl Grid {
    pub fn new(x_min: f64, x_max: f64, points: usize) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite()) || x_min >= x_max {
            return Err(Error::InvalidGrid(format!(
                "need x_min < x_max, got [{x_min}, {x_max}]"
            )));
        }
        if points < 64 {
            return Err(Error::InvalidGrid(format!(
                "need at least 64 points, got {points}"
            )));
        }
        Ok(Grid {
            x_min,
            x_max,
            points,
        })
    }

    pub fn default_domain(points: usize) -> Self {
        Grid::new(DEFAULT_X_MIN, DEFAULT_X_MAX, points).expect("default domain is valid")
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn h(&self) -> f64 {
        (self.x_max - self.x_min) / self.points as f64
    }

    /// Same domain, half the spacing.
    pub fn refined(&self) -> Grid {
        Grid {
            points: self.points * 2,
            ..*self
        }
    }

    pub fn interior(&self) -> impl Iterator<Item = f64> + '_ {
        let h = self.h();
        (1..self.points).map(move |i| self.x_min + i as f64 * h)
    }
}

fn check_samples(xs: impl Iterator<Item = f64>, f: impl Fn(f64) -> f64) -> Result<Vec<f64>> {
    xs.map(|x| {
        let v = f(x.exp());
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::PotentialPole { x })
        }
    })
    .collect()
}

/// `V(e^x)` at the interior nodes.
pub fn sample_potential(v: &RationalFunction, grid: &Grid) -> Result<Vec<f64>> {
    let (num, den) = v.to_f64_parts();
    check_samples(grid.interior(), |y| eval_parts_f64(&num, &den, y))
}

/// Samples a deformed potential from its Wronskian instead of the expanded
/// rational function: `V = V_Morse(a-q) - 2y (W'/W + y W''/W - y (W'/W)^2)`.
/// Avoids cancellation in the high-degree reduced numerator.
pub fn sample_deformation(spec: &DeformationSpec, grid: &Grid) -> Result<Vec<f64>> {
    let w = spec.wronskian();
    if w.is_zero() {
        return Err(Error::VanishingWronskian);
    }
    let shift = w
        .coeffs()
        .iter()
        .map(|c| c.numer().bits() as i64 - c.denom().bits() as i64)
        .max()
        .unwrap_or(0);
    let w0 = scaled_f64(&w, shift);
    let w1 = float_derivative(&w0);
    let w2 = float_derivative(&w1);
    let a_eff = to_f64(&spec.shifted_a());
    check_samples(grid.interior(), |y| {
        let (m0, e0) = Polynomial::eval_f64_scaled(&w0, y);
        let (m1, e1) = Polynomial::eval_f64_scaled(&w1, y);
        let (m2, e2) = Polynomial::eval_f64_scaled(&w2, y);
        let r1 = m1 / m0 * y.powi(e1 - e0);
        let r2 = m2 / m0 * y.powi(e2 - e0);
        (1.0 - 2.0 * a_eff * y) / (y * y) - 2.0 * y * (r1 + y * r2 - y * r1 * r1)
    })
}

fn float_derivative(c: &[f64]) -> Vec<f64> {
    c.iter()
        .enumerate()
        .skip(1)
        .map(|(k, v)| k as f64 * v)
        .collect()
}

/// Symmetric tridiagonal `diag_i = 2/h^2 + V_i`, `off = -1/h^2`.
#[derive(Clone, Debug)]
struct Tridiagonal {
    diag: Vec<f64>,
    off: f64,
}

impl Tridiagonal {
    fn new(samples: &[f64], h: f64) -> Self {
        let inv = 1.0 / (h * h);
        Tridiagonal {
            diag: samples.iter().map(|v| 2.0 * inv + v).collect(),
            off: -inv,
        }
    }

    /// Number of eigenvalues strictly below `lambda`, from the signs of the
    /// LDL^T pivots of `T - lambda I`.
    fn count_below(&self, lambda: f64) -> usize {
        let e2 = self.off * self.off;
        let tiny = f64::MIN_POSITIVE.sqrt() * self.off.abs().max(1.0);
        let mut count = 0;
        let mut q = 1.0;
        for (i, d) in self.diag.iter().enumerate() {
            q = if i == 0 {
                d - lambda
            } else {
                d - lambda - e2 / q
            };
            if q == 0.0 {
                q = -tiny;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn gershgorin(&self) -> (f64, f64) {
        let r = 2.0 * self.off.abs();
        let lo = self.diag.iter().cloned().fold(f64::INFINITY, f64::min) - r;
        let hi = self.diag.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + r;
        (lo, hi)
    }

    /// The `k`-th eigenvalue (0-based) by bisection on the Sturm count.
    fn eigenvalue(&self, k: usize) -> f64 {
        let (mut lo, mut hi) = self.gershgorin();
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Solves `(T - shift I) x = b` by the Thomas algorithm.
    fn solve_shifted(&self, shift: f64, b: &[f64]) -> Vec<f64> {
        let n = self.diag.len();
        let e = self.off;
        let mut c = vec![0.0; n];
        let mut x = vec![0.0; n];
        let mut denom = self.diag[0] - shift;
        let guard = |d: f64| if d == 0.0 { f64::EPSILON * e.abs() } else { d };
        denom = guard(denom);
        c[0] = e / denom;
        x[0] = b[0] / denom;
        for i in 1..n {
            denom = guard(self.diag[i] - shift - e * c[i - 1]);
            c[i] = e / denom;
            x[i] = (b[i] - e * x[i - 1]) / denom;
        }
        for i in (0..n - 1).rev() {
            x[i] -= c[i] * x[i + 1];
        }
        x
    }

    fn apply(&self, v: &[f64]) -> Vec<f64> {
        let n = v.len();
        (0..n)
            .map(|i| {
                let mut s = self.diag[i] * v[i];
                if i > 0 {
                    s += self.off * v[i - 1];
                }
                if i + 1 < n {
                    s += self.off * v[i + 1];
                }
                s
            })
            .collect()
    }

    /// Inverse iteration at a converged eigenvalue. Returns the unit vector
    /// and the residual `|T v - lambda v|`.
    fn eigenvector(&self, lambda: f64) -> (Vec<f64>, f64) {
        let n = self.diag.len();
        let shift = lambda + 1e-10 * lambda.abs().max(1.0);
        // Deterministic, non-symmetric start vector.
        let mut v: Vec<f64> = (0..n)
            .map(|i| 1.0 + ((i * 7919) % 101) as f64 / 101.0)
            .collect();
        normalize(&mut v);
        let mut residual = f64::INFINITY;
        for _ in 0..6 {
            v = self.solve_shifted(shift, &v);
            normalize(&mut v);
            let tv = self.apply(&v);
            residual = tv
                .iter()
                .zip(&v)
                .map(|(t, x)| (t - lambda * x).powi(2))
                .sum::<f64>()
                .sqrt();
            if residual < 1e-8 * lambda.abs().max(1.0) {
                break;
            }
        }
        (v, residual)
    }
}

fn normalize(v: &mut [f64]) {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if n > 0.0 {
        v.iter_mut().for_each(|x| *x /= n);
    }
}

#[derive(Clone, Debug)]
pub struct EigenSolution {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
    pub residuals: Vec<f64>,
}

/// Residual threshold, relative to the matrix scale `1/h^2`, above which an
/// eigenpair is reported as unconverged.
const RESIDUAL_TOL: f64 = 1e-6;

/// Lowest `k` eigenpairs of the discretized operator, ascending.
pub fn eigen_solve(samples: &[f64], grid: &Grid, k: usize) -> Result<EigenSolution> {
    if samples.len() != grid.points() - 1 {
        return Err(Error::InvalidGrid(format!(
            "expected {} samples, got {}",
            grid.points() - 1,
            samples.len()
        )));
    }
    let t = Tridiagonal::new(samples, grid.h());
    let k = k.min(samples.len());
    let mut sol = EigenSolution {
        values: Vec::with_capacity(k),
        vectors: Vec::with_capacity(k),
        residuals: Vec::with_capacity(k),
    };
    for level in 0..k {
        let lambda = t.eigenvalue(level);
        let (v, r) = t.eigenvector(lambda);
        if r.is_nan() || r >= RESIDUAL_TOL * t.off.abs().max(1.0) {
            return Err(Error::NoConvergence { level, residual: r });
        }
        sol.values.push(lambda);
        sol.vectors.push(v);
        sol.residuals.push(r);
    }
    Ok(sol)
}

/// Eigenvalues of the discretized operator inside `[lo, hi)`.
pub fn count_in_window(samples: &[f64], grid: &Grid, lo: f64, hi: f64) -> (usize, usize) {
    let t = Tridiagonal::new(samples, grid.h());
    (t.count_below(lo), t.count_below(hi))
}

/// Strict sign changes, ignoring entries below `1e-6` of the peak so the
/// exponentially small tails do not contribute noise.
pub fn node_count(vec: &[f64]) -> usize {
    let peak = vec.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let floor = 1e-6 * peak;
    let mut last = 0.0f64;
    let mut count = 0;
    for &x in vec {
        if x.abs() < floor {
            continue;
        }
        if last != 0.0 && x.signum() != last.signum() {
            count += 1;
        }
        last = x;
    }
    count
}

/// Second-order extrapolation from spacings `h` and `h/2`.
pub fn richardson(e_h: f64, e_h2: f64) -> f64 {
    (4.0 * e_h2 - e_h) / 3.0
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleOptions {
    /// Absolute tolerance on raw-grid eigenvalues.
    pub raw_tol: f64,
    /// Tolerance after extrapolation, scaled by `max(1, |E|)`.
    pub extrapolated_tol: f64,
    /// Eigenvalues above `-gap_resolution` are not counted as bound.
    pub gap_resolution: f64,
    /// Extra depth below the deepest predicted level searched for spurious
    /// states.
    pub search_margin: f64,
    pub extrapolate: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            raw_tol: 2e-3,
            extrapolated_tol: 1e-4,
            gap_resolution: 1e-2,
            search_margin: 5.0,
            extrapolate: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    pub label: String,
    pub predicted: Vec<Rational>,
    /// Extrapolated values when `extrapolated`, raw otherwise.
    pub computed: Vec<f64>,
    pub raw: Vec<f64>,
    pub node_counts: Vec<usize>,
    /// Positive-root counts of the eigenfunction numerators, aligned with
    /// `predicted`.
    pub numerator_roots: Vec<usize>,
    pub max_abs_err: f64,
    pub extrapolated: bool,
    /// Eigenvalues found below the deepest predicted level.
    pub too_deep: usize,
    pub window: (f64, f64),
    pub pass: bool,
    pub diagnostics: Vec<String>,
}

/// Solves the deformed potential numerically and compares with the exact
/// spectrum, including a search for bound states the theory does not
/// predict.
pub fn isospectral_check(spec: &DeformationSpec, grid: &Grid) -> Result<SpectrumReport> {
    isospectral_check_with(spec, grid, &OracleOptions::default())
}

pub fn isospectral_check_with(
    spec: &DeformationSpec,
    grid: &Grid,
    opts: &OracleOptions,
) -> Result<SpectrumReport> {
    let cert = certify_admissible(spec);
    if !cert.ok {
        return Err(Error::Inadmissible(spec.label()));
    }
    let predicted = predicted_energies(spec);
    let levels = spec.surviving_levels();
    let deepest = predicted
        .iter()
        .map(|e| to_f64(e).abs())
        .fold(0.0, f64::max);
    let window = (-(deepest + opts.search_margin), -opts.gap_resolution);

    let fine = grid.refined();
    let (coarse_run, fine_run) = if opts.extrapolate {
        let (c, f) = rayon::join(
            || solve_window(spec, grid, window),
            || solve_window(spec, &fine, window),
        );
        (c?, Some(f?))
    } else {
        (solve_window(spec, grid, window)?, None)
    };

    let mut diagnostics = Vec::new();
    let raw = coarse_run.values.clone();
    let computed: Vec<f64> = match &fine_run {
        Some(f) if f.values.len() == raw.len() => raw
            .iter()
            .zip(&f.values)
            .map(|(a, b)| richardson(*a, *b))
            .collect(),
        Some(f) => {
            diagnostics.push(format!(
                "grids disagree on the bound-state count: {} vs {}",
                raw.len(),
                f.values.len()
            ));
            raw.clone()
        }
        None => raw.clone(),
    };
    let extrapolated = fine_run
        .as_ref()
        .is_some_and(|f| f.values.len() == raw.len());
    let node_source = fine_run.as_ref().unwrap_or(&coarse_run);
    let node_counts: Vec<usize> = node_source.vectors.iter().map(|v| node_count(v)).collect();

    let mut numerator_roots = Vec::with_capacity(levels.len());
    for &n in &levels {
        let num = eigen_numerator(spec, n)?;
        numerator_roots.push(sturm_positive_roots(&num)?);
    }

    let mut pass = true;
    if coarse_run.too_deep > 0 {
        pass = false;
        diagnostics.push(format!(
            "{} eigenvalue(s) below the search window",
            coarse_run.too_deep
        ));
    }
    if computed.len() != predicted.len() {
        pass = false;
        diagnostics.push(format!(
            "found {} bound level(s) in [{:.3}, {:.3}), predicted {}",
            computed.len(),
            window.0,
            window.1,
            predicted.len()
        ));
    }
    let mut max_abs_err: f64 = 0.0;
    for (i, (p, c)) in predicted.iter().zip(&computed).enumerate() {
        let p = to_f64(p);
        let err = (c - p).abs();
        max_abs_err = max_abs_err.max(err);
        let tol = if extrapolated {
            opts.extrapolated_tol * p.abs().max(1.0)
        } else {
            opts.raw_tol
        };
        if err > tol {
            pass = false;
            diagnostics.push(format!("level {i}: computed {c:.8} vs predicted {p:.8}"));
        }
    }
    Ok(SpectrumReport {
        label: spec.label(),
        predicted,
        computed,
        raw,
        node_counts,
        numerator_roots,
        max_abs_err,
        extrapolated,
        too_deep: coarse_run.too_deep,
        window,
        pass,
        diagnostics,
    })
}

struct WindowRun {
    values: Vec<f64>,
    vectors: Vec<Vec<f64>>,
    too_deep: usize,
}

fn solve_window(spec: &DeformationSpec, grid: &Grid, window: (f64, f64)) -> Result<WindowRun> {
    let samples = sample_deformation(spec, grid)?;
    let (below_lo, below_hi) = count_in_window(&samples, grid, window.0, window.1);
    let sol = eigen_solve(&samples, grid, below_hi)?;
    Ok(WindowRun {
        values: sol.values[below_lo..].to_vec(),
        vectors: sol.vectors[below_lo..].to_vec(),
        too_deep: below_lo,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};
    use crate::morse::{deformed_potential, morse_potential, MorseParam};
    use crate::partitions::SeedSet;
    use crate::sign::Sign;

    fn morse(a: i64) -> DeformationSpec {
        DeformationSpec::undeformed(MorseParam::new(int(a)).unwrap())
    }

    #[test]
    fn grid_validation() {
        assert!(Grid::new(1.0, 0.0, 100).is_err());
        assert!(Grid::new(0.0, 1.0, 10).is_err());
        let g = Grid::new(-4.0, 14.0, 8000).unwrap();
        assert_eq!(g.interior().count(), 7999);
        assert!((g.refined().h() * 2.0 - g.h()).abs() < 1e-15);
    }

    #[test]
    fn sampling_examples() {
        let g = Grid::new(-4.0, 4.0, 64).unwrap();
        // x = 0 is node 32.
        let v = sample_potential(&morse_potential(&MorseParam::new(int(3)).unwrap()), &g).unwrap();
        assert!((v[31] + 5.0).abs() < 1e-12);

        let s = DeformationSpec::new(
            MorseParam::new(int(1)).unwrap(),
            SeedSet::empty(Sign::Minus),
            SeedSet::new(Sign::Minus, vec![2]).unwrap(),
        )
        .unwrap();
        let v = sample_deformation(&s, &g).unwrap();
        assert!((v[31] + 0.12).abs() < 1e-12);
        let u = sample_potential(&deformed_potential(&s).unwrap(), &g).unwrap();
        for (a, b) in v.iter().zip(&u) {
            assert!((a - b).abs() < 1e-9 * a.abs().max(1.0));
        }

        let far = Grid::new(10.0, 14.0, 64).unwrap();
        let v =
            sample_potential(&morse_potential(&MorseParam::new(int(3)).unwrap()), &far).unwrap();
        assert!(v.iter().all(|x| *x < 0.0 && *x > -1e-3));
    }

    #[test]
    fn pole_is_reported() {
        // 1 / (y - 1) has a pole at x = 0.
        let v = RationalFunction::new(Polynomial::one(), Polynomial::from_ints(&[-1, 1])).unwrap();
        let g = Grid::new(-1.0, 1.0, 64).unwrap();
        assert!(matches!(
            sample_potential(&v, &g),
            Err(Error::PotentialPole { .. })
        ));
    }

    #[test]
    fn harmonic_oscillator_levels() {
        // -u'' + x^2 u: levels 1, 3, 5.
        let g = Grid::new(-8.0, 8.0, 2000).unwrap();
        let xs: Vec<f64> = g.interior().collect();
        let samples: Vec<f64> = xs.iter().map(|x| x * x).collect();
        let sol = eigen_solve(&samples, &g, 3).unwrap();
        for (k, e) in sol.values.iter().enumerate() {
            assert!((e - (2 * k + 1) as f64).abs() < 1e-4, "{e}");
            assert_eq!(node_count(&sol.vectors[k]), k);
        }
    }

    #[test]
    fn morse_levels_raw() {
        let s = morse(3);
        let g = Grid::default_domain(8000);
        let v = sample_deformation(&s, &g).unwrap();
        let sol = eigen_solve(&v, &g, 3).unwrap();
        for (e, p) in sol.values.iter().zip([-6.25, -2.25, -0.25]) {
            assert!((e - p).abs() < 2e-3, "{e} vs {p}");
        }
        for (k, vec) in sol.vectors.iter().enumerate() {
            assert_eq!(node_count(vec), k);
        }
        let v1 = sample_deformation(&morse(1), &g).unwrap();
        let sol = eigen_solve(&v1, &g, 1).unwrap();
        assert!((sol.values[0] + 0.25).abs() < 1e-3);
    }

    #[test]
    fn free_case_has_no_bound_states() {
        let g = Grid::default_domain(2000);
        let v = sample_potential(&morse_potential(&MorseParam::new(int(0)).unwrap()), &g).unwrap();
        let (_, below) = count_in_window(&v, &g, -1e6, -1e-3);
        assert_eq!(below, 0);
    }

    #[test]
    fn richardson_examples() {
        assert!((richardson(-6.2490, -6.24975) + 6.25).abs() < 1e-12);
        assert_eq!(richardson(1.5, 1.5), 1.5);
    }

    #[test]
    fn node_count_ignores_tail_noise() {
        assert_eq!(
            node_count(&[1e-20, -1e-20, 1.0, 0.5, -0.5, -1.0, 1e-30, -1e-30]),
            1
        );
    }

    #[test]
    fn isospectral_examples() {
        let r = isospectral_check(&morse(3), &Grid::default_domain(8000)).unwrap();
        assert!(r.pass, "{:?}", r.diagnostics);
        assert_eq!(r.node_counts, vec![0, 1, 2]);
        assert_eq!(r.numerator_roots, vec![0, 1, 2]);
        assert!(r.predicted.contains(&rat(-9, 4)));
    }
}

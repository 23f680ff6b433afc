//! Command-line front end: builds, certifies and checks deformed Morse
//! potentials and writes the results as JSON and CSV.

pub mod document;
pub mod error;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use besselw::algebra::rational::format_rational;
use besselw::oracle::{
    isospectral_check_with, sample_deformation, OracleOptions, DEFAULT_POINTS, DEFAULT_X_MAX,
    DEFAULT_X_MIN,
};
use besselw::partitions::is_juxtaposed_pairs;
use besselw::quadrature::gram_matrix_alternative;
use besselw::{
    certify_admissible, gen_bessel_scaled, gram_matrix, identity_residual, parse_rational,
    seed_wronskian, sturm_positive_roots, verify_equivalence, BesselIndex, DeformationSpec, Grid,
    IdentityKind, MorseParam, Rational, SeedSet, Sign,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::document::{poly_strings, rationals, ModelDocument, OracleDoc};
pub use crate::error::{CliError, EXIT_FAIL, EXIT_INADMISSIBLE, EXIT_PASS, EXIT_USAGE};

#[derive(Debug, Parser)]
#[command(
    name = "besselw",
    version,
    about = "Rationally deformed Morse potentials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn pair_arg(s: &str) -> Result<(usize, usize), String> {
    let (l, r) = s
        .split_once(':')
        .ok_or_else(|| format!("expected n1:n2, got {s:?}"))?;
    let l: usize = l
        .trim()
        .parse()
        .map_err(|_| format!("bad index in {s:?}"))?;
    let r: usize = r
        .trim()
        .parse()
        .map_err(|_| format!("bad index in {s:?}"))?;
    Ok((l, r))
}

#[derive(Debug, Clone, Args)]
pub struct SpecArgs {
    /// Morse parameter as an integer or "p/q".
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub a: Option<Rational>,
    /// Virtual seed indexes, e.g. 6,7.
    #[arg(long, value_delimiter = ',')]
    pub virtuals: Vec<usize>,
    /// Deleted level pairs, e.g. 1:2,4:5.
    #[arg(long, value_delimiter = ',', value_parser = pair_arg)]
    pub pairs: Vec<(usize, usize)>,
    /// Accept a with 2a odd, whose top level sits at zero energy.
    #[arg(long)]
    pub allow_threshold: bool,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[arg(long, default_value_t = DEFAULT_X_MIN, allow_hyphen_values = true)]
    pub xmin: f64,
    #[arg(long, default_value_t = DEFAULT_X_MAX, allow_hyphen_values = true)]
    pub xmax: f64,
    #[arg(long, default_value_t = DEFAULT_POINTS)]
    pub points: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Equivalence,
    Identities,
    Orthogonality,
    Spectrum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CatalogKind {
    All,
    Virtuals,
    Pairs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build and certify a deformation and write its document.
    Potential {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write x,V(x) on the interior grid nodes.
        #[arg(long)]
        grid_csv: Option<PathBuf>,
    },
    /// Run one of the exact or numeric checks.
    Verify {
        #[arg(long, value_enum)]
        which: Which,
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        grid: GridArgs,
        /// Minus-type seed set for the equivalence check.
        #[arg(long, value_delimiter = ',', conflicts_with = "plus")]
        minus: Vec<usize>,
        /// Plus-type seed set for the equivalence check.
        #[arg(long, value_delimiter = ',')]
        plus: Vec<usize>,
        /// Highest degree for the identity check.
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Tolerance: eigenvalue error for `spectrum`, relative off-diagonal
        /// size for `orthogonality`.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Enumerate and certify virtual and pair deformations, one JSON document
    /// per line in lexicographic order.
    Catalog {
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, default_value_t = 12)]
        max_index: usize,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        #[arg(long, value_enum, default_value_t = CatalogKind::All)]
        kind: CatalogKind,
        #[arg(long)]
        allow_threshold: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print the generalized Bessel polynomial Y_n with index (alpha, beta).
    Bessel {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        alpha: Rational,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, default_value = "2")]
        beta: Rational,
    },
    /// Print the Wronskian of a seed set.
    Wronskian {
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        a: Rational,
        #[arg(
            long,
            value_delimiter = ',',
            conflicts_with = "plus",
            required_unless_present = "plus"
        )]
        minus: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        plus: Vec<usize>,
    },
    /// Solve the deformed potential numerically and compare with the exact
    /// spectrum.
    Spectrum {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn param(a: &Rational, allow_threshold: bool) -> Result<MorseParam, CliError> {
    if allow_threshold {
        Ok(MorseParam::with_threshold(a.clone()))
    } else {
        Ok(MorseParam::new(a.clone())?)
    }
}

impl SpecArgs {
    fn require_a(&self) -> Result<&Rational, CliError> {
        self.a
            .as_ref()
            .ok_or_else(|| CliError::Usage("--a is required".into()))
    }

    pub fn build(&self) -> Result<DeformationSpec, CliError> {
        let p = param(self.require_a()?, self.allow_threshold)?;
        let mut pairs = Vec::new();
        for &(l, r) in &self.pairs {
            pairs.push(l);
            pairs.push(r);
        }
        Ok(DeformationSpec::new(
            p,
            SeedSet::from_unsorted(Sign::Minus, pairs)?,
            SeedSet::from_unsorted(Sign::Minus, self.virtuals.clone())?,
        )?)
    }
}

impl GridArgs {
    fn grid(&self) -> Result<Grid, CliError> {
        Ok(Grid::new(self.xmin, self.xmax, self.points)?)
    }
}

fn seed_set(minus: &[usize], plus: &[usize]) -> Result<SeedSet, CliError> {
    match (minus.is_empty(), plus.is_empty()) {
        (false, true) => Ok(SeedSet::from_unsorted(Sign::Minus, minus.to_vec())?),
        (true, false) => Ok(SeedSet::from_unsorted(Sign::Plus, plus.to_vec())?),
        _ => Err(CliError::Usage(
            "give exactly one of --minus or --plus".into(),
        )),
    }
}

/// Writes `text` to `path`, or to `out` when no path is given.
fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, format!("{text}\n"))?,
        None => writeln!(out, "{text}")?,
    }
    Ok(())
}

fn emit_json<T: Serialize>(
    out: &mut dyn Write,
    path: Option<&Path>,
    v: &T,
) -> Result<(), CliError> {
    emit(out, path, &serde_json::to_string_pretty(v)?)
}

fn code(pass: bool) -> i32 {
    if pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

/// Writes `x,V(x)` rows without a header.
pub fn write_grid_csv(spec: &DeformationSpec, grid: &Grid, path: &Path) -> Result<(), CliError> {
    let values = sample_deformation(spec, grid)?;
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_path(path)?;
    for (x, v) in grid.interior().zip(values) {
        w.write_record([format!("{x:.12e}"), format!("{v:.12e}")])?;
    }
    w.flush()?;
    Ok(())
}

/// Number of worker threads from `BESSELW_THREADS`, if set.
fn thread_cap() -> Option<usize> {
    std::env::var("BESSELW_THREADS")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&n: &usize| n > 0)
}

fn pool() -> Result<rayon::ThreadPool, CliError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_cap() {
        b = b.num_threads(n);
    }
    b.build()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))
}

/// Every nonempty subset of `pool` with at most `k` elements, ascending
/// within each set and sorted lexicographically.
fn subsets(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for &m in pool {
        let grown: Vec<Vec<usize>> = out
            .iter()
            .filter(|s| s.len() < k)
            .map(|s| {
                let mut t = s.clone();
                t.push(m);
                t
            })
            .collect();
        out.extend(grown);
    }
    out.retain(|s| !s.is_empty());
    out.sort();
    out
}

/// Candidate specs for the catalog: virtual sets above the seed bound, then
/// juxtaposed pair sets inside the spectrum.
pub fn catalog_specs(
    p: &MorseParam,
    max_index: usize,
    max_size: usize,
    kind: CatalogKind,
) -> Result<Vec<DeformationSpec>, CliError> {
    let mut specs = Vec::new();
    if kind != CatalogKind::Pairs {
        let floor = Rational::from_integer(2.into()) * p.a() - Rational::from_integer(1.into());
        let pool: Vec<usize> = (1..=max_index)
            .filter(|&m| Rational::from_integer(m.into()) > floor)
            .collect();
        for v in subsets(&pool, max_size) {
            specs.push(DeformationSpec::new(
                p.clone(),
                SeedSet::empty(Sign::Minus),
                SeedSet::new(Sign::Minus, v)?,
            )?);
        }
    }
    if kind != CatalogKind::Virtuals {
        let top = p.n_max().unwrap_or(0);
        let levels: Vec<usize> = (1..=top).collect();
        for s in subsets(&levels, top) {
            let set = SeedSet::new(Sign::Minus, s)?;
            if is_juxtaposed_pairs(&set).juxtaposed {
                specs.push(DeformationSpec::new(
                    p.clone(),
                    set,
                    SeedSet::empty(Sign::Minus),
                )?);
            }
        }
    }
    Ok(specs)
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Potential {
            spec,
            grid,
            json,
            grid_csv,
        } => {
            let s = spec.build()?;
            let doc = ModelDocument::build(&s);
            emit(out, json.as_deref(), &doc.render())?;
            if !doc.certificate.ok {
                return Ok(EXIT_INADMISSIBLE);
            }
            if let Some(path) = grid_csv {
                write_grid_csv(&s, &grid.grid()?, &path)?;
            }
            Ok(EXIT_PASS)
        }
        Command::Spectrum {
            spec,
            grid,
            tol,
            json,
        } => {
            let s = spec.build()?;
            let mut doc = ModelDocument::build(&s);
            if !doc.certificate.ok {
                emit(out, json.as_deref(), &doc.render())?;
                return Ok(EXIT_INADMISSIBLE);
            }
            let g = grid.grid()?;
            let r = isospectral_check_with(&s, &g, &oracle_options(tol))?;
            doc.oracle = Some(OracleDoc::new(&r, &g));
            emit(out, json.as_deref(), &doc.render())?;
            Ok(code(r.pass))
        }
        Command::Verify {
            which,
            spec,
            grid,
            minus,
            plus,
            max_n,
            tol,
            json,
        } => verify(
            which,
            &spec,
            &grid,
            &minus,
            &plus,
            max_n,
            tol,
            json.as_deref(),
            out,
        ),
        Command::Catalog {
            a,
            max_index,
            max_size,
            kind,
            allow_threshold,
            json,
        } => {
            let p = param(&a, allow_threshold)?;
            let specs = catalog_specs(&p, max_index, max_size, kind)?;
            let docs: Vec<ModelDocument> =
                pool()?.install(|| specs.par_iter().map(ModelDocument::build).collect());
            let (kept, dropped): (Vec<_>, Vec<_>) =
                docs.into_iter().partition(|d| d.certificate.ok);
            for d in &dropped {
                log::warn!(
                    "a={} pairs={:?} virtuals={:?} failed certification",
                    d.spec.a,
                    d.spec.pairs,
                    d.spec.virtuals
                );
            }
            let text: Vec<String> = kept.iter().map(ModelDocument::render_line).collect();
            emit(out, json.as_deref(), &text.join("\n"))?;
            Ok(EXIT_PASS)
        }
        Command::Bessel { n, alpha, beta } => {
            let idx = BesselIndex::new(alpha.clone(), beta.clone())?;
            let p = gen_bessel_scaled(n, &idx);
            emit_json(
                out,
                None,
                &json!({
                    "n": n,
                    "alpha": format_rational(&alpha),
                    "beta": format_rational(&beta),
                    "degree": p.degree(),
                    "coeffs": poly_strings(&p),
                    "display": p.to_string(),
                }),
            )?;
            Ok(EXIT_PASS)
        }
        Command::Wronskian { a, minus, plus } => {
            let set = seed_set(&minus, &plus)?;
            let w = seed_wronskian(&set, &MorseParam::with_threshold(a.clone()));
            let roots = sturm_positive_roots(&w).ok();
            emit_json(
                out,
                None,
                &json!({
                    "a": format_rational(&a),
                    "set": set.to_string(),
                    "degree": w.degree(),
                    "coeffs": poly_strings(&w),
                    "positive_roots": roots,
                    "display": w.to_string(),
                }),
            )?;
            Ok(EXIT_PASS)
        }
    }
}

fn oracle_options(tol: Option<f64>) -> OracleOptions {
    let mut opts = OracleOptions::default();
    if let Some(t) = tol {
        opts.extrapolated_tol = t;
    }
    opts
}

/// `a` values used by the identity check when none is given.
fn default_identity_params() -> Vec<Rational> {
    ["1", "3/2", "3", "9/2", "7/3", "-5/4"]
        .iter()
        .map(|s| parse_rational(s).expect("literal"))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn verify(
    which: Which,
    spec: &SpecArgs,
    grid: &GridArgs,
    minus: &[usize],
    plus: &[usize],
    max_n: usize,
    tol: Option<f64>,
    json: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    match which {
        Which::Equivalence => {
            let a = spec.require_a()?;
            let set = seed_set(minus, plus)?;
            let r = verify_equivalence(&set, &param(a, spec.allow_threshold)?)?;
            let dual_a = a + Rational::from_integer(r.shift.into());
            emit_json(
                out,
                json,
                &json!({
                    "which": "equivalence",
                    "pass": r.monic_equal,
                    "a": format_rational(a),
                    "set": r.set.to_string(),
                    "dual": r.dual.to_string(),
                    "dual_a": format_rational(&dual_a),
                    "shift": r.shift,
                    "regularized": r.regularized,
                    "monic": poly_strings(&r.left.monic()),
                    "proportionality": r.proportionality.as_ref().map(format_rational),
                }),
            )?;
            Ok(code(r.monic_equal))
        }
        Which::Identities => {
            let params = match &spec.a {
                Some(a) => vec![a.clone()],
                None => default_identity_params(),
            };
            let mut checked = 0usize;
            let mut failures = Vec::new();
            for a in &params {
                for sign in [Sign::Plus, Sign::Minus] {
                    for n in 0..=max_n {
                        for kind in IdentityKind::ALL {
                            if kind == IdentityKind::ForwardShift && n == 0 {
                                continue;
                            }
                            checked += 1;
                            if !identity_residual(kind, n, a, sign).is_zero() {
                                failures.push(format!(
                                    "{} n={n} a={} {}",
                                    kind.name(),
                                    format_rational(a),
                                    sign.symbol()
                                ));
                            }
                        }
                    }
                }
            }
            let pass = failures.is_empty();
            emit_json(
                out,
                json,
                &json!({
                    "which": "identities",
                    "pass": pass,
                    "a": rationals(&params),
                    "max_n": max_n,
                    "checked": checked,
                    "failures": failures,
                }),
            )?;
            Ok(code(pass))
        }
        Which::Orthogonality => {
            let s = spec.build()?;
            let cert = certify_admissible(&s);
            if !cert.ok {
                emit(out, json, &ModelDocument::build(&s).render())?;
                return Ok(EXIT_INADMISSIBLE);
            }
            let levels = s.surviving_levels();
            let g = gram_matrix(&s, &levels, 1e-12)?;
            let alt = gram_matrix_alternative(&s, &levels, 1e-12)
                .ok()
                .map(|g| g.max_off_diagonal);
            let limit = tol.unwrap_or(1e-6);
            let pass =
                g.max_off_diagonal < limit && (0..levels.len()).all(|i| g.matrix[i][i] > 0.0);
            emit_json(
                out,
                json,
                &json!({
                    "which": "orthogonality",
                    "pass": pass,
                    "label": s.label(),
                    "levels": levels,
                    "matrix": g.matrix,
                    "max_off_diagonal": g.max_off_diagonal,
                    "tol": limit,
                    "alternative_weight_max_off_diagonal": alt,
                }),
            )?;
            Ok(code(pass))
        }
        Which::Spectrum => {
            let s = spec.build()?;
            let doc = ModelDocument::build(&s);
            if !doc.certificate.ok {
                emit(out, json, &doc.render())?;
                return Ok(EXIT_INADMISSIBLE);
            }
            let g = grid.grid()?;
            let r = isospectral_check_with(&s, &g, &oracle_options(tol))?;
            emit_json(
                out,
                json,
                &json!({
                    "which": "spectrum",
                    "pass": r.pass,
                    "label": r.label,
                    "levels": s.surviving_levels(),
                    "predicted": rationals(&r.predicted),
                    "oracle": OracleDoc::new(&r, &g),
                }),
            )?;
            Ok(code(r.pass))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("besselw").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn pair_flag_parses() {
        assert_eq!(pair_arg("1:2").unwrap(), (1, 2));
        assert!(pair_arg("1-2").is_err());
    }

    #[test]
    fn decimal_a_is_refused() {
        let r = Cli::try_parse_from(["besselw", "potential", "--a", "4.5"]);
        assert!(r.is_err());
    }

    #[test]
    fn catalog_virtual_pool_starts_above_bound() {
        let p = MorseParam::new(Rational::from_integer(3.into())).unwrap();
        let specs = catalog_specs(&p, 8, 2, CatalogKind::Virtuals).unwrap();
        assert!(specs
            .iter()
            .all(|s| s.virtuals().indexes().iter().all(|m| (6..=8).contains(m))));
        assert_eq!(specs.len(), 6);
        let labels: Vec<Vec<usize>> = specs
            .iter()
            .map(|s| s.virtuals().indexes().to_vec())
            .collect();
        let mut sorted = labels.clone();
        sorted.sort();
        assert_eq!(labels, sorted);
    }

    #[test]
    fn catalog_pairs() {
        let one = MorseParam::new(Rational::from_integer(1.into())).unwrap();
        assert!(catalog_specs(&one, 12, 3, CatalogKind::Pairs)
            .unwrap()
            .is_empty());
        let p = MorseParam::with_threshold(parse_rational("9/2").unwrap());
        let sets: Vec<Vec<usize>> = catalog_specs(&p, 12, 3, CatalogKind::Pairs)
            .unwrap()
            .iter()
            .map(|s| s.pairs().indexes().to_vec())
            .collect();
        assert_eq!(
            sets,
            vec![vec![1, 2], vec![1, 2, 3, 4], vec![2, 3], vec![3, 4]]
        );
    }

    #[test]
    fn equivalence_report() {
        let mut out = Vec::new();
        let c = parse(&[
            "verify",
            "--which",
            "equivalence",
            "--a",
            "3",
            "--minus",
            "1,2",
        ]);
        assert_eq!(run(c, &mut out).unwrap(), EXIT_PASS);
        let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(v["dual"], "+{2}");
        assert_eq!(v["dual_a"], "0");
    }
}

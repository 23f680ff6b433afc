use num_traits::One;

use crate::algebra::rational::{int, pow2, rat, Rational};
use crate::algebra::{sturm_positive_roots, wronskian, Polynomial, RationalFunction};
use crate::bessel::{gen_bessel_scaled, BesselIndex};
use crate::error::{Error, Result};
use crate::morse::{MorseParam, QuasiRational};
use crate::partitions::{is_juxtaposed_pairs, SeedSet};
use crate::sign::Sign;

/// `(1 - 2a y) / y^2`, the Morse potential in the variable `y = e^x`.
pub fn morse_potential(param: &MorseParam) -> RationalFunction {
    morse_potential_at(param.a())
}

fn morse_potential_at(a: &Rational) -> RationalFunction {
    let num = Polynomial::new(vec![Rational::one(), int(-2) * a]);
    RationalFunction::new(num, Polynomial::monomial(Rational::one(), 2)).expect("y^2 is nonzero")
}

/// `-(m + 1/2 +- a)^2`.
pub fn qrs_energy(sign: Sign, m: usize, param: &MorseParam) -> Rational {
    let t = int(m as i64) + rat(1, 2) + int(sign.value()) * param.a();
    -(&t * &t)
}

/// `2^m Y_m^{(+-2a)}(-+y)`.
pub fn seed_polynomial(sign: Sign, m: usize, param: &MorseParam) -> Polynomial {
    let s = int(sign.value());
    let idx = BesselIndex::new(int(2) * &s * param.a(), int(-2) * s).expect("beta is +-2");
    gen_bessel_scaled(m, &idx).scale(&pow2(m))
}

/// Wronskian of the seed polynomials of `set`, in ascending index order.
/// The empty set gives `1`.
pub fn seed_wronskian(set: &SeedSet, param: &MorseParam) -> Polynomial {
    if set.is_empty() {
        return Polynomial::one();
    }
    let ps: Vec<Polynomial> = set
        .indexes()
        .iter()
        .map(|&m| seed_polynomial(set.sign(), m, param))
        .collect();
    wronskian(&ps)
}

/// A Morse parameter together with deleted eigen-pairs and state-free seeds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DeformationSpec {
    param: MorseParam,
    pairs: SeedSet,
    virtuals: SeedSet,
}

impl DeformationSpec {
    /// Both sets must be minus-type and disjoint. Admissibility is checked
    /// separately by [`certify_admissible`].
    pub fn new(param: MorseParam, pairs: SeedSet, virtuals: SeedSet) -> Result<Self> {
        if pairs.sign() != Sign::Minus || virtuals.sign() != Sign::Minus {
            return Err(Error::InvalidSpec("seed sets must be minus-type".into()));
        }
        if let Some(m) = pairs.indexes().iter().find(|m| virtuals.contains(**m)) {
            return Err(Error::InvalidSpec(format!(
                "index {m} is both a pair and a virtual seed"
            )));
        }
        Ok(DeformationSpec {
            param,
            pairs,
            virtuals,
        })
    }

    pub fn undeformed(param: MorseParam) -> Self {
        DeformationSpec {
            param,
            pairs: SeedSet::empty(Sign::Minus),
            virtuals: SeedSet::empty(Sign::Minus),
        }
    }

    pub fn param(&self) -> &MorseParam {
        &self.param
    }

    pub fn pairs(&self) -> &SeedSet {
        &self.pairs
    }

    pub fn virtuals(&self) -> &SeedSet {
        &self.virtuals
    }

    /// Number of seeds, which lowers the effective Morse parameter.
    pub fn seed_count(&self) -> usize {
        self.pairs.len() + self.virtuals.len()
    }

    /// `a - q`.
    pub fn shifted_a(&self) -> Rational {
        self.param.a() - int(self.seed_count() as i64)
    }

    /// Sorted union of pairs and virtual seeds.
    pub fn combined_seeds(&self) -> SeedSet {
        let mut all: Vec<usize> = self
            .pairs
            .indexes()
            .iter()
            .chain(self.virtuals.indexes())
            .copied()
            .collect();
        all.sort_unstable();
        SeedSet::new(Sign::Minus, all).expect("disjoint positive indexes")
    }

    pub fn wronskian(&self) -> Polynomial {
        seed_wronskian(&self.combined_seeds(), &self.param)
    }

    /// Level indexes that stay in the spectrum.
    pub fn surviving_levels(&self) -> Vec<usize> {
        self.param
            .bound_levels()
            .into_iter()
            .filter(|n| !self.pairs.contains(*n))
            .collect()
    }

    pub fn label(&self) -> String {
        format!(
            "{} pairs={} virtuals={}",
            self.param, self.pairs, self.virtuals
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeedRole {
    Pair,
    Virtual,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexCheck {
    pub index: usize,
    pub role: SeedRole,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityCertificate {
    pub ok: bool,
    /// `None` when the Wronskian vanishes identically.
    pub wronskian_positive_roots: Option<usize>,
    pub bound_check: Vec<IndexCheck>,
    pub pairs_juxtaposed: bool,
    pub wronskian_degree: Option<usize>,
    pub notes: Vec<String>,
}

/// Checks the seed bounds, the pair structure and root-freeness of the
/// combined Wronskian on `(0, inf)`.
pub fn certify_admissible(spec: &DeformationSpec) -> AdmissibilityCertificate {
    let a = spec.param.a();
    let virtual_floor = int(2) * a - Rational::one();
    let n_max = spec.param.n_max();
    let mut notes = Vec::new();
    let mut bound_check = Vec::new();
    for &m in spec.virtuals.indexes() {
        bound_check.push(IndexCheck {
            index: m,
            role: SeedRole::Virtual,
            ok: int(m as i64) > virtual_floor,
        });
    }
    for &m in spec.pairs.indexes() {
        bound_check.push(IndexCheck {
            index: m,
            role: SeedRole::Pair,
            ok: n_max.is_some_and(|n| m <= n),
        });
    }
    if let (Some(top), Some(n)) = (spec.pairs.largest(), n_max) {
        if top == n {
            notes.push(format!("top pair reaches the highest level N = {n}"));
            log::warn!(
                "{}: top pair reaches the highest level N = {n}",
                spec.label()
            );
        }
    }
    let pairs_juxtaposed = is_juxtaposed_pairs(&spec.pairs).juxtaposed;
    let w = spec.wronskian();
    let wronskian_positive_roots = sturm_positive_roots(&w).ok();
    if w.is_zero() {
        notes.push("combined Wronskian vanishes identically".into());
    }
    let ok =
        wronskian_positive_roots == Some(0) && pairs_juxtaposed && bound_check.iter().all(|c| c.ok);
    AdmissibilityCertificate {
        ok,
        wronskian_positive_roots,
        bound_check,
        pairs_juxtaposed,
        wronskian_degree: w.degree(),
        notes,
    }
}

fn require_admissible(spec: &DeformationSpec) -> Result<AdmissibilityCertificate> {
    let cert = certify_admissible(spec);
    if !cert.ok {
        return Err(Error::Inadmissible(spec.label()));
    }
    Ok(cert)
}

/// Exact energies of the deformed potential, ascending.
pub fn bound_spectrum(spec: &DeformationSpec) -> Result<Vec<Rational>> {
    require_admissible(spec)?;
    Ok(predicted_energies(spec))
}

/// Energies of the surviving levels without certifying the spec.
pub fn predicted_energies(spec: &DeformationSpec) -> Vec<Rational> {
    let mut e: Vec<Rational> = spec
        .surviving_levels()
        .into_iter()
        .map(|n| qrs_energy(Sign::Minus, n, &spec.param))
        .collect();
    e.sort();
    e
}

/// `V_Morse(a_eff) - 2y d/dy (y W'/W)` as a reduced rational function.
fn darboux_potential(a_eff: &Rational, w: &Polynomial) -> Result<RationalFunction> {
    if w.is_zero() {
        return Err(Error::VanishingWronskian);
    }
    let w1 = w.derivative();
    let w2 = w1.derivative();
    let w_sq = w * w;
    let base = Polynomial::new(vec![Rational::one(), int(-2) * a_eff]);
    // num = (1 - 2 a y) W^2 - 2 y^3 [ (W' + y W'') W - y W'^2 ]
    let inner = &(&(&w1 + &w2.shift_up(1)) * w) - &(&w1 * &w1).shift_up(1);
    let num = &(&base * &w_sq) - &inner.shift_up(3).scale(&int(2));
    RationalFunction::new(num, w_sq.shift_up(2))
}

/// Potential of the deformation. The spec must be admissible.
pub fn deformed_potential(spec: &DeformationSpec) -> Result<RationalFunction> {
    require_admissible(spec)?;
    deformed_potential_unchecked(spec)
}

/// Same construction without the admissibility gate.
pub fn deformed_potential_unchecked(spec: &DeformationSpec) -> Result<RationalFunction> {
    darboux_potential(&spec.shifted_a(), &spec.wronskian())
}

/// Potential built from plus-type seeds: `V_Morse(a + p) - 2y d/dy (y W'/W)`.
pub fn plus_deformed_potential(set: &SeedSet, param: &MorseParam) -> Result<RationalFunction> {
    if set.sign() != Sign::Plus {
        return Err(Error::InvalidSpec("expected a plus-type seed set".into()));
    }
    let a_eff = param.a() + int(set.len() as i64);
    darboux_potential(&a_eff, &seed_wronskian(set, param))
}

/// Numerator Wronskian of the `n`-th eigenfunction: the seeds followed by
/// the `n`-th eigen-polynomial.
pub fn eigen_numerator(spec: &DeformationSpec, n: usize) -> Result<Polynomial> {
    check_level(spec, n)?;
    let mut ps: Vec<Polynomial> = spec
        .combined_seeds()
        .indexes()
        .iter()
        .map(|&m| seed_polynomial(Sign::Minus, m, &spec.param))
        .collect();
    ps.push(seed_polynomial(Sign::Minus, n, &spec.param));
    Ok(wronskian(&ps))
}

fn check_level(spec: &DeformationSpec, n: usize) -> Result<()> {
    let reason = match spec.param.n_max() {
        None => Some("no bound states for a <= 1/2".to_string()),
        Some(top) if n > top => Some(format!("above the highest level N = {top}")),
        Some(_) if spec.pairs.contains(n) => Some("deleted with its pair".into()),
        Some(_) if !spec.param.bound_levels().contains(&n) => {
            Some("zero-energy threshold level is not normalizable".into())
        }
        _ => None,
    };
    match reason {
        Some(reason) => Err(Error::InvalidLevel { n, reason }),
        None => Ok(()),
    }
}

/// `y^{1/2-(a-q)} e^{-1/y} W_n / W`.
pub fn deformed_eigenfunction(spec: &DeformationSpec, n: usize) -> Result<QuasiRational> {
    let num = eigen_numerator(spec, n)?;
    let w = spec.wronskian();
    if w.is_zero() {
        return Err(Error::VanishingWronskian);
    }
    Ok(QuasiRational::new(
        rat(1, 2) - spec.shifted_a(),
        -Rational::one(),
        RationalFunction::new(num, w)?,
    ))
}

/// `y^{-2(a-q)} e^{-2/y} / W^2`, the squared ground prefactor times `1/y`.
pub fn eop_weight(spec: &DeformationSpec) -> Result<QuasiRational> {
    let w = spec.wronskian();
    if w.is_zero() {
        return Err(Error::VanishingWronskian);
    }
    Ok(QuasiRational::new(
        int(-2) * spec.shifted_a(),
        int(-2),
        RationalFunction::new(Polynomial::one(), &w * &w)?,
    ))
}

/// The weight with one more power of `y`, kept for comparison.
pub fn eop_weight_alternative(spec: &DeformationSpec) -> Result<QuasiRational> {
    Ok(eop_weight(spec)?.times_power(&Rational::one()))
}

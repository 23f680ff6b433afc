use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::algebra::rational::{int, Rational};
use crate::algebra::{interpolate, Polynomial};
use crate::error::Result;
use crate::morse::{seed_wronskian, MorseParam};
use crate::partitions::{conjugate, SeedSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub set: SeedSet,
    pub dual: SeedSet,
    pub shift: i64,
    pub monic_equal: bool,
    /// Ratio of the two Wronskians when the monic forms agree.
    pub proportionality: Option<Rational>,
    /// Set when one side vanished at this `a` and the comparison was made on
    /// the leading coefficient in `t` after moving to `a + t`.
    pub regularized: bool,
    pub left: Polynomial,
    pub right: Polynomial,
}

/// Compares the seed Wronskian of `set` at `a` with the Wronskian of its
/// conjugate at `a + shift`, up to normalization.
pub fn verify_equivalence(set: &SeedSet, param: &MorseParam) -> Result<EquivalenceReport> {
    let c = conjugate(set)?;
    let dual_param = param.shifted(c.parameter_shift);
    let left = seed_wronskian(set, param);
    let right = seed_wronskian(&c.dual, &dual_param);
    let regularized = left.is_zero() || right.is_zero();
    let (left, right) = if regularized {
        (
            leading_t_coefficient(set, param),
            leading_t_coefficient(&c.dual, &dual_param),
        )
    } else {
        (left, right)
    };
    let monic_equal = !left.is_zero() && left.monic() == right.monic();
    let proportionality =
        monic_equal.then(|| left.leading_coeff().unwrap() / right.leading_coeff().unwrap());
    Ok(EquivalenceReport {
        set: set.clone(),
        dual: c.dual,
        shift: c.parameter_shift,
        monic_equal,
        proportionality,
        regularized,
        left,
        right,
    })
}

/// Writes `W(y; a + t) = sum_i t^i P_i(y)` and returns the lowest nonzero
/// `P_i`. Each coefficient of `W` has degree at most `sum(set)` in `t`, so
/// samples at `t = 1, ..., sum(set) + 1` determine it; the `t^i` part is the
/// `i`-th coefficient of the Lagrange basis applied to the samples.
fn leading_t_coefficient(set: &SeedSet, param: &MorseParam) -> Polynomial {
    let d: usize = set.indexes().iter().sum();
    let samples: Vec<Polynomial> = (1..=d as i64 + 1)
        .map(|t| seed_wronskian(set, &MorseParam::with_threshold(param.a() + int(t))))
        .collect();
    let Some(ydeg) = samples.iter().filter_map(Polynomial::degree).max() else {
        return Polynomial::zero();
    };
    let basis = lagrange_basis(d + 1);
    for order in 0..=d {
        let p = Polynomial::new(
            (0..=ydeg)
                .map(|k| {
                    samples
                        .iter()
                        .zip(basis.iter())
                        .map(|(s, l)| s.coeff(k) * l.coeff(order))
                        .sum()
                })
                .collect(),
        );
        if !p.is_zero() {
            return p;
        }
    }
    Polynomial::zero()
}

/// Lagrange basis polynomials on the nodes `1, ..., n`, cached by `n`.
fn lagrange_basis(n: usize) -> Arc<Vec<Polynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Polynomial>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.lock().unwrap().get(&n) {
        return b.clone();
    }
    let nodes: Vec<Rational> = (1..=n as i64).map(int).collect();
    let basis: Vec<Polynomial> = (0..n)
        .map(|i| {
            let mut ys = vec![Rational::zero(); n];
            ys[i] = Rational::one();
            interpolate(&nodes, &ys)
        })
        .collect();
    let basis = Arc::new(basis);
    cache.lock().unwrap().insert(n, basis.clone());
    basis
}

/// Monic `Y_n^{(alpha)}(-y)`: the candidate closed form for the Wronskian of
/// a block of consecutive minus-type seeds.
pub fn reflected_bessel_monic(n: usize, alpha: &Rational) -> Polynomial {
    crate::bessel::gen_bessel(n, alpha).reflect().monic()
}

//! Root certification on the positive half-line.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::intpoly;
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// Number of distinct real roots in `(0, ∞)`.
///
/// Works on the squarefree part with a primitive integer Sturm chain. Sign
/// variations are counted at `0⁺` and at a power of two above the Cauchy
/// bound of the squarefree part.
pub fn sturm_positive_roots(p: &Polynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sq = p.squarefree_part();
    let (_, mut base) = sq.primitive_part();
    // Roots at y = 0 do not count; drop the y^k factor.
    let k = base.iter().position(|c| !c.is_zero()).unwrap_or(0);
    base.drain(..k);
    if base.len() <= 1 {
        return Ok(0);
    }
    let chain = sturm_chain(base);
    let shift = cauchy_shift(&chain[0]);
    let at_zero: Vec<i32> = chain
        .iter()
        .map(|s| intpoly::sign_at_zero_plus(s))
        .collect();
    let at_bound: Vec<i32> = chain
        .iter()
        .map(|s| intpoly::sign_at_pow2(s, shift))
        .collect();
    let v0 = variations(&at_zero);
    let v1 = variations(&at_bound);
    Ok(v0 - v1)
}

fn sturm_chain(p0: Vec<BigInt>) -> Vec<Vec<BigInt>> {
    let p1 = intpoly::primitive(intpoly::derivative(&p0));
    let mut chain = vec![p0, p1];
    loop {
        let n = chain.len();
        if chain[n - 1].len() <= 1 {
            break;
        }
        let r = intpoly::pos_prem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        let neg: Vec<BigInt> = r.into_iter().map(|c| -c).collect();
        chain.push(intpoly::primitive(neg));
    }
    chain
}

/// Smallest `s` with `2^s > 1 + max |a_i / a_n|`.
fn cauchy_shift(p: &[BigInt]) -> usize {
    let lead = p.last().unwrap().abs();
    let max = p[..p.len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    // ceil(max / lead) + 1 <= 2^s
    let q = (&max + &lead - 1u32) / &lead;
    (q + 1u32).bits() as usize + 1
}

fn variations(signs: &[i32]) -> usize {
    let nz: Vec<i32> = signs.iter().copied().filter(|&s| s != 0).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

//! Integer-coefficient kernels used for remainder sequences. Coefficients
//! are constant-first with no trailing zeros.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Divides out the positive content. Signs are preserved.
pub(crate) fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|c| c / &g).collect()
}

pub(crate) fn derivative(v: &[BigInt]) -> Vec<BigInt> {
    trim(
        v.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect(),
    )
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (o, c) in out.iter_mut().zip(b) {
        *o -= c;
    }
    trim(out)
}

/// Quotient of `a` by `d` when the division is exact in `Z[y]`. Panics
/// otherwise.
pub(crate) fn exact_div(a: &[BigInt], d: &[BigInt]) -> Vec<BigInt> {
    assert!(!d.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Vec::new();
    }
    let dd = d.len() - 1;
    assert!(a.len() > dd, "inexact polynomial division");
    let lc = &d[dd];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - dd];
    for k in (0..q.len()).rev() {
        let (c, rem) = r[k + dd].div_rem(lc);
        assert!(rem.is_zero(), "inexact polynomial division");
        if !c.is_zero() {
            for (j, dc) in d.iter().enumerate() {
                r[k + j] -= &c * dc;
            }
        }
        q[k] = c;
    }
    assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
    trim(q)
}

/// Remainder of `|lc(b)|^(deg a - deg b + 1) * a` by `b`. The multiplier is
/// positive so the sign of the remainder matches the true remainder.
pub(crate) fn pos_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    if a.len() <= db {
        return a.to_vec();
    }
    let lc = b[db].clone();
    let lc_abs = lc.abs();
    let lc_sign = if lc.is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let mut r = a.to_vec();
    let steps = a.len() - db;
    // Each step multiplies r by |lc|, then cancels the top term.
    for k in (0..steps).rev() {
        let top = r[k + db].clone();
        for c in r.iter_mut() {
            *c *= &lc_abs;
        }
        if !top.is_zero() {
            // r_top * |lc| - (top * sign(lc)) * lc = 0
            let f = &top * &lc_sign;
            for (j, bc) in b.iter().enumerate() {
                r[k + j] -= &f * bc;
            }
        }
        r.truncate(k + db);
    }
    trim(r)
}

/// Monic-free gcd via the primitive remainder sequence. Result is primitive
/// with positive leading coefficient.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut x, mut y) = (primitive(trim(a.to_vec())), primitive(trim(b.to_vec())));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = primitive(pos_prem(&x, &y));
        x = y;
        y = r;
    }
    if x.last().is_some_and(|c| c.is_negative()) {
        x = x.into_iter().map(|c| -c).collect();
    }
    x
}

/// Sign of the polynomial at `2^shift`, evaluated exactly.
pub(crate) fn sign_at_pow2(v: &[BigInt], shift: usize) -> i32 {
    let mut acc = BigInt::zero();
    for c in v.iter().rev() {
        acc = (acc << shift) + c;
    }
    signum(&acc)
}

/// Sign immediately to the right of zero.
pub(crate) fn sign_at_zero_plus(v: &[BigInt]) -> i32 {
    v.iter().find(|c| !c.is_zero()).map(signum).unwrap_or(0)
}

pub(crate) fn signum(c: &BigInt) -> i32 {
    if c.is_zero() {
        0
    } else if c.is_positive() {
        1
    } else {
        -1
    }
}

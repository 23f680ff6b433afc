use num_bigint::BigInt;
use num_traits::One;

use super::intpoly;
use super::poly::Polynomial;
use super::rational::Rational;

/// Wronskian determinant `W{p_1, ..., p_k}` in the variable `y`.
///
/// Row `i` of the matrix holds the `i`-th derivatives. Each entry is first
/// reduced to its primitive integer part so fraction-free elimination stays
/// inside `Z[y]`; the scale factors are restored at the end.
pub fn wronskian(ps: &[Polynomial]) -> Polynomial {
    assert!(!ps.is_empty(), "wronskian of an empty list");
    if ps.len() == 1 {
        return ps[0].clone();
    }
    if ps.iter().any(Polynomial::is_zero) {
        return Polynomial::zero();
    }
    let mut factor = Rational::one();
    let cols: Vec<Vec<BigInt>> = ps
        .iter()
        .map(|p| {
            let (f, prim) = p.primitive_part();
            factor *= f;
            prim
        })
        .collect();
    let n = cols.len();
    let mut m: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(n);
    let mut row = cols;
    for _ in 0..n {
        let next = row.iter().map(|c| intpoly::derivative(c)).collect();
        m.push(row);
        row = next;
    }
    Polynomial::from_bigints(&bareiss_det_int(m)).scale(&factor)
}

/// Fraction-free Gaussian elimination over `Z[y]`. Every division is exact.
fn bareiss_det_int(mut m: Vec<Vec<Vec<BigInt>>>) -> Vec<BigInt> {
    let n = m.len();
    let mut negate = false;
    let mut prev = vec![BigInt::one()];
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_empty() {
            match (k + 1..n).find(|&r| !m[r][k].is_empty()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Vec::new(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = intpoly::sub(
                    &intpoly::mul(&m[k][k], &m[i][j]),
                    &intpoly::mul(&m[i][k], &m[k][j]),
                );
                m[i][j] = intpoly::exact_div(&t, &prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if negate {
        det.into_iter().map(|c| -c).collect()
    } else {
        det
    }
}

/// Upper bound `sum deg - k(k-1)/2` on the degree of a polynomial Wronskian.
pub fn wronskian_degree_bound(degrees: &[usize]) -> Option<usize> {
    let k = degrees.len();
    let total: usize = degrees.iter().sum();
    total.checked_sub(k * (k - 1) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[(i64, i64)]) -> Polynomial {
        Polynomial::from_fracs(cs)
    }

    #[test]
    fn monomials_give_triangular_determinant() {
        let w = wronskian(&[
            Polynomial::from_ints(&[1]),
            Polynomial::from_ints(&[0, 1]),
            Polynomial::from_ints(&[0, 0, 1]),
        ]);
        assert_eq!(w, Polynomial::from_ints(&[2]));
    }

    #[test]
    fn hand_two_by_two() {
        let w = wronskian(&[p(&[(1, 1), (-2, 1)]), p(&[(1, 1), (-3, 1), (3, 2)])]);
        assert_eq!(w, Polynomial::from_ints(&[-1, 3, -3]));
        let w = wronskian(&[p(&[(1, 1), (1, 1), (1, 2)]), Polynomial::one()]);
        assert_eq!(w, Polynomial::from_ints(&[-1, -1]));
    }

    #[test]
    fn single_entry_is_identity() {
        let q = p(&[(2, 3), (0, 1), (-1, 7)]);
        assert_eq!(wronskian(std::slice::from_ref(&q)), q);
    }

    #[test]
    fn dependent_columns_vanish() {
        let w = wronskian(&[Polynomial::from_ints(&[0, 1]), Polynomial::from_ints(&[1])]);
        assert_eq!(w, Polynomial::from_ints(&[-1]));
        let w = wronskian(&[
            Polynomial::from_ints(&[1, 1]),
            Polynomial::from_ints(&[2, 2]),
        ]);
        assert!(w.is_zero());
        let w = wronskian(&[
            Polynomial::one(),
            Polynomial::from_ints(&[2]),
            Polynomial::from_ints(&[0, 0, 1]),
        ]);
        assert!(w.is_zero());
    }

    #[test]
    fn degree_bound() {
        assert_eq!(wronskian_degree_bound(&[1, 2]), Some(2));
        assert_eq!(wronskian_degree_bound(&[1, 2, 3, 4]), Some(4));
    }
}

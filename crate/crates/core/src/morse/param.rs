use std::fmt;

use num_traits::Signed;

use crate::algebra::rational::{floor_to_i64, format_rational, int, is_integer, rat, Rational};
use crate::error::{Error, Result};

/// Morse parameter `a` with `A = a - 1/2` and `N = floor(A)`.
///
/// When `2a` is an odd integer the top level sits exactly at zero energy and
/// is not normalizable. `new` rejects such values; `with_threshold` accepts
/// them and drops the zero-energy level from every spectrum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MorseParam {
    a: Rational,
}

impl MorseParam {
    pub fn new(a: Rational) -> Result<Self> {
        if is_threshold(&a) {
            return Err(Error::InvalidParameter {
                a: format_rational(&a),
                reason: "2a is an odd integer, so the top level sits at zero energy \
                         (use the threshold override to accept it)"
                    .into(),
            });
        }
        Ok(MorseParam { a })
    }

    pub fn with_threshold(a: Rational) -> Self {
        MorseParam { a }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// `A = a - 1/2`.
    pub fn big_a(&self) -> Rational {
        &self.a - rat(1, 2)
    }

    /// Highest level index `floor(a - 1/2)`, or `None` when `a <= 1/2`.
    pub fn n_max(&self) -> Option<usize> {
        if self.a <= rat(1, 2) {
            return None;
        }
        Some(floor_to_i64(&self.big_a()) as usize)
    }

    pub fn is_threshold(&self) -> bool {
        is_threshold(&self.a)
    }

    /// Levels with strictly negative energy, `0..=N` minus a threshold level.
    pub fn bound_levels(&self) -> Vec<usize> {
        match self.n_max() {
            None => Vec::new(),
            Some(n) if self.is_threshold() => (0..n).collect(),
            Some(n) => (0..=n).collect(),
        }
    }

    /// The same construction at `a + delta`, keeping the threshold policy loose
    /// since shifted parameters only enter algebraic identities.
    pub fn shifted(&self, delta: i64) -> MorseParam {
        MorseParam {
            a: &self.a + int(delta),
        }
    }
}

fn is_threshold(a: &Rational) -> bool {
    let two_a = a * int(2);
    is_integer(&two_a) && !is_integer(a) && two_a.is_positive()
}

impl fmt::Display for MorseParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={}", format_rational(&self.a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_quantities() {
        let p = MorseParam::new(int(3)).unwrap();
        assert_eq!(p.big_a(), rat(5, 2));
        assert_eq!(p.n_max(), Some(2));
        assert_eq!(p.bound_levels(), vec![0, 1, 2]);
        assert_eq!(MorseParam::new(int(0)).unwrap().n_max(), None);
        assert_eq!(MorseParam::new(int(1)).unwrap().n_max(), Some(0));
    }

    #[test]
    fn threshold_policy() {
        assert!(MorseParam::new(rat(9, 2)).is_err());
        assert!(MorseParam::new(rat(3, 2)).is_err());
        let p = MorseParam::with_threshold(rat(9, 2));
        assert_eq!(p.n_max(), Some(4));
        assert_eq!(p.bound_levels(), vec![0, 1, 2, 3]);
        assert!(MorseParam::new(rat(7, 3)).is_ok());
        assert!(MorseParam::new(rat(-1, 2)).is_ok());
    }
}

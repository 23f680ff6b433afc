use besselw::algebra::rational::{int, rat, to_f64};
use besselw::{
    gen_bessel, identity_residual, rbessel, sturm_positive_roots, IdentityKind, Rational, Sign,
};
use proptest::prelude::*;

/// Rationals in `(1/2, 10)`.
fn a_in_range() -> impl Strategy<Value = Rational> {
    (1i64..=12)
        .prop_flat_map(|d| ((d / 2 + 1)..(10 * d), Just(d)))
        .prop_map(|(n, d)| rat(n, d))
        .prop_filter("open interval", |a| *a > rat(1, 2) && *a < int(10))
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn bochner_ode_is_exact(a in a_in_range(), s in sign()) {
        for n in 0..=12 {
            prop_assert!(identity_residual(IdentityKind::BochnerOde, n, &a, s).is_zero(), "n={}", n);
        }
    }

    #[test]
    fn connection_and_shifts_are_exact(a in a_in_range(), s in sign()) {
        for n in 1..=10 {
            for kind in [IdentityKind::LaguerreConnection, IdentityKind::ForwardShift, IdentityKind::BackwardShift] {
                prop_assert!(identity_residual(kind, n, &a, s).is_zero(), "{} n={}", kind.name(), n);
            }
        }
    }

    #[test]
    fn degree_is_full_outside_the_gap(a in a_in_range(), m in 0usize..=24) {
        let am = to_f64(&a);
        let mr = m as f64;
        if mr > 2.0 * am - 1.0 || mr < am - 0.5 {
            prop_assert_eq!(gen_bessel(m, &(-(int(2) * &a))).degree(), Some(m));
        }
    }
}

#[test]
fn no_positive_roots_above_the_gap() {
    for a in [int(1), rat(3, 2), rat(5, 2)] {
        let lo = to_f64(&(int(2) * &a - int(1))).floor() as usize + 1;
        let hi = to_f64(&(int(2) * &a + int(10))).floor() as usize;
        for m in lo..=hi {
            let p = gen_bessel(m, &(-(int(2) * &a)));
            assert_eq!(sturm_positive_roots(&p).unwrap(), 0, "a={a} m={m}");
        }
    }
}

#[test]
fn orthogonal_family_oscillates() {
    for big_a in [rat(5, 2), rat(9, 2), rat(13, 2), int(7)] {
        let top = to_f64(&big_a).floor() as usize;
        for n in 0..=top {
            if int(n as i64) >= big_a {
                continue;
            }
            assert_eq!(
                sturm_positive_roots(&rbessel(n, &big_a)).unwrap(),
                n,
                "A={big_a} n={n}"
            );
        }
    }
}

use compbern_core::oracle::compose_by_partitions;
use compbern_core::rational::{factorial, from_bigint, int, ratio};
use compbern_core::{pochhammer, pochhammer_k, EgfSeries, Error, Rational, SeriesName};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-100i64..=100, 1i64..=100).prop_map(|(n, d)| ratio(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn series(order: usize) -> impl Strategy<Value = EgfSeries> {
    prop::collection::vec(rational(), order + 1).prop_map(EgfSeries::new)
}

/// `g_0 = 0`, `g_1 != 0`.
fn invertible(order: usize) -> impl Strategy<Value = EgfSeries> {
    (nonzero_rational(), prop::collection::vec(rational(), order - 1)).prop_map(|(g1, rest)| {
        let mut c = vec![Rational::zero(), g1];
        c.extend(rest);
        EgfSeries::new(c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reciprocal_round_trip(f in series(10), c0 in nonzero_rational()) {
        let mut c = f.into_coeffs();
        c[0] = c0;
        let f = EgfSeries::new(c);
        let r = f.reciprocal().unwrap();
        prop_assert_eq!(&f * &r, EgfSeries::one(10));
    }

    #[test]
    fn inverse_round_trip(g in invertible(10)) {
        let h = g.comp_inverse().unwrap();
        prop_assert_eq!(g.compose(&h).unwrap(), EgfSeries::x(10));
        prop_assert_eq!(h.compose(&g).unwrap(), EgfSeries::x(10));
    }

    #[test]
    fn compose_matches_partition_sum(f in series(7), g in invertible(7)) {
        let c = f.compose(&g).unwrap();
        for n in 0..=7 {
            prop_assert_eq!(c.coeff(n).clone(), compose_by_partitions(&f, &g, n));
        }
    }

    #[test]
    fn divided_shift_restores_tail(f in series(12), shift in 0usize..5) {
        let d = f.divided_shift(shift).unwrap();
        let back = &EgfSeries::monomial(shift, 12) * &EgfSeries::from_fn(12, |n| d.get(n).cloned().unwrap_or_default());
        prop_assert_eq!(back, &f - &f.project(shift));
    }

    #[test]
    fn mul_commutes_and_distributes(f in series(8), g in series(8), h in series(8)) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
    }

    #[test]
    fn values_stay_normalized(f in invertible(8)) {
        let h = f.comp_inverse().unwrap();
        for c in h.coeffs() {
            prop_assert!(c.denom().is_positive());
            prop_assert_eq!(c.clone(), Rational::new(c.numer().clone(), c.denom().clone()));
        }
    }
}

#[test]
fn pochhammer_k_scaling() {
    for a in 1..=6i64 {
        for b in 1..=6i64 {
            for n in 0..=10 {
                let lhs = pochhammer_k(&int(a), n, &int(b)) / compbern_core::rational::pow(&int(b), n);
                assert_eq!(lhs, pochhammer(&ratio(a, b), n), "a={a} b={b} n={n}");
            }
        }
    }
}

#[test]
fn pochhammer_of_one_is_factorial() {
    for n in 0..=12 {
        assert_eq!(pochhammer(&int(1), n), from_bigint(factorial(n)));
    }
}

#[test]
fn documented_examples() {
    let e = SeriesName::Exp.series(10);
    let em1 = &e - &EgfSeries::one(10);
    assert_eq!(*e.compose(&em1).unwrap().coeff(4), int(15));
    let s = SeriesName::Sin.series(10);
    assert_eq!(*s.compose(&s).unwrap().coeff(3), int(-2));
    assert_eq!(*(&s * &SeriesName::Cos.series(10)).coeff(3), int(-4));
    let inv = em1.comp_inverse().unwrap();
    for n in 1..=10 {
        let mag = from_bigint(factorial(n - 1));
        assert_eq!(*inv.coeff(n), if n % 2 == 1 { mag } else { -mag });
    }
    assert_eq!(*e.shifted_normalized(2).unwrap().comp_inverse().unwrap().coeff(4), ratio(-68, 45));
    assert_eq!(*e.divided_shift(1).unwrap().reciprocal().unwrap().coeff(1), ratio(-1, 2));
    assert_eq!(EgfSeries::x(5).comp_inverse().unwrap(), EgfSeries::x(5));
    assert_eq!(e.project(1), EgfSeries::one(10));
    assert!(e.project(0).is_zero());
}

#[test]
fn error_cases() {
    let s = SeriesName::Sin.series(6);
    assert_eq!(s.reciprocal().unwrap_err(), Error::ZeroConstantTerm);
    let e = SeriesName::Exp.series(6);
    assert_eq!(s.compose(&e).unwrap_err(), Error::NonzeroConstantInner);
    assert!(matches!(e.comp_inverse(), Err(Error::NotInvertible(_))));
    let x2 = EgfSeries::monomial(2, 6);
    assert!(matches!(x2.comp_inverse(), Err(Error::NotInvertible(_))));
    assert_eq!(s.divided_shift(7).unwrap_err(), Error::OrderTooSmall { have: 6, need: 7 });
}

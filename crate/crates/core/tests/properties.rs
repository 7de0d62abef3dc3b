//! Ring laws of truncated series, symmetry of the box-side generating
//! function, and consistency between the plane-partition enumerators.

mod common;

use num_bigint::BigInt;
use ppdimer::doublebox::zdbc;
use ppdimer::planepart::{enumerate_boxed, enumerate_by_volume};
use ppdimer::qseries::{macmahon, macmahon_box, QSeries};
use proptest::prelude::*;

const N: usize = 7;

fn series() -> impl Strategy<Value = QSeries> {
    prop::collection::vec(-1000i64..1000, N + 1).prop_map(|c| QSeries::from_coeffs(c, N))
}

fn unit() -> impl Strategy<Value = QSeries> {
    (prop::bool::ANY, prop::collection::vec(-50i64..50, N)).prop_map(|(neg, rest)| {
        let c0 = if neg { -1 } else { 1 };
        QSeries::from_coeffs(std::iter::once(c0).chain(rest), N)
    })
}

proptest! {
    #[test]
    fn addition_and_multiplication_commute(p in series(), q in series()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn multiplication_associates_and_distributes(p in series(), q in series(), r in series()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn identities(p in series()) {
        prop_assert_eq!(&p * &QSeries::one(N), p.clone());
        prop_assert_eq!(&p + &QSeries::zero(N), p.clone());
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p + &(-&p), QSeries::zero(N));
    }

    #[test]
    fn units_invert(u in unit()) {
        let inv = u.inverse().unwrap();
        prop_assert_eq!(&u * &inv, QSeries::one(N));
    }

    #[test]
    fn shift_is_multiplication_by_a_monomial(p in series(), k in 0usize..=N) {
        prop_assert_eq!(p.shift(k), &p * &QSeries::monomial(k, 1, N));
    }

    #[test]
    fn json_round_trip(p in series()) {
        let text = serde_json::to_string(&p).unwrap();
        let back: QSeries = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn truncation_commutes_with_products(p in series(), q in series(), k in 0usize..=N) {
        prop_assert_eq!((&p * &q).truncate(k), &p.truncate(k) * &q.truncate(k));
    }
}

#[test]
fn mismatched_orders_are_rejected() {
    assert!(QSeries::one(3).try_add(&QSeries::one(4)).is_err());
    assert!(QSeries::from_coeffs([2i64, 1], 1).inverse().is_err());
}

#[test]
fn big_coefficients_stay_exact() {
    // M(q)^400 has coefficients past 64 bits
    let m = macmahon(12).pow(400);
    let oracle: Vec<i128> = common::padded(&common::pp_counts(12), 13);
    let mut acc = vec![0i128; 13];
    acc[0] = 1;
    for _ in 0..400 {
        acc = common::mul(&acc, &oracle, 13);
    }
    assert!(acc[12] > i128::from(u64::MAX));
    let want: Vec<BigInt> = acc.into_iter().map(BigInt::from).collect();
    assert_eq!(m.coeffs(), want.as_slice());
}

#[test]
fn volume_enumeration_matches_the_row_oracle() {
    let mut counts = vec![0u64; 9];
    for pp in enumerate_by_volume(8) {
        counts[pp.volume()] += 1;
    }
    assert_eq!(counts, common::pp_counts(8));
}

#[test]
fn boxed_enumeration_is_symmetric() {
    for (a, b, c) in [(1, 2, 3), (2, 2, 3), (1, 3, 2)] {
        let count = |a, b, c| enumerate_boxed(a, b, c).count();
        let n = count(a, b, c);
        assert_eq!(n, count(b, c, a));
        assert_eq!(n, count(c, a, b));
        assert_eq!(macmahon_box(a, b, c, 10), macmahon_box(c, b, a, 10));
    }
}

#[test]
fn box_side_is_symmetric_in_the_parameters() {
    let base = zdbc(2, 1, 0, 4);
    for p in [(1, 2, 0), (0, 1, 2), (2, 0, 1), (1, 0, 2), (0, 2, 1)] {
        assert_eq!(zdbc(p.0, p.1, p.2, 4), base, "{p:?}");
    }
    assert_eq!(zdbc(1, 1, 2, 4), zdbc(2, 1, 1, 4));
}

//! Field laws for exact cyclotomic numbers.

use proptest::prelude::*;
use spherex::cyclo::Cyc;

const CONDUCTORS: [u64; 10] = [1, 3, 4, 5, 8, 9, 12, 15, 20, 24];

fn cyc() -> impl Strategy<Value = Cyc> {
    (
        prop::sample::select(&CONDUCTORS[..]),
        prop::collection::vec((0u64..120, -6i64..=6), 0..6),
        1i64..=4,
    )
        .prop_map(|(n, terms, den)| {
            let sum: Cyc = terms
                .into_iter()
                .map(|(e, c)| &Cyc::from_int(c) * &Cyc::root_of_unity(n, (e % n) as i64))
                .sum();
            &sum * &Cyc::ratio(1, den)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_associative_and_commutative(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn multiplication_distributes(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn nonzero_elements_are_invertible(a in cyc()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn galois_action_is_a_ring_map(a in cyc(), b in cyc(), k in prop::sample::select(vec![1i64, 7, 11, 13, 17, 19, 23, 29, -1])) {
        prop_assert_eq!((&a * &b).galois(k).unwrap(), &a.galois(k).unwrap() * &b.galois(k).unwrap());
        prop_assert_eq!((&a + &b).galois(k).unwrap(), &a.galois(k).unwrap() + &b.galois(k).unwrap());
        prop_assert_eq!(a.galois(-1).unwrap(), a.conj());
    }

    #[test]
    fn dot_matches_termwise_sum(items in prop::collection::vec((cyc(), cyc(), -5i64..=5), 0..5)) {
        let naive: Cyc = items.iter().map(|(a, b, w)| &(a * b) * &Cyc::from_int(*w)).sum();
        prop_assert_eq!(Cyc::dot(items.iter().map(|(a, b, w)| (a, b, *w))), naive);
    }

    #[test]
    fn text_round_trips(a in cyc()) {
        prop_assert_eq!(a.to_string().parse::<Cyc>().unwrap(), a);
    }

    #[test]
    fn complex_embedding_is_multiplicative(a in cyc(), b in cyc()) {
        let lhs = (&a * &b).to_complex();
        let rhs = a.to_complex() * b.to_complex();
        prop_assert!((lhs - rhs).norm() < 1e-6 * (1.0 + rhs.norm()));
    }
}

#[test]
fn roots_of_unity_have_the_expected_order() {
    for n in 1..=40u64 {
        let z = Cyc::root_of_unity(n, 1);
        assert!(z.pow(n as i64).unwrap().is_one());
        assert_eq!(z.root_of_unity_log().unwrap(), (n, 1 % n));
    }
}

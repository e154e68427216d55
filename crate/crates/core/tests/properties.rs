use latroid::code_latroids::{
    chain_support_latroid, code_gen_weights_dbar_all, latroid_weights_equal_code_weights, all_equal,
};
use latroid::codes::Code;
use latroid::enumerators::{enumerator_from_tutte, refined_enumerator, ExpPoly};
use latroid::isometries::{decompose_chain_isometry, is_isometry, random_monomial, RingMatrix};
use latroid::ring::Pir;
use latroid::supports::SupportFn;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const RINGS: [(&str, usize); 4] = [("Z_4", 2), ("Z_8", 1), ("Z_9", 2), ("Z_6", 2)];

fn code(spec: usize, idx: &[u64]) -> Code {
    let (r, n) = RINGS[spec];
    let ring: Pir = r.parse().unwrap();
    let size = ring.space_size(n).unwrap();
    let gens = idx.iter().map(|&i| ring.vector_from_index(i % size, n)).collect();
    Code::span(&ring, n, gens).unwrap()
}

fn arb_code() -> impl Strategy<Value = Code> {
    (0..RINGS.len(), prop::collection::vec(any::<u64>(), 0..3)).prop_map(|(s, idx)| code(s, &idx))
}

fn arb_poly() -> impl Strategy<Value = ExpPoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, 2), -5i64..6), 0..5).prop_map(|terms| {
        let vars = vec!["x".to_string(), "y".to_string()];
        let mut p = ExpPoly::zero(vars);
        for (e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn chain_latroid_is_valid_and_dual_is_an_involution(c in arb_code()) {
        let lt = chain_support_latroid(&c).unwrap();
        prop_assert!(lt.validate().is_ok());
        let d = lt.dual();
        prop_assert!(d.validate().is_ok());
        prop_assert_eq!(d.dual(), lt);
    }

    #[test]
    fn tutte_identity_and_weights(c in arb_code()) {
        let s = SupportFn::chain(c.ring(), c.n());
        let w = refined_enumerator(&c, &s).unwrap();
        prop_assert_eq!(&enumerator_from_tutte(&c).unwrap(), &w);
        prop_assert_eq!(w.coefficient_sum(), BigInt::from(c.size()));
        prop_assert!(all_equal(&latroid_weights_equal_code_weights(&c).unwrap()));
    }

    #[test]
    fn dbar_strictly_increases_for_the_chain_support(c in arb_code()) {
        let s = SupportFn::chain(c.ring(), c.n());
        let w = code_gen_weights_dbar_all(&c, &s).unwrap();
        prop_assert_eq!(w.len(), c.lambda() as usize);
        prop_assert!(w.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn polynomial_ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn monomial_isometries_round_trip(seed in any::<u64>(), spec in prop::sample::select(vec!["Z_4", "Z_9", "Z_8"])) {
        let ring: Pir = spec.parse().unwrap();
        let s = SupportFn::chain(&ring, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (_, _, a) = random_monomial(&ring, 2, &mut rng);
        let (_, _, b) = random_monomial(&ring, 2, &mut rng);
        prop_assert!(is_isometry(&a, &s).unwrap());
        let dec = decompose_chain_isometry(&a, &s).unwrap();
        prop_assert_eq!(&dec.d.mul(&dec.p), &a);
        prop_assert!(is_isometry(&a.mul(&b), &s).unwrap());
        let inv = a.inverse().unwrap();
        prop_assert!(is_isometry(&inv, &s).unwrap());
        prop_assert_eq!(inv.mul(&a), RingMatrix::identity(&ring, 2));
    }
}

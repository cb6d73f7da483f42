//! Randomized invariants across modules.

use proptest::prelude::*;
use qrv_core::{
    gray_map, parse_ring_element, word_weight, LinearCode, PrimeField, RingElement, RingPoly,
    WeightKind,
};

const SMALL_PRIMES: [u32; 4] = [2, 3, 5, 7];

fn field_strategy() -> impl Strategy<Value = PrimeField> {
    prop::sample::select(SMALL_PRIMES.to_vec()).prop_map(|p| PrimeField::new(p).unwrap())
}

fn element_strategy() -> impl Strategy<Value = RingElement> {
    (field_strategy(), 0u32..64, 0u32..64).prop_map(|(f, a, b)| RingElement::new(f, a, b))
}

proptest! {
    #[test]
    fn text_form_round_trips(x in element_strategy()) {
        let text = x.to_string();
        let back = parse_ring_element(x.field(), &text).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn crt_round_trips_and_is_multiplicative(x in element_strategy(), a2 in 0u32..64, b2 in 0u32..64) {
        let f = x.field();
        let y = RingElement::new(f, a2, b2);
        let (xs, xt) = x.crt_split();
        prop_assert_eq!(RingElement::crt_join(f, xs, xt), x);
        let (ys, yt) = y.crt_split();
        let prod = x.mul(&y).unwrap();
        prop_assert_eq!(prod.crt_split(), (f.mul(xs, ys), f.mul(xt, yt)));
    }

    #[test]
    fn lee_weight_equals_gray_hamming(
        f in field_strategy(),
        coeffs in prop::collection::vec((0u32..64, 0u32..64), 1..12),
    ) {
        let word: Vec<RingElement> = coeffs.iter().map(|&(a, b)| RingElement::new(f, a, b)).collect();
        let img = gray_map(&word).unwrap();
        let wh = img.iter().filter(|&&c| c != 0).count();
        prop_assert_eq!(word_weight(&word, WeightKind::Lee).unwrap(), wh);
    }

    #[test]
    fn cyclic_mul_commutes(
        f in field_strategy(),
        pairs in prop::collection::vec((0u32..64, 0u32..64), 5),
        pairs2 in prop::collection::vec((0u32..64, 0u32..64), 5),
    ) {
        let mk = |ps: &[(u32, u32)]| {
            RingPoly::new(f, ps.iter().map(|&(a, b)| RingElement::new(f, a, b)).collect()).unwrap()
        };
        let a = mk(&pairs);
        let b = mk(&pairs2);
        prop_assert_eq!(a.cyclic_mul(&b).unwrap(), b.cyclic_mul(&a).unwrap());
    }

    #[test]
    fn double_dual_is_identity_and_cardinalities_multiply(
        f in field_strategy(),
        pairs in prop::collection::vec((0u32..64, 0u32..64), 7),
    ) {
        let poly = RingPoly::new(f, pairs.iter().map(|&(a, b)| RingElement::new(f, a, b)).collect()).unwrap();
        let code = LinearCode::from_cyclic_poly(&poly);
        let dual = code.euclidean_dual();
        prop_assert_eq!(code.card_exponent() + dual.card_exponent(), 2 * 7);
        prop_assert_eq!(dual.euclidean_dual(), code);
    }

    #[test]
    fn mu_map_is_multiplicative_on_ring_polys(
        pairs in prop::collection::vec((0u32..2, 0u32..2), 7),
        pairs2 in prop::collection::vec((0u32..2, 0u32..2), 7),
        a in prop::sample::select(vec![1u64, 2, 3, 4, 5, 6]),
    ) {
        let f = PrimeField::new(2).unwrap();
        let mk = |ps: &[(u32, u32)]| {
            RingPoly::new(f, ps.iter().map(|&(x, y)| RingElement::new(f, x, y)).collect()).unwrap()
        };
        let fp = mk(&pairs);
        let gp = mk(&pairs2);
        let lhs = fp.cyclic_mul(&gp).unwrap().mu_map(a).unwrap();
        let rhs = fp.mu_map(a).unwrap().cyclic_mul(&gp.mu_map(a).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

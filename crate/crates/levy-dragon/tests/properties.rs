//! Randomized structural invariants, generator-driven.

use num_complex::Complex64;
use proptest::collection::vec;
use proptest::prelude::*;

use levy_dragon::binary::BinaryWord;
use levy_dragon::curve::{decode, evaluate, recursion_value, SHIFT};
use levy_dragon::exact::DyadicGaussian;
use levy_dragon::revolving::{digit_sequence, satisfies_revolving_exact};
use levy_dragon::Curve;

fn dyadic_gaussian() -> impl Strategy<Value = DyadicGaussian> {
    (-(1i128 << 40)..(1i128 << 40), -(1i128 << 40)..(1i128 << 40), 0u32..12)
        .prop_map(|(a, b, k)| DyadicGaussian::new(a, b, k))
}

fn word() -> impl Strategy<Value = BinaryWord> {
    vec(0..=1u8, 0..48).prop_map(|bits| BinaryWord::from_bits(&bits))
}

proptest! {
    #[test]
    fn conjugation_is_an_involution_and_multiplicative(
        a in dyadic_gaussian(),
        b in dyadic_gaussian(),
    ) {
        prop_assert_eq!(a.conjugate().conjugate(), a);
        let lhs = a.checked_mul(&b).unwrap().conjugate();
        let rhs = a.conjugate().checked_mul(&b.conjugate()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn negation_is_the_additive_inverse(a in dyadic_gaussian()) {
        prop_assert_eq!(a.checked_add(&a.negated()).unwrap(), DyadicGaussian::ZERO);
    }

    #[test]
    fn float_conversion_is_a_homomorphism(
        a in dyadic_gaussian(),
        b in dyadic_gaussian(),
    ) {
        let sum = a.checked_add(&b).unwrap().to_complex();
        let expect = a.to_complex() + b.to_complex();
        // Values of this size convert and add exactly in f64.
        prop_assert!((sum - expect).norm() <= 1e-9 * (1.0 + expect.norm()));
    }

    #[test]
    fn powering_matches_repeated_multiplication(
        a in (-(1i128 << 8)..(1i128 << 8), -(1i128 << 8)..(1i128 << 8), 0u32..4)
            .prop_map(|(x, y, k)| DyadicGaussian::new(x, y, k)),
        n in 0u32..6,
    ) {
        let mut by_mul = DyadicGaussian::ONE;
        for _ in 0..n {
            by_mul = by_mul.checked_mul(&a).unwrap();
        }
        prop_assert_eq!(a.checked_pow(n).unwrap(), by_mul);
    }

    #[test]
    fn digit_lookup_and_prefix_counts_are_consistent(w in word()) {
        let mut ones = 0usize;
        for n in 1..=64usize {
            ones += w.digit(n) as usize;
            prop_assert_eq!(w.ones_in_prefix(n), ones);
        }
        if !w.is_zero() && !w.is_one() {
            prop_assert_eq!(w.digit(w.width()), 1);
        }
    }

    #[test]
    fn reconstruction_from_the_rational_form(w in word()) {
        prop_assume!(!w.is_zero());
        let x = w.to_rational();
        let again = levy_dragon::binary::expand(&x, 64).unwrap();
        prop_assert_eq!(again, w);
    }

    #[test]
    fn translation_identity_on_random_words(w in word()) {
        let f = evaluate(Curve::Levy, &w, 64).unwrap().exact.unwrap();
        let g = evaluate(Curve::Shifted, &w, 64).unwrap().exact.unwrap();
        prop_assert_eq!(g, f.checked_add(&SHIFT).unwrap());
    }

    #[test]
    fn recursion_oracle_on_random_words(w in word()) {
        for curve in [Curve::Levy, Curve::Shifted] {
            let series = evaluate(curve, &w, 64).unwrap().exact.unwrap();
            prop_assert_eq!(series, recursion_value(curve, &w).unwrap());
        }
    }

    #[test]
    fn decoding_inverts_generation(w in word()) {
        prop_assume!(!w.is_zero() && !w.is_one());
        let k = w.width();
        let xi = digit_sequence(Curve::Levy, &w, k);
        prop_assert_eq!(
            decode(Curve::Levy, &xi).unwrap().exact.unwrap(),
            evaluate(Curve::Levy, &w, 64).unwrap().exact.unwrap()
        );
        let gamma = digit_sequence(Curve::Shifted, &w, k - 1);
        prop_assert_eq!(
            decode(Curve::Shifted, &gamma).unwrap().exact.unwrap(),
            evaluate(Curve::Shifted, &w, 64).unwrap().exact.unwrap()
        );
    }

    #[test]
    fn random_words_satisfy_the_revolving_condition(w in word()) {
        prop_assert!(satisfies_revolving_exact(&digit_sequence(Curve::Levy, &w, 64)));
    }

    #[test]
    fn shifted_digits_rotate_by_quarter_turns(w in word()) {
        let seq = digit_sequence(Curve::Shifted, &w, 32);
        for k in 1..seq.len() {
            let ratio = seq[k].ratio(&seq[k - 1]).unwrap().to_complex();
            let candidates = [
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(-1.0, 0.0),
                Complex64::new(0.0, -1.0),
            ];
            prop_assert!(candidates.iter().any(|c| (ratio - c).norm() < 1e-12));
        }
    }
}

//! Property tests for the exact layer, the rewrite engine, and the
//! representation oracles.

use proptest::prelude::*;

use bkappa::algebra::{word_normalize, word_normalize_rtl, Generator};
use bkappa::analytic::bargmann::{
    derivative, fibonacci_difference, generalized_derivative, multiply_by_z, BargmannPoly,
};
use bkappa::exact::{KPoly, NPoly, NSigmaPoly, Rational};
use bkappa::fock::{build_operator, exact_action, word_action, OperatorKind};
use bkappa::NormalForm;
use num_complex::Complex64;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-24i64..=24, 1i64..=9).prop_map(|(n, d)| Rational::new(n, d))
}

fn arb_kpoly() -> impl Strategy<Value = KPoly> {
    prop::collection::vec(arb_rational(), 0..4).prop_map(KPoly::from_coeffs)
}

fn arb_npoly() -> impl Strategy<Value = NPoly> {
    prop::collection::vec(arb_kpoly(), 0..4).prop_map(NPoly::from_coeffs)
}

fn arb_nsigma() -> impl Strategy<Value = NSigmaPoly> {
    (arb_npoly(), arb_npoly()).prop_map(|(e, s)| NSigmaPoly::from_parts(e, s))
}

fn arb_generator() -> impl Strategy<Value = Generator> {
    prop_oneof![Just(Generator::Raise), Just(Generator::Lower)]
}

fn arb_word(max_len: usize) -> impl Strategy<Value = Vec<Generator>> {
    prop::collection::vec(arb_generator(), 0..=max_len)
}

proptest! {
    #[test]
    fn rational_addition_roundtrips(a in arb_rational(), b in arb_rational()) {
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn ring_associativity(a in arb_nsigma(), b in arb_nsigma(), c in arb_nsigma()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn ring_distributivity(a in arb_nsigma(), b in arb_nsigma(), c in arb_nsigma()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn ring_commutativity(a in arb_nsigma(), b in arb_nsigma()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn shift_commutes_with_eval(
        a in arb_nsigma(),
        d in -3i64..=3,
        n in 3u32..=40,
        kappa_num in 0i64..=12,
    ) {
        let kappa = Rational::new(kappa_num, 5);
        let shifted = a.shift(d);
        let target = (n as i64 + d) as u32;
        prop_assert_eq!(shifted.eval(&kappa, n), a.eval(&kappa, target));
        // round trip back
        prop_assert_eq!(shifted.shift(-d), a);
    }

    #[test]
    fn nsigma_json_roundtrip(a in arb_nsigma()) {
        let v = a.to_json();
        prop_assert_eq!(NSigmaPoly::from_json(&v).unwrap(), a);
    }

    #[test]
    fn rewrite_is_confluent(word in arb_word(10)) {
        prop_assert_eq!(word_normalize(&word), word_normalize_rtl(&word));
    }

    #[test]
    fn normal_mul_matches_concatenation(
        left in arb_word(5),
        right in arb_word(5),
    ) {
        let product = word_normalize(&left).normal_mul(&word_normalize(&right));
        let mut whole = left.clone();
        whole.extend_from_slice(&right);
        prop_assert_eq!(product, word_normalize(&whole));
    }

    #[test]
    fn coefficient_crossings_match_normal_mul(word in arb_word(6), s in arb_nsigma()) {
        let nf = word_normalize(&word);
        let scalar = NormalForm::from_coefficient(s.clone());
        prop_assert_eq!(scalar.normal_mul(&nf), nf.mul_coefficient_left(&s));
        prop_assert_eq!(nf.normal_mul(&scalar), nf.mul_coefficient_right(&s));
    }

    #[test]
    fn normal_form_json_roundtrip(word in arb_word(6)) {
        let nf = word_normalize(&word);
        prop_assert_eq!(NormalForm::from_json(&nf.to_json()).unwrap(), nf);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // The rewrite engine is faithful: the normal form acts on every
    // Fock state exactly as the raw word does.
    #[test]
    fn normal_form_is_faithful(
        word in arb_word(8),
        n in 0u32..=24,
        kappa_idx in 0usize..4,
    ) {
        let kappas = [
            Rational::new(1, 3),
            Rational::new(1, 2),
            Rational::from_int(2),
            Rational::new(5, 7),
        ];
        let kappa = &kappas[kappa_idx];
        let direct = word_action(&word, n, kappa).unwrap();
        let via_nf = exact_action(&word_normalize(&word), n, kappa).unwrap();
        match direct {
            None => prop_assert!(via_nf.is_empty()),
            Some((m, coeff)) => {
                prop_assert_eq!(via_nf.len(), 1);
                prop_assert_eq!(&via_nf[&m], &coeff);
            }
        }
        // the reduced form acts identically
        let via_reduced = exact_action(&word_normalize(&word).reduce(), n, kappa).unwrap();
        prop_assert_eq!(via_nf, via_reduced);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    // Exact shared-radical evaluation against plain float matrices.
    #[test]
    fn exact_action_matches_float_matrices(
        word in arb_word(5),
        n in 0u32..=8,
        kappa_idx in 0usize..3,
    ) {
        let kappas = [Rational::new(1, 3), Rational::new(5, 7), Rational::from_int(2)];
        let kappa = &kappas[kappa_idx];
        let dim = 20usize;
        let nf = word_normalize(&word);
        let exact = exact_action(&nf, n, kappa).unwrap();

        let raise = build_operator(OperatorKind::Raise, dim, kappa).unwrap();
        let lower = build_operator(OperatorKind::Lower, dim, kappa).unwrap();
        let mut matrix = bkappa::FockMatrix::identity(dim);
        for g in &word {
            let factor = match g {
                Generator::Raise => &raise,
                Generator::Lower => &lower,
            };
            matrix = matrix.mul(factor);
        }
        let mut basis = vec![0.0; dim];
        basis[n as usize] = 1.0;
        let image = matrix.apply(&basis);
        for (m, value) in image.iter().enumerate() {
            let expect = exact
                .get(&(m as u32))
                .map(|c| c.to_f64(kappa))
                .unwrap_or(0.0);
            let scale = expect.abs().max(1.0);
            prop_assert!(
                (value - expect).abs() <= 1e-10 * scale,
                "level {} -> {}: float {} vs exact {}", n, m, value, expect
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // {∂₋₁, z} = 1 on polynomials up to degree 50, float coefficients.
    #[test]
    fn parity_derivative_anticommutator(
        coeffs in prop::collection::vec((-8i32..=8, -8i32..=8), 1..=51),
    ) {
        let p = BargmannPoly::from_coeffs(
            coeffs.iter().map(|&(re, im)| Complex64::new(re as f64, im as f64)).collect(),
        );
        let anti = fibonacci_difference(&multiply_by_z(&p))
            .add(&multiply_by_z(&fibonacci_difference(&p)));
        prop_assert!(anti.max_abs_diff(&p) == 0.0);
    }

    // {D^κ, z} = 1 + 2κ z d/dz on the same class.
    #[test]
    fn generalized_derivative_anticommutator(
        coeffs in prop::collection::vec((-8i32..=8, -8i32..=8), 1..=51),
        kappa_num in 1i64..=10,
    ) {
        let kappa = Rational::new(kappa_num, 4);
        let p = BargmannPoly::from_coeffs(
            coeffs.iter().map(|&(re, im)| Complex64::new(re as f64, im as f64)).collect(),
        );
        let anti = generalized_derivative(&kappa, &multiply_by_z(&p))
            .add(&multiply_by_z(&generalized_derivative(&kappa, &p)));
        let expect = p.add(
            &multiply_by_z(&derivative(&p)).scale(Complex64::new(2.0 * kappa.to_f64(), 0.0)),
        );
        prop_assert!(anti.max_abs_diff(&expect) <= 1e-12 * (1.0 + expect.max_abs_diff(&BargmannPoly::zero())));
    }
}

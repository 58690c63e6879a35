use num::BigInt;
use proptest::prelude::*;

use hopfdiag::boson::{
    cumulants_to_moments, forget_normal_order, moments_to_cumulants, normal_mul, normal_order,
    word_moments, BosonWord, Letter, NormalForm, ZPolynomial,
};
use hopfdiag::combinatorics::enumerate_set_partitions;
use hopfdiag::diagrams::{
    canonicalize, configuration_to_diagram, pfi_by_diagrams, pfi_by_series,
    LabelledConfiguration,
};
use hopfdiag::hopf::{
    antipode, bell_generators, coproduct, counit, product, BellGenerator, HopfElement, Monomial,
};
use hopfdiag::series::{apply_diff_operator, BivariatePoly, EGFSeries};
use hopfdiag::Rational;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-999i64..1000, 1i64..100)
        .prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)).unwrap())
}

fn arb_series(order: usize) -> impl Strategy<Value = EGFSeries> {
    prop::collection::vec(arb_rational(), order + 1)
        .prop_map(move |coeffs| EGFSeries::new(order, coeffs).unwrap())
}

fn arb_word(max_len: usize) -> impl Strategy<Value = BosonWord> {
    prop::collection::vec(any::<bool>(), 0..=max_len).prop_map(|bits| {
        BosonWord::new(
            bits.into_iter()
                .map(|b| {
                    if b {
                        Letter::Creation
                    } else {
                        Letter::Annihilation
                    }
                })
                .collect(),
        )
    })
}

fn arb_normal_form() -> impl Strategy<Value = NormalForm> {
    prop::collection::vec(((0usize..3, 0usize..3), -5i64..6), 1..=3).prop_map(|terms| {
        let mut out = NormalForm::zero();
        for ((i, j), c) in terms {
            out = out.add(&NormalForm::monomial(i, j, BigInt::from(c)));
        }
        out
    })
}

fn arb_zpoly() -> impl Strategy<Value = ZPolynomial> {
    prop::collection::vec(((0usize..3, 0usize..3), arb_rational()), 0..=4).prop_map(|terms| {
        let mut out = ZPolynomial::zero();
        for ((p, q), c) in terms {
            out = out.add(&ZPolynomial::monomial(p, q, c));
        }
        out
    })
}

fn arb_bell_element() -> impl Strategy<Value = HopfElement<BellGenerator>> {
    prop::collection::vec(
        (
            prop::collection::vec((1usize..4, 1usize..3), 0..=2),
            arb_rational(),
        ),
        0..=3,
    )
    .prop_map(|terms| {
        let mut out = HopfElement::zero();
        for (factors, c) in terms {
            let m = Monomial::from_factors(
                factors
                    .into_iter()
                    .map(|(k, a)| (BellGenerator::new(k), a))
                    .collect(),
            );
            out.add_term(m, c);
        }
        out
    })
}

fn arb_matrix() -> impl Strategy<Value = Vec<Vec<usize>>> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(rows, cols)| {
            prop::collection::vec(prop::collection::vec(0usize..=3, cols), rows)
        })
        .prop_filter("no zero row or column", |m| {
            m.iter().all(|r| r.iter().any(|&e| e > 0))
                && (0..m[0].len()).all(|j| m.iter().any(|r| r[j] > 0))
        })
}

proptest! {
    #[test]
    fn exp_log_round_trip(mut f in arb_series(10)) {
        let mut coeffs = f.coeffs().to_vec();
        coeffs[0] = Rational::zero();
        f = EGFSeries::new(10, coeffs).unwrap();
        prop_assert_eq!(f.exp().unwrap().log().unwrap(), f);
    }

    #[test]
    fn log_exp_round_trip(mut g in arb_series(10)) {
        let mut coeffs = g.coeffs().to_vec();
        coeffs[0] = Rational::one();
        g = EGFSeries::new(10, coeffs).unwrap();
        prop_assert_eq!(g.log().unwrap().exp().unwrap(), g);
    }

    #[test]
    fn series_mul_commutative_associative(
        f in arb_series(6),
        g in arb_series(6),
        h in arb_series(6),
    ) {
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(
            f.mul(&g).unwrap().mul(&h).unwrap(),
            f.mul(&g.mul(&h).unwrap()).unwrap()
        );
    }

    #[test]
    fn diff_operator_is_translation(v in prop::collection::vec(arb_rational(), 8)) {
        // L = (1,0,...) substitutes y := x
        let order = 8;
        let mut v_coeffs = vec![Rational::zero()];
        v_coeffs.extend(v.iter().cloned());
        let v_series = EGFSeries::new(order, v_coeffs).unwrap();
        let expected = v_series.exp().unwrap();

        let g = BivariatePoly::from_y_series(expected.coeffs(), order).unwrap();
        let mut weights = vec![Rational::zero(); order];
        weights[0] = Rational::one();
        prop_assert_eq!(apply_diff_operator(&weights, &g).unwrap(), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_is_shuffle_invariant(
        m in arb_matrix(),
        row_seed in any::<u64>(),
        col_seed in any::<u64>(),
    ) {
        let canon = canonicalize(m.clone()).unwrap();

        // deterministic pseudo-shuffle driven by the seeds
        let rows = m.len();
        let cols = m[0].len();
        let mut row_order: Vec<usize> = (0..rows).collect();
        let mut col_order: Vec<usize> = (0..cols).collect();
        for i in (1..rows).rev() {
            row_order.swap(i, (row_seed as usize).wrapping_mul(i + 7) % (i + 1));
        }
        for i in (1..cols).rev() {
            col_order.swap(i, (col_seed as usize).wrapping_mul(i + 3) % (i + 1));
        }
        let shuffled: Vec<Vec<usize>> = row_order
            .iter()
            .map(|&r| col_order.iter().map(|&c| m[r][c]).collect())
            .collect();

        prop_assert_eq!(canonicalize(shuffled).unwrap(), canon.clone());
        // idempotence
        prop_assert_eq!(canonicalize(canon.mult().to_vec()).unwrap(), canon);
    }

    #[test]
    fn normal_order_splits_as_normal_mul(u in arb_word(4), v in arb_word(4)) {
        let mut joined = u.letters().to_vec();
        joined.extend_from_slice(v.letters());
        let direct = normal_order(&BosonWord::new(joined));
        let split = normal_mul(&normal_order(&u), &normal_order(&v));
        prop_assert_eq!(direct, split);
    }

    #[test]
    fn normal_mul_associative(
        f in arb_normal_form(),
        g in arb_normal_form(),
        h in arb_normal_form(),
    ) {
        prop_assert_eq!(
            normal_mul(&normal_mul(&f, &g), &h),
            normal_mul(&f, &normal_mul(&g, &h))
        );
    }

    #[test]
    fn forget_idempotent_and_sum_preserving(words in prop::collection::vec((arb_word(4), -4i64..5), 1..=3)) {
        let terms: Vec<(BosonWord, BigInt)> = words
            .into_iter()
            .map(|(w, c)| (w, BigInt::from(c)))
            .collect();
        let input_sum: BigInt = terms.iter().map(|(_, c)| c.clone()).sum();
        let once = forget_normal_order(&terms);
        prop_assert_eq!(once.coefficient_sum(), input_sum);
        let twice = forget_normal_order(&once.to_word_terms());
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn moments_cumulants_round_trip(tail in prop::collection::vec(arb_zpoly(), 6)) {
        let mut w = vec![ZPolynomial::one()];
        w.extend(tail);
        let v = moments_to_cumulants(&w).unwrap();
        prop_assert_eq!(cumulants_to_moments(&v), w);
    }

    #[test]
    fn word_moment_cumulants_round_trip(w in arb_word(3)) {
        let moments = word_moments(&w, 5).unwrap();
        let v = moments_to_cumulants(&moments).unwrap();
        prop_assert_eq!(cumulants_to_moments(&v), moments);
    }

    #[test]
    fn antipode_involution_and_counit(h in arb_bell_element()) {
        prop_assert_eq!(antipode(&antipode(&h)), h.clone());
        prop_assert_eq!(counit(&antipode(&h)), counit(&h));
    }

    #[test]
    fn coproduct_respects_products(a in arb_bell_element(), b in arb_bell_element()) {
        prop_assert_eq!(
            coproduct(&product(&a, &b)),
            coproduct(&a).mul(&coproduct(&b))
        );
        prop_assert_eq!(counit(&product(&a, &b)), &counit(&a) * &counit(&b));
    }

    #[test]
    fn configurations_share_ground_census(n in 1usize..=4) {
        // every pair of partitions collapses to a diagram of matching grade
        let parts = enumerate_set_partitions(n).unwrap();
        for pw in &parts {
            for pb in &parts {
                let c = LabelledConfiguration::new(pw.clone(), pb.clone()).unwrap();
                let d = configuration_to_diagram(&c);
                prop_assert_eq!(d.grade(), n);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn dual_evaluation_agrees(
        l in prop::collection::vec(arb_rational(), 4),
        v in prop::collection::vec(arb_rational(), 4),
    ) {
        prop_assert_eq!(
            pfi_by_diagrams(4, &l, &v).unwrap(),
            pfi_by_series(4, &l, &v).unwrap()
        );
    }

    #[test]
    fn antipode_convolution_random_elements(h in arb_bell_element()) {
        // m(S⊗id)Δ(h) == ε(h)·e
        let delta = coproduct(&h);
        let mut total = HopfElement::zero();
        for ((m1, m2), c) in delta.terms() {
            let s = antipode(&HopfElement::from_monomial(m1.clone()));
            total = total.add(&s.mul(&HopfElement::from_monomial(m2.clone())).scale(c));
        }
        let expected = HopfElement::unit().scale(&counit(&h));
        prop_assert_eq!(total, expected);
    }

    #[test]
    fn bell_axiom_checker_never_fails(grade in 0usize..=4) {
        let report = hopfdiag::hopf::check_hopf_axioms(&bell_generators(grade), grade);
        prop_assert!(report.all_passed);
    }
}

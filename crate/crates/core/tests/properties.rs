use num_bigint::BigInt;
use proptest::prelude::*;

use nstep_core::construction::{check_prop1, extend_columns, minor_by_deletion, MinorSelection};
use nstep_core::identities::{generalized_docagne, ratio_invariance};
use nstep_core::{IntMatrix, NStepSequence, SeqConvention, Sign};

fn matrix(rows: usize, cols: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-bound..=bound, rows * cols).prop_map(move |v| {
        IntMatrix::new(rows, cols, v.into_iter().map(BigInt::from).collect()).unwrap()
    })
}

fn square(max_order: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_order).prop_flat_map(move |n| matrix(n, n, bound))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bareiss_matches_laplace(m in square(7, 50)) {
        prop_assert_eq!(m.det_bareiss().unwrap(), m.det_laplace().unwrap());
    }

    #[test]
    fn transpose_and_reversal_determinants(m in square(8, 20)) {
        let d = m.det_bareiss().unwrap();
        prop_assert_eq!(m.transpose().det_bareiss().unwrap(), d.clone());
        prop_assert_eq!(m.transpose().transpose(), m.clone());
        let c = m.cols() as u64;
        prop_assert_eq!(m.reverse_columns().det_bareiss().unwrap(), Sign::pow(c / 2).apply(d));
    }

    #[test]
    fn doubling_a_column_doubles_det(m in square(6, 30), k in 0usize..6) {
        let k = 1 + k % m.cols();
        let doubled = m.scale_column(k, &BigInt::from(2)).unwrap();
        prop_assert_eq!(doubled.det_bareiss().unwrap(), 2 * m.det_bareiss().unwrap());
    }

    #[test]
    fn literal_round_trip(m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| matrix(r, c, 1000))) {
        prop_assert_eq!(m.to_string().parse::<IntMatrix>().unwrap(), m);
    }

    #[test]
    fn prop1_holds_on_random_matrices(
        (a, r, pick) in (2usize..=4, 1usize..=4)
            .prop_flat_map(|(n, r)| (matrix(n, n, 9), Just(r), any::<prop::sample::Index>()))
    ) {
        let n = a.rows();
        let all = MinorSelection::all(n, r).unwrap();
        let sel = &all[pick.index(all.len())];
        let rec = check_prop1(&a, r, sel.deleted()).unwrap();
        prop_assert!(rec.pass, "{:?}", rec);
        let aext = extend_columns(&a, r).unwrap();
        prop_assert_eq!(
            minor_by_deletion(&aext, sel.deleted()).unwrap(),
            aext.select_columns(sel.kept()).unwrap()
        );
    }

    #[test]
    fn generalized_docagne_on_random_matrices(a in (2usize..=4).prop_flat_map(|n| matrix(n, n, 9)), r in 1usize..=6) {
        prop_assert!(generalized_docagne(&a, r).unwrap().pass);
    }

    #[test]
    fn ratio_is_independent_of_matrix(
        (a, b) in (2usize..=3).prop_flat_map(|n| (matrix(n, n, 9), matrix(n, n, 9))),
        r in 1usize..=4,
    ) {
        prop_assume!(a.det_bareiss().unwrap() != BigInt::from(0));
        prop_assume!(b.det_bareiss().unwrap() != BigInt::from(0));
        prop_assert!(ratio_invariance(&a, &b, r).unwrap().pass);
    }

    #[test]
    fn recurrence_residual_vanishes(
        seeds in (2usize..=6).prop_flat_map(|n| prop::collection::vec(-100i64..=100, n)),
        lo in -40i64..0,
    ) {
        let n = seeds.len() as i64;
        let seq = NStepSequence::new(
            seeds.len(),
            SeqConvention::Custom(seeds.into_iter().map(BigInt::from).collect()),
        ).unwrap();
        let w = seq.terms_range(lo, 60).unwrap();
        for k in (lo + n)..=60 {
            let i = (k - lo) as usize;
            let sum: BigInt = w[i - n as usize..i].iter().sum();
            prop_assert_eq!(&w[i], &sum, "k = {}", k);
        }
    }

    #[test]
    fn fast_term_matches_iteration(n in 2usize..=6, k in 1i64..3000, paper in any::<bool>()) {
        let conv = if paper { SeqConvention::PaperPowers } else { SeqConvention::Classic };
        let seq = NStepSequence::new(n, conv).unwrap();
        prop_assert_eq!(seq.term_fast(k).unwrap(), seq.term(k));
    }
}

#[test]
fn term_fast_large_indices() {
    for conv in [SeqConvention::Classic, SeqConvention::PaperPowers] {
        for n in 2..=6 {
            let seq = NStepSequence::new(n, conv.clone()).unwrap();
            for k in [10_000, 100_000] {
                assert_eq!(seq.term_fast(k).unwrap(), seq.term(k), "{conv} n={n} k={k}");
            }
        }
    }
}

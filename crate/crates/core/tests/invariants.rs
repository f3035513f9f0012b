use std::collections::BTreeMap;

use enhanced_nilpotent::exactlinalg::{
    enhanced_centralizer_dim, jordan_basis, jordan_matrix, jordan_type, parse_matrix_json,
    verify_jordan_data, AnyMatrix, Field, Matrix, PrimeField, Rationals,
};
use enhanced_nilpotent::orbitcalc::{
    canonical_representative, classify, classify_invariant, flag_block_sizes, EnhancedElement,
};
use enhanced_nilpotent::partitions::{
    dominance_leq, semismall_check, EnhancedPartition, Partition,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn enhanced(max_n: usize) -> impl Strategy<Value = EnhancedPartition> {
    (1..=max_n).prop_flat_map(|n| {
        let all = EnhancedPartition::all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

/// `D · L · U` with unit triangular `L`, `U` and invertible diagonal `D`.
fn invertible<F: Field>(f: &F, n: usize, entries: &[i64], scale: &[i64]) -> Matrix<F> {
    let mut l = Matrix::identity(f, n);
    let mut u = Matrix::identity(f, n);
    let mut d = Matrix::identity(f, n);
    let mut it = entries.iter().cycle();
    for i in 0..n {
        for j in 0..i {
            l.set(i, j, f.from_i64(*it.next().unwrap()));
            u.set(j, i, f.from_i64(*it.next().unwrap()));
        }
        d.set(i, i, f.from_i64(scale[i % scale.len()]));
    }
    d.mul(&l).unwrap().mul(&u).unwrap()
}

fn conjugate_pair<F: Field>(
    f: &F,
    lq: &EnhancedPartition,
    entries: &[i64],
    scale: &[i64],
    shift: &[i64],
) -> EnhancedElement<F> {
    let n = lq.n();
    let g = invertible(f, n, entries, scale);
    let u: Vec<F::Elem> = (0..n).map(|i| f.from_i64(shift[i % shift.len()])).collect();
    canonical_representative(f, lq)
        .unwrap()
        .act(&g, &u)
        .unwrap()
}

proptest! {
    #[test]
    fn transpose_is_involution(lq in enhanced(9)) {
        let lambda = lq.lambda();
        prop_assert_eq!(&lambda.transpose().transpose(), lambda);
        prop_assert_eq!(lambda.transpose().size(), lambda.size());
    }

    #[test]
    fn dominance_reverses_under_transpose(
        (x, y) in (1usize..=8).prop_flat_map(|n| {
            let all = Partition::all(n);
            let m = all.len();
            (0..m, 0..m).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
        })
    ) {
        let (x, y) = (&x, &y);
        prop_assert_eq!(
            dominance_leq(x, y).unwrap(),
            dominance_leq(&y.transpose(), &x.transpose()).unwrap()
        );
    }

    #[test]
    fn grammar_round_trips(lq in enhanced(9)) {
        let text = lq.to_string();
        prop_assert_eq!(text.parse::<EnhancedPartition>().unwrap(), lq.clone());
        let spaced = text.replace(',', " , ").replace('[', " [ ");
        prop_assert_eq!(spaced.parse::<EnhancedPartition>().unwrap(), lq);
    }

    #[test]
    fn enhanced_numbers_are_monotone(lq in enhanced(9)) {
        let wp = lq.enhanced_numbers();
        prop_assert!(wp.windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(wp[lq.n()], lq.n());
    }

    #[test]
    fn classification_survives_conjugation_over_q(
        lq in enhanced(4),
        entries in prop::collection::vec(-3i64..=3, 6),
        scale in prop::collection::vec(prop::sample::select(vec![-2i64, -1, 1, 3]), 4),
        shift in prop::collection::vec(-3i64..=3, 4),
    ) {
        let e = conjugate_pair(&Rationals, &lq, &entries, &scale, &shift);
        prop_assert_eq!(classify(&e).unwrap(), lq.clone());
        prop_assert_eq!(classify_invariant(&e).unwrap(), lq);
    }

    #[test]
    fn classification_survives_conjugation_over_f3(
        lq in enhanced(4),
        entries in prop::collection::vec(0i64..3, 6),
        scale in prop::collection::vec(1i64..3, 4),
        shift in prop::collection::vec(0i64..3, 4),
    ) {
        let f = PrimeField::new(3).unwrap();
        let e = conjugate_pair(&f, &lq, &entries, &scale, &shift);
        prop_assert_eq!(classify(&e).unwrap(), lq.clone());
        prop_assert_eq!(classify_invariant(&e).unwrap(), lq);
    }

    #[test]
    fn jordan_basis_conjugates_to_normal_form(
        lq in enhanced(5),
        entries in prop::collection::vec(-2i64..=2, 10),
    ) {
        let q = Rationals;
        let g = invertible(&q, lq.n(), &entries, &[1, -1, 2]);
        let x = g.mul(&jordan_matrix(&q, lq.lambda())).unwrap().mul(&g.inverse().unwrap()).unwrap();
        let data = jordan_basis(&x).unwrap();
        prop_assert_eq!(&data.lambda, lq.lambda());
        prop_assert!(verify_jordan_data(&x, &data).unwrap());
        prop_assert_eq!(&jordan_type(&x).unwrap(), lq.lambda());
    }

    #[test]
    fn matrix_json_round_trips(
        rows in 1usize..4,
        nums in prop::collection::vec(-50i64..50, 9),
        dens in prop::collection::vec(1i64..7, 9),
    ) {
        let cells: Vec<String> = (0..rows * rows)
            .map(|k| format!("\"{}/{}\"", nums[k], dens[k]))
            .collect();
        let text = format!(
            "{{\"field\":\"Q\",\"entries\":[{}]}}",
            cells.chunks(rows).map(|r| format!("[{}]", r.join(","))).collect::<Vec<_>>().join(",")
        );
        let m = parse_matrix_json(&text).unwrap();
        let canonical = m.to_json();
        prop_assert_eq!(parse_matrix_json(&canonical).unwrap(), m.clone());
        prop_assert_eq!(parse_matrix_json(&canonical).unwrap().to_json(), canonical);
        prop_assert!(matches!(m, AnyMatrix::Q(_)));
    }
}

#[test]
fn orbit_dimension_matches_centralizer() {
    for n in 1..=5 {
        for lq in EnhancedPartition::all(n) {
            let e = canonical_representative(&Rationals, &lq).unwrap();
            let c = enhanced_centralizer_dim(e.x(), e.w()).unwrap();
            assert_eq!(n * n + n - c, lq.dim_enhanced_orbit(), "{lq}");
        }
    }
}

#[test]
fn flag_blocks_are_transpose_parts() {
    for n in 1..=8 {
        for lq in EnhancedPartition::all(n) {
            let mut blocks = flag_block_sizes(&lq);
            blocks.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(blocks, lq.lambda().transpose().parts(), "{lq}");
        }
    }
}

#[test]
fn semismall_and_hand_values() {
    for n in 1..=10 {
        assert!(semismall_check(n), "n={n}");
        let factorial: BigUint = (1..=n as u32).map(BigUint::from).product();
        assert_eq!(Partition::ones(n).cohomology_total_dim(), factorial);
        assert_eq!(
            Partition::row(n).cohomology_total_dim(),
            BigUint::from(1u32)
        );
        assert_eq!(Partition::row(n).fiber_dim(), 0);
        assert_eq!(Partition::ones(n).fiber_dim(), n * (n - 1) / 2);
    }
}

#[test]
fn orbit_counts_follow_group_counts() {
    let counts: BTreeMap<usize, usize> = (1..=6)
        .map(|n| (n, EnhancedPartition::all(n).len()))
        .collect();
    for (&n, &c) in &counts {
        let expected: usize = Partition::all(n).iter().map(|l| l.groups().len() + 1).sum();
        assert_eq!(c, expected);
    }
    assert_eq!(counts[&2], 4);
    assert_eq!(counts[&3], 7);
    assert_eq!(counts[&4], 12);
}

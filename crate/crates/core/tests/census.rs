use enhanced_nilpotent::exactlinalg::{Matrix, PrimeField, Rationals};
use enhanced_nilpotent::ffcensus::{orbit_census, pack_state, unpack_state};
use enhanced_nilpotent::orbitcalc::{canonical_representative, classify, EnhancedElement};
use enhanced_nilpotent::partitions::EnhancedPartition;
use num_traits::Zero;

fn census_csv_with_threads(n: usize, p: u64, threads: usize) -> String {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
        .install(|| orbit_census(n, p).unwrap().to_csv().unwrap())
}

#[test]
fn census_is_deterministic_across_workers() {
    let one = census_csv_with_threads(3, 2, 1);
    assert_eq!(one, census_csv_with_threads(3, 2, 4));
    assert_eq!(one, census_csv_with_threads(3, 2, 1));
}

#[test]
fn representatives_classify_to_their_rows() {
    let report = orbit_census(3, 3).unwrap();
    assert!(report.is_consistent(), "{}", report.to_table());
    for o in &report.orbits {
        let e = unpack_state(3, 3, o.representative).unwrap();
        assert_eq!(classify(&e).unwrap(), o.kind);
        assert_eq!(pack_state(&e).unwrap(), o.representative);
    }
}

#[test]
fn prime_field_and_rational_classification_agree() {
    // Canonical representatives have entries in {0, 1}, so they lift verbatim.
    let f = PrimeField::new(2).unwrap();
    for n in 1..=5 {
        for lq in EnhancedPartition::all(n) {
            let over_q = canonical_representative(&Rationals, &lq).unwrap();
            let rows: Vec<Vec<u64>> = over_q
                .x()
                .to_rows()
                .iter()
                .map(|r| r.iter().map(|v| u64::from(!v.is_zero())).collect())
                .collect();
            let w: Vec<u64> = over_q.w().iter().map(|v| u64::from(!v.is_zero())).collect();
            let over_f = EnhancedElement::new(Matrix::from_rows(&f, rows).unwrap(), w).unwrap();
            assert_eq!(classify(&over_f).unwrap(), classify(&over_q).unwrap());
        }
    }
}

mod common;

use common::{antichain_oracle, as_family, class_count, Family};
use matroidlab::Matroid;
use matroidlab_harness::{count_by_rank, count_isomorphism_classes, enumerate_matroids};

fn enumerated(n: usize) -> Vec<Family> {
    enumerate_matroids(n, None)
        .unwrap()
        .iter()
        .map(as_family)
        .collect()
}

#[test]
fn enumeration_matches_all_antichains_oracle() {
    for n in 1..=5 {
        let mut got = enumerated(n);
        let mut want = antichain_oracle(n);
        got.sort();
        want.sort();
        assert_eq!(got, want, "n = {n}");
    }
}

#[test]
fn labelled_counts() {
    let counts: Vec<usize> = (1..=5).map(|n| antichain_oracle(n).len()).collect();
    assert_eq!(counts, vec![2, 5, 16, 68, 406]);
    for n in 1..=5 {
        assert_eq!(
            count_by_rank(n).unwrap().iter().sum::<usize>(),
            counts[n - 1]
        );
    }
}

#[test]
fn isomorphism_class_counts_match_canonical_forms() {
    for (n, expected) in (1..=5).zip([2, 4, 8, 17, 38]) {
        let all = enumerate_matroids(n, None).unwrap();
        let refs: Vec<&Matroid> = all.iter().collect();
        assert_eq!(
            class_count(n, &antichain_oracle(n)),
            expected,
            "oracle n = {n}"
        );
        assert_eq!(
            count_isomorphism_classes(&refs),
            expected,
            "library n = {n}"
        );
    }
}

#[test]
fn population_is_closed_under_duality() {
    for n in 1..=5 {
        let all = enumerate_matroids(n, None).unwrap();
        for m in &all {
            assert!(all
                .binary_search_by(|x| (x.rank(), x).cmp(&(n - m.rank(), &m.dual())))
                .is_ok());
        }
    }
}

#[test]
fn rank_counts_are_symmetric() {
    for n in 1..=5 {
        let counts = count_by_rank(n).unwrap();
        let mut reversed = counts.clone();
        reversed.reverse();
        assert_eq!(counts, reversed);
        for (r, c) in counts.iter().enumerate() {
            assert_eq!(enumerate_matroids(n, Some(r)).unwrap().len(), *c);
        }
    }
}

#[test]
#[ignore = "slow; run with --ignored"]
fn six_element_ground_set() {
    let all = enumerate_matroids(6, None).unwrap();
    assert_eq!(all.len(), 3807);
    let refs: Vec<&Matroid> = all.iter().collect();
    assert_eq!(count_isomorphism_classes(&refs), 98);
}

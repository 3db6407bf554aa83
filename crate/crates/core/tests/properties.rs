use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;
use shadows::classifier::{classify, entries_can_be_positive, witness_is_valid, FilterVerdict};
use shadows::enumerate::{is_admissible_row, is_singular};
use shadows::{
    canonical_min, enumerate_basic_shades, EnumerationOptions, Permutation, Quiver, SkewIntMatrix,
};

fn shades(n: usize) -> &'static [SkewIntMatrix] {
    static CACHE: OnceLock<Vec<Vec<SkewIntMatrix>>> = OnceLock::new();
    &CACHE.get_or_init(|| {
        (0..=5)
            .map(|n| {
                if n == 0 {
                    Vec::new()
                } else {
                    enumerate_basic_shades(&EnumerationOptions::new(n)).unwrap()
                }
            })
            .collect()
    })[n]
}

#[test]
fn emitted_matrices_are_basic_shades() {
    for n in 1..=5 {
        for a in shades(n) {
            for i in 0..n {
                assert_eq!(is_admissible_row(a.row(i)), Ok(true));
                assert_eq!(a.get(i, i), 0);
                for j in 0..n {
                    assert_eq!(a.get(i, j), -a.get(j, i));
                }
            }
            assert!(is_singular(a));
            assert_eq!(canonical_min(a), *a);
            assert!(*a <= canonical_min(&a.opposite()));
        }
    }
}

#[test]
fn emission_is_strictly_increasing() {
    for n in 1..=5 {
        assert!(shades(n).windows(2).all(|w| w[0] < w[1]), "n = {n}");
        assert!(shades(n).last().unwrap().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn every_relabelling_is_covered(
        n in 3usize..=5,
        pick in any::<prop::sample::Index>(),
        shuffle in Just((0..5).collect::<Vec<usize>>()).prop_shuffle(),
        negate in any::<bool>(),
    ) {
        let list = shades(n);
        let set: BTreeSet<_> = list.iter().copied().collect();
        let a = list[pick.index(list.len())];
        let images: Vec<usize> = shuffle.into_iter().filter(|&k| k < n).collect();
        let sigma = Permutation::new(images).unwrap();
        let base = if negate { a.opposite() } else { a };
        let b = base.permute(&sigma).unwrap();
        prop_assert!(
            set.contains(&canonical_min(&b)) || set.contains(&canonical_min(&b.opposite()))
        );
    }
}

#[test]
fn quiver_round_trip() {
    for n in 1..=5 {
        for a in shades(n) {
            let q = Quiver::of(a);
            assert!(q.is_minimal());
            assert_eq!(q.to_shade_matrix().unwrap(), *a);
            assert_eq!(Quiver::of(&a.opposite()), q.opposite());
        }
    }
}

#[test]
fn worker_count_does_not_change_output() {
    for n in 3..=5 {
        let base = shades(n);
        for workers in [2, 8] {
            let par = enumerate_basic_shades(&EnumerationOptions::new(n).workers(workers)).unwrap();
            assert_eq!(par, base, "n = {n}, workers = {workers}");
        }
    }
}

#[test]
fn pruning_and_early_stop_do_not_change_output() {
    for n in 1..=5 {
        let base = shades(n);
        let pruned = enumerate_basic_shades(&EnumerationOptions::new(n).pruning(true)).unwrap();
        assert_eq!(pruned, base, "pruned, n = {n}");
        for workers in [1, 3] {
            let stopped = enumerate_basic_shades(
                &EnumerationOptions::new(n)
                    .stop_at_zero(true)
                    .workers(workers),
            )
            .unwrap();
            let zero_at = base.iter().position(SkewIntMatrix::is_zero).unwrap();
            assert_eq!(stopped, &base[..=zero_at], "stop at zero, n = {n}");
        }
    }
}

#[test]
fn filters_agree_with_feasibility() {
    for n in 1..=5 {
        for a in shades(n) {
            let rec = classify(a);
            assert_eq!(rec.filter.is_pass(), rec.is_shadow, "{a:?}");
            assert!(rec.filter.certifies(&rec.x), "{a:?}: {:?}", rec.filter);
            // a firing cheap rule is a special case of a vanishing combination
            if matches!(
                rec.filter,
                FilterVerdict::ZeroEntry { .. } | FilterVerdict::OppositePair { .. }
            ) {
                assert!(!entries_can_be_positive(&rec.x));
            }
            match &rec.witness {
                Some(w) => assert!(witness_is_valid(a, w), "{a:?}"),
                None => assert!(!rec.is_shadow),
            }
            assert!(!rec.is_essential || rec.is_shadow);
            assert_eq!(rec.self_opposite, canonical_min(&a.opposite()) == *a);
        }
    }
}

#[test]
fn counts_by_size() {
    let expected = [(1, 1, 1), (1, 1, 1), (5, 5, 4), (12, 12, 7), (138, 65, 26)];
    for (n, &(shade_count, shadow_count, essential_count)) in (1..=5).zip(&expected) {
        let recs: Vec<_> = shades(n).iter().map(classify).collect();
        assert_eq!(recs.len(), shade_count);
        assert_eq!(recs.iter().filter(|r| r.is_shadow).count(), shadow_count);
        assert_eq!(
            recs.iter().filter(|r| r.is_essential).count(),
            essential_count
        );
    }
}

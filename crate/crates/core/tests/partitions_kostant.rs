use std::collections::HashMap;

use lrkostka::{
    distinct_rearrangements, enumerate_dominated, is_dominated, kostant_partition, partitions_of,
    sort_with_sign, stabilizer_order, Partition, WeightVector,
};
use proptest::prelude::*;

fn all_partitions_upto(m: i64) -> Vec<Partition> {
    partitions_of(m, m.max(1) as usize)
}

#[test]
fn dominance_is_a_partial_order() {
    for m in 0..=8 {
        let ps = all_partitions_upto(m);
        for a in &ps {
            assert!(is_dominated(a, a));
            for b in &ps {
                if is_dominated(a, b) && is_dominated(b, a) {
                    assert_eq!(a, b);
                }
                for c in &ps {
                    if is_dominated(a, b) && is_dominated(b, c) {
                        assert!(is_dominated(a, c), "{a} {b} {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn dominance_needs_equal_size() {
    let a: Partition = "2,1".parse().unwrap();
    let b: Partition = "3,1".parse().unwrap();
    assert!(!is_dominated(&a, &b));
}

#[test]
fn enumerate_dominated_is_exact() {
    for m in 0..=10 {
        for n in 1..=m.max(1) as usize {
            let everything = partitions_of(m, n);
            for mu in &everything {
                let listed = enumerate_dominated(mu, n).unwrap();
                let filtered: Vec<_> = everything
                    .iter()
                    .filter(|p| is_dominated(p, mu))
                    .cloned()
                    .collect();
                // both are in descending lexicographic order
                assert_eq!(listed, filtered, "mu = {mu}, n = {n}");
            }
        }
    }
}

#[test]
fn rearrangements_times_stabilizer() {
    for n in 0..=6 {
        let fact: u64 = (1..=n as u64).product();
        for m in 0..=8 {
            for xi in partitions_of(m, n) {
                let r = distinct_rearrangements(&xi);
                assert_eq!(r.len() as u64 * stabilizer_order(&xi), fact, "{xi}");
                let mut dedup = r.clone();
                dedup.sort();
                dedup.dedup();
                assert_eq!(dedup.len(), r.len());
            }
        }
    }
}

proptest! {
    #[test]
    fn swapping_two_entries_flips_the_sign(
        v in prop::collection::btree_set(-20i64..20, 2..7)
            .prop_flat_map(|s| Just(s.into_iter().collect::<Vec<_>>()).prop_shuffle()),
        i in 0usize..6,
        j in 0usize..6,
    ) {
        let (i, j) = (i % v.len(), j % v.len());
        prop_assume!(i != j);
        let a = sort_with_sign(&WeightVector::from(v.clone()));
        let mut w = v.clone();
        w.swap(i, j);
        let b = sort_with_sign(&WeightVector::from(w));
        prop_assert!(!a.degenerate && !b.degenerate);
        prop_assert_eq!(a.sign, -b.sign);
        prop_assert_eq!(a.sorted, b.sorted);
    }

    #[test]
    fn sorted_input_has_positive_sign(v in prop::collection::btree_set(-20i64..20, 0..7)) {
        let desc: Vec<i64> = v.into_iter().rev().collect();
        let s = sort_with_sign(&WeightVector::from(desc.clone()));
        prop_assert_eq!(s.sign, 1);
        prop_assert_eq!(s.sorted.entries(), &desc[..]);
    }

    #[test]
    fn kostant_vanishes_off_the_cone(v in prop::collection::vec(-5i64..=5, 1..5)) {
        let p = kostant_partition(&WeightVector::from(v.clone())).unwrap();
        if v.iter().sum::<i64>() != 0 {
            prop_assert_eq!(p, 0);
        }
        let mut prefix = 0;
        for &x in &v {
            prefix += x;
            if prefix < 0 {
                prop_assert_eq!(p, 0);
            }
        }
    }
}

/// Coefficients of `∏_{i<j} Σ_{c=0}^{bound} e^{c(e_i - e_j)}`, computed by
/// repeated convolution.
fn generating_function(n: usize, bound: i64) -> HashMap<Vec<i64>, u64> {
    let mut series: HashMap<Vec<i64>, u64> = HashMap::from([(vec![0; n], 1)]);
    for i in 0..n {
        for j in i + 1..n {
            let mut next = HashMap::new();
            for (v, &count) in &series {
                for c in 0..=bound {
                    let mut w = v.clone();
                    w[i] += c;
                    w[j] -= c;
                    *next.entry(w).or_insert(0) += count;
                }
            }
            series = next;
        }
    }
    series
}

#[test]
fn kostant_matches_generating_function() {
    // For |v_i| <= 4 and n <= 4 every prefix sum is at most 8, and no root
    // coefficient can exceed a prefix sum it spans.
    for n in 1..=4usize {
        let series = generating_function(n, 8);
        let mut v = vec![-4i64; n];
        loop {
            let expected = series.get(&v).copied().unwrap_or(0);
            assert_eq!(
                kostant_partition(&WeightVector::from(v.clone())).unwrap(),
                expected,
                "{v:?}"
            );
            let mut k = 0;
            while k < n && v[k] == 4 {
                v[k] = -4;
                k += 1;
            }
            if k == n {
                break;
            }
            v[k] += 1;
        }
    }
}

#[test]
fn kostant_rank_two_line() {
    let series = generating_function(3, 10);
    for k in 0..=10i64 {
        let v = vec![k, 0, -k];
        assert_eq!(series[&v], (k + 1) as u64);
        assert_eq!(
            kostant_partition(&WeightVector::from(v)).unwrap(),
            (k + 1) as u64
        );
    }
}

//! Kostant partition function for the root system of type `A_{n-1}`.
//!
//! `kostant_partition(v)` counts the ways to write `v` as a non-negative
//! integer combination of the positive roots `e_i - e_j` with `i < j`.
//!
//! Roots are taken in lexicographic order on `(i, j)`. All roots leaving
//! coordinate `i` form one block; once block `i` is processed, coordinate `i`
//! is zero. The memo key is the unprocessed tail of the vector together with
//! the index of the first root of the current block, so earlier coordinates
//! (all zero) are not stored.
//!
//! Arguments that arise from Steinberg's formula satisfy
//! `|v_i| <= |λ| + |μ| + 2(n - 1)`.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::partitions::WeightVector;

type Key = (usize, Vec<i64>);

/// Memo storage for the recursion.
trait Memo {
    fn lookup(&mut self, key: &Key) -> Option<u64>;
    fn store(&mut self, key: Key, value: u64);
}

impl Memo for HashMap<Key, u64> {
    fn lookup(&mut self, key: &Key) -> Option<u64> {
        self.get(key).copied()
    }

    fn store(&mut self, key: Key, value: u64) {
        self.insert(key, value);
    }
}

/// A cache that can be shared across calls and threads.
///
/// Entries are written once and never change: two writers racing on the same
/// key both store the true count.
#[derive(Debug, Default)]
pub struct KostantCache {
    map: RwLock<HashMap<Key, u64>>,
}

impl KostantCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap_or_else(|e| e.into_inner()).len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Memo for &KostantCache {
    fn lookup(&mut self, key: &Key) -> Option<u64> {
        self.map
            .read()
            .unwrap_or_else(|e| e.into_inner())
            .get(key)
            .copied()
    }

    fn store(&mut self, key: Key, value: u64) {
        self.map
            .write()
            .unwrap_or_else(|e| e.into_inner())
            .entry(key)
            .or_insert(value);
    }
}

/// Number of ways to write `v` as a non-negative integer combination of the
/// positive roots `e_i - e_j`, `i < j`. Zero when no such decomposition
/// exists; one for the zero vector (including the empty vector).
///
/// ```
/// use lrkostka::kostant_partition;
/// assert_eq!(kostant_partition(&vec![2, 0, -2].into()).unwrap(), 3);
/// ```
pub fn kostant_partition(v: &WeightVector) -> Result<u64> {
    let mut memo = HashMap::new();
    count(v.entries(), &mut memo)
}

/// As [`kostant_partition`], consulting and filling a shared cache.
pub fn kostant_partition_with(v: &WeightVector, cache: &KostantCache) -> Result<u64> {
    let mut memo = cache;
    count(v.entries(), &mut memo)
}

pub(crate) fn kostant_partition_local(v: &[i64], memo: &mut HashMap<Key, u64>) -> Result<u64> {
    count(v, memo)
}

fn count<M: Memo>(v: &[i64], memo: &mut M) -> Result<u64> {
    if v.iter().sum::<i64>() != 0 {
        return Ok(0);
    }
    block(0, v.to_vec(), memo)
}

/// Ways to finish, given that every coordinate before `start` is already zero
/// and `tail` holds coordinates `start..`.
fn block<M: Memo>(start: usize, tail: Vec<i64>, memo: &mut M) -> Result<u64> {
    // positive roots have non-negative prefix sums, and so does any sum of them
    let mut prefix = 0;
    for &x in &tail {
        prefix += x;
        if prefix < 0 {
            return Ok(0);
        }
    }
    if tail.iter().all(|&x| x == 0) {
        return Ok(1);
    }
    if tail.len() < 2 {
        return Ok(0);
    }
    let key = (start, tail);
    if let Some(hit) = memo.lookup(&key) {
        return Ok(hit);
    }
    let (_, tail) = &key;
    let demand = tail[0];
    let mut rest = tail[1..].to_vec();
    let total = distribute(start, demand, 0, &mut rest, memo)?;
    memo.store(key, total);
    Ok(total)
}

/// Splits `remaining` units of coordinate `start` over the roots
/// `e_start - e_j`, `j >= start + 1 + offset`.
fn distribute<M: Memo>(
    start: usize,
    remaining: i64,
    offset: usize,
    rest: &mut Vec<i64>,
    memo: &mut M,
) -> Result<u64> {
    if offset + 1 == rest.len() {
        // last root of the block takes everything left
        rest[offset] += remaining;
        let r = block(start + 1, rest.clone(), memo);
        rest[offset] -= remaining;
        return r;
    }
    let mut total = 0u64;
    for c in 0..=remaining {
        rest[offset] += c;
        let r = distribute(start, remaining - c, offset + 1, rest, memo);
        rest[offset] -= c;
        total = total
            .checked_add(r?)
            .ok_or(Error::Overflow("Kostant partition function"))?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive search over root coefficients bounded by `bound`.
    fn brute(v: &[i64], bound: i64) -> u64 {
        let n = v.len();
        let roots: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        fn rec(roots: &[(usize, usize)], acc: &mut Vec<i64>, v: &[i64], bound: i64) -> u64 {
            match roots.split_first() {
                None => (acc.as_slice() == v) as u64,
                Some((&(i, j), rest)) => {
                    let mut total = 0;
                    for c in 0..=bound {
                        acc[i] += c;
                        acc[j] -= c;
                        total += rec(rest, acc, v, bound);
                        acc[i] -= c;
                        acc[j] += c;
                    }
                    total
                }
            }
        }
        rec(&roots, &mut vec![0; n], v, bound)
    }

    fn kp(v: &[i64]) -> u64 {
        kostant_partition(&v.into()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(kp(&[0, 0, 0]), 1);
        assert_eq!(kp(&[1, 0, -1]), 2);
        assert_eq!(kp(&[2, 0, -2]), 3);
        for k in 0..8 {
            assert_eq!(kp(&[k, -k]), 1);
        }
        assert_eq!(kp(&[]), 1);
        assert_eq!(kp(&[0]), 1);
        assert_eq!(kp(&[3]), 0);
    }

    #[test]
    fn vanishes_off_the_root_cone() {
        assert_eq!(kp(&[1, 0, 0]), 0);
        assert_eq!(kp(&[-1, 1, 0]), 0);
        assert_eq!(kp(&[1, -2, 1]), 0);
    }

    #[test]
    fn matches_exhaustive_search() {
        // no coefficient exceeds the largest prefix sum, which is at most 6 here
        let range = -3i64..=3;
        for a in range.clone() {
            for b in range.clone() {
                for c in range.clone() {
                    let v = [a, b, c, -(a + b + c)];
                    if v[3].abs() > 3 {
                        continue;
                    }
                    assert_eq!(kp(&v), brute(&v, 6), "{v:?}");
                }
            }
        }
    }

    #[test]
    fn shared_cache_agrees() {
        let cache = KostantCache::new();
        for v in [[3, 1, -1, -3], [4, 0, 0, -4], [2, 2, -1, -3]] {
            let w: WeightVector = v.to_vec().into();
            assert_eq!(
                kostant_partition_with(&w, &cache).unwrap(),
                kostant_partition(&w).unwrap()
            );
        }
        assert!(!cache.is_empty());
        // second pass served from the cache
        let w: WeightVector = vec![4, 0, 0, -4].into();
        assert_eq!(
            kostant_partition_with(&w, &cache).unwrap(),
            kostant_partition(&w).unwrap()
        );
    }

    #[test]
    fn shared_cache_across_threads() {
        let cache = KostantCache::new();
        let vectors: Vec<WeightVector> = (0..6)
            .map(|k| vec![k + 2, 1, -1, -(k + 2)].into())
            .collect();
        let expected: Vec<u64> = vectors
            .iter()
            .map(|v| kostant_partition(v).unwrap())
            .collect();
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..4)
                .map(|_| {
                    s.spawn(|| {
                        vectors
                            .iter()
                            .map(|v| kostant_partition_with(v, &cache).unwrap())
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            for h in handles {
                assert_eq!(h.join().unwrap(), expected);
            }
        });
    }
}

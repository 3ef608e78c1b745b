//! Integer partitions, weight vectors, and the dominance order.
//!
//! A [`Partition`] is a weakly decreasing tuple of non-negative integers. It
//! may carry trailing zeros; most operations work on an explicit row count `n`
//! and zero-pad shorter inputs with [`Partition::padded`]. A [`WeightVector`]
//! is an unconstrained integer tuple, used for ρ-shifted weights and for the
//! arguments of the Kostant partition function.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest row count accepted by the coefficient routines.
pub const MAX_PARTS: usize = 8;

/// Largest `|λ| + |μ|` accepted by the coefficient routines.
pub const MAX_TOTAL: i64 = 40;

/// A weakly decreasing tuple of non-negative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<i64>);

impl Partition {
    /// Validates `parts` as weakly decreasing and non-negative.
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if let Some(p) = parts.iter().find(|&&p| p < 0) {
            return Err(Error::InvalidPartition(format!("negative part {p}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {} are not weakly decreasing",
                join(&parts)
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<i64>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition(parts)
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    /// Stored length, trailing zeros included.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of nonzero parts.
    pub fn num_parts(&self) -> usize {
        self.0.iter().take_while(|&&p| p > 0).count()
    }

    /// The content `|λ|`.
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), or zero past the end.
    pub fn part(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Returns the partition with exactly `n` entries, zero-padded or with
    /// trailing zeros dropped.
    pub fn padded(&self, n: usize) -> Result<Partition> {
        let parts = self.num_parts();
        if parts > n {
            return Err(Error::TooManyParts { parts, n });
        }
        let mut v = self.0[..parts].to_vec();
        v.resize(n, 0);
        Ok(Partition(v))
    }

    /// Drops trailing zeros.
    pub fn trimmed(&self) -> Partition {
        Partition(self.0[..self.num_parts()].to_vec())
    }

    /// Whether the Young diagram of `inner` fits inside this one.
    pub fn contains(&self, inner: &Partition) -> bool {
        let len = self.len().max(inner.len());
        (0..len).all(|i| inner.part(i) <= self.part(i))
    }

    pub fn to_weight(&self) -> WeightVector {
        WeightVector(self.0.clone())
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

/// Parses the comma-separated text form, e.g. `"5,3,2"`. The empty string is
/// the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s)?)
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        Partition::new(v)
    }
}

impl TryFrom<&[i64]> for Partition {
    type Error = Error;

    fn try_from(v: &[i64]) -> Result<Self> {
        Partition::new(v.to_vec())
    }
}

/// An integer tuple of fixed length with no ordering constraint.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn new(entries: Vec<i64>) -> Self {
        WeightVector(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }
}

impl From<Vec<i64>> for WeightVector {
    fn from(v: Vec<i64>) -> Self {
        WeightVector(v)
    }
}

impl From<&[i64]> for WeightVector {
    fn from(v: &[i64]) -> Self {
        WeightVector(v.to_vec())
    }
}

impl From<&Partition> for WeightVector {
    fn from(p: &Partition) -> Self {
        p.to_weight()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

impl FromStr for WeightVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_list(s).map(WeightVector)
    }
}

fn parse_list(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map_err(|_| Error::InvalidPartition(format!("cannot parse {tok:?} as an integer")))
        })
        .collect()
}

fn join(v: &[i64]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// The result of sorting a weight vector into strictly decreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedSort {
    /// Weakly decreasing rearrangement of the input.
    pub sorted: WeightVector,
    /// Parity of the sorting permutation, `+1` or `-1`. Meaningless when
    /// `degenerate` is set.
    pub sign: i64,
    /// The input had a repeated entry.
    pub degenerate: bool,
}

/// Dominance order: `xi ⊴ mu`.
///
/// ```
/// use lrkostka::{is_dominated, Partition};
/// let mu: Partition = "14,11,6,5,3".parse().unwrap();
/// let xi: Partition = "9,8,8,7,7".parse().unwrap();
/// assert!(is_dominated(&xi, &mu));
/// ```
pub fn is_dominated(xi: &Partition, mu: &Partition) -> bool {
    if xi.size() != mu.size() {
        return false;
    }
    let len = xi.len().max(mu.len());
    let (mut a, mut b) = (0, 0);
    for i in 0..len {
        a += xi.part(i);
        b += mu.part(i);
        if a > b {
            return false;
        }
    }
    true
}

/// All partitions `ψ ⊴ μ` with at most `n` parts, each padded to length `n`,
/// in descending lexicographic order.
pub fn enumerate_dominated(mu: &Partition, n: usize) -> Result<Vec<Partition>> {
    let mu = mu.padded(n)?;
    let total = mu.size();
    let prefix: Vec<i64> = mu
        .parts()
        .iter()
        .scan(0, |acc, &p| {
            *acc += p;
            Some(*acc)
        })
        .collect();

    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    if n == 0 {
        out.push(Partition::empty());
        return Ok(out);
    }
    dominated_rec(&prefix, total, n, total, 0, &mut cur, &mut out);
    Ok(out)
}

fn dominated_rec(
    prefix: &[i64],
    total: i64,
    n: usize,
    prev: i64,
    sum: i64,
    cur: &mut Vec<i64>,
    out: &mut Vec<Partition>,
) {
    let i = cur.len();
    if i == n {
        if sum == total {
            out.push(Partition(cur.clone()));
        }
        return;
    }
    let remaining = total - sum;
    let slots = (n - i) as i64;
    let hi = prev.min(prefix[i] - sum);
    // remaining slots are each bounded by this part
    let lo = (remaining + slots - 1) / slots;
    let mut part = hi;
    while part >= lo {
        cur.push(part);
        dominated_rec(prefix, total, n, part, sum + part, cur, out);
        cur.pop();
        part -= 1;
    }
}

/// All partitions of `m` with at most `n` parts, padded to length `n`, in
/// descending lexicographic order.
pub fn partitions_of(m: i64, n: usize) -> Vec<Partition> {
    if n == 0 {
        return if m == 0 {
            vec![Partition::empty()]
        } else {
            Vec::new()
        };
    }
    let mut top = vec![0; n];
    top[0] = m;
    enumerate_dominated(&Partition(top), n).expect("padded to n")
}

/// The staircase `(n-1, n-2, ..., 1, 0)`.
pub fn staircase(n: usize) -> WeightVector {
    WeightVector((0..n as i64).rev().collect())
}

/// Sorts `v` into decreasing order and reports the parity of the sort.
pub fn sort_with_sign(v: &WeightVector) -> SignedSort {
    let e = v.entries();
    let mut inversions = 0usize;
    let mut degenerate = false;
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            match e[i].cmp(&e[j]) {
                std::cmp::Ordering::Less => inversions += 1,
                std::cmp::Ordering::Equal => degenerate = true,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    let mut sorted = e.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    SignedSort {
        sorted: WeightVector(sorted),
        sign: if inversions.is_multiple_of(2) { 1 } else { -1 },
        degenerate,
    }
}

/// Every distinct rearrangement of `xi` exactly once, starting from `xi`
/// itself and descending lexicographically.
pub fn distinct_rearrangements(xi: &Partition) -> Vec<WeightVector> {
    let mut cur = xi.parts().to_vec();
    cur.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = vec![WeightVector(cur.clone())];
    while prev_permutation(&mut cur) {
        out.push(WeightVector(cur.clone()));
    }
    out
}

/// Order of the stabilizer of `xi` in the symmetric group.
pub fn stabilizer_order(xi: &Partition) -> u64 {
    let p = xi.parts();
    let mut order = 1u64;
    let mut i = 0;
    while i < p.len() {
        let j = p[i..].iter().take_while(|&&x| x == p[i]).count();
        order *= factorial(j as u64);
        i += j;
    }
    order
}

pub(crate) fn factorial(k: u64) -> u64 {
    (1..=k).product()
}

/// Steps `v` to the previous permutation in lexicographic order. Returns
/// `false` once `v` is already the smallest.
fn prev_permutation(v: &mut [i64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] <= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] >= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// A permutation of `0..n` together with its sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    pub perm: Vec<usize>,
    pub sign: i64,
}

impl SignedPermutation {
    /// `out[i] = v[perm[i]]`.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.perm.iter().map(|&j| v[j]).collect()
    }
}

/// All `n!` permutations of `0..n` in lexicographic order, with signs.
pub fn signed_permutations(n: usize) -> Vec<SignedPermutation> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(factorial(n as u64) as usize);
    loop {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        out.push(SignedPermutation {
            perm: perm.clone(),
            sign: if inversions.is_multiple_of(2) { 1 } else { -1 },
        });
        // next permutation
        let mut i = n;
        while i > 1 && perm[i - 2] >= perm[i - 1] {
            i -= 1;
        }
        if i <= 1 {
            break;
        }
        let mut j = n - 1;
        while perm[j] <= perm[i - 2] {
            j -= 1;
        }
        perm.swap(i - 2, j);
        perm[i - 1..].reverse();
    }
    out
}

/// Pads every input to a common row count: the largest part-count among the
/// inputs, raised to `n` if given.
pub fn common_length(parts: &[&Partition], n: Option<usize>) -> Result<(usize, Vec<Partition>)> {
    let needed = parts.iter().map(|p| p.num_parts()).max().unwrap_or(0);
    let n = n.unwrap_or(needed);
    let padded = parts
        .iter()
        .map(|p| p.padded(n))
        .collect::<Result<Vec<_>>>()?;
    Ok((n, padded))
}

/// Rejects inputs beyond the supported sizes: more than [`MAX_PARTS`] rows or
/// total size above [`MAX_TOTAL`].
pub fn check_bounds(total: i64, n: usize) -> Result<()> {
    if n > MAX_PARTS {
        return Err(Error::SizeBound(format!(
            "{n} rows requested, at most {MAX_PARTS} supported"
        )));
    }
    if total > MAX_TOTAL {
        return Err(Error::SizeBound(format!(
            "total size {total} exceeds {MAX_TOTAL}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("5,3,2").parts(), &[5, 3, 2]);
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p(" 4, 3 ,3").to_string(), "4,3,3");
        assert!("3,4".parse::<Partition>().is_err());
        assert!("3,-1".parse::<Partition>().is_err());
        assert!("3,x".parse::<Partition>().is_err());
        assert_eq!(
            "2,0,-2".parse::<WeightVector>().unwrap().entries(),
            &[2, 0, -2]
        );
    }

    #[test]
    fn padding() {
        assert_eq!(p("2,1").padded(4).unwrap().parts(), &[2, 1, 0, 0]);
        assert_eq!(p("2,1,0,0").padded(2).unwrap().parts(), &[2, 1]);
        assert_eq!(
            p("2,1,1").padded(2),
            Err(Error::TooManyParts { parts: 3, n: 2 })
        );
    }

    #[test]
    fn dominance_examples() {
        assert!(is_dominated(&p("4,3,3"), &p("4,3,3")));
        assert!(is_dominated(&p("9,8,8,7,7"), &p("14,11,6,5,3")));
        assert!(!is_dominated(&p("5,4,1"), &p("4,3,3")));
        assert!(!is_dominated(&p("2,1"), &p("2,2")));
        assert!(is_dominated(&p("1,1,1"), &p("3")));
    }

    #[test]
    fn enumerate_dominated_examples() {
        assert_eq!(
            enumerate_dominated(&p("4,3,3"), 3).unwrap(),
            vec![p("4,3,3")]
        );
        assert_eq!(
            enumerate_dominated(&p("2,1,0"), 3).unwrap(),
            vec![p("2,1,0"), p("1,1,1")]
        );
        for k in 0..6 {
            assert_eq!(
                enumerate_dominated(&Partition::new(vec![k]).unwrap(), 1).unwrap(),
                vec![Partition::new(vec![k]).unwrap()]
            );
        }
        assert!(enumerate_dominated(&p("1,1,1"), 2).is_err());
    }

    #[test]
    fn partitions_of_counts() {
        // p(m) for m = 0..=10 with unrestricted length
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (m, &count) in expected.iter().enumerate() {
            assert_eq!(partitions_of(m as i64, m.max(1)).len(), count, "m = {m}");
        }
        assert_eq!(partitions_of(0, 0), vec![Partition::empty()]);
        assert!(partitions_of(2, 0).is_empty());
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(staircase(3).entries(), &[2, 1, 0]);
        assert_eq!(staircase(1).entries(), &[0]);
        assert_eq!(staircase(5).entries(), &[4, 3, 2, 1, 0]);
    }

    #[test]
    fn sort_with_sign_examples() {
        assert!(sort_with_sign(&vec![4, 3, 3].into()).degenerate);
        let s = sort_with_sign(&vec![3, 5, 4].into());
        assert_eq!(
            (s.sorted.entries(), s.sign, s.degenerate),
            (&[5, 4, 3][..], 1, false)
        );
        let s = sort_with_sign(&vec![1, 2].into());
        assert_eq!((s.sorted.entries(), s.sign), (&[2, 1][..], -1));
        assert_eq!(sort_with_sign(&vec![].into()).sign, 1);
    }

    #[test]
    fn rearrangement_examples() {
        assert_eq!(distinct_rearrangements(&p("1,1,1")).len(), 1);
        assert_eq!(distinct_rearrangements(&p("3,3,1")).len(), 3);
        assert_eq!(distinct_rearrangements(&p("2,1,0")).len(), 6);
        assert_eq!(
            distinct_rearrangements(&p("")),
            vec![WeightVector::default()]
        );
    }

    #[test]
    fn permutation_signs() {
        let perms = signed_permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().map(|p| p.sign).sum::<i64>(), 0);
        assert_eq!(perms[0].perm, vec![0, 1, 2]);
        assert_eq!(
            perms[1],
            SignedPermutation {
                perm: vec![0, 2, 1],
                sign: -1
            }
        );
        assert_eq!(signed_permutations(0).len(), 1);
        assert_eq!(signed_permutations(5).len(), 120);
    }

    #[test]
    fn common_length_pads() {
        let (n, v) = common_length(&[&p("2,1"), &p("3")], None).unwrap();
        assert_eq!(n, 2);
        assert_eq!(v[1].parts(), &[3, 0]);
        let (n, _) = common_length(&[&p("2,1")], Some(4)).unwrap();
        assert_eq!(n, 4);
        assert!(common_length(&[&p("2,1,1")], Some(2)).is_err());
    }
}

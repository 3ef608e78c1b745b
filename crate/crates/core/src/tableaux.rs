//! Semistandard and Littlewood–Richardson tableaux.
//!
//! Three independent ways of getting at Kostka numbers live here:
//! [`kostka_ssyt`] peels off horizontal strips one letter at a time,
//! [`enumerate_ssyt`] lists tableaux box by box, and [`kostka_kostant`] is the
//! alternating sum of Kostant partition function values. [`lr_rule_count`] is
//! the classical Littlewood–Richardson rule and serves as the reference for
//! every LR formula in [`crate::lr_engine`].

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::kostant::kostant_partition_local;
use crate::partitions::{
    check_bounds, is_dominated, signed_permutations, staircase, Partition, WeightVector,
};

/// A filling of a (possibly skew) shape with positive integers.
///
/// Row `i` holds the boxes in columns `inner[i]..inner[i] + rows[i].len()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    inner: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// A straight-shape tableau from its rows.
    pub fn new(rows: Vec<Vec<usize>>) -> Self {
        Tableau {
            inner: vec![0; rows.len()],
            rows,
        }
    }

    /// A skew tableau; `inner[i]` is the number of skipped boxes in row `i`.
    pub fn skew(inner: Vec<usize>, rows: Vec<Vec<usize>>) -> Self {
        let mut inner = inner;
        inner.resize(rows.len(), 0);
        Tableau { inner, rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn outer_shape(&self) -> Vec<usize> {
        self.inner
            .iter()
            .zip(&self.rows)
            .map(|(a, r)| a + r.len())
            .collect()
    }

    fn get(&self, row: usize, col: usize) -> Option<usize> {
        let off = *self.inner.get(row)?;
        col.checked_sub(off)
            .and_then(|c| self.rows[row].get(c).copied())
    }

    /// Rows weakly increase, columns strictly increase, entries are positive,
    /// and the outer and inner shapes are partitions.
    pub fn is_semistandard(&self) -> bool {
        let outer = self.outer_shape();
        if outer.windows(2).any(|w| w[0] < w[1]) || self.inner.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.contains(&0) || row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if r == 0 {
                continue;
            }
            for (k, &x) in row.iter().enumerate() {
                if let Some(above) = self.get(r - 1, self.inner[r] + k) {
                    if above >= x {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `content[i]` is the number of entries equal to `i + 1`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut c = vec![0; max];
        for &x in self.rows.iter().flatten() {
            if x > 0 {
                c[x - 1] += 1;
            }
        }
        c
    }

    /// Reverse reading word: rows top to bottom, each read right to left.
    pub fn reverse_reading_word(&self) -> Vec<usize> {
        self.rows
            .iter()
            .flat_map(|r| r.iter().rev().copied())
            .collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            for _ in 0..self.inner[r] {
                f.write_str(". ")?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

/// `outer / inner`, with `inner` contained in `outer`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidPartition(format!(
                "({inner}) is not contained in ({outer})"
            )));
        }
        let n = outer.len().max(inner.len());
        Ok(SkewShape {
            outer: outer.padded(n)?,
            inner: inner.padded(n)?,
        })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> i64 {
        self.outer.size() - self.inner.size()
    }
}

/// Number of semistandard tableaux of `shape` in which `content[i]` entries
/// equal `i + 1`. Zero when sizes differ or any content entry is negative.
///
/// Counts by removing the largest letter, which must occupy a horizontal
/// strip, and recursing on the smaller shape.
///
/// ```
/// use lrkostka::{kostka_ssyt, Partition};
/// let shape: Partition = "5,3,2".parse().unwrap();
/// assert_eq!(kostka_ssyt(&shape, &[4, 3, 3]).unwrap(), 2);
/// ```
pub fn kostka_ssyt(shape: &Partition, content: &[i64]) -> Result<u64> {
    if content.iter().any(|&c| c < 0) || shape.size() != content.iter().sum::<i64>() {
        return Ok(0);
    }
    let mut memo = HashMap::new();
    kostka_strips(shape.trimmed().parts(), content, &mut memo)
}

fn kostka_strips(
    shape: &[i64],
    content: &[i64],
    memo: &mut HashMap<(Vec<i64>, usize), u64>,
) -> Result<u64> {
    let rows = shape.iter().take_while(|&&p| p > 0).count();
    if content.is_empty() {
        return Ok((rows == 0) as u64);
    }
    // letters 1..=k fit in at most k rows
    if rows > content.len() {
        return Ok(0);
    }
    let key = (shape[..rows].to_vec(), content.len());
    if let Some(&hit) = memo.get(&key) {
        return Ok(hit);
    }
    let (last, rest) = content.split_last().expect("non-empty");
    let mut total = 0u64;
    let mut failure = None;
    for_each_horizontal_strip(&shape[..rows], *last, &mut |smaller| match kostka_strips(
        smaller, rest, memo,
    ) {
        Ok(k) => match total.checked_add(k) {
            Some(t) => total = t,
            None => failure = Some(Error::Overflow("Kostka number")),
        },
        Err(e) => failure = Some(e),
    });
    if let Some(e) = failure {
        return Err(e);
    }
    memo.insert(key, total);
    Ok(total)
}

/// Calls `visit` with every `κ ⊆ shape` such that `shape / κ` is a horizontal
/// strip of `size` boxes.
fn for_each_horizontal_strip(shape: &[i64], size: i64, visit: &mut dyn FnMut(&[i64])) {
    fn rec(shape: &[i64], i: usize, left: i64, cur: &mut Vec<i64>, visit: &mut dyn FnMut(&[i64])) {
        if i == shape.len() {
            if left == 0 {
                visit(cur);
            }
            return;
        }
        let below = shape.get(i + 1).copied().unwrap_or(0);
        let max_take = (shape[i] - below).min(left);
        // the rows below can absorb at most their own widths
        let capacity_below: i64 = (i + 1..shape.len())
            .map(|j| shape[j] - shape.get(j + 1).copied().unwrap_or(0))
            .sum();
        let min_take = (left - capacity_below).max(0);
        for take in min_take..=max_take {
            cur.push(shape[i] - take);
            rec(shape, i + 1, left - take, cur, visit);
            cur.pop();
        }
    }
    let mut cur = Vec::with_capacity(shape.len());
    rec(shape, 0, size, &mut cur, visit);
}

/// Calls `visit` with every semistandard filling of `outer / inner` using
/// letters `1..=max_letter`, filling boxes row by row, left to right. When
/// `content` is given, exactly `content[i]` copies of `i + 1` are used.
fn for_each_filling(
    outer: &[usize],
    inner: &[usize],
    max_letter: usize,
    content: Option<&[usize]>,
    visit: &mut dyn FnMut(&Tableau),
) {
    let rows = outer.len();
    let inner: Vec<usize> = (0..rows)
        .map(|r| inner.get(r).copied().unwrap_or(0))
        .collect();
    let boxes: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| (inner[r]..outer[r]).map(move |c| (r, c)))
        .collect();
    let mut remaining: Vec<usize> = match content {
        Some(c) => c.to_vec(),
        None => vec![usize::MAX; max_letter],
    };
    let mut t = Tableau::skew(
        inner.clone(),
        (0..rows)
            .map(|r| Vec::with_capacity(outer[r] - inner[r]))
            .collect(),
    );

    fn rec(
        boxes: &[(usize, usize)],
        idx: usize,
        inner: &[usize],
        remaining: &mut [usize],
        t: &mut Tableau,
        visit: &mut dyn FnMut(&Tableau),
    ) {
        let Some(&(r, c)) = boxes.get(idx) else {
            visit(t);
            return;
        };
        let mut lo = 1;
        if c > inner[r] {
            lo = lo.max(*t.rows[r].last().expect("left neighbour filled"));
        }
        if r > 0 && c >= inner[r - 1] {
            lo = lo.max(t.rows[r - 1][c - inner[r - 1]] + 1);
        }
        for letter in lo..=remaining.len() {
            if remaining[letter - 1] == 0 {
                continue;
            }
            remaining[letter - 1] -= 1;
            t.rows[r].push(letter);
            rec(boxes, idx + 1, inner, remaining, t, visit);
            t.rows[r].pop();
            remaining[letter - 1] += 1;
        }
    }
    rec(&boxes, 0, &inner, &mut remaining, &mut t, visit);
}

fn usize_shape(p: &Partition) -> Vec<usize> {
    p.trimmed().parts().iter().map(|&x| x as usize).collect()
}

/// Every semistandard tableau of `shape` with the given content, listed
/// explicitly. Intended for small shapes; prefer [`kostka_ssyt`] for counts.
pub fn enumerate_ssyt(shape: &Partition, content: &[i64]) -> Vec<Tableau> {
    let mut out = Vec::new();
    if content.iter().any(|&c| c < 0) || shape.size() != content.iter().sum::<i64>() {
        return out;
    }
    let content: Vec<usize> = content.iter().map(|&c| c as usize).collect();
    for_each_filling(
        &usize_shape(shape),
        &[],
        content.len(),
        Some(&content),
        &mut |t| out.push(t.clone()),
    );
    out
}

/// Every semistandard tableau of `shape` with entries in `1..=max_letter`.
pub fn enumerate_ssyt_bounded(shape: &Partition, max_letter: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_filling(&usize_shape(shape), &[], max_letter, None, &mut |t| {
        out.push(t.clone())
    });
    out
}

/// Calls `visit` with every semistandard tableau of `shape` with entries in
/// `1..=max_letter`, without collecting them.
pub fn for_each_ssyt_bounded(
    shape: &Partition,
    max_letter: usize,
    visit: &mut dyn FnMut(&Tableau),
) {
    for_each_filling(&usize_shape(shape), &[], max_letter, None, visit);
}

/// Kostka number as the alternating sum
/// `Σ_{σ ∈ S_n} sgn(σ) 𝔓(σ(λ + ρ) − (μ + ρ))`.
///
/// `content` may be any integer vector of length `n`; `shape` is padded to
/// `n` rows. One Kostant memo is shared by all `n!` terms.
pub fn kostka_kostant(shape: &Partition, content: &WeightVector, n: usize) -> Result<i64> {
    if content.len() != n {
        return Err(Error::InvalidPartition(format!(
            "content ({content}) does not have {n} entries"
        )));
    }
    check_bounds(0, n)?;
    let shape = shape.padded(n)?;
    let rho = staircase(n);
    let shifted: Vec<i64> = shape
        .parts()
        .iter()
        .zip(rho.entries())
        .map(|(a, b)| a + b)
        .collect();
    let target: Vec<i64> = content
        .entries()
        .iter()
        .zip(rho.entries())
        .map(|(a, b)| a + b)
        .collect();
    let mut memo = HashMap::new();
    let mut total = 0i64;
    for w in signed_permutations(n) {
        let arg: Vec<i64> = w
            .apply(&shifted)
            .iter()
            .zip(&target)
            .map(|(a, b)| a - b)
            .collect();
        let p = kostant_partition_local(&arg, &mut memo)?;
        let p = i64::try_from(p).map_err(|_| Error::Overflow("Kostka number"))?;
        total = total
            .checked_add(w.sign * p)
            .ok_or(Error::Overflow("Kostka number"))?;
    }
    Ok(total)
}

/// A tableau built by [`construct_ssyt_trace`], with the unfilled shape left
/// after each letter is placed (largest letter first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub tableau: Tableau,
    pub remaining: Vec<Partition>,
}

/// A semistandard tableau of shape `mu` and content `xi`, built directly
/// from the dominance inequalities. Fails when `xi ⊴ mu` does not hold.
pub fn construct_ssyt(mu: &Partition, xi: &Partition) -> Result<Tableau> {
    construct_ssyt_trace(mu, xi).map(|c| c.tableau)
}

/// As [`construct_ssyt`], also recording the intermediate shapes.
///
/// Letters are placed largest first. With `cur` the still-empty shape and
/// `r` the row with `cur[r+1] < ξ_k <= cur[r]`, the `ξ_k` copies of `k` fill
/// rows bottom-up, right to left: each row `s > r` loses `cur[s] - cur[s+1]`
/// boxes and row `r` loses the remaining `ξ_k - cur[r+1]`.
pub fn construct_ssyt_trace(mu: &Partition, xi: &Partition) -> Result<Construction> {
    if !is_dominated(xi, mu) {
        return Err(Error::NotDominated {
            xi: xi.to_string(),
            mu: mu.to_string(),
        });
    }
    let m = mu.num_parts();
    let mut cur: Vec<i64> = mu.trimmed().into_inner();
    let mut rows: Vec<Vec<usize>> = cur.iter().map(|&w| vec![0; w as usize]).collect();
    let mut remaining = Vec::new();
    let part = |v: &[i64], i: usize| v.get(i).copied().unwrap_or(0);

    for k in (1..=xi.num_parts()).rev() {
        let count = xi.part(k - 1);
        let r = (0..m)
            .find(|&r| part(&cur, r + 1) < count && count <= cur[r])
            .expect("dominance guarantees a row");
        let mut next = cur.clone();
        for s in (r + 1..m).rev() {
            let below = part(&cur, s + 1);
            for c in below..cur[s] {
                rows[s][c as usize] = k;
            }
            next[s] = below;
        }
        let take = count - part(&cur, r + 1);
        for c in cur[r] - take..cur[r] {
            rows[r][c as usize] = k;
        }
        next[r] = cur[r] - take;
        cur = next;
        remaining.push(Partition::from_sorted_unchecked(cur.clone()));
    }
    Ok(Construction {
        tableau: Tableau::new(rows),
        remaining,
    })
}

/// Littlewood–Richardson coefficient `c^ν_{λμ}` by the LR rule: the number of
/// semistandard fillings of `ν / λ` with content `μ` whose reverse reading
/// word is a lattice word.
///
/// Zero when `λ ⊄ ν` or `|ν| ≠ |λ| + |μ|`.
pub fn lr_rule_count(outer: &Partition, inner: &Partition, content: &Partition) -> Result<u64> {
    let mut count = 0u64;
    let mut overflow = false;
    for_each_lr_tableau(outer, inner, content, &mut |_| match count.checked_add(1) {
        Some(c) => count = c,
        None => overflow = true,
    });
    if overflow {
        return Err(Error::Overflow("LR tableau count"));
    }
    Ok(count)
}

/// The LR tableaux counted by [`lr_rule_count`].
pub fn lr_tableaux(outer: &Partition, inner: &Partition, content: &Partition) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_lr_tableau(outer, inner, content, &mut |t| out.push(t.clone()));
    out
}

/// Fills boxes in reverse reading order (rows top to bottom, right to left),
/// so the lattice condition is checked on each prefix as it is built.
fn for_each_lr_tableau(
    outer: &Partition,
    inner: &Partition,
    content: &Partition,
    visit: &mut dyn FnMut(&Tableau),
) {
    if !outer.contains(inner) || outer.size() != inner.size() + content.size() {
        return;
    }
    let outer = usize_shape(outer);
    let rows = outer.len();
    let inner: Vec<usize> = (0..rows).map(|r| inner.part(r) as usize).collect();
    let content: Vec<usize> = usize_shape(content);
    let boxes: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| (inner[r]..outer[r]).rev().map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = (0..rows).map(|r| vec![0; outer[r]]).collect();
    let mut used = vec![0usize; content.len()];

    #[allow(clippy::too_many_arguments)]
    fn rec(
        boxes: &[(usize, usize)],
        idx: usize,
        inner: &[usize],
        outer: &[usize],
        content: &[usize],
        used: &mut [usize],
        grid: &mut [Vec<usize>],
        visit: &mut dyn FnMut(&Tableau),
    ) {
        let Some(&(r, c)) = boxes.get(idx) else {
            let rows = grid
                .iter()
                .enumerate()
                .map(|(r, row)| row[inner[r]..].to_vec())
                .collect();
            visit(&Tableau::skew(inner.to_vec(), rows));
            return;
        };
        let mut lo = 1;
        let mut hi = content.len();
        if c + 1 < outer[r] {
            hi = hi.min(grid[r][c + 1]);
        }
        if r > 0 && c >= inner[r - 1] {
            lo = grid[r - 1][c] + 1;
        }
        for letter in lo..=hi {
            let i = letter - 1;
            if used[i] == content[i] || (i > 0 && used[i] == used[i - 1]) {
                continue;
            }
            used[i] += 1;
            grid[r][c] = letter;
            rec(boxes, idx + 1, inner, outer, content, used, grid, visit);
            used[i] -= 1;
        }
        grid[r][c] = 0;
    }
    rec(
        &boxes, 0, &inner, &outer, &content, &mut used, &mut grid, visit,
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Brute force: all fillings of the straight shape with letters in
    /// `1..=content.len()`, filtered by the tableau conditions and content.
    fn brute_kostka(shape: &[usize], content: &[usize]) -> u64 {
        let cells: usize = shape.iter().sum();
        let k = content.len();
        if k == 0 {
            return (cells == 0) as u64;
        }
        let mut count = 0;
        let mut word = vec![1usize; cells];
        loop {
            let mut rows = Vec::new();
            let mut at = 0;
            for &w in shape {
                rows.push(word[at..at + w].to_vec());
                at += w;
            }
            let t = Tableau::new(rows);
            let mut c = t.content();
            c.resize(k, 0);
            if t.is_semistandard() && c == content {
                count += 1;
            }
            // odometer increment
            let mut i = 0;
            while i < cells && word[i] == k {
                word[i] = 1;
                i += 1;
            }
            if i == cells {
                break;
            }
            word[i] += 1;
        }
        count
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka_ssyt(&p("5,3,2"), &[4, 3, 3]).unwrap(), 2);
        assert_eq!(kostka_ssyt(&p("2,1"), &[1, 1, 1]).unwrap(), 2);
        for lam in ["3,2,1", "4", "2,2", "1,1,1", ""] {
            let l = p(lam);
            assert_eq!(kostka_ssyt(&l, l.parts()).unwrap(), 1, "{lam}");
        }
        assert_eq!(kostka_ssyt(&p("2,1"), &[1, 1]).unwrap(), 0);
        assert_eq!(kostka_ssyt(&p("2"), &[3, -1]).unwrap(), 0);
        assert_eq!(kostka_ssyt(&p("1,1"), &[2]).unwrap(), 0);
    }

    #[test]
    fn kostka_against_brute_force() {
        for m in 0..=5 {
            for shape in partitions_of(m, m as usize) {
                for content in partitions_of(m, 3) {
                    let s = usize_shape(&shape);
                    let c: Vec<usize> = content.parts().iter().map(|&x| x as usize).collect();
                    assert_eq!(
                        kostka_ssyt(&shape, content.parts()).unwrap(),
                        brute_kostka(&s, &c),
                        "{shape} / {content}"
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_matches_strip_count() {
        for m in 0..=7 {
            for shape in partitions_of(m, 4) {
                for content in partitions_of(m, 4) {
                    let listed = enumerate_ssyt(&shape, content.parts());
                    assert_eq!(
                        listed.len() as u64,
                        kostka_ssyt(&shape, content.parts()).unwrap()
                    );
                    for t in &listed {
                        assert!(t.is_semistandard());
                    }
                }
            }
        }
        let listed = enumerate_ssyt(&p("5,3,2"), &[4, 3, 3]);
        let shown: Vec<Vec<Vec<usize>>> = listed.iter().map(|t| t.rows().to_vec()).collect();
        assert!(shown.contains(&vec![vec![1, 1, 1, 1, 2], vec![2, 2, 3], vec![3, 3]]));
        assert!(shown.contains(&vec![vec![1, 1, 1, 1, 3], vec![2, 2, 2], vec![3, 3]]));
    }

    #[test]
    fn kostant_route_examples() {
        let k = |s: &str, c: Vec<i64>, n| kostka_kostant(&p(s), &c.into(), n).unwrap();
        assert_eq!(k("5,3,2", vec![4, 3, 3], 3), 2);
        assert_eq!(k("1", vec![1], 1), 1);
        assert_eq!(k("2,1", vec![1, 1, 1], 3), 2);
        assert_eq!(k("2,1", vec![3, 1, -1], 3), 0);
        assert!(kostka_kostant(&p("2,1"), &vec![1, 1].into(), 3).is_err());
    }

    #[test]
    fn construct_examples() {
        let c = construct_ssyt_trace(&p("14,11,6,5,3"), &p("9,8,8,7,7")).unwrap();
        assert_eq!(c.remaining[0], p("14,10,5,3,0"));
        assert!(c.tableau.is_semistandard());
        assert_eq!(c.tableau.content(), vec![9, 8, 8, 7, 7]);

        let c = construct_ssyt(&p("3,2,1"), &p("3,2,1")).unwrap();
        assert_eq!(c.rows(), &[vec![1, 1, 1], vec![2, 2], vec![3]]);
        let c = construct_ssyt(&p("2,1"), &p("2,1")).unwrap();
        assert_eq!(c.rows(), &[vec![1, 1], vec![2]]);

        assert!(matches!(
            construct_ssyt(&p("4,3,3"), &p("5,4,1")),
            Err(Error::NotDominated { .. })
        ));
    }

    #[test]
    fn construct_tie_case() {
        // ξ_k equals μ_r exactly
        let c = construct_ssyt_trace(&p("3,2"), &p("2,2,1")).unwrap();
        assert!(c.tableau.is_semistandard());
        assert_eq!(c.tableau.content(), vec![2, 2, 1]);
        let c = construct_ssyt_trace(&p("4,2"), &p("2,2,2")).unwrap();
        assert_eq!(c.remaining[0], p("4,0"));
        assert!(c.tableau.is_semistandard());
    }

    #[test]
    fn lr_rule_examples() {
        assert_eq!(
            lr_rule_count(&p("9,6,5"), &p("5,3,2"), &p("4,3,3")).unwrap(),
            1
        );
        assert_eq!(lr_rule_count(&p("3,2,1"), &p("2,1"), &p("2,1")).unwrap(), 2);
        assert_eq!(lr_rule_count(&p("2,1"), &p("2,1"), &p("")).unwrap(), 1);
        assert_eq!(lr_rule_count(&p("2,1"), &p("3"), &p("")).unwrap(), 0);
        assert_eq!(lr_rule_count(&p("3"), &p("1"), &p("1")).unwrap(), 0);
        assert_eq!(lr_rule_count(&p("2"), &p("1"), &p("1")).unwrap(), 1);
        assert_eq!(lr_rule_count(&p("1,1"), &p("1"), &p("1")).unwrap(), 1);
    }

    #[test]
    fn lr_tableaux_are_lattice() {
        for t in lr_tableaux(&p("4,3,2"), &p("2,1"), &p("3,2,1")) {
            assert!(t.is_semistandard());
            let word = t.reverse_reading_word();
            let mut seen = [0usize; 4];
            for &x in &word {
                seen[x] += 1;
                assert!(x == 1 || seen[x] <= seen[x - 1]);
            }
        }
    }

    #[test]
    fn skew_shape_validation() {
        assert!(SkewShape::new(p("3,2"), p("2,1")).is_ok());
        assert!(SkewShape::new(p("3,2"), p("2,2,1")).is_err());
        assert_eq!(SkewShape::new(p("3,2"), p("1")).unwrap().size(), 4);
    }

    #[test]
    fn semistandard_check_rejects() {
        assert!(!Tableau::new(vec![vec![2, 1]]).is_semistandard());
        assert!(!Tableau::new(vec![vec![1, 1], vec![1]]).is_semistandard());
        assert!(!Tableau::new(vec![vec![1], vec![2, 2]]).is_semistandard());
        assert!(Tableau::skew(vec![1], vec![vec![1], vec![1]]).is_semistandard());
    }

    #[test]
    fn display() {
        let t = Tableau::skew(vec![1, 0], vec![vec![1, 1], vec![2]]);
        assert_eq!(t.to_string(), ". 1 1\n2");
    }
}

//! Sparse polynomials with integer coefficients and the symmetric functions
//! built from them.
//!
//! Schur polynomials are generated as sums of tableau monomials.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lr_engine::SchurExpansion;
use crate::partitions::{partitions_of, signed_permutations, Partition};
use crate::tableaux::for_each_ssyt_bounded;

/// Exponent vector, ordered by total degree and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `nvars` variables with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePolynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, i64>,
}

impl SparsePolynomial {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(nvars, vec![0; nvars], 1)
    }

    /// `coeff · x^exponents`.
    pub fn monomial(nvars: usize, exponents: Vec<u32>, coeff: i64) -> Self {
        assert_eq!(exponents.len(), nvars, "exponent vector length");
        let mut p = Self::zero(nvars);
        if coeff != 0 {
            p.terms.insert(Monomial(exponents), coeff);
        }
        p
    }

    /// The variable `x_{i+1}`.
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> i64 {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .copied()
            .unwrap_or(0)
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, i64)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    fn add_term(&mut self, m: Monomial, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(m.clone()).or_insert(0);
        *entry = entry
            .checked_add(c)
            .ok_or(Error::Overflow("polynomial coefficient"))?;
        if *entry == 0 {
            self.terms.remove(&m);
        }
        Ok(())
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(
                m.clone(),
                c.checked_neg()
                    .ok_or(Error::Overflow("polynomial coefficient"))?,
            )?;
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Result<Self> {
        let mut out = Self::zero(self.nvars);
        for (m, &c) in &self.terms {
            out.add_term(
                m.clone(),
                c.checked_mul(k)
                    .ok_or(Error::Overflow("polynomial coefficient"))?,
            )?;
        }
        Ok(out)
    }

    /// Exact product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.nvars);
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                let c = x
                    .checked_mul(y)
                    .ok_or(Error::Overflow("polynomial coefficient"))?;
                out.add_term(a.times(b), c)?;
            }
        }
        Ok(out)
    }

    /// Drops every term of total degree above `maxdeg`.
    pub fn truncate(&self, maxdeg: u64) -> Self {
        SparsePolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= maxdeg)
                .map(|(m, &c)| (m.clone(), c))
                .collect(),
        }
    }

    /// Product, keeping only terms of total degree at most `maxdeg`.
    pub fn multiply_truncated(&self, other: &Self, maxdeg: u64) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.nvars);
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                if a.degree() + b.degree() > maxdeg {
                    // terms are sorted by degree
                    break;
                }
                let c = x
                    .checked_mul(y)
                    .ok_or(Error::Overflow("polynomial coefficient"))?;
                out.add_term(a.times(b), c)?;
            }
        }
        Ok(out)
    }

    /// Exchanges variables `i` and `j`.
    pub fn swap_variables(&self, i: usize, j: usize) -> Self {
        SparsePolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, &c)| {
                    let mut e = m.0.clone();
                    e.swap(i, j);
                    (Monomial(e), c)
                })
                .collect(),
        }
    }

    /// Invariant under every adjacent transposition of variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(m, &c)| {
                let mut e = m.0.clone();
                e.swap(i, i + 1);
                self.terms.get(&Monomial(e)) == Some(&c)
            })
        })
    }

    /// The common degree of all terms, if there is one. The zero polynomial
    /// is homogeneous of degree 0.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => Some(0),
            Some(d) => degrees.all(|e| e == d).then_some(d),
        }
    }

    /// The largest term in monomial order.
    pub fn leading_term(&self) -> Option<(Monomial, i64)> {
        self.terms.last_key_value().map(|(m, &c)| (m.clone(), c))
    }

    /// Value at `x_i = 1` for all `i`.
    pub fn eval_ones(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl fmt::Display for SparsePolynomial {
    /// Terms in decreasing monomial order, e.g. `1 * x1^2 + 1 * x1 x2 + 1 * x2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, &c) in self.terms.iter().rev() {
            if !first {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            first = false;
            write!(f, "{}", c.unsigned_abs())?;
            if m.0.iter().any(|&e| e > 0) {
                f.write_str(" *")?;
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, " x{}", i + 1)?,
                    _ => write!(f, " x{}^{}", i + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

/// The Schur polynomial `S_λ(x_1, ..., x_n)`: the sum over semistandard
/// tableaux of shape `λ` with entries at most `n` of `x^content`.
///
/// ```
/// use lrkostka::{schur_polynomial, Partition};
/// let s = schur_polynomial(&"2".parse().unwrap(), 2).unwrap();
/// assert_eq!(s.coefficient(&[1, 1]), 1);
/// assert_eq!(s.num_terms(), 3);
/// ```
pub fn schur_polynomial(lambda: &Partition, n: usize) -> Result<SparsePolynomial> {
    if lambda.num_parts() > n {
        return Err(Error::TooManyParts {
            parts: lambda.num_parts(),
            n,
        });
    }
    let mut out = SparsePolynomial::zero(n);
    let mut failure = None;
    for_each_ssyt_bounded(lambda, n, &mut |t| {
        let mut e = vec![0u32; n];
        for &x in t.rows().iter().flatten() {
            e[x - 1] += 1;
        }
        if let Err(err) = out.add_term(Monomial(e), 1) {
            failure = Some(err);
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// `H_k(x_1, ..., x_n)`: the sum of all monomials of degree `k`.
pub fn complete_homogeneous(k: u32, n: usize) -> SparsePolynomial {
    let mut out = SparsePolynomial::zero(n);
    if n == 0 {
        return if k == 0 {
            SparsePolynomial::one(0)
        } else {
            out
        };
    }
    fn rec(i: usize, left: u32, e: &mut Vec<u32>, out: &mut SparsePolynomial) {
        if i + 1 == e.len() {
            e[i] = left;
            out.terms.insert(Monomial(e.clone()), 1);
            return;
        }
        for x in (0..=left).rev() {
            e[i] = x;
            rec(i + 1, left - x, e, out);
        }
    }
    rec(0, k, &mut vec![0; n], &mut out);
    out
}

/// `H_{μ_1} H_{μ_2} ⋯` in `n` variables.
pub fn complete_homogeneous_product(mu: &[u32], n: usize) -> Result<SparsePolynomial> {
    mu.iter().try_fold(SparsePolynomial::one(n), |acc, &k| {
        acc.multiply(&complete_homogeneous(k, n))
    })
}

/// The alternant `det(x_i^{exponents_j})` in `exponents.len()` variables.
pub fn alternant(exponents: &[u32]) -> Result<SparsePolynomial> {
    let n = exponents.len();
    let mut out = SparsePolynomial::zero(n);
    for w in signed_permutations(n) {
        let mut e = vec![0; n];
        for (j, &i) in w.perm.iter().enumerate() {
            e[i] = exponents[j];
        }
        out.add_term(Monomial(e), w.sign)?;
    }
    Ok(out)
}

/// Coordinates of a symmetric homogeneous polynomial in the Schur basis.
///
/// Repeatedly takes the lexicographically largest monomial, which for a
/// symmetric polynomial has decreasing exponents, reads its coefficient `c`
/// and subtracts `c · S_κ` for that partition `κ`. The Kostka matrix is
/// unitriangular, so this terminates with the unique coordinates.
pub fn schur_decompose(p: &SparsePolynomial) -> Result<SchurExpansion> {
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let degree = p.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    let n = p.nvars();
    // each step removes one partition of `degree` from the support for good
    let limit = partitions_of(degree as i64, n).len().max(p.num_terms());

    let mut rest = p.clone();
    let mut out = SchurExpansion::new();
    let mut steps = 0;
    while let Some((lead, c)) = rest.leading_term() {
        if steps == limit {
            return Err(Error::DecompositionStalled(steps));
        }
        steps += 1;
        let kappa = Partition::new(lead.exponents().iter().map(|&e| e as i64).collect())
            .map_err(|_| Error::NotSymmetric)?;
        rest = rest.sub(&schur_polynomial(&kappa, n)?.scale(c)?)?;
        out.add(&kappa, c)?;
    }
    Ok(out)
}

/// Both sides of Cauchy's identity in `x_1..x_n, y_1..y_n`, truncated at
/// total degree `maxdeg`: the product of geometric series
/// `∏ 1/(1 - x_i y_j)` and `Σ_μ S_μ(x) S_μ(y)`.
///
/// Variables are ordered `x_1, ..., x_n, y_1, ..., y_n`.
pub fn cauchy_sides(n: usize, maxdeg: u32) -> Result<(SparsePolynomial, SparsePolynomial)> {
    if n > 3 || maxdeg > 8 {
        return Err(Error::SizeBound(format!(
            "Cauchy check supports n <= 3 and maxdeg <= 8, got n = {n}, maxdeg = {maxdeg}"
        )));
    }
    let vars = 2 * n;
    let maxdeg = maxdeg as u64;

    let mut lhs = SparsePolynomial::one(vars);
    for i in 0..n {
        for j in 0..n {
            let mut series = SparsePolynomial::zero(vars);
            for k in 0..=(maxdeg / 2) as u32 {
                let mut e = vec![0; vars];
                e[i] = k;
                e[n + j] = k;
                series.add_term(Monomial(e), 1)?;
            }
            lhs = lhs.multiply_truncated(&series, maxdeg)?;
        }
    }

    let mut rhs = SparsePolynomial::zero(vars);
    for m in 0..=(maxdeg / 2) as i64 {
        for mu in partitions_of(m, n) {
            let s = schur_polynomial(&mu, n)?;
            let (sx, sy) = (embed(&s, vars, 0), embed(&s, vars, n));
            rhs = rhs.add(&sx.multiply(&sy)?)?;
        }
    }
    Ok((lhs, rhs.truncate(maxdeg)))
}

/// Compares both sides of the truncated Cauchy identity exactly.
pub fn cauchy_truncated_check(n: usize, maxdeg: u32) -> Result<bool> {
    let (lhs, rhs) = cauchy_sides(n, maxdeg)?;
    Ok(lhs == rhs)
}

/// Re-reads `p` in `vars` variables, with its variable `i` placed at
/// `offset + i`.
fn embed(p: &SparsePolynomial, vars: usize, offset: usize) -> SparsePolynomial {
    SparsePolynomial {
        nvars: vars,
        terms: p
            .terms
            .iter()
            .map(|(m, &c)| {
                let mut e = vec![0; vars];
                e[offset..offset + p.nvars].copy_from_slice(&m.0);
                (Monomial(e), c)
            })
            .collect(),
    }
}

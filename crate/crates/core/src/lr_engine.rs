//! Littlewood–Richardson coefficients through Kostka numbers.
//!
//! Everything here works with `n` rows and the staircase `ρ = (n-1, ..., 0)`.
//! Four routes to `c^ν_{λμ}` are available through [`lr_coefficient`]:
//!
//! * [`LrMethod::Signed`]: sum `sgn(w) K_{μ, w(ν+ρ) - (λ+ρ)}` over all
//!   `w ∈ S_n`, sorting each content vector into a partition first.
//! * [`LrMethod::Matching`]: list `ψ ⊴ μ`, then count the permutations `w`
//!   (with signs) for which `w(ν+ρ) - (λ+ρ)` is a rearrangement of `ψ`.
//! * [`LrMethod::Steinberg`]: double alternating sum of Kostant partition
//!   function values.
//! * [`LrMethod::Oracle`]: the LR rule, see [`lr_rule_count`].
//!
//! [`schur_product_expand`] gives the full expansion of `S_λ S_μ` in one go.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::kostant::kostant_partition_local;
use crate::partitions::{
    check_bounds, distinct_rearrangements, enumerate_dominated, is_dominated, signed_permutations,
    sort_with_sign, staircase, Partition, WeightVector,
};
use crate::tableaux::{kostka_kostant, kostka_ssyt, lr_rule_count};

/// Largest row count accepted by [`lr_steinberg`], which has `(n!)²` terms.
pub const MAX_STEINBERG_PARTS: usize = 6;

/// How Kostka numbers are obtained inside the LR formulas.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum KostkaMethod {
    /// Horizontal-strip tableau count.
    #[default]
    Ssyt,
    /// Alternating sum of Kostant partition function values.
    Kostant,
}

impl FromStr for KostkaMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "ssyt" => Ok(KostkaMethod::Ssyt),
            "kostant" => Ok(KostkaMethod::Kostant),
            other => Err(format!(
                "unknown Kostka method {other:?} (expected ssyt or kostant)"
            )),
        }
    }
}

/// Kostka number `K_{shape, content}` for `content` a partition padded to
/// `n` entries.
pub fn kostka(
    shape: &Partition,
    content: &Partition,
    n: usize,
    method: KostkaMethod,
) -> Result<i64> {
    match method {
        KostkaMethod::Ssyt => {
            let k = kostka_ssyt(shape, content.parts())?;
            i64::try_from(k).map_err(|_| Error::Overflow("Kostka number"))
        }
        KostkaMethod::Kostant => kostka_kostant(shape, &content.padded(n)?.to_weight(), n),
    }
}

/// Route used by [`lr_coefficient`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum LrMethod {
    Signed,
    #[default]
    Matching,
    Steinberg,
    Oracle,
}

impl LrMethod {
    pub const ALL: [LrMethod; 4] = [
        LrMethod::Signed,
        LrMethod::Matching,
        LrMethod::Steinberg,
        LrMethod::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LrMethod::Signed => "signed",
            LrMethod::Matching => "matching",
            LrMethod::Steinberg => "steinberg",
            LrMethod::Oracle => "oracle",
        }
    }
}

impl fmt::Display for LrMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LrMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        LrMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                format!("unknown LR method {s:?} (expected matching, signed, steinberg or oracle)")
            })
    }
}

/// Coordinates of a symmetric polynomial in the Schur basis.
///
/// Keys are stored without trailing zeros; zero coefficients are never kept.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, i64>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `coeff` to the coefficient of `nu`.
    pub fn add(&mut self, nu: &Partition, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        let key = nu.trimmed();
        let entry = self.terms.entry(key.clone()).or_insert(0);
        *entry = entry
            .checked_add(coeff)
            .ok_or(Error::Overflow("Schur expansion"))?;
        if *entry == 0 {
            self.terms.remove(&key);
        }
        Ok(())
    }

    pub fn coefficient(&self, nu: &Partition) -> i64 {
        self.terms.get(&nu.trimmed()).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending lexicographic order of the partition.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> + '_ {
        self.terms.iter().rev().map(|(p, &c)| (p, c))
    }
}

impl FromIterator<(Partition, i64)> for SchurExpansion {
    fn from_iter<I: IntoIterator<Item = (Partition, i64)>>(iter: I) -> Self {
        let mut e = SchurExpansion::new();
        for (p, c) in iter {
            e.add(&p, c).expect("coefficient overflow");
        }
        e
    }
}

fn shifted(p: &Partition, rho: &WeightVector) -> Vec<i64> {
    p.parts()
        .iter()
        .zip(rho.entries())
        .map(|(a, b)| a + b)
        .collect()
}

/// Expands `S_λ S_μ` in `n` variables as
/// `Σ_{ξ ⊴ μ} K_{μξ} Σ_{σ(ξ)} sgn(η) S_{η(λ + σ(ξ) + ρ) − ρ}`,
/// where `σ(ξ)` runs over the distinct rearrangements of `ξ` and `η` sorts
/// `λ + σ(ξ) + ρ` into decreasing order. Rearrangements giving a repeated
/// entry contribute nothing.
///
/// ```
/// use lrkostka::{schur_product_expand, Partition};
/// let lambda: Partition = "5,3,2".parse().unwrap();
/// let mu: Partition = "4,3,3".parse().unwrap();
/// let e = schur_product_expand(&lambda, &mu, 3).unwrap();
/// assert_eq!(e.coefficient(&"9,6,5".parse().unwrap()), 1);
/// ```
pub fn schur_product_expand(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
) -> Result<SchurExpansion> {
    schur_product_expand_with(lambda, mu, n, KostkaMethod::default())
}

pub fn schur_product_expand_with(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    method: KostkaMethod,
) -> Result<SchurExpansion> {
    let lambda = lambda.padded(n)?;
    let mu = mu.padded(n)?;
    check_bounds(lambda.size() + mu.size(), n)?;
    let rho = staircase(n);
    let base = shifted(&lambda, &rho);

    let mut out = SchurExpansion::new();
    for xi in enumerate_dominated(&mu, n)? {
        let k = kostka(&mu, &xi, n, method)?;
        for arrangement in distinct_rearrangements(&xi) {
            let v: Vec<i64> = base
                .iter()
                .zip(arrangement.entries())
                .map(|(a, b)| a + b)
                .collect();
            let s = sort_with_sign(&v.into());
            if s.degenerate {
                continue;
            }
            let nu: Vec<i64> = s
                .sorted
                .entries()
                .iter()
                .zip(rho.entries())
                .map(|(a, b)| a - b)
                .collect();
            out.add(&Partition::from_sorted_unchecked(nu), s.sign * k)?;
        }
    }
    Ok(out)
}

/// Pads the three partitions to `n` rows and checks the size bounds.
/// Returns `None` when `|ν| ≠ |λ| + |μ|`, in which case the coefficient is 0.
fn prepare(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
) -> Result<Option<(Partition, Partition, Partition)>> {
    let (l, m, v) = (lambda.padded(n)?, mu.padded(n)?, nu.padded(n)?);
    check_bounds(l.size() + m.size(), n)?;
    if v.size() != l.size() + m.size() {
        return Ok(None);
    }
    Ok(Some((l, m, v)))
}

/// One permutation's contribution to [`lr_signed_kostka`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedKostkaTerm {
    /// `w`, acting by `w(v)[i] = v[w[i]]`.
    pub permutation: Vec<usize>,
    pub sign: i64,
    /// `w(ν+ρ) − (λ+ρ)`.
    pub vector: WeightVector,
    /// `vector` sorted into decreasing order.
    pub sorted: WeightVector,
    /// `sorted` is a partition dominated by `μ`.
    pub dominated: bool,
    /// `K_{μ, sorted}`; zero unless `dominated`.
    pub kostka: i64,
}

impl SignedKostkaTerm {
    pub fn contribution(&self) -> i64 {
        self.sign * self.kostka
    }
}

/// Every term of the signed Kostka sum, one per permutation of `ν + ρ`.
pub fn signed_kostka_terms(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
    method: KostkaMethod,
) -> Result<Vec<SignedKostkaTerm>> {
    let (l, m, v) = (lambda.padded(n)?, mu.padded(n)?, nu.padded(n)?);
    check_bounds(l.size() + m.size(), n)?;
    let rho = staircase(n);
    let (ls, vs) = (shifted(&l, &rho), shifted(&v, &rho));
    let mut out = Vec::new();
    for w in signed_permutations(n) {
        let vector: Vec<i64> = w.apply(&vs).iter().zip(&ls).map(|(a, b)| a - b).collect();
        let mut sorted = vector.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let psi = Partition::new(sorted.clone()).ok();
        let dominated = psi.as_ref().is_some_and(|p| is_dominated(p, &m));
        let kostka = match (&psi, dominated) {
            (Some(p), true) => kostka(&m, p, n, method)?,
            _ => 0,
        };
        out.push(SignedKostkaTerm {
            permutation: w.perm,
            sign: w.sign,
            vector: vector.into(),
            sorted: sorted.into(),
            dominated,
            kostka,
        });
    }
    Ok(out)
}

/// `c^ν_{λμ} = Σ_{w ∈ S_n} sgn(w) K_{μ, ψ_w}` with `ψ_w` the decreasing sort
/// of `w(ν+ρ) − (λ+ρ)`. Terms with a negative entry, or with `ψ_w ⋬ μ`, are
/// skipped.
pub fn lr_signed_kostka(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
) -> Result<i64> {
    lr_signed_kostka_with(lambda, mu, nu, n, KostkaMethod::default())
}

pub fn lr_signed_kostka_with(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
    method: KostkaMethod,
) -> Result<i64> {
    if prepare(lambda, mu, nu, n)?.is_none() {
        return Ok(0);
    }
    signed_kostka_terms(lambda, mu, nu, n, method)?
        .iter()
        .try_fold(0i64, |acc, t| acc.checked_add(t.contribution()))
        .ok_or(Error::Overflow("signed Kostka sum"))
}

/// Signed number of permutations `w` with `w(ν+ρ) − (λ+ρ)` a rearrangement
/// of `psi`.
///
/// Position `i` carries the offset `(λ+ρ)_i`; positions are matched in order
/// against unused entries of `ν+ρ` whose difference is still available in
/// `psi`'s multiset. Every complete matching is one `w`. All matchings are
/// enumerated, since different ones carry different signs and may cancel.
pub fn matching_signed_count(
    psi: &Partition,
    lambda: &Partition,
    nu: &Partition,
    n: usize,
) -> Result<i64> {
    let (psi, l, v) = (psi.padded(n)?, lambda.padded(n)?, nu.padded(n)?);
    let rho = staircase(n);
    let (ls, vs) = (shifted(&l, &rho), shifted(&v, &rho));

    let mut available: BTreeMap<i64, usize> = BTreeMap::new();
    for &x in psi.parts() {
        *available.entry(x).or_default() += 1;
    }
    let mut used = vec![false; n];
    let mut perm = Vec::with_capacity(n);
    Ok(match_positions(
        &ls,
        &vs,
        &mut available,
        &mut used,
        &mut perm,
    ))
}

fn match_positions(
    offsets: &[i64],
    targets: &[i64],
    available: &mut BTreeMap<i64, usize>,
    used: &mut [bool],
    perm: &mut Vec<usize>,
) -> i64 {
    let i = perm.len();
    if i == offsets.len() {
        let inversions = (0..i)
            .flat_map(|a| (a + 1..i).map(move |b| (a, b)))
            .filter(|&(a, b)| perm[a] > perm[b])
            .count();
        return if inversions % 2 == 0 { 1 } else { -1 };
    }
    let mut total = 0;
    for k in 0..targets.len() {
        if used[k] {
            continue;
        }
        let diff = targets[k] - offsets[i];
        let Some(slot) = available.get_mut(&diff).filter(|c| **c > 0) else {
            continue;
        };
        *slot -= 1;
        used[k] = true;
        perm.push(k);
        total += match_positions(offsets, targets, available, used, perm);
        perm.pop();
        used[k] = false;
        *available.get_mut(&diff).expect("present") += 1;
    }
    total
}

/// `c^ν_{λμ}` by listing `ψ ⊴ μ` and matching each against `ν + ρ`.
///
/// ```
/// use lrkostka::{lr_matching, Partition};
/// let p = |s: &str| s.parse::<Partition>().unwrap();
/// assert_eq!(lr_matching(&p("2,1"), &p("2,1"), &p("3,2,1"), 3).unwrap(), 2);
/// ```
pub fn lr_matching(lambda: &Partition, mu: &Partition, nu: &Partition, n: usize) -> Result<i64> {
    lr_matching_with(lambda, mu, nu, n, KostkaMethod::default())
}

pub fn lr_matching_with(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
    method: KostkaMethod,
) -> Result<i64> {
    let Some((l, m, v)) = prepare(lambda, mu, nu, n)? else {
        return Ok(0);
    };
    let mut total = 0i64;
    for psi in enumerate_dominated(&m, n)? {
        let signed = matching_signed_count(&psi, &l, &v, n)?;
        if signed == 0 {
            continue;
        }
        let k = kostka(&m, &psi, n, method)?;
        total = signed
            .checked_mul(k)
            .and_then(|t| total.checked_add(t))
            .ok_or(Error::Overflow("matching sum"))?;
    }
    Ok(total)
}

/// `c^ν_{λμ} = Σ_{σ,τ ∈ S_n} sgn(στ) 𝔓(σ(λ+ρ) + τ(μ+ρ) − (ν+2ρ))`.
///
/// Limited to `n <= 6`.
pub fn lr_steinberg(lambda: &Partition, mu: &Partition, nu: &Partition, n: usize) -> Result<i64> {
    if n > MAX_STEINBERG_PARTS {
        return Err(Error::SizeBound(format!(
            "Steinberg's formula needs (n!)^2 terms; n = {n} exceeds {MAX_STEINBERG_PARTS}"
        )));
    }
    let Some((l, m, v)) = prepare(lambda, mu, nu, n)? else {
        return Ok(0);
    };
    let rho = staircase(n);
    let (ls, ms) = (shifted(&l, &rho), shifted(&m, &rho));
    let target: Vec<i64> = shifted(&v, &rho)
        .iter()
        .zip(rho.entries())
        .map(|(a, b)| a + b)
        .collect();

    let perms = signed_permutations(n);
    let mut memo = HashMap::new();
    let mut total = 0i64;
    for s in &perms {
        let ls = s.apply(&ls);
        for t in &perms {
            let arg: Vec<i64> = t
                .apply(&ms)
                .iter()
                .zip(&ls)
                .zip(&target)
                .map(|((a, b), c)| a + b - c)
                .collect();
            let p = kostant_partition_local(&arg, &mut memo)?;
            if p == 0 {
                continue;
            }
            let p = i64::try_from(p).map_err(|_| Error::Overflow("Steinberg sum"))?;
            total = total
                .checked_add(s.sign * t.sign * p)
                .ok_or(Error::Overflow("Steinberg sum"))?;
        }
    }
    Ok(total)
}

/// `c^ν_{λμ}` through the chosen route.
pub fn lr_coefficient(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
    method: LrMethod,
) -> Result<i64> {
    match method {
        LrMethod::Signed => lr_signed_kostka(lambda, mu, nu, n),
        LrMethod::Matching => lr_matching(lambda, mu, nu, n),
        LrMethod::Steinberg => lr_steinberg(lambda, mu, nu, n),
        LrMethod::Oracle => {
            let (l, m, v) = (lambda.padded(n)?, mu.padded(n)?, nu.padded(n)?);
            check_bounds(l.size() + m.size(), n)?;
            let c = lr_rule_count(&v, &l, &m)?;
            i64::try_from(c).map_err(|_| Error::Overflow("LR tableau count"))
        }
    }
}

/// The pair of suffix-sum partitions realizing `K_{λμ} = c^τ_{σλ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KingPair {
    pub sigma: Partition,
    pub tau: Partition,
}

/// `τ_i = μ_i + μ_{i+1} + ⋯` and `σ_i = μ_{i+1} + μ_{i+2} + ⋯`.
///
/// ```
/// use lrkostka::{king_embedding, Partition};
/// let pair = king_embedding(&"4,3,3".parse().unwrap());
/// assert_eq!(pair.sigma.parts(), &[6, 3, 0]);
/// assert_eq!(pair.tau.parts(), &[10, 6, 3]);
/// ```
pub fn king_embedding(mu: &Partition) -> KingPair {
    let mut tau: Vec<i64> = mu.parts().to_vec();
    for i in (0..tau.len().saturating_sub(1)).rev() {
        tau[i] += tau[i + 1];
    }
    let sigma: Vec<i64> = (0..tau.len())
        .map(|i| tau.get(i + 1).copied().unwrap_or(0))
        .collect();
    KingPair {
        sigma: Partition::from_sorted_unchecked(sigma),
        tau: Partition::from_sorted_unchecked(tau),
    }
}

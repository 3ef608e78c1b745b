//! Cross-method agreement sweeps.
//!
//! [`verify`] runs every LR route against the LR rule on all triples up to a
//! size bound, and both Kostka routes against each other.

use std::fmt;

use crate::error::Result;
use crate::lr_engine::{lr_coefficient, LrMethod, MAX_STEINBERG_PARTS};
use crate::partitions::{partitions_of, Partition, WeightVector};
use crate::tableaux::{kostka_kostant, kostka_ssyt};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub lambda: Partition,
    pub mu: Partition,
    /// Empty for Kostka checks.
    pub nu: Partition,
    pub method: String,
    pub value: i64,
    pub oracle_value: i64,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lambda=({}) mu=({}) nu=({}) method={} value={} oracle={}",
            self.lambda, self.mu, self.nu, self.method, self.value, self.oracle_value
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub cases_run: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn merge(&mut self, other: VerifyReport) {
        self.cases_run += other.cases_run;
        self.mismatches.extend(other.mismatches);
    }
}

/// Every ordered triple `(λ, μ, ν)` with at most `n` parts each and
/// `|λ| + |μ| = |ν| <= max_size`.
pub fn lr_triples(max_size: i64, n: usize) -> Vec<(Partition, Partition, Partition)> {
    let mut out = Vec::new();
    for total in 0..=max_size {
        let targets = partitions_of(total, n);
        for a in 0..=total {
            for lambda in partitions_of(a, n) {
                for mu in partitions_of(total - a, n) {
                    for nu in &targets {
                        out.push((lambda.clone(), mu.clone(), nu.clone()));
                    }
                }
            }
        }
    }
    out
}

/// Signed, matching and (for `n <= 6`) Steinberg routes against the LR rule.
pub fn verify_lr(max_size: i64, n: usize) -> Result<VerifyReport> {
    let methods: Vec<LrMethod> = [LrMethod::Signed, LrMethod::Matching, LrMethod::Steinberg]
        .into_iter()
        .filter(|&m| m != LrMethod::Steinberg || n <= MAX_STEINBERG_PARTS)
        .collect();
    let mut report = VerifyReport::default();
    for (lambda, mu, nu) in lr_triples(max_size, n) {
        let oracle = lr_coefficient(&lambda, &mu, &nu, n, LrMethod::Oracle)?;
        for &method in &methods {
            let value = lr_coefficient(&lambda, &mu, &nu, n, method)?;
            if value != oracle {
                report.mismatches.push(Mismatch {
                    lambda: lambda.clone(),
                    mu: mu.clone(),
                    nu: nu.clone(),
                    method: method.name().to_string(),
                    value,
                    oracle_value: oracle,
                });
            }
        }
        report.cases_run += 1;
    }
    Ok(report)
}

/// All compositions of `m` into `n` non-negative parts.
pub fn compositions(m: i64, n: usize) -> Vec<Vec<i64>> {
    fn rec(left: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if slots == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in (0..=left).rev() {
            cur.push(x);
            rec(left - x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if m == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(m, n, &mut Vec::new(), &mut out);
    out
}

/// Tableau count against the Kostant alternating sum for every shape with
/// `|λ| <= max_size` and every composition content of length `n`.
pub fn verify_kostka(max_size: i64, n: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for m in 0..=max_size {
        for shape in partitions_of(m, n) {
            for content in compositions(m, n) {
                let ssyt = kostka_ssyt(&shape, &content)? as i64;
                let kostant = kostka_kostant(&shape, &WeightVector::from(content.clone()), n)?;
                if ssyt != kostant {
                    report.mismatches.push(Mismatch {
                        lambda: shape.clone(),
                        mu: Partition::empty(),
                        nu: Partition::empty(),
                        method: format!("kostant content=({})", WeightVector::from(content)),
                        value: kostant,
                        oracle_value: ssyt,
                    });
                }
                report.cases_run += 1;
            }
        }
    }
    Ok(report)
}

/// Both sweeps.
pub fn verify(max_size: i64, n: usize) -> Result<VerifyReport> {
    let mut report = verify_lr(max_size, n)?;
    report.merge(verify_kostka(max_size, n)?);
    Ok(report)
}

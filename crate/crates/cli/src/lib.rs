//! Command-line front end for `lrkostka`.
//!
//! [`run`] parses arguments, dispatches to the library and writes either plain
//! text or a single JSON object. It returns the process exit code:
//!
//! * `0` on success,
//! * `1` on malformed input,
//! * `2` when a verification sweep or identity check finds a mismatch,
//! * `3` when an input exceeds the supported size bounds.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use lrkostka::{
    check_bounds, common_length, enumerate_dominated, is_dominated, king_embedding,
    kostant_partition, kostka_kostant, kostka_ssyt, lr_coefficient, schur_polynomial,
    schur_product_expand, verify, Error, KostkaMethod, LrMethod, Partition, WeightVector,
};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_SIZE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "lrkostka",
    version,
    about = "Kostka numbers and Littlewood-Richardson coefficients"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Littlewood-Richardson coefficient c^ν_{λμ}
    Lr {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        /// signed, matching, steinberg or oracle
        #[arg(long, default_value = "matching")]
        method: String,
        #[command(flatten)]
        common: Common,
    },
    /// Kostka number: tableaux of a shape with a given content
    Kostka {
        #[arg(long, allow_hyphen_values = true)]
        shape: String,
        #[arg(long, allow_hyphen_values = true)]
        content: String,
        /// ssyt or kostant
        #[arg(long, default_value = "ssyt")]
        method: String,
        #[command(flatten)]
        common: Common,
    },
    /// Schur expansion of S_λ S_μ
    SchurProduct {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[command(flatten)]
        common: Common,
    },
    /// Schur polynomial S_λ(x_1, ..., x_n)
    SchurPoly {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        common: Common,
    },
    /// Kostant partition function of a weight vector
    Kostant {
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        #[arg(long)]
        json: bool,
    },
    /// Partitions dominated by μ, or a single dominance test with --xi
    Dominated {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        xi: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Skew shape τ/σ whose LR coefficients recover Kostka numbers for content μ
    KingEmbed {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        json: bool,
    },
    /// Truncated Cauchy identity in 2n variables
    CauchyCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        maxdeg: u32,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check every LR and Kostka method on all small inputs
    Verify {
        #[arg(long)]
        max_size: i64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Number of rows; defaults to the largest part count among the inputs
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    json: bool,
}

/// A failed command: the message for standard error and the exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidPartition(_)
            | Error::TooManyParts { .. }
            | Error::NotDominated { .. } => EXIT_INPUT,
            Error::SizeBound(_) | Error::Overflow(_) => EXIT_SIZE,
            _ => EXIT_MISMATCH,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<String> for Failure {
    fn from(message: String) -> Self {
        Failure {
            code: EXIT_INPUT,
            message,
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: e.to_string(),
        }
    }
}

/// Output of a successful command.
struct Report {
    text: String,
    json: Value,
    code: i32,
}

impl Report {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Report {
            text: text.into(),
            json,
            code: EXIT_OK,
        }
    }
}

/// Runs the command line `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_INPUT
                }
            };
        }
    };
    let json = wants_json(&cli.command);
    match dispatch(cli.command) {
        Ok(report) => {
            let written = if json {
                writeln!(out, "{}", report.json)
            } else {
                writeln!(out, "{}", report.text)
            };
            match written {
                Ok(()) => report.code,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    EXIT_INPUT
                }
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn wants_json(command: &Command) -> bool {
    match command {
        Command::Lr { common, .. }
        | Command::Kostka { common, .. }
        | Command::SchurProduct { common, .. }
        | Command::SchurPoly { common, .. }
        | Command::Dominated { common, .. } => common.json,
        Command::Kostant { json, .. }
        | Command::KingEmbed { json, .. }
        | Command::CauchyCheck { json, .. }
        | Command::Verify { json, .. } => *json,
    }
}

fn partition(s: &str) -> Result<Partition, Failure> {
    Ok(s.parse()?)
}

fn parts(p: &Partition) -> Value {
    json!(p.parts())
}

fn dispatch(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Lr {
            lambda,
            mu,
            nu,
            method,
            common,
        } => {
            let method: LrMethod = method.parse()?;
            let (l, m, v) = (partition(&lambda)?, partition(&mu)?, partition(&nu)?);
            let (n, padded) = common_length(&[&l, &m, &v], common.n)?;
            let c = lr_coefficient(&l, &m, &v, n, method)?;
            Ok(Report::ok(
                c.to_string(),
                json!({
                    "coeff": c,
                    "lambda": parts(&padded[0]),
                    "method": method.name(),
                    "mu": parts(&padded[1]),
                    "n": n,
                    "nu": parts(&padded[2]),
                }),
            ))
        }
        Command::Kostka {
            shape,
            content,
            method,
            common,
        } => {
            let method: KostkaMethod = method.parse()?;
            let shape = partition(&shape)?;
            let content: WeightVector = content.parse()?;
            if content.entries().iter().any(|&c| c < 0) {
                return Err(Error::InvalidPartition(format!(
                    "content ({content}) has a negative entry"
                ))
                .into());
            }
            let needed = shape.num_parts().max(content.len());
            let n = match common.n {
                Some(n) if n < needed => {
                    return Err(Error::TooManyParts { parts: needed, n }.into());
                }
                Some(n) => n,
                None => needed,
            };
            let shape = shape.padded(n)?;
            let mut entries = content.entries().to_vec();
            entries.resize(n, 0);
            check_bounds(shape.size().max(entries.iter().sum()), n)?;
            let k = match method {
                KostkaMethod::Ssyt => i64::try_from(kostka_ssyt(&shape, &entries)?)
                    .map_err(|_| Error::Overflow("Kostka number"))?,
                KostkaMethod::Kostant => {
                    kostka_kostant(&shape, &WeightVector::from(entries.clone()), n)?
                }
            };
            Ok(Report::ok(
                k.to_string(),
                json!({
                    "content": entries,
                    "kostka": k,
                    "method": method_name(method),
                    "n": n,
                    "shape": parts(&shape),
                }),
            ))
        }
        Command::SchurProduct { lambda, mu, common } => {
            let (l, m) = (partition(&lambda)?, partition(&mu)?);
            let (n, padded) = common_length(&[&l, &m], common.n)?;
            let expansion = schur_product_expand(&l, &m, n)?;
            let mut text = Vec::new();
            let mut terms = Vec::new();
            for (nu, c) in expansion.terms() {
                let nu = nu.padded(n)?;
                text.push(format!("{c} * S({nu})"));
                terms.push(json!({ "coeff": c, "nu": parts(&nu) }));
            }
            let text = if text.is_empty() {
                "0".to_string()
            } else {
                text.join("\n")
            };
            Ok(Report::ok(
                text,
                json!({
                    "lambda": parts(&padded[0]),
                    "mu": parts(&padded[1]),
                    "n": n,
                    "terms": terms,
                }),
            ))
        }
        Command::SchurPoly { lambda, common } => {
            let l = partition(&lambda)?;
            let (n, padded) = common_length(&[&l], common.n)?;
            check_bounds(l.size(), n)?;
            let poly = schur_polynomial(&l, n)?;
            let terms: Vec<Value> = poly
                .terms()
                .rev()
                .map(|(m, c)| json!({ "coeff": c, "exponents": m.exponents() }))
                .collect();
            Ok(Report::ok(
                poly.to_string(),
                json!({ "lambda": parts(&padded[0]), "n": n, "terms": terms }),
            ))
        }
        Command::Kostant { vector, .. } => {
            let v: WeightVector = vector.parse()?;
            let positive: i64 = v.entries().iter().filter(|&&x| x > 0).sum();
            check_bounds(positive, v.len())?;
            let count = kostant_partition(&v)?;
            Ok(Report::ok(
                count.to_string(),
                json!({ "count": count, "vector": v.entries() }),
            ))
        }
        Command::Dominated { mu, xi, common } => {
            let m = partition(&mu)?;
            match xi {
                Some(xi) => {
                    let x = partition(&xi)?;
                    let (n, padded) = common_length(&[&m, &x], common.n)?;
                    let d = is_dominated(&x, &m);
                    Ok(Report::ok(
                        d.to_string(),
                        json!({
                            "dominated": d,
                            "mu": parts(&padded[0]),
                            "n": n,
                            "xi": parts(&padded[1]),
                        }),
                    ))
                }
                None => {
                    let (n, padded) = common_length(&[&m], common.n)?;
                    check_bounds(m.size(), n)?;
                    let below = enumerate_dominated(&m, n)?;
                    let text: Vec<String> = below.iter().map(|p| p.to_string()).collect();
                    let list: Vec<Value> = below.iter().map(parts).collect();
                    Ok(Report::ok(
                        text.join("\n"),
                        json!({ "mu": parts(&padded[0]), "n": n, "partitions": list }),
                    ))
                }
            }
        }
        Command::KingEmbed { mu, .. } => {
            let m = partition(&mu)?;
            check_bounds(m.size(), m.num_parts())?;
            let pair = king_embedding(&m);
            Ok(Report::ok(
                format!("sigma {}\ntau {}", pair.sigma, pair.tau),
                json!({ "mu": parts(&m), "sigma": parts(&pair.sigma), "tau": parts(&pair.tau) }),
            ))
        }
        Command::CauchyCheck { n, maxdeg, .. } => {
            let passed = lrkostka::cauchy_truncated_check(n, maxdeg)?;
            let mut report = Report::ok(
                if passed { "ok" } else { "mismatch" },
                json!({ "maxdeg": maxdeg, "n": n, "passed": passed }),
            );
            if !passed {
                report.code = EXIT_MISMATCH;
            }
            Ok(report)
        }
        Command::Verify { max_size, n, .. } => {
            if max_size < 0 {
                return Err(
                    Error::InvalidPartition(format!("negative size bound {max_size}")).into(),
                );
            }
            check_bounds(max_size, n)?;
            let report = verify(max_size, n)?;
            let mut text = vec![
                format!("cases run: {}", report.cases_run),
                format!("mismatches: {}", report.mismatches.len()),
            ];
            text.extend(report.mismatches.iter().map(|m| m.to_string()));
            let mismatches: Vec<Value> = report
                .mismatches
                .iter()
                .map(|m| {
                    json!({
                        "lambda": parts(&m.lambda),
                        "method": m.method,
                        "mu": parts(&m.mu),
                        "nu": parts(&m.nu),
                        "oracle_value": m.oracle_value,
                        "value": m.value,
                    })
                })
                .collect();
            Ok(Report {
                text: text.join("\n"),
                json: json!({
                    "cases_run": report.cases_run,
                    "max_size": max_size,
                    "mismatches": mismatches,
                    "n": n,
                }),
                code: if report.passed() {
                    EXIT_OK
                } else {
                    EXIT_MISMATCH
                },
            })
        }
    }
}

fn method_name(method: KostkaMethod) -> &'static str {
    match method {
        KostkaMethod::Ssyt => "ssyt",
        KostkaMethod::Kostant => "kostant",
    }
}

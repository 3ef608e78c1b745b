//! Exact Kostka numbers and Littlewood–Richardson coefficients.
//!
//! The crate computes `c^ν_{λμ}` (the coefficient of `S_ν` in `S_λ S_μ`) in
//! several independent ways and lets them check one another:
//!
//! * as a signed sum of Kostka numbers over the symmetric group,
//! * by matching the partitions `ψ ⊴ μ` against `ν + ρ`,
//! * through Steinberg's double sum of Kostant partition function values,
//! * through the Littlewood–Richardson rule on skew tableaux,
//! * by decomposing the product of Schur polynomials into the Schur basis.
//!
//! All arithmetic is exact in 64-bit integers. Coefficient routines accept at
//! most [`MAX_PARTS`] rows and `|λ| + |μ| <= MAX_TOTAL`; overflow is reported
//! as [`Error::Overflow`].
//!
//! ```
//! use lrkostka::{lr_coefficient, LrMethod, Partition};
//!
//! let lambda: Partition = "5,3,2".parse()?;
//! let mu: Partition = "4,3,3".parse()?;
//! let nu: Partition = "9,6,5".parse()?;
//! for method in LrMethod::ALL {
//!     assert_eq!(lr_coefficient(&lambda, &mu, &nu, 3, method)?, 1);
//! }
//! # Ok::<(), lrkostka::Error>(())
//! ```

mod error;
pub mod kostant;
pub mod lr_engine;
pub mod partitions;
pub mod symfunc;
pub mod tableaux;
pub mod verify;

#[cfg(doctest)]
mod book;

pub use error::{Error, Result};
pub use kostant::{kostant_partition, kostant_partition_with, KostantCache};
pub use lr_engine::{
    king_embedding, kostka, lr_coefficient, lr_matching, lr_matching_with, lr_signed_kostka,
    lr_signed_kostka_with, lr_steinberg, matching_signed_count, schur_product_expand,
    schur_product_expand_with, signed_kostka_terms, KingPair, KostkaMethod, LrMethod,
    SchurExpansion, SignedKostkaTerm, MAX_STEINBERG_PARTS,
};
pub use partitions::{
    check_bounds, common_length, distinct_rearrangements, enumerate_dominated, is_dominated,
    partitions_of, signed_permutations, sort_with_sign, stabilizer_order, staircase, Partition,
    SignedPermutation, SignedSort, WeightVector, MAX_PARTS, MAX_TOTAL,
};
pub use symfunc::{
    alternant, cauchy_sides, cauchy_truncated_check, complete_homogeneous,
    complete_homogeneous_product, schur_decompose, schur_polynomial, Monomial, SparsePolynomial,
};
pub use tableaux::{
    construct_ssyt, construct_ssyt_trace, enumerate_ssyt, enumerate_ssyt_bounded,
    for_each_ssyt_bounded, kostka_kostant, kostka_ssyt, lr_rule_count, lr_tableaux, Construction,
    SkewShape, Tableau,
};
pub use verify::{verify, verify_kostka, verify_lr, Mismatch, VerifyReport};

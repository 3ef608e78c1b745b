use lrkostka::{
    alternant, complete_homogeneous_product, kostka_ssyt, lr_rule_count, partitions_of,
    schur_decompose, schur_polynomial, SparsePolynomial,
};
use proptest::prelude::*;

#[test]
fn schur_polynomials_are_symmetric() {
    for n in 1..=4 {
        for m in 0..=8 {
            for lambda in partitions_of(m, n) {
                let s = schur_polynomial(&lambda, n).unwrap();
                for i in 0..n.saturating_sub(1) {
                    assert_eq!(s.swap_variables(i, i + 1), s, "{lambda} in {n} variables");
                }
            }
        }
    }
}

#[test]
fn bialternant_identity() {
    for n in 1..=3 {
        let rho: Vec<u32> = (0..n as u32).rev().collect();
        let vandermonde = alternant(&rho).unwrap();
        for m in 0..=6 {
            for lambda in partitions_of(m, n) {
                let shifted: Vec<u32> = lambda
                    .parts()
                    .iter()
                    .zip(&rho)
                    .map(|(&a, &b)| a as u32 + b)
                    .collect();
                let lhs = alternant(&shifted).unwrap();
                let rhs = schur_polynomial(&lambda, n)
                    .unwrap()
                    .multiply(&vandermonde)
                    .unwrap();
                assert_eq!(lhs, rhs, "{lambda}");
            }
        }
    }
}

#[test]
fn product_decomposition_matches_lr_rule() {
    let n = 3;
    for total in 0..=8 {
        for a in 0..=total {
            for lambda in partitions_of(a, n) {
                for mu in partitions_of(total - a, n) {
                    let prod = schur_polynomial(&lambda, n)
                        .unwrap()
                        .multiply(&schur_polynomial(&mu, n).unwrap())
                        .unwrap();
                    let e = schur_decompose(&prod).unwrap();
                    for nu in partitions_of(total, n) {
                        assert_eq!(
                            e.coefficient(&nu),
                            lr_rule_count(&nu, &lambda, &mu).unwrap() as i64
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn complete_homogeneous_products_expand_by_kostka() {
    for m in 0..=6 {
        let n = m.max(1) as usize;
        for mu in partitions_of(m, n) {
            let exps: Vec<u32> = mu.parts().iter().map(|&x| x as u32).collect();
            let h = complete_homogeneous_product(&exps, n).unwrap();
            let e = schur_decompose(&h).unwrap();
            for lambda in partitions_of(m, n) {
                assert_eq!(
                    e.coefficient(&lambda),
                    kostka_ssyt(&lambda, mu.parts()).unwrap() as i64,
                    "H_{mu} at {lambda}"
                );
            }
        }
    }
}

fn arb_poly() -> impl Strategy<Value = SparsePolynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, 3), -4i64..=4), 0..6).prop_map(|terms| {
        terms
            .into_iter()
            .fold(SparsePolynomial::zero(3), |acc, (e, c)| {
                acc.add(&SparsePolynomial::monomial(3, e, c)).unwrap()
            })
    })
}

proptest! {
    #[test]
    fn multiplication_is_commutative(p in arb_poly(), q in arb_poly()) {
        prop_assert_eq!(p.multiply(&q).unwrap(), q.multiply(&p).unwrap());
    }

    #[test]
    fn multiplication_is_associative(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        let left = p.multiply(&q).unwrap().multiply(&r).unwrap();
        let right = p.multiply(&q.multiply(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn decompose_inverts_schur_sums(coeffs in prop::collection::vec(-3i64..=3, 4)) {
        // random integer combination of the Schur polynomials of degree 4 in 3 variables
        let basis = partitions_of(4, 3);
        let mut p = SparsePolynomial::zero(3);
        for (lambda, &c) in basis.iter().zip(&coeffs) {
            p = p.add(&schur_polynomial(lambda, 3).unwrap().scale(c).unwrap()).unwrap();
        }
        let e = schur_decompose(&p).unwrap();
        for (lambda, &c) in basis.iter().zip(&coeffs) {
            prop_assert_eq!(e.coefficient(lambda), c);
        }
    }
}

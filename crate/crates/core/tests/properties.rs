use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use spverlinde::completion::{completion_rank_formula, delta, local_dimension_groebner_permuted, DEFAULT_BUDGET};
use spverlinde::exact::arith::{binomial_u64, prime_factors};
use spverlinde::exact::{cyclotomic_poly, det_bareiss, snf_diagonal, CycField, CycNumber, IntMatrix};
use spverlinde::fusion::{braun_douglas, braun_douglas_via_sums, gamma_polynomials, gamma_via_exterior};
use spverlinde::ktheory::{
    coproduct_values, epsilon, lhp_additive_path_table, lhp_ring, truncated_oracle, y_group_oracle, y_group_p_part,
    TwoVarPoly,
};
use spverlinde::sym::{eval_cyc, sym, sym_closed_form};

fn matrix(n: usize, entries: &[i64]) -> IntMatrix {
    IntMatrix::from_i64(&entries.chunks(n).map(|r| r.to_vec()).collect::<Vec<_>>())
}

/// Product of elementary row additions and swaps applied to the identity.
fn unimodular(n: usize, ops: &[(usize, usize, i64)]) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    for &(a, b, k) in ops {
        let (a, b) = (a % n, b % n);
        if a == b {
            u.swap_rows(a, (a + 1) % n);
            continue;
        }
        for c in 0..n {
            let add = &u[(b, c)] * k;
            u[(a, c)] += add;
        }
    }
    u
}

fn square() -> impl Strategy<Value = (usize, Vec<i64>)> {
    (2usize..=4).prop_flat_map(|n| (Just(n), prop::collection::vec(-6i64..=6, n * n)))
}

fn ops() -> impl Strategy<Value = Vec<(usize, usize, i64)>> {
    prop::collection::vec((0usize..4, 0usize..4, -3i64..=3), 0..8)
}

fn cyc(field: &std::sync::Arc<CycField>, cs: &[(i64, i64)]) -> CycNumber {
    let q: Vec<BigRational> = cs
        .iter()
        .map(|&(a, b)| BigRational::new(a.into(), b.into()))
        .collect();
    CycNumber::from_coeffs(field, &q)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_survives_scrambling((n, a) in square(), l in ops(), r in ops()) {
        let a = matrix(n, &a);
        let s = &(&unimodular(n, &l) * &a) * &unimodular(n, &r);
        prop_assert_eq!(snf_diagonal(&s), snf_diagonal(&a));
    }

    #[test]
    fn det_is_multiplicative((n, a) in square(), b in prop::collection::vec(-6i64..=6, 16)) {
        let a = matrix(n, &a);
        let b = matrix(n, &b[..n * n]);
        prop_assert_eq!(det_bareiss(&(&a * &b)), det_bareiss(&a) * det_bareiss(&b));
    }

    #[test]
    fn cyclotomic_inverse(
        order in 3u64..=24,
        a in prop::collection::vec((-5i64..=5, 1i64..=4), 1..8),
        b in prop::collection::vec((-5i64..=5, 1i64..=4), 1..8),
    ) {
        let f = CycField::new(order);
        let a = cyc(&f, &a);
        let b = cyc(&f, &b);
        prop_assume!(!a.is_zero());
        let back = &(&a * &b) * &a.inv().unwrap();
        prop_assert_eq!(back, b);
        prop_assert!(CycNumber::zeta_pow(&f, order as i64).is_one());
        prop_assert!(eval_cyc(&cyclotomic_poly(order), &CycNumber::zeta_pow(&f, 1)).is_zero());
    }

    #[test]
    fn sym_matches_closed_form(m in 2u64..=8, i in 1i64..=10, j in 0usize..=10) {
        prop_assume!(i % m as i64 != 0);
        let f = CycField::new(2 * m);
        let pt = &CycNumber::zeta_pow(&f, i) + &CycNumber::zeta_pow(&f, -i);
        prop_assert_eq!(eval_cyc(&sym(j), &pt), sym_closed_form(m, i, j as i64).unwrap());
    }

    #[test]
    fn sym_coefficient_parity(m in 1usize..=30) {
        let p = sym(m - 1);
        let nz: Vec<usize> = p.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(d, _)| d).collect();
        prop_assert_eq!(nz.len(), m.div_ceil(2));
        prop_assert!(nz.iter().all(|d| (m - 1 - d) % 2 == 0));
    }

    #[test]
    fn gamma_two_routes(n in 1u32..=6) {
        prop_assert_eq!(gamma_polynomials(n), gamma_via_exterior(n));
    }

    #[test]
    fn douglas_two_routes(m in 3u32..=16, n in 1u32..=5) {
        prop_assume!(m >= n + 2);
        let d = braun_douglas(m, n);
        prop_assert_eq!(&d, &braun_douglas_via_sums(m, n));
        for p in prime_factors(m as u64) {
            let divides = (&d % BigInt::from(p)).is_zero();
            prop_assert_eq!(divides, completion_rank_formula(m as u64, n as u64, p) > BigInt::zero());
            prop_assert_eq!(divides, delta(p, m as u64) >= n as u64);
        }
    }

    #[test]
    fn y_group_total_order(m in 2u64..=12, l in 1u64..=6) {
        for p in prime_factors(m) {
            let f = y_group_p_part(m, l, p);
            let o = y_group_oracle(m, l, p);
            let sum = (1..=l + 1).map(|r| epsilon(p, l, r, m)).sum::<u64>() as u32;
            prop_assert_eq!(f.order_exponent(), Some(sum));
            prop_assert_eq!(o.order_exponent(), Some(sum));
            prop_assert_eq!(&f, &o);
        }
    }

    #[test]
    fn coproduct_condition_is_delta(m in 2u64..=24, l in 1u32..=11) {
        for p in prime_factors(m) {
            let r = coproduct_values(m, l, p).unwrap();
            prop_assert!(r.consistent());
            prop_assert_eq!(r.coefficient_condition, l as u64 == delta(p, m));
        }
    }

    #[test]
    fn path_tables_are_disjoint(m in 2u64..=12, l in 1u32..=5, d in 1u32..=3) {
        for p in prime_factors(m) {
            let t = lhp_additive_path_table(m, l, p, d).unwrap();
            prop_assert!(t.disjoint());
            let inside = t
                .paths
                .iter()
                .flat_map(|x| x.cells.iter())
                .all(|&(n, r, c)| n < d && r < t.rows && c <= l);
            prop_assert!(inside);
            prop_assert!(truncated_oracle(m, l, p, d).is_finite());
        }
    }
}

fn two_var() -> impl Strategy<Value = Vec<(u32, u32, i64)>> {
    prop::collection::vec((0u32..6, 0u32..3, -60i64..=60), 1..6)
}

fn build(terms: &[(u32, u32, i64)]) -> TwoVarPoly {
    let mut f = TwoVarPoly::zero();
    for &(y, t, c) in terms {
        f.add_term(y, t, c.into());
    }
    f
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn lhp_reduction_is_confluent(
        m in 2u64..=12,
        l in 1u32..=4,
        f in two_var(),
        picks in prop::collection::vec(0usize..64, 64),
    ) {
        let ring = lhp_ring(m, l);
        let f = build(&f);
        let mut it = picks.into_iter().cycle();
        let a = ring.normal_form(&f);
        let b = ring.normal_form_with(&f, |n| it.next().unwrap() % n);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn lhp_product_is_commutative_and_associative(
        m in 2u64..=8,
        l in 1u32..=3,
        a in two_var(),
        b in two_var(),
        c in two_var(),
    ) {
        let ring = lhp_ring(m, l);
        let (a, b, c) = (build(&a), build(&b), build(&c));
        prop_assert_eq!(ring.mul(&a, &b), ring.mul(&b, &a));
        prop_assert_eq!(ring.mul(&ring.mul(&a, &b), &c), ring.mul(&a, &ring.mul(&b, &c)));
        let one = TwoVarPoly::monomial(BigInt::one(), 0, 0);
        prop_assert_eq!(ring.mul(&a, &one), ring.normal_form(&a));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn groebner_count_ignores_variable_order(m in 4u32..=9, n in 1u32..=3, swap in any::<bool>()) {
        prop_assume!(m >= n + 2 && binomial_u64(m as u64 - 1, n as u64) <= 36);
        for p in prime_factors(m as u64) {
            let id: Vec<usize> = (0..n as usize).collect();
            let mut perm = id.clone();
            perm.reverse();
            if swap && n >= 2 {
                perm.swap(0, 1);
            }
            let a = local_dimension_groebner_permuted(m, n, p, &id, DEFAULT_BUDGET).unwrap();
            let b = local_dimension_groebner_permuted(m, n, p, &perm, DEFAULT_BUDGET).unwrap();
            prop_assert_eq!(a, b);
            prop_assert_eq!(BigInt::from(a), completion_rank_formula(m as u64, n as u64, p));
        }
    }
}

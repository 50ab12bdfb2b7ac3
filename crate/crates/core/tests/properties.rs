mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use qspaces_core::disk::{
    self, disk_element_tn_member, f_q, monomial_pair_exponent, q_commutation_exponent, DiskElement,
    DiskMonomial,
};
use qspaces_core::lie::{distinguish, n_i, RootDatum, SubgroupData};
use qspaces_core::parse::{parse_disk, parse_su};
use qspaces_core::rep::{edge_margin, max_abs_on_columns, rep_matrix, TruncatedRep};
use qspaces_core::rewrite::Strategy as Reduction;
use qspaces_core::suq2::{self, quotient_by_gamma, tn_member, SuElement, SuMonomial, UnitaryLaurent};
use qspaces_core::{QScalar, TorusOrder};

fn orders() -> Vec<TorusOrder> {
    vec![
        TorusOrder::Finite(1),
        TorusOrder::Finite(2),
        TorusOrder::Finite(3),
        TorusOrder::Finite(4),
        TorusOrder::Infinite,
    ]
}

proptest! {
    #[test]
    fn qscalar_ring_axioms(a in arb_qscalar(), b in arb_qscalar(), c in arb_qscalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, QScalar::zero());
    }

    #[test]
    fn qscalar_conjugation(a in arb_qscalar(), b in arb_qscalar()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
    }

    #[test]
    fn qscalar_evaluation_is_multiplicative(a in arb_qscalar(), b in arb_qscalar(), q0 in 0.3f64..0.9) {
        let lhs = (&a * &b).eval(q0).unwrap();
        let rhs = a.eval(q0).unwrap() * b.eval(q0).unwrap();
        let scale = 1.0 + lhs.norm().max(rhs.norm());
        prop_assert!((lhs - rhs).norm() <= 1e-12 * scale);
    }

    #[test]
    fn qscalar_exact_division(a in arb_qscalar(), b in arb_nonzero_qscalar()) {
        prop_assert_eq!((&a * &b).checked_div(&b), Some(a));
    }

    #[test]
    fn su_reduction_is_strategy_independent(w in arb_su_word(), seed in any::<u64>()) {
        let left = suq2::normalize_with(QScalar::one(), &w, Reduction::Leftmost);
        let right = suq2::normalize_with(QScalar::one(), &w, Reduction::Rightmost);
        let random = suq2::normalize_with(QScalar::one(), &w, Reduction::Random(seed));
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(&left, &random);
        // Closed-form multiplication of the letters gives the same element.
        let product = w.iter().fold(SuElement::one(), |acc, &l| &acc * &suq2::generator(l));
        prop_assert_eq!(left, product);
    }

    #[test]
    fn su_associativity(a in arb_su_element(), b in arb_su_element(), c in arb_su_element()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn su_star_is_antilinear_antihomomorphism(a in arb_su_element(), b in arb_su_element(), c in arb_qscalar()) {
        prop_assert_eq!(a.star().star(), a.clone());
        prop_assert_eq!((&a * &b).star(), &b.star() * &a.star());
        prop_assert_eq!(a.scale(&c).star(), a.star().scale(&c.conj()));
    }

    #[test]
    fn su_grading(m1 in arb_su_monomial(), m2 in arb_su_monomial()) {
        let p = &SuElement::basis(m1) * &SuElement::basis(m2);
        prop_assert!(p.monomials().all(|m| m.i == m1.i + m2.i));
    }

    #[test]
    fn su_tn_is_subalgebra(m1 in arb_su_monomial(), m2 in arb_su_monomial()) {
        for n in orders() {
            let (a, b) = (SuElement::basis(m1), SuElement::basis(m2));
            if tn_member(&a, n) && tn_member(&b, n) {
                prop_assert!(tn_member(&(&a * &b), n));
                prop_assert!(tn_member(&a.star(), n));
            }
        }
    }

    #[test]
    fn gamma_quotient_is_unital_homomorphism(a in arb_su_element(), b in arb_su_element()) {
        let (qa, qb) = (quotient_by_gamma(&a), quotient_by_gamma(&b));
        prop_assert_eq!(quotient_by_gamma(&(&a * &b)), &qa * &qb);
        prop_assert_eq!(&qa * &qb, &qb * &qa);
        prop_assert_eq!(quotient_by_gamma(&SuElement::one()), UnitaryLaurent::one());
    }

    #[test]
    fn disk_reduction_is_strategy_independent(w in arb_disk_word(), seed in any::<u64>()) {
        let left = disk::disk_normalize_with(QScalar::one(), &w, Reduction::Leftmost);
        let right = disk::disk_normalize_with(QScalar::one(), &w, Reduction::Rightmost);
        let random = disk::disk_normalize_with(QScalar::one(), &w, Reduction::Random(seed));
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(&left, &random);
        let product = w.iter().fold(DiskElement::one(), |acc, &l| &acc * &DiskElement::basis(l.monomial()));
        prop_assert_eq!(left, product);
    }

    #[test]
    fn disk_associativity_and_star(a in arb_disk_element(), b in arb_disk_element(), c in arb_disk_element()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(a.star().star(), a.clone());
        prop_assert_eq!((&a * &b).star(), &b.star() * &a.star());
    }

    #[test]
    fn f_q_is_star_homomorphism(a in arb_su_element(), b in arb_su_element()) {
        prop_assert_eq!(f_q(&(&a * &b)), &f_q(&a) * &f_q(&b));
        prop_assert_eq!(f_q(&a.star()), f_q(&a).star());
    }

    #[test]
    fn f_q_kills_the_ideal(x in arb_su_element(), y in arb_su_element()) {
        let d = &suq2::gamma() - &suq2::gamma_star();
        prop_assert!(f_q(&(&(&x * &d) * &y)).is_zero());
    }

    #[test]
    fn quantum_plane_exponent_formula(j in 0u32..6, k in 0i64..5, j2 in 0u32..6, k2 in 0i64..5, star_side in any::<bool>()) {
        let sign = if star_side { -1 } else { 1 };
        let a = DiskMonomial::new(j, sign * k);
        let b = DiskMonomial::new(j2, sign * k2);
        let exact = q_commutation_exponent(&DiskElement::basis(a), &DiskElement::basis(b)).unwrap();
        prop_assert_eq!(exact, Some(monomial_pair_exponent(&a, &b).unwrap()));
    }

    #[test]
    fn oracle_agrees_with_exponent(a in arb_disk_monomial(), b in arb_disk_monomial()) {
        let (ea, eb) = (DiskElement::basis(a), DiskElement::basis(b));
        if let Some(m) = q_commutation_exponent(&ea, &eb).unwrap() {
            prop_assert_eq!(disk::brute_force_commutation_oracle(&ea, &eb), Some(QScalar::q_pow(m)));
        }
    }

    #[test]
    fn exponents_scale_with_powers(a in arb_disk_monomial(), b in arb_disk_monomial(), t in 1u32..4) {
        let (ea, eb) = (DiskElement::basis(a), DiskElement::basis(b));
        if let Some(m) = q_commutation_exponent(&ea, &eb).unwrap() {
            prop_assert_eq!(q_commutation_exponent(&ea, &eb.pow(t)).unwrap(), Some(t as i64 * m));
        }
    }

    #[test]
    fn disk_tn_is_subalgebra(a in arb_disk_monomial(), b in arb_disk_monomial()) {
        for n in orders() {
            let (ea, eb) = (DiskElement::basis(a), DiskElement::basis(b));
            if disk_element_tn_member(&ea, n) && disk_element_tn_member(&eb, n) {
                prop_assert!(disk_element_tn_member(&(&ea * &eb), n));
                prop_assert!(disk_element_tn_member(&ea.star(), n));
            }
        }
    }

    #[test]
    fn f_q_maps_tn_into_disk_tn(m in arb_su_monomial()) {
        for n in orders() {
            let a = SuElement::basis(m);
            if tn_member(&a, n) {
                prop_assert!(disk_element_tn_member(&f_q(&a), n));
            }
        }
    }

    #[test]
    fn printed_elements_reparse(a in arb_su_element(), d in arb_disk_element()) {
        prop_assert_eq!(parse_su(&a.to_string()).unwrap(), a);
        prop_assert_eq!(parse_disk(&d.to_string()).unwrap(), d);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn representation_is_multiplicative(a in arb_su_element(), b in arb_su_element()) {
        let rep = TruncatedRep::new(24, 0.5).unwrap();
        let (ma, mb) = (rep_matrix(&a, &rep), rep_matrix(&b, &rep));
        let cols = rep.dim() - edge_margin(&a) - edge_margin(&b);
        let diff = rep_matrix(&(&a * &b), &rep) - &ma * &mb;
        let scale = 1.0 + ma.norm() * mb.norm();
        prop_assert!(max_abs_on_columns(&diff, cols) <= 1e-10 * scale);
        // Single normal monomials are exact compressions, so the adjoint
        // holds on the whole window.
        let adj = rep_matrix(&a.star(), &rep) - ma.adjoint();
        prop_assert!(max_abs_on_columns(&adj, rep.dim()) <= 1e-10 * (1.0 + ma.norm()));
    }

    #[test]
    fn kernel_elements_vanish_numerically(x in arb_su_element(), y in arb_su_element()) {
        let rep = TruncatedRep::new(32, 0.5).unwrap();
        let d = &suq2::gamma() - &suq2::gamma_star();
        let k = &(&x * &d) * &y;
        let m = rep_matrix(&k, &rep);
        prop_assert!(max_abs_on_columns(&m, rep.dim()) <= 1e-10 * (1.0 + rep_matrix(&x, &rep).norm() * rep_matrix(&y, &rep).norm()));
    }

    #[test]
    fn n_i_ignores_choice_of_generators(
        gens in prop::collection::vec(prop::collection::vec(-6i64..=6, 2), 1..4),
        ops in prop::collection::vec((0usize..3, 0usize..3, -3i64..=3), 0..8),
    ) {
        let datum = RootDatum::from_type("B2").unwrap();
        let sub = SubgroupData::new(BTreeSet::new(), gens.clone(), &datum).unwrap();
        // Unimodular row operations on the generator list.
        let mut mixed = gens.clone();
        for (src, dst, k) in ops {
            let (src, dst) = (src % mixed.len(), dst % mixed.len());
            if src == dst {
                mixed[dst] = mixed[dst].iter().map(|x| -x).collect();
            } else {
                let row = mixed[src].clone();
                for (t, v) in mixed[dst].iter_mut().zip(row) {
                    *t += k * v;
                }
            }
        }
        let sub2 = SubgroupData::new(BTreeSet::new(), mixed, &datum).unwrap();
        for i in 0..2 {
            prop_assert_eq!(n_i(&sub, &datum, i).unwrap(), n_i(&sub2, &datum, i).unwrap());
        }
    }

    #[test]
    fn distinguish_is_symmetric(p in 0.01f64..=1.0, q in 0.01f64..=1.0) {
        let datum = RootDatum::from_type("A2").unwrap();
        let sub = SubgroupData::full_lattice(BTreeSet::new(), &datum).unwrap();
        prop_assert_eq!(
            distinguish(p, q, &sub, &datum).unwrap().verdict,
            distinguish(q, p, &sub, &datum).unwrap().verdict
        );
    }
}

#[test]
fn critical_pairs_join() {
    assert!(suq2::rewrite_system().non_joinable_overlaps().is_empty());
    assert!(disk::rewrite_system().non_joinable_overlaps().is_empty());
    assert!(!suq2::rewrite_system().critical_overlaps().is_empty());
}

#[test]
fn unit_normal_monomial_images() {
    // F_q(α^(i) γ^j γ*^k) is a single disk monomial.
    for i in -3..=3 {
        for j in 0..3 {
            for k in 0..3 {
                let img = f_q(&SuElement::basis(SuMonomial::new(i, j, k)));
                assert_eq!(img.len(), 1);
            }
        }
    }
}

use proptest::prelude::*;

use supersym::groupoid::{atypicality, separating_polynomial, vanishing_ideal_check, weyl_orbit};
use supersym::partition::enumerate_hook;
use supersym::poly::{coeff, ratio};
use supersym::supersym::{combination, decompose, is_supersymmetric, kernel_witness, phi_s, power_sum, super_schur};
use supersym::{Binding, Block, GroupElement, Monomial, Point, Polynomial, Var, VarSpec};

fn arb_poly(spec: VarSpec, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let lo = if spec.laurent { -2 } else { 0 };
    let term = (-6i64..=6, 1i64..=3, proptest::collection::vec(lo..=3i32, spec.nvars()));
    proptest::collection::vec(term, 0..=max_terms).prop_map(move |ts| {
        Polynomial::from_terms(spec, ts.into_iter().map(|(a, b, e)| (Monomial::new(e), ratio(a, b)))).unwrap()
    })
}

fn s22() -> VarSpec {
    VarSpec::polynomial(2, 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in arb_poly(s22(), 4), q in arb_poly(s22(), 4), r in arb_poly(s22(), 4)) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn disjoint_substitutions_compose(p in arb_poly(s22(), 5), a in -3i64..=3, q in arb_poly(s22(), 2)) {
        let first = [(Var::X(0), Binding::Scalar(coeff(a)))];
        let q = q.substitute(&[(Var::X(0), Binding::Scalar(coeff(0)))]).unwrap();
        let second = [(Var::Y(1), Binding::Poly(q.clone()))];
        let both = [(Var::X(0), Binding::Scalar(coeff(a))), (Var::Y(1), Binding::Poly(q))];
        let stepwise = p.substitute(&first).unwrap().substitute(&second).unwrap();
        prop_assert_eq!(stepwise, p.substitute(&both).unwrap());
    }

    #[test]
    fn division_undoes_multiplication(p in arb_poly(s22(), 4), d in arb_poly(s22(), 3)) {
        prop_assume!(!d.is_zero());
        prop_assert_eq!((&p * &d).divide_exact(&d).unwrap(), p);
    }

    #[test]
    fn laurent_division_undoes_multiplication(p in arb_poly(VarSpec::laurent(1, 2), 4), d in arb_poly(VarSpec::laurent(1, 2), 3)) {
        prop_assume!(!d.is_zero());
        let q = (&p * &d).divide_exact(&d).unwrap();
        prop_assert_eq!(&q * &d, &p * &d);
    }

    #[test]
    fn group_action_is_multiplicative(p in arb_poly(s22(), 4), q in arb_poly(s22(), 4), swap_x in any::<bool>(), swap_y in any::<bool>()) {
        let xp = if swap_x { vec![1, 0] } else { vec![0, 1] };
        let yp = if swap_y { vec![1, 0] } else { vec![0, 1] };
        let w = GroupElement::new(xp, yp).unwrap();
        prop_assert_eq!((&p * &q).apply_group(&w).unwrap(), p.apply_group(&w).unwrap() * q.apply_group(&w).unwrap());
    }

    #[test]
    fn alternation_is_antisymmetric(p in arb_poly(VarSpec::polynomial(3, 1), 4), i in 0usize..2) {
        let a = p.alternate(Block::X).unwrap();
        let t = GroupElement::transposition(3, 1, Block::X, i);
        prop_assert_eq!(a.apply_group(&t).unwrap(), -a);
    }

    #[test]
    fn laurent_derivative_is_a_derivation(p in arb_poly(VarSpec::laurent(2, 1), 4), q in arb_poly(VarSpec::laurent(2, 1), 4)) {
        let d = |f: &Polynomial| f.laurent_derivative(1, 0).unwrap();
        prop_assert_eq!(d(&(&p * &q)), d(&p) * &q + &p * d(&q));
    }

    #[test]
    fn decompose_inverts_combination(coeffs in proptest::collection::vec(-4i64..=4, 7)) {
        let basis: Vec<_> = (0..=3).flat_map(|d| enumerate_hook(2, 1, d)).collect();
        let terms: Vec<_> = basis.iter().cloned().zip(coeffs.iter().copied().cycle()).collect();
        let f = combination(2, 1, &terms).unwrap();
        let dec = decompose(&f).unwrap();
        for (lam, c) in &terms {
            prop_assert_eq!(dec.coefficient(lam), coeff(*c));
        }
    }

    #[test]
    fn kernel_membership_matches_witness(c in proptest::collection::vec(-3i64..=3, 3)) {
        let f = power_sum(1, 2, 2).unwrap().pow(2).scale(&coeff(c[0]))
            + power_sum(2, 2, 2).unwrap().scale(&coeff(c[1]))
            + supersym::supersym::t_element(2, 2).scale(&coeff(c[2]));
        prop_assert_eq!(phi_s(&f).unwrap().is_zero(), kernel_witness(&f).is_ok());
    }

    #[test]
    fn separators_for_random_typical_orbits(
        x in proptest::collection::vec(-5i64..=5, 2), y in proptest::collection::vec(-5i64..=5, 2),
        px in proptest::collection::vec(-5i64..=5, 2), py in proptest::collection::vec(-5i64..=5, 2),
        seed in any::<u64>(),
    ) {
        let q = Point::additive_ints(&x, &y);
        let p = Point::additive_ints(&px, &py);
        prop_assume!(atypicality(&q) == 0);
        let v = weyl_orbit(&q);
        prop_assume!(!v.contains(&p));
        let f = separating_polynomial(&v, &p, seed).unwrap();
        prop_assert!(is_supersymmetric(&f));
        prop_assert!(vanishing_ideal_check(&v, &f).unwrap());
        prop_assert_ne!(f.evaluate(&p).unwrap(), coeff(0));
    }
}

#[test]
fn super_schur_supersymmetric_up_to_three_by_three() {
    for m in 0..=3 {
        for n in 0..=3 {
            for d in 0..=4 {
                for lam in enumerate_hook(m, n, d) {
                    let f = super_schur(&lam, m, n).unwrap();
                    assert!(is_supersymmetric(&f), "F_{lam} in ({m},{n})");
                }
            }
        }
    }
}

#[test]
fn products_of_supersymmetric_polynomials_stay_supersymmetric() {
    let fams: Vec<_> = (1..=3).flat_map(|d| enumerate_hook(2, 2, d)).collect();
    for a in &fams {
        for b in &fams {
            let f = super_schur(a, 2, 2).unwrap() * super_schur(b, 2, 2).unwrap();
            assert!(is_supersymmetric(&f));
        }
    }
}

#[test]
fn stability_in_each_block() {
    for d in 0..=5 {
        for lam in enumerate_hook(3, 1, d) {
            let big = super_schur(&lam, 3, 2).unwrap();
            let restricted = big
                .substitute(&[(Var::Y(1), Binding::Scalar(coeff(0)))])
                .and_then(|p| p.drop_vars(&[Var::Y(1)]))
                .unwrap();
            assert_eq!(restricted, super_schur(&lam, 3, 1).unwrap());
        }
    }
}

use proptest::prelude::*;
use std::sync::Arc;
use syzalg::poly::Polynomial;
use syzalg::ring::{GradedRing, Monomial};
use syzalg::series::{RationalSeries, ZPoly};
use syzalg::text::{parse_poly, render_poly};

fn ring3() -> Arc<GradedRing> {
    GradedRing::standard(vec!["t1", "t2", "w"]).unwrap()
}

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    (0u16..4, 0u16..4, 0u16..4).prop_map(|(a, b, c)| Monomial::from_exps(&[a, b, c]))
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(arb_monomial(), 0..8)
        .prop_map(|monos| Polynomial::from_monomials(&ring3(), monos))
}

proptest! {
    #[test]
    fn addition_is_involutive_commutative_associative(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
        prop_assert!(f.add(&f).unwrap().is_zero());
        prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
        prop_assert_eq!(
            f.add(&g).unwrap().add(&h).unwrap(),
            f.add(&g.add(&h).unwrap()).unwrap()
        );
    }

    #[test]
    fn multiplication_distributes_and_squares_termwise(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
        prop_assert_eq!(
            f.mul(&g.add(&h).unwrap()).unwrap(),
            f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
        );
        // Frobenius: (f+g)^2 = f^2 + g^2
        prop_assert_eq!(
            f.add(&g).unwrap().square(),
            f.square().add(&g.square()).unwrap()
        );
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
    }

    #[test]
    fn canonical_form_is_construction_order_independent(mut monos in proptest::collection::vec(arb_monomial(), 0..8)) {
        let a = Polynomial::from_monomials(&ring3(), monos.clone());
        monos.reverse();
        let b = Polynomial::from_monomials(&ring3(), monos);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn parser_round_trips_rendered_polynomials(f in arb_poly()) {
        let text = render_poly(&f);
        let back = parse_poly(&ring3(), &text).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn series_shift_distributes_over_sum(k in -3i64..6, a in 0u8..4, b in 0u8..4) {
        let s1 = RationalSeries::new(ZPoly::term(a as i64, 1), vec![1, 2]).unwrap();
        let s2 = RationalSeries::new(ZPoly::term(b as i64, 1), vec![1]).unwrap();
        let lhs = s1.add(&s2).shifted(k);
        let rhs = s1.shifted(k).add(&s2.shifted(k));
        prop_assert!(lhs.eq_series(&rhs));
    }
}

proptest! {
    #[test]
    fn parser_never_panics(s in "[a-z0-9+*^ ;:._-]{0,40}") {
        let _ = parse_poly(&ring3(), &s);
    }

    #[test]
    fn module_file_parser_never_panics(s in "[a-z0-9+*^ ;:,\n#_-]{0,120}") {
        let _ = syzalg::text::parse_module_file(&s);
    }
}

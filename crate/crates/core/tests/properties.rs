use g2_core::jacobi::{pbw_normal_form, uea_multiply, weight_of_monomial, Generator, UeaElement, WeightVector};
use g2_core::scalars::{gamma_ratio_falling, ParamMonomial};
use g2_core::verma::{raising_weight, VermaElement, VermaModule};
use g2_core::weyl::{
    parse_machine, parse_plain, to_machine, to_plain, transform_to_final, transform_to_original, DiffOp, Frame,
    OpKey, PolyFunction,
};
use g2_core::{Bindings, Param, ParamPoly, Rational};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

fn param_poly() -> impl Strategy<Value = ParamPoly> {
    prop::collection::vec(((0u16..=2, 0u16..=2, 0u16..=1), small_rational()), 0..4).prop_map(|ts| {
        ParamPoly::from_terms(ts.into_iter().map(|((a, b, c), r)| (ParamMonomial([a, b, c]), r)))
    })
}

fn generator() -> impl Strategy<Value = Generator> {
    (0usize..15).prop_map(Generator::from_index)
}

fn word(max: usize) -> impl Strategy<Value = Vec<Generator>> {
    prop::collection::vec(generator(), 0..=max)
}

fn exps(max_total: u8) -> impl Strategy<Value = [u8; 6]> {
    prop::array::uniform6(0u8..=max_total).prop_filter("degree", move |e| e.iter().sum::<u8>() <= max_total)
}

fn diff_op(frame: Frame, deg: u8) -> impl Strategy<Value = DiffOp> {
    prop::collection::vec((exps(deg), exps(deg), param_poly()), 0..4).prop_map(move |ts| {
        DiffOp::from_terms(frame, ts.into_iter().map(|(p, d, c)| (OpKey { poly: p, deriv: d }, c)))
    })
}

fn numeric_op(frame: Frame, deg: u8) -> impl Strategy<Value = DiffOp> {
    prop::collection::vec((exps(deg), exps(deg), small_rational()), 0..4).prop_map(move |ts| {
        DiffOp::from_terms(
            frame,
            ts.into_iter().map(|(p, d, c)| (OpKey { poly: p, deriv: d }, ParamPoly::constant(c))),
        )
    })
}

fn raising_vector() -> impl Strategy<Value = VermaElement> {
    prop::collection::vec((prop::array::uniform6(0u16..=1), small_rational()), 1..3).prop_map(|ts| {
        let mut v = VermaElement::zero();
        for (e, c) in ts {
            v.add_term(e, ParamPoly::constant(c));
        }
        v
    })
}

fn monomials_up_to(deg: u8) -> Vec<[u8; 6]> {
    let mut out = Vec::new();
    let mut e = [0u8; 6];
    fn rec(i: usize, left: u8, e: &mut [u8; 6], out: &mut Vec<[u8; 6]>) {
        if i == 6 {
            out.push(*e);
            return;
        }
        for k in 0..=left {
            e[i] = k;
            rec(i + 1, left - k, e, out);
        }
        e[i] = 0;
    }
    rec(0, deg, &mut e, &mut out);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn param_poly_ring_axioms(a in param_poly(), b in param_poly(), c in param_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn substitution_is_a_ring_map(a in param_poly(), b in param_poly(), x in param_poly(), y in param_poly()) {
        // images avoid L1 and Lh so the bindings stay acyclic
        let drop = Bindings::new().with(Param::L1, ParamPoly::int(1)).with(Param::LHat, ParamPoly::int(3));
        let bind = Bindings::new()
            .with(Param::L1, x.substitute(&drop).unwrap())
            .with(Param::LHat, y.substitute(&drop).unwrap());
        let s = |p: &ParamPoly| p.substitute(&bind).unwrap();
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    }

    #[test]
    fn falling_ratio_splits(a in 0u32..=6, b in 0u32..=6, x in param_poly()) {
        let shifted = &x - &ParamPoly::int(a as i64);
        prop_assert_eq!(
            gamma_ratio_falling(&x, a + b),
            &gamma_ratio_falling(&x, a) * &gamma_ratio_falling(&shifted, b)
        );
    }

    #[test]
    fn pbw_normal_form_is_associative(w1 in word(2), w2 in word(2), w3 in word(2)) {
        let (a, b, c) = (pbw_normal_form(&w1), pbw_normal_form(&w2), pbw_normal_form(&w3));
        prop_assert_eq!(uea_multiply(&a, &uea_multiply(&b, &c)), uea_multiply(&uea_multiply(&a, &b), &c));
        let whole: Vec<Generator> = w1.iter().chain(&w2).chain(&w3).copied().collect();
        prop_assert_eq!(pbw_normal_form(&whole), uea_multiply(&a, &uea_multiply(&b, &c)));
    }

    #[test]
    fn weights_add(w1 in word(3), w2 in word(3)) {
        let wt = |w: &[Generator]| w.iter().fold(WeightVector::zero(), |acc, g| &acc + &g.weight());
        let prod = uea_multiply(&pbw_normal_form(&w1), &pbw_normal_form(&w2));
        let want = &wt(&w1) + &wt(&w2);
        for (m, _) in prod.terms() {
            prop_assert_eq!(weight_of_monomial(m), want.clone());
        }
    }

    #[test]
    fn verma_action_is_a_representation(w1 in word(3), w2 in word(3), v in raising_vector()) {
        let module = VermaModule::symbolic_central();
        let (u1, u2) = (pbw_normal_form(&w1), pbw_normal_form(&w2));
        prop_assert_eq!(module.act(&uea_multiply(&u1, &u2), &v), module.act(&u1, &module.act(&u2, &v)));
    }

    #[test]
    fn verma_action_is_weight_covariant(g in generator(), e in prop::array::uniform6(0u16..=2)) {
        let module = VermaModule::symbolic();
        let image = module.act_gen(g, &e);
        let want = &raising_weight(&e) + &g.weight();
        for (t, _) in image.terms() {
            prop_assert_eq!(raising_weight(t), want.clone());
        }
    }

    #[test]
    fn compose_is_associative(a in diff_op(Frame::Final, 2), b in diff_op(Frame::Final, 2), c in diff_op(Frame::Final, 2)) {
        let l = a.compose(&b).unwrap().compose(&c).unwrap();
        let r = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn transform_is_an_invertible_homomorphism(a in diff_op(Frame::Original, 2), b in diff_op(Frame::Original, 2)) {
        let t = |d: &DiffOp| transform_to_final(d).unwrap();
        prop_assert_eq!(t(&a.compose(&b).unwrap()), t(&a).compose(&t(&b)).unwrap());
        prop_assert_eq!(transform_to_original(&t(&a)).unwrap(), a.clone());
        prop_assert_eq!(t(&a).is_zero(), a.is_zero());
    }

    #[test]
    fn inverse_transform_is_left_inverse(a in diff_op(Frame::Final, 2)) {
        prop_assert_eq!(transform_to_final(&transform_to_original(&a).unwrap()).unwrap(), a);
    }

    #[test]
    fn machine_format_round_trips(a in diff_op(Frame::Final, 3)) {
        prop_assert_eq!(parse_machine(&to_machine(&a)).unwrap(), a.clone());
        prop_assert_eq!(parse_plain(&to_plain(&a), Frame::Final).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn compose_matches_sequential_application(a in numeric_op(Frame::Original, 3), b in numeric_op(Frame::Original, 3)) {
        let ab = a.compose(&b).unwrap();
        for e in monomials_up_to(6) {
            let f = PolyFunction::monomial(Frame::Original, e, ParamPoly::one());
            prop_assert_eq!(ab.apply(&f).unwrap(), a.apply(&b.apply(&f).unwrap()).unwrap());
        }
    }
}

#[test]
fn uea_identity_is_neutral() {
    let u = pbw_normal_form(&[Generator::Dm, Generator::A1p, Generator::H1]);
    assert_eq!(uea_multiply(&UeaElement::one(), &u), u);
}

use g2_core::intertwine::{build_operator, solve_central_charge, verify_intertwining, CentralConstraint, CentralMode};
use g2_core::singvec::{grid, validate_spec, FamilyKind};
use g2_core::weyl::{transform_to_final, Frame, PolyFunction};
use g2_core::Rational;
use rayon::prelude::*;

#[test]
fn grid_intertwines_at_unit_charge() {
    let work: Vec<_> = grid(2, 2)
        .into_iter()
        .flat_map(|s| Frame::BOTH.map(|f| (s.clone(), f)))
        .collect();
    let failures: Vec<String> = work
        .par_iter()
        .map(|(s, f)| verify_intertwining(s, *f, CentralMode::default()))
        .filter(|r| !r.pass())
        .map(|r| format!("{} {}: {:?}", r.spec.label(), r.frame, r.failing().map(|(g, _)| *g).collect::<Vec<_>>()))
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn operators_are_frame_natural() {
    for s in grid(2, 2) {
        let orig = build_operator(&s, Frame::Original);
        let fin = build_operator(&s, Frame::Final);
        assert_eq!(transform_to_final(&orig).unwrap(), fin, "{}", s.label());
    }
}

#[test]
fn derivative_order_matches_kets() {
    for s in grid(3, 3) {
        let want = s.closed_form().keys().map(|i| i.derivative_order()).max().unwrap();
        assert_eq!(build_operator(&s, Frame::Final).order(), want, "{}", s.label());
    }
}

#[test]
fn family_two_central_charge() {
    let s = validate_spec(FamilyKind::II, 1, None).unwrap();
    for f in Frame::BOTH {
        assert_eq!(
            solve_central_charge(&s, f),
            CentralConstraint::Finite { values: vec![Rational::one()], irrational_degree: 0 }
        );
    }
}

#[test]
fn family_one_kernel_witness() {
    let s = validate_spec(FamilyKind::I, 1, None).unwrap();
    let d = build_operator(&s, Frame::Final);
    // xi2 = index 1, eta2 = index 3
    for total in 0..=4u8 {
        for a in 0..=total {
            let mut e = [0u8; 6];
            e[1] = a;
            e[3] = total - a;
            let f = PolyFunction::monomial(Frame::Final, e, Rational::one().into());
            assert!(d.apply(&f).unwrap().is_zero(), "{e:?}");
        }
    }
    let xi1 = PolyFunction::var(Frame::Final, 0);
    assert!(!d.apply(&xi1).unwrap().is_zero());
}

#[test]
fn central_charge_survey() {
    let unit = CentralConstraint::Finite { values: vec![Rational::one()], irrational_degree: 0 };
    for s in grid(2, 2) {
        let want = if s.family.kind() == FamilyKind::I { CentralConstraint::All } else { unit.clone() };
        assert_eq!(solve_central_charge(&s, Frame::Final), want, "{}", s.label());
    }
}

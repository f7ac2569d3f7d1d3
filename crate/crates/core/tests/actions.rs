use g2_core::actions::{
    action_table, left_table, right_table, verify_frame_consistency, verify_homomorphism,
    verify_left_right_commute, verify_simplified_forms, Side, Variant,
};
use g2_core::jacobi::Generator;
use g2_core::weyl::{parse_plain, DiffOp, Frame};

fn op(s: &str) -> DiffOp {
    parse_plain(s, Frame::Final).unwrap()
}

#[test]
fn primary_final_left_table_fails_ten_pairs() {
    let t = action_table(Side::Left, Frame::Final, Variant::Primary).unwrap();
    let r = verify_homomorphism(t);
    assert_eq!((r.checked, r.passed()), (105, 95));
    let labels: Vec<&str> = r.failures.iter().map(|f| f.label.as_str()).collect();
    let mut want = vec![
        "(b1+, b1-)", "(b2+, c-)", "(c+, b1-)", "(d+, b1-)", "(d+, c-)",
        "(b1-, c-)", "(b1-, d-)", "(b2-, c-)", "(b2-, d-)", "(c-, d-)",
    ];
    let mut got = labels;
    got.sort();
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn simplified_variant_is_authoritative() {
    let r = verify_simplified_forms();
    assert_eq!(r.authoritative(), Some(Variant::Simplified));
    assert_eq!(left_table(Frame::Final).variant, Variant::Simplified);
    let diff = |g| r.differences.iter().find(|(h, _)| *h == g).unwrap().1.clone();
    assert_eq!(diff(Generator::B1m), op("4*L1*eta1 + L1*zeta*omega"));
    assert_eq!(diff(Generator::Cm), op("1/2*L2*eta2*omega"));
    assert!(diff(Generator::B2m).is_zero());
    assert!(diff(Generator::Dm).is_zero());
}

#[test]
fn left_and_right_actions_commute_on_52_pairs() {
    for f in Frame::BOTH {
        let r = verify_left_right_commute(f);
        assert_eq!((r.checked, r.passed()), (90, 52), "{f}");
        assert!(r.failures.iter().any(|x| x.label == "[L(h1), R(a1+)]"));
        assert!(!r.failures.iter().any(|x| x.label.starts_with("[L(Z)")));
    }
}

#[test]
fn frames_and_right_tables() {
    let r = verify_frame_consistency();
    assert_eq!((r.checked, r.passed()), (21, 21));
    for f in Frame::BOTH {
        let r = verify_homomorphism(right_table(f));
        assert_eq!((r.checked, r.passed()), (15, 15));
        let l = verify_homomorphism(left_table(f));
        assert_eq!((l.checked, l.passed()), (105, 105));
    }
}

#[test]
fn unsupported_variants_are_rejected() {
    assert!(action_table(Side::Right, Frame::Final, Variant::Simplified).is_err());
    assert!(action_table(Side::Left, Frame::Original, Variant::Simplified).is_err());
}

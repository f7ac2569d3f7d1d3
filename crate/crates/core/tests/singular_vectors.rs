use g2_core::singvec::{grid, nonnegative_range, oracle_check, validate_spec, Family, FamilyKind};
use g2_core::verma::HatKetIndex;
use rayon::prelude::*;

#[test]
fn grid_is_annihilated_by_lowering() {
    let specs = grid(3, 3);
    let failures: Vec<String> = specs
        .par_iter()
        .flat_map_iter(|s| {
            s.lowering_residuals()
                .into_iter()
                .filter(|(_, r)| !r.is_zero())
                .map(|(x, r)| format!("{} {x}: {r}", s.label()))
                .collect::<Vec<_>>()
        })
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn grid_matches_oracle() {
    let specs = grid(3, 3);
    let reports: Vec<_> = specs.par_iter().map(|s| (s.label(), oracle_check(s, 2024))).collect();
    for (label, r) in &reports {
        assert!(r.pass(), "{label}: {r:?}");
    }
}

#[test]
fn printed_ranges_are_the_nonnegative_ones() {
    for s in grid(6, 6) {
        let mut printed = s.summation_range();
        printed.sort();
        let mut natural = nonnegative_range(&s);
        natural.sort();
        assert_eq!(printed, natural, "{}", s.label());
    }
}

#[test]
fn closed_form_is_weight_homogeneous() {
    for s in grid(4, 4) {
        for idx in s.closed_form().keys() {
            assert_eq!(idx.weight(), s.weight_shift(), "{} {idx}", s.label());
        }
        assert_eq!(s.expand().weight(), Some(s.weight_shift()), "{}", s.label());
    }
}

#[test]
fn valid_third_family_pairs() {
    let pairs: Vec<(u32, u32)> = grid(3, 3)
        .iter()
        .filter(|s| s.family.kind() == FamilyKind::III)
        .map(|s| (s.p, s.q.unwrap()))
        .collect();
    assert_eq!(pairs, vec![(1, 2), (1, 3), (2, 3), (3, 1), (3, 2)]);
}

#[test]
fn family_three_b_uses_split_range() {
    let s = validate_spec(FamilyKind::III, 3, Some(2)).unwrap();
    assert_eq!(s.family, Family::IIIb);
    assert_eq!(
        s.summation_range(),
        vec![(0, 0), (0, 1), (0, 2), (1, 0), (1, 1)]
    );
    assert!(s.closed_form().contains_key(&HatKetIndex::new(1, 0, 1, 0)));
}

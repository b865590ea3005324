//! Witness maps over wider parameter ranges than the suites use.

use dihedrants::analysis::{is_cayley, DEFAULT_BUDGET};
use dihedrants::constructions::{cross_ladder, multi_cross_ladder};
use dihedrants::graphs::automorphism_group;
use dihedrants::perms::Verdict;
use dihedrants::witnesses::*;

#[test]
fn cross_ladder_maps() {
    for n in (4..=40).step_by(2) {
        let w = crossladder_iso(n).unwrap();
        assert!(w.all_hold(), "n={n}: {:?}", w.failing());
    }
}

#[test]
fn petersen_maps() {
    for n in (6..=42).step_by(4) {
        assert!(petersen_iso(n).unwrap().all_hold(), "n={n}");
        assert!(petersen_iso_rotation(n).unwrap().all_hold(), "n={n}");
    }
    assert!(petersen_iso(8).is_err());
}

#[test]
fn multi_cross_ladder_maps() {
    for m in 2..=20 {
        assert!(mcl_bicayley_iso(m).unwrap().all_hold(), "m={m}");
    }
    for m in (3..=21).step_by(2) {
        assert!(mcl_dihedral_iso(m).unwrap().all_hold(), "m={m}");
    }
    assert!(mcl_dihedral_iso(4).is_err());
    for m in (2..=20).step_by(2) {
        let w = mcl_even_delta(m).unwrap();
        assert!(w.all_hold(), "m={m}: {:?}", w.failing());
    }
    for m in (3..=21).step_by(6) {
        let w = mcl_beta(m).unwrap();
        assert!(w.all_hold(), "m={m}: {:?}", w.failing());
    }
}

#[test]
fn family_four_involution() {
    for l in [1, 5, 7] {
        let w = vnc48_g(l).unwrap();
        assert!(w.all_hold(), "l={l}: {:?}", w.failing());
    }
}

#[test]
fn even_twelve_m_maps() {
    for m in [2, 6, 10] {
        for variant in [1, 2] {
            let w = cayley_12m_even_g(m, variant).unwrap();
            assert!(w.all_hold(), "m={m} variant={variant}: {:?}", w.failing());
        }
    }
}

#[test]
fn odd_twelve_m_map_general_relations() {
    for (m, i) in [(1, 1), (3, 1), (3, 2), (5, 1), (5, 2), (5, 4), (7, 2)] {
        let w = cayley_12m_g(m, i).unwrap();
        assert!(w.verified, "m={m} i={i}");
        for name in [
            "g^4 = 1",
            "g^2 = R(a^6m)",
            "R(a^2i)g = gR(a^4i)gR(a^-2i)",
            "(R(a^2i)g)^3 = R(a^6i)",
            "|<R(a^2),R(b),g>| = 48m",
            "<R(a^2),R(b),g> regular",
        ] {
            let holds = w.relation(name).or_else(|| w.fact(name).map(|c| c.holds));
            assert_eq!(holds, Some(true), "m={m} i={i}: {name}");
        }
    }
}

#[test]
fn non_cayley_multi_cross_ladders() {
    for m in [5, 7] {
        assert_eq!(
            is_cayley(&multi_cross_ladder(m).unwrap(), DEFAULT_BUDGET)
                .unwrap()
                .verdict(),
            Verdict::No,
            "m={m}"
        );
    }
}

/// `|Aut(CL_{4m})| = 2^m·2m` for `m ≥ 3`: an independent swap of the two
/// parallel rungs in each of the `m` blocks, times the dihedral symmetry of
/// the `m`-cycle of blocks. `CL_8` is the cube.
#[test]
fn cross_ladder_automorphism_orders() {
    for m in 3..=8u32 {
        let order = automorphism_group(&cross_ladder(m).unwrap())
            .unwrap()
            .order()
            .unwrap();
        assert_eq!(order, (1u128 << m) * 2 * m as u128, "m={m}");
    }
    assert_eq!(
        automorphism_group(&cross_ladder(2).unwrap())
            .unwrap()
            .order(),
        Some(48)
    );
}

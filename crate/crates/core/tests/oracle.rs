//! The library against brute force.

mod common;

use common::*;
use dihedral_homometry::enumeration::{
    canonicalize, enumerate_dn, enumerate_zn, EnumerationOptions,
};
use dihedral_homometry::homometry::{decomposition_check, is_homometric, triviality_witness, Side};
use dihedral_homometry::lift::{enumerate_lifts, enumerate_lifts_with};
use dihedral_homometry::{DihedralElement, DihedralSet, Sign, ZnSet};

fn el(n: usize, (k, e): El) -> DihedralElement {
    DihedralElement::new(n, k as usize, if e == 1 { Sign::Plus } else { Sign::Minus }).unwrap()
}

fn sides() -> [(Side, bool); 2] {
    [(Side::Right, true), (Side::Left, false)]
}

#[test]
fn multiplication_table_matches() {
    for n in 1..=9 {
        for x in elements(n) {
            let lx = el(n as usize, x);
            assert_eq!(lx.inv(), el(n as usize, inv(x, n)));
            for y in elements(n) {
                let ly = el(n as usize, y);
                assert_eq!(lx.mul(&ly).unwrap(), el(n as usize, mul(x, y, n)));
                assert_eq!(
                    DihedralElement::right_int(&lx, &ly).unwrap(),
                    el(n as usize, mul(inv(x, n), y, n))
                );
                assert_eq!(
                    DihedralElement::left_int(&lx, &ly).unwrap(),
                    el(n as usize, mul(y, inv(x, n), n))
                );
            }
        }
    }
}

#[test]
fn interval_vectors_and_actions_match() {
    let n = 7;
    for s in subsets(n, 3).iter().step_by(5) {
        let lib = from_set(s, n as usize);
        assert_eq!(lib.right_iv().counts(), layout(&right_iv(s, n), n).as_slice());
        assert_eq!(lib.left_iv().counts(), layout(&left_iv(s, n), n).as_slice());
        for g in elements(n) {
            let lg = el(n as usize, g);
            assert_eq!(to_set(&lib.act_left(&lg).unwrap()), translate_left(g, s, n));
            assert_eq!(to_set(&lib.act_right(&lg).unwrap()), translate_right(s, g, n));
        }
    }
}

#[test]
fn decomposition_exhaustive_on_d6_triples() {
    let n = 6;
    let sets = subsets(n, 3);
    let lib: Vec<DihedralSet> = sets.iter().map(|s| from_set(s, 6)).collect();
    for (side, right) in sides() {
        let ivs: Vec<_> = sets.iter().map(|s| iv(s, n, right)).collect();
        let mut homometric = 0;
        for i in 0..sets.len() {
            for j in 0..sets.len() {
                let expected = ivs[i] == ivs[j];
                homometric += usize::from(expected);
                assert_eq!(decomposition_check(&lib[i], &lib[j], side).unwrap(), expected);
                assert_eq!(is_homometric(&lib[i], &lib[j], side).unwrap(), expected);
            }
        }
        assert!(homometric > sets.len(), "{side}: some non-diagonal hits");
    }
}

#[test]
fn triviality_witness_matches() {
    let n = 5;
    let sets = subsets(n, 3);
    for (side, right) in sides() {
        for a in sets.iter().step_by(3) {
            for b in sets.iter().step_by(7) {
                let witness = triviality_witness(&from_set(a, 5), &from_set(b, 5), side);
                assert_eq!(witness.is_some(), trivially_related(a, b, n, right));
            }
        }
    }
}

#[test]
fn dihedral_census_small_cells() {
    for (n, p) in [(4, 3), (5, 4), (6, 3), (6, 4), (7, 4), (8, 4), (8, 5)] {
        for (side, right) in sides() {
            for include_single_sign in [false, true] {
                let opts = EnumerationOptions {
                    jobs: 1,
                    include_single_sign,
                };
                let lib = enumerate_dn(n as usize, p, side, &opts).unwrap();
                assert_eq!(
                    lib.tuples,
                    census(n, p, right, include_single_sign),
                    "n={n} p={p} {side} single-sign={include_single_sign}"
                );
            }
        }
    }
}

#[test]
fn census_classes_are_nontrivial() {
    let report = enumerate_dn(8, 5, Side::Right, &EnumerationOptions::default()).unwrap();
    for class in &report.classes {
        for (i, a) in class.representatives.iter().enumerate() {
            for b in &class.representatives[i + 1..] {
                assert!(nontrivially_homometric(&to_set(a), &to_set(b), 8, true));
            }
        }
    }
}

#[test]
fn canonical_orbit_sizes() {
    let n = 6;
    for s in subsets(n, 4) {
        for (side, right) in sides() {
            let orbit: std::collections::BTreeSet<Set> = elements(n)
                .into_iter()
                .map(|g| if right { translate_left(g, &s, n) } else { translate_right(&s, g, n) })
                .collect();
            let c = canonicalize(&from_set(&s, 6), side);
            assert_eq!(c.orbit_size, orbit.len());
            assert!(orbit.contains(&to_set(&c.representative)));
        }
    }
}

#[test]
fn cyclic_census() {
    for n in 3..=13 {
        for p in 0..=n as usize {
            let lib = enumerate_zn(n as usize, p, &EnumerationOptions::default()).unwrap();
            assert_eq!(lib.tuples, zn_census(n, p), "n={n} p={p}");
        }
    }
}

#[test]
fn lift_search_matches_brute_force() {
    let a = ZnSet::parse(8, "0,1,3,4").unwrap();
    let b = ZnSet::parse(8, "0,1,2,5").unwrap();
    for (side, right) in sides() {
        for include in [false, true] {
            // Orbit pairs of non-trivially homometric sign assignments.
            let mut expected = std::collections::BTreeSet::new();
            let ra: Vec<i64> = a.residues().map(|r| r as i64).collect();
            let rb: Vec<i64> = b.residues().map(|r| r as i64).collect();
            for ma in 0..1 << ra.len() {
                for mb in 0..1 << rb.len() {
                    let la: Set = ra.iter().enumerate().map(|(i, &k)| (k, if ma >> i & 1 == 1 { -1 } else { 1 })).collect();
                    let lb: Set = rb.iter().enumerate().map(|(i, &k)| (k, if mb >> i & 1 == 1 { -1 } else { 1 })).collect();
                    if !include && (single_sign(&la) || single_sign(&lb)) {
                        continue;
                    }
                    if nontrivially_homometric(&la, &lb, 8, right) {
                        expected.insert((
                            canonicalize(&from_set(&la, 8), side).representative,
                            canonicalize(&from_set(&lb, 8), side).representative,
                        ));
                    }
                }
            }
            let found = if include {
                enumerate_lifts_with(&a, &b, side, true).unwrap()
            } else {
                enumerate_lifts(&a, &b, side).unwrap()
            };
            let got: std::collections::BTreeSet<_> = found
                .iter()
                .map(|l| {
                    (
                        canonicalize(&l.lifted_a, side).representative,
                        canonicalize(&l.lifted_b, side).representative,
                    )
                })
                .collect();
            assert_eq!(got.len(), found.len(), "no duplicate orbit pairs");
            assert_eq!(got, expected, "{side} include={include}");
        }
    }
}

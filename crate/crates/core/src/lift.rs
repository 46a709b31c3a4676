//! Lifting homometric pairs from `Z_n` to `D_n`.
//!
//! A lift assigns a sign to every residue of a set, so that the projection
//! of the lifted set is the original set. Given homometric `A = A1 ∪ A2` and
//! `B = B1 ∪ B2` with `iv(A1) = iv(B1)` and `iv(A2) = iv(B2)`, one of the
//! sign assignments putting `A1`/`A2` and `B1`/`B2` on opposite signs always
//! yields a right-homometric pair in `D_n`.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::dn::DihedralSet;
use crate::enumeration::{canonicalize, enumerate_zn, EnumerationOptions};
use crate::error::{Error, Result};
use crate::homometry::{decomposition_check, triviality_witness, Side};
use crate::zn::{is_homometric, iv, ZnSet};

/// Largest set size accepted by [`enumerate_lifts`].
pub const MAX_LIFT_SIZE: usize = 20;

/// Splittings `A = A1 ∪ A2`, `B = B1 ∪ B2` into disjoint parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub a1: ZnSet,
    pub a2: ZnSet,
    pub b1: ZnSet,
    pub b2: ZnSet,
}

impl Decomposition {
    pub fn new(a1: ZnSet, a2: ZnSet, b1: ZnSet, b2: ZnSet) -> Result<Self> {
        let n = a1.n();
        for part in [a2, b1, b2] {
            if part.n() != n {
                return Err(Error::ModulusMismatch(n, part.n()));
            }
        }
        if !a1.is_disjoint(&a2) || !b1.is_disjoint(&b2) {
            return Err(Error::Precondition(
                "the parts of a decomposition must be disjoint".into(),
            ));
        }
        Ok(Decomposition { a1, a2, b1, b2 })
    }

    pub fn a(&self) -> ZnSet {
        self.a1.union(&self.a2).expect("same modulus")
    }

    pub fn b(&self) -> ZnSet {
        self.b1.union(&self.b2).expect("same modulus")
    }

    /// `A ~ B`, `iv(A1) = iv(B1)` and `iv(A2) = iv(B2)`.
    pub fn satisfies_lift_conditions(&self) -> bool {
        is_homometric(&self.a(), &self.b()).unwrap_or(false)
            && iv(&self.a1) == iv(&self.b1)
            && iv(&self.a2) == iv(&self.b2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LiftResult {
    pub lifted_a: DihedralSet,
    pub lifted_b: DihedralSet,
    pub side: Side,
    /// No translation trivial for `side` relates the two lifted sets.
    pub nontrivial: bool,
}

/// Builds a right-homometric lift from a decomposition meeting
/// [`Decomposition::satisfies_lift_conditions`].
///
/// The candidate assignments `(A₊, B₊)` are tried in the order `(A1, B1)`,
/// `(A1, B2)`, `(A2, B1)`, `(A2, B2)`; the first one passing the exact right
/// condition on the sign classes is returned.
pub fn construct_lift(d: &Decomposition) -> Result<LiftResult> {
    if !d.satisfies_lift_conditions() {
        return Err(Error::Precondition(format!(
            "need A ~ B with iv(A1) = iv(B1) and iv(A2) = iv(B2); got A1={{{}}} A2={{{}}} B1={{{}}} B2={{{}}}",
            d.a1, d.a2, d.b1, d.b2
        )));
    }
    let candidates = [
        ((d.a1, d.a2), (d.b1, d.b2)),
        ((d.a1, d.a2), (d.b2, d.b1)),
        ((d.a2, d.a1), (d.b1, d.b2)),
        ((d.a2, d.a1), (d.b2, d.b1)),
    ];
    for ((ap, am), (bp, bm)) in candidates {
        let lifted_a = DihedralSet::from_parts(ap, am)?;
        let lifted_b = DihedralSet::from_parts(bp, bm)?;
        if decomposition_check(&lifted_a, &lifted_b, Side::Right)? {
            return Ok(LiftResult {
                lifted_a,
                lifted_b,
                side: Side::Right,
                nontrivial: triviality_witness(&lifted_a, &lifted_b, Side::Right).is_none(),
            });
        }
    }
    Err(Error::ContractViolation(format!(
        "no sign assignment lifts {{{}}} and {{{}}} to right-homometric sets",
        d.a(),
        d.b()
    )))
}

/// The tetrachord pair `A = {0, a, a+N, 2N}`, `B = {0, a, N, 2N+a}` in
/// `Z_{4N}`.
pub fn rosenblatt_pair(big_n: usize, a: usize) -> Result<(ZnSet, ZnSet)> {
    let d = rosenblatt_decomposition(big_n, a)?;
    Ok((d.a(), d.b()))
}

/// `A1 = {0, 2N}`, `A2 = {a, a+N}`, `B1 = {a, 2N+a} = T_a A1`,
/// `B2 = {0, N} = T_{-a} A2`.
pub fn rosenblatt_decomposition(big_n: usize, a: usize) -> Result<Decomposition> {
    if big_n < 2 || 4 * big_n > crate::zn::MAX_MODULUS {
        return Err(Error::Precondition(format!(
            "N must lie in 2..={}, got {big_n}",
            crate::zn::MAX_MODULUS / 4
        )));
    }
    if a == 0 || a >= big_n {
        return Err(Error::Precondition(format!(
            "a must lie in 1..={}, got {a}",
            big_n - 1
        )));
    }
    let n = 4 * big_n;
    Decomposition::new(
        ZnSet::from_residues(n, [0, 2 * big_n])?,
        ZnSet::from_residues(n, [a, a + big_n])?,
        ZnSet::from_residues(n, [a, 2 * big_n + a])?,
        ZnSet::from_residues(n, [0, big_n])?,
    )
}

/// Scatters the low bits of `choice` onto the residues of `set`.
fn spread(residues: &[usize], choice: u64) -> u64 {
    residues
        .iter()
        .enumerate()
        .filter(|(i, _)| choice >> i & 1 == 1)
        .fold(0, |acc, (_, &r)| acc | 1 << r)
}

/// Every sign assignment of `a` and `b` giving a non-trivially
/// `side`-homometric pair in `D_n`, up to the translations trivial for
/// `side`. Lifts where a set keeps a single sign are skipped; see
/// [`enumerate_lifts_with`].
pub fn enumerate_lifts(a: &ZnSet, b: &ZnSet, side: Side) -> Result<Vec<LiftResult>> {
    enumerate_lifts_with(a, b, side, false)
}

/// As [`enumerate_lifts`], optionally keeping single-sign lifts.
///
/// Assignment masks put residue `i` of a set (in increasing order) on the
/// minus side when bit `i` is set. Results come in increasing
/// `(mask of a, mask of b)` order, keeping the first assignment of each
/// orbit pair.
pub fn enumerate_lifts_with(
    a: &ZnSet,
    b: &ZnSet,
    side: Side,
    include_single_sign: bool,
) -> Result<Vec<LiftResult>> {
    for s in [a, b] {
        if s.len() > MAX_LIFT_SIZE {
            return Err(Error::SizeLimit {
                size: s.len(),
                limit: MAX_LIFT_SIZE,
            });
        }
    }
    if !is_homometric(a, b)? {
        return Err(Error::Precondition(format!(
            "{{{a}}} and {{{b}}} are not homometric in Z_{}",
            a.n()
        )));
    }
    let n = a.n();
    let ra: Vec<usize> = a.residues().collect();
    let rb: Vec<usize> = b.residues().collect();
    let (full_a, full_b) = (a.bits(), b.bits());
    let hits: Vec<Vec<LiftResult>> = (0..1u64 << ra.len())
        .into_par_iter()
        .map(|ca| {
            let minus_a = spread(&ra, ca);
            let lifted_a = DihedralSet::from_bits(n, full_a & !minus_a, minus_a);
            if !include_single_sign && lifted_a.is_single_sign() && !lifted_a.is_empty() {
                return Vec::new();
            }
            (0..1u64 << rb.len())
                .filter_map(|cb| {
                    let minus_b = spread(&rb, cb);
                    let lifted_b = DihedralSet::from_bits(n, full_b & !minus_b, minus_b);
                    if !include_single_sign && lifted_b.is_single_sign() && !lifted_b.is_empty() {
                        return None;
                    }
                    if !decomposition_check(&lifted_a, &lifted_b, side).ok()? {
                        return None;
                    }
                    if triviality_witness(&lifted_a, &lifted_b, side).is_some() {
                        return None;
                    }
                    Some(LiftResult {
                        lifted_a,
                        lifted_b,
                        side,
                        nontrivial: true,
                    })
                })
                .collect()
        })
        .collect();
    let mut seen = HashSet::new();
    Ok(hits
        .into_iter()
        .flatten()
        .filter(|r| {
            seen.insert((
                canonicalize(&r.lifted_a, side).representative,
                canonicalize(&r.lifted_b, side).representative,
            ))
        })
        .collect())
}

/// Lift search outcome for one pair of `Z_12` orbits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftCheck {
    pub cardinality: usize,
    pub a: ZnSet,
    pub b: ZnSet,
    /// Distinct non-trivial right lifts found.
    pub lifts: usize,
}

impl LiftCheck {
    pub fn succeeded(&self) -> bool {
        self.lifts > 0
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LiftCheckReport {
    pub entries: Vec<LiftCheck>,
}

impl LiftCheckReport {
    pub fn failures(&self) -> impl Iterator<Item = &LiftCheck> {
        self.entries.iter().filter(|e| !e.succeeded())
    }
}

/// Tries to lift every non-trivially homometric pair of `Z_12` with the
/// given cardinalities into a right-homometric pair of `D_12` in which both
/// sets use both signs.
///
/// Orbit representatives suffice: a lift of `A` carried by `(p, ±1)` on the
/// left is a lift of `T_pA` or `I_pA`.
pub fn verify_cor2(cardinalities: &[usize]) -> Result<LiftCheckReport> {
    let mut entries = Vec::new();
    for &card in cardinalities {
        if !(3..=9).contains(&card) {
            return Err(Error::CardinalityOutOfRange {
                card,
                min: 3,
                max: 9,
            });
        }
        let census = enumerate_zn(12, card, &EnumerationOptions::default())?;
        for class in &census.classes {
            let reps = &class.representatives;
            for (i, a) in reps.iter().enumerate() {
                for b in &reps[i + 1..] {
                    let lifts = enumerate_lifts(a, b, Side::Right)?.len();
                    entries.push(LiftCheck {
                        cardinality: card,
                        a: *a,
                        b: *b,
                        lifts,
                    });
                }
            }
        }
    }
    Ok(LiftCheckReport { entries })
}

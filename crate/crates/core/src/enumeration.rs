//! Orbit-reduced census of homometric sets.
//!
//! Subsets are visited in colex order, partitioned by their largest element
//! so that workers never share state. A subset is kept only when it is the
//! minimum of its orbit under the trivial group of the chosen side (left
//! translations for right-homometry, right translations for left-homometry,
//! `T/I` for `Z_n`). Canonical representatives are then grouped by interval
//! vector; a class holding exactly `t ≥ 2` orbits is a homometric `t`-uple.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::dn::{DihedralElement, DihedralSet};
use crate::error::{Error, Result};
use crate::homometry::Side;
use crate::zn::{ifunc_bits, mask, reflect, reverse, rotate, ZnSet};

pub const MIN_MODULUS: usize = 3;
pub const MAX_MODULUS: usize = 36;
pub const MAX_CARDINALITY: usize = 12;

/// The group whose orbits are counted as one set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitSide {
    /// Right translations (trivial for left-homometry).
    Left,
    /// Left translations (trivial for right-homometry).
    Right,
    /// `T/I` acting on `Z_n`.
    Zn,
}

impl From<Side> for OrbitSide {
    fn from(side: Side) -> Self {
        match side {
            Side::Left => OrbitSide::Left,
            Side::Right => OrbitSide::Right,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalOrbit<S> {
    pub representative: S,
    pub orbit_size: usize,
    pub side: OrbitSide,
}

/// Images of `(plus, minus)` under the `2n` translations trivial for `side`,
/// in element-encoding order.
#[inline]
fn dn_images(plus: u64, minus: u64, n: usize, side: Side) -> impl Iterator<Item = (u64, u64)> {
    let (rp, rm) = (reverse(plus, n), reverse(minus, n));
    (0..2 * n).map(move |i| {
        let k = i % n;
        let back = (n - k) % n;
        match (side, i < n) {
            (Side::Right, true) => (rotate(plus, k, n), rotate(minus, k, n)),
            (Side::Right, false) => (rotate(rm, k + 1, n), rotate(rp, k + 1, n)),
            (Side::Left, true) => (rotate(plus, k, n), rotate(minus, back, n)),
            (Side::Left, false) => (rotate(minus, back, n), rotate(plus, k, n)),
        }
    })
}

/// Minimum of the orbit of `s` under the translations trivial for `side`,
/// in `(plus mask, minus mask)` order.
pub fn canonicalize(s: &DihedralSet, side: Side) -> CanonicalOrbit<DihedralSet> {
    let n = s.n();
    let this = (s.plus().bits(), s.minus().bits());
    let mut best = this;
    let mut stabilizer = 0;
    for image in dn_images(this.0, this.1, n, side) {
        best = best.min(image);
        stabilizer += usize::from(image == this);
    }
    CanonicalOrbit {
        representative: DihedralSet::from_bits(n, best.0, best.1),
        orbit_size: 2 * n / stabilizer,
        side: side.into(),
    }
}

#[inline]
fn zn_images(bits: u64, n: usize) -> impl Iterator<Item = u64> {
    let rev = reverse(bits, n);
    (0..2 * n).map(move |i| {
        if i < n {
            rotate(bits, i, n)
        } else {
            rotate(rev, i - n + 1, n)
        }
    })
}

/// Minimum of the `T/I` orbit of `a`.
pub fn canonicalize_zn(a: &ZnSet) -> CanonicalOrbit<ZnSet> {
    let n = a.n();
    let mut best = a.bits();
    let mut stabilizer = 0;
    for image in zn_images(a.bits(), n) {
        best = best.min(image);
        stabilizer += usize::from(image == a.bits());
    }
    CanonicalOrbit {
        representative: ZnSet::from_bits(n, best).unwrap(),
        orbit_size: 2 * n / stabilizer,
        side: OrbitSide::Zn,
    }
}

/// Packed interval vector of a dihedral set for `side`, computed from the
/// sign classes: `iv(A₊) + iv(A₋)` on `(l, +1)` and twice the cross
/// interval function on `(l, -1)`.
pub(crate) fn packed_dn_vector(plus: u64, minus: u64, n: usize, side: Side, out: &mut [u32]) {
    let (diag, cross) = out.split_at_mut(n);
    let mut scratch = [0u32; 64];
    ifunc_bits(plus, plus, n, diag);
    ifunc_bits(minus, minus, n, &mut scratch[..n]);
    for (d, s) in diag.iter_mut().zip(&scratch[..n]) {
        *d += s;
    }
    let first = match side {
        Side::Right => plus,
        Side::Left => reflect(plus, 0, n),
    };
    ifunc_bits(first, minus, n, cross);
    for c in cross.iter_mut() {
        *c *= 2;
    }
}

fn pack(counts: &[u32]) -> Box<[u8]> {
    counts
        .iter()
        .map(|&c| u8::try_from(c).expect("interval counts fit in a byte for cardinality <= 12"))
        .collect()
}

/// The `(n, p)` cells of the reference census of `D_n`.
pub const CENSUS_CELLS: &[(usize, usize)] = &[
    (8, 4), (12, 4), (16, 4),
    (8, 5), (10, 5), (12, 5), (14, 5), (15, 5), (16, 5), (18, 5),
    (8, 6), (9, 6), (10, 6), (12, 6), (14, 6), (15, 6), (16, 6), (18, 6),
    (8, 7), (9, 7), (10, 7), (11, 7), (12, 7), (13, 7), (14, 7), (15, 7), (16, 7), (17, 7), (18, 7),
];

/// What a census counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CensusKind {
    Left,
    Right,
    Simultaneous,
    Zn,
}

impl fmt::Display for CensusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CensusKind::Left => "left",
            CensusKind::Right => "right",
            CensusKind::Simultaneous => "simultaneous",
            CensusKind::Zn => "zn",
        })
    }
}

/// One interval-vector class holding at least two orbits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomometryClass<S> {
    pub interval_vector: Vec<u32>,
    /// Canonical orbit representatives, sorted.
    pub representatives: Vec<S>,
}

impl<S> HomometryClass<S> {
    pub fn size(&self) -> usize {
        self.representatives.len()
    }
}

/// Census of homometric `t`-uples for one `(n, p, kind)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationReport<S> {
    pub n: usize,
    pub p: usize,
    pub side: CensusKind,
    /// Number of subsets visited after filtering.
    pub subsets: u64,
    /// Number of orbits among them.
    pub orbits: u64,
    /// Sum of the orbit sizes; equals `subsets`.
    pub orbit_size_total: u64,
    /// `t ↦ number of classes containing exactly t orbits`, for `t ≥ 2`.
    pub tuples: BTreeMap<usize, usize>,
    /// Classes with `t ≥ 2`, ordered by their smallest representative.
    pub classes: Vec<HomometryClass<S>>,
}

impl<S> EnumerationReport<S> {
    pub fn pairs(&self) -> usize {
        self.count(2)
    }

    pub fn count(&self, t: usize) -> usize {
        self.tuples.get(&t).copied().unwrap_or(0)
    }

    /// `"8 pairs, 2 triples"`, or `"none"`.
    pub fn summary(&self) -> String {
        tuple_summary(&self.tuples)
    }
}

pub fn tuple_summary(tuples: &BTreeMap<usize, usize>) -> String {
    let parts: Vec<String> = tuples
        .iter()
        .filter(|(_, &c)| c > 0)
        .map(|(&t, &c)| format!("{c} {}", tuple_name(t, c == 1)))
        .collect();
    if parts.is_empty() {
        "none".to_string()
    } else {
        parts.join(", ")
    }
}

fn tuple_name(t: usize, singular: bool) -> String {
    let stem = match t {
        2 => "pair",
        3 => "triple",
        4 => "quadruple",
        5 => "quintuple",
        6 => "sextuple",
        7 => "septuple",
        8 => "octuple",
        _ => return format!("{t}-tuple{}", if singular { "" } else { "s" }),
    };
    if singular {
        stem.to_string()
    } else {
        format!("{stem}s")
    }
}

/// Worker settings. Reports never depend on `jobs`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Worker threads; `0` uses the ambient rayon pool.
    pub jobs: usize,
    /// Also count sets whose elements all carry the same sign. Off by
    /// default: such sets are copies of `Z_n` sets, not genuinely dihedral
    /// ones, and the reference census leaves them out.
    pub include_single_sign: bool,
}

/// How a pair of right-homometric orbits is judged left-homometric.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SimultaneousConvention {
    /// Some left translate of the second orbit's representative is
    /// left-homometric to the first representative.
    #[default]
    Existential,
    /// The canonical representatives themselves are left-homometric.
    Representative,
}

enum Visit<S> {
    Skip,
    Orbit,
    Canonical { key: Box<[u8]>, rep: S, orbit_size: u64 },
}

struct Partial<S> {
    classes: HashMap<Box<[u8]>, Vec<S>>,
    subsets: u64,
    orbits: u64,
    orbit_size_total: u64,
}

impl<S> Partial<S> {
    fn new() -> Self {
        Partial {
            classes: HashMap::new(),
            subsets: 0,
            orbits: 0,
            orbit_size_total: 0,
        }
    }

    fn absorb(&mut self, other: Partial<S>) {
        self.subsets += other.subsets;
        self.orbits += other.orbits;
        self.orbit_size_total += other.orbit_size_total;
        for (key, mut reps) in other.classes {
            self.classes.entry(key).or_default().append(&mut reps);
        }
    }
}

fn in_pool<T: Send>(jobs: usize, work: impl FnOnce() -> T + Send) -> Result<T> {
    if jobs == 0 {
        return Ok(work());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start {jobs} workers: {e}")))?;
    Ok(pool.install(work))
}

/// Visits every `p`-subset of `width` bits, split by largest element.
fn census<S, F>(width: usize, p: usize, visit: F) -> Partial<S>
where
    S: Send,
    F: Fn(u128) -> Visit<S> + Sync,
{
    let scan = |top: Option<usize>| {
        let mut partial = Partial::new();
        let mut record = |subset: u128| match visit(subset) {
            Visit::Skip => {}
            Visit::Orbit => partial.subsets += 1,
            Visit::Canonical {
                key,
                rep,
                orbit_size,
            } => {
                partial.subsets += 1;
                partial.orbits += 1;
                partial.orbit_size_total += orbit_size;
                partial.classes.entry(key).or_default().push(rep);
            }
        };
        match top {
            None => record(0),
            Some(top) => {
                let lead = 1u128 << top;
                let rest = p - 1;
                let limit = 1u128 << top;
                let mut low: u128 = (1u128 << rest) - 1;
                while low < limit {
                    record(lead | low);
                    if low == 0 {
                        break;
                    }
                    // Gosper's hack: next subset with the same popcount.
                    let c = low & low.wrapping_neg();
                    let r = low + c;
                    low = (((r ^ low) >> 2) / c) | r;
                }
            }
        }
        partial
    };
    let partials: Vec<Partial<S>> = if p == 0 {
        vec![scan(None)]
    } else {
        (p - 1..width).into_par_iter().map(|top| scan(Some(top))).collect()
    };
    let mut total = Partial::new();
    for partial in partials {
        total.absorb(partial);
    }
    total
}

fn finish<S: Ord + Copy>(
    n: usize,
    p: usize,
    side: CensusKind,
    partial: Partial<S>,
    vector_len: usize,
) -> EnumerationReport<S> {
    let mut classes: Vec<HomometryClass<S>> = partial
        .classes
        .into_iter()
        .filter(|(_, reps)| reps.len() >= 2)
        .map(|(key, mut reps)| {
            reps.sort();
            debug_assert_eq!(key.len(), vector_len);
            HomometryClass {
                interval_vector: key.iter().map(|&c| u32::from(c)).collect(),
                representatives: reps,
            }
        })
        .collect();
    classes.sort_by(|a, b| a.representatives[0].cmp(&b.representatives[0]));
    EnumerationReport {
        n,
        p,
        side,
        subsets: partial.subsets,
        orbits: partial.orbits,
        orbit_size_total: partial.orbit_size_total,
        tuples: tally(&classes),
        classes,
    }
}

fn tally<S>(classes: &[HomometryClass<S>]) -> BTreeMap<usize, usize> {
    let mut tuples = BTreeMap::new();
    for class in classes {
        *tuples.entry(class.size()).or_insert(0) += 1;
    }
    tuples
}

fn check_range(n: usize, p: usize, max_card: usize) -> Result<()> {
    if !(MIN_MODULUS..=MAX_MODULUS).contains(&n) {
        return Err(Error::ModulusOutOfRange {
            n,
            min: MIN_MODULUS,
            max: MAX_MODULUS,
        });
    }
    if p > max_card {
        return Err(Error::CardinalityOutOfRange {
            card: p,
            min: 0,
            max: max_card,
        });
    }
    Ok(())
}

/// Census of `side`-homometric `t`-uples among `p`-subsets of `D_n`.
pub fn enumerate_dn(
    n: usize,
    p: usize,
    side: Side,
    options: &EnumerationOptions,
) -> Result<EnumerationReport<DihedralSet>> {
    check_range(n, p, MAX_CARDINALITY.min(2 * n))?;
    let low = mask(n) as u128;
    let include_single = options.include_single_sign;
    let visit = |subset: u128| {
        let plus = (subset & low) as u64;
        let minus = (subset >> n) as u64;
        if !include_single && p > 0 && (plus == 0 || minus == 0) {
            return Visit::Skip;
        }
        let this = (plus, minus);
        let mut stabilizer = 0u64;
        for image in dn_images(plus, minus, n, side) {
            if image < this {
                return Visit::Orbit;
            }
            stabilizer += u64::from(image == this);
        }
        let mut counts = [0u32; 2 * MAX_MODULUS];
        packed_dn_vector(plus, minus, n, side, &mut counts[..2 * n]);
        Visit::Canonical {
            key: pack(&counts[..2 * n]),
            rep: DihedralSet::from_bits(n, plus, minus),
            orbit_size: 2 * n as u64 / stabilizer,
        }
    };
    let partial = in_pool(options.jobs, || census(2 * n, p, visit))?;
    let kind = match side {
        Side::Left => CensusKind::Left,
        Side::Right => CensusKind::Right,
    };
    Ok(finish(n, p, kind, partial, 2 * n))
}

fn left_vector(s: &DihedralSet) -> Vec<u32> {
    let n = s.n();
    let mut counts = vec![0; 2 * n];
    packed_dn_vector(s.plus().bits(), s.minus().bits(), n, Side::Left, &mut counts);
    counts
}

/// Whether two right-orbit representatives are also left-homometric under
/// `convention`.
pub fn simultaneously_homometric(
    a: &DihedralSet,
    b: &DihedralSet,
    convention: SimultaneousConvention,
) -> bool {
    let target = left_vector(a);
    match convention {
        SimultaneousConvention::Representative => left_vector(b) == target,
        SimultaneousConvention::Existential => {
            let n = b.n();
            (0..2 * n).any(|i| {
                let g = DihedralElement::from_index(n, i).unwrap();
                left_vector(&b.act_left_unchecked(g)) == target
            })
        }
    }
}

/// Classes of the right census whose orbits are pairwise also
/// left-homometric under `convention`.
pub fn enumerate_simultaneous(
    n: usize,
    p: usize,
    options: &EnumerationOptions,
    convention: SimultaneousConvention,
) -> Result<EnumerationReport<DihedralSet>> {
    let right = enumerate_dn(n, p, Side::Right, options)?;
    Ok(simultaneous_from_right(right, convention))
}

/// Filters a right census down to its simultaneous classes.
pub fn simultaneous_from_right(
    right: EnumerationReport<DihedralSet>,
    convention: SimultaneousConvention,
) -> EnumerationReport<DihedralSet> {
    assert_eq!(right.side, CensusKind::Right, "expects a right census");
    let classes: Vec<_> = right
        .classes
        .into_iter()
        .filter(|class| {
            let reps = &class.representatives;
            reps.iter().enumerate().all(|(i, a)| {
                reps[i + 1..]
                    .iter()
                    .all(|b| simultaneously_homometric(a, b, convention))
            })
        })
        .collect();
    EnumerationReport {
        side: CensusKind::Simultaneous,
        tuples: tally(&classes),
        classes,
        ..right
    }
}

/// Census of homometric `t`-uples among `p`-subsets of `Z_n`, up to `T/I`.
pub fn enumerate_zn(n: usize, p: usize, options: &EnumerationOptions) -> Result<EnumerationReport<ZnSet>> {
    check_range(n, p, n)?;
    let visit = |subset: u128| {
        let bits = subset as u64;
        let mut stabilizer = 0u64;
        for image in zn_images(bits, n) {
            if image < bits {
                return Visit::Orbit;
            }
            stabilizer += u64::from(image == bits);
        }
        let mut counts = [0u32; MAX_MODULUS];
        ifunc_bits(bits, bits, n, &mut counts[..n]);
        Visit::Canonical {
            key: pack(&counts[..n]),
            rep: ZnSet::from_bits(n, bits).unwrap(),
            orbit_size: 2 * n as u64 / stabilizer,
        }
    };
    let partial = in_pool(options.jobs, || census(n, p, visit))?;
    Ok(finish(n, p, CensusKind::Zn, partial, n))
}

/// Checks the inversion duality between a right and a left census of the
/// same `(n, p)`: the tallies agree and `I` maps every right class onto a
/// left class, orbit for orbit.
pub fn duality_holds(
    right: &EnumerationReport<DihedralSet>,
    left: &EnumerationReport<DihedralSet>,
) -> bool {
    if right.side != CensusKind::Right || left.side != CensusKind::Left {
        return false;
    }
    if right.tuples != left.tuples || right.classes.len() != left.classes.len() {
        return false;
    }
    let index: HashMap<DihedralSet, usize> = left
        .classes
        .iter()
        .enumerate()
        .flat_map(|(i, class)| class.representatives.iter().map(move |&r| (r, i)))
        .collect();
    let mut hit = vec![false; left.classes.len()];
    for class in &right.classes {
        let mut mapped: Vec<DihedralSet> = class
            .representatives
            .iter()
            .map(|r| canonicalize(&r.inversion(), Side::Left).representative)
            .collect();
        mapped.sort();
        let Some(&target) = index.get(&mapped[0]) else {
            return false;
        };
        if left.classes[target].representatives != mapped || hit[target] {
            return false;
        }
        hit[target] = true;
    }
    hit.into_iter().all(|h| h)
}

/// All members of the orbit of `s` (trivial for `side`) that contain the
/// identity `(0, +1)`, smallest first.
pub fn orbit_members_through_identity(s: &DihedralSet, side: Side) -> Vec<DihedralSet> {
    let mut out: Vec<DihedralSet> = s
        .elements()
        .map(|x| side.translate(s, x.inv()))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Right and left classes of `D_12` for `p = 4, 5`, in chord names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChordListing {
    pub sections: Vec<ChordListingSection>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChordListingSection {
    pub p: usize,
    pub side: Side,
    /// Classes rendered in chord names, each set normalized to contain `C`.
    pub classes: Vec<Vec<String>>,
    pub tuples: BTreeMap<usize, usize>,
}

/// The representative shown for a class member: the smallest orbit member
/// containing `C = (0, +1)`.
pub fn normalized_member(s: &DihedralSet, side: Side) -> DihedralSet {
    orbit_members_through_identity(s, side)[0]
}

pub fn chord_class_listing(options: &EnumerationOptions) -> Result<ChordListing> {
    let mut sections = Vec::new();
    for p in [4, 5] {
        for side in [Side::Left, Side::Right] {
            let report = enumerate_dn(12, p, side, options)?;
            let mut classes: Vec<(usize, Vec<String>)> = report
                .classes
                .iter()
                .map(|class| {
                    let sets = class
                        .representatives
                        .iter()
                        .map(|r| crate::music::render_chord_set(&normalized_member(r, side)))
                        .collect::<Result<Vec<_>>>()?;
                    Ok((class.size(), sets))
                })
                .collect::<Result<_>>()?;
            classes.sort_by_key(|(t, _)| *t);
            sections.push(ChordListingSection {
                p,
                side,
                classes: classes.into_iter().map(|(_, c)| c).collect(),
                tuples: report.tuples.clone(),
            });
        }
    }
    Ok(ChordListing { sections })
}

impl fmt::Display for ChordListing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for section in &self.sections {
            let action = match section.side {
                Side::Left => "left (T/I)",
                Side::Right => "right (PLR)",
            };
            writeln!(
                f,
                "n=12 p={} {}: {}",
                section.p,
                action,
                tuple_summary(&section.tuples)
            )?;
            for class in &section.classes {
                let sets: Vec<String> = class.iter().map(|s| format!("{{{s}}}")).collect();
                writeln!(f, "  {}", sets.join(" & "))?;
            }
        }
        Ok(())
    }
}

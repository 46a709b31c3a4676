//! Self-checks runnable from the command line.
//!
//! Each suite recomputes a family of facts from scratch and reports one
//! [`Check`] per fact. Suites never stop at the first failure.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dn::{interval_preserving_automorphisms, DihedralAutomorphism, DihedralElement, DihedralSet};
use crate::enumeration::{canonicalize, enumerate_dn, enumerate_zn, EnumerationOptions};
use crate::error::{Error, Result};
use crate::homometry::{
    decomposition_check, fourier_conditions, is_homometric, is_left_homometric,
    is_right_homometric, prop6_applies, projection_check, projection_multiplicity_check, triviality_witness,
    triviality_witness_by_parts, Side,
};
use crate::lift::verify_cor2;
use crate::music::parse_chord_set;
use crate::zn::{dft, iv, ZnSet};

/// Seed of the random pairs drawn by [`Suite::Decomposition`] and [`Suite::Fourier`].
pub const RANDOM_SEED: u64 = 0x5ee_dd12;
pub const RANDOM_PAIRS: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Only the identity automorphism preserves intervals, `3 ≤ n ≤ 12`.
    Automorphisms,
    /// Right-homometric pairs project to homometric pairs; left ones need
    /// not.
    Projection,
    /// Symmetric common sign classes make both sides agree.
    SymmetricParts,
    /// Every `Z_12` pair of size 4 to 8 lifts with mixed signs.
    Lifts,
    /// Sign-class decomposition versus direct interval vectors.
    Decomposition,
    /// Fourier criteria versus exact counts.
    Fourier,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Automorphisms,
        Suite::Projection,
        Suite::SymmetricParts,
        Suite::Lifts,
        Suite::Decomposition,
        Suite::Fourier,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Automorphisms => "prop2",
            Suite::Projection => "prop4",
            Suite::SymmetricParts => "prop6",
            Suite::Lifts => "cor2",
            Suite::Decomposition => "thm1",
            Suite::Fourier => "thm4",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                Error::Precondition(format!(
                    "unknown suite '{s}', expected one of prop2, prop4, prop6, cor2, thm1, thm4"
                ))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            writeln!(f, "[{}] {check}", self.suite)?;
        }
        Ok(())
    }
}

pub fn run_suite(suite: Suite, options: &EnumerationOptions) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::Automorphisms => automorphisms()?,
        Suite::Projection => projection(options)?,
        Suite::SymmetricParts => symmetric_parts(options)?,
        Suite::Lifts => lifts()?,
        Suite::Decomposition => decomposition()?,
        Suite::Fourier => fourier(options)?,
    };
    Ok(SuiteReport { suite, checks })
}

fn automorphisms() -> Result<Vec<Check>> {
    (3..=12)
        .map(|n| {
            let found = interval_preserving_automorphisms(n)?;
            let total = DihedralAutomorphism::all(n)?.len();
            let only_identity = found == [DihedralAutomorphism::identity(n)?];
            Ok(Check::new(
                format!("automorphisms n={n}"),
                only_identity,
                format!("{} of {total} preserve intervals", found.len()),
            ))
        })
        .collect()
}

/// The `D_10` pair that is left-homometric with non-homometric projections.
pub fn left_projection_counterexample() -> (DihedralSet, DihedralSet) {
    (
        DihedralSet::from_pairs(10, &[(0, 1), (1, -1), (2, 1), (5, -1), (7, -1)])
            .expect("valid set"),
        DihedralSet::from_pairs(10, &[(0, 1), (1, -1), (6, 1), (7, -1), (8, 1)])
            .expect("valid set"),
    )
}

/// Every pair of orbit representatives inside each class.
fn class_pairs(classes: &[crate::enumeration::HomometryClass<DihedralSet>]) -> Vec<(DihedralSet, DihedralSet)> {
    classes
        .iter()
        .flat_map(|c| {
            let reps = &c.representatives;
            (0..reps.len()).flat_map(move |i| (i + 1..reps.len()).map(move |j| (reps[i], reps[j])))
        })
        .collect()
}

const PROJECTION_CASES: [(usize, usize); 8] =
    [(8, 4), (8, 5), (10, 5), (10, 6), (12, 4), (12, 5), (12, 6), (14, 5)];

fn projection(options: &EnumerationOptions) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (n, p) in PROJECTION_CASES {
        let report = enumerate_dn(n, p, Side::Right, options)?;
        let pairs = class_pairs(&report.classes);
        let (mut disjoint, mut bad_disjoint, mut bad_weighted, mut collapsed) = (0, 0, 0, 0);
        for (a, b) in &pairs {
            let separated = a.plus().is_disjoint(&a.minus()) && b.plus().is_disjoint(&b.minus());
            let set_ok = projection_check(a, b)?;
            if separated {
                disjoint += 1;
                bad_disjoint += usize::from(!set_ok);
            } else {
                collapsed += usize::from(!set_ok);
            }
            bad_weighted += usize::from(!projection_multiplicity_check(a, b)?);
        }
        checks.push(Check::new(
            format!("right pairs project n={n} p={p}"),
            bad_disjoint == 0 && bad_weighted == 0,
            format!(
                "{} pairs: {bad_weighted} fail with multiplicity; {disjoint} with disjoint signs, \
                 {bad_disjoint} fail as sets; {collapsed} with a shared residue lose homometry as sets",
                pairs.len()
            ),
        ));
    }
    let a = DihedralSet::from_pairs(12, &[(0, 1), (0, -1), (2, 1), (4, 1), (6, -1)])?;
    let b = DihedralSet::from_pairs(12, &[(0, 1), (2, 1), (2, -1), (4, 1), (8, -1)])?;
    let right = is_right_homometric(&a, &b)?;
    let as_sets = crate::zn::is_homometric(&a.project(), &b.project())?;
    checks.push(Check::new(
        "shared residues collapse",
        right && !as_sets && projection_multiplicity_check(&a, &b)?,
        format!(
            "{{{a}}} ~right {{{b}}}: {right}; {{{}}} ~ {{{}}}: {as_sets}",
            a.project(),
            b.project()
        ),
    ));
    let (a, b) = left_projection_counterexample();
    let left = is_left_homometric(&a, &b)?;
    let projected = crate::zn::is_homometric(&a.project(), &b.project())?;
    checks.push(Check::new(
        "left pairs need not project",
        left && !projected,
        format!(
            "{{{a}}} ~left {{{b}}}: {left}; {{{}}} ~ {{{}}}: {projected}",
            a.project(),
            b.project()
        ),
    ));
    Ok(checks)
}

/// Pairs of `D_12` that are right- and left-homometric at once.
pub const BOTH_SIDES_PAIRS: [(&str, &str); 2] = [
    ("C,c,d,E,Ab", "C,d,e,E,Ab"),
    ("C,db,eb,E,Ab", "C,eb,E,f,Ab"),
];

fn symmetric_parts(options: &EnumerationOptions) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let right = enumerate_dn(12, 5, Side::Right, options)?;
    let left = enumerate_dn(12, 5, Side::Left, options)?;
    for (side, report) in [(Side::Right, &right), (Side::Left, &left)] {
        let (mut applicable, mut disagree) = (0, 0);
        for (a, b) in class_pairs(&report.classes) {
            // Every member of b's orbit, since the criterion is not
            // invariant under the trivial translations.
            for g in DihedralElement::all(12)? {
                let b = side.translate(&b, g);
                if prop6_applies(&a, &b) {
                    applicable += 1;
                    if is_right_homometric(&a, &b)? != is_left_homometric(&a, &b)? {
                        disagree += 1;
                    }
                }
            }
        }
        checks.push(Check::new(
            format!("symmetric parts, {side} classes n=12 p=5"),
            disagree == 0,
            format!("{applicable} applicable pairs, {disagree} with different verdicts"),
        ));
    }
    for (x, y) in BOTH_SIDES_PAIRS {
        let (a, b) = (parse_chord_set(x)?, parse_chord_set(y)?);
        let in_class = |side: Side, report: &crate::enumeration::EnumerationReport<DihedralSet>| {
            let (ca, cb) = (
                canonicalize(&a, side).representative,
                canonicalize(&b, side).representative,
            );
            report
                .classes
                .iter()
                .any(|c| c.representatives.contains(&ca) && c.representatives.contains(&cb))
        };
        let both = in_class(Side::Right, &right) && in_class(Side::Left, &left);
        checks.push(Check::new(
            format!("{{{x}}} & {{{y}}} in both columns"),
            both && prop6_applies(&a, &b),
            format!("same right class and same left class: {both}"),
        ));
    }
    Ok(checks)
}

fn lifts() -> Result<Vec<Check>> {
    let report = verify_cor2(&[4, 5, 6, 7, 8])?;
    let mut checks = Vec::new();
    for card in 4..=8 {
        let entries: Vec<_> = report.entries.iter().filter(|e| e.cardinality == card).collect();
        let failed: Vec<String> = entries
            .iter()
            .filter(|e| !e.succeeded())
            .map(|e| format!("{{{}}}/{{{}}}", e.a, e.b))
            .collect();
        let detail = if failed.is_empty() {
            format!("{} pairs lifted", entries.len())
        } else {
            format!("{} pairs, no lift for {}", entries.len(), failed.join(" "))
        };
        checks.push(Check::new(format!("Z_12 lifts p={card}"), failed.is_empty(), detail));
    }
    Ok(checks)
}

/// All 3-subsets of `D_n`.
fn triples(n: usize) -> Result<Vec<DihedralSet>> {
    let all = DihedralElement::all(n)?;
    let mut out = Vec::new();
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            for k in j + 1..all.len() {
                out.push(DihedralSet::from_elements(n, [all[i], all[j], all[k]])?);
            }
        }
    }
    Ok(out)
}

fn random_set(rng: &mut ChaCha8Rng, n: usize, p: usize) -> DihedralSet {
    let elements = sample(rng, 2 * n, p)
        .into_iter()
        .map(|i| DihedralElement::from_index(n, i).expect("index below 2n"));
    DihedralSet::from_elements(n, elements).expect("distinct elements")
}

/// Pairs over `3 ≤ n ≤ max_n`: a third unrelated sets, a third translates
/// of one another (homometric on at least one side), a third swapped sign
/// classes.
pub fn random_pairs(count: usize, max_n: usize, seed: u64) -> Vec<(DihedralSet, DihedralSet)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(3..=max_n);
            let p = rng.gen_range(0..=(2 * n).min(10));
            let a = random_set(&mut rng, n, p);
            let b = match i % 3 {
                0 => random_set(&mut rng, n, p),
                1 => {
                    let g = DihedralElement::from_index(n, rng.gen_range(0..2 * n))
                        .expect("index below 2n");
                    let side = if rng.gen() { Side::Left } else { Side::Right };
                    side.translate(&a, g)
                }
                _ => DihedralSet::from_parts(a.minus(), a.plus()).expect("same modulus"),
            };
            (a, b)
        })
        .collect()
}

fn decomposition() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let sets = triples(6)?;
    let (mut compared, mut homometric, mut bad) = (0u64, [0u64; 2], 0u64);
    for a in &sets {
        for b in &sets {
            for (s, side) in [Side::Right, Side::Left].into_iter().enumerate() {
                let direct = is_homometric(a, b, side)?;
                compared += 1;
                homometric[s] += u64::from(direct);
                if decomposition_check(a, b, side)? != direct {
                    bad += 1;
                }
            }
        }
    }
    checks.push(Check::new(
        "decomposition, all 3-subsets of D_6",
        bad == 0,
        format!(
            "{compared} comparisons ({} right-, {} left-homometric), {bad} disagreements",
            homometric[0], homometric[1]
        ),
    ));

    let (mut bad, mut hits, mut witness_bad) = (0, 0, 0);
    for (a, b) in random_pairs(RANDOM_PAIRS, 18, RANDOM_SEED) {
        for side in [Side::Right, Side::Left] {
            let direct = is_homometric(&a, &b, side)?;
            hits += usize::from(direct);
            if decomposition_check(&a, &b, side)? != direct {
                bad += 1;
            }
            if triviality_witness(&a, &b, side) != triviality_witness_by_parts(&a, &b, side) {
                witness_bad += 1;
            }
        }
    }
    checks.push(Check::new(
        format!("decomposition, {RANDOM_PAIRS} random pairs n<=18"),
        bad == 0,
        format!("{hits} homometric verdicts, {bad} disagreements"),
    ));
    checks.push(Check::new(
        format!("triviality by sign classes, {RANDOM_PAIRS} random pairs n<=18"),
        witness_bad == 0,
        format!("{witness_bad} differing witnesses"),
    ));
    Ok(checks)
}

/// `iv` recovered from `|F_A|²` by the inverse transform, rounded.
pub fn iv_from_spectrum(a: &ZnSet) -> (Vec<u32>, f64) {
    let n = a.n();
    let power: Vec<f64> = dft(a).values().iter().map(|z| z.norm_sqr()).collect();
    // |F_A|² is the transform of iv, which is symmetric, so the forward
    // transform divided by n inverts it.
    let back = crate::zn::Spectrum::of_function(&power);
    let mut worst: f64 = 0.0;
    let counts = back
        .values()
        .iter()
        .map(|z| {
            let x = z.re / n as f64;
            worst = worst.max((x - x.round()).abs()).max((z.im / n as f64).abs());
            x.round() as u32
        })
        .collect();
    (counts, worst)
}

fn fourier(options: &EnumerationOptions) -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    let (mut bad, mut hits) = (0, 0);
    for (a, b) in random_pairs(RANDOM_PAIRS, 16, RANDOM_SEED ^ 1) {
        for side in [Side::Right, Side::Left] {
            let exact = decomposition_check(&a, &b, side)?;
            hits += usize::from(exact);
            if fourier_conditions(&a, &b, side)? != exact {
                bad += 1;
            }
        }
    }
    checks.push(Check::new(
        format!("Fourier conditions, {RANDOM_PAIRS} random pairs n<=16"),
        bad == 0,
        format!("{hits} homometric verdicts, {bad} disagreements"),
    ));

    for side in [Side::Right, Side::Left] {
        let (mut compared, mut bad) = (0, 0);
        for p in 4..=6 {
            let report = enumerate_dn(12, p, side, options)?;
            let reps: Vec<DihedralSet> = report
                .classes
                .iter()
                .flat_map(|c| c.representatives.iter().copied())
                .collect();
            // Pairs inside a class and pairs of neighbouring classes.
            for w in reps.windows(2) {
                compared += 1;
                let exact = decomposition_check(&w[0], &w[1], side)?;
                if fourier_conditions(&w[0], &w[1], side)? != exact {
                    bad += 1;
                }
            }
        }
        checks.push(Check::new(
            format!("Fourier conditions, {side} classes n=12 p=4..6"),
            bad == 0,
            format!("{compared} pairs, {bad} disagreements"),
        ));
    }

    let (mut subsets, mut bad, mut worst, mut parseval) = (0u64, 0u64, 0f64, 0f64);
    for n in 1..=16 {
        for bits in 0..1u64 << n {
            let a = ZnSet::from_bits(n, bits)?;
            let (counts, err) = iv_from_spectrum(&a);
            subsets += 1;
            worst = worst.max(err);
            if counts != iv(&a).counts() {
                bad += 1;
            }
            let energy: f64 = dft(&a).values().iter().map(|z| z.norm_sqr()).sum();
            parseval = parseval.max((energy - (n * a.len()) as f64).abs());
        }
    }
    checks.push(Check::new(
        "|F_A| determines iv(A), all subsets n<=16",
        bad == 0 && worst < 1e-6,
        format!("{subsets} subsets, {bad} mismatches, largest rounding error {worst:.1e}"),
    ));
    checks.push(Check::new(
        "Parseval, all subsets n<=16",
        parseval < 1e-6,
        format!("largest deviation {parseval:.1e}"),
    ));

    let (mut pairs, mut bad, mut worst) = (0, 0, 0f64);
    for n in 8..=16 {
        for p in 3..=n / 2 {
            for class in &enumerate_zn(n, p, options)?.classes {
                let spectra: Vec<Vec<f64>> =
                    class.representatives.iter().map(|r| dft(r).magnitudes()).collect();
                for s in &spectra[1..] {
                    pairs += 1;
                    let d = crate::zn::max_abs_diff(&spectra[0], s);
                    worst = worst.max(d);
                    if d > crate::homometry::SPECTRAL_TOLERANCE {
                        bad += 1;
                    }
                }
            }
        }
    }
    checks.push(Check::new(
        "homometric Z_n sets share |F|, n=8..16",
        bad == 0,
        format!("{pairs} pairs, {bad} above tolerance, largest distance {worst:.1e}"),
    ));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("prop3".parse::<Suite>().is_err());
    }

    #[test]
    fn automorphism_suite_passes() {
        let report = run_suite(Suite::Automorphisms, &EnumerationOptions::default()).unwrap();
        assert_eq!(report.checks.len(), 10);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn random_pairs_are_reproducible() {
        assert_eq!(random_pairs(20, 10, 7), random_pairs(20, 10, 7));
        assert_ne!(random_pairs(20, 10, 7), random_pairs(20, 10, 8));
    }

    #[test]
    fn spectrum_recovers_interval_vector() {
        let a = ZnSet::parse(12, "0,1,4,6").unwrap();
        let (counts, err) = iv_from_spectrum(&a);
        assert_eq!(counts, [4, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1]);
        assert!(err < 1e-9);
    }
}

//! Brute-force reference implementations shared by the integration tests.
//!
//! Nothing here calls the library's arithmetic: elements are plain
//! `(k, e)` tuples with `e = ±1` and every quantity is recomputed from its
//! definition.

#![allow(dead_code)]

pub mod reference;

use std::collections::{BTreeMap, BTreeSet, HashMap};

pub type El = (i64, i64);
pub type Set = BTreeSet<El>;

pub fn md(a: i64, n: i64) -> i64 {
    a.rem_euclid(n)
}

pub fn mul(x: El, y: El, n: i64) -> El {
    (md(x.0 + x.1 * y.0, n), x.1 * y.1)
}

pub fn inv(x: El, n: i64) -> El {
    (md(-x.1 * x.0, n), x.1)
}

pub fn elements(n: i64) -> Vec<El> {
    (0..n).map(|k| (k, 1)).chain((0..n).map(|k| (k, -1))).collect()
}

/// Multiset of `x⁻¹y` over ordered pairs (right intervals).
pub fn right_iv(s: &Set, n: i64) -> BTreeMap<El, u32> {
    let mut m = BTreeMap::new();
    for &x in s {
        for &y in s {
            *m.entry(mul(inv(x, n), y, n)).or_insert(0) += 1;
        }
    }
    m
}

/// Multiset of `y·x⁻¹` over ordered pairs (left intervals).
pub fn left_iv(s: &Set, n: i64) -> BTreeMap<El, u32> {
    let mut m = BTreeMap::new();
    for &x in s {
        for &y in s {
            *m.entry(mul(y, inv(x, n), n)).or_insert(0) += 1;
        }
    }
    m
}

pub fn iv(s: &Set, n: i64, right: bool) -> BTreeMap<El, u32> {
    if right {
        right_iv(s, n)
    } else {
        left_iv(s, n)
    }
}

pub fn translate_left(g: El, s: &Set, n: i64) -> Set {
    s.iter().map(|&x| mul(g, x, n)).collect()
}

pub fn translate_right(s: &Set, g: El, n: i64) -> Set {
    s.iter().map(|&x| mul(x, g, n)).collect()
}

/// Related by a translation preserving the chosen interval vector: left
/// translations for right intervals, right translations for left ones.
pub fn trivially_related(a: &Set, b: &Set, n: i64, right: bool) -> bool {
    elements(n).into_iter().any(|g| {
        let image = if right {
            translate_left(g, a, n)
        } else {
            translate_right(a, g, n)
        };
        image == *b
    })
}

pub fn nontrivially_homometric(a: &Set, b: &Set, n: i64, right: bool) -> bool {
    iv(a, n, right) == iv(b, n, right) && !trivially_related(a, b, n, right)
}

/// All `p`-subsets of `D_n`.
pub fn subsets(n: i64, p: usize) -> Vec<Set> {
    let all = elements(n);
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(all: &[El], start: usize, p: usize, pick: &mut Vec<El>, out: &mut Vec<Set>) {
        if pick.len() == p {
            out.push(pick.iter().copied().collect());
            return;
        }
        for i in start..all.len() {
            pick.push(all[i]);
            rec(all, i + 1, p, pick, out);
            pick.pop();
        }
    }
    rec(&all, 0, p, &mut pick, &mut out);
    out
}

pub fn single_sign(s: &Set) -> bool {
    s.iter().all(|x| x.1 == 1) || s.iter().all(|x| x.1 == -1)
}

/// `t ↦ number of interval-vector classes holding exactly t orbits`.
pub fn census(n: i64, p: usize, right: bool, include_single_sign: bool) -> BTreeMap<usize, usize> {
    let mut seen: BTreeSet<Set> = BTreeSet::new();
    let mut classes: HashMap<BTreeMap<El, u32>, usize> = HashMap::new();
    for s in subsets(n, p) {
        if (!include_single_sign && single_sign(&s)) || seen.contains(&s) {
            continue;
        }
        for g in elements(n) {
            seen.insert(if right {
                translate_left(g, &s, n)
            } else {
                translate_right(&s, g, n)
            });
        }
        *classes.entry(iv(&s, n, right)).or_insert(0) += 1;
    }
    tally(classes.into_values())
}

pub fn tally(sizes: impl Iterator<Item = usize>) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for t in sizes.filter(|&t| t >= 2) {
        *out.entry(t).or_insert(0) += 1;
    }
    out
}

/// Census of `p`-subsets of `Z_n` up to transposition and inversion.
pub fn zn_census(n: i64, p: usize) -> BTreeMap<usize, usize> {
    let mut seen = BTreeSet::new();
    let mut classes: HashMap<Vec<u32>, usize> = HashMap::new();
    for bits in 0u32..1 << n {
        if bits.count_ones() as usize != p {
            continue;
        }
        let s: Vec<i64> = (0..n).filter(|k| bits >> k & 1 == 1).collect();
        let key = |v: Vec<i64>| {
            let mut v = v;
            v.sort();
            v
        };
        if seen.contains(&key(s.clone())) {
            continue;
        }
        for q in 0..n {
            seen.insert(key(s.iter().map(|&k| md(k + q, n)).collect()));
            seen.insert(key(s.iter().map(|&k| md(q - k, n)).collect()));
        }
        let mut counts = vec![0u32; n as usize];
        for &x in &s {
            for &y in &s {
                counts[md(y - x, n) as usize] += 1;
            }
        }
        *classes.entry(counts).or_insert(0) += 1;
    }
    tally(classes.into_values())
}

pub fn to_set(s: &dihedral_homometry::DihedralSet) -> Set {
    s.elements()
        .map(|x| (x.k() as i64, i64::from(x.sign().value())))
        .collect()
}

pub fn from_set(s: &Set, n: usize) -> dihedral_homometry::DihedralSet {
    let pairs: Vec<(usize, i8)> = s.iter().map(|&(k, e)| (k as usize, e as i8)).collect();
    dihedral_homometry::DihedralSet::from_pairs(n, &pairs).unwrap()
}

/// Right- or left-interval vector in the library's layout: index `k` holds
/// `(k, +1)`, index `n + k` holds `(k, -1)`.
pub fn layout(m: &BTreeMap<El, u32>, n: i64) -> Vec<u32> {
    let mut v = vec![0; 2 * n as usize];
    for (&(k, e), &c) in m {
        v[if e == 1 { k } else { n + k } as usize] = c;
    }
    v
}

//! Subsets of the cyclic group `Z_n`.
//!
//! A [`ZnSet`] is an `n`-bit little-endian mask: bit `k` is set when residue
//! `k` belongs to the set. Translation is a rotation of the mask and the
//! interval function is a sequence of shifted popcounts.

use std::fmt;
use std::ops::Index;

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest modulus representable by a [`ZnSet`].
pub const MAX_MODULUS: usize = 64;

#[inline]
pub(crate) fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Rotates an `n`-bit mask so that bit `k` moves to bit `k + shift mod n`.
#[inline]
pub(crate) fn rotate(bits: u64, shift: usize, n: usize) -> u64 {
    let shift = shift % n;
    if shift == 0 {
        return bits;
    }
    ((bits << shift) | (bits >> (n - shift))) & mask(n)
}

/// Maps bit `k` to bit `n - 1 - k`.
#[inline]
pub(crate) fn reverse(bits: u64, n: usize) -> u64 {
    bits.reverse_bits() >> (64 - n)
}

/// Maps bit `k` to bit `p - k mod n`.
#[inline]
pub(crate) fn reflect(bits: u64, p: usize, n: usize) -> u64 {
    rotate(reverse(bits, n), (p % n) + 1, n)
}

pub(crate) fn check_modulus(n: usize) -> Result<()> {
    if (1..=MAX_MODULUS).contains(&n) {
        Ok(())
    } else {
        Err(Error::ModulusOutOfRange {
            n,
            min: 1,
            max: MAX_MODULUS,
        })
    }
}

/// A subset of `Z_n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZnSet {
    n: usize,
    bits: u64,
}

impl ZnSet {
    pub fn empty(n: usize) -> Result<Self> {
        check_modulus(n)?;
        Ok(ZnSet { n, bits: 0 })
    }

    pub fn full(n: usize) -> Result<Self> {
        check_modulus(n)?;
        Ok(ZnSet { n, bits: mask(n) })
    }

    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        check_modulus(n)?;
        if bits & !mask(n) != 0 {
            let residue = 63 - bits.leading_zeros() as usize;
            return Err(Error::ResidueOutOfRange { residue, n });
        }
        Ok(ZnSet { n, bits })
    }

    /// Builds a set from residues. Repeated residues are merged.
    pub fn from_residues<I>(n: usize, residues: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        check_modulus(n)?;
        let mut bits = 0u64;
        for residue in residues {
            if residue >= n {
                return Err(Error::ResidueOutOfRange { residue, n });
            }
            bits |= 1 << residue;
        }
        Ok(ZnSet { n, bits })
    }

    pub(crate) const fn from_raw(n: usize, bits: u64) -> Self {
        ZnSet { n, bits }
    }

    /// Parses the comma-separated text form, e.g. `"0,1,4,6"`.
    ///
    /// Whitespace around residues is ignored. Duplicates are rejected. The
    /// error carries the 1-based column of the offending token.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        check_modulus(n)?;
        let mut bits = 0u64;
        if text.trim().is_empty() {
            return Ok(ZnSet { n, bits });
        }
        let mut column = 1;
        for token in text.split(',') {
            let lead = token.len() - token.trim_start().len();
            let at = column + lead;
            let word = token.trim();
            let residue: usize = word
                .parse()
                .map_err(|_| Error::parse(at, format!("expected a residue, found {word:?}")))?;
            if residue >= n {
                return Err(Error::parse(
                    at,
                    format!("residue {residue} is out of range for Z_{n}"),
                ));
            }
            if bits & (1 << residue) != 0 {
                return Err(Error::parse(at, format!("duplicate residue {residue}")));
            }
            bits |= 1 << residue;
            column += token.len() + 1;
        }
        Ok(ZnSet { n, bits })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, residue: usize) -> bool {
        residue < self.n && self.bits & (1 << residue) != 0
    }

    /// Residues in increasing order.
    pub fn residues(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let k = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(k)
            }
        })
    }

    /// `T_p A = { p + a }`.
    pub fn transpose(&self, p: usize) -> ZnSet {
        ZnSet {
            n: self.n,
            bits: rotate(self.bits, p % self.n, self.n),
        }
    }

    /// `I_p A = { p - a }`.
    pub fn invert(&self, p: usize) -> ZnSet {
        ZnSet {
            n: self.n,
            bits: reflect(self.bits, p, self.n),
        }
    }

    pub fn union(&self, other: &ZnSet) -> Result<ZnSet> {
        same_modulus(self, other)?;
        Ok(ZnSet {
            n: self.n,
            bits: self.bits | other.bits,
        })
    }

    pub fn is_disjoint(&self, other: &ZnSet) -> bool {
        self.bits & other.bits == 0
    }
}

fn same_modulus(a: &ZnSet, b: &ZnSet) -> Result<()> {
    if a.n == b.n {
        Ok(())
    } else {
        Err(Error::ModulusMismatch(a.n, b.n))
    }
}

impl fmt::Display for ZnSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.residues().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ZnSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z{}{{{}}}", self.n, self)
    }
}

impl Serialize for ZnSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Interval counts indexed by `k ∈ Z_n`, including `k = 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IntervalVector {
    n: usize,
    counts: Vec<u32>,
}

impl IntervalVector {
    pub fn from_counts(counts: Vec<u32>) -> Self {
        IntervalVector {
            n: counts.len(),
            counts,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| u64::from(c)).sum()
    }

    /// Pointwise sum; both vectors must share a modulus.
    pub fn sum(&self, other: &IntervalVector) -> Result<IntervalVector> {
        if self.n != other.n {
            return Err(Error::ModulusMismatch(self.n, other.n));
        }
        let counts = self.counts.iter().zip(&other.counts).map(|(a, b)| a + b).collect();
        Ok(IntervalVector { n: self.n, counts })
    }
}

impl Index<usize> for IntervalVector {
    type Output = u32;

    fn index(&self, k: usize) -> &u32 {
        &self.counts[k]
    }
}

impl fmt::Display for IntervalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_counts(f, &self.counts)
    }
}

impl fmt::Debug for IntervalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn write_counts(f: &mut fmt::Formatter<'_>, counts: &[u32]) -> fmt::Result {
    f.write_str("[")?;
    for (i, c) in counts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{c}")?;
    }
    f.write_str("]")
}

/// Raw `ifunc` kernel on masks sharing modulus `n`.
#[inline]
pub(crate) fn ifunc_bits(a: u64, b: u64, n: usize, out: &mut [u32]) {
    for (k, slot) in out.iter_mut().enumerate().take(n) {
        *slot = (rotate(a, k, n) & b).count_ones();
    }
}

/// `ifunc(A, B)(k) = #{(a, b) ∈ A × B : b - a = k}`.
pub fn ifunc(a: &ZnSet, b: &ZnSet) -> Result<IntervalVector> {
    same_modulus(a, b)?;
    let mut counts = vec![0; a.n];
    ifunc_bits(a.bits, b.bits, a.n, &mut counts);
    Ok(IntervalVector { n: a.n, counts })
}

/// `iv(A) = ifunc(A, A)`.
pub fn iv(a: &ZnSet) -> IntervalVector {
    let mut counts = vec![0; a.n];
    ifunc_bits(a.bits, a.bits, a.n, &mut counts);
    IntervalVector { n: a.n, counts }
}

pub fn is_homometric(a: &ZnSet, b: &ZnSet) -> Result<bool> {
    same_modulus(a, b)?;
    Ok(a.len() == b.len() && iv(a) == iv(b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TiKind {
    T,
    I,
}

/// A transposition `T_p` or an inversion `I_p` of `Z_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TiMap {
    pub kind: TiKind,
    pub p: usize,
}

impl TiMap {
    pub fn apply(&self, a: &ZnSet) -> ZnSet {
        match self.kind {
            TiKind::T => a.transpose(self.p),
            TiKind::I => a.invert(self.p),
        }
    }
}

impl fmt::Display for TiMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            TiKind::T => write!(f, "T_{}", self.p),
            TiKind::I => write!(f, "I_{}", self.p),
        }
    }
}

/// Finds a map `T_p` or `I_p` sending `a` to `b`: smallest `p` first, `T`
/// before `I` at equal `p`. Sets over different moduli are never related.
pub fn trivial_relation(a: &ZnSet, b: &ZnSet) -> Option<TiMap> {
    if a.n != b.n || a.len() != b.len() {
        return None;
    }
    (0..a.n).find_map(|p| {
        if a.transpose(p) == *b {
            Some(TiMap { kind: TiKind::T, p })
        } else if a.invert(p) == *b {
            Some(TiMap { kind: TiKind::I, p })
        } else {
            None
        }
    })
}

/// Values of a discrete Fourier transform over `Z_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<Complex64>,
}

impl Spectrum {
    /// `F(f)(t) = Σ_k f(k) exp(-2πi k t / n)` for a real function on `Z_n`.
    pub fn of_function(values: &[f64]) -> Spectrum {
        let n = values.len();
        let values = (0..n)
            .map(|t| {
                values
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| **v != 0.0)
                    .map(|(k, v)| *v * unit_root(n, k * t))
                    .sum()
            })
            .collect();
        Spectrum { values }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn magnitudes(&self) -> Vec<f64> {
        self.values.iter().map(|z| z.norm()).collect()
    }

    /// `∞`-norm distance between two spectra of the same length.
    pub fn max_distance(&self, other: &Spectrum) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl Index<usize> for Spectrum {
    type Output = Complex64;

    fn index(&self, t: usize) -> &Complex64 {
        &self.values[t]
    }
}

/// `exp(-2πi m / n)`, with `m` reduced first so the angle stays small.
fn unit_root(n: usize, m: usize) -> Complex64 {
    let angle = -2.0 * std::f64::consts::PI * ((m % n) as f64) / n as f64;
    Complex64::from_polar(1.0, angle)
}

/// `F_A(t) = Σ_{k∈A} exp(-2πi k t / n)`.
pub fn dft(a: &ZnSet) -> Spectrum {
    let n = a.n;
    let values = (0..n)
        .map(|t| a.residues().map(|k| unit_root(n, k * t)).sum())
        .collect();
    Spectrum { values }
}

/// Pointwise `∞`-norm distance between two real-valued vectors.
pub(crate) fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z12(r: &[usize]) -> ZnSet {
        ZnSet::from_residues(12, r.iter().copied()).unwrap()
    }

    #[test]
    fn ifunc_cross_pairs() {
        let v = ifunc(&z12(&[0, 6]), &z12(&[1, 4])).unwrap();
        for k in 0..12 {
            let expected = u32::from([1, 4, 7, 10].contains(&k));
            assert_eq!(v[k], expected, "k={k}");
        }
        let v = ifunc(&z12(&[1, 3]), &z12(&[0, 4, 8])).unwrap();
        for k in 0..12 {
            assert_eq!(v[k], (k % 2) as u32, "k={k}");
        }
    }

    #[test]
    fn ifunc_empty_is_zero() {
        let v = ifunc(&ZnSet::empty(12).unwrap(), &z12(&[1, 2, 3])).unwrap();
        assert!(v.counts().iter().all(|&c| c == 0));
    }

    #[test]
    fn ifunc_rejects_mismatch() {
        let a = ZnSet::from_residues(8, [0]).unwrap();
        assert_eq!(ifunc(&a, &z12(&[0])), Err(Error::ModulusMismatch(8, 12)));
        assert!(is_homometric(&a, &z12(&[0])).is_err());
    }

    #[test]
    fn all_interval_tetrachords() {
        let expected = [4, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1];
        assert_eq!(iv(&z12(&[0, 1, 4, 6])).counts(), &expected);
        assert_eq!(iv(&z12(&[0, 1, 3, 7])).counts(), &expected);
        assert!(is_homometric(&z12(&[0, 1, 4, 6]), &z12(&[0, 1, 3, 7])).unwrap());
        assert_eq!(trivial_relation(&z12(&[0, 1, 4, 6]), &z12(&[0, 1, 3, 7])), None);
    }

    #[test]
    fn singleton_iv() {
        let v = iv(&z12(&[0]));
        assert_eq!(v[0], 1);
        assert_eq!(v.total(), 1);
    }

    #[test]
    fn projections_of_d10_pair_are_not_homometric() {
        let a = ZnSet::from_residues(10, [0, 1, 2, 5, 7]).unwrap();
        let b = ZnSet::from_residues(10, [0, 1, 6, 7, 8]).unwrap();
        assert!(!is_homometric(&a, &b).unwrap());
    }

    #[test]
    fn transpositions_and_inversions() {
        let a = z12(&[1, 3]);
        assert_eq!(a.transpose(0), a);
        assert_eq!(a.transpose(2), z12(&[3, 5]));
        assert_eq!(a.invert(0), z12(&[9, 11]));
        assert_eq!(a.invert(5), z12(&[2, 4]));
    }

    #[test]
    fn trivial_relation_tie_break() {
        let a = z12(&[0, 1, 4, 6]);
        assert_eq!(trivial_relation(&a, &a), Some(TiMap { kind: TiKind::T, p: 0 }));
        assert_eq!(
            trivial_relation(&z12(&[1, 3]), &z12(&[9, 11])),
            Some(TiMap { kind: TiKind::I, p: 0 })
        );
        // {0,6} is both T_6- and I_6-symmetric; T_0 wins.
        let tritone = z12(&[0, 6]);
        assert_eq!(trivial_relation(&tritone, &tritone).unwrap().to_string(), "T_0");
    }

    #[test]
    fn text_form() {
        assert_eq!(ZnSet::parse(12, "0,1,4,6").unwrap(), z12(&[0, 1, 4, 6]));
        assert_eq!(ZnSet::parse(12, " 0, 1 ,4").unwrap(), z12(&[0, 1, 4]));
        assert_eq!(ZnSet::parse(12, "").unwrap(), ZnSet::empty(12).unwrap());
        assert_eq!(z12(&[6, 0, 4, 1]).to_string(), "0,1,4,6");
        assert_eq!(
            ZnSet::parse(12, "0,1,1"),
            Err(Error::parse(5, "duplicate residue 1"))
        );
        assert!(matches!(ZnSet::parse(12, "0,12"), Err(Error::Parse { column: 3, .. })));
        assert!(matches!(ZnSet::parse(12, "0,x"), Err(Error::Parse { column: 3, .. })));
    }

    #[test]
    fn dft_edge_cases() {
        let zero = dft(&ZnSet::empty(12).unwrap());
        assert!(zero.values().iter().all(|z| z.norm() == 0.0));
        let full = dft(&ZnSet::full(12).unwrap());
        assert!((full[0].re - 12.0).abs() < 1e-12);
        for t in 1..12 {
            assert!(full[t].norm() < 1e-9, "t={t}");
        }
        let a = dft(&z12(&[0, 1, 4, 6]));
        let b = dft(&z12(&[0, 1, 3, 7]));
        assert!(max_abs_diff(&a.magnitudes(), &b.magnitudes()) <= 1e-9);
    }

    #[test]
    fn modulus_bounds() {
        assert!(ZnSet::empty(0).is_err());
        assert!(ZnSet::empty(65).is_err());
        let big = ZnSet::from_residues(64, [0, 63]).unwrap();
        assert_eq!(big.transpose(1).residues().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(big.invert(0).residues().collect::<Vec<_>>(), vec![0, 1]);
        assert!(ZnSet::from_bits(4, 0b10000).is_err());
    }
}

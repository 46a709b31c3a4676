//! The dihedral group `D_n` as the semidirect product `Z_n ⋊ Z_2`.
//!
//! Elements are pairs `(k, ε)` with product `(k, ε)(l, η) = (k + εl, εη)`.
//! Sets are stored as their two sign classes, each projected to a
//! [`ZnSet`], so the set-level left and right actions reduce to rotations and
//! reflections of bitmasks.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::zn::{self, check_modulus, reflect, rotate, write_counts, ZnSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    #[inline]
    pub fn mul(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// `ε · k mod n`.
#[inline]
fn signed(k: usize, sign: Sign, n: usize) -> usize {
    match sign {
        Sign::Plus => k,
        Sign::Minus => (n - k) % n,
    }
}

/// An element `(k, ε)` of `D_n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    n: usize,
    k: usize,
    sign: Sign,
}

impl DihedralElement {
    pub fn new(n: usize, k: usize, sign: Sign) -> Result<Self> {
        check_modulus(n)?;
        if k >= n {
            return Err(Error::ResidueOutOfRange { residue: k, n });
        }
        Ok(DihedralElement { n, k, sign })
    }

    #[inline]
    pub(crate) const fn raw(n: usize, k: usize, sign: Sign) -> Self {
        DihedralElement { n, k, sign }
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, 0, Sign::Plus)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn is_identity(&self) -> bool {
        self.k == 0 && self.sign == Sign::Plus
    }

    /// Frozen encoding: `k` for `(k, +1)` and `n + k` for `(k, -1)`.
    pub fn index(&self) -> usize {
        match self.sign {
            Sign::Plus => self.k,
            Sign::Minus => self.n + self.k,
        }
    }

    pub fn from_index(n: usize, index: usize) -> Result<Self> {
        check_modulus(n)?;
        match index {
            i if i < n => Ok(Self::raw(n, i, Sign::Plus)),
            i if i < 2 * n => Ok(Self::raw(n, i - n, Sign::Minus)),
            i => Err(Error::ResidueOutOfRange {
                residue: i,
                n: 2 * n,
            }),
        }
    }

    /// All `2n` elements in encoding order.
    pub fn all(n: usize) -> Result<Vec<Self>> {
        check_modulus(n)?;
        Ok((0..2 * n).map(|i| Self::from_index(n, i).unwrap()).collect())
    }

    #[inline]
    pub(crate) fn mul_unchecked(self, other: Self) -> Self {
        let n = self.n;
        DihedralElement {
            n,
            k: (self.k + signed(other.k, self.sign, n)) % n,
            sign: self.sign.mul(other.sign),
        }
    }

    /// `(k, ε)(l, η) = (k + εl, εη)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        same_n(self.n, other.n)?;
        Ok(self.mul_unchecked(*other))
    }

    /// `(k, ε)⁻¹ = (-εk, ε)`.
    pub fn inv(&self) -> Self {
        DihedralElement {
            n: self.n,
            k: signed(self.k, self.sign.mul(Sign::Minus), self.n),
            sign: self.sign,
        }
    }

    #[inline]
    pub(crate) fn left_int_unchecked(x: Self, y: Self) -> Self {
        let n = x.n;
        let sign = y.sign.mul(x.sign);
        DihedralElement {
            n,
            k: (y.k + n - signed(x.k, sign, n)) % n,
            sign,
        }
    }

    #[inline]
    pub(crate) fn right_int_unchecked(x: Self, y: Self) -> Self {
        let n = x.n;
        DihedralElement {
            n,
            k: signed((y.k + n - x.k) % n, x.sign, n),
            sign: y.sign.mul(x.sign),
        }
    }

    /// The unique `g` with `g x = y`: `(k₂ - (ε₂/ε₁) k₁, ε₂/ε₁)`.
    pub fn left_int(x: &Self, y: &Self) -> Result<Self> {
        same_n(x.n, y.n)?;
        Ok(Self::left_int_unchecked(*x, *y))
    }

    /// The unique `g` with `x g = y`: `((k₂ - k₁)/ε₁, ε₂/ε₁)`.
    pub fn right_int(x: &Self, y: &Self) -> Result<Self> {
        same_n(x.n, y.n)?;
        Ok(Self::right_int_unchecked(*x, *y))
    }

    /// Parses `"k+"` or `"k-"`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        parse_element(n, text.trim(), 1)
    }
}

fn parse_element(n: usize, word: &str, column: usize) -> Result<DihedralElement> {
    let (digits, sign) = match word.char_indices().last() {
        Some((i, '+')) => (&word[..i], Sign::Plus),
        Some((i, '-')) => (&word[..i], Sign::Minus),
        _ => {
            return Err(Error::parse(
                column,
                format!("expected an element like \"4+\" or \"4-\", found {word:?}"),
            ))
        }
    };
    let k: usize = digits
        .parse()
        .map_err(|_| Error::parse(column, format!("expected a residue, found {digits:?}")))?;
    if k >= n {
        return Err(Error::parse(
            column,
            format!("residue {k} is out of range for D_{n}"),
        ));
    }
    Ok(DihedralElement::raw(n, k, sign))
}

fn same_n(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::ModulusMismatch(a, b))
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.k, self.sign)
    }
}

impl fmt::Debug for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}1)", self.k, self.sign)
    }
}

impl Serialize for DihedralElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A subset of `D_n`, stored as the projections of its two sign classes.
///
/// The derived ordering compares `(plus mask, minus mask)`
/// lexicographically, which is the order used for canonical representatives.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralSet {
    plus: ZnSet,
    minus: ZnSet,
}

impl DihedralSet {
    pub fn empty(n: usize) -> Result<Self> {
        Ok(DihedralSet {
            plus: ZnSet::empty(n)?,
            minus: ZnSet::empty(n)?,
        })
    }

    pub fn from_parts(plus: ZnSet, minus: ZnSet) -> Result<Self> {
        same_n(plus.n(), minus.n())?;
        Ok(DihedralSet { plus, minus })
    }

    #[inline]
    pub(crate) fn from_bits(n: usize, plus: u64, minus: u64) -> Self {
        DihedralSet {
            plus: ZnSet::from_raw(n, plus),
            minus: ZnSet::from_raw(n, minus),
        }
    }

    /// Collects elements; duplicates collapse since this is a set.
    pub fn from_elements<I>(n: usize, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = DihedralElement>,
    {
        let mut set = Self::empty(n)?;
        for x in elements {
            set.insert(x)?;
        }
        Ok(set)
    }

    /// Convenience constructor from `(k, ±1)` pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, i8)]) -> Result<Self> {
        let elements = pairs
            .iter()
            .map(|&(k, e)| {
                let sign = match e {
                    1 => Sign::Plus,
                    -1 => Sign::Minus,
                    _ => return Err(Error::Precondition(format!("sign must be ±1, got {e}"))),
                };
                DihedralElement::new(n, k, sign)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_elements(n, elements)
    }

    /// Parses the comma-separated text form, e.g. `"0+,1-,4-,6+"`.
    ///
    /// Duplicated elements are rejected.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut set = Self::empty(n)?;
        if text.trim().is_empty() {
            return Ok(set);
        }
        let mut column = 1;
        for token in text.split(',') {
            let lead = token.len() - token.trim_start().len();
            let at = column + lead;
            let x = parse_element(n, token.trim(), at)?;
            if set.contains(&x) {
                return Err(Error::parse(at, format!("duplicate element {x}")));
            }
            set.insert(x)?;
            column += token.len() + 1;
        }
        Ok(set)
    }

    pub fn n(&self) -> usize {
        self.plus.n()
    }

    /// `A₊` projected to `Z_n`.
    pub fn plus(&self) -> ZnSet {
        self.plus
    }

    /// `A₋` projected to `Z_n`.
    pub fn minus(&self) -> ZnSet {
        self.minus
    }

    pub fn len(&self) -> usize {
        self.plus.len() + self.minus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.plus.is_empty() && self.minus.is_empty()
    }

    /// True when one of the two sign classes is empty.
    pub fn is_single_sign(&self) -> bool {
        self.plus.is_empty() || self.minus.is_empty()
    }

    pub fn contains(&self, x: &DihedralElement) -> bool {
        x.n == self.n()
            && match x.sign {
                Sign::Plus => self.plus.contains(x.k),
                Sign::Minus => self.minus.contains(x.k),
            }
    }

    /// Inserting an element already present is a no-op.
    pub fn insert(&mut self, x: DihedralElement) -> Result<()> {
        let n = self.n();
        same_n(n, x.n)?;
        let part = match x.sign {
            Sign::Plus => &mut self.plus,
            Sign::Minus => &mut self.minus,
        };
        *part = ZnSet::from_raw(n, part.bits() | 1 << x.k);
        Ok(())
    }

    /// Elements in encoding order: `(·, +1)` by residue, then `(·, -1)`.
    pub fn elements(&self) -> impl Iterator<Item = DihedralElement> + '_ {
        let n = self.n();
        self.plus
            .residues()
            .map(move |k| DihedralElement::raw(n, k, Sign::Plus))
            .chain(
                self.minus
                    .residues()
                    .map(move |k| DihedralElement::raw(n, k, Sign::Minus)),
            )
    }

    #[inline]
    pub(crate) fn act_left_unchecked(&self, g: DihedralElement) -> Self {
        let n = self.n();
        let (p, q) = (self.plus.bits(), self.minus.bits());
        match g.sign {
            // (k,+)(a,ε) = (k + a, ε)
            Sign::Plus => Self::from_bits(n, rotate(p, g.k, n), rotate(q, g.k, n)),
            // (k,-)(a,ε) = (k - a, -ε)
            Sign::Minus => Self::from_bits(n, reflect(q, g.k, n), reflect(p, g.k, n)),
        }
    }

    #[inline]
    pub(crate) fn act_right_unchecked(&self, g: DihedralElement) -> Self {
        let n = self.n();
        let (p, q) = (self.plus.bits(), self.minus.bits());
        let back = (n - g.k) % n;
        match g.sign {
            // (a,+)(k,+) = (a + k, +), (a,-)(k,+) = (a - k, -)
            Sign::Plus => Self::from_bits(n, rotate(p, g.k, n), rotate(q, back, n)),
            // (a,+)(k,-) = (a + k, -), (a,-)(k,-) = (a - k, +)
            Sign::Minus => Self::from_bits(n, rotate(q, back, n), rotate(p, g.k, n)),
        }
    }

    /// `g𝒜 = { g x : x ∈ 𝒜 }`.
    pub fn act_left(&self, g: &DihedralElement) -> Result<Self> {
        same_n(self.n(), g.n)?;
        Ok(self.act_left_unchecked(*g))
    }

    /// `𝒜g = { x g : x ∈ 𝒜 }`.
    pub fn act_right(&self, g: &DihedralElement) -> Result<Self> {
        same_n(self.n(), g.n)?;
        Ok(self.act_right_unchecked(*g))
    }

    /// The inversion operator `I(𝒜) = { x⁻¹ : x ∈ 𝒜 }`: `A₊ ↦ I₀A₊`, `A₋`
    /// unchanged.
    pub fn inversion(&self) -> Self {
        DihedralSet {
            plus: self.plus.invert(0),
            minus: self.minus,
        }
    }

    /// First projection `π(𝒜) = A₊ ∪ A₋`.
    pub fn project(&self) -> ZnSet {
        ZnSet::from_raw(self.n(), self.plus.bits() | self.minus.bits())
    }

    fn interval_vector(
        &self,
        int: fn(DihedralElement, DihedralElement) -> DihedralElement,
    ) -> DihedralIntervalVector {
        let n = self.n();
        let mut counts = vec![0u32; 2 * n];
        let elements: Vec<_> = self.elements().collect();
        for &x in &elements {
            for &y in &elements {
                counts[int(x, y).index()] += 1;
            }
        }
        DihedralIntervalVector { n, counts }
    }

    /// `ˡiv`: counts of `ˡint(x, y)` over ordered pairs.
    pub fn left_iv(&self) -> DihedralIntervalVector {
        self.interval_vector(DihedralElement::left_int_unchecked)
    }

    /// `ʳiv`: counts of `ʳint(x, y)` over ordered pairs.
    pub fn right_iv(&self) -> DihedralIntervalVector {
        self.interval_vector(DihedralElement::right_int_unchecked)
    }
}

impl fmt::Display for DihedralSet {
    /// Sorted by residue, `+` before `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for k in self.project().residues() {
            for (part, sign) in [(self.plus, '+'), (self.minus, '-')] {
                if part.contains(k) {
                    if !first {
                        f.write_str(",")?;
                    }
                    first = false;
                    write!(f, "{k}{sign}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DihedralSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{}{{{}}}", self.n(), self)
    }
}

impl Serialize for DihedralSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Interval counts over `D_n`: index `l` holds `(l, +1)`, index `n + l`
/// holds `(l, -1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DihedralIntervalVector {
    n: usize,
    counts: Vec<u32>,
}

impl DihedralIntervalVector {
    /// Counts must have even length `2n`.
    pub fn from_counts(counts: Vec<u32>) -> Result<Self> {
        if counts.len() % 2 != 0 || counts.is_empty() {
            return Err(Error::Precondition(format!(
                "a dihedral interval vector needs 2n entries, got {}",
                counts.len()
            )));
        }
        Ok(DihedralIntervalVector {
            n: counts.len() / 2,
            counts,
        })
    }

    /// Tallies a multiset of intervals.
    pub fn from_intervals<'a, I>(n: usize, intervals: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a DihedralElement>,
    {
        check_modulus(n)?;
        let mut counts = vec![0; 2 * n];
        for x in intervals {
            same_n(n, x.n)?;
            counts[x.index()] += 1;
        }
        Ok(DihedralIntervalVector { n, counts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn get(&self, x: &DihedralElement) -> u32 {
        self.counts[x.index()]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| u64::from(c)).sum()
    }
}

impl fmt::Display for DihedralIntervalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_counts(f, &self.counts)
    }
}

impl fmt::Debug for DihedralIntervalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Euler's totient.
pub fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&k| gcd(k, n) == 1).count()
}

/// An automorphism `(l, k) ∈ Z_n ⋊ Z_n*` of `D_n`, acting by
/// `(p, +1) ↦ (kp, +1)` and `(q, -1) ↦ (kq + l, -1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DihedralAutomorphism {
    n: usize,
    shift: usize,
    unit: usize,
}

impl DihedralAutomorphism {
    pub fn new(n: usize, shift: usize, unit: usize) -> Result<Self> {
        check_modulus(n)?;
        if shift >= n {
            return Err(Error::ResidueOutOfRange { residue: shift, n });
        }
        if unit >= n || gcd(unit, n) != 1 {
            return Err(Error::NotAUnit { k: unit, n });
        }
        Ok(DihedralAutomorphism { n, shift, unit })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, 0, 1 % n)
    }

    /// All `n · φ(n)` automorphisms, ordered by `(l, k)`.
    pub fn all(n: usize) -> Result<Vec<Self>> {
        check_modulus(n)?;
        let units: Vec<usize> = (0..n).filter(|&k| gcd(k, n) == 1).collect();
        Ok((0..n)
            .flat_map(|l| units.iter().map(move |&k| DihedralAutomorphism { n, shift: l, unit: k }))
            .collect())
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn apply(&self, x: &DihedralElement) -> Result<DihedralElement> {
        same_n(self.n, x.n)?;
        let n = self.n;
        Ok(match x.sign {
            Sign::Plus => DihedralElement::raw(n, (self.unit * x.k) % n, Sign::Plus),
            Sign::Minus => {
                DihedralElement::raw(n, (self.unit * x.k + self.shift) % n, Sign::Minus)
            }
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        same_n(self.n, other.n)?;
        let n = self.n;
        Ok(DihedralAutomorphism {
            n,
            shift: (self.unit * other.shift + self.shift) % n,
            unit: (self.unit * other.unit) % n,
        })
    }

    /// Whether the map preserves both left and right intervals of every pair.
    pub fn preserves_intervals(&self) -> bool {
        let elements = DihedralElement::all(self.n).expect("modulus checked on construction");
        let image: Vec<_> = elements.iter().map(|x| self.apply(x).unwrap()).collect();
        elements.iter().zip(&image).all(|(&x, &ax)| {
            elements.iter().zip(&image).all(|(&y, &ay)| {
                DihedralElement::right_int_unchecked(ax, ay)
                    == DihedralElement::right_int_unchecked(x, y)
                    && DihedralElement::left_int_unchecked(ax, ay)
                        == DihedralElement::left_int_unchecked(x, y)
            })
        })
    }
}

impl fmt::Display for DihedralAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.shift, self.unit)
    }
}

/// Every automorphism of `D_n` that preserves all left and right intervals.
pub fn interval_preserving_automorphisms(n: usize) -> Result<Vec<DihedralAutomorphism>> {
    if n < 3 {
        return Err(Error::ModulusOutOfRange {
            n,
            min: 3,
            max: zn::MAX_MODULUS,
        });
    }
    Ok(DihedralAutomorphism::all(n)?
        .into_iter()
        .filter(DihedralAutomorphism::preserves_intervals)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(n: usize, k: usize, e: i8) -> DihedralElement {
        DihedralElement::new(n, k, if e > 0 { Sign::Plus } else { Sign::Minus }).unwrap()
    }

    #[test]
    fn products_from_triad_examples() {
        assert_eq!(el(12, 7, -1).mul(&el(12, 0, 1)).unwrap(), el(12, 7, -1));
        assert_eq!(el(12, 4, 1).mul(&el(12, 9, -1)).unwrap(), el(12, 1, -1));
        assert_eq!(el(12, 1, -1).mul(&el(12, 4, -1)).unwrap(), el(12, 9, 1));
        assert_eq!(
            el(12, 1, 1).mul(&el(8, 1, 1)),
            Err(Error::ModulusMismatch(12, 8))
        );
    }

    #[test]
    fn inverses() {
        assert_eq!(el(12, 3, 1).inv(), el(12, 9, 1));
        assert_eq!(el(12, 5, -1).inv(), el(12, 5, -1));
        for x in DihedralElement::all(12).unwrap() {
            assert!(x.mul(&x.inv()).unwrap().is_identity());
        }
    }

    #[test]
    fn interval_functions() {
        let c = el(12, 0, -1);
        let db = el(12, 1, 1);
        assert_eq!(DihedralElement::right_int(&c, &db).unwrap(), el(12, 11, -1));
        assert_eq!(DihedralElement::left_int(&c, &db).unwrap(), el(12, 1, -1));
        assert!(DihedralElement::right_int(&db, &db).unwrap().is_identity());
    }

    #[test]
    fn interval_vectors_of_three_element_set() {
        let s = DihedralSet::from_pairs(12, &[(0, 1), (2, -1), (3, 1)]).unwrap();
        let right = DihedralIntervalVector::from_intervals(
            12,
            &[
                el(12, 0, 1),
                el(12, 0, 1),
                el(12, 0, 1),
                el(12, 2, -1),
                el(12, 2, -1),
                el(12, 3, 1),
                el(12, 11, -1),
                el(12, 11, -1),
                el(12, 9, 1),
            ],
        )
        .unwrap();
        let left = DihedralIntervalVector::from_intervals(
            12,
            &[
                el(12, 0, 1),
                el(12, 0, 1),
                el(12, 0, 1),
                el(12, 2, -1),
                el(12, 2, -1),
                el(12, 3, 1),
                el(12, 5, -1),
                el(12, 5, -1),
                el(12, 9, 1),
            ],
        )
        .unwrap();
        assert_eq!(s.right_iv(), right);
        assert_eq!(s.left_iv(), left);
        // Elementwise inversion does not preserve intervals.
        let inv = s.inversion();
        assert_eq!(inv, DihedralSet::from_pairs(12, &[(0, 1), (2, -1), (9, 1)]).unwrap());
        assert_ne!(inv.right_iv(), s.right_iv());
        assert_ne!(inv.left_iv(), s.left_iv());
    }

    #[test]
    fn singleton_vectors() {
        let s = DihedralSet::from_pairs(12, &[(5, -1)]).unwrap();
        for v in [s.left_iv(), s.right_iv()] {
            assert_eq!(v.counts()[0], 1);
            assert_eq!(v.total(), 1);
        }
    }

    #[test]
    fn set_inversion_example() {
        let a = DihedralSet::from_pairs(12, &[(0, -1), (1, 1), (3, 1), (4, -1), (8, -1)]).unwrap();
        let expected =
            DihedralSet::from_pairs(12, &[(0, -1), (11, 1), (9, 1), (4, -1), (8, -1)]).unwrap();
        assert_eq!(a.inversion(), expected);
        assert_eq!(a.inversion().inversion(), a);
        let minus_only = DihedralSet::from_pairs(12, &[(3, -1), (5, -1)]).unwrap();
        assert_eq!(minus_only.inversion(), minus_only);
    }

    #[test]
    fn projection() {
        let a = DihedralSet::from_pairs(12, &[(0, -1), (1, 1), (3, 1), (4, -1), (8, -1)]).unwrap();
        assert_eq!(a.project(), ZnSet::from_residues(12, [0, 1, 3, 4, 8]).unwrap());
        assert!(DihedralSet::empty(12).unwrap().project().is_empty());
        let both = DihedralSet::from_pairs(12, &[(0, 1), (0, -1)]).unwrap();
        assert_eq!(both.len(), 2);
        assert_eq!(both.project().len(), 1);
    }

    #[test]
    fn set_actions_match_elementwise_products() {
        let s = DihedralSet::from_pairs(10, &[(0, 1), (3, -1), (4, 1), (9, -1)]).unwrap();
        for g in DihedralElement::all(10).unwrap() {
            let left = DihedralSet::from_elements(10, s.elements().map(|x| g.mul_unchecked(x)));
            let right = DihedralSet::from_elements(10, s.elements().map(|x| x.mul_unchecked(g)));
            assert_eq!(s.act_left(&g).unwrap(), left.unwrap(), "g={g}");
            assert_eq!(s.act_right(&g).unwrap(), right.unwrap(), "g={g}");
        }
        let t = el(12, 5, 1);
        let moved = DihedralSet::from_pairs(12, &[(1, 1), (4, -1)])
            .unwrap()
            .act_left(&t)
            .unwrap();
        assert_eq!(moved, DihedralSet::from_pairs(12, &[(6, 1), (9, -1)]).unwrap());
    }

    #[test]
    fn text_forms() {
        let s = DihedralSet::parse(12, "0+,1-,4-,6+").unwrap();
        assert_eq!(s, DihedralSet::from_pairs(12, &[(0, 1), (1, -1), (4, -1), (6, 1)]).unwrap());
        assert_eq!(s.to_string(), "0+,1-,4-,6+");
        assert_eq!(DihedralElement::parse(12, "4-").unwrap(), el(12, 4, -1));
        assert_eq!(el(12, 4, -1).to_string(), "4-");
        assert!(matches!(
            DihedralSet::parse(12, "0+,1*"),
            Err(Error::Parse { column: 4, .. })
        ));
        assert!(matches!(
            DihedralSet::parse(12, "0+, 0+"),
            Err(Error::Parse { column: 5, .. })
        ));
        assert!(DihedralSet::parse(12, "12+").is_err());
        let mut dup = s;
        dup.insert(el(12, 0, 1)).unwrap();
        assert_eq!(dup, s);
    }

    #[test]
    fn automorphism_action() {
        let a = DihedralAutomorphism::new(12, 1, 5).unwrap();
        assert_eq!(a.apply(&el(12, 3, -1)).unwrap(), el(12, 4, -1));
        assert_eq!(a.apply(&el(12, 3, 1)).unwrap(), el(12, 3, 1));
        assert!(matches!(
            DihedralAutomorphism::new(12, 0, 4),
            Err(Error::NotAUnit { k: 4, n: 12 })
        ));
        let id = DihedralAutomorphism::identity(12).unwrap();
        for x in DihedralElement::all(12).unwrap() {
            assert_eq!(id.apply(&x).unwrap(), x);
        }
    }

    #[test]
    fn automorphism_composition_stays_in_group() {
        let all = DihedralAutomorphism::all(9).unwrap();
        assert_eq!(all.len(), 9 * euler_phi(9));
        for a in &all {
            for b in &all {
                let c = a.compose(b).unwrap();
                assert!(all.contains(&c));
                for x in DihedralElement::all(9).unwrap() {
                    assert_eq!(c.apply(&x).unwrap(), a.apply(&b.apply(&x).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn only_identity_preserves_intervals() {
        for n in [8, 12] {
            let found = interval_preserving_automorphisms(n).unwrap();
            assert_eq!(found, vec![DihedralAutomorphism::identity(n).unwrap()]);
        }
        assert!(interval_preserving_automorphisms(2).is_err());
    }
}

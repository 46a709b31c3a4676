//! Homometry and triviality in `D_n`.
//!
//! Right-homometry compares right interval vectors and is trivial when the
//! two sets are left translates of each other; left-homometry is the mirror
//! image. Besides the direct definitions this module carries the
//! characterizations over `Z_n` (`iv`/`ifunc` of the sign classes) and their
//! Fourier counterparts, which the tests use as independent oracles.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::dn::{DihedralElement, DihedralIntervalVector, DihedralSet, Sign};
use crate::error::{Error, Result};
use crate::zn::{dft, ifunc, iv};

/// Spectral comparisons use this `∞`-norm tolerance.
pub const SPECTRAL_TOLERANCE: f64 = 1e-9;

/// Which interval function is compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    pub fn interval_vector(self, s: &DihedralSet) -> DihedralIntervalVector {
        match self {
            Side::Left => s.left_iv(),
            Side::Right => s.right_iv(),
        }
    }

    /// Applies the translation that is trivial for this side: left
    /// translation `g𝒜` for right-homometry, right translation `𝒜g` for
    /// left-homometry.
    pub(crate) fn translate(self, s: &DihedralSet, g: DihedralElement) -> DihedralSet {
        match self {
            Side::Right => s.act_left_unchecked(g),
            Side::Left => s.act_right_unchecked(g),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Side> {
        match s.to_ascii_lowercase().as_str() {
            "left" | "l" => Ok(Side::Left),
            "right" | "r" => Ok(Side::Right),
            other => Err(Error::parse(1, format!("unknown side {other:?}"))),
        }
    }
}

fn same_n(a: &DihedralSet, b: &DihedralSet) -> Result<()> {
    if a.n() == b.n() {
        Ok(())
    } else {
        Err(Error::ModulusMismatch(a.n(), b.n()))
    }
}

pub fn is_homometric(a: &DihedralSet, b: &DihedralSet, side: Side) -> Result<bool> {
    same_n(a, b)?;
    Ok(a.len() == b.len() && side.interval_vector(a) == side.interval_vector(b))
}

pub fn is_right_homometric(a: &DihedralSet, b: &DihedralSet) -> Result<bool> {
    is_homometric(a, b, Side::Right)
}

pub fn is_left_homometric(a: &DihedralSet, b: &DihedralSet) -> Result<bool> {
    is_homometric(a, b, Side::Left)
}

/// Homometry decided on the sign classes alone.
///
/// Right: `iv(A₊) + iv(A₋) = iv(B₊) + iv(B₋)` and
/// `ifunc(A₊, A₋) = ifunc(B₊, B₋)`. Left replaces the second condition with
/// `ifunc(I₀A₊, A₋) = ifunc(I₀B₊, B₋)`.
pub fn decomposition_check(a: &DihedralSet, b: &DihedralSet, side: Side) -> Result<bool> {
    same_n(a, b)?;
    let diagonal = |s: &DihedralSet| iv(&s.plus()).sum(&iv(&s.minus()));
    if diagonal(a)? != diagonal(b)? {
        return Ok(false);
    }
    let cross = |s: &DihedralSet| match side {
        Side::Right => ifunc(&s.plus(), &s.minus()),
        Side::Left => ifunc(&s.plus().invert(0), &s.minus()),
    };
    Ok(cross(a)? == cross(b)?)
}

pub fn decomposition_right_check(a: &DihedralSet, b: &DihedralSet) -> Result<bool> {
    decomposition_check(a, b, Side::Right)
}

pub fn decomposition_left_check(a: &DihedralSet, b: &DihedralSet) -> Result<bool> {
    decomposition_check(a, b, Side::Left)
}

/// Searches the `2n` translates that are trivial for `side` and returns the
/// one with the smallest encoded index mapping `a` onto `b`.
pub fn triviality_witness(a: &DihedralSet, b: &DihedralSet, side: Side) -> Option<DihedralElement> {
    if a.n() != b.n() || a.len() != b.len() {
        return None;
    }
    let n = a.n();
    (0..2 * n)
        .map(|i| DihedralElement::from_index(n, i).unwrap())
        .find(|&g| side.translate(a, g) == *b)
}

/// The same witness, found from the conditions on the sign classes:
///
/// - right: `T_pA₊ = B₊ ∧ T_pA₋ = B₋` gives `(p, +1)`, and
///   `I_pA₊ = B₋ ∧ I_pA₋ = B₊` gives `(p, -1)`;
/// - left: `T_pA₊ = B₊ ∧ T_{-p}A₋ = B₋` gives `(p, +1)`, and
///   `T_pA₊ = B₋ ∧ T_{-p}A₋ = B₊` gives `(p, -1)`.
pub fn triviality_witness_by_parts(
    a: &DihedralSet,
    b: &DihedralSet,
    side: Side,
) -> Option<DihedralElement> {
    if a.n() != b.n() {
        return None;
    }
    let n = a.n();
    let (ap, am, bp, bm) = (a.plus(), a.minus(), b.plus(), b.minus());
    let holds = |p: usize, sign: Sign| match (side, sign) {
        (Side::Right, Sign::Plus) => ap.transpose(p) == bp && am.transpose(p) == bm,
        (Side::Right, Sign::Minus) => ap.invert(p) == bm && am.invert(p) == bp,
        (Side::Left, Sign::Plus) => ap.transpose(p) == bp && am.transpose(n - p) == bm,
        (Side::Left, Sign::Minus) => ap.transpose(p) == bm && am.transpose(n - p) == bp,
    };
    [Sign::Plus, Sign::Minus]
        .into_iter()
        .flat_map(|sign| (0..n).map(move |p| (p, sign)))
        .find(|&(p, sign)| holds(p, sign))
        .map(|(p, sign)| DihedralElement::new(n, p, sign).unwrap())
}

/// Outcome of comparing two sets for one side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HomometryVerdict {
    pub side: Side,
    pub homometric: bool,
    /// A translation relating the two sets, when one exists.
    pub trivial_witness: Option<DihedralElement>,
}

impl HomometryVerdict {
    pub fn is_nontrivial(&self) -> bool {
        self.homometric && self.trivial_witness.is_none()
    }
}

pub fn verdict(a: &DihedralSet, b: &DihedralSet, side: Side) -> Result<HomometryVerdict> {
    let homometric = is_homometric(a, b, side)?;
    Ok(HomometryVerdict {
        side,
        homometric,
        trivial_witness: triviality_witness(a, b, side),
    })
}

/// Non-trivially homometric: homometric for `side` and not related by a
/// translation that is trivial for `side`.
pub fn is_nontrivially_homometric(a: &DihedralSet, b: &DihedralSet, side: Side) -> Result<bool> {
    Ok(verdict(a, b, side)?.is_nontrivial())
}

/// `(I(𝒜), I(ℬ))`. Non-trivially right-homometric pairs map to
/// non-trivially left-homometric pairs and back.
pub fn duality_transport(a: &DihedralSet, b: &DihedralSet) -> Result<(DihedralSet, DihedralSet)> {
    same_n(a, b)?;
    Ok((a.inversion(), b.inversion()))
}

/// Whether the projections of a right-homometric pair are homometric in
/// `Z_n`. Inputs that are not right-homometric are rejected.
///
/// This always holds when `A₊ ∩ A₋ = B₊ ∩ B₋ = ∅`. When a residue carries
/// both signs the projected *set* forgets it, and the answer can be `false`:
/// `{0+,0-,2+,4+,6-}` and `{0+,2+,2-,4+,8-}` in `D_12` are right-homometric
/// while `{0,2,4,6}` and `{0,2,4,8}` are not homometric. Counting residues
/// with multiplicity, see [`projection_multiplicity_check`], the answer is
/// always `true`.
pub fn projection_check(a: &DihedralSet, b: &DihedralSet) -> Result<bool> {
    if !is_right_homometric(a, b)? {
        return Err(Error::Precondition(format!(
            "{{{a}}} and {{{b}}} are not right-homometric"
        )));
    }
    crate::zn::is_homometric(&a.project(), &b.project())
}

/// Autocorrelation of `1_{A₊} + 1_{A₋}`, the projection counted with
/// multiplicity.
pub fn projected_interval_vector(s: &DihedralSet) -> Result<Vec<u32>> {
    let (p, m) = (s.plus(), s.minus());
    let parts = [iv(&p), iv(&m), ifunc(&p, &m)?, ifunc(&m, &p)?];
    Ok((0..s.n())
        .map(|k| parts.iter().map(|v| v.counts()[k]).sum())
        .collect())
}

/// Like [`projection_check`], counting a residue twice when it carries both
/// signs. Always `true` for right-homometric inputs.
pub fn projection_multiplicity_check(a: &DihedralSet, b: &DihedralSet) -> Result<bool> {
    if !is_right_homometric(a, b)? {
        return Err(Error::Precondition(format!(
            "{{{a}}} and {{{b}}} are not right-homometric"
        )));
    }
    Ok(projected_interval_vector(a)? == projected_interval_vector(b)?)
}

/// True when both sets have an `I₀`-symmetric plus part, or both have an
/// `I₀`-symmetric minus part. Right- and left-homometry then coincide.
pub fn prop6_applies(a: &DihedralSet, b: &DihedralSet) -> bool {
    let symmetric = |s: crate::zn::ZnSet| s.invert(0) == s;
    (symmetric(a.plus()) && symmetric(b.plus())) || (symmetric(a.minus()) && symmetric(b.minus()))
}

struct SignSpectra {
    power: Vec<f64>,
    cross: Vec<Complex64>,
}

fn sign_spectra(s: &DihedralSet, side: Side) -> SignSpectra {
    let fp = dft(&s.plus());
    let fm = dft(&s.minus());
    let power = fp
        .values()
        .iter()
        .zip(fm.values())
        .map(|(p, m)| p.norm_sqr() + m.norm_sqr())
        .collect();
    let cross = fp
        .values()
        .iter()
        .zip(fm.values())
        .map(|(p, m)| match side {
            Side::Right => p.conj() * m,
            Side::Left => p * m,
        })
        .collect();
    SignSpectra { power, cross }
}

/// The Fourier form of [`decomposition_check`], compared within
/// [`SPECTRAL_TOLERANCE`]:
///
/// - right: `|F_{A₊}|² + |F_{A₋}|²` and `conj(F_{A₊}) F_{A₋}` agree with `ℬ`;
/// - left: `|F_{A₊}|² + |F_{A₋}|²` and `F_{A₊} F_{A₋}` agree with `ℬ`.
pub fn fourier_conditions(a: &DihedralSet, b: &DihedralSet, side: Side) -> Result<bool> {
    same_n(a, b)?;
    let sa = sign_spectra(a, side);
    let sb = sign_spectra(b, side);
    let power_ok = crate::zn::max_abs_diff(&sa.power, &sb.power) <= SPECTRAL_TOLERANCE;
    let cross_ok = sa
        .cross
        .iter()
        .zip(&sb.cross)
        .all(|(x, y)| (x - y).norm() <= SPECTRAL_TOLERANCE);
    Ok(power_ok && cross_ok)
}

//! Exact homometry in the cyclic groups `Z_n` and the dihedral groups
//! `D_n = Z_n ⋊ Z_2`.
//!
//! Two subsets of a group are *homometric* when they share the same interval
//! vector. In `Z_n` this is the classical Z-relation of pitch-class set
//! theory. In the non-commutative `D_n` there are two interval functions, one
//! for each side of the multiplication, and therefore two notions of
//! homometry.
//!
//! The crate is organised bottom-up:
//!
//! - [`zn`]: subsets of `Z_n` as bitmasks, `ifunc`, `iv`, transpositions and
//!   inversions, and the DFT of indicator functions.
//! - [`dn`]: dihedral elements and sets, left/right interval functions and
//!   vectors, set actions and the automorphism group.
//! - [`homometry`]: homometry and triviality predicates, the decomposition
//!   criteria over `Z_n` and their Fourier counterparts.
//! - [`lift`]: lifting homometric pairs from `Z_n` to `D_n`.
//! - [`enumeration`]: the orbit-reduced census of homometric t-uples.
//! - [`music`]: triad names, T/I and PLR labels, generalized chord orbits.
//! - [`suites`]: self-checks re-deriving the main facts, used by the CLI.
//!
//! Every homometry decision is made with exact integer arithmetic. The
//! Fourier routines exist only as cross-checks.

pub mod dn;
pub mod enumeration;
mod error;
pub mod homometry;
pub mod lift;
pub mod music;
pub mod suites;
pub mod zn;

pub use dn::{DihedralAutomorphism, DihedralElement, DihedralIntervalVector, DihedralSet, Sign};
pub use error::{Error, Result};
pub use homometry::{HomometryVerdict, Side};
pub use zn::{IntervalVector, Spectrum, ZnSet};

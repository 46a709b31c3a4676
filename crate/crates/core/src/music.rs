//! Musical reading of `D_12` and of `D_n` in general.
//!
//! `(s, +1)` is the major triad on root `s` and `(s, -1)` the minor triad on
//! root `s`. The left action is then the T/I group and the right action the
//! PLR group. Black keys are printed with flats; parsing accepts `b`, `♭`,
//! `#` and `♯`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::dn::{DihedralElement, DihedralSet, Sign};
use crate::error::{Error, Result};
use crate::zn::{TiKind, TiMap, ZnSet};

pub const NOTE_NAMES: [&str; 12] = [
    "C", "Db", "D", "Eb", "E", "F", "Gb", "G", "Ab", "A", "Bb", "B",
];

pub fn note_name(pc: usize) -> &'static str {
    NOTE_NAMES[pc % 12]
}

fn require_twelve(n: usize) -> Result<()> {
    if n == 12 {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "musical names need n = 12, got n = {n}"
        )))
    }
}

/// Parses a note name; returns the pitch class and whether the letter was
/// upper case.
pub fn parse_note(text: &str) -> Result<(usize, bool)> {
    let mut chars = text.chars();
    let letter = chars
        .next()
        .ok_or_else(|| Error::parse(1, "empty note name"))?;
    let base = match letter.to_ascii_uppercase() {
        'C' => 0,
        'D' => 2,
        'E' => 4,
        'F' => 5,
        'G' => 7,
        'A' => 9,
        'B' => 11,
        _ => return Err(Error::parse(1, format!("unknown note letter '{letter}'"))),
    };
    let mut pc = base;
    for (i, c) in chars.enumerate() {
        pc = match c {
            'b' | '♭' => pc + 11,
            '#' | '♯' => pc + 1,
            _ => return Err(Error::parse(i + 2, format!("unexpected '{c}' in note name"))),
        };
    }
    Ok((pc % 12, letter.is_ascii_uppercase()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Quality {
    Major,
    Minor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ChordLabel {
    pub root: usize,
    pub quality: Quality,
}

impl ChordLabel {
    pub fn element(&self) -> DihedralElement {
        let sign = match self.quality {
            Quality::Major => Sign::Plus,
            Quality::Minor => Sign::Minus,
        };
        DihedralElement::new(12, self.root, sign).expect("root below 12")
    }

    /// Pitch classes of the triad.
    pub fn pitch_classes(&self) -> ZnSet {
        let third = match self.quality {
            Quality::Major => 4,
            Quality::Minor => 3,
        };
        ZnSet::from_residues(12, [self.root, (self.root + third) % 12, (self.root + 7) % 12])
            .expect("residues reduced")
    }
}

impl fmt::Display for ChordLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = note_name(self.root);
        match self.quality {
            Quality::Major => f.write_str(name),
            Quality::Minor => {
                let mut chars = name.chars();
                let first = chars.next().expect("non-empty name");
                write!(f, "{}{}", first.to_ascii_lowercase(), chars.as_str())
            }
        }
    }
}

impl FromStr for ChordLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (root, upper) = parse_note(s.trim())?;
        Ok(ChordLabel {
            root,
            quality: if upper { Quality::Major } else { Quality::Minor },
        })
    }
}

pub fn render_triad(x: &DihedralElement) -> Result<ChordLabel> {
    require_twelve(x.n())?;
    Ok(ChordLabel {
        root: x.k(),
        quality: match x.sign() {
            Sign::Plus => Quality::Major,
            Sign::Minus => Quality::Minor,
        },
    })
}

pub fn parse_triad(text: &str) -> Result<DihedralElement> {
    Ok(text.parse::<ChordLabel>()?.element())
}

/// Pitch classes of the triad named by `x`.
pub fn triad_pcs(x: &DihedralElement) -> Result<ZnSet> {
    Ok(render_triad(x)?.pitch_classes())
}

/// Parses `"c,Db,Eb,e,Ab"`; error columns count characters of `text`.
pub fn parse_chord_set(text: &str) -> Result<DihedralSet> {
    let mut set = DihedralSet::empty(12)?;
    if text.trim().is_empty() {
        return Ok(set);
    }
    let mut column = 1;
    for token in text.split(',') {
        let lead = token.len() - token.trim_start().len();
        let x = parse_triad(token).map_err(|e| match e {
            Error::Parse { column: c, message } => Error::Parse {
                column: column + lead + c - 1,
                message,
            },
            other => other,
        })?;
        if set.contains(&x) {
            return Err(Error::parse(
                column + lead,
                format!("duplicate chord '{}'", token.trim()),
            ));
        }
        set.insert(x)?;
        column += token.chars().count() + 1;
    }
    Ok(set)
}

/// Chord names ordered by root, major before minor.
pub fn render_chord_set(s: &DihedralSet) -> Result<String> {
    require_twelve(s.n())?;
    let mut elements: Vec<DihedralElement> = s.elements().collect();
    elements.sort_by_key(|x| (x.k(), x.sign() == Sign::Minus));
    let names: Result<Vec<String>> = elements
        .iter()
        .map(|x| render_triad(x).map(|c| c.to_string()))
        .collect();
    Ok(names?.join(","))
}

/// A T/I operation named by its kind and index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GisLabel {
    pub kind: TiKind,
    pub index: usize,
}

impl GisLabel {
    pub fn map(&self) -> TiMap {
        TiMap {
            kind: self.kind,
            p: self.index,
        }
    }

    /// The element of `D_12` acting on the left as this operation.
    pub fn element(&self) -> DihedralElement {
        match self.kind {
            TiKind::T => DihedralElement::new(12, self.index % 12, Sign::Plus),
            TiKind::I => DihedralElement::new(12, (self.index + 5) % 12, Sign::Minus),
        }
        .expect("index reduced")
    }
}

impl fmt::Display for GisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            TiKind::T => 'T',
            TiKind::I => 'I',
        };
        write!(f, "{kind}{}", self.index)
    }
}

impl FromStr for GisLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let kind = match s.chars().next() {
            Some('T') => TiKind::T,
            Some('I') => TiKind::I,
            _ => return Err(Error::parse(1, "expected T or I")),
        };
        let digits = s[1..].trim_start_matches('_');
        let index: usize = digits
            .parse()
            .map_err(|_| Error::parse(2, format!("bad index '{digits}'")))?;
        if index >= 12 {
            return Err(Error::ResidueOutOfRange { residue: index, n: 12 });
        }
        Ok(GisLabel { kind, index })
    }
}

/// `(p, +1)` is `T_p` and `(p, -1)` is `I_{p-5}`.
pub fn ti_label(g: &DihedralElement) -> Result<GisLabel> {
    require_twelve(g.n())?;
    Ok(match g.sign() {
        Sign::Plus => GisLabel {
            kind: TiKind::T,
            index: g.k(),
        },
        Sign::Minus => GisLabel {
            kind: TiKind::I,
            index: (g.k() + 7) % 12,
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Plr {
    P,
    L,
    R,
}

impl Plr {
    pub const ALL: [Plr; 3] = [Plr::P, Plr::L, Plr::R];
}

impl fmt::Display for Plr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Plr::P => "P",
            Plr::L => "L",
            Plr::R => "R",
        })
    }
}

/// `P = (0,-1)`, `L = (4,-1)`, `R = (9,-1)`, acting on the right.
pub fn plr_generator(sym: Plr) -> DihedralElement {
    let k = match sym {
        Plr::P => 0,
        Plr::L => 4,
        Plr::R => 9,
    };
    DihedralElement::new(12, k, Sign::Minus).expect("k below 12")
}

/// A word in `P`, `L`, `R`, written like a composition of maps: the
/// rightmost letter acts first. `"PL"` sends `x` to `x·L·P`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PlrWord(pub Vec<Plr>);

impl PlrWord {
    pub fn letters(&self) -> &[Plr] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The element `g` such that the word sends every triad `x` to `x·g`.
    pub fn eval(&self) -> DihedralElement {
        self.0
            .iter()
            .rev()
            .fold(DihedralElement::identity(12).expect("n = 12"), |acc, &s| {
                acc.mul(&plr_generator(s)).expect("same modulus")
            })
    }
}

impl fmt::Display for PlrWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{s}"))
    }
}

impl FromStr for PlrWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'P' => Ok(Plr::P),
                'L' => Ok(Plr::L),
                'R' => Ok(Plr::R),
                _ => Err(Error::parse(i + 1, format!("'{c}' is not P, L or R"))),
            })
            .collect::<Result<_>>()
            .map(PlrWord)
    }
}

/// Shortest word evaluating to `g`, the lexicographically first one
/// (`P < L < R`) among those. Longer words such as `"PRLR"` may name the
/// same element; any two words with the same value are equivalent.
pub fn plr_word(g: &DihedralElement) -> Result<PlrWord> {
    require_twelve(g.n())?;
    // Letters grow on the right of the word, i.e. on the left of the
    // product, so each length is scanned in lexicographic order.
    let mut frontier = vec![(PlrWord::default(), DihedralElement::identity(12)?)];
    for _ in 0..=12 {
        if let Some((w, _)) = frontier.iter().find(|(_, v)| v == g) {
            return Ok(w.clone());
        }
        frontier = frontier
            .iter()
            .flat_map(|(w, v)| {
                Plr::ALL.iter().map(move |&s| {
                    let mut letters = w.0.clone();
                    letters.push(s);
                    (PlrWord(letters), plr_generator(s).mul_unchecked(*v))
                })
            })
            .collect();
    }
    Err(Error::ContractViolation(format!(
        "no PLR word reaches {g:?}"
    )))
}

/// A member of the orbit `⟨X⟩` with its name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitMember {
    pub set: ZnSet,
    pub label: String,
}

impl fmt::Display for OrbitMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_pcs(&self.set))
    }
}

fn check_simply_transitive(x: &ZnSet, base: usize) -> Result<()> {
    let n = x.n();
    let mut images: Vec<ZnSet> = (0..n)
        .flat_map(|k| [x.transpose(k), x.invert(base).transpose(k)])
        .collect();
    images.sort();
    images.dedup();
    if images.len() == 2 * n {
        Ok(())
    } else {
        Err(Error::NotSimplyTransitive(format!(
            "{{{x}}} has a stabilizer of order {}",
            2 * n / images.len()
        )))
    }
}

/// Reads `g` as a member of `⟨X⟩ = {X, T_1X, …, I_0X, …}`: `(k, +1)` is
/// `T_kX` and `(k, -1)` is `I_kX`.
pub fn render_over_x(x_pcs: &ZnSet, g: &DihedralElement) -> Result<OrbitMember> {
    render_over_x_with_base(x_pcs, 0, g)
}

/// As [`render_over_x`] with `(0, -1)` standing for `I_base X`, so that
/// `(k, -1)` is `T_k I_base X`. With `X` the C major triad and `base = 7`
/// this is the triad dictionary (`c = I_7 C`).
pub fn render_over_x_with_base(
    x_pcs: &ZnSet,
    base: usize,
    g: &DihedralElement,
) -> Result<OrbitMember> {
    let n = x_pcs.n();
    if g.n() != n {
        return Err(Error::ModulusMismatch(n, g.n()));
    }
    check_simply_transitive(x_pcs, base)?;
    let k = g.k();
    Ok(match g.sign() {
        Sign::Plus => OrbitMember {
            set: x_pcs.transpose(k),
            label: format!("T_{k} X"),
        },
        Sign::Minus => {
            let index = (k + base) % n;
            OrbitMember {
                set: x_pcs.invert(index),
                label: format!("I_{index} X"),
            }
        }
    })
}

/// Renders every element of `s` over `X`.
pub fn render_set_over_x(
    x_pcs: &ZnSet,
    base: usize,
    s: &DihedralSet,
) -> Result<Vec<OrbitMember>> {
    s.elements()
        .map(|g| render_over_x_with_base(x_pcs, base, &g))
        .collect()
}

/// `"[C,Db,F]"` for `n = 12`, `"[0,1,5]"` otherwise.
pub fn render_pcs(s: &ZnSet) -> String {
    let names: Vec<String> = s
        .residues()
        .map(|r| {
            if s.n() == 12 {
                note_name(r).to_string()
            } else {
                r.to_string()
            }
        })
        .collect();
    format!("[{}]", names.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(k: usize, e: i8) -> DihedralElement {
        DihedralElement::new(12, k, if e > 0 { Sign::Plus } else { Sign::Minus }).unwrap()
    }

    #[test]
    fn triad_names() {
        assert_eq!(render_triad(&el(8, -1)).unwrap().to_string(), "ab");
        assert_eq!(render_triad(&el(0, 1)).unwrap().to_string(), "C");
        assert_eq!(parse_triad("g").unwrap(), el(7, -1));
        assert_eq!(parse_triad("C#").unwrap(), el(1, 1));
        assert_eq!(parse_triad("d♭").unwrap(), el(1, -1));
        assert_eq!(parse_triad("bb").unwrap(), el(10, -1));
        assert_eq!(parse_triad("b").unwrap(), el(11, -1));
        assert!(parse_triad("H").is_err());
        assert!(render_triad(&DihedralElement::identity(10).unwrap()).is_err());
        for x in DihedralElement::all(12).unwrap() {
            let name = render_triad(&x).unwrap().to_string();
            assert_eq!(parse_triad(&name).unwrap(), x);
        }
    }

    #[test]
    fn triad_pitch_classes() {
        assert_eq!(triad_pcs(&el(0, 1)).unwrap().to_string(), "0,4,7");
        assert_eq!(triad_pcs(&el(0, -1)).unwrap().to_string(), "0,3,7");
        assert_eq!(triad_pcs(&el(9, -1)).unwrap().to_string(), "0,4,9");
    }

    #[test]
    fn chord_sets() {
        let s = parse_chord_set("c,Db,Eb,e,Ab").unwrap();
        assert_eq!(
            s,
            DihedralSet::from_pairs(12, &[(0, -1), (1, 1), (3, 1), (4, -1), (8, 1)]).unwrap()
        );
        assert_eq!(render_chord_set(&s).unwrap(), "c,Db,Eb,e,Ab");
        assert_eq!(
            parse_chord_set("C, c, x"),
            Err(Error::Parse {
                column: 7,
                message: "unknown note letter 'x'".into()
            })
        );
        assert!(matches!(parse_chord_set("C,c,C"), Err(Error::Parse { column: 5, .. })));
        assert!(parse_chord_set("").unwrap().is_empty());
    }

    #[test]
    fn ti_dictionary() {
        assert_eq!(ti_label(&el(7, -1)).unwrap().to_string(), "I2");
        assert_eq!(ti_label(&el(0, 1)).unwrap().to_string(), "T0");
        for g in DihedralElement::all(12).unwrap() {
            let label = ti_label(&g).unwrap();
            assert_eq!(label.element(), g);
            assert_eq!(label.to_string().parse::<GisLabel>().unwrap(), label);
            // Acting on the left on triads agrees with T/I on pitch classes.
            for x in DihedralElement::all(12).unwrap() {
                let image = triad_pcs(&g.mul(&x).unwrap()).unwrap();
                assert_eq!(label.map().apply(&triad_pcs(&x).unwrap()), image);
            }
        }
        assert!("X3".parse::<GisLabel>().is_err());
        assert!("T12".parse::<GisLabel>().is_err());
    }

    #[test]
    fn plr_generators() {
        let f = el(4, 1);
        assert_eq!(f.mul(&plr_generator(Plr::R)).unwrap(), el(1, -1));
        for s in Plr::ALL {
            let g = plr_generator(s);
            assert!(g.mul(&g).unwrap().is_identity());
        }
    }

    #[test]
    fn plr_words() {
        let c = parse_triad("c").unwrap();
        let e_flat = parse_triad("Eb").unwrap();
        let int = DihedralElement::right_int(&c, &e_flat).unwrap();
        assert_eq!(plr_word(&int).unwrap().to_string(), "R");
        assert!(plr_word(&el(0, 1)).unwrap().is_empty());
        assert_eq!("PL".parse::<PlrWord>().unwrap().eval(), el(4, 1));
        for g in DihedralElement::all(12).unwrap() {
            let w = plr_word(&g).unwrap();
            assert!(w.len() <= 12);
            assert_eq!(w.eval(), g);
        }
        assert!("PXL".parse::<PlrWord>().is_err());
    }

    #[test]
    fn plr_commutes_with_ti() {
        for g in DihedralElement::all(12).unwrap() {
            for s in Plr::ALL {
                for x in DihedralElement::all(12).unwrap() {
                    let h = plr_generator(s);
                    assert_eq!(
                        g.mul(&x).unwrap().mul(&h).unwrap(),
                        g.mul(&x.mul(&h).unwrap()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn orbit_of_x() {
        let major = ZnSet::parse(12, "0,4,7").unwrap();
        for g in DihedralElement::all(12).unwrap() {
            let member = render_over_x_with_base(&major, 7, &g).unwrap();
            assert_eq!(member.set, triad_pcs(&g).unwrap());
        }
        let x = ZnSet::parse(12, "0,1,5").unwrap();
        let m = render_over_x(&x, &el(3, -1)).unwrap();
        assert_eq!(m.label, "I_3 X");
        assert_eq!(m.set, x.invert(3));
        assert_eq!(render_over_x(&x, &el(4, 1)).unwrap().to_string(), "[E,F,A]");
        assert!(matches!(
            render_over_x(&ZnSet::parse(12, "0,1,11").unwrap(), &el(0, 1)),
            Err(Error::NotSimplyTransitive(_))
        ));
        assert!(render_over_x(&x, &DihedralElement::identity(10).unwrap()).is_err());
        assert_eq!(render_pcs(&ZnSet::parse(7, "0,1,3").unwrap()), "[0,1,3]");
    }
}

//! Reference listings, transcribed verbatim.

/// Classes of `D_12` by cardinality: `(p, right classes, left classes)`.
/// Each class lists its sets as chord names.
pub const CHORD_CLASSES: &[(usize, &[&[&str]], &[&[&str]])] = &[
    (
        4,
        &[
            &["C,c,e♭,G♭", "C,c,E♭,g♭"],
            &["C,d♭,e,G♭", "C,d♭,E♭,g"],
            &["C,d,f,G♭", "C,d,E♭,a♭"],
        ],
        &[
            // Printed as "C,d,e♭,G♭", which shares no interval vector with
            // its partner; "c" for "d" restores the pair.
            &["C,c,e♭,G♭", "C,c,g♭,A"],
            &["C,d♭,e,G♭", "C,d♭,g,A"],
            &["C,d,f,G♭", "C,d,a♭,A"],
        ],
    ),
    (
        5,
        &[
            &["C,c,d,E,A♭", "C,d,e,E,A♭"],
            &["C,d♭,e♭,E,A♭", "C,e♭,E,f,A♭"],
            &["C,c,d♭,f,G♭", "C,c,D♭,F,g♭"],
            &["C,c,e,f,G♭", "C,c,D♭,g♭,A♭"],
            &["C,c,E,F,g♭", "C,c,E,g♭,B"],
            &["C,d♭,E,F,g", "C,d♭,E,g,B"],
            &["C,d,E,F,a♭", "C,d,E,a♭,B"],
            &["C,e♭,E,F,a", "C,e♭,E,a,B"],
            &["C,c,d,e,G♭", "C,c,D,E,g♭", "C,c,D,g♭,B♭"],
            &["C,d♭,e♭,f,G♭", "C,d♭,D,E,g", "C,d♭,D,g,B♭"],
        ],
        &[
            &["C,c,d,E,A♭", "C,d,e,E,A♭"],
            &["C,d♭,e♭,E,A♭", "C,e♭,E,f,A♭"],
            &["C,c,d♭,f,G♭", "C,c,g♭,G,B"],
            // Printed with e♭ and E♭ for e and E; neither printed set has a
            // left-homometric partner.
            &["C,c,e,f,G♭", "C,c,E,g♭,B"],
            &["C,c,D♭,g♭,A♭", "C,c,g♭,G,A♭"],
            &["C,d♭,D♭,g,A♭", "C,d♭,g,G,A♭"],
            &["C,D♭,d,a♭,A♭", "C,d,G,a♭,A♭"],
            &["C,D♭,e♭,A♭,a", "C,e♭,G,A♭,a"],
            // Printed with e♭ for e, as in the right-hand listing.
            &["C,c,d,e,G♭", "C,c,D,g♭,B♭", "C,c,g♭,A♭,B♭"],
            &["C,d♭,e♭,f,G♭", "C,d♭,D,g,B♭", "C,d♭,g,A♭,B♭"],
        ],
    ),
];

/// The two five-chord sets drawn with their interval graphs.
pub const GRAPH_SETS: [&str; 2] = ["c,D♭,E♭,e,a♭", "c,E♭,e,F,a♭"];

/// `(from, to, left interval, right interval, T/I label, PLR word)` for the
/// arrows of each graph. Intervals are written `(k, ±1)`.
pub type Arrow = (&'static str, &'static str, (usize, i8), (usize, i8), &'static str, &'static str);

pub const ARROWS: [&[Arrow]; 2] = [
    &[
        ("c", "E♭", (3, -1), (9, -1), "I10", "R"),
        ("c", "D♭", (1, -1), (11, -1), "I8", "LRL"),
        ("D♭", "E♭", (2, 1), (2, 1), "T2", "PRLR"),
        ("D♭", "a♭", (9, -1), (7, -1), "I4", "PRL"),
        ("E♭", "e", (7, -1), (1, -1), "I2", "LPR"),
        ("E♭", "a♭", (11, -1), (5, -1), "I6", "RLP"),
        ("e", "c", (8, 1), (4, 1), "T8", "PL"),
        ("a♭", "e", (8, 1), (4, 1), "T8", "PL"),
    ],
    &[
        ("c", "e", (4, 1), (8, 1), "T4", "LP"),
        ("c", "E♭", (3, -1), (9, -1), "I10", "R"),
        ("E♭", "e", (7, -1), (1, -1), "I2", "LPR"),
        ("E♭", "a♭", (11, -1), (5, -1), "I6", "RLP"),
        ("e", "F", (9, -1), (11, -1), "I4", "LRL"),
        ("e", "a♭", (4, 1), (8, 1), "T4", "LP"),
        ("F", "c", (5, -1), (7, -1), "I0", "PRL"),
        ("a♭", "F", (1, -1), (3, -1), "I8", "PRP"),
    ],
];

/// The same two sets re-read over `X = [C,Db,F]`.
pub const OVER_X: [&[&str]; 2] = [
    &["C,Db,F", "Ab,A,E", "Ab,A,Db", "E,F,A", "Bb,B,Gb"],
    &["C,Db,F", "Bb,B,Gb", "Ab,A,Db", "C,Db,Ab", "E,F,A"],
];

/// Sets rendered over `X` above, as `(k, ±1)`.
pub const OVER_X_ELEMENTS: [&[(usize, i8)]; 2] = [
    &[(0, 1), (8, -1), (8, 1), (4, 1), (10, -1)],
    &[(0, 1), (10, -1), (8, 1), (0, -1), (4, 1)],
];

//! `dihom`: homometry in `Z_n` and `D_n` from the command line.
//!
//! Results go to stdout (or `--out`); progress and timings go to stderr.
//! Exit status: 0 on success, 1 on a domain or usage error, 2 when a
//! verification fails.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dihedral_homometry::enumeration::{
    duality_holds, enumerate_dn, enumerate_simultaneous, enumerate_zn, simultaneous_from_right,
    chord_class_listing, EnumerationOptions, EnumerationReport, SimultaneousConvention, CENSUS_CELLS,
};
use dihedral_homometry::homometry::{self, duality_transport, verdict, Side};
use dihedral_homometry::lift::{
    construct_lift, enumerate_lifts_with, rosenblatt_decomposition, Decomposition, LiftResult,
};
use dihedral_homometry::music::{parse_chord_set, plr_word, render_chord_set, ti_label};
use dihedral_homometry::suites::{run_suite, Suite};
use dihedral_homometry::zn::{self, trivial_relation};
use dihedral_homometry::{DihedralElement, DihedralIntervalVector, DihedralSet, Error, ZnSet};

#[derive(Parser, Debug)]
#[command(name = "dihom", version, about = "Homometric sets in Z_n and D_n")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write results to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,

    /// Suppress progress and timing messages on stderr.
    #[arg(long, short, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Existential,
    Representative,
}

impl From<ConventionArg> for SimultaneousConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Existential => SimultaneousConvention::Existential,
            ConventionArg::Representative => SimultaneousConvention::Representative,
        }
    }
}

/// Which group the sets live in.
#[derive(Args, Debug, Clone, Copy)]
#[group(multiple = false)]
struct Group {
    /// Subsets of Z_N, written "0,1,4,6".
    #[arg(long, value_name = "N")]
    zn: Option<usize>,

    /// Subsets of D_N, written "0-,1+,3+" ((k,+1) is "k+"). Defaults to 12
    /// with --music.
    #[arg(long, value_name = "N")]
    dn: Option<usize>,
}

#[derive(Args, Debug, Clone, Copy)]
struct Music {
    /// Read and write D_12 sets as chord names ("c,Db,Eb,e,Ab").
    #[arg(long)]
    music: bool,
}

#[derive(Args, Debug, Clone, Copy)]
struct Jobs {
    /// Worker threads (0: one per core).
    #[arg(long, env = "DIHOM_JOBS", default_value_t = 0)]
    jobs: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Interval vector of a set.
    Iv {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        music: Music,
        /// Interval side in D_n.
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        set: String,
    },
    /// Interval function between two sets.
    Ifunc {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        music: Music,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        a: String,
        b: String,
    },
    /// Homometry and triviality verdict for a pair.
    Check {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        music: Music,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        a: String,
        b: String,
    },
    /// Transport a pair through the set inversion, swapping sides.
    Dual {
        #[arg(long, value_name = "N")]
        dn: usize,
        #[command(flatten)]
        music: Music,
        a: String,
        b: String,
    },
    /// Lift a homometric pair of Z_n to D_n.
    Lift {
        #[arg(long, value_name = "N")]
        zn: usize,
        #[command(flatten)]
        music: Music,
        /// Build the lift from a decomposition A = A1 ∪ A2, B = B1 ∪ B2.
        #[arg(long, requires_all = ["a2", "b1", "b2"], conflicts_with = "enumerate")]
        a1: Option<String>,
        #[arg(long)]
        a2: Option<String>,
        #[arg(long)]
        b1: Option<String>,
        #[arg(long)]
        b2: Option<String>,
        /// Search every sign assignment of the pair A B.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        enumerate: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        /// Keep lifts in which a set has a single sign.
        #[arg(long)]
        include_single_sign: bool,
    },
    /// The tetrachord pair {0,a,a+N,2N}, {0,a,N,2N+a} of Z_4N and its lift.
    Rosenblatt {
        #[arg(long = "big-n", value_name = "N")]
        big_n: usize,
        #[arg(long)]
        a: usize,
    },
    /// Census of homometric t-uples of p-subsets.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        card: usize,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        /// Count classes homometric on both sides.
        #[arg(long, conflicts_with = "zn")]
        simultaneous: bool,
        /// With --simultaneous: whether some members of the orbits, or the
        /// canonical representatives themselves, must be left-homometric.
        #[arg(long, value_enum, default_value_t = ConventionArg::Existential)]
        convention: ConventionArg,
        /// Census of Z_n instead of D_n.
        #[arg(long)]
        zn: bool,
        /// Also count sets whose elements all share one sign.
        #[arg(long)]
        include_single_sign: bool,
        /// Also list the classes.
        #[arg(long)]
        classes: bool,
        #[command(flatten)]
        jobs: Jobs,
        #[command(flatten)]
        music: Music,
    },
    /// Right and left classes of D_12 for p = 4, 5 in chord names.
    Table1 {
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Census counts over the reference (n, p) cells.
    Table2 {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        card: Option<usize>,
        /// Print a single column.
        #[arg(long, value_enum)]
        side: Option<Column>,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Run verification suites.
    Verify {
        /// prop2, prop4, prop6, cor2, thm1, thm4 or all.
        #[arg(default_value = "all")]
        suite: String,
        #[command(flatten)]
        jobs: Jobs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Column {
    Right,
    Left,
    Simultaneous,
}

/// Result of one command, independent of the output format.
#[derive(Default)]
struct Output {
    command: &'static str,
    inputs: BTreeMap<String, Value>,
    verdicts: BTreeMap<String, bool>,
    vectors: BTreeMap<String, Vec<u32>>,
    counts: BTreeMap<String, u64>,
    records: Vec<Value>,
    text: String,
}

impl Output {
    fn new(command: &'static str) -> Self {
        Output {
            command,
            ..Default::default()
        }
    }

    fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    fn line(&mut self, line: impl AsRef<str>) {
        self.text.push_str(line.as_ref());
        self.text.push('\n');
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let value = json!({
                    "command": self.command,
                    "inputs": self.inputs,
                    "verdicts": self.verdicts,
                    "vectors": self.vectors,
                    "counts": self.counts,
                    "records": self.records,
                });
                serde_json::to_string_pretty(&value).expect("serializable") + "\n"
            }
            Format::Tsv => {
                let mut out = String::new();
                let scalar = |v: &Value| match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                for (k, v) in &self.inputs {
                    let _ = writeln!(out, "input\t{k}\t{}", scalar(v));
                }
                for (k, v) in &self.verdicts {
                    let _ = writeln!(out, "verdict\t{k}\t{v}");
                }
                for (k, v) in &self.vectors {
                    let joined: Vec<String> = v.iter().map(u32::to_string).collect();
                    let _ = writeln!(out, "vector\t{k}\t{}", joined.join(","));
                }
                for (k, v) in &self.counts {
                    let _ = writeln!(out, "count\t{k}\t{v}");
                }
                out
            }
        }
    }
}

enum Failure {
    Domain(Error, Option<String>),
    Usage(String),
    Verification(Box<Output>),
}

impl Failure {
    /// 1 for bad input or a domain error, 2 when a verification fails.
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Domain(..) | Failure::Usage(_) => 1,
            Failure::Verification(_) => 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e, None)
    }
}

/// Attaches the offending text to parse errors so they can be pointed at.
fn with_text<T>(text: &str, r: dihedral_homometry::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| match e {
        Error::Parse { .. } => Failure::Domain(e, Some(text.to_string())),
        other => Failure::Domain(other, None),
    })
}

struct Progress {
    quiet: bool,
}

impl Progress {
    fn note(&self, message: impl AsRef<str>) {
        if !self.quiet {
            eprintln!("{}", message.as_ref());
        }
    }
}

fn dn_modulus(group: Group, music: Music) -> Result<usize, Failure> {
    match (group.dn, music.music) {
        (Some(n), _) => Ok(n),
        (None, true) => Ok(12),
        (None, false) => Err(Failure::Usage("one of --zn or --dn is required".into())),
    }
}

fn music_modulus(n: usize, music: Music) -> Result<(), Failure> {
    if music.music && n != 12 {
        return Err(Failure::Usage(format!("--music needs D_12, got n = {n}")));
    }
    Ok(())
}

fn parse_dn(n: usize, text: &str, music: Music) -> Result<DihedralSet, Failure> {
    music_modulus(n, music)?;
    if music.music {
        with_text(text, parse_chord_set(text))
    } else {
        with_text(text, DihedralSet::parse(n, text))
    }
}

fn show_dn(s: &DihedralSet, music: Music) -> String {
    if music.music {
        render_chord_set(s).expect("checked modulus")
    } else {
        s.to_string()
    }
}

fn parse_zn(n: usize, text: &str) -> Result<ZnSet, Failure> {
    with_text(text, ZnSet::parse(n, text))
}

fn options(jobs: Jobs, include_single_sign: bool) -> EnumerationOptions {
    EnumerationOptions {
        jobs: jobs.jobs,
        include_single_sign,
    }
}

fn run(cli: &Cli, progress: &Progress) -> Result<Output, Failure> {
    match &cli.command {
        Command::Iv {
            group,
            music,
            side,
            set,
        } => iv_command(*group, *music, (*side).into(), set),
        Command::Ifunc {
            group,
            music,
            side,
            a,
            b,
        } => ifunc_command(*group, *music, (*side).into(), a, b),
        Command::Check {
            group,
            music,
            side,
            a,
            b,
        } => check_command(*group, *music, (*side).into(), a, b),
        Command::Dual { dn, music, a, b } => dual_command(*dn, *music, a, b),
        Command::Lift {
            zn,
            music,
            a1,
            a2,
            b1,
            b2,
            enumerate,
            side,
            include_single_sign,
        } => {
            music_modulus(*zn, *music)?;
            match (a1, a2, b1, b2, enumerate) {
                (Some(a1), Some(a2), Some(b1), Some(b2), None) => {
                    let d = Decomposition::new(
                        parse_zn(*zn, a1)?,
                        parse_zn(*zn, a2)?,
                        parse_zn(*zn, b1)?,
                        parse_zn(*zn, b2)?,
                    )?;
                    lift_construct_command(&d, *music)
                }
                (None, None, None, None, Some(pair)) => lift_enumerate_command(
                    parse_zn(*zn, &pair[0])?,
                    parse_zn(*zn, &pair[1])?,
                    (*side).into(),
                    *include_single_sign,
                    *music,
                ),
                _ => Err(Failure::Usage(
                    "lift needs either --a1 --a2 --b1 --b2 or --enumerate A B".into(),
                )),
            }
        }
        Command::Rosenblatt { big_n, a } => {
            let d = rosenblatt_decomposition(*big_n, *a)?;
            let mut out = lift_construct_command(&d, Music { music: false })?;
            out.command = "rosenblatt";
            out.input("rosenblatt_N", *big_n);
            out.input("rosenblatt_a", *a);
            Ok(out)
        }
        Command::Enumerate {
            n,
            card,
            side,
            simultaneous,
            convention,
            zn,
            include_single_sign,
            classes,
            jobs,
            music,
        } => {
            let opts = options(*jobs, *include_single_sign);
            progress.note(format!(
                "enumerating {}-subsets of {}_{n} ...",
                card,
                if *zn { "Z" } else { "D" }
            ));
            let start = Instant::now();
            let out = if *zn {
                census_output(&enumerate_zn(*n, *card, &opts)?, *classes, |s| s.to_string())
            } else {
                music_modulus(*n, *music)?;
                let report = if *simultaneous {
                    enumerate_simultaneous(*n, *card, &opts, (*convention).into())?
                } else {
                    enumerate_dn(*n, *card, (*side).into(), &opts)?
                };
                census_output(&report, *classes, |s| show_dn(s, *music))
            };
            progress.note(format!("done in {:.2?}", start.elapsed()));
            Ok(out)
        }
        Command::Table1 { jobs } => {
            let table = chord_class_listing(&options(*jobs, false))?;
            let mut out = Output::new("table1");
            for section in &table.sections {
                let key = format!("p{}_{}", section.p, section.side);
                for (&t, &c) in &section.tuples {
                    out.counts.insert(format!("{key}_t{t}"), c as u64);
                }
                out.records.push(serde_json::to_value(section).expect("serializable"));
            }
            out.text = table.to_string();
            Ok(out)
        }
        Command::Table2 {
            n,
            card,
            side,
            jobs,
        } => table2_command(*n, *card, *side, options(*jobs, false), progress),
        Command::Verify { suite, jobs } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse()?]
            };
            let mut out = Output::new("verify");
            out.input("suite", suite.as_str());
            let mut all_passed = true;
            for s in suites {
                progress.note(format!("running {s} ..."));
                let start = Instant::now();
                let report = run_suite(s, &options(*jobs, false))?;
                progress.note(format!("{s} done in {:.2?}", start.elapsed()));
                all_passed &= report.passed();
                out.verdicts.insert(s.to_string(), report.passed());
                out.records.push(serde_json::to_value(&report).expect("serializable"));
                out.text.push_str(&report.to_string());
            }
            if all_passed {
                Ok(out)
            } else {
                Err(Failure::Verification(Box::new(out)))
            }
        }
    }
}

fn iv_command(group: Group, music: Music, side: Side, set: &str) -> Result<Output, Failure> {
    let mut out = Output::new("iv");
    out.input("set", set);
    if let Some(n) = group.zn {
        let a = parse_zn(n, set)?;
        let v = zn::iv(&a);
        out.input("group", format!("Z_{n}"));
        out.vectors.insert("iv".into(), v.counts().to_vec());
        out.line(v.to_string());
    } else {
        let n = dn_modulus(group, music)?;
        let a = parse_dn(n, set, music)?;
        let v = side.interval_vector(&a);
        out.input("group", format!("D_{n}"));
        out.input("side", side.to_string());
        out.vectors.insert(format!("{side}_iv"), v.counts().to_vec());
        out.line(v.to_string());
    }
    Ok(out)
}

fn ifunc_command(group: Group, music: Music, side: Side, a: &str, b: &str) -> Result<Output, Failure> {
    let mut out = Output::new("ifunc");
    out.input("a", a);
    out.input("b", b);
    if let Some(n) = group.zn {
        let v = zn::ifunc(&parse_zn(n, a)?, &parse_zn(n, b)?)?;
        out.input("group", format!("Z_{n}"));
        out.vectors.insert("ifunc".into(), v.counts().to_vec());
        out.line(v.to_string());
    } else {
        let n = dn_modulus(group, music)?;
        let (sa, sb) = (parse_dn(n, a, music)?, parse_dn(n, b, music)?);
        let mut intervals = Vec::new();
        for x in sa.elements() {
            for y in sb.elements() {
                intervals.push(match side {
                    Side::Left => DihedralElement::left_int(&x, &y)?,
                    Side::Right => DihedralElement::right_int(&x, &y)?,
                });
            }
        }
        let v = DihedralIntervalVector::from_intervals(n, intervals.iter())?;
        out.input("group", format!("D_{n}"));
        out.input("side", side.to_string());
        out.vectors.insert(format!("{side}_ifunc"), v.counts().to_vec());
        out.line(v.to_string());
    }
    Ok(out)
}

fn check_command(group: Group, music: Music, side: Side, a: &str, b: &str) -> Result<Output, Failure> {
    let mut out = Output::new("check");
    out.input("a", a);
    out.input("b", b);
    if let Some(n) = group.zn {
        let (sa, sb) = (parse_zn(n, a)?, parse_zn(n, b)?);
        let homometric = zn::is_homometric(&sa, &sb)?;
        let witness = trivial_relation(&sa, &sb);
        out.input("group", format!("Z_{n}"));
        out.verdicts.insert("homometric".into(), homometric);
        out.verdicts.insert("trivial".into(), witness.is_some());
        out.vectors.insert("iv_a".into(), zn::iv(&sa).counts().to_vec());
        out.vectors.insert("iv_b".into(), zn::iv(&sb).counts().to_vec());
        let mut line = format!("homometric: {homometric}, trivial: {}", witness.is_some());
        if let Some(w) = witness {
            out.input("witness", w.to_string());
            let _ = write!(line, " ({w})");
        }
        out.line(line);
    } else {
        let n = dn_modulus(group, music)?;
        let (sa, sb) = (parse_dn(n, a, music)?, parse_dn(n, b, music)?);
        let v = verdict(&sa, &sb, side)?;
        let trivial = v.trivial_witness.is_some();
        out.input("group", format!("D_{n}"));
        out.input("side", side.to_string());
        out.verdicts.insert("homometric".into(), v.homometric);
        out.verdicts.insert("trivial".into(), trivial);
        out.verdicts.insert(
            format!("{}_homometric", side.other()),
            homometry::is_homometric(&sa, &sb, side.other())?,
        );
        out.vectors.insert(format!("{side}_iv_a"), side.interval_vector(&sa).counts().to_vec());
        out.vectors.insert(format!("{side}_iv_b"), side.interval_vector(&sb).counts().to_vec());
        let mut line = format!("homometric: {}, trivial: {trivial}", v.homometric);
        if let Some(g) = v.trivial_witness {
            // Right homometry is trivial under left translations (T/I on
            // triads), left homometry under right ones (PLR).
            let name = match (music.music, side) {
                (true, Side::Right) => ti_label(&g)?.to_string(),
                (true, Side::Left) => format!("{} ({g})", plr_word(&g)?),
                (false, _) => g.to_string(),
            };
            out.input("witness", name.clone());
            let _ = write!(line, " (witness {name})");
        }
        out.line(line);
    }
    Ok(out)
}

fn dual_command(n: usize, music: Music, a: &str, b: &str) -> Result<Output, Failure> {
    let (sa, sb) = (parse_dn(n, a, music)?, parse_dn(n, b, music)?);
    let (ia, ib) = duality_transport(&sa, &sb)?;
    let mut out = Output::new("dual");
    out.input("a", a);
    out.input("b", b);
    out.input("image_a", show_dn(&ia, music));
    out.input("image_b", show_dn(&ib, music));
    for side in [Side::Right, Side::Left] {
        out.verdicts.insert(
            format!("input_{side}_homometric"),
            homometry::is_nontrivially_homometric(&sa, &sb, side)?,
        );
        out.verdicts.insert(
            format!("image_{}_homometric", side.other()),
            homometry::is_nontrivially_homometric(&ia, &ib, side.other())?,
        );
    }
    out.line(show_dn(&ia, music));
    out.line(show_dn(&ib, music));
    Ok(out)
}

fn lift_record(l: &LiftResult, music: Music) -> Value {
    json!({
        "lifted_a": show_dn(&l.lifted_a, music),
        "lifted_b": show_dn(&l.lifted_b, music),
        "side": l.side,
        "nontrivial": l.nontrivial,
    })
}

fn lift_construct_command(d: &Decomposition, music: Music) -> Result<Output, Failure> {
    let lift = construct_lift(d)?;
    let mut out = Output::new("lift");
    out.input("a", d.a().to_string());
    out.input("b", d.b().to_string());
    out.verdicts.insert("right_homometric".into(), true);
    out.verdicts.insert("nontrivial".into(), lift.nontrivial);
    out.records.push(lift_record(&lift, music));
    out.line(format!("A = {{{}}}, B = {{{}}}", d.a(), d.b()));
    out.line(format!("lifted A: {}", show_dn(&lift.lifted_a, music)));
    out.line(format!("lifted B: {}", show_dn(&lift.lifted_b, music)));
    out.line(format!("right-homometric: true, trivial: {}", !lift.nontrivial));
    Ok(out)
}

fn lift_enumerate_command(
    a: ZnSet,
    b: ZnSet,
    side: Side,
    include_single_sign: bool,
    music: Music,
) -> Result<Output, Failure> {
    let lifts = enumerate_lifts_with(&a, &b, side, include_single_sign)?;
    let mut out = Output::new("lift");
    out.input("a", a.to_string());
    out.input("b", b.to_string());
    out.input("side", side.to_string());
    out.counts.insert("lifts".into(), lifts.len() as u64);
    out.line(format!("{} non-trivial {side} lifts", lifts.len()));
    for l in &lifts {
        out.records.push(lift_record(l, music));
        out.line(format!(
            "{} & {}",
            show_dn(&l.lifted_a, music),
            show_dn(&l.lifted_b, music)
        ));
    }
    Ok(out)
}

fn census_output<S>(
    report: &EnumerationReport<S>,
    list_classes: bool,
    show: impl Fn(&S) -> String,
) -> Output {
    let mut out = Output::new("enumerate");
    out.input("n", report.n);
    out.input("card", report.p);
    out.input("kind", report.side.to_string());
    out.counts.insert("subsets".into(), report.subsets);
    out.counts.insert("orbits".into(), report.orbits);
    for (&t, &c) in &report.tuples {
        out.counts.insert(format!("t{t}"), c as u64);
    }
    out.line(report.summary());
    for class in &report.classes {
        let sets: Vec<String> = class.representatives.iter().map(&show).collect();
        out.records.push(json!({
            "interval_vector": class.interval_vector,
            "representatives": sets,
        }));
        if list_classes {
            let braced: Vec<String> = sets.iter().map(|s| format!("{{{s}}}")).collect();
            out.line(format!("  {}", braced.join(" & ")));
        }
    }
    out
}

fn table2_command(
    n: Option<usize>,
    card: Option<usize>,
    column: Option<Column>,
    opts: EnumerationOptions,
    progress: &Progress,
) -> Result<Output, Failure> {
    let cells: Vec<(usize, usize)> = match (n, card) {
        (Some(n), Some(p)) => vec![(n, p)],
        _ => CENSUS_CELLS
            .iter()
            .copied()
            .filter(|&(cn, cp)| n.is_none_or(|n| n == cn) && card.is_none_or(|p| p == cp))
            .collect(),
    };
    if cells.is_empty() {
        return Err(Failure::Usage("no matching (n, p) cell".into()));
    }
    let mut out = Output::new("table2");
    let single = cells.len() == 1 && column.is_some();
    for (n, p) in cells {
        progress.note(format!("n={n} p={p} ..."));
        let start = Instant::now();
        let right = enumerate_dn(n, p, Side::Right, &opts)?;
        let left = enumerate_dn(n, p, Side::Left, &opts)?;
        let dual = duality_holds(&right, &left);
        let simultaneous = simultaneous_from_right(right.clone(), SimultaneousConvention::Existential);
        progress.note(format!("n={n} p={p} done in {:.2?}", start.elapsed()));
        let reports = [
            (Column::Right, &right),
            (Column::Left, &left),
            (Column::Simultaneous, &simultaneous),
        ];
        for (col, report) in reports {
            let name = format!("{col:?}").to_lowercase();
            for (&t, &c) in &report.tuples {
                out.counts.insert(format!("n{n}_p{p}_{name}_t{t}"), c as u64);
            }
        }
        out.verdicts.insert(format!("n{n}_p{p}_duality"), dual);
        out.records.push(json!({
            "n": n,
            "p": p,
            "right": right.tuples,
            "left": left.tuples,
            "simultaneous": simultaneous.tuples,
        }));
        match column {
            Some(col) => {
                let report = reports.iter().find(|(c, _)| *c == col).expect("column").1;
                if single {
                    out.line(report.summary());
                } else {
                    out.line(format!("n={n} p={p}: {}", report.summary()));
                }
            }
            None => out.line(format!(
                "n={n} p={p}: right {} | left {} | simultaneous {}",
                right.summary(),
                left.summary(),
                simultaneous.summary()
            )),
        }
    }
    Ok(out)
}

fn report_error(e: &Error, text: Option<&str>) {
    eprintln!("error: {e}");
    if let (Error::Parse { column, .. }, Some(text)) = (e, text) {
        eprintln!("  {text}");
        eprintln!("  {}^", " ".repeat(column.saturating_sub(1)));
    }
}

fn emit(cli: &Cli, out: &Output) -> Result<(), String> {
    let rendered = out.render(cli.format);
    match &cli.out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let progress = Progress { quiet: cli.quiet };
    match run(&cli, &progress) {
        Ok(out) => match emit(&cli, &out) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Err(failure) => {
            match &failure {
                Failure::Verification(out) => {
                    let _ = emit(&cli, out);
                    eprintln!("verification failed");
                }
                Failure::Domain(e, text) => report_error(e, text.as_deref()),
                Failure::Usage(message) => eprintln!("error: {message}"),
            }
            ExitCode::from(failure.exit_code())
        }
    }
}

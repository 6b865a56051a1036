//! Command-line front end: analysis, construction, enumeration and the
//! verification sweep. [`run`] is the whole program minus process I/O.

pub mod document;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use matroidlab::{
    forming_family, forming_family_wrt, is_intersection_minimal_capped, is_union_minimal_capped,
    is_unique_exchange, is_unique_expansion, make_partition_matroid, make_unique_partition_matroid,
    secondary_bases, Classification, Error, GroundSet, Matroid, Partition, PartitionMatroidSpec,
    SetFamily, Subset, DEFAULT_SEARCH_CAP,
};
use matroidlab_harness::{
    count_by_rank, enumerate_matroids, select_checks, theorem_registry, verify, HarnessError,
    VerificationReport,
};
use serde::Serialize;
use thiserror::Error;

pub use document::{Label, MatroidDocument};

pub const SEARCH_CAP_VAR: &str = "MATROIDLAB_SEARCH_CAP";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("invalid matroid: {0}")]
    Invalid(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Harness(#[from] HarnessError),
}

impl CliError {
    /// Axiom and constructor violations are invalid matroids; everything
    /// else is malformed input.
    pub fn from_core(e: Error, ground: &GroundSet) -> Self {
        if e.is_axiom_violation() {
            CliError::Invalid(e.render(ground))
        } else {
            CliError::Input(e.render(ground))
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "matroidlab",
    version,
    about = "Analyze, build and enumerate small matroids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rank, forming family and classifier verdicts for a matroid file.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// The dual matroid, as a document.
    Dual {
        file: PathBuf,
        /// Single-line output.
        #[arg(long)]
        json: bool,
    },
    /// Secondary bases, the forming family, and the forming family relative to each base.
    Forming {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Unique partition matroid: at most one element from each block.
    MakeUpm {
        #[arg(long, required = true)]
        ground: String,
        #[arg(long = "block")]
        blocks: Vec<String>,
    },
    /// Partition matroid with one cap per block, in block order.
    MakePm {
        #[arg(long, required = true)]
        ground: String,
        #[arg(long = "block")]
        blocks: Vec<String>,
        #[arg(long = "cap", allow_negative_numbers = true)]
        caps: Vec<i64>,
    },
    /// Every labelled matroid on n elements, one document per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        count_only: bool,
    },
    /// Run the check registry over every matroid on 1 to n elements.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long)]
        json: bool,
    },
}

/// What the process should print and return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Runs one invocation. `args` includes the program name; `search_cap` is
/// the raw value of the search cap variable, if set.
pub fn run<I, T>(args: I, search_cap: Option<&str>) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output::ok(text)
            };
        }
    };
    let result = parse_search_cap(search_cap).and_then(|cap| execute(cli.command, cap));
    match result {
        Ok(out) => out,
        Err(e) => Output {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn parse_search_cap(raw: Option<&str>) -> Result<usize, CliError> {
    match raw {
        None => Ok(DEFAULT_SEARCH_CAP),
        Some(s) => s.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{SEARCH_CAP_VAR} must be a non-negative integer, got {s:?}"
            ))
        }),
    }
}

fn load(file: &Path) -> Result<Matroid, CliError> {
    MatroidDocument::read(file)?.to_matroid()
}

fn execute(command: Command, cap: usize) -> Result<Output, CliError> {
    match command {
        Command::Analyze { file, json } => analyze(&load(&file)?, json, cap),
        Command::Dual { file, json } => {
            let dual = load(&file)?.dual();
            Ok(Output::ok(
                MatroidDocument::from_matroid(&dual).to_json(json) + "\n",
            ))
        }
        Command::Forming { file, json } => forming(&load(&file)?, json),
        Command::MakeUpm { ground, blocks } => {
            let ground = parse_ground(&ground)?;
            let m = parse_partition(&ground, &blocks)
                .and_then(|(p, _)| make_unique_partition_matroid(&ground, &p))
                .map_err(|e| CliError::from_core(e, &ground))?;
            Ok(Output::ok(
                MatroidDocument::from_matroid(&m).to_json(false) + "\n",
            ))
        }
        Command::MakePm {
            ground,
            blocks,
            caps,
        } => {
            let ground = parse_ground(&ground)?;
            let m = partition_matroid(&ground, &blocks, &caps)
                .map_err(|e| CliError::from_core(e, &ground))?;
            Ok(Output::ok(
                MatroidDocument::from_matroid(&m).to_json(false) + "\n",
            ))
        }
        Command::Enumerate {
            n,
            rank,
            count_only,
        } => enumerate(n, rank, count_only),
        Command::Verify { n, checks, json } => {
            let registry = if checks.is_empty() {
                theorem_registry()
            } else {
                select_checks(&checks)?
            };
            let mut population = Vec::new();
            for size in 1..=n {
                population.extend(enumerate_matroids(size, None)?);
            }
            if population.is_empty() {
                return Err(HarnessError::GroundSetTooLarge(n).into());
            }
            Ok(report_output(&verify(&population, &registry, cap), json))
        }
    }
}

/// Exit 3 when any check failed.
fn report_output(report: &VerificationReport, json: bool) -> Output {
    let stdout = if json {
        serde_json::to_string_pretty(report).expect("reports always serialize")
    } else {
        report.to_string()
    };
    Output {
        code: if report.all_passed() { 0 } else { 3 },
        stdout: stdout + "\n",
        stderr: String::new(),
    }
}

fn split(list: &str) -> Vec<&str> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect()
}

fn parse_ground(list: &str) -> Result<GroundSet, CliError> {
    GroundSet::new(split(list)).map_err(|e| CliError::Input(e.to_string()))
}

/// The partition and, for each block in canonical order, its position on
/// the command line.
fn parse_partition(
    ground: &GroundSet,
    blocks: &[String],
) -> Result<(Partition, Vec<usize>), Error> {
    let subsets = blocks
        .iter()
        .map(|b| ground.subset(split(b)))
        .collect::<Result<Vec<Subset>, _>>()?;
    if subsets.iter().any(|x| x.is_empty()) {
        return Err(Error::EmptyBlock);
    }
    for (i, a) in subsets.iter().enumerate() {
        if let Some(b) = subsets[i + 1..].iter().find(|b| !a.is_disjoint(**b)) {
            return Err(Error::OverlappingBlocks(*a, *b));
        }
    }
    let family = SetFamily::new(ground, subsets.iter().copied())?;
    let order = family
        .iter()
        .map(|b| {
            subsets
                .iter()
                .position(|x| x == b)
                .expect("block came from the list")
        })
        .collect();
    Ok((Partition::new(family)?, order))
}

fn partition_matroid(
    ground: &GroundSet,
    blocks: &[String],
    caps: &[i64],
) -> Result<Matroid, Error> {
    let (p, order) = parse_partition(ground, blocks)?;
    if caps.len() != p.len() {
        return Err(Error::CapCountMismatch {
            blocks: p.len(),
            caps: caps.len(),
        });
    }
    let aligned = p
        .blocks()
        .iter()
        .zip(&order)
        .map(|(block, &i)| {
            usize::try_from(caps[i]).map_err(|_| Error::CapOutOfRange {
                block: *block,
                cap: caps[i],
                size: block.len(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let spec = PartitionMatroidSpec::new(p, aligned)?;
    make_partition_matroid(ground, &spec)
}

#[derive(Serialize)]
struct Verdict {
    holds: bool,
    witness: Option<String>,
}

#[derive(Serialize)]
struct Analysis {
    ground_set: Vec<String>,
    bases: Vec<Vec<String>>,
    rank: usize,
    forming_family: Option<Vec<Vec<String>>>,
    unique_expansion: Option<Verdict>,
    unique_exchange: Verdict,
    union_minimal: Option<Verdict>,
    intersection_minimal: Option<Verdict>,
    notices: Vec<String>,
}

fn verdict(m: &Matroid, c: Classification) -> Verdict {
    Verdict {
        holds: c.holds,
        witness: c.witness.map(|w| w.render(m.ground())),
    }
}

/// A minimality verdict, or `None` with a notice when the base family is
/// too large to search.
fn minimality(
    m: &Matroid,
    name: &str,
    result: matroidlab::Result<Classification>,
    notices: &mut Vec<String>,
) -> Result<Option<Verdict>, CliError> {
    match result {
        Ok(c) => Ok(Some(verdict(m, c))),
        Err(Error::SearchCapExceeded { bases, cap }) => {
            notices.push(format!(
                "{name} skipped: {bases} bases exceed the search cap of {cap} (set {SEARCH_CAP_VAR} to raise it)"
            ));
            Ok(None)
        }
        Err(e) => Err(CliError::from_core(e, m.ground())),
    }
}

fn analyze(m: &Matroid, json: bool, cap: usize) -> Result<Output, CliError> {
    let g = m.ground();
    let mut notices = Vec::new();
    let (forming, expansion) = if m.rank() == 0 {
        notices.push("rank 0: forming family and unique expansion are undefined".to_string());
        (None, None)
    } else {
        let f = forming_family(m).map_err(|e| CliError::from_core(e, g))?;
        let c = is_unique_expansion(m).map_err(|e| CliError::from_core(e, g))?;
        (Some(f.family().label_lists()), Some(verdict(m, c)))
    };
    let union = minimality(
        m,
        "union minimality",
        is_union_minimal_capped(m, cap),
        &mut notices,
    )?;
    let inter = minimality(
        m,
        "intersection minimality",
        is_intersection_minimal_capped(m, cap),
        &mut notices,
    )?;
    let analysis = Analysis {
        ground_set: g.labels().to_vec(),
        bases: m.bases().label_lists(),
        rank: m.rank(),
        forming_family: forming,
        unique_expansion: expansion,
        unique_exchange: verdict(m, is_unique_exchange(m)),
        union_minimal: union,
        intersection_minimal: inter,
        notices,
    };
    if json {
        let text = serde_json::to_string_pretty(&analysis).expect("analysis always serializes");
        return Ok(Output::ok(text + "\n"));
    }
    let mut out = String::new();
    let line = |out: &mut String, key: &str, value: String| {
        writeln!(out, "{key}: {value}").expect("writing to a string")
    };
    let shown = |v: &Option<Verdict>| match v {
        None => "n/a".to_string(),
        Some(v) => show(v),
    };
    line(&mut out, "ground set", g.render(g.full()));
    line(&mut out, "bases", m.bases().to_string());
    line(&mut out, "rank", m.rank().to_string());
    match forming_family(m) {
        Ok(f) => line(&mut out, "F(M)", f.family().to_string()),
        Err(_) => line(&mut out, "F(M)", "n/a".into()),
    }
    line(
        &mut out,
        "unique expansion",
        shown(&analysis.unique_expansion),
    );
    line(&mut out, "unique exchange", show(&analysis.unique_exchange));
    line(&mut out, "union minimal", shown(&analysis.union_minimal));
    line(
        &mut out,
        "intersection minimal",
        shown(&analysis.intersection_minimal),
    );
    for notice in &analysis.notices {
        line(&mut out, "note", notice.clone());
    }
    Ok(Output::ok(out))
}

fn show(v: &Verdict) -> String {
    match &v.witness {
        _ if v.holds => "yes".to_string(),
        Some(w) => format!("no ({w})"),
        None => "no".to_string(),
    }
}

#[derive(Serialize)]
struct RelativeForming {
    base: Vec<String>,
    family: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct FormingReport {
    secondary_bases: Vec<Vec<String>>,
    forming_family: Vec<Vec<String>>,
    relative: Vec<RelativeForming>,
}

fn forming(m: &Matroid, json: bool) -> Result<Output, CliError> {
    let g = m.ground();
    if m.rank() == 0 {
        let notice = "rank 0: secondary bases and forming families are undefined";
        let text = if json {
            serde_json::json!({ "notice": notice }).to_string()
        } else {
            notice.to_string()
        };
        return Ok(Output::ok(text + "\n"));
    }
    let core = |e| CliError::from_core(e, g);
    let secondary = secondary_bases(m).map_err(core)?;
    let global = forming_family(m).map_err(core)?;
    let relative = m
        .bases()
        .iter()
        .map(|b| forming_family_wrt(m, *b).map(|f| (*b, f)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(core)?;
    if json {
        let report = FormingReport {
            secondary_bases: secondary.label_lists(),
            forming_family: global.family().label_lists(),
            relative: relative
                .iter()
                .map(|(b, f)| RelativeForming {
                    base: g.labels_of(*b),
                    family: f.family().label_lists(),
                })
                .collect(),
        };
        let text = serde_json::to_string_pretty(&report).expect("reports always serialize");
        return Ok(Output::ok(text + "\n"));
    }
    let mut out = String::new();
    writeln!(out, "s(M): {secondary}").expect("writing to a string");
    writeln!(out, "F(M): {}", global.family()).expect("writing to a string");
    for (b, f) in &relative {
        writeln!(out, "F(M; {}): {}", g.render(*b), f.family()).expect("writing to a string");
    }
    Ok(Output::ok(out))
}

fn enumerate(n: usize, rank: Option<usize>, count_only: bool) -> Result<Output, CliError> {
    let mut out = String::new();
    if count_only {
        let counts = count_by_rank(n)?;
        let shown: Vec<(usize, usize)> = counts
            .iter()
            .copied()
            .enumerate()
            .filter(|(r, _)| rank.is_none_or(|want| want == *r))
            .collect();
        for (r, c) in &shown {
            writeln!(out, "rank {r}: {c}").expect("writing to a string");
        }
        let total: usize = shown.iter().map(|(_, c)| c).sum();
        writeln!(out, "total: {total}").expect("writing to a string");
        return Ok(Output::ok(out));
    }
    for m in enumerate_matroids(n, rank)? {
        out.push_str(&MatroidDocument::from_matroid(&m).to_json(true));
        out.push('\n');
    }
    Ok(Output::ok(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use matroidlab_harness::TheoremCheck;

    #[test]
    fn failing_sweep_exits_three() {
        let broken = TheoremCheck {
            id: "broken",
            statement: "every matroid has rank zero",
            applies: |_| true,
            check: |s| match s.matroid.rank() {
                0 => Ok(()),
                r => Err(format!("rank {r}")),
            },
        };
        let population = enumerate_matroids(2, None).unwrap();
        let report = verify(&population, &[broken], DEFAULT_SEARCH_CAP);
        let out = report_output(&report, false);
        assert_eq!(out.code, 3);
        assert!(out.stdout.contains("result: 4 failures"));
        assert_eq!(report_output(&report, true).code, 3);
        let passing = verify(&population, &theorem_registry(), DEFAULT_SEARCH_CAP);
        assert_eq!(report_output(&passing, false).code, 0);
    }
}

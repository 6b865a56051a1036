//! Running the registry over a population and summarising the results.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::time::Instant;

use matroidlab::{are_isomorphic, Matroid};
use rayon::prelude::*;
use serde::Serialize;

use crate::registry::{Outcome, Subject, TheoremCheck};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeSummary {
    pub ground_size: usize,
    pub matroids: usize,
    pub isomorphism_classes: usize,
    /// `by_rank[r]` matroids of rank `r`.
    pub by_rank: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PopulationSummary {
    pub total: usize,
    pub by_ground_size: Vec<SizeSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub id: String,
    pub statement: String,
    pub applicable: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub population: PopulationSummary,
    pub checks: Vec<CheckTally>,
    pub duration_ms: u64,
}

impl VerificationReport {
    pub fn failures(&self) -> usize {
        self.checks.iter().map(|c| c.failed).sum()
    }

    pub fn all_passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn check(&self, id: &str) -> Option<&CheckTally> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// Runs every applicable check on every matroid. Checks are evaluated in
/// parallel across matroids; tallies and witness order depend only on the
/// population as a set.
pub fn verify(
    population: &[Matroid],
    registry: &[TheoremCheck],
    search_cap: usize,
) -> VerificationReport {
    let started = Instant::now();
    let mut population: Vec<&Matroid> = population.iter().collect();
    population.sort_by(|a, b| population_key(a).cmp(&population_key(b)));
    population.dedup();

    let outcomes: Vec<Vec<Outcome>> = population
        .par_iter()
        .map(|m| {
            let subject = Subject::new(m, search_cap);
            registry.iter().map(|c| c.run(&subject)).collect()
        })
        .collect();

    let checks = registry
        .iter()
        .enumerate()
        .map(|(i, check)| {
            let mut tally = CheckTally {
                id: check.id.to_string(),
                statement: check.statement.to_string(),
                applicable: 0,
                passed: 0,
                failed: 0,
                skipped: 0,
                witnesses: Vec::new(),
            };
            for (m, row) in population.iter().zip(&outcomes) {
                match &row[i] {
                    Outcome::Skipped => tally.skipped += 1,
                    Outcome::Passed => {
                        tally.applicable += 1;
                        tally.passed += 1;
                    }
                    Outcome::Failed(why) => {
                        tally.applicable += 1;
                        tally.failed += 1;
                        tally
                            .witnesses
                            .push(format!("E={:?} B={}: {why}", m.ground(), m.bases()));
                    }
                }
            }
            tally
        })
        .collect();

    VerificationReport {
        population: summarize(&population),
        checks,
        duration_ms: started.elapsed().as_millis() as u64,
    }
}

fn population_key(m: &Matroid) -> (usize, &Matroid) {
    (m.ground().len(), m)
}

fn summarize(population: &[&Matroid]) -> PopulationSummary {
    let mut groups: BTreeMap<usize, Vec<&Matroid>> = BTreeMap::new();
    for m in population {
        groups.entry(m.ground().len()).or_default().push(m);
    }
    let by_ground_size = groups
        .into_iter()
        .map(|(n, ms)| {
            let mut by_rank = vec![0; n + 1];
            for m in &ms {
                by_rank[m.rank()] += 1;
            }
            SizeSummary {
                ground_size: n,
                matroids: ms.len(),
                isomorphism_classes: count_isomorphism_classes(&ms),
                by_rank,
            }
        })
        .collect();
    PopulationSummary {
        total: population.len(),
        by_ground_size,
    }
}

/// Number of isomorphism classes among matroids on equally sized ground sets.
pub fn count_isomorphism_classes(ms: &[&Matroid]) -> usize {
    type Key = (usize, usize, Vec<usize>);
    let mut buckets: BTreeMap<Key, Vec<&Matroid>> = BTreeMap::new();
    for m in ms {
        let key = (m.rank(), m.bases().len(), m.degree_profile());
        let reps = buckets.entry(key).or_default();
        if !reps.iter().any(|r| are_isomorphic(r, m)) {
            reps.push(m);
        }
    }
    buckets.values().map(Vec::len).sum()
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let classes: usize = self
            .population
            .by_ground_size
            .iter()
            .map(|s| s.isomorphism_classes)
            .sum();
        writeln!(
            out,
            "population: {} matroids ({} up to isomorphism)",
            self.population.total, classes
        )?;
        for s in &self.population.by_ground_size {
            writeln!(
                out,
                "  |E|={}: {} matroids, {} isomorphism classes, by rank {:?}",
                s.ground_size, s.matroids, s.isomorphism_classes, s.by_rank
            )?;
        }
        writeln!(
            out,
            "{:<36} {:>10} {:>7} {:>7} {:>8}",
            "check", "applicable", "passed", "failed", "skipped"
        )?;
        for c in &self.checks {
            writeln!(
                out,
                "{:<36} {:>10} {:>7} {:>7} {:>8}",
                c.id, c.applicable, c.passed, c.failed, c.skipped
            )?;
            for w in &c.witnesses {
                writeln!(out, "    witness: {w}")?;
            }
        }
        if self.all_passed() {
            writeln!(out, "result: all {} checks passed", self.checks.len())?;
        } else {
            writeln!(out, "result: {} failures", self.failures())?;
        }
        write!(out, "duration: {} ms", self.duration_ms)?;
        f.write_str(&out)
    }
}

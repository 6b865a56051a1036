//! Exhaustive enumeration of labelled matroids on small ground sets.

use itertools::Itertools;
use matroidlab::{GroundSet, Matroid, SetFamily, Subset};
use rayon::prelude::*;

use crate::HarnessError;

/// Largest ground set the enumerator accepts.
pub const MAX_ENUMERATION_SIZE: usize = 6;

/// Every labelled matroid on `{1..n}`, ordered by rank and then by base
/// family in canonical order. `rank` restricts the output to one rank.
pub fn enumerate_matroids(n: usize, rank: Option<usize>) -> Result<Vec<Matroid>, HarnessError> {
    if n == 0 || n > MAX_ENUMERATION_SIZE {
        return Err(HarnessError::GroundSetTooLarge(n));
    }
    let ground = GroundSet::numbered(n)?;
    let ranks: Vec<usize> = match rank {
        Some(r) if r > n => Vec::new(),
        Some(r) => vec![r],
        None => (0..=n).collect(),
    };
    let per_rank: Vec<Vec<Matroid>> = ranks
        .par_iter()
        .map(|&r| {
            let mut families: Vec<SetFamily> = base_families(n, r)
                .into_iter()
                .map(|sets| SetFamily::new(&ground, sets))
                .collect::<Result<_, _>>()?;
            families.sort();
            families
                .into_iter()
                .map(|f| Matroid::from_bases(f).map_err(HarnessError::from))
                .collect()
        })
        .collect::<Result<_, HarnessError>>()?;
    Ok(per_rank.into_iter().flatten().collect())
}

/// Number of labelled matroids on `{1..n}`, per rank.
pub fn count_by_rank(n: usize) -> Result<Vec<usize>, HarnessError> {
    if n == 0 || n > MAX_ENUMERATION_SIZE {
        return Err(HarnessError::GroundSetTooLarge(n));
    }
    Ok((0..=n).map(|r| base_families(n, r).len()).collect())
}

/// All base families of rank `r` on `n` elements, as raw subset lists.
///
/// Candidate `r`-subsets are decided in canonical order, include first.
/// A branch is cut as soon as some included `B1, B2` and `x ∈ B1 − B2` have
/// every possible exchange `(B1 − {x}) ∪ {y}` already decided as excluded;
/// no later decision can repair that.
fn base_families(n: usize, r: usize) -> Vec<Vec<Subset>> {
    let candidates: Vec<Subset> = (0..n)
        .combinations(r)
        .map(Subset::from_indices)
        .sorted()
        .collect();
    let mut index = vec![usize::MAX; 1 << n];
    for (i, c) in candidates.iter().enumerate() {
        index[c.bits() as usize] = i;
    }
    let search = Search {
        candidates: &candidates,
        index: &index,
    };
    let mut out = Vec::new();
    search.descend(0, 0, &mut out);
    out.into_iter()
        .map(|mask| {
            candidates
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, c)| *c)
                .collect()
        })
        .collect()
}

struct Search<'a> {
    candidates: &'a [Subset],
    index: &'a [usize],
}

impl Search<'_> {
    fn descend(&self, decided: usize, included: u32, out: &mut Vec<u32>) {
        if decided == self.candidates.len() {
            if included != 0 {
                out.push(included);
            }
            return;
        }
        let with = included | (1 << decided);
        if !self.doomed(with, decided + 1) {
            self.descend(decided + 1, with, out);
        }
        if !self.doomed(included, decided + 1) {
            self.descend(decided + 1, included, out);
        }
    }

    fn doomed(&self, included: u32, decided: usize) -> bool {
        let members = || (0..self.candidates.len()).filter(move |i| included & (1 << i) != 0);
        for i in members() {
            let first = self.candidates[i];
            for j in members() {
                let second = self.candidates[j];
                for x in (first - second).iter() {
                    let rest = first.without(x);
                    let repairable = (second - first).iter().any(|y| {
                        let k = self.index[rest.with(y).bits() as usize];
                        k >= decided || included & (1 << k) != 0
                    });
                    if !repairable {
                        return true;
                    }
                }
            }
        }
        false
    }
}
